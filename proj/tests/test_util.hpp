#pragma once

#include <string>
#include <vector>

#include "lieindex/exactla.hpp"
#include "lieindex/liecore.hpp"

namespace testutil {

using namespace lieindex;

inline Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline QMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

// Structure constants of the span of the given matrices under the
// commutator, computed by flattening and solving.
inline LieAlgebra matrix_algebra(const std::vector<QMatrix>& basis, std::vector<std::string> labels) {
  const std::size_t n = basis.front().rows();
  std::vector<Vec> flat;
  for (const auto& b : basis) {
    Vec v;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(b(i, j));
    flat.push_back(v);
  }
  QMatrix cols = QMatrix::from_columns(flat, n * n);
  std::vector<SparseVec> table(basis.size() * basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      QMatrix c = basis[a] * basis[b] - basis[b] * basis[a];
      Vec v;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v.push_back(c(i, j));
      auto x = solve(cols, v);
      if (!x) throw std::runtime_error("basis not closed");
      SparseVec s;
      for (std::size_t k = 0; k < x->size(); ++k)
        if ((*x)[k] != 0) s.emplace_back(static_cast<std::uint32_t>(k), (*x)[k]);
      table[a * basis.size() + b] = s;
    }
  return LieAlgebra::from_table(std::move(labels), std::move(table));
}

// sl_2 with basis (e, h, f).
inline LieAlgebra sl2() {
  QMatrix h(2, 2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  return matrix_algebra({unit(2, 0, 1), h, unit(2, 1, 0)}, {"e", "h", "f"});
}

// sl_n with basis E_ij (i != j) followed by E_ii - E_{i+1,i+1}.
inline LieAlgebra sln(std::size_t n) {
  std::vector<QMatrix> b;
  std::vector<std::string> l;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        b.push_back(unit(n, i, j));
        l.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    QMatrix h(n, n);
    h(i, i) = 1;
    h(i + 1, i + 1) = -1;
    b.push_back(h);
    l.push_back("H" + std::to_string(i + 1));
  }
  return matrix_algebra(b, l);
}

inline LieAlgebra heisenberg() {
  return LieAlgebra::from_brackets({"x", "y", "z"}, {{0, 1, {{2, Rational(1)}}}});
}

}  // namespace testutil
