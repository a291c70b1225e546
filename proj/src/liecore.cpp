#include "lieindex/liecore.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "lieindex/error.hpp"

namespace lieindex {

namespace {

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return s;
}

void add_scaled(Vec& acc, const Rational& a, const SparseVec& s) {
  for (const auto& [k, c] : s) acc[k] += a * c;
}

Rational coeff_of(const SparseVec& s, std::uint32_t k) {
  auto it = std::lower_bound(s.begin(), s.end(), k, [](const auto& t, std::uint32_t key) { return t.first < key; });
  if (it != s.end() && it->first == k) return it->second;
  return 0;
}

SparseVec canonical(SparseVec s) {
  std::map<std::uint32_t, Rational> acc;
  for (auto& [k, c] : s) acc[k] += c;
  SparseVec out;
  for (auto& [k, c] : acc)
    if (sgn(c) != 0) out.emplace_back(k, c);
  return out;
}

}  // namespace

LieAlgebra LieAlgebra::from_table(std::vector<std::string> labels, std::vector<SparseVec> table) {
  const std::size_t n = labels.size();
  if (table.size() != n * n) throw Error(ErrorKind::DimensionMismatch, "structure table has wrong size");
  for (auto& s : table) {
    for (const auto& t : s)
      if (t.first >= n) throw Error(ErrorKind::DimensionMismatch, "structure constant index out of range");
    s = canonical(std::move(s));
  }
  LieAlgebra L;
  L.labels_ = std::move(labels);
  L.table_ = std::move(table);
  return L;
}

LieAlgebra LieAlgebra::from_brackets(std::vector<std::string> labels,
                                     const std::vector<std::tuple<std::size_t, std::size_t, SparseVec>>& brackets) {
  const std::size_t n = labels.size();
  std::vector<SparseVec> table(n * n);
  std::vector<bool> given(n * n, false);
  for (const auto& [i, j, v] : brackets) {
    if (i >= n || j >= n) throw Error(ErrorKind::DimensionMismatch, "bracket index out of range");
    table[i * n + j] = v;
    given[i * n + j] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (given[i * n + j] || !given[j * n + i]) continue;
      SparseVec neg = table[j * n + i];
      for (auto& t : neg) t.second = -t.second;
      table[i * n + j] = std::move(neg);
    }
  }
  return from_table(std::move(labels), std::move(table));
}

void LieAlgebra::check(const Vec& x) const {
  if (x.size() != dim())
    throw Error(ErrorKind::DimensionMismatch,
                "element has " + std::to_string(x.size()) + " coordinates, algebra has dimension " + std::to_string(dim()));
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  check(x);
  check(y);
  const std::size_t n = dim();
  Vec r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      const auto& s = table_[i * n + j];
      if (s.empty()) continue;
      add_scaled(r, x[i] * y[j], s);
    }
  }
  return r;
}

QMatrix LieAlgebra::ad(const Vec& x) const {
  check(x);
  const std::size_t n = dim();
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : table_[i * n + j]) m(k, j) += x[i] * c;
  }
  return m;
}

QMatrix LieAlgebra::ad_basis(std::size_t i) const { return ad(unit_vec(dim(), i)); }

QMatrix LieAlgebra::killing() const {
  const std::size_t n = dim();
  QMatrix g(n, n);
  // tr(ad b_i ad b_j) = sum_l sum_k A_i[k][l] A_j[l][k]
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational t = 0;
      for (std::size_t l = 0; l < n; ++l)
        for (const auto& [k, c] : table_[i * n + l]) {
          const auto& col = table_[j * n + k];
          if (col.empty()) continue;
          Rational a = coeff_of(col, static_cast<std::uint32_t>(l));
          if (sgn(a) != 0) t += c * a;
        }
      g(i, j) = t;
      g(j, i) = t;
    }
  }
  return g;
}

Rational LieAlgebra::killing_pair(const Vec& x, const Vec& y) const {
  check(x);
  check(y);
  return (ad(x) * ad(y)).trace();
}

bool LieAlgebra::validate() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (!table_[i * n + i].empty()) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& a = table_[i * n + j];
      const auto& b = table_[j * n + i];
      if (a.size() != b.size()) return false;
      for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t].first != b[t].first || a[t].second != -b[t].second) return false;
    }
  }
  Vec acc(n);
  auto cyc = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& [m, x] : table_[b * n + c]) add_scaled(acc, x, table_[a * n + m]);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        cyc(i, j, k);
        cyc(j, k, i);
        cyc(k, i, j);
        for (auto& x : acc) {
          if (sgn(x) != 0) return false;
        }
      }
  return true;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), [](const SparseVec& s) { return s.empty(); });
}

bool Representation::validate() const {
  if (!algebra || action.size() != algebra->dim()) return false;
  for (const auto& m : action)
    if (m.rows() != module_dim || m.cols() != module_dim) return false;
  const std::size_t n = algebra->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      QMatrix lhs(module_dim, module_dim);
      for (const auto& [k, c] : algebra->bracket_basis(i, j)) {
        QMatrix t = action[k];
        t *= c;
        lhs = lhs + t;
      }
      if (!(lhs == action[i] * action[j] - action[j] * action[i])) return false;
    }
  return true;
}

Representation adjoint_rep(AlgebraPtr algebra) {
  Representation r;
  r.module_dim = algebra->dim();
  for (std::size_t i = 0; i < algebra->dim(); ++i) r.action.push_back(algebra->ad_basis(i));
  r.algebra = std::move(algebra);
  return r;
}

Representation trivial_rep(AlgebraPtr algebra, std::size_t module_dim) {
  Representation r;
  r.module_dim = module_dim;
  r.action.assign(algebra->dim(), QMatrix(module_dim, module_dim));
  r.algebra = std::move(algebra);
  return r;
}

Subspace centralizer(const LieAlgebra& L, const std::vector<Vec>& gens) {
  std::vector<QMatrix> blocks;
  for (const auto& g : gens) blocks.push_back(L.ad(g));
  if (blocks.empty()) return Subspace::full(L.dim());
  return kernel(QMatrix::stack(blocks, L.dim()));
}

Subspace centralizer(const LieAlgebra& L, const Subspace& s) {
  if (s.ambient_dim() != L.dim()) throw Error(ErrorKind::AmbientMismatch, "subspace is not in this algebra");
  return centralizer(L, s.basis());
}

Subspace normalizer(const LieAlgebra& L, const Subspace& s) {
  if (s.ambient_dim() != L.dim()) throw Error(ErrorKind::AmbientMismatch, "subspace is not in this algebra");
  if (s.dim() == L.dim() || s.is_zero()) return Subspace::full(L.dim());
  const QMatrix q = s.quotient_projection();
  std::vector<QMatrix> blocks;
  // [x, v] = -ad(v) x must reduce to zero modulo s.
  for (const auto& v : s.basis()) blocks.push_back(q * L.ad(v));
  return kernel(QMatrix::stack(blocks, L.dim()));
}

Subspace center(const LieAlgebra& L) { return centralizer(L, Subspace::full(L.dim())); }

bool is_subalgebra(const LieAlgebra& L, const Subspace& q) {
  const auto& b = q.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!q.contains(L.bracket(b[i], b[j]))) return false;
  return true;
}

bool is_abelian(const LieAlgebra& L, const Subspace& q) {
  const auto& b = q.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!is_zero(L.bracket(b[i], b[j]))) return false;
  return true;
}

Subspace centre_of_subspace(const LieAlgebra& L, const Subspace& q) {
  if (!is_subalgebra(L, q)) throw Error(ErrorKind::NotASubalgebra, "centre requested for a subspace that is not bracket-closed");
  return subspace_intersect(centralizer(L, q), q);
}

Subspace bracket_space(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  std::vector<Vec> vs;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) vs.push_back(L.bracket(x, y));
  return Subspace::span(L.dim(), vs);
}

Subspace bracket_space(const LieAlgebra& L, const Vec& x, const Subspace& b) {
  std::vector<Vec> vs;
  for (const auto& y : b.basis()) vs.push_back(L.bracket(x, y));
  return Subspace::span(L.dim(), vs);
}

bool is_invariant(const LieAlgebra& L, const Subspace& q, const Subspace& v) {
  for (const auto& x : q.basis())
    for (const auto& y : v.basis())
      if (!v.contains(L.bracket(x, y))) return false;
  return true;
}

InducedAlgebra induced_subalgebra(const LieAlgebra& L, const Subspace& q) {
  if (q.ambient_dim() != L.dim()) throw Error(ErrorKind::AmbientMismatch, "subspace is not in this algebra");
  const auto& b = q.basis();
  const std::size_t m = b.size();
  std::vector<std::string> labels;
  for (auto p : q.pivots()) labels.push_back(L.label(p));
  std::vector<SparseVec> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec br = L.bracket(b[i], b[j]);
      if (!q.contains(br)) throw Error(ErrorKind::NotASubalgebra, "subspace is not closed under the bracket");
      SparseVec s = to_sparse(q.coordinates(br));
      SparseVec neg = s;
      for (auto& t : neg) t.second = -t.second;
      table[i * m + j] = std::move(s);
      table[j * m + i] = std::move(neg);
    }
  InducedAlgebra out;
  out.algebra = LieAlgebra::from_table(std::move(labels), std::move(table));
  out.subspace = q;
  out.embedding = q.basis_matrix();
  return out;
}

Representation induced_rep(const LieAlgebra& L, const InducedAlgebra& q, const Subspace& v) {
  if (v.ambient_dim() != L.dim()) throw Error(ErrorKind::AmbientMismatch, "module subspace is not in this algebra");
  Representation r;
  r.algebra = std::make_shared<const LieAlgebra>(q.algebra);
  r.module_dim = v.dim();
  for (const auto& x : q.subspace.basis()) {
    std::vector<Vec> cols;
    for (const auto& y : v.basis()) {
      Vec br = L.bracket(x, y);
      if (!v.contains(br)) throw Error(ErrorKind::NotInvariant, "module subspace is not invariant under the acting subalgebra");
      cols.push_back(v.coordinates(br));
    }
    r.action.push_back(QMatrix::from_columns(cols, v.dim()));
  }
  return r;
}

Representation induced_rep(const LieAlgebra& L, const Subspace& q, const Subspace& v) {
  return induced_rep(L, induced_subalgebra(L, q), v);
}

LieAlgebra semidirect(const LieAlgebra& q, const Representation& rho) {
  if (rho.action.size() != q.dim()) throw Error(ErrorKind::DimensionMismatch, "representation does not act for this algebra");
  const std::size_t v = rho.module_dim;
  const std::size_t n = v + q.dim();
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < v; ++a) labels.push_back("v" + std::to_string(a));
  for (const auto& l : q.labels()) labels.push_back(l);
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < q.dim(); ++i) {
    for (std::size_t b = 0; b < v; ++b) {
      SparseVec s;
      for (std::size_t a = 0; a < v; ++a) {
        const Rational& c = rho.action[i](a, b);
        if (sgn(c) != 0) s.emplace_back(static_cast<std::uint32_t>(a), c);
      }
      SparseVec neg = s;
      for (auto& t : neg) t.second = -t.second;
      table[(v + i) * n + b] = std::move(s);
      table[b * n + v + i] = std::move(neg);
    }
    for (std::size_t j = 0; j < q.dim(); ++j) {
      SparseVec s = q.bracket_basis(i, j);
      for (auto& t : s) t.first += static_cast<std::uint32_t>(v);
      table[(v + i) * n + v + j] = std::move(s);
    }
  }
  return LieAlgebra::from_table(std::move(labels), std::move(table));
}

Subspace orthogonal_complement(const LieAlgebra& L, const Subspace& s, const QMatrix& gram) {
  if (s.ambient_dim() != L.dim() || gram.rows() != L.dim() || gram.cols() != L.dim())
    throw Error(ErrorKind::AmbientMismatch, "orthogonal complement: dimension mismatch");
  if (s.is_zero()) return Subspace::full(L.dim());
  return kernel(s.basis_matrix() * gram);
}

std::string to_json(const LieAlgebra& L) {
  nlohmann::json j;
  j["dim"] = L.dim();
  j["labels"] = L.labels();
  nlohmann::json br = nlohmann::json::array();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t k = i + 1; k < L.dim(); ++k) {
      const auto& s = L.bracket_basis(i, k);
      if (s.empty()) continue;
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [m, c] : s) terms.push_back({m, to_string(c)});
      br.push_back({i, k, terms});
    }
  j["brackets"] = br;
  return j.dump();
}

LieAlgebra algebra_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("algebra JSON: ") + ex.what());
  }
  try {
    const std::size_t n = j.at("dim").get<std::size_t>();
    auto labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != n) throw Error(ErrorKind::Parse, "algebra JSON: label count differs from dim");
    std::vector<std::tuple<std::size_t, std::size_t, SparseVec>> brackets;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : j.at("brackets")) {
      if (!e.is_array() || e.size() != 3) throw Error(ErrorKind::Parse, "algebra JSON: bracket entry must be [i, j, terms]");
      const auto i = e[0].get<std::size_t>();
      const auto k = e[1].get<std::size_t>();
      if (i >= n || k >= n || i == k) throw Error(ErrorKind::Parse, "algebra JSON: bracket index out of range");
      if (!seen.insert({std::min(i, k), std::max(i, k)}).second)
        throw Error(ErrorKind::Parse, "algebra JSON: duplicate bracket entry");
      SparseVec s;
      for (const auto& t : e[2]) {
        if (!t.is_array() || t.size() != 2) throw Error(ErrorKind::Parse, "algebra JSON: term must be [k, \"p/q\"]");
        const auto m = t[0].get<std::size_t>();
        if (m >= n) throw Error(ErrorKind::Parse, "algebra JSON: term index out of range");
        s.emplace_back(static_cast<std::uint32_t>(m), parse_rational(t[1].get<std::string>()));
      }
      brackets.emplace_back(i, k, std::move(s));
    }
    return LieAlgebra::from_brackets(std::move(labels), brackets);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("algebra JSON: ") + ex.what());
  }
}

}  // namespace lieindex
