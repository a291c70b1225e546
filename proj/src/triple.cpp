#include <algorithm>

#include "lieindex/construct.hpp"
#include "lieindex/error.hpp"
#include "lieindex/random.hpp"

namespace lieindex {

bool is_ad_nilpotent(const LieAlgebra& L, const Vec& x) {
  QMatrix m = L.ad(x);
  for (std::size_t p = 1; p < L.dim(); p *= 2) {
    if (m.is_zero()) return true;
    m = m * m;
  }
  return m.is_zero();
}

bool is_sl2_triple(const LieAlgebra& L, const SL2Triple& t) {
  return L.bracket(t.e, t.f) == t.h && L.bracket(t.h, t.e) == Rational(2) * t.e &&
         L.bracket(t.h, t.f) == Rational(-2) * t.f;
}

SL2Triple sl2_complete(const LieAlgebra& L, const Vec& e) {
  if (e.size() != L.dim()) throw Error(ErrorKind::DimensionMismatch, "element has wrong length");
  if (is_zero(e)) throw Error(ErrorKind::InvalidSpec, "the zero element lies in no sl2-triple");
  if (!is_ad_nilpotent(L, e)) throw Error(ErrorKind::NotNilpotent, "ad e is not nilpotent");
  const QMatrix ade = L.ad(e);
  // h = [e, y] with (ad e)^2 y = -2e, so that [h, e] = 2e.
  auto y = solve(ade * ade, Rational(-2) * e);
  if (!y) throw Error(ErrorKind::CompletionFailed, "no h in [e, g] with [h, e] = 2e");
  SL2Triple t;
  t.e = e;
  t.h = L.bracket(e, *y);
  auto z = solve(ade, t.h);
  if (!z) throw Error(ErrorKind::CompletionFailed, "h is not in the image of ad e");
  // f = z - u with u in z(e), (ad h + 2) u = [h, z] + 2z.
  const Subspace ze = kernel(ade);
  Vec rhs = L.bracket(t.h, *z);
  axpy(rhs, 2, *z);
  std::vector<Vec> cols;
  for (const auto& b : ze.basis()) {
    Vec c = L.bracket(t.h, b);
    axpy(c, 2, b);
    cols.push_back(std::move(c));
  }
  Vec u(L.dim());
  if (!ze.is_zero()) {
    auto c = solve(QMatrix::from_columns(cols, L.dim()), rhs);
    if (!c) throw Error(ErrorKind::CompletionFailed, "correction term not found in z(e)");
    u = ze.from_coordinates(*c);
  }
  t.f = *z - u;
  if (!is_sl2_triple(L, t)) throw Error(ErrorKind::CompletionFailed, "completed triple fails the bracket relations");
  return t;
}

std::optional<Vec> nilpotent_search(const LieAlgebra& L, const std::vector<Vec>& gens, std::size_t algebra_rank,
                                    std::size_t target_dim_z, std::size_t budget, std::uint64_t seed) {
  if (target_dim_z < algebra_rank || target_dim_z > L.dim()) return std::nullopt;
  std::size_t tried = 0;
  auto hit = [&](const Vec& e) {
    ++tried;
    if (is_zero(e) || !is_ad_nilpotent(L, e)) return false;
    return L.dim() - rank(L.ad(e)) == target_dim_z;
  };
  const std::size_t k = gens.size();
  for (std::size_t s = 1; s <= k && tried < budget; ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (tried < budget) {
      for (std::size_t signs = 0; signs < (std::size_t{1} << (s - 1)) && tried < budget; ++signs) {
        Vec e(L.dim());
        for (std::size_t i = 0; i < s; ++i) {
          const bool neg = i > 0 && (signs & (std::size_t{1} << (i - 1)));
          axpy(e, neg ? -1 : 1, gens[idx[i]]);
        }
        if (hit(e)) return e;
      }
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == k - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  SeededRng rng(seed);
  while (tried < budget) {
    Vec e(L.dim());
    for (const auto& g : gens) axpy(e, Rational(rng.uniform(-3, 3)), g);
    if (hit(e)) return e;
  }
  return std::nullopt;
}

std::optional<Vec> nilpotent_search(const ChevalleyAlgebra& g, std::size_t target_dim_z, std::size_t budget,
                                    std::uint64_t seed) {
  return nilpotent_search(*g.algebra, g.positive_root_vectors(), g.datum.rank(), target_dim_z, budget, seed);
}

}  // namespace lieindex
