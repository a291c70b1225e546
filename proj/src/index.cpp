#include "lieindex/index.hpp"

#include <algorithm>

#include "lieindex/error.hpp"

namespace lieindex {

namespace {

constexpr std::size_t kSymbolicBudget = 200000;
constexpr int kGradientPoints = 5;
constexpr std::int64_t kGradientBound = 10;

const char* method_name(RankMethod m) { return m == RankMethod::Certified ? "certified" : "randomized"; }

RandomCfg uncertified(const RandomCfg& cfg) {
  RandomCfg c = cfg;
  c.certify = false;
  return c;
}

void record_parity(const IndexResult& r) {
  auto& s = parity_stats();
  ++s.checked;
  if ((r.dim - r.index) % 2 != 0) ++s.violations;
}

IndexResult from_rank(std::size_t dim, const GenericRankResult& g, const RandomCfg& cfg) {
  IndexResult r;
  r.dim = dim;
  r.generic_rank = g.rank;
  r.index = dim - g.rank;
  r.trials_used = g.trials_used;
  r.seed = cfg.seed;
  r.witness = g.witness;
  return r;
}

void confirm_symbolic(IndexResult& r, const MatrixPencil& p) {
  const std::size_t exact = symbolic_rank(p, kSymbolicBudget);
  if (exact != r.generic_rank)
    throw Error(ErrorKind::CrossCheckFailed, "randomized generic rank " + std::to_string(r.generic_rank) +
                                                 " disagrees with symbolic rank " + std::to_string(exact));
  r.method = RankMethod::Certified;
  r.certificate = "symbolic";
}

}  // namespace

ParityStats& parity_stats() {
  static ParityStats stats;
  return stats;
}

Json IndexResult::to_json() const {
  return Json{{"dim", dim},
              {"generic_rank", generic_rank},
              {"index", index},
              {"method", method_name(method)},
              {"certificate", certificate},
              {"trials", trials_used}};
}

MatrixPencil kirillov_pencil(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  MatrixPencil p(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec& b = L.bracket_basis(i, j);
      if (!b.empty()) p.set(i, j, LinearForm(b.begin(), b.end()));
    }
  return p;
}

MatrixPencil rep_pencil(const Representation& rho) {
  const std::size_t q = rho.action.size(), v = rho.module_dim;
  MatrixPencil p(q, v, v);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < v; ++j) {
      LinearForm f;
      for (std::size_t k = 0; k < v; ++k)
        if (rho.action[i](k, j) != 0) f.emplace_back(static_cast<std::uint32_t>(k), rho.action[i](k, j));
      if (!f.empty()) p.set(i, j, std::move(f));
    }
  return p;
}

MatrixPencil orbit_pencil(const Representation& rho) {
  const std::size_t q = rho.action.size(), v = rho.module_dim;
  MatrixPencil p(q, v, v);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t k = 0; k < v; ++k) {
      LinearForm f;
      for (std::size_t j = 0; j < v; ++j)
        if (rho.action[i](k, j) != 0) f.emplace_back(static_cast<std::uint32_t>(j), rho.action[i](k, j));
      if (!f.empty()) p.set(i, k, std::move(f));
    }
  return p;
}

std::size_t invariant_gradient_rank(const LieAlgebra& L, const Vec& x0, std::size_t stop_at) {
  const std::size_t n = L.dim();
  const QMatrix a = L.ad(x0);
  QMatrix power = QMatrix::identity(n);
  std::vector<Vec> grads;
  std::size_t r = 0;
  for (std::size_t k = 0; k < n && r < stop_at; ++k) {
    if (k > 0) power = power * a;
    // tr(A^k ad(b_j)) = sum over [b_j, b_c] = sum_b t_b b_b of (A^k)(c, b) t_b
    Vec w(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < n; ++c)
        for (const auto& [b, t] : L.bracket_basis(j, c)) w[j] += power(c, b) * t;
    if (is_zero(w)) continue;
    grads.push_back(std::move(w));
    r = rank(QMatrix::from_rows(grads, n));
  }
  return r;
}

IndexResult index_of(const LieAlgebra& L, const RandomCfg& cfg) {
  cfg.validate();
  const std::size_t n = L.dim();
  const MatrixPencil p = kirillov_pencil(L);
  IndexResult r = from_rank(n, generic_rank_detail(p, uncertified(cfg)), cfg);
  if (cfg.certify) {
    if (r.generic_rank == n) {
      r.method = RankMethod::Certified;
      r.certificate = "full-rank";
    } else if (determinant(L.killing()) != 0) {
      SeededRng rng(derive_seed(cfg.seed, "invariant-gradients"));
      for (int t = 0; t < kGradientPoints && r.method != RankMethod::Certified; ++t) {
        Vec x0(n);
        for (auto& c : x0) c = Rational(rng.uniform(-kGradientBound, kGradientBound));
        const std::size_t lower = invariant_gradient_rank(L, x0, r.index);
        if (lower > r.index)
          throw Error(ErrorKind::CrossCheckFailed, "invariant gradients exceed the randomized index");
        if (lower == r.index) {
          r.method = RankMethod::Certified;
          r.certificate = "invariant-gradients";
        }
      }
    }
    if (r.method != RankMethod::Certified) confirm_symbolic(r, p);
  }
  if ((n - r.index) % 2 != 0) throw Error(ErrorKind::CrossCheckFailed, "dim - ind is odd");
  record_parity(r);
  return r;
}

IndexResult index_of_rep(const Representation& rho, const RandomCfg& cfg) {
  cfg.validate();
  const MatrixPencil p = rep_pencil(rho);
  IndexResult r = from_rank(rho.module_dim, generic_rank_detail(p, uncertified(cfg)), cfg);
  if (cfg.certify) {
    if (r.generic_rank == std::min(p.rows(), p.cols())) {
      r.method = RankMethod::Certified;
      r.certificate = "full-rank";
    } else {
      confirm_symbolic(r, p);
    }
  }
  return r;
}

Subspace stabilizer_at(const Representation& rho, const Vec& xi) {
  if (xi.size() != rho.module_dim) throw Error(ErrorKind::DimensionMismatch, "dual vector has wrong length");
  return kernel(evaluate(rep_pencil(rho), xi).transpose());
}

Subspace coadjoint_stabilizer(const LieAlgebra& L, const Vec& xi) {
  if (xi.size() != L.dim()) throw Error(ErrorKind::DimensionMismatch, "dual vector has wrong length");
  return kernel(evaluate(kirillov_pencil(L), xi).transpose());
}

CheckReport check_rais(const Representation& rho, const RandomCfg& cfg) {
  CheckReport rep("rais");
  const LieAlgebra& q = *rho.algebra;
  const IndexResult on_v = index_of_rep(rho, cfg);
  // The witness attains the generic rank, so its stabilizer has the
  // minimal dimension dim q - generic rank.
  const Vec& xi = on_v.witness;
  const Subspace stab = stabilizer_at(rho, xi);
  if (stab.dim() != q.dim() - on_v.generic_rank)
    throw Error(ErrorKind::RegularElementNotFound, "no sampled xi attains the generic stabilizer dimension");
  const InducedAlgebra qxi = induced_subalgebra(q, stab);
  const IndexResult ind_stab = index_of(qxi.algebra, cfg.with_seed(derive_seed(cfg.seed, "stabilizer")));
  const IndexResult ind_semi = index_of(semidirect(q, rho), cfg.with_seed(derive_seed(cfg.seed, "semidirect")));
  rep.values["dim_q"] = q.dim();
  rep.values["dim_v"] = rho.module_dim;
  rep.values["ind_rep"] = on_v.index;
  rep.values["dim_stabilizer"] = stab.dim();
  rep.values["ind_stabilizer"] = ind_stab.index;
  rep.values["ind_semidirect"] = ind_semi.index;
  rep.expect(ind_semi.index == on_v.index + ind_stab.index, "ind(V x q) != ind(q, V) + ind q_xi");
  return rep;
}

CheckReport check_ideal_inequality(const LieAlgebra& L, const Subspace& qt, const Subspace& q, const RandomCfg& cfg) {
  CheckReport rep("ideal_inequality");
  if (!is_subalgebra(L, qt)) throw Error(ErrorKind::NotASubalgebra, "outer space is not a subalgebra");
  if (!qt.contains(q) || !is_invariant(L, qt, q)) throw Error(ErrorKind::NotAnIdeal, "inner space is not an ideal");
  const InducedAlgebra big = induced_subalgebra(L, qt);
  const InducedAlgebra small = induced_subalgebra(L, q);
  const std::size_t ind_big = index_of(big.algebra, cfg.with_seed(derive_seed(cfg.seed, "outer"))).index;
  const std::size_t ind_small = index_of(small.algebra, cfg.with_seed(derive_seed(cfg.seed, "inner"))).index;
  const std::size_t ind_pair =
      index_of_rep(induced_rep(L, big, q), cfg.with_seed(derive_seed(cfg.seed, "pair"))).index;
  const long lhs = static_cast<long>(ind_small + ind_big);
  const long rhs = static_cast<long>(qt.dim() - q.dim() + 2 * ind_pair);
  rep.values["ind_outer"] = ind_big;
  rep.values["ind_inner"] = ind_small;
  rep.values["ind_pair"] = ind_pair;
  rep.values["codim"] = qt.dim() - q.dim();
  rep.values["slack"] = rhs - lhs;
  rep.expect(lhs <= rhs, "ind q + ind qt > dim(qt/q) + 2 ind(qt, q)");
  return rep;
}

CheckReport check_vinberg(const Representation& rho, const Vec& w, const RandomCfg& cfg) {
  CheckReport rep("vinberg");
  if (w.size() != rho.module_dim) throw Error(ErrorKind::DimensionMismatch, "module vector has wrong length");
  const std::size_t nq = rho.action.size(), nv = rho.module_dim;
  const MatrixPencil orbits = orbit_pencil(rho);
  const QMatrix at_w = evaluate(orbits, w);  // row i = b_i . w
  const Subspace qw = kernel(at_w.transpose());
  const Subspace tangent = Subspace::row_space(at_w);
  const std::size_t max_orbit = generic_rank(orbits, cfg.with_seed(derive_seed(cfg.seed, "orbit")));

  const QMatrix proj = tangent.quotient_projection();
  const auto np = tangent.non_pivots();
  QMatrix section(nv, np.size());
  for (std::size_t k = 0; k < np.size(); ++k) section(np[k], k) = 1;
  Representation quotient;
  quotient.algebra = nullptr;
  quotient.module_dim = np.size();
  for (const auto& s : qw.basis()) {
    QMatrix act(nv, nv);
    for (std::size_t i = 0; i < nq; ++i)
      if (s[i] != 0) {
        QMatrix term = rho.action[i];
        term *= s[i];
        act = act + term;
      }
    quotient.action.push_back(proj * act * section);
  }
  const std::size_t max_quot =
      quotient.action.empty() || quotient.module_dim == 0
          ? 0
          : generic_rank(orbit_pencil(quotient), cfg.with_seed(derive_seed(cfg.seed, "quotient")));
  rep.values["max_orbit"] = max_orbit;
  rep.values["dim_orbit_w"] = tangent.dim();
  rep.values["dim_stabilizer_w"] = qw.dim();
  rep.values["max_quotient_orbit"] = max_quot;
  rep.values["slack"] = static_cast<long>(max_orbit) - static_cast<long>(max_quot + tangent.dim());
  rep.expect(max_orbit >= max_quot + tangent.dim(), "max dim q.v < max dim q_w.eta + dim q.w");
  return rep;
}

CheckReport check_stabilizer_index(const LieAlgebra& L, const RandomCfg& cfg, const std::vector<Vec>& extra) {
  CheckReport rep("stabilizer_index");
  const std::size_t n = L.dim();
  const IndexResult ind = index_of(L, cfg);
  std::vector<Vec> points{zero_vec(n)};
  SeededRng rng(derive_seed(cfg.seed, "stabilizer-points"));
  const auto bound = static_cast<std::int64_t>(cfg.coeff_bound);
  for (std::uint32_t t = 0; t < cfg.trials; ++t) {
    Vec xi(n);
    for (auto& c : xi) c = Rational(rng.uniform(-bound, bound));
    points.push_back(std::move(xi));
  }
  points.insert(points.end(), extra.begin(), extra.end());
  Json samples = Json::array();
  std::size_t k = 0;
  for (const auto& xi : points) {
    const Subspace stab = coadjoint_stabilizer(L, xi);
    const InducedAlgebra s = induced_subalgebra(L, stab);
    const IndexResult is = index_of(s.algebra, cfg.with_seed(derive_seed(cfg.seed, "point" + std::to_string(k++))));
    const bool regular = stab.dim() == ind.index;
    const bool abelian = s.algebra.is_abelian();
    samples.push_back(Json{{"dim", stab.dim()}, {"ind", is.index}, {"regular", regular}, {"abelian", abelian}});
    rep.expect(is.index >= ind.index, "ind q_xi < ind q");
    if (regular) rep.expect(abelian, "stabilizer of a regular xi is not abelian");
  }
  rep.values["ind"] = ind.index;
  rep.values["samples"] = samples;
  return rep;
}

std::optional<Vec> abelian_stabilizer_witness(const LieAlgebra& L, std::size_t stabilizer_dim) {
  const std::size_t n = L.dim();
  auto ok = [&](const Vec& xi) {
    const Subspace stab = coadjoint_stabilizer(L, xi);
    return stab.dim() == stabilizer_dim && is_abelian(L, stab);
  };
  for (std::size_t i = 0; i < n; ++i) {
    Vec xi = unit_vec(n, i);
    if (ok(xi)) return xi;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec xi = unit_vec(n, i);
      xi[j] = 1;
      if (ok(xi)) return xi;
    }
  return std::nullopt;
}

}  // namespace lieindex
