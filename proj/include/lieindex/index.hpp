#pragma once

// Index of a Lie algebra and of a representation as dim minus the generic
// rank of the Kirillov pencil, and checkers for the general index theorems.

#include <atomic>
#include <optional>
#include <string>

#include "lieindex/liecore.hpp"
#include "lieindex/random.hpp"
#include "lieindex/report.hpp"

namespace lieindex {

struct IndexResult {
  std::size_t dim = 0;
  std::size_t generic_rank = 0;
  std::size_t index = 0;
  RankMethod method = RankMethod::Randomized;
  std::string certificate;  // "", "full-rank", "invariant-gradients", "symbolic"
  std::size_t trials_used = 0;
  std::uint64_t seed = 0;
  Vec witness;  // dual vector attaining generic_rank

  Json to_json() const;
};

// Entry (i, j) is [b_i, b_j] as a linear form on L*.
MatrixPencil kirillov_pencil(const LieAlgebra& L);
// (dim q) x (dim V) pencil on V*: entry (i, j) is rho(b_i) v_j.
MatrixPencil rep_pencil(const Representation& rho);
// (dim q) x (dim V) pencil on V: entry (i, k) is the k-th coordinate of
// rho(b_i) v, so its rank at v is dim q.v.
MatrixPencil orbit_pencil(const Representation& rho);

// With cfg.certify the randomized value is confirmed: by full rank, by
// invariant-polynomial gradients when the Killing form is nondegenerate, or
// by symbolic elimination (CertifyBudgetExceeded when that is too large).
IndexResult index_of(const LieAlgebra& L, const RandomCfg& cfg);
IndexResult index_of_rep(const Representation& rho, const RandomCfg& cfg);

// Lower bound on the generic dimension of z(x): the rank of the vectors
// tr(ad(x0)^k ad(b_j)), k < dim. Stops once stop_at is reached.
std::size_t invariant_gradient_rank(const LieAlgebra& L, const Vec& x0, std::size_t stop_at);

// Stabilizer of xi in V* (kernel of the transposed evaluation).
Subspace stabilizer_at(const Representation& rho, const Vec& xi);
Subspace coadjoint_stabilizer(const LieAlgebra& L, const Vec& xi);

// Process-wide tally of parity checks (dim - ind even for algebras).
struct ParityStats {
  std::atomic<std::uint64_t> checked{0};
  std::atomic<std::uint64_t> violations{0};
};
ParityStats& parity_stats();

CheckReport check_rais(const Representation& rho, const RandomCfg& cfg);
// q an ideal of qt, both subspaces of L. Throws NotASubalgebra, NotAnIdeal.
CheckReport check_ideal_inequality(const LieAlgebra& L, const Subspace& qt, const Subspace& q, const RandomCfg& cfg);
CheckReport check_vinberg(const Representation& rho, const Vec& w, const RandomCfg& cfg);
// Samples cfg.trials random xi plus xi = 0 plus any extra points.
CheckReport check_stabilizer_index(const LieAlgebra& L, const RandomCfg& cfg, const std::vector<Vec>& extra = {});

// Searches 0/1 dual vectors of support <= 2 for xi whose stabilizer is
// abelian of the given dimension.
std::optional<Vec> abelian_stabilizer_witness(const LieAlgebra& L, std::size_t stabilizer_dim);

}  // namespace lieindex
