#pragma once

// Lie algebras given by structure constants on a labelled basis. Elements
// are coordinate vectors (Vec) of length dim().

#include <cstdint>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "lieindex/exactla.hpp"

namespace lieindex {

using SparseVec = std::vector<std::pair<std::uint32_t, Rational>>;

class LieAlgebra {
 public:
  LieAlgebra() = default;

  // brackets lists [b_i, b_j] for some pairs; the table is completed by
  // antisymmetry. Listing both (i, j) and (j, i) with inconsistent values, or
  // a nonzero (i, i), produces a table that fails validate().
  static LieAlgebra from_brackets(std::vector<std::string> labels,
                                  const std::vector<std::tuple<std::size_t, std::size_t, SparseVec>>& brackets);
  // Raw table, no antisymmetrization: entry i * dim + j is [b_i, b_j].
  static LieAlgebra from_table(std::vector<std::string> labels, std::vector<SparseVec> table);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const SparseVec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vec bracket(const Vec& x, const Vec& y) const;
  // Matrix of y -> [x, y].
  QMatrix ad(const Vec& x) const;
  QMatrix ad_basis(std::size_t i) const;

  QMatrix killing() const;
  Rational killing_pair(const Vec& x, const Vec& y) const;

  // Antisymmetry and Jacobi on all basis triples.
  bool validate() const;
  bool is_abelian() const;

 private:
  void check(const Vec& x) const;
  std::vector<std::string> labels_;
  std::vector<SparseVec> table_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

struct Representation {
  AlgebraPtr algebra;
  std::size_t module_dim = 0;
  std::vector<QMatrix> action;  // one per basis vector of the acting algebra

  bool validate() const;
};

Representation adjoint_rep(AlgebraPtr algebra);
Representation trivial_rep(AlgebraPtr algebra, std::size_t module_dim);

Subspace centralizer(const LieAlgebra& L, const std::vector<Vec>& gens);
Subspace centralizer(const LieAlgebra& L, const Subspace& s);
Subspace normalizer(const LieAlgebra& L, const Subspace& s);
Subspace center(const LieAlgebra& L);
// Throws NotASubalgebra unless q is bracket-closed.
Subspace centre_of_subspace(const LieAlgebra& L, const Subspace& q);

bool is_subalgebra(const LieAlgebra& L, const Subspace& q);
bool is_abelian(const LieAlgebra& L, const Subspace& q);
// [a, b] as a subspace (span of brackets of basis vectors).
Subspace bracket_space(const LieAlgebra& L, const Subspace& a, const Subspace& b);
Subspace bracket_space(const LieAlgebra& L, const Vec& x, const Subspace& b);
// [q, v] subset of v.
bool is_invariant(const LieAlgebra& L, const Subspace& q, const Subspace& v);

struct InducedAlgebra {
  LieAlgebra algebra;
  Subspace subspace;   // the image in the ambient algebra
  QMatrix embedding;   // row a = ambient coordinates of new basis vector a
};

InducedAlgebra induced_subalgebra(const LieAlgebra& L, const Subspace& q);
// Action of q (in its echelon basis) on v (in its echelon basis).
Representation induced_rep(const LieAlgebra& L, const Subspace& q, const Subspace& v);
// Same, with the acting algebra already built for q.
Representation induced_rep(const LieAlgebra& L, const InducedAlgebra& q, const Subspace& v);

// Basis: module vectors v0.. first, then the algebra's basis.
LieAlgebra semidirect(const LieAlgebra& q, const Representation& rho);

// {x : form(x, s) = 0}, form given by its Gram matrix.
Subspace orthogonal_complement(const LieAlgebra& L, const Subspace& s, const QMatrix& gram);

std::string to_json(const LieAlgebra& L);
LieAlgebra algebra_from_json(const std::string& text);

}  // namespace lieindex
