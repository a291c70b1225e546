#pragma once

// Constructors: classical matrix algebras, nilpotents from partitions,
// sl2-triples, Chevalley bases, parabolics, weighted Dynkin labels.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieindex/liecore.hpp"

namespace lieindex {

using Partition = std::vector<int>;

Partition parse_partition(const std::string& text);  // "5,3"
std::string to_string(const Partition& p);           // "5,3"

struct ClassicalType {
  char family = 'A';  // A, B, C or D
  std::size_t rank = 1;

  // Matrix size of the defining representation.
  std::size_t n() const;
  std::string name() const;  // "D4"
  // Throws RankOutOfBounds (A >= 1, B/C >= 2, D >= 3) or InvalidSpec.
  void validate() const;
  static ClassicalType parse(const std::string& text);
};

// Matrix realization {X : X^T J + J X = 0} (traceless matrices for A) with
// J antidiagonal symmetric (B, D) or antidiagonal symplectic with +1 in the
// upper half (C). The basis is the reduced echelon basis of that space in
// row-major matrix coordinates; each basis matrix has a 1 at its pivot
// entry and coordinates of a member matrix are read at the pivots.
struct ClassicalAlgebra {
  ClassicalType type;
  AlgebraPtr algebra;
  std::vector<QMatrix> basis;
  QMatrix form;  // J; identity for type A
  Subspace flat;  // the algebra inside Q^(n*n)

  QMatrix to_matrix(const Vec& x) const;
  // Throws NotInvariant when the matrix is not in the algebra.
  Vec from_matrix(const QMatrix& m) const;
  // Basis of the strictly upper triangular part (a maximal nilpotent
  // subalgebra spanned by positive root vectors).
  std::vector<Vec> upper_nilpotent_basis() const;
  // Elements with diagonal matrices.
  Subspace diagonal() const;
};

ClassicalAlgebra classical(ClassicalType t);

bool is_admissible(ClassicalType t, const Partition& p);
bool is_very_even(ClassicalType t, const Partition& p);
// Descending lexicographic order.
std::vector<Partition> admissible_partitions(ClassicalType t);

// Nilpotent element with the given Jordan type. The matrix is strictly
// upper triangular in the realization above.
Vec nilpotent_from_partition(const ClassicalAlgebra& g, const Partition& p);
// Jordan type of a nilpotent matrix from the ranks of its powers.
Partition jordan_type(const QMatrix& nilpotent);

struct SL2Triple {
  Vec e, h, f;
};

// Throws NotNilpotent when ad e is not nilpotent, InvalidSpec for e = 0.
SL2Triple sl2_complete(const LieAlgebra& L, const Vec& e);
bool is_sl2_triple(const LieAlgebra& L, const SL2Triple& t);

using CartanMatrix = std::vector<std::vector<int>>;

CartanMatrix cartan_matrix(char family, std::size_t rank);  // A-G; G2 with alpha_1 short

struct RootDatum {
  std::string label;
  CartanMatrix cartan;
  std::vector<Rational> half_norms;  // (alpha_i, alpha_i) / 2
  // Positive roots in the simple-root basis, sorted by height then
  // lexicographically; the first rank entries are the simple roots.
  std::vector<std::vector<int>> positive;

  std::size_t rank() const { return cartan.size(); }
  Rational inner(const std::vector<int>& a, const std::vector<int>& b) const;
  // <beta, alpha_i^vee>
  int pairing(const std::vector<int>& beta, std::size_t i) const;
};

// Throws InvalidCartanMatrix unless the matrix is a finite-type Cartan matrix.
RootDatum root_datum(const CartanMatrix& cartan, std::string label);

// Basis: e_alpha for positive alpha (datum order), h_1..h_r (simple
// coroots), then e_-alpha in the same order. Integral Chevalley constants
// with extraspecial signs, then e_-alpha rescaled so Killing(e_alpha,
// e_-alpha) = 1.
struct ChevalleyAlgebra {
  RootDatum datum;
  AlgebraPtr algebra;
  std::map<std::vector<int>, std::size_t> root_index;  // root (either sign) -> basis index

  std::size_t positive_count() const { return datum.positive.size(); }
  std::size_t cartan_index(std::size_t i) const { return positive_count() + i; }
  std::vector<Vec> positive_root_vectors() const;
  Subspace cartan() const;
  const std::vector<int>& highest_root() const { return datum.positive.back(); }
};

ChevalleyAlgebra chevalley(const RootDatum& d);
ChevalleyAlgebra chevalley(const std::string& type);  // "G2"

Vec regular_nilpotent(const ChevalleyAlgebra& g);
std::pair<Vec, Vec> extreme_root_vectors(const ChevalleyAlgebra& g);

struct Parabolic {
  Subspace p, pu, l;
};

// Block composition of n; palindromic for B, C, D.
Parabolic parabolic(const ClassicalAlgebra& g, const std::vector<int>& composition);
// Levi generated by the simple roots listed (0-based).
Parabolic parabolic(const ChevalleyAlgebra& g, const std::vector<std::size_t>& levi_simple_roots);
std::vector<std::vector<int>> palindromic_compositions(std::size_t n);
std::vector<std::vector<int>> compositions(std::size_t n);

std::vector<int> weighted_dynkin(ClassicalType t, const Partition& p);

// Searches 0/+1/-1 combinations of the given nilpotent generators by
// increasing support, then seeded random small-integer combinations, for a
// nilpotent e with dim z(e) = target_dim_z. At most budget candidates.
std::optional<Vec> nilpotent_search(const LieAlgebra& L, const std::vector<Vec>& positive_root_vectors,
                                    std::size_t rank, std::size_t target_dim_z, std::size_t budget,
                                    std::uint64_t seed);
std::optional<Vec> nilpotent_search(const ChevalleyAlgebra& g, std::size_t target_dim_z, std::size_t budget,
                                    std::uint64_t seed);

bool is_ad_nilpotent(const LieAlgebra& L, const Vec& x);

}  // namespace lieindex
