#pragma once

// Per-orbit analysis of a nilpotent element: grading, centraliser chain,
// structural checks, index identities and the orbit report.

#include <map>
#include <optional>
#include <string>

#include "lieindex/construct.hpp"
#include "lieindex/index.hpp"

namespace lieindex {

class GradedPieces {
 public:
  GradedPieces() = default;
  GradedPieces(std::size_t ambient, std::map<int, Subspace> pieces)
      : ambient_(ambient), pieces_(std::move(pieces)) {}

  const std::map<int, Subspace>& pieces() const { return pieces_; }
  // g(i); the zero subspace when i is not a degree.
  Subspace piece(int i) const;
  // s ∩ g(i).
  Subspace part(const Subspace& s, int i) const;
  // Degree -> dim for a graded subspace; throws CrossCheckFailed when s is
  // not the sum of its graded parts.
  std::map<int, std::size_t> dims(const Subspace& s) const;
  // Sum of g(i) over i in [lo, hi].
  Subspace range(int lo, int hi) const;
  int max_degree() const { return pieces_.empty() ? 0 : pieces_.rbegin()->first; }

 private:
  std::size_t ambient_ = 0;
  std::map<int, Subspace> pieces_;
};

// Throws NotIntegerDiagonalizable unless ad h is diagonalizable over Q with
// integer eigenvalues.
GradedPieces grading(const LieAlgebra& L, const Vec& h);

// Asserts that the top degree equals the nilpotency degree of ad e.
std::size_t height(const LieAlgebra& L, const SL2Triple& t, const GradedPieces& g);

struct CentralizerChain {
  Subspace z, d, n;  // z(e), d(e) = z(z(e)), n(e) = normalizer of z(e)
  Subspace zf, df;   // z(f), d(f)
};

// Throws CrossCheckFailed when the different constructions disagree.
CentralizerChain centralizer_chain(const LieAlgebra& L, const SL2Triple& t);

CheckReport check_prop21(const LieAlgebra& L, const SL2Triple& t, const GradedPieces& g, const CentralizerChain& c);
CheckReport check_thm23(const LieAlgebra& L, const SL2Triple& t, const GradedPieces& g, const CentralizerChain& c);
CheckReport check_thm24(const LieAlgebra& L, const CentralizerChain& c);
CheckReport check_prop26(const GradedPieces& g, const CentralizerChain& c);
CheckReport check_steinberg(const LieAlgebra& L, const CentralizerChain& c, std::size_t rank);
// q nonzero in g(-height).
CheckReport springer_checks(const LieAlgebra& L, const SL2Triple& t, const GradedPieces& g, const CentralizerChain& c,
                            std::size_t rank, const Vec& q);

enum class ElashviliBasis { Zero, Regular, Subregular, HeightTwo, TypeA, Conjecture };
const char* to_string(ElashviliBasis b);

CheckReport elashvili_check(const LieAlgebra& L, const CentralizerChain& c, std::size_t rank, std::size_t ht,
                            bool type_a, const RandomCfg& cfg);

// Graded basis e_1 = e, e_2, ... of d(e) ordered by degree, echelon order
// inside a degree.
struct HeartBasis {
  std::vector<Vec> basis;
  std::vector<int> degrees;  // eigenvalues of ad h
};
HeartBasis heart_basis(const SL2Triple& t, const GradedPieces& g, const CentralizerChain& c);

// expect_heart1: the orbit is one where the first condition is a theorem;
// otherwise the outcome is reported only.
CheckReport heart_conditions(const LieAlgebra& L, const SL2Triple& t, const HeartBasis& hb, bool expect_heart1);

CheckReport normaliser_index_checks(const LieAlgebra& L, const CentralizerChain& c, std::size_t rank,
                                    const RandomCfg& cfg);

// Principal triple with h the dominant element of the Cartan subalgebra.
SL2Triple principal_triple(const ChevalleyAlgebra& g);

CheckReport regular_suite(const ChevalleyAlgebra& g, const RandomCfg& cfg);
CheckReport d_matrix_checks(const ChevalleyAlgebra& g, const RandomCfg& cfg);

// Everything the pipeline needs to know about one nilpotent element.
struct OrbitInput {
  AlgebraPtr algebra;
  std::size_t rank = 0;
  std::string type_name;  // "D4"
  std::string label;      // "5,3" or "search:4"
  Vec e;
  const ClassicalAlgebra* classical = nullptr;
  std::optional<Partition> partition;
};

OrbitInput orbit_input(const ClassicalAlgebra& g, const Partition& p);
// Throws InvalidSpec when the search finds nothing.
OrbitInput orbit_input_search(const ChevalleyAlgebra& g, std::size_t target_dim_z, std::uint64_t seed);

struct OrbitReport {
  Json json;         // flat report with a "checks" object
  bool failed = false;
};

OrbitReport orbit_report(const OrbitInput& in, const RandomCfg& cfg);

}  // namespace lieindex
