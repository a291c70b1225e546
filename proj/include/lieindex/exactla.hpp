#pragma once

// Exact linear algebra over the rationals: dense matrices, echelon-form
// subspaces, and matrix pencils whose entries are linear forms.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieindex/rational.hpp"
#include "lieindex/random.hpp"

namespace lieindex {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static QMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  QMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew_symmetric() const;
  Rational trace() const;

  QMatrix operator*(const QMatrix& rhs) const;
  Vec operator*(const Vec& v) const;
  QMatrix operator+(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;
  QMatrix& operator*=(const Rational& s);
  bool operator==(const QMatrix& rhs) const = default;

  // Vertical concatenation; column counts must agree.
  static QMatrix stack(const std::vector<QMatrix>& blocks, std::size_t cols);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Row-reduced exact basis of a subspace of Q^n. Rows are in reduced row
// echelon form: each row has a leading 1 in its pivot column and zeros in
// every other pivot column, so coordinates of a member vector can be read
// off its pivot entries.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace row_space(const QMatrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const Vec& basis(std::size_t i) const { return rows_[i]; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  QMatrix basis_matrix() const { return QMatrix::from_rows(rows_, ambient_); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates with respect to basis(); throws SolveFailed if v is not a member.
  Vec coordinates(const Vec& v) const;
  Vec from_coordinates(const Vec& c) const;
  // v minus its component along the pivot directions; zero iff v is a member.
  Vec reduce(const Vec& v) const;
  // Linear map Q^n -> Q^(n - dim) reading the non-pivot entries of reduce(v);
  // its kernel is exactly this subspace.
  QMatrix quotient_projection() const;
  std::vector<std::size_t> non_pivots() const;

  bool operator==(const Subspace& rhs) const {
    return ambient_ == rhs.ambient_ && pivots_ == rhs.pivots_ && rows_ == rhs.rows_;
  }

 private:
  friend Subspace make_subspace_from_rref(std::size_t, std::vector<Vec>, std::vector<std::size_t>);
  std::size_t ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

struct Echelon {
  std::vector<Vec> rows;             // nonzero rows, leading entry 1
  std::vector<std::size_t> pivots;   // strictly increasing
};

// Fraction-free Gauss-Jordan over the integers (rows are cleared of
// denominators and kept primitive); the result is normalized back to Q.
Echelon rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);
Subspace kernel(const QMatrix& m);
std::optional<Vec> solve(const QMatrix& a, const Vec& b);
Rational determinant(const QMatrix& m);
// Throws SolveFailed when m is singular.
QMatrix inverse(const QMatrix& m);

Subspace subspace_sum(const Subspace& s, const Subspace& t);
Subspace subspace_intersect(const Subspace& s, const Subspace& t);
bool contains(const Subspace& s, const Vec& v);
bool is_direct(const Subspace& s, const Subspace& t);
// Image of s under the linear map m (m acts on column vectors).
Subspace image(const QMatrix& m, const Subspace& s);
Subspace image(const QMatrix& m);

// Sparse linear form sum_k c_k * xi_k, sorted by variable index.
using LinearForm = std::vector<std::pair<std::uint32_t, Rational>>;

class MatrixPencil {
 public:
  MatrixPencil() = default;
  MatrixPencil(std::size_t rows, std::size_t cols, std::size_t num_vars)
      : rows_(rows), cols_(cols), vars_(num_vars), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t num_vars() const { return vars_; }

  const LinearForm& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  // Entry from a dense coefficient vector of length num_vars.
  void set(std::size_t i, std::size_t j, const Vec& coefficients);
  void set(std::size_t i, std::size_t j, LinearForm form);
  Vec dense(std::size_t i, std::size_t j) const;
  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t vars_ = 0;
  std::vector<LinearForm> entries_;
};

QMatrix evaluate(const MatrixPencil& p, const Vec& xi);

enum class RankMethod { Randomized, Certified };

struct GenericRankResult {
  std::size_t rank = 0;
  RankMethod method = RankMethod::Randomized;
  std::size_t trials_used = 0;
  Vec witness;  // an evaluation point attaining `rank`
};

// Maximum rank over cfg.trials random integer evaluations with coordinates
// uniform in [-coeff_bound, coeff_bound]. The result is always a lower bound
// on the generic rank; by Schwartz-Zippel a single trial misses it with
// probability at most min(rows, cols) / (2 * coeff_bound + 1). With
// cfg.certify the randomized value is confirmed by symbolic elimination.
GenericRankResult generic_rank_detail(const MatrixPencil& p, const RandomCfg& cfg);
std::size_t generic_rank(const MatrixPencil& p, const RandomCfg& cfg);

// Rank over Q(xi_1, ..., xi_k), by fraction-free elimination on polynomial
// entries. Throws CertifyBudgetExceeded when an entry outgrows term_budget.
std::size_t symbolic_rank(const MatrixPencil& p, std::size_t term_budget);

std::string to_string(const QMatrix& m);

}  // namespace lieindex
