#include "lieindex/exactla.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lieindex/error.hpp"

namespace lieindex {

// ---------------------------------------------------------------------------
// QMatrix

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  QMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec QMatrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec QMatrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool QMatrix::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

Rational QMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  QMatrix r(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (sgn(b) != 0) r(i, j) += a * b;
      }
    }
  }
  return r;
}

Vec QMatrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (sgn((*this)(i, k)) != 0 && sgn(v[k]) != 0) r[i] += (*this)(i, k) * v[k];
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  QMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += rhs.data_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
  QMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= rhs.data_[i];
  return r;
}

QMatrix& QMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

QMatrix QMatrix::stack(const std::vector<QMatrix>& blocks, std::size_t cols) {
  std::size_t total = 0;
  for (const auto& b : blocks) {
    if (b.cols_ != cols) throw Error(ErrorKind::DimensionMismatch, "stack column mismatch");
    total += b.rows_;
  }
  QMatrix r(total, cols);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    std::copy(b.data_.begin(), b.data_.end(), r.data_.begin() + static_cast<std::ptrdiff_t>(at * cols));
    at += b.rows_;
  }
  return r;
}

std::string to_string(const QMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
    os << (i + 1 == m.rows() ? "]" : "\n");
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace {

using IRow = std::vector<Integer>;

void make_primitive(IRow& r, std::size_t from) {
  Integer g = 0;
  for (std::size_t j = from; j < r.size(); ++j) {
    if (sgn(r[j]) != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[j].get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g > 1) {
    for (std::size_t j = from; j < r.size(); ++j)
      if (sgn(r[j]) != 0) mpz_divexact(r[j].get_mpz_t(), r[j].get_mpz_t(), g.get_mpz_t());
  }
}

// Clears denominators of one matrix row; returns the scale factor applied.
Integer integer_row(const QMatrix& m, std::size_t i, IRow& out) {
  const std::size_t n = m.cols();
  Integer l = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& x = m(i, j);
    if (sgn(x) != 0 && x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  }
  out.assign(n, Integer(0));
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& x = m(i, j);
    if (sgn(x) == 0) continue;
    if (x.get_den() == 1) {
      out[j] = x.get_num() * l;
    } else {
      Integer q;
      mpz_divexact(q.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
      out[j] = x.get_num() * q;
    }
  }
  return l;
}

std::vector<IRow> integer_rows(const QMatrix& m) {
  std::vector<IRow> rows;
  rows.reserve(m.rows());
  IRow r;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    integer_row(m, i, r);
    bool nonzero = std::any_of(r.begin(), r.end(), [](const Integer& x) { return sgn(x) != 0; });
    if (!nonzero) continue;
    make_primitive(r, 0);
    rows.push_back(std::move(r));
  }
  return rows;
}

// target = target * (p/g) - pivot * (a/g); pivot is zero left of column c.
void eliminate(IRow& target, const IRow& pivot, std::size_t c) {
  Integer p = pivot[c];
  Integer a = target[c];
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
  mpz_divexact(p.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
  if (p != 1) {
    for (auto& x : target)
      if (sgn(x) != 0) x *= p;
  }
  for (std::size_t j = c; j < target.size(); ++j) {
    if (sgn(pivot[j]) != 0) mpz_submul(target[j].get_mpz_t(), a.get_mpz_t(), pivot[j].get_mpz_t());
  }
  make_primitive(target, 0);
}

// Gauss-Jordan (reduce_all) or forward elimination; returns pivot columns and
// leaves the pivot rows in rows[0..rank).
std::vector<std::size_t> integer_echelon(std::vector<IRow>& rows, std::size_t cols, bool reduce_all) {
  std::vector<std::size_t> pivots;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < rows.size(); ++c) {
    std::size_t best = rows.size();
    std::size_t best_size = 0;
    for (std::size_t r = k; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      std::size_t sz = mpz_sizeinbase(rows[r][c].get_mpz_t(), 2);
      if (best == rows.size() || sz < best_size) {
        best = r;
        best_size = sz;
        if (sz == 1) break;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[k], rows[best]);
    const std::size_t start = reduce_all ? 0 : k + 1;
    for (std::size_t r = start; r < rows.size(); ++r) {
      if (r == k || sgn(rows[r][c]) == 0) continue;
      eliminate(rows[r], rows[k], c);
    }
    pivots.push_back(c);
    ++k;
  }
  rows.resize(k);
  return pivots;
}

}  // namespace

Echelon rref(const QMatrix& m) {
  std::vector<IRow> rows = integer_rows(m);
  Echelon out;
  out.pivots = integer_echelon(rows, m.cols(), true);
  out.rows.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Integer& p = rows[i][out.pivots[i]];
    Vec v(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(rows[i][j]) == 0) continue;
      v[j] = Rational(rows[i][j], p);
      v[j].canonicalize();
    }
    out.rows.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::vector<IRow> rows = integer_rows(m);
  return integer_echelon(rows, m.cols(), false).size();
}

Subspace make_subspace_from_rref(std::size_t ambient, std::vector<Vec> rows, std::vector<std::size_t> pivots) {
  Subspace s(ambient);
  s.rows_ = std::move(rows);
  s.pivots_ = std::move(pivots);
  return s;
}

Subspace kernel(const QMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Subspace::full(n);
  Echelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      if (sgn(e.rows[i][f]) != 0) v[e.pivots[i]] = -e.rows[i][f];
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

std::optional<Vec> solve(const QMatrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "solve: rhs length differs from row count");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = rref(aug);
  Vec x(a.cols());
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][a.cols()];
  }
  return x;
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<IRow> rows(n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) scale *= integer_row(m, i, rows[i]);
  // Bareiss
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(rows[piv][k]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(rows[piv], rows[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j];
        mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][k] = 0;
    }
    prev = rows[k][k];
  }
  Rational d(prev * sign, scale);
  d.canonicalize();
  return d;
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(aug);
  if (e.rows.size() < n || e.pivots[n - 1] != n - 1) throw Error(ErrorKind::SolveFailed, "matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rows[i][n + j];
  return inv;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::full(std::size_t n) {
  std::vector<Vec> rows;
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(unit_vec(n, i));
    piv.push_back(i);
  }
  return make_subspace_from_rref(n, std::move(rows), std::move(piv));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return Subspace(ambient_dim);
  Echelon e = rref(QMatrix::from_rows(vectors, ambient_dim));
  return make_subspace_from_rref(ambient_dim, std::move(e.rows), std::move(e.pivots));
}

Subspace Subspace::row_space(const QMatrix& m) {
  Echelon e = rref(m);
  return make_subspace_from_rref(m.cols(), std::move(e.rows), std::move(e.pivots));
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::AmbientMismatch, "vector length differs from ambient dimension");
  Vec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational c = r[pivots_[i]];
    if (sgn(c) != 0) axpy(r, -c, rows_[i]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return lieindex::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::AmbientMismatch, "subspace ambient mismatch");
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw Error(ErrorKind::SolveFailed, "vector is not in the subspace");
  Vec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vec Subspace::from_coordinates(const Vec& c) const {
  if (c.size() != rows_.size()) throw Error(ErrorKind::DimensionMismatch, "coordinate length differs from subspace dimension");
  Vec v(ambient_);
  for (std::size_t i = 0; i < rows_.size(); ++i) axpy(v, c[i], rows_[i]);
  return v;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (p < pivots_.size() && pivots_[p] == j) {
      ++p;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

QMatrix Subspace::quotient_projection() const {
  const auto free = non_pivots();
  QMatrix q(free.size(), ambient_);
  for (std::size_t a = 0; a < free.size(); ++a) {
    const std::size_t j = free[a];
    q(a, j) = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (sgn(rows_[i][j]) != 0) q(a, pivots_[i]) -= rows_[i][j];
    }
  }
  return q;
}

Subspace subspace_sum(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "sum of subspaces of different ambient spaces");
  std::vector<Vec> all = s.basis();
  all.insert(all.end(), t.basis().begin(), t.basis().end());
  return Subspace::span(s.ambient_dim(), all);
}

Subspace subspace_intersect(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "intersection of subspaces of different ambient spaces");
  const std::size_t n = s.ambient_dim();
  if (s.is_zero() || t.is_zero()) return Subspace(n);
  if (t.dim() == n) return s;
  QMatrix q = t.quotient_projection();
  QMatrix sc = QMatrix::from_columns(s.basis(), n);
  Subspace coeffs = kernel(q * sc);
  std::vector<Vec> vecs;
  for (const auto& c : coeffs.basis()) vecs.push_back(s.from_coordinates(c));
  return Subspace::span(n, vecs);
}

bool contains(const Subspace& s, const Vec& v) { return s.contains(v); }

bool is_direct(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw Error(ErrorKind::AmbientMismatch, "is_direct on subspaces of different ambient spaces");
  return subspace_sum(s, t).dim() == s.dim() + t.dim();
}

Subspace image(const QMatrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "image: shape mismatch");
  std::vector<Vec> vecs;
  for (const auto& b : s.basis()) vecs.push_back(m * b);
  return Subspace::span(m.rows(), vecs);
}

Subspace image(const QMatrix& m) { return Subspace::row_space(m.transpose()); }

// ---------------------------------------------------------------------------
// MatrixPencil

void MatrixPencil::set(std::size_t i, std::size_t j, const Vec& coefficients) {
  if (coefficients.size() != vars_) throw Error(ErrorKind::DimensionMismatch, "pencil coefficient vector has wrong length");
  LinearForm f;
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    if (sgn(coefficients[k]) != 0) f.emplace_back(static_cast<std::uint32_t>(k), coefficients[k]);
  entries_[i * cols_ + j] = std::move(f);
}

void MatrixPencil::set(std::size_t i, std::size_t j, LinearForm form) {
  std::sort(form.begin(), form.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [k, c] : form)
    if (k >= vars_) throw Error(ErrorKind::DimensionMismatch, "pencil variable index out of range");
  form.erase(std::remove_if(form.begin(), form.end(), [](const auto& t) { return sgn(t.second) == 0; }), form.end());
  entries_[i * cols_ + j] = std::move(form);
}

Vec MatrixPencil::dense(std::size_t i, std::size_t j) const {
  Vec v(vars_);
  for (const auto& [k, c] : at(i, j)) v[k] = c;
  return v;
}

bool MatrixPencil::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const LinearForm& f) { return f.empty(); });
}

QMatrix evaluate(const MatrixPencil& p, const Vec& xi) {
  if (xi.size() != p.num_vars()) throw Error(ErrorKind::DimensionMismatch, "evaluation point has wrong length");
  QMatrix m(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    for (std::size_t j = 0; j < p.cols(); ++j) {
      Rational s = 0;
      for (const auto& [k, c] : p.at(i, j))
        if (sgn(xi[k]) != 0) s += c * xi[k];
      m(i, j) = s;
    }
  }
  return m;
}

GenericRankResult generic_rank_detail(const MatrixPencil& p, const RandomCfg& cfg) {
  cfg.validate();
  GenericRankResult out;
  const std::size_t cap = std::min(p.rows(), p.cols());
  SeededRng rng(cfg.seed);
  const auto bound = static_cast<std::int64_t>(cfg.coeff_bound);
  out.witness.assign(p.num_vars(), Rational(0));
  for (std::uint32_t t = 0; t < cfg.trials; ++t) {
    Vec xi(p.num_vars());
    for (auto& x : xi) x = Rational(rng.uniform(-bound, bound));
    const std::size_t r = rank(evaluate(p, xi));
    ++out.trials_used;
    if (r > out.rank || t == 0) {
      out.rank = r;
      out.witness = xi;
    }
    // Further trials cannot exceed a full-rank evaluation.
    if (out.rank == cap) break;
  }
  if (cfg.certify) {
    const std::size_t exact = out.rank == cap ? cap : symbolic_rank(p, 200000);
    if (exact != out.rank) {
      throw Error(ErrorKind::CrossCheckFailed, "randomized generic rank " + std::to_string(out.rank) +
                                                   " disagrees with certified rank " + std::to_string(exact));
    }
    out.method = RankMethod::Certified;
  }
  return out;
}

std::size_t generic_rank(const MatrixPencil& p, const RandomCfg& cfg) { return generic_rank_detail(p, cfg).rank; }

}  // namespace lieindex
