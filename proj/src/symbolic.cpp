#include <algorithm>
#include <array>
#include <cstdint>

#include "lieindex/error.hpp"
#include "lieindex/exactla.hpp"

namespace lieindex {

namespace {

// Elimination over Q(xi) with entries kept as Laurent polynomials. A pivot
// that is a single term is inverted exactly; any other pivot is used
// fraction-free (the target row is scaled by it), which never changes the
// rank over the function field.

constexpr std::size_t kMaxVars = 64;
constexpr int kMaxExponent = 120;

using Monomial = std::array<std::int8_t, kMaxVars>;

struct Term {
  Monomial mono;
  Rational coeff;
};

using Poly = std::vector<Term>;  // sorted by mono, no zero coefficients

bool mono_less(const Monomial& a, const Monomial& b) { return a < b; }

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const int e = a[i] + b[i];
    if (e > kMaxExponent || e < -kMaxExponent)
      throw Error(ErrorKind::CertifyBudgetExceeded, "exponent overflow in symbolic elimination");
    r[i] = static_cast<std::int8_t>(e);
  }
  return r;
}

Monomial mono_inv(const Monomial& a) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::int8_t>(-a[i]);
  return r;
}

void normalize(Poly& p) {
  std::sort(p.begin(), p.end(), [](const Term& a, const Term& b) { return mono_less(a.mono, b.mono); });
  Poly out;
  out.reserve(p.size());
  for (auto& t : p) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  p = std::move(out);
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  r.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) r.push_back({mono_mul(x.mono, y.mono), x.coeff * y.coeff});
  normalize(r);
  return r;
}

// a - b
Poly sub(const Poly& a, const Poly& b) {
  Poly r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && mono_less(a[i].mono, b[j].mono))) {
      r.push_back(a[i++]);
    } else if (i == a.size() || mono_less(b[j].mono, a[i].mono)) {
      r.push_back({b[j].mono, -b[j].coeff});
      ++j;
    } else {
      Rational c = a[i].coeff - b[j].coeff;
      if (sgn(c) != 0) r.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

// Divides out the monomial gcd of the row's terms and scales to a unit
// leading coefficient; neither changes the row's span over Q(xi).
void tidy_row(std::vector<Poly>& row) {
  bool any = false;
  Monomial lo{};
  const Rational* lead = nullptr;
  for (const auto& p : row) {
    for (const auto& t : p) {
      if (!any) {
        lo = t.mono;
        any = true;
      } else {
        for (std::size_t v = 0; v < kMaxVars; ++v) lo[v] = std::min(lo[v], t.mono[v]);
      }
    }
    if (!lead && !p.empty()) lead = &p.front().coeff;
  }
  if (!any) return;
  const Monomial shift = mono_inv(lo);
  const Rational scale = 1 / *lead;
  for (auto& p : row)
    for (auto& t : p) {
      t.mono = mono_mul(t.mono, shift);
      t.coeff *= scale;
    }
}

}  // namespace

std::size_t symbolic_rank(const MatrixPencil& p, std::size_t term_budget) {
  if (p.num_vars() > kMaxVars)
    throw Error(ErrorKind::CertifyBudgetExceeded, "symbolic elimination supports at most 64 variables");
  const std::size_t n = p.rows();
  const std::size_t m = p.cols();
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (const auto& [k, c] : p.at(i, j)) {
        Monomial mono{};
        mono[k] = 1;
        a[i][j].push_back({mono, c});
      }
      normalize(a[i][j]);
    }
  }

  std::vector<bool> row_done(n, false), col_done(m, false);
  std::size_t r = 0;
  while (r < std::min(n, m)) {
    // Pivot: fewest terms, preferring rows and columns with the fewest
    // nonzero entries.
    std::size_t bi = n, bj = m, best = 0, best_fill = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (row_done[i]) continue;
      std::size_t fill = 0;
      for (std::size_t j = 0; j < m; ++j)
        if (!col_done[j] && !a[i][j].empty()) ++fill;
      for (std::size_t j = 0; j < m; ++j) {
        if (col_done[j] || a[i][j].empty()) continue;
        const std::size_t sz = a[i][j].size();
        if (bi == n || sz < best || (sz == best && fill < best_fill)) {
          bi = i;
          bj = j;
          best = sz;
          best_fill = fill;
        }
      }
    }
    if (bi == n) break;
    row_done[bi] = true;
    col_done[bj] = true;
    ++r;
    const Poly piv = a[bi][bj];
    Poly inv;
    if (piv.size() == 1) inv.push_back({mono_inv(piv[0].mono), 1 / piv[0].coeff});
    for (std::size_t i = 0; i < n; ++i) {
      if (row_done[i] || a[i][bj].empty()) continue;
      const Poly factor = a[i][bj];
      const Poly ratio = piv.size() == 1 ? mul(factor, inv) : Poly{};
      for (std::size_t j = 0; j < m; ++j) {
        if (col_done[j]) continue;
        if (piv.size() == 1) {
          if (a[bi][j].empty()) continue;
          a[i][j] = sub(a[i][j], mul(ratio, a[bi][j]));
        } else {
          a[i][j] = sub(mul(piv, a[i][j]), mul(factor, a[bi][j]));
        }
        if (a[i][j].size() > term_budget)
          throw Error(ErrorKind::CertifyBudgetExceeded,
                      "entry exceeded " + std::to_string(term_budget) + " terms during symbolic elimination");
      }
      a[i][bj].clear();
      tidy_row(a[i]);
    }
  }
  return r;
}

}  // namespace lieindex
