#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "lieindex/construct.hpp"
#include "lieindex/error.hpp"

namespace lieindex {

namespace {

struct SparseEntry {
  std::size_t i, j;
  Rational v;
};
using SparseMat = std::vector<SparseEntry>;

SparseMat sparse_of(const QMatrix& m) {
  SparseMat s;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0) s.push_back({i, j, m(i, j)});
  return s;
}

// a*b - b*a, accumulated into a dense n x n grid.
void commutator(const SparseMat& a, const SparseMat& b, std::vector<Rational>& out, std::size_t n) {
  std::fill(out.begin(), out.end(), Rational(0));
  for (const auto& x : a)
    for (const auto& y : b) {
      if (x.j == y.i) out[x.i * n + y.j] += x.v * y.v;
      if (y.j == x.i) out[y.i * n + x.j] -= x.v * y.v;
    }
}

std::string entry_label(std::size_t i, std::size_t j, std::size_t n) {
  if (n <= 9) return "E" + std::to_string(i + 1) + std::to_string(j + 1);
  return "E" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

void check_jacobi(const LieAlgebra& L, const std::string& what) {
  if (L.dim() <= 60 && !L.validate()) throw Error(ErrorKind::CrossCheckFailed, what + " fails the Jacobi identity");
}

// Elements of g whose matrices vanish outside the allowed entries.
Subspace pattern_subspace(const ClassicalAlgebra& g, const std::function<bool(std::size_t, std::size_t)>& allowed) {
  const std::size_t n = g.type.n();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (allowed(i, j)) continue;
      Vec r(g.basis.size());
      bool any = false;
      for (std::size_t k = 0; k < g.basis.size(); ++k) {
        r[k] = g.basis[k](i, j);
        if (sgn(r[k]) != 0) any = true;
      }
      if (any) rows.push_back(std::move(r));
    }
  if (rows.empty()) return Subspace::full(g.basis.size());
  return kernel(QMatrix::from_rows(rows, g.basis.size()));
}

}  // namespace

Partition parse_partition(const std::string& text) {
  Partition p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "malformed partition '" + text + "'");
    }
    if (used != item.size() || v <= 0) throw Error(ErrorKind::Parse, "malformed partition '" + text + "'");
    p.push_back(v);
  }
  if (p.empty()) throw Error(ErrorKind::Parse, "empty partition");
  if (!std::is_sorted(p.begin(), p.end(), std::greater<int>()))
    throw Error(ErrorKind::Parse, "partition parts must be weakly decreasing: '" + text + "'");
  return p;
}

std::string to_string(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

std::size_t ClassicalType::n() const {
  switch (family) {
    case 'A': return rank + 1;
    case 'B': return 2 * rank + 1;
    default: return 2 * rank;
  }
}

std::string ClassicalType::name() const { return std::string(1, family) + std::to_string(rank); }

void ClassicalType::validate() const {
  if (family != 'A' && family != 'B' && family != 'C' && family != 'D')
    throw Error(ErrorKind::InvalidSpec, std::string("not a classical family: ") + family);
  const std::size_t lo = family == 'A' ? 1 : family == 'D' ? 3 : 2;
  if (rank < lo || rank > 32) throw Error(ErrorKind::RankOutOfBounds, "rank out of bounds for " + name());
}

ClassicalType ClassicalType::parse(const std::string& text) {
  if (text.size() < 2) throw Error(ErrorKind::InvalidSpec, "type must look like 'D4'");
  ClassicalType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  std::size_t used = 0;
  try {
    t.rank = std::stoul(text.substr(1), &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidSpec, "type must look like 'D4', got '" + text + "'");
  }
  if (used != text.size() - 1) throw Error(ErrorKind::InvalidSpec, "type must look like 'D4', got '" + text + "'");
  t.validate();
  return t;
}

QMatrix ClassicalAlgebra::to_matrix(const Vec& x) const {
  if (x.size() != basis.size()) throw Error(ErrorKind::DimensionMismatch, "element has wrong length");
  const std::size_t n = type.n();
  QMatrix m(n, n);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (sgn(x[k]) == 0) continue;
    QMatrix t = basis[k];
    t *= x[k];
    m = m + t;
  }
  return m;
}

Vec ClassicalAlgebra::from_matrix(const QMatrix& m) const {
  const std::size_t n = type.n();
  if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "matrix has wrong size");
  Vec v(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v[i * n + j] = m(i, j);
  if (!flat.contains(v)) throw Error(ErrorKind::NotInvariant, "matrix does not lie in " + type.name());
  return flat.coordinates(v);
}

std::vector<Vec> ClassicalAlgebra::upper_nilpotent_basis() const {
  return pattern_subspace(*this, [](std::size_t i, std::size_t j) { return i < j; }).basis();
}

Subspace ClassicalAlgebra::diagonal() const {
  return pattern_subspace(*this, [](std::size_t i, std::size_t j) { return i == j; });
}

ClassicalAlgebra classical(ClassicalType t) {
  t.validate();
  const std::size_t n = t.n();
  ClassicalAlgebra g;
  g.type = t;
  g.form = QMatrix(n, n);
  std::vector<Vec> constraints;
  if (t.family == 'A') {
    g.form = QMatrix::identity(n);
    Vec tr(n * n);
    for (std::size_t i = 0; i < n; ++i) tr[i * n + i] = 1;
    constraints.push_back(tr);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const bool lower_half = t.family == 'C' && i >= n / 2;
      g.form(i, n - 1 - i) = lower_half ? -1 : 1;
    }
    // (X^T J + J X)_{ab} = X_{b'a} J_{b'b} + J_{aa'} X_{a'b}
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vec r(n * n);
        const std::size_t ap = n - 1 - a, bp = n - 1 - b;
        r[bp * n + a] += g.form(bp, b);
        r[ap * n + b] += g.form(a, ap);
        if (!is_zero(r)) constraints.push_back(r);
      }
  }
  g.flat = kernel(QMatrix::from_rows(constraints, n * n));
  const std::size_t d = g.flat.dim();
  std::vector<std::string> labels;
  std::vector<SparseMat> sparse;
  for (std::size_t k = 0; k < d; ++k) {
    QMatrix m(n, n);
    const Vec& row = g.flat.basis(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = row[i * n + j];
    const std::size_t p = g.flat.pivots()[k];
    labels.push_back(entry_label(p / n, p % n, n));
    sparse.push_back(sparse_of(m));
    g.basis.push_back(std::move(m));
  }
  std::vector<SparseVec> table(d * d);
  std::vector<Rational> c(n * n);
  const auto& piv = g.flat.pivots();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      commutator(sparse[a], sparse[b], c, n);
      SparseVec s, neg;
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(c[piv[k]]) != 0) {
          s.emplace_back(static_cast<std::uint32_t>(k), c[piv[k]]);
          neg.emplace_back(static_cast<std::uint32_t>(k), -c[piv[k]]);
        }
      table[a * d + b] = std::move(s);
      table[b * d + a] = std::move(neg);
    }
  auto L = std::make_shared<LieAlgebra>(LieAlgebra::from_table(std::move(labels), std::move(table)));
  check_jacobi(*L, t.name());
  g.algebra = std::move(L);
  return g;
}

bool is_admissible(ClassicalType t, const Partition& p) {
  if (p.empty() || !std::is_sorted(p.begin(), p.end(), std::greater<int>()) || p.back() <= 0) return false;
  std::size_t sum = 0;
  std::map<int, int> mult;
  for (int x : p) {
    sum += static_cast<std::size_t>(x);
    ++mult[x];
  }
  if (sum != t.n()) return false;
  for (const auto& [part, m] : mult) {
    if (t.family == 'C' && part % 2 == 1 && m % 2 == 1) return false;
    if ((t.family == 'B' || t.family == 'D') && part % 2 == 0 && m % 2 == 1) return false;
  }
  return true;
}

bool is_very_even(ClassicalType t, const Partition& p) {
  return t.family == 'D' && is_admissible(t, p) && std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; });
}

std::vector<Partition> admissible_partitions(ClassicalType t) {
  t.validate();
  std::vector<Partition> all;
  Partition cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
    if (remaining == 0) {
      all.push_back(cur);
      return;
    }
    for (int x = std::min(remaining, maxpart); x >= 1; --x) {
      cur.push_back(x);
      rec(remaining - x, x);
      cur.pop_back();
    }
  };
  rec(static_cast<int>(t.n()), static_cast<int>(t.n()));
  std::vector<Partition> out;
  for (auto& p : all)
    if (is_admissible(t, p)) out.push_back(std::move(p));
  return out;
}

Partition jordan_type(const QMatrix& x) {
  const std::size_t n = x.rows();
  // blocks of size >= k = rank(x^{k-1}) - rank(x^k)
  std::vector<std::size_t> ranks{n};
  QMatrix pw = x;
  while (ranks.back() > 0) {
    const std::size_t r = rank(pw);
    if (r == ranks.back()) throw Error(ErrorKind::NotNilpotent, "matrix is not nilpotent");
    ranks.push_back(r);
    pw = pw * x;
  }
  Partition p;
  for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
    const std::size_t at_least_k = ranks[k - 1] - ranks[k];
    const std::size_t at_least_k1 = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t c = 0; c < at_least_k - at_least_k1; ++c) p.push_back(static_cast<int>(k));
  }
  return p;
}

Vec nilpotent_from_partition(const ClassicalAlgebra& g, const Partition& p) {
  if (!is_admissible(g.type, p))
    throw Error(ErrorKind::InadmissiblePartition, to_string(p) + " is not admissible for " + g.type.name());
  const std::size_t n = g.type.n();
  if (g.type.family == 'A') {
    QMatrix e(n, n);
    std::size_t at = 0;
    for (int m : p) {
      for (int i = 0; i + 1 < m; ++i) e(at + i, at + i + 1) = 1;
      at += static_cast<std::size_t>(m);
    }
    return g.from_matrix(e);
  }

  // Model space: sl2-blocks V(m) with e v_i = v_{i+1}, weight(v_i) = 2i - (m - 1),
  // and B(v_i, v_{m-1-i}) = (-1)^i; self-paired when that form has the
  // required symmetry, otherwise two copies paired with each other.
  const int eps = g.type.family == 'C' ? -1 : 1;
  QMatrix bm(n, n), em(n, n);
  std::vector<int> weight(n);
  struct Pair {
    Vec x, y;
    int w;
  };
  std::vector<Pair> pairs;
  std::vector<Vec> anisotropic;  // middle vectors of odd self-paired blocks, squares alternating +1, -1
  std::size_t at = 0;
  auto unit = [&](std::size_t i) { return unit_vec(n, i); };
  std::map<int, int, std::greater<int>> mult;
  for (int m : p) ++mult[m];
  for (const auto& [m, count] : mult) {
    const bool self = (eps == 1) == (m % 2 == 1);
    const int blocks = self ? count : count / 2;
    for (int b = 0; b < blocks; ++b) {
      const std::size_t o = at;
      const std::size_t o2 = self ? o : o + static_cast<std::size_t>(m);
      for (std::size_t base : {o, o2}) {
        for (int i = 0; i < m; ++i) {
          weight[base + i] = 2 * i - (m - 1);
          if (i + 1 < m) em(base + i + 1, base + i) = 1;
        }
        if (self) break;
      }
      if (self) {
        Rational sigma = 1;
        const int c = (m - 1) / 2;
        if (m % 2 == 1) {
          const int want = anisotropic.size() % 2 == 0 ? 1 : -1;
          sigma = want * (c % 2 == 0 ? 1 : -1);
        }
        for (int i = 0; i < m; ++i) bm(o + i, o + m - 1 - i) = sigma * (i % 2 == 0 ? 1 : -1);
        for (int i = 0; 2 * i < m - 1; ++i) {
          const std::size_t hi = o + m - 1 - i, lo = o + i;
          pairs.push_back({unit(hi), (1 / bm(hi, lo)) * unit(lo), weight[hi]});
        }
        if (m % 2 == 1) anisotropic.push_back(unit(o + c));
        at += static_cast<std::size_t>(m);
      } else {
        for (int i = 0; i < m; ++i) {
          const Rational s = i % 2 == 0 ? 1 : -1;
          bm(o + i, o2 + m - 1 - i) = s;
          bm(o2 + m - 1 - i, o + i) = eps * s;
        }
        for (int i = 0; i < m; ++i) {
          const std::size_t u = o + i, v = o2 + m - 1 - i;
          if (weight[u] >= 0)
            pairs.push_back({unit(u), (1 / bm(u, v)) * unit(v), weight[u]});
          else
            pairs.push_back({unit(v), (1 / bm(v, u)) * unit(u), weight[v]});
        }
        at += 2 * static_cast<std::size_t>(m);
      }
    }
  }
  for (std::size_t k = 0; k + 1 < anisotropic.size(); k += 2) {
    const Vec& u = anisotropic[k];
    const Vec& w = anisotropic[k + 1];
    pairs.push_back({u + w, Rational(1, 2) * (u - w), 0});
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.w > b.w; });
  std::vector<Vec> cols(n);
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    cols[a] = pairs[a].x;
    cols[n - 1 - a] = pairs[a].y;
  }
  if (anisotropic.size() % 2 == 1) cols[n / 2] = anisotropic.back();
  const QMatrix pm = QMatrix::from_columns(cols, n);
  if (!(pm.transpose() * bm * pm == g.form))
    throw Error(ErrorKind::CompletionFailed, "Witt basis construction failed for " + to_string(p));
  return g.from_matrix(inverse(pm) * em * pm);
}

Parabolic parabolic(const ClassicalAlgebra& g, const std::vector<int>& composition) {
  const std::size_t n = g.type.n();
  std::size_t sum = 0;
  for (int c : composition) {
    if (c <= 0) throw Error(ErrorKind::InvalidSpec, "composition parts must be positive");
    sum += static_cast<std::size_t>(c);
  }
  if (sum != n) throw Error(ErrorKind::InvalidSpec, "composition does not sum to " + std::to_string(n));
  if (g.type.family != 'A' && !std::equal(composition.begin(), composition.end(), composition.rbegin()))
    throw Error(ErrorKind::InvalidSpec, "composition must be palindromic for " + g.type.name());
  std::vector<std::size_t> blk;
  for (std::size_t b = 0; b < composition.size(); ++b)
    for (int i = 0; i < composition[b]; ++i) blk.push_back(b);
  Parabolic out;
  out.p = pattern_subspace(g, [&](std::size_t i, std::size_t j) { return blk[i] <= blk[j]; });
  out.l = pattern_subspace(g, [&](std::size_t i, std::size_t j) { return blk[i] == blk[j]; });
  out.pu = pattern_subspace(g, [&](std::size_t i, std::size_t j) { return blk[i] < blk[j]; });
  return out;
}

std::vector<std::vector<int>> compositions(std::size_t n) {
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    std::vector<int> c;
    int run = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (mask & (std::size_t{1} << i)) {
        c.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    c.push_back(run);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> palindromic_compositions(std::size_t n) {
  std::vector<std::vector<int>> out;
  for (auto& c : compositions(n))
    if (std::equal(c.begin(), c.end(), c.rbegin())) out.push_back(std::move(c));
  return out;
}

std::vector<int> weighted_dynkin(ClassicalType t, const Partition& p) {
  if (!is_admissible(t, p))
    throw Error(ErrorKind::InadmissiblePartition, to_string(p) + " is not admissible for " + t.name());
  std::vector<int> ev;
  for (int m : p)
    for (int k = m - 1; k >= -(m - 1); k -= 2) ev.push_back(k);
  std::sort(ev.begin(), ev.end(), std::greater<int>());
  const std::size_t r = t.rank;
  std::vector<int> labels;
  for (std::size_t i = 0; i + 1 < (t.family == 'A' ? r + 1 : r); ++i) labels.push_back(ev[i] - ev[i + 1]);
  switch (t.family) {
    case 'B': labels.push_back(ev[r - 1]); break;
    case 'C': labels.push_back(2 * ev[r - 1]); break;
    case 'D': labels.push_back(ev[r - 2] + ev[r - 1]); break;
    default: break;
  }
  return labels;
}

}  // namespace lieindex
