#include <algorithm>
#include <functional>

#include "lieindex/construct.hpp"
#include "lieindex/error.hpp"

namespace lieindex {

namespace {

using Root = std::vector<int>;

int height(const Root& r) {
  int h = 0;
  for (int x : r) h += x;
  return h;
}

Root neg(Root r) {
  for (auto& x : r) x = -x;
  return r;
}

Root add(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

std::string root_label(char prefix, const Root& r) {
  std::string s(1, prefix);
  const bool wide = std::any_of(r.begin(), r.end(), [](int x) { return std::abs(x) > 9; });
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (wide && i) s += ",";
    s += std::to_string(std::abs(r[i]));
  }
  return s;
}

}  // namespace

CartanMatrix cartan_matrix(char family, std::size_t r) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  auto bad = [&] { return Error(ErrorKind::RankOutOfBounds, std::string("no root system ") + family + std::to_string(r)); };
  CartanMatrix a(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i) a[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };
  switch (family) {
    case 'A':
      if (r < 1) throw bad();
      for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'B':
    case 'C':
      if (r < 2) throw bad();
      for (std::size_t i = 0; i + 1 < r; ++i) link(i, i + 1);
      // A_ij = 2(a_i, a_j)/(a_i, a_i); B has a short last root, C a long one.
      if (family == 'B')
        a[r - 1][r - 2] = -2;
      else
        a[r - 2][r - 1] = -2;
      break;
    case 'D':
      if (r < 3) throw bad();
      for (std::size_t i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case 'E':
      if (r < 6 || r > 8) throw bad();
      // Bourbaki numbering: 1-3-4-5-..., 2 attached to 4.
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'F':
      if (r != 4) throw bad();
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;
      break;
    case 'G':
      if (r != 2) throw bad();
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw Error(ErrorKind::InvalidSpec, std::string("unknown family ") + family);
  }
  return a;
}

Rational RootDatum::inner(const std::vector<int>& a, const std::vector<int>& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (b[j] != 0) s += a[i] * b[j] * half_norms[i] * cartan[i][j];
  }
  return s;
}

int RootDatum::pairing(const std::vector<int>& beta, std::size_t i) const {
  int s = 0;
  for (std::size_t j = 0; j < rank(); ++j) s += beta[j] * cartan[i][j];
  return s;
}

RootDatum root_datum(const CartanMatrix& a, std::string label) {
  const std::size_t r = a.size();
  auto fail = [&](const std::string& why) { return Error(ErrorKind::InvalidCartanMatrix, why); };
  if (r == 0) throw fail("empty Cartan matrix");
  for (const auto& row : a)
    if (row.size() != r) throw fail("Cartan matrix is not square");
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i][i] != 2) throw fail("diagonal entries must be 2");
    for (std::size_t j = 0; j < r; ++j)
      if (i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0))) throw fail("off-diagonal sign pattern invalid");
  }
  // symmetrizer along connected components: d_i A_ij = d_j A_ji
  std::vector<Rational> d(r, 0);
  for (std::size_t s = 0; s < r; ++s) {
    if (d[s] != 0) continue;
    d[s] = 1;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j || a[i][j] == 0) continue;
        Rational dj = d[i] * a[i][j] / a[j][i];
        if (d[j] == 0) {
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          throw fail("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  // normalize so the shortest simple root in each matrix has (a, a) = 2
  Rational lo = *std::min_element(d.begin(), d.end());
  for (auto& x : d) x /= lo;
  QMatrix sym(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) sym(i, j) = d[i] * a[i][j];
  for (std::size_t k = 1; k <= r; ++k) {
    QMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = sym(i, j);
    if (determinant(lead) <= 0) throw fail("Cartan matrix is not of finite type");
  }

  RootDatum out;
  out.label = std::move(label);
  out.cartan = a;
  out.half_norms = d;
  std::vector<Root> layer;
  std::map<Root, bool> known;
  for (std::size_t i = 0; i < r; ++i) {
    Root s(r, 0);
    s[i] = 1;
    layer.push_back(s);
    known[s] = true;
  }
  std::vector<Root> all;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), std::greater<Root>());
    all.insert(all.end(), layer.begin(), layer.end());
    std::vector<Root> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < r; ++i) {
        int p = 0;
        Root down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        const int q = p - out.pairing(beta, i);
        if (q <= 0) continue;
        Root up = beta;
        up[i] += 1;
        if (!known.count(up)) {
          known[up] = true;
          next.push_back(up);
        }
      }
    }
    if (all.size() > 2000) throw fail("root system is not finite");
    layer = std::move(next);
  }
  out.positive = std::move(all);
  return out;
}

std::vector<Vec> ChevalleyAlgebra::positive_root_vectors() const {
  std::vector<Vec> out;
  for (std::size_t k = 0; k < positive_count(); ++k) out.push_back(unit_vec(algebra->dim(), k));
  return out;
}

Subspace ChevalleyAlgebra::cartan() const {
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < datum.rank(); ++i) vs.push_back(unit_vec(algebra->dim(), cartan_index(i)));
  return Subspace::span(algebra->dim(), vs);
}

ChevalleyAlgebra chevalley(const RootDatum& d) {
  const std::size_t r = d.rank();
  const std::size_t np = d.positive.size();
  const std::size_t dim = 2 * np + r;
  ChevalleyAlgebra g;
  g.datum = d;
  for (std::size_t k = 0; k < np; ++k) {
    g.root_index[d.positive[k]] = k;
    g.root_index[neg(d.positive[k])] = np + r + k;
  }
  auto is_root = [&](const Root& x) { return g.root_index.count(x) > 0; };
  auto norm = [&](const Root& x) { return d.inner(x, x); };
  auto positive = [&](const Root& x) { return height(x) > 0; };
  std::map<Root, std::size_t> order;
  for (std::size_t k = 0; k < np; ++k) order[d.positive[k]] = k;

  // N_{a,b} for positive a, b; other signs derived on demand.
  std::map<std::pair<Root, Root>, Rational> npos;
  std::function<Rational(const Root&, const Root&)> N = [&](const Root& a, const Root& b) -> Rational {
    const Root c = add(a, b);
    if (!is_root(c)) return 0;
    const bool pa = positive(a), pb = positive(b);
    if (pa && pb) return npos.at({a, b});
    if (!pa && !pb) return -N(neg(a), neg(b));
    if (!pa) return -N(b, a);
    // a > 0 > b; triple (a, b, -c) sums to zero
    if (positive(c)) return -norm(c) / norm(a) * N(neg(b), c);
    return norm(c) / norm(b) * N(neg(c), a);
  };
  for (std::size_t k = r; k < np; ++k) {
    const Root& xi = d.positive[k];
    std::vector<std::pair<Root, Root>> pairs;
    for (std::size_t a = 0; a < k; ++a) {
      const Root& al = d.positive[a];
      Root be = add(xi, neg(al));
      if (order.count(be) && order[al] < order[be]) pairs.emplace_back(al, be);
    }
    const auto& [al, be] = pairs.front();  // extraspecial
    int p = 0;
    for (Root down = add(be, neg(al)); is_root(down); down = add(down, neg(al))) ++p;
    npos[{al, be}] = p + 1;
    npos[{be, al}] = -(p + 1);
    for (std::size_t t = 1; t < pairs.size(); ++t) {
      const auto& [a2, b2] = pairs[t];
      Rational s = 0;
      const Root x = add(b2, neg(al)), y = add(a2, neg(al));
      if (is_root(x)) s += N(b2, neg(al)) * N(a2, neg(be)) / norm(x);
      if (is_root(y)) s += N(neg(al), a2) * N(b2, neg(be)) / norm(y);
      Rational v = norm(xi) / npos.at({al, be}) * s;
      npos[{a2, b2}] = v;
      npos[{b2, a2}] = -v;
    }
  }

  std::vector<Root> roots(dim);
  std::vector<std::string> labels(dim);
  for (std::size_t k = 0; k < np; ++k) {
    roots[k] = d.positive[k];
    roots[np + r + k] = neg(d.positive[k]);
    labels[k] = root_label('e', d.positive[k]);
    labels[np + r + k] = root_label('f', d.positive[k]);
  }
  for (std::size_t i = 0; i < r; ++i) labels[np + i] = "h" + std::to_string(i + 1);
  auto is_root_idx = [&](std::size_t k) { return k < np || k >= np + r; };

  std::vector<SparseVec> table(dim * dim);
  auto coroot = [&](const Root& a) {
    // a^vee = sum a_i (d_i / d_a) alpha_i^vee
    SparseVec s;
    const Rational da = norm(a) / 2;
    for (std::size_t i = 0; i < r; ++i)
      if (a[i] != 0) s.emplace_back(static_cast<std::uint32_t>(np + i), a[i] * d.half_norms[i] / da);
    return s;
  };
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      SparseVec s;
      if (is_root_idx(x) && is_root_idx(y)) {
        const Root c = add(roots[x], roots[y]);
        if (std::all_of(c.begin(), c.end(), [](int v) { return v == 0; })) {
          s = coroot(roots[x]);
        } else if (is_root(c)) {
          s.emplace_back(static_cast<std::uint32_t>(g.root_index.at(c)), N(roots[x], roots[y]));
        }
      } else if (!is_root_idx(x) && is_root_idx(y)) {
        const int v = d.pairing(roots[y], x - np);
        if (v != 0) s.emplace_back(static_cast<std::uint32_t>(y), Rational(v));
      } else if (is_root_idx(x) && !is_root_idx(y)) {
        const int v = d.pairing(roots[x], y - np);
        if (v != 0) s.emplace_back(static_cast<std::uint32_t>(x), Rational(-v));
      }
      table[x * dim + y] = std::move(s);
    }
  LieAlgebra integral = LieAlgebra::from_table(labels, table);
  const QMatrix kil = integral.killing();
  std::vector<Rational> scale(dim, 1);
  for (std::size_t k = 0; k < np; ++k) scale[np + r + k] = 1 / kil(k, np + r + k);
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y)
      for (auto& [k, c] : table[x * dim + y]) c *= scale[x] * scale[y] / scale[k];
  auto L = std::make_shared<LieAlgebra>(LieAlgebra::from_table(std::move(labels), std::move(table)));
  if (L->dim() <= 60 && !L->validate())
    throw Error(ErrorKind::CrossCheckFailed, "Chevalley algebra " + d.label + " fails the Jacobi identity");
  g.algebra = std::move(L);
  return g;
}

ChevalleyAlgebra chevalley(const std::string& type) {
  if (type.size() < 2) throw Error(ErrorKind::InvalidSpec, "type must look like 'G2'");
  std::size_t used = 0;
  std::size_t r = 0;
  try {
    r = std::stoul(type.substr(1), &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidSpec, "type must look like 'G2', got '" + type + "'");
  }
  if (used != type.size() - 1) throw Error(ErrorKind::InvalidSpec, "type must look like 'G2', got '" + type + "'");
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  return chevalley(root_datum(cartan_matrix(family, r), std::string(1, family) + std::to_string(r)));
}

Vec regular_nilpotent(const ChevalleyAlgebra& g) {
  Vec e(g.algebra->dim());
  for (std::size_t i = 0; i < g.datum.rank(); ++i) e[i] = 1;
  return e;
}

std::pair<Vec, Vec> extreme_root_vectors(const ChevalleyAlgebra& g) {
  const auto& lambda = g.highest_root();
  const std::size_t n = g.algebra->dim();
  return {unit_vec(n, g.root_index.at(lambda)), unit_vec(n, g.root_index.at(neg(lambda)))};
}

Parabolic parabolic(const ChevalleyAlgebra& g, const std::vector<std::size_t>& levi) {
  const std::size_t r = g.datum.rank();
  std::vector<bool> in(r, false);
  for (auto i : levi) {
    if (i >= r) throw Error(ErrorKind::InvalidSpec, "simple root index out of range");
    in[i] = true;
  }
  const std::size_t n = g.algebra->dim();
  std::vector<Vec> l, pu;
  for (std::size_t i = 0; i < r; ++i) l.push_back(unit_vec(n, g.cartan_index(i)));
  for (const auto& a : g.datum.positive) {
    bool inside = true;
    for (std::size_t i = 0; i < r; ++i)
      if (a[i] != 0 && !in[i]) inside = false;
    if (inside) {
      l.push_back(unit_vec(n, g.root_index.at(a)));
      l.push_back(unit_vec(n, g.root_index.at(neg(a))));
    } else {
      pu.push_back(unit_vec(n, g.root_index.at(a)));
    }
  }
  Parabolic out;
  out.l = Subspace::span(n, l);
  out.pu = Subspace::span(n, pu);
  out.p = subspace_sum(out.l, out.pu);
  return out;
}

}  // namespace lieindex
