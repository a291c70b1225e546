#include "lieindex/nilanalysis.hpp"

#include <algorithm>

#include "lieindex/error.hpp"

namespace lieindex {

namespace {

bool is_sum(const Subspace& a, const Subspace& b, const Subspace& whole) {
  return is_direct(a, b) && subspace_sum(a, b) == whole;
}

QMatrix gram(const LieAlgebra& L, const std::vector<Vec>& vs) {
  QMatrix m(vs.size(), vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j) m(i, j) = L.killing_pair(vs[i], vs[j]);
  return m;
}

std::vector<Vec> concat(std::vector<Vec> a, const std::vector<Vec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Subspace full_image(const LieAlgebra& L, const Vec& x) { return image(L.ad(x)); }

// v = alpha * u for a nonzero u; nullopt when v is not on the line.
std::optional<Rational> proportion(const Vec& v, const Vec& u) {
  std::size_t k = 0;
  while (k < u.size() && u[k] == 0) ++k;
  if (k == u.size()) return std::nullopt;
  const Rational a = v[k] / u[k];
  for (std::size_t i = 0; i < u.size(); ++i)
    if (v[i] != a * u[i]) return std::nullopt;
  return a;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  mpz_class prod = x.get_num() * x.get_den();
  if (!mpz_perfect_square_p(prod.get_mpz_t())) return std::nullopt;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), prod.get_mpz_t());
  return Rational(root, x.get_den());
}

// a + b sqrt(d) with d fixed and not a rational square.
struct QuadNum {
  Rational d, a, b;

  QuadNum operator*(const QuadNum& o) const { return {d, a * o.a + b * o.b * d, a * o.b + b * o.a}; }
  QuadNum operator*(const Rational& r) const { return {d, a * r, b * r}; }
  QuadNum operator+(const QuadNum& o) const { return {d, a + o.a, b + o.b}; }
  bool is_zero() const { return a == 0 && b == 0; }
  std::string str() const { return to_string(a) + "+" + to_string(b) + "*sqrt(" + to_string(d) + ")"; }
};

Json index_json(const IndexResult& r) { return r.to_json(); }

}  // namespace

Subspace GradedPieces::piece(int i) const {
  auto it = pieces_.find(i);
  return it == pieces_.end() ? Subspace::zero(ambient_) : it->second;
}

Subspace GradedPieces::part(const Subspace& s, int i) const { return subspace_intersect(s, piece(i)); }

std::map<int, std::size_t> GradedPieces::dims(const Subspace& s) const {
  std::map<int, std::size_t> out;
  std::size_t total = 0;
  for (const auto& [i, p] : pieces_) {
    const std::size_t d = subspace_intersect(s, p).dim();
    if (d) out[i] = d;
    total += d;
  }
  if (total != s.dim()) throw Error(ErrorKind::CrossCheckFailed, "subspace is not graded");
  return out;
}

Subspace GradedPieces::range(int lo, int hi) const {
  Subspace s = Subspace::zero(ambient_);
  for (const auto& [i, p] : pieces_)
    if (i >= lo && i <= hi) s = subspace_sum(s, p);
  return s;
}

GradedPieces grading(const LieAlgebra& L, const Vec& h) {
  const std::size_t n = L.dim();
  const QMatrix adh = L.ad(h);
  Rational bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) row += abs(adh(i, j));
    bound = std::max(bound, row);
  }
  const mpz_class b = bound.get_num() / bound.get_den();
  const long B = std::min<long>(b.get_si(), 8 * static_cast<long>(n) + 8);
  std::map<int, Subspace> pieces;
  std::size_t total = 0;
  for (long i = -B; i <= B && total < n; ++i) {
    QMatrix m = adh;
    for (std::size_t k = 0; k < n; ++k) m(k, k) -= Rational(i);
    Subspace k = kernel(m);
    if (k.dim()) {
      total += k.dim();
      pieces.emplace(static_cast<int>(i), std::move(k));
    }
  }
  if (total != n) throw Error(ErrorKind::NotIntegerDiagonalizable, "ad h has non-integer or non-semisimple spectrum");
  GradedPieces g(n, std::move(pieces));
  for (const auto& [i, p] : g.pieces())
    for (const auto& [j, q] : g.pieces()) {
      const Vec br = L.bracket(p.basis(0), q.basis(0));
      if (!g.piece(i + j).contains(br) && !is_zero(br))
        throw Error(ErrorKind::CrossCheckFailed, "grading is not compatible with the bracket");
    }
  return g;
}

std::size_t height(const LieAlgebra& L, const SL2Triple& t, const GradedPieces& g) {
  const int top = g.max_degree();
  const QMatrix ade = L.ad(t.e);
  QMatrix power = QMatrix::identity(L.dim());
  std::size_t m = 0;
  while (true) {
    QMatrix next = power * ade;
    if (next.is_zero()) break;
    power = std::move(next);
    ++m;
  }
  if (static_cast<int>(m) != top)
    throw Error(ErrorKind::CrossCheckFailed, "height from the grading differs from the nilpotency degree of ad e");
  return m;
}

CentralizerChain centralizer_chain(const LieAlgebra& L, const SL2Triple& t) {
  CentralizerChain c;
  c.z = kernel(L.ad(t.e));
  c.d = centralizer(L, c.z);
  if (!(c.d == centre_of_subspace(L, c.z)))
    throw Error(ErrorKind::CrossCheckFailed, "double centraliser differs from the centre of the centraliser");
  c.n = normalizer(L, c.z);
  const Subspace via_d = kernel(c.d.quotient_projection() * L.ad(t.e));
  const Subspace fd = bracket_space(L, t.f, c.d);
  const Subspace via_sum = subspace_sum(c.z, fd);
  if (!(c.n == via_d) || !(c.n == via_sum) || !is_direct(c.z, fd))
    throw Error(ErrorKind::CrossCheckFailed, "the three constructions of the normaliser disagree");
  if (c.n.dim() != c.z.dim() + c.d.dim())
    throw Error(ErrorKind::CrossCheckFailed, "dim n(e) != dim z(e) + dim d(e)");
  c.zf = kernel(L.ad(t.f));
  c.df = centralizer(L, c.zf);
  return c;
}

CheckReport check_prop21(const LieAlgebra& L, const SL2Triple& t, const GradedPieces& g, const CentralizerChain& c) {
  CheckReport rep("prop21");
  const auto zdims = g.dims(c.z);
  const auto zfdims = g.dims(c.zf);
  rep.expect(zdims.empty() || zdims.begin()->first >= 0, "z(e) has a negative degree");
  rep.expect(zfdims.empty() || zfdims.rbegin()->first <= 0, "z(f) has a positive degree");
  const int top = g.max_degree();
  int checked = 0;
  for (int i = -top - 2; i <= top + 2; ++i) {
    const Subspace gi = g.piece(i);
    const Subspace below = g.piece(i - 2);
    rep.expect(is_sum(g.part(c.z, i), bracket_space(L, t.f, g.piece(i + 2)), gi),
               "g(" + std::to_string(i) + ") != z(e)(i) + [f, g(i+2)]");
    const Subspace e_below = bracket_space(L, t.e, below);
    rep.expect(is_sum(g.part(c.zf, i), e_below, gi), "g(" + std::to_string(i) + ") != z(f)(i) + [e, g(i-2)]");
    if (i <= 1) rep.expect(e_below.dim() == below.dim(), "ad e not injective into g(" + std::to_string(i) + ")");
    if (i >= 1) rep.expect(e_below == gi, "ad e not surjective onto g(" + std::to_string(i) + ")");
    ++checked;
  }
  bool even = true;
  for (const auto& [i, p] : g.pieces()) even = even && i % 2 == 0;
  const bool distinguished = g.part(c.z, 0).is_zero();
  rep.expect(!distinguished || even, "distinguished but not even");
  rep.values["degrees_checked"] = checked;
  rep.values["even"] = even;
  rep.values["distinguished"] = distinguished;
  return rep;
}

CheckReport check_thm23(const LieAlgebra& L, const SL2Triple& t, const GradedPieces& g, const CentralizerChain& c) {
  CheckReport rep("thm23");
  const Subspace d2 = g.part(c.d, 2);
  const Subspace df2 = g.part(c.df, -2);
  const Subspace fd2 = bracket_space(L, t.f, d2);
  const Subspace r = subspace_sum(subspace_sum(df2, fd2), d2);
  rep.values["dim_d2"] = d2.dim();
  rep.values["dim_r"] = r.dim();
  rep.expect(d2.dim() == 1, "dim d(e)(2) != 1");
  rep.expect(r.dim() == d2.dim() + df2.dim() + fd2.dim(), "the pieces of r are not independent");
  rep.expect(r.dim() == 3, "dim r != 3");
  rep.expect(is_subalgebra(L, r), "r is not bracket-closed");
  rep.expect(r.contains(t.e) && r.contains(t.h) && r.contains(t.f), "r does not contain the triple");
  return rep;
}

CheckReport check_thm24(const LieAlgebra& L, const CentralizerChain& c) {
  CheckReport rep("thm24");
  const std::size_t n = L.dim();
  const Subspace gzf = bracket_space(L, Subspace::full(n), c.zf);
  rep.expect(is_sum(c.d, gzf, Subspace::full(n)), "d(e) + [g, z(f)] is not a direct decomposition of g");
  const QMatrix gm = gram(L, concat(c.d.basis(), c.df.basis()));
  rep.values["gram_size"] = gm.rows();
  rep.expect(determinant(gm) != 0, "Killing form degenerate on d(e) + d(f)");
  rep.expect(orthogonal_complement(L, gzf, L.killing()) == c.df, "[g, z(f)]^perp != d(f)");
  return rep;
}

CheckReport check_prop26(const GradedPieces& g, const CentralizerChain& c) {
  CheckReport rep("prop26");
  Json degs = Json::array();
  for (const auto& [i, d] : g.dims(c.d)) {
    for (std::size_t k = 0; k < d; ++k) degs.push_back(i);
    rep.expect(i >= 2 && i % 2 == 0, "d(e) has a piece in degree " + std::to_string(i));
  }
  rep.values["degrees"] = degs;
  return rep;
}

CheckReport check_steinberg(const LieAlgebra& L, const CentralizerChain& c, std::size_t rank) {
  CheckReport rep("steinberg");
  const bool abelian = is_abelian(L, c.z);
  const bool minimal = c.z.dim() == rank;
  rep.values["abelian"] = abelian;
  rep.values["dim_z"] = c.z.dim();
  rep.expect(abelian == minimal, "z(e) abelian does not match dim z(e) = rk");
  return rep;
}

CheckReport springer_checks(const LieAlgebra& L, const SL2Triple& t, const GradedPieces& g, const CentralizerChain& c,
                            std::size_t rk, const Vec& q) {
  CheckReport rep("springer");
  const int top = g.max_degree();
  if (is_zero(q) || !g.piece(-top).contains(q)) throw Error(ErrorKind::InvalidSpec, "q must be nonzero in g(-height)");
  const long diff = static_cast<long>(g.piece(2).dim()) - static_cast<long>(g.piece(4).dim());
  rep.values["g2_minus_g4"] = diff;
  rep.expect(diff == 1, "dim g(2) - dim g(4) != 1");

  const Vec cvec = q + t.e;
  const Subspace zc = kernel(L.ad(cvec));
  rep.values["dim_zc"] = zc.dim();
  rep.expect(zc.dim() == rk, "dim z(c) != rk");
  rep.expect(is_abelian(L, zc), "z(c) is not abelian");
  rep.expect(determinant(gram(L, zc.basis())) != 0, "Killing form degenerate on z(c)");

  const Subspace neg = g.range(-top, -1);
  const QMatrix adc = L.ad(cvec);
  std::vector<Vec> cols;
  for (const auto& b : neg.basis()) cols.push_back(adc * b);
  const QMatrix a = QMatrix::from_columns(cols, L.dim());
  rep.expect(rank(a) == neg.dim(), "ad c is not injective on the negative part");
  for (const auto& x : c.z.basis()) {
    const auto y = solve(a, Rational(-1) * (adc * x));
    if (!y) throw Error(ErrorKind::SolveFailed, "no negative correction puts x into z(c)");
    Vec z = zero_vec(L.dim());
    for (std::size_t k = 0; k < neg.dim(); ++k) axpy(z, (*y)[k], neg.basis(k));
    rep.expect(zc.contains(x + z), "x + z is not in z(c)");
  }
  return rep;
}

const char* to_string(ElashviliBasis b) {
  switch (b) {
    case ElashviliBasis::Zero: return "zero";
    case ElashviliBasis::Regular: return "regular";
    case ElashviliBasis::Subregular: return "subregular";
    case ElashviliBasis::HeightTwo: return "height2";
    case ElashviliBasis::TypeA: return "typeA";
    case ElashviliBasis::Conjecture: return "conjecture";
  }
  return "conjecture";
}

CheckReport elashvili_check(const LieAlgebra& L, const CentralizerChain& c, std::size_t rank, std::size_t ht,
                            bool type_a, const RandomCfg& cfg) {
  CheckReport rep("elashvili");
  const InducedAlgebra z = induced_subalgebra(L, c.z);
  const IndexResult r = index_of(z.algebra, cfg);
  ElashviliBasis basis = ElashviliBasis::Conjecture;
  if (c.z.dim() == L.dim())
    basis = ElashviliBasis::Zero;
  else if (c.z.dim() == rank)
    basis = ElashviliBasis::Regular;
  else if (c.z.dim() == rank + 2)
    basis = ElashviliBasis::Subregular;
  else if (ht == 2)
    basis = ElashviliBasis::HeightTwo;
  else if (type_a)
    basis = ElashviliBasis::TypeA;
  const bool holds = r.index == rank;
  rep.values["ind_z"] = r.index;
  rep.values["rk"] = rank;
  rep.values["predicted_by"] = to_string(basis);
  rep.values["index"] = index_json(r);
  rep.report("holds", holds);
  if (basis == ElashviliBasis::Conjecture)
    rep.status = Status::Reported;
  else
    rep.expect(holds, "ind z(e) != rk g");
  return rep;
}

HeartBasis heart_basis(const SL2Triple& t, const GradedPieces& g, const CentralizerChain& c) {
  HeartBasis hb;
  for (const auto& [i, d] : g.dims(c.d)) {
    const Subspace p = g.part(c.d, i);
    if (i == 2 && p.dim() == 1 && p.contains(t.e)) {
      hb.basis.push_back(t.e);
      hb.degrees.push_back(i);
      continue;
    }
    for (const auto& b : p.basis()) {
      hb.basis.push_back(b);
      hb.degrees.push_back(i);
    }
  }
  return hb;
}

CheckReport heart_conditions(const LieAlgebra& L, const SL2Triple& t, const HeartBasis& hb, bool expect_heart1) {
  CheckReport rep("heart");
  const std::size_t l = hb.basis.size();
  bool even = std::all_of(hb.degrees.begin(), hb.degrees.end(), [](int d) { return d % 2 == 0; });
  Json ms = Json::array();
  for (int d : hb.degrees) ms.push_back(d / 2);

  bool heart2 = even;
  for (std::size_t i = 1; i < l; ++i) heart2 = heart2 && hb.degrees[i] > hb.degrees[i - 1];
  for (std::size_t i = 1; i <= l; ++i)
    for (std::size_t j = 1; i + j - 1 <= l; ++j)
      heart2 = heart2 && hb.degrees[i - 1] + hb.degrees[j - 1] - 2 == hb.degrees[i + j - 2];

  bool heart1 = true;
  std::map<std::pair<std::size_t, std::size_t>, Rational> alpha;
  Json table = Json::array();
  for (std::size_t i = 1; i <= l; ++i)
    for (std::size_t j = 1; i + j - 1 <= l; ++j) {
      const Vec v = L.bracket(L.bracket(t.f, hb.basis[j - 1]), hb.basis[i - 1]);
      const auto a = proportion(v, hb.basis[i + j - 2]);
      if (!a || *a == 0) {
        heart1 = false;
        continue;
      }
      alpha[{i, j}] = *a;
      table.push_back(Json{i, j, to_string(*a)});
    }

  // With e_i a multiple c_i of the matrix power e^(m_i), the table is
  // -2 m_i m_j; fit c_1 = c_2 = 1 and c_k from the (2, k-1) entries.
  bool matches_powers = heart1 && even;
  if (matches_powers) {
    auto target = [&](std::size_t i, std::size_t j) {
      return Rational(-2 * (hb.degrees[i - 1] / 2) * (hb.degrees[j - 1] / 2));
    };
    std::vector<Rational> c(l + 1, Rational(1));
    for (std::size_t k = 3; k <= l; ++k) c[k] = alpha.at({2, k - 1}) * c[2] * c[k - 1] / target(2, k - 1);
    for (const auto& [ij, a] : alpha) {
      const auto [i, j] = ij;
      if (a * c[i] * c[j] / c[i + j - 1] != target(i, j)) matches_powers = false;
    }
  }

  rep.values["heart1"] = heart1;
  rep.values["heart2"] = heart2;
  rep.values["m_sequence"] = ms;
  rep.values["alpha"] = table;
  rep.values["alpha_matches_powers"] = matches_powers;
  if (heart1) rep.values["orbit_count"] = l + 1;
  rep.expect(!heart1 || heart2, "first condition holds without the second");
  if (heart2 && l >= 2) {
    const int m2 = hb.degrees[1] / 2;
    for (std::size_t i = 1; i <= l; ++i)
      rep.expect(hb.degrees[i - 1] / 2 == 1 + static_cast<int>(i - 1) * (m2 - 1), "m-sequence is not an arithmetic progression");
  }
  if (expect_heart1) {
    rep.expect(heart1, "first condition fails");
    rep.expect(matches_powers, "alpha table does not match 2ij up to scaling");
  } else if (rep.status == Status::Pass) {
    rep.status = Status::Reported;
  }
  return rep;
}

CheckReport normaliser_index_checks(const LieAlgebra& L, const CentralizerChain& c, std::size_t rank,
                                    const RandomCfg& cfg) {
  CheckReport rep("thm44");
  const InducedAlgebra n = induced_subalgebra(L, c.n);
  const InducedAlgebra z = induced_subalgebra(L, c.z);
  const IndexResult ind_n = index_of(n.algebra, cfg.with_seed(derive_seed(cfg.seed, "n")));
  const IndexResult ind_z = index_of(z.algebra, cfg.with_seed(derive_seed(cfg.seed, "z")));
  const IndexResult ind_nz = index_of_rep(induced_rep(L, n, c.z), cfg.with_seed(derive_seed(cfg.seed, "n-on-z")));
  const IndexResult ind_nd = index_of_rep(induced_rep(L, n, c.d), cfg.with_seed(derive_seed(cfg.seed, "n-on-d")));
  const long dd = static_cast<long>(c.d.dim());
  const long in = static_cast<long>(ind_n.index), iz = static_cast<long>(ind_z.index);
  const long inz = static_cast<long>(ind_nz.index), ind = static_cast<long>(ind_nd.index);
  const long rk = static_cast<long>(rank);
  rep.values["ind_n"] = in;
  rep.values["ind_z"] = iz;
  rep.values["ind_n_on_z"] = inz;
  rep.values["ind_n_on_d"] = ind;
  rep.values["dim_d"] = dd;
  rep.expect(in >= iz - dd, "ind n < ind z - dim d");
  rep.expect(iz >= rk, "ind z < rk");
  rep.expect(inz >= iz - dd, "ind(n, z) < ind z - dim d");
  rep.expect(iz + in <= dd + 2 * inz, "ind z + ind n > dim d + 2 ind(n, z)");
  const bool open = ind == 0;
  rep.values["open_orbit"] = open;
  if (open) {
    rep.expect(inz == in, "ind(n, z) != ind n although ind(n, d) = 0");
    rep.expect(in == iz - dd, "ind n != ind z - dim d although ind(n, d) = 0");
  }
  rep.report("conj61", in == rk - dd);
  rep.report("conj62", inz == rk - dd);
  return rep;
}

SL2Triple principal_triple(const ChevalleyAlgebra& g) {
  const LieAlgebra& L = *g.algebra;
  const std::size_t r = g.datum.rank(), n = L.dim();
  QMatrix at(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) at(j, i) = g.datum.cartan[i][j];
  const auto coef = solve(at, Vec(r, Rational(2)));
  if (!coef) throw Error(ErrorKind::SolveFailed, "no dominant h with all simple labels 2");
  SL2Triple t;
  t.e = regular_nilpotent(g);
  t.h = zero_vec(n);
  for (std::size_t i = 0; i < r; ++i) t.h[g.cartan_index(i)] = (*coef)[i];
  std::vector<Vec> neg, cols;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> a = g.datum.positive[i];
    for (auto& x : a) x = -x;
    neg.push_back(unit_vec(n, g.root_index.at(a)));
    cols.push_back(L.bracket(t.e, neg.back()));
  }
  const auto y = solve(QMatrix::from_columns(cols, n), t.h);
  if (!y) throw Error(ErrorKind::SolveFailed, "no f in g(-2) with [e, f] = h");
  t.f = zero_vec(n);
  for (std::size_t i = 0; i < r; ++i) axpy(t.f, (*y)[i], neg[i]);
  if (!is_sl2_triple(L, t)) throw Error(ErrorKind::CompletionFailed, "principal triple fails the bracket relations");
  return t;
}

namespace {

struct RegularSetup {
  SL2Triple t;
  GradedPieces g;
  Vec e_lambda, e_minus_lambda;
};

RegularSetup regular_setup(const ChevalleyAlgebra& ch) {
  const LieAlgebra& L = *ch.algebra;
  RegularSetup s;
  s.t = principal_triple(ch);
  s.g = grading(L, s.t.h);
  std::vector<int> lam = ch.highest_root(), neg = lam;
  for (auto& x : neg) x = -x;
  s.e_lambda = unit_vec(L.dim(), ch.root_index.at(lam));
  s.e_minus_lambda = unit_vec(L.dim(), ch.root_index.at(neg));
  return s;
}

}  // namespace

CheckReport regular_suite(const ChevalleyAlgebra& ch, const RandomCfg& cfg) {
  CheckReport rep("regular_suite");
  const LieAlgebra& L = *ch.algebra;
  const std::size_t n = L.dim(), p = ch.datum.rank();
  const RegularSetup s = regular_setup(ch);
  const SL2Triple& t = s.t;

  // (a) f-hat from [e, f-hat] = h_lambda inside the negative nilradical
  const Vec h_lambda = L.bracket(s.e_lambda, s.e_minus_lambda);
  std::vector<Vec> neg, cols;
  for (std::size_t k = 0; k < ch.positive_count(); ++k) {
    std::vector<int> a = ch.datum.positive[k];
    for (auto& x : a) x = -x;
    neg.push_back(unit_vec(n, ch.root_index.at(a)));
    cols.push_back(L.bracket(t.e, neg.back()));
  }
  const auto y = solve(QMatrix::from_columns(cols, n), h_lambda);
  if (!y) throw Error(ErrorKind::SolveFailed, "no f-hat in u- with [e, f-hat] = h_lambda");
  Vec fhat = zero_vec(n);
  for (std::size_t k = 0; k < neg.size(); ++k) axpy(fhat, (*y)[k], neg[k]);
  const Subspace z_fhat = kernel(L.ad(fhat));
  rep.expect(s.g.piece(-2).contains(fhat), "f-hat is not in g(-2)");
  rep.expect(is_ad_nilpotent(L, fhat) && z_fhat.dim() == p, "f-hat is not regular nilpotent");

  // (b)
  const Subspace z = kernel(L.ad(t.e));
  const Subspace zc = kernel(L.ad(t.e + s.e_minus_lambda));
  rep.expect(is_direct(z, z_fhat) && subspace_sum(z, z_fhat).contains(zc), "z(c) is not inside z(e) + z(f-hat)");

  // (c), (d)
  const Subspace ge = full_image(L, t.e);
  rep.expect(is_sum(z_fhat, ge, Subspace::full(n)), "z(f-hat) + [g, e] != g");
  const Subspace a = bracket_space(L, s.e_minus_lambda, bracket_space(L, t.f, z));
  rep.values["dim_A"] = a.dim();
  rep.expect(a.dim() == p && is_sum(a, ge, Subspace::full(n)), "[e_-lambda, [f, z(e)]] + [g, e] != g");

  // (e)
  const CentralizerChain c = centralizer_chain(L, t);
  const InducedAlgebra nalg = induced_subalgebra(L, c.n);
  const IndexResult ind = index_of(nalg.algebra, cfg);
  Vec xi(nalg.algebra.dim());
  for (std::size_t k = 0; k < xi.size(); ++k) xi[k] = L.killing_pair(s.e_minus_lambda, nalg.embedding.row(k));
  const bool nonsingular = determinant(evaluate(kirillov_pencil(nalg.algebra), xi)) != 0;
  rep.values["dim_n"] = c.n.dim();
  rep.values["dim_z"] = c.z.dim();
  rep.values["dim_d"] = c.d.dim();
  rep.values["ind_n"] = ind.index;
  rep.values["nonsingular_at_e_minus_lambda"] = nonsingular;
  rep.expect(ind.index == 0, "n(e) is not Frobenius");
  rep.expect(nonsingular, "Kirillov matrix of n(e) is singular at e_-lambda");
  return rep;
}

CheckReport d_matrix_checks(const ChevalleyAlgebra& ch, const RandomCfg& cfg) {
  CheckReport rep("dmatrix");
  const LieAlgebra& L = *ch.algebra;
  const std::size_t n = L.dim(), p = ch.datum.rank();
  const RegularSetup s = regular_setup(ch);
  const SL2Triple& t = s.t;
  const Subspace z = kernel(L.ad(t.e));
  std::vector<Vec> zb;
  std::vector<int> m;
  for (const auto& [i, d] : s.g.dims(z)) {
    const Subspace zi = s.g.part(z, i);
    for (const auto& b : zi.basis()) {
      zb.push_back(b);
      m.push_back(i / 2);
    }
  }
  Json ms = Json::array();
  for (int x : m) ms.push_back(x);
  rep.values["exponents"] = ms;

  auto entry = [&](const Vec& a, const Vec& b) { return L.bracket(a, L.bracket(b, t.f)); };
  auto coeff_of_top = [&](const Vec& v) { return L.killing_pair(v, s.e_minus_lambda); };
  auto build = [&](const std::vector<Vec>& basis) {
    std::vector<std::vector<Vec>> dm(p, std::vector<Vec>(p));
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) dm[i][j] = entry(basis[i], basis[j]);
    return dm;
  };
  auto eval = [&](const std::vector<std::vector<Vec>>& dm, const Vec& yv) {
    QMatrix out(p, p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) out(i, j) = L.killing_pair(dm[i][j], yv);
    return out;
  };

  auto dm = build(zb);
  bool symmetric = true, in_z = true;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      symmetric = symmetric && dm[i][j] == dm[j][i];
      in_z = in_z && z.contains(dm[i][j]);
    }
  rep.values["symmetric"] = symmetric;
  rep.expect(in_z, "entries are not in z(e)");
  rep.expect(symmetric, "D is not symmetric");

  const Rational det0 = determinant(eval(dm, s.e_minus_lambda));
  rep.values["det_at_e_minus_lambda"] = to_string(det0);
  rep.expect(det0 != 0, "D is singular at e_-lambda");
  Rational norm = L.killing_pair(s.e_lambda, s.e_minus_lambda);
  Rational cfit = det0;
  for (std::size_t k = 0; k < p; ++k) cfit /= norm;
  const Subspace zf = kernel(L.ad(t.f));
  SeededRng rng(derive_seed(cfg.seed, "dmatrix-points"));
  const auto bound = static_cast<std::int64_t>(cfg.coeff_bound);
  bool law = true;
  const int points = 5;
  for (int k = 0; k < points; ++k) {
    Vec yv = zero_vec(n);
    for (const auto& b : zf.basis()) axpy(yv, Rational(rng.uniform(-bound, bound)), b);
    Rational rhs = cfit;
    const Rational phi = L.killing_pair(s.e_lambda, yv);
    for (std::size_t q = 0; q < p; ++q) rhs *= phi;
    law = law && determinant(eval(dm, yv)) == rhs;
  }
  rep.values["determinant_constant"] = to_string(cfit);
  rep.values["determinant_points"] = points + 1;
  rep.report("determinant_law", law);
  if (!law) rep.values["identification_question"] = true;

  // Repeated exponents: rechoose the basis of that 2-dim eigenspace so
  // that D becomes triangular. The new vector is isotropic for the form
  // (a, b) -> coefficient of e_lambda in [a, [b, f]], so it may only exist
  // over Q(sqrt(disc)); then the block identities are checked there.
  std::vector<Vec> basis = zb;
  bool rechosen = false;
  std::optional<std::size_t> ext_at;
  QuadNum ext_mu;
  for (std::size_t i = 0; i + 1 < p; ++i) {
    if (m[i] != m[i + 1]) continue;
    if (i + 2 < p && m[i + 2] == m[i]) {
      rep.expect(false, "exponent of multiplicity above two");
      break;
    }
    const Vec& u = zb[i];
    const Vec& w = zb[i + 1];
    const auto a = proportion(entry(u, u), s.e_lambda), b = proportion(entry(u, w), s.e_lambda),
               c = proportion(entry(w, w), s.e_lambda);
    if (!a || !b || !c || i + i + 1 != p - 1) {
      rep.expect(false, "repeated block is not on the antidiagonal");
      break;
    }
    const Rational A = *a, B = *b, C = *c, disc = B * B - A * C;
    rep.values["repeated_form"] = Json::array({to_string(A), to_string(B), to_string(C)});
    std::optional<Vec> iso;
    if (C == 0) {
      iso = w;
    } else if (A == 0) {
      iso = u;
    } else if (auto root = rational_sqrt(disc)) {
      iso = ((-B + *root) / A) * u + w;
    }
    if (iso) {
      const Vec other = coeff_of_top(entry(u, *iso)) != 0 ? u : w;
      basis[i] = other;
      basis[i + 1] = *iso;
      rechosen = true;
      continue;
    }
    // w' = alpha u + w with alpha = (-B + sqrt(disc)) / A
    const QuadNum alpha{disc, -B / A, 1 / A};
    const QuadNum q = alpha * alpha * A + alpha * (2 * B) + QuadNum{disc, C, 0};
    ext_mu = alpha * A + QuadNum{disc, B, 0};
    rep.values["extension"] = "sqrt(" + to_string(disc) + ")";
    rep.expect(q.is_zero(), "isotropic vector over the quadratic extension fails");
    rep.expect(!ext_mu.is_zero(), "rechosen antidiagonal entry vanishes");
    ext_at = i;
    rechosen = true;
  }
  rep.values["rechosen"] = rechosen;
  const auto tri = build(basis);
  bool below_zero = true, anti_ok = true;
  Json mu = Json::array();
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      const bool in_ext = ext_at && (i == *ext_at || i == *ext_at + 1) && (j == *ext_at || j == *ext_at + 1);
      if (in_ext) {
        if (i == *ext_at && j == i + 1) mu.push_back(ext_mu.str());
        continue;
      }
      if (i + j > p - 1) below_zero = below_zero && is_zero(tri[i][j]);
      if (i + j == p - 1) {
        const auto a = proportion(tri[i][j], s.e_lambda);
        anti_ok = anti_ok && a && *a != 0;
        if (a && i <= j) mu.push_back(to_string(*a));
      }
    }
  rep.values["mu"] = mu;
  rep.expect(below_zero, "entries below the antidiagonal do not vanish");
  rep.expect(anti_ok, "antidiagonal entries are not nonzero multiples of e_lambda");
  return rep;
}

OrbitInput orbit_input(const ClassicalAlgebra& g, const Partition& p) {
  OrbitInput in;
  in.algebra = g.algebra;
  in.rank = g.type.rank;
  in.type_name = g.type.name();
  in.label = to_string(p);
  in.e = nilpotent_from_partition(g, p);
  in.classical = &g;
  in.partition = p;
  return in;
}

OrbitInput orbit_input_search(const ChevalleyAlgebra& g, std::size_t target_dim_z, std::uint64_t seed) {
  auto e = nilpotent_search(g, target_dim_z, 5000, seed);
  if (!e) throw Error(ErrorKind::InvalidSpec, "no nilpotent with dim z = " + std::to_string(target_dim_z) + " found");
  OrbitInput in;
  in.algebra = g.algebra;
  in.rank = g.datum.rank();
  in.type_name = g.datum.label;
  in.label = "search:" + std::to_string(target_dim_z);
  in.e = *e;
  return in;
}

namespace {

// Nonzero matrix powers of e (odd powers only when odd_only).
Subspace power_span(const ClassicalAlgebra& g, const Vec& e, bool odd_only) {
  const QMatrix m = g.to_matrix(e);
  std::vector<Vec> vs;
  QMatrix pw = m;
  for (std::size_t k = 1; !pw.is_zero(); ++k, pw = pw * m)
    if (!odd_only || k % 2 == 1) vs.push_back(g.from_matrix(pw));
  return Subspace::span(g.algebra->dim(), vs);
}

Json skipped(const std::string& why) { return Json{{"status", "skipped"}, {"detail", why}}; }

}  // namespace

OrbitReport orbit_report(const OrbitInput& in, const RandomCfg& cfg) {
  const LieAlgebra& L = *in.algebra;
  const std::size_t n = L.dim(), rk = in.rank;
  auto seed_for = [&](const std::string& what) {
    return cfg.with_seed(derive_seed(cfg.seed, in.type_name + "/" + in.label + "/" + what));
  };
  OrbitReport out;
  Json& j = out.json;
  j["type"] = in.type_name;
  j["rank"] = rk;
  j["label"] = in.label;
  j["partition"] = in.partition ? Json(to_string(*in.partition)) : Json(nullptr);
  j["dim_g"] = n;
  j["rk_g"] = rk;
  j["seed"] = cfg.seed;
  j["trials"] = cfg.trials;
  j["coeff_bound"] = cfg.coeff_bound;
  Json checks = Json::object();
  auto add = [&](const CheckReport& r) {
    checks[r.name] = r.to_json();
    if (r.failed()) out.failed = true;
  };

  if (is_zero(in.e)) {
    const IndexResult ind = index_of(L, seed_for("g"));
    j["dim_z"] = n;
    j["dim_d"] = 0;
    j["dim_n"] = n;
    j["height"] = 0;
    j["is_even"] = true;
    j["is_distinguished"] = false;
    j["grading"] = Json::array({Json::array({0, n})});
    j["m_sequence"] = Json::array();
    j["ind_z"] = ind.index;
    j["ind_n"] = ind.index;
    j["ind_n_on_z"] = ind.index;
    j["ind_n_on_d"] = 0;
    j["heart1"] = true;
    j["heart2"] = true;
    CheckReport el("elashvili");
    el.values["ind_z"] = ind.index;
    el.values["rk"] = rk;
    el.values["predicted_by"] = to_string(ElashviliBasis::Zero);
    el.report("holds", ind.index == rk);
    el.expect(ind.index == rk, "ind g != rk g");
    add(el);
    for (const char* name : {"prop21", "thm23", "thm24", "prop26", "steinberg", "springer", "heart", "thm44",
                             "regular_suite", "dmatrix"})
      checks[name] = skipped("zero orbit");
    j["elashvili_ok"] = ind.index == rk;
    j["conj61_ok"] = ind.index == rk;
    j["conj62_ok"] = ind.index == rk;
    j["checks"] = checks;
    return out;
  }

  const SL2Triple t = sl2_complete(L, in.e);
  const GradedPieces g = grading(L, t.h);
  const std::size_t ht = height(L, t, g);
  const CentralizerChain c = centralizer_chain(L, t);
  const HeartBasis hb = heart_basis(t, g, c);

  Json grading_json = Json::array();
  bool even = true;
  for (const auto& [i, p] : g.pieces()) {
    grading_json.push_back(Json::array({i, p.dim()}));
    even = even && i % 2 == 0;
  }
  Json ms = Json::array();
  for (int d : hb.degrees) ms.push_back(d / 2);
  j["dim_z"] = c.z.dim();
  j["dim_d"] = c.d.dim();
  j["dim_n"] = c.n.dim();
  j["height"] = ht;
  j["is_even"] = even;
  j["is_distinguished"] = g.part(c.z, 0).is_zero();
  j["grading"] = grading_json;
  j["m_sequence"] = ms;

  add(check_prop21(L, t, g, c));
  add(check_thm23(L, t, g, c));
  add(check_thm24(L, c));
  CheckReport p26 = check_prop26(g, c);
  const bool regular = c.z.dim() == rk;
  const bool subregular = c.z.dim() == rk + 2;
  p26.values["dim_d_le_rk"] = c.d.dim() <= rk;
  p26.expect(c.d.dim() <= rk, "dim d(e) > rk");
  if (c.d.dim() == rk)
    p26.expect(regular || (in.type_name == "G2" && subregular), "dim d(e) = rk outside the regular and G2-subregular cases");
  add(p26);
  add(check_steinberg(L, c, rk));
  if (regular) {
    const Subspace low = g.piece(-static_cast<int>(ht));
    SeededRng rng(seed_for("springer-q").seed);
    Vec q = zero_vec(n);
    while (is_zero(q))
      for (const auto& b : low.basis()) axpy(q, Rational(rng.uniform(1, static_cast<std::int64_t>(cfg.coeff_bound))), b);
    add(springer_checks(L, t, g, c, rk, q));
  } else {
    checks["springer"] = skipped("z(e) is not abelian");
  }
  const bool type_a = in.classical && in.classical->type.family == 'A';
  const CheckReport el = elashvili_check(L, c, rk, ht, type_a, seed_for("elashvili"));
  add(el);

  bool expect_heart1 = c.d.dim() <= 2;
  if (in.classical && in.partition) {
    const char fam = in.classical->type.family;
    const bool odd_powers = fam != 'A';
    const bool theorem = fam != 'D' || in.partition->size() >= 3;
    expect_heart1 = expect_heart1 || theorem;
    // For orthogonal algebras the power description misses d(e) on e.g.
    // (3,3,1) and (5,3,1), where the two largest parts are odd and exceed
    // the rest; there it is only reported.
    if (theorem) {
      const bool powers = power_span(*in.classical, in.e, odd_powers) == c.d;
      const bool asserted = fam == 'A' || fam == 'C';
      const char* status = powers ? (asserted ? "pass" : "reported") : (asserted ? "fail" : "reported");
      checks["d_powers"] = Json{{"status", status}, {"detail", powers ? "" : "d(e) != span of powers"}, {"holds", powers}};
      if (!powers && asserted) out.failed = true;
    }
  }
  CheckReport heart = heart_conditions(L, t, hb, expect_heart1);
  add(heart);
  CheckReport n44 = normaliser_index_checks(L, c, rk, seed_for("normaliser"));
  if (heart.values["heart1"].get<bool>())
    n44.expect(n44.values["open_orbit"].get<bool>(), "first condition holds but ind(n, d) != 0");
  add(n44);
  checks["regular_suite"] = skipped("runs on the principal triple of a Chevalley basis");
  checks["dmatrix"] = skipped("runs on the principal triple of a Chevalley basis");

  j["ind_z"] = el.values["ind_z"];
  j["ind_n"] = n44.values["ind_n"];
  j["ind_n_on_z"] = n44.values["ind_n_on_z"];
  j["ind_n_on_d"] = n44.values["ind_n_on_d"];
  j["heart1"] = heart.values["heart1"];
  j["heart2"] = heart.values["heart2"];
  j["elashvili_ok"] = el.values["holds"];
  j["conj61_ok"] = n44.values["conj61"];
  j["conj62_ok"] = n44.values["conj62"];
  j["checks"] = checks;
  return out;
}

}  // namespace lieindex
