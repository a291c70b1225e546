#include <doctest.h>

#include "lieindex/error.hpp"
#include "lieindex/nilanalysis.hpp"
#include "test_util.hpp"

using namespace lieindex;

namespace {

struct Orbit {
  SL2Triple t;
  GradedPieces g;
  CentralizerChain c;
};

Orbit orbit(const ClassicalAlgebra& alg, const Partition& p) {
  Orbit o;
  o.t = sl2_complete(*alg.algebra, nilpotent_from_partition(alg, p));
  o.g = grading(*alg.algebra, o.t.h);
  o.c = centralizer_chain(*alg.algebra, o.t);
  return o;
}

std::map<int, std::size_t> piece_dims(const GradedPieces& g) {
  std::map<int, std::size_t> out;
  for (const auto& [i, p] : g.pieces()) out[i] = p.dim();
  return out;
}

}  // namespace

TEST_CASE("grading") {
  ClassicalAlgebra a1 = classical({'A', 1});
  GradedPieces zero = grading(*a1.algebra, zero_vec(3));
  CHECK(piece_dims(zero) == std::map<int, std::size_t>{{0, 3}});
  Orbit o = orbit(a1, {2});
  CHECK(piece_dims(o.g) == std::map<int, std::size_t>{{-2, 1}, {0, 1}, {2, 1}});
  CHECK_THROWS_AS(grading(*a1.algebra, nilpotent_from_partition(a1, {2})), Error);

  ChevalleyAlgebra g2 = chevalley("G2");
  auto e = nilpotent_search(g2, 4, 500, 7);
  REQUIRE(e);
  SL2Triple t = sl2_complete(*g2.algebra, *e);
  GradedPieces g = grading(*g2.algebra, t.h);
  CHECK(g.piece(2).dim() == 4);
  CHECK(g.piece(4).dim() == 1);
}

TEST_CASE("height") {
  ClassicalAlgebra a1 = classical({'A', 1});
  Orbit o = orbit(a1, {2});
  CHECK(height(*a1.algebra, o.t, o.g) == 2);
  ClassicalAlgebra a3 = classical({'A', 3});
  Orbit p = orbit(a3, {2, 2});
  CHECK(height(*a3.algebra, p.t, p.g) == 2);
  ChevalleyAlgebra g2 = chevalley("G2");
  SL2Triple t = principal_triple(g2);
  CHECK(height(*g2.algebra, t, grading(*g2.algebra, t.h)) == 10);
}

TEST_CASE("centraliser chain") {
  ClassicalAlgebra a1 = classical({'A', 1});
  Orbit o = orbit(a1, {2});
  CHECK(o.c.z == Subspace::span(3, {o.t.e}));
  CHECK(o.c.d == Subspace::span(3, {o.t.e}));
  CHECK(o.c.n == Subspace::span(3, {o.t.e, o.t.h}));

  ClassicalAlgebra a3 = classical({'A', 3});
  for (const auto& p : admissible_partitions(a3.type)) {
    if (p == Partition{1, 1, 1, 1}) continue;
    Orbit x = orbit(a3, p);
    const QMatrix m = a3.to_matrix(x.t.e);
    std::vector<Vec> powers;
    for (QMatrix pw = m; !pw.is_zero(); pw = pw * m) powers.push_back(a3.from_matrix(pw));
    CHECK(x.c.d == Subspace::span(15, powers));
  }
  ClassicalAlgebra d4 = classical({'D', 4});
  Orbit s = orbit(d4, {5, 3});
  CHECK(s.c.z.dim() == 6);
  CHECK(s.c.d.dim() == 3);
  CHECK(s.c.n.dim() == 9);
}

TEST_CASE("structural checks") {
  ClassicalAlgebra a2 = classical({'A', 2});
  for (auto t : {ClassicalType{'A', 2}, ClassicalType{'B', 2}, ClassicalType{'C', 2}, ClassicalType{'A', 3}}) {
    ClassicalAlgebra g = classical(t);
    for (const auto& p : admissible_partitions(t)) {
      if (p == Partition(t.n(), 1)) continue;
      CAPTURE(t.name());
      CAPTURE(to_string(p));
      Orbit o = orbit(g, p);
      const LieAlgebra& L = *g.algebra;
      CHECK_FALSE(check_prop21(L, o.t, o.g, o.c).failed());
      CHECK_FALSE(check_thm23(L, o.t, o.g, o.c).failed());
      CHECK_FALSE(check_thm24(L, o.c).failed());
      CHECK_FALSE(check_prop26(o.g, o.c).failed());
      CHECK_FALSE(check_steinberg(L, o.c, t.rank).failed());
    }
  }
  Orbit r = orbit(a2, {3});
  auto degs = check_prop26(r.g, r.c).values["degrees"];
  CHECK(degs == Json::array({2, 4}));
  ClassicalAlgebra a3 = classical({'A', 3});
  Orbit h2 = orbit(a3, {2, 2});
  CHECK(check_prop26(h2.g, h2.c).values["degrees"] == Json::array({2}));
  CheckReport st = check_steinberg(*a3.algebra, h2.c, 3);
  CHECK(st.values["abelian"] == false);
  CHECK(st.values["dim_z"] == 7);
  ClassicalAlgebra d4 = classical({'D', 4});
  Orbit s = orbit(d4, {5, 3});
  CheckReport t24 = check_thm24(*d4.algebra, s.c);
  CHECK_FALSE(t24.failed());
  CHECK(t24.values["gram_size"] == 6);
  CHECK(check_prop26(s.g, s.c).values["degrees"] == Json::array({2, 6, 6}));
}

TEST_CASE("Springer checks for regular elements") {
  ClassicalAlgebra a1 = classical({'A', 1});
  Orbit o = orbit(a1, {2});
  CheckReport s = springer_checks(*a1.algebra, o.t, o.g, o.c, 1, o.t.f);
  CHECK_FALSE(s.failed());
  CHECK(s.values["dim_zc"] == 1);
  ClassicalAlgebra a2 = classical({'A', 2});
  Orbit r = orbit(a2, {3});
  CheckReport s3 = springer_checks(*a2.algebra, r.t, r.g, r.c, 2, r.g.piece(-4).basis(0));
  CHECK_FALSE(s3.failed());
  ChevalleyAlgebra g2 = chevalley("G2");
  SL2Triple t = principal_triple(g2);
  GradedPieces g = grading(*g2.algebra, t.h);
  CentralizerChain c = centralizer_chain(*g2.algebra, t);
  std::vector<int> low{-3, -2};
  CHECK_FALSE(springer_checks(*g2.algebra, t, g, c, 2, unit_vec(14, g2.root_index.at(low))).failed());
  CHECK_THROWS_AS(springer_checks(*a1.algebra, o.t, o.g, o.c, 1, o.t.e), Error);
}

TEST_CASE("Elashvili check") {
  ClassicalAlgebra a3 = classical({'A', 3});
  for (const auto& p : admissible_partitions(a3.type)) {
    if (p == Partition{1, 1, 1, 1}) continue;
    Orbit o = orbit(a3, p);
    CheckReport r = elashvili_check(*a3.algebra, o.c, 3, height(*a3.algebra, o.t, o.g), true, RandomCfg{});
    CHECK(r.values["ind_z"] == 3);
    CHECK(r.status == Status::Pass);
  }
  Orbit h2 = orbit(a3, {2, 2});
  CHECK(elashvili_check(*a3.algebra, h2.c, 3, 2, true, RandomCfg{}).values["predicted_by"] == "height2");
  ClassicalAlgebra d4 = classical({'D', 4});
  Orbit s = orbit(d4, {5, 3});
  CheckReport r = elashvili_check(*d4.algebra, s.c, 4, height(*d4.algebra, s.t, s.g), false, RandomCfg{});
  CHECK(r.values["ind_z"] == 4);
  CHECK(r.values["predicted_by"] == "subregular");
}

TEST_CASE("heart conditions") {
  ClassicalAlgebra a3 = classical({'A', 3});
  Orbit r = orbit(a3, {4});
  HeartBasis hb = heart_basis(r.t, r.g, r.c);
  CHECK(hb.basis.front() == r.t.e);
  CheckReport h = heart_conditions(*a3.algebra, r.t, hb, true);
  CHECK_FALSE(h.failed());
  CHECK(h.values["alpha_matches_powers"] == true);
  CHECK(h.values["m_sequence"] == Json::array({1, 2, 3}));

  ClassicalAlgebra c3 = classical({'C', 3});
  for (const auto& p : admissible_partitions(c3.type)) {
    if (p == Partition(6, 1)) continue;
    Orbit o = orbit(c3, p);
    CHECK_FALSE(heart_conditions(*c3.algebra, o.t, heart_basis(o.t, o.g, o.c), true).failed());
  }

  ClassicalAlgebra d4 = classical({'D', 4});
  Orbit s = orbit(d4, {5, 3});
  CheckReport hs = heart_conditions(*d4.algebra, s.t, heart_basis(s.t, s.g, s.c), false);
  CHECK(hs.values["heart2"] == false);
  CHECK(hs.values["heart1"] == false);
  CHECK(hs.values["m_sequence"] == Json::array({1, 3, 3}));
  CHECK(hs.status == Status::Reported);
}

TEST_CASE("normaliser index") {
  ClassicalAlgebra a3 = classical({'A', 3});
  Orbit h2 = orbit(a3, {2, 2});
  CheckReport n = normaliser_index_checks(*a3.algebra, h2.c, 3, RandomCfg{});
  CHECK_FALSE(n.failed());
  CHECK(n.values["ind_n"] == 2);
  Orbit r = orbit(a3, {4});
  CHECK(normaliser_index_checks(*a3.algebra, r.c, 3, RandomCfg{}).values["ind_n"] == 0);
  ClassicalAlgebra d4 = classical({'D', 4});
  Orbit s = orbit(d4, {5, 3});
  CheckReport ns = normaliser_index_checks(*d4.algebra, s.c, 4, RandomCfg{});
  CHECK_FALSE(ns.failed());
  CHECK(ns.values["ind_n"].get<long>() >= 1);
}

TEST_CASE("principal triples of Chevalley bases") {
  for (const char* name : {"A2", "B2", "G2", "C3", "A4", "D4"}) {
    CAPTURE(name);
    ChevalleyAlgebra g = chevalley(std::string(name));
    SL2Triple t = principal_triple(g);
    GradedPieces gr = grading(*g.algebra, t.h);
    CHECK(gr.piece(0) == g.cartan());
    CheckReport rs = regular_suite(g, RandomCfg{});
    CHECK_FALSE(rs.failed());
    CHECK(rs.values["ind_n"] == 0);
    CheckReport dm = d_matrix_checks(g, RandomCfg{});
    CHECK_FALSE(dm.failed());
    CHECK(dm.values["determinant_law"] == true);
  }
  CHECK(regular_suite(chevalley("A2"), RandomCfg{}).values["dim_n"] == 4);
  CHECK(regular_suite(chevalley("G2"), RandomCfg{}).values["dim_n"] == 4);
  CHECK(d_matrix_checks(chevalley("D4"), RandomCfg{}).values["rechosen"] == true);
}

TEST_CASE("orbit reports") {
  ClassicalAlgebra a1 = classical({'A', 1});
  OrbitReport r = orbit_report(orbit_input(a1, {2}), RandomCfg{});
  CHECK_FALSE(r.failed);
  CHECK(r.json["dim_z"] == 1);
  CHECK(r.json["dim_d"] == 1);
  CHECK(r.json["dim_n"] == 2);
  CHECK(r.json["height"] == 2);
  CHECK(r.json["ind_z"] == 1);
  CHECK(r.json["ind_n"] == 0);

  OrbitReport z = orbit_report(orbit_input(a1, {1, 1}), RandomCfg{});
  CHECK_FALSE(z.failed);
  CHECK(z.json["dim_z"] == 3);
  CHECK(z.json["ind_z"] == 1);
  CHECK(z.json["checks"]["prop21"]["status"] == "skipped");

  ClassicalAlgebra d4 = classical({'D', 4});
  OrbitReport s = orbit_report(orbit_input(d4, {5, 3}), RandomCfg{});
  CHECK_FALSE(s.failed);
  CHECK(s.json["dim_z"] == 6);
  CHECK(s.json["dim_d"] == 3);
  CHECK(s.json["heart2"] == false);

  ClassicalAlgebra a3 = classical({'A', 3});
  OrbitReport h = orbit_report(orbit_input(a3, {2, 2}), RandomCfg{});
  CHECK_FALSE(h.failed);
  CHECK(h.json["height"] == 2);
  CHECK(h.json["ind_z"] == 3);
  CHECK(h.json["dim_d"] == 1);
  CHECK(h.json["ind_n"] == 2);
  CHECK(orbit_report(orbit_input(a3, {2, 2}), RandomCfg{}).json.dump() == h.json.dump());

  ChevalleyAlgebra g2 = chevalley("G2");
  OrbitReport sub = orbit_report(orbit_input_search(g2, 4, 7), RandomCfg{});
  CHECK_FALSE(sub.failed);
  CHECK(sub.json["dim_d"] == 2);
}

TEST_CASE("orthogonal orbits where d(e) is not spanned by powers") {
  // d computed from brackets alone: x in z(e) with [x, z(e)] = 0
  auto oracle_d = [](const LieAlgebra& L, const Vec& e) {
    const std::size_t n = L.dim();
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(L.bracket(e, unit_vec(n, j)));
    const Subspace z = kernel(QMatrix::from_columns(cols, n));
    std::vector<Vec> zb = z.basis();
    QMatrix m(n * zb.size(), zb.size());
    for (std::size_t a = 0; a < zb.size(); ++a)
      for (std::size_t b = 0; b < zb.size(); ++b) {
        const Vec br = L.bracket(zb[b], zb[a]);
        for (std::size_t k = 0; k < n; ++k) m(a * n + k, b) = br[k];
      }
    return kernel(m).dim();
  };
  struct Case {
    ClassicalType t;
    Partition p;
    std::size_t dim_d;
    Json m;
  };
  for (const Case& c : {Case{{'B', 3}, {3, 3, 1}, 2, Json::array({1, 2})},
                        Case{{'B', 4}, {5, 3, 1}, 3, Json::array({1, 3, 3})},
                        Case{{'D', 4}, {3, 3, 1, 1}, 2, Json::array({1, 2})}}) {
    ClassicalAlgebra g = classical(c.t);
    Orbit o = orbit(g, c.p);
    CHECK(o.c.d.dim() == c.dim_d);
    CHECK(oracle_d(*g.algebra, o.t.e) == c.dim_d);
    CheckReport h = heart_conditions(*g.algebra, o.t, heart_basis(o.t, o.g, o.c), true);
    CHECK(h.values["m_sequence"] == c.m);
    CHECK(h.values["heart1"] == (c.dim_d == 2));
    OrbitReport r = orbit_report(orbit_input(g, c.p), RandomCfg{});
    CHECK(r.json["checks"]["d_powers"]["status"] == "reported");
    CHECK(r.json["checks"]["d_powers"]["holds"] == false);
  }
}
