#include <doctest.h>

#include <map>

#include "lieindex/construct.hpp"
#include "lieindex/error.hpp"
#include "test_util.hpp"

using namespace lieindex;

namespace {

std::map<int, std::size_t> eigen_dims(const LieAlgebra& L, const Vec& h, const Subspace* inside = nullptr) {
  std::map<int, std::size_t> out;
  const QMatrix adh = L.ad(h);
  const int span = static_cast<int>(2 * L.dim());
  std::size_t total = 0;
  for (int i = -span; i <= span; ++i) {
    QMatrix shift = QMatrix::identity(L.dim());
    shift *= Rational(i);
    QMatrix m = adh - shift;
    Subspace k = kernel(m);
    if (inside) k = subspace_intersect(k, *inside);
    if (k.dim()) out[i] = k.dim();
    total += k.dim();
  }
  REQUIRE(total == (inside ? inside->dim() : L.dim()));
  return out;
}

}  // namespace

TEST_CASE("classical dimensions") {
  CHECK(classical(ClassicalType{'A', 1}).algebra->dim() == 3);
  CHECK(classical(ClassicalType{'D', 4}).algebra->dim() == 28);
  CHECK(classical(ClassicalType{'C', 2}).algebra->dim() == 10);
  CHECK(classical(ClassicalType{'B', 2}).algebra->dim() == 10);
  CHECK(classical(ClassicalType{'A', 3}).algebra->dim() == 15);
  CHECK(classical(ClassicalType{'B', 3}).algebra->dim() == 21);
  CHECK_THROWS_AS(classical(ClassicalType{'D', 2}), Error);
  CHECK_THROWS_AS(classical(ClassicalType{'B', 1}), Error);
  CHECK_THROWS_AS(ClassicalType::parse("X3"), Error);
  CHECK(ClassicalType::parse("d4").name() == "D4");
}

TEST_CASE("classical realizations preserve their forms") {
  for (auto t : {ClassicalType{'A', 2}, ClassicalType{'B', 2}, ClassicalType{'C', 2}, ClassicalType{'D', 4}}) {
    ClassicalAlgebra g = classical(t);
    CHECK(g.algebra->validate());
    CHECK(determinant(g.algebra->killing()) != 0);
    for (const auto& b : g.basis) {
      if (t.family == 'A')
        CHECK(b.trace() == 0);
      else
        CHECK((b.transpose() * g.form + g.form * b).is_zero());
    }
    // the commutator of basis matrices agrees with the structure constants
    for (std::size_t i = 0; i < g.basis.size(); i += 3)
      for (std::size_t j = 0; j < g.basis.size(); j += 2) {
        QMatrix c = g.basis[i] * g.basis[j] - g.basis[j] * g.basis[i];
        CHECK(g.to_matrix(g.algebra->bracket(unit_vec(g.basis.size(), i), unit_vec(g.basis.size(), j))) == c);
      }
    CHECK(g.diagonal().dim() == t.rank);
    const std::size_t npos = (g.algebra->dim() - t.rank) / 2;
    CHECK(g.upper_nilpotent_basis().size() == npos);
  }
}

TEST_CASE("admissible partitions") {
  CHECK(admissible_partitions({'A', 1}) == std::vector<Partition>{{2}, {1, 1}});
  CHECK(admissible_partitions({'C', 2}) == std::vector<Partition>{{4}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  auto d4 = admissible_partitions({'D', 4});
  CHECK(std::find(d4.begin(), d4.end(), Partition{5, 3}) != d4.end());
  CHECK(d4.size() == 10);
  CHECK(admissible_partitions({'A', 3}).size() == 5);
  CHECK(admissible_partitions({'B', 2}).size() == 4);
  CHECK(admissible_partitions({'B', 3}).size() == 7);
  CHECK(admissible_partitions({'C', 3}).size() == 8);
  CHECK(is_very_even({'D', 4}, {4, 4}));
  CHECK(is_very_even({'D', 4}, {2, 2, 2, 2}));
  CHECK_FALSE(is_very_even({'D', 4}, {5, 3}));
  CHECK_FALSE(is_admissible({'C', 2}, {3, 1}));
  CHECK(parse_partition("5,3") == Partition{5, 3});
  CHECK_THROWS_AS(parse_partition("3,5"), Error);
  CHECK_THROWS_AS(parse_partition("3,x"), Error);
}

TEST_CASE("nilpotents from partitions have the requested Jordan type") {
  for (auto t : {ClassicalType{'A', 3}, ClassicalType{'B', 2}, ClassicalType{'B', 3}, ClassicalType{'C', 2},
                 ClassicalType{'C', 3}, ClassicalType{'D', 4}}) {
    ClassicalAlgebra g = classical(t);
    for (const auto& p : admissible_partitions(t)) {
      Vec e = nilpotent_from_partition(g, p);
      QMatrix m = g.to_matrix(e);
      CHECK(jordan_type(m) == p);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j <= i; ++j) CHECK(m(i, j) == 0);
    }
  }
  ClassicalAlgebra a1 = classical({'A', 1});
  CHECK(a1.to_matrix(nilpotent_from_partition(a1, {2})) == testutil::unit(2, 0, 1));
  ClassicalAlgebra a3 = classical({'A', 3});
  QMatrix m = a3.to_matrix(nilpotent_from_partition(a3, {2, 2}));
  CHECK(rank(m) == 2);
  CHECK((m * m).is_zero());
  ClassicalAlgebra d4 = classical({'D', 4});
  Vec e = nilpotent_from_partition(d4, {5, 3});
  CHECK(centralizer(*d4.algebra, std::vector<Vec>{e}).dim() == 6);
  CHECK_THROWS_AS(nilpotent_from_partition(d4, {4, 3, 1}), Error);
}

TEST_CASE("sl2 completion") {
  ClassicalAlgebra a1 = classical({'A', 1});
  SL2Triple t = sl2_complete(*a1.algebra, nilpotent_from_partition(a1, {2}));
  QMatrix h(2, 2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  CHECK(a1.to_matrix(t.h) == h);
  CHECK(a1.to_matrix(t.f) == testutil::unit(2, 1, 0));

  ClassicalAlgebra a2 = classical({'A', 2});
  SL2Triple r = sl2_complete(*a2.algebra, nilpotent_from_partition(a2, {3}));
  CHECK(eigen_dims(*a2.algebra, r.h) == std::map<int, std::size_t>{{-4, 1}, {-2, 2}, {0, 2}, {2, 2}, {4, 1}});

  for (auto t : {ClassicalType{'B', 2}, ClassicalType{'C', 3}, ClassicalType{'D', 4}}) {
    ClassicalAlgebra g = classical(t);
    for (const auto& p : admissible_partitions(t)) {
      if (p == Partition(t.n(), 1)) continue;
      Vec e = nilpotent_from_partition(g, p);
      SL2Triple tr = sl2_complete(*g.algebra, e);
      CHECK(is_sl2_triple(*g.algebra, tr));
      CHECK(g.algebra->killing_pair(tr.h, tr.h) != 0);
      Subspace z = centralizer(*g.algebra, std::vector<Vec>{e});
      for (const auto& [deg, dim] : eigen_dims(*g.algebra, tr.h, &z)) CHECK(deg >= 0);
    }
  }
  CHECK_THROWS_AS(sl2_complete(*a1.algebra, zero_vec(3)), Error);
  CHECK_THROWS_AS(sl2_complete(*a1.algebra, a1.from_matrix(h)), Error);
}

TEST_CASE("Cartan matrices and root systems") {
  CHECK(root_datum(cartan_matrix('A', 2), "A2").positive.size() == 3);
  CHECK(root_datum(cartan_matrix('B', 3), "B3").positive.size() == 9);
  CHECK(root_datum(cartan_matrix('C', 3), "C3").positive.size() == 9);
  CHECK(root_datum(cartan_matrix('D', 4), "D4").positive.size() == 12);
  CHECK(root_datum(cartan_matrix('G', 2), "G2").positive.size() == 6);
  CHECK(root_datum(cartan_matrix('F', 4), "F4").positive.size() == 24);
  CHECK(root_datum(cartan_matrix('E', 6), "E6").positive.size() == 36);
  CHECK(root_datum(cartan_matrix('G', 2), "G2").positive.back() == std::vector<int>{3, 2});
  CHECK(root_datum(cartan_matrix('A', 2), "A2").positive.back() == std::vector<int>{1, 1});
  CHECK_THROWS_AS(root_datum({{2, -2}, {-2, 2}}, "affine"), Error);
  CHECK_THROWS_AS(root_datum({{2, 1}, {1, 2}}, "bad"), Error);
  CHECK_THROWS_AS(root_datum({{2, -1}, {0, 2}}, "bad"), Error);
  CHECK_THROWS_AS(root_datum({{3, -1}, {-1, 2}}, "bad"), Error);
}

TEST_CASE("Chevalley algebras") {
  for (const char* name : {"A1", "A2", "B2", "C3", "G2", "D4"}) {
    CAPTURE(name);
    ChevalleyAlgebra g = chevalley(std::string(name));
    const LieAlgebra& L = *g.algebra;
    CHECK(L.dim() == 2 * g.positive_count() + g.datum.rank());
    CHECK(L.validate());
    QMatrix kil = L.killing();
    CHECK(determinant(kil) != 0);
    for (std::size_t k = 0; k < g.positive_count(); ++k) {
      const auto& a = g.datum.positive[k];
      std::vector<int> na = a;
      for (auto& x : na) x = -x;
      Vec ea = unit_vec(L.dim(), k), fa = unit_vec(L.dim(), g.root_index.at(na));
      CHECK(kil(k, g.root_index.at(na)) == 1);
      // [e_a, e_-a] is the Killing dual of a on the Cartan subalgebra
      Vec ha = L.bracket(ea, fa);
      for (std::size_t i = 0; i < g.datum.rank(); ++i)
        CHECK(L.killing_pair(ha, unit_vec(L.dim(), g.cartan_index(i))) == g.datum.pairing(a, i));
    }
    Vec e = regular_nilpotent(g);
    CHECK(centralizer(L, std::vector<Vec>{e}).dim() == g.datum.rank());
    auto [el, fl] = extreme_root_vectors(g);
    CHECK(L.killing_pair(el, fl) == 1);
  }
  CHECK(chevalley("A1").algebra->dim() == 3);
  CHECK(chevalley("G2").algebra->dim() == 14);
  CHECK(chevalley("B2").algebra->dim() == classical({'B', 2}).algebra->dim());
  CHECK_THROWS_AS(chevalley("H3"), Error);
}

TEST_CASE("regular nilpotents give the exponents") {
  const std::map<std::string, std::vector<int>> exps{
      {"A2", {1, 2}}, {"B2", {1, 3}}, {"G2", {1, 5}}, {"C3", {1, 3, 5}}, {"D4", {1, 3, 3, 5}}};
  for (const auto& [name, ex] : exps) {
    ChevalleyAlgebra g = chevalley(name);
    const LieAlgebra& L = *g.algebra;
    Vec e = regular_nilpotent(g);
    SL2Triple t = sl2_complete(L, e);
    Subspace z = centralizer(L, std::vector<Vec>{e});
    std::vector<int> got;
    for (const auto& [deg, d] : eigen_dims(L, t.h, &z))
      for (std::size_t k = 0; k < d; ++k) got.push_back(deg / 2);
    CHECK(got == ex);
  }
}

TEST_CASE("parabolic subalgebras") {
  ClassicalAlgebra a1 = classical({'A', 1});
  Parabolic b = parabolic(a1, {1, 1});
  CHECK(b.p.dim() == 2);
  CHECK(b.pu.dim() == 1);
  Parabolic whole = parabolic(a1, {2});
  CHECK(whole.p.dim() == 3);
  CHECK(whole.l.dim() == 3);
  CHECK(whole.pu.dim() == 0);
  ClassicalAlgebra a3 = classical({'A', 3});
  Parabolic b4 = parabolic(a3, {1, 1, 1, 1});
  CHECK(b4.p.dim() == 9);
  CHECK(b4.pu.dim() == 6);
  CHECK(b4.l.dim() == 3);
  CHECK_THROWS_AS(parabolic(a3, {1, 2}), Error);
  ClassicalAlgebra c2 = classical({'C', 2});
  CHECK_THROWS_AS(parabolic(c2, {1, 3}), Error);
  for (const auto& comp : palindromic_compositions(4)) {
    Parabolic p = parabolic(c2, comp);
    const LieAlgebra& L = *c2.algebra;
    CHECK(is_subalgebra(L, p.p));
    CHECK(is_subalgebra(L, p.l));
    CHECK(is_invariant(L, p.p, p.pu));
    CHECK(is_direct(p.l, p.pu));
    CHECK(subspace_sum(p.l, p.pu) == p.p);
  }
  CHECK(compositions(4).size() == 8);
  CHECK(palindromic_compositions(4).size() == 4);

  ChevalleyAlgebra g2 = chevalley("G2");
  Parabolic borel = parabolic(g2, {});
  CHECK(borel.p.dim() == 8);
  Parabolic maximal = parabolic(g2, {0});
  CHECK(maximal.l.dim() == 4);
  CHECK(maximal.pu.dim() == 5);
  CHECK(is_invariant(*g2.algebra, maximal.p, maximal.pu));
}

TEST_CASE("weighted Dynkin labels") {
  CHECK(weighted_dynkin({'A', 1}, {2}) == std::vector<int>{2});
  CHECK(weighted_dynkin({'A', 2}, {3}) == std::vector<int>{2, 2});
  CHECK(weighted_dynkin({'A', 2}, {2, 1}) == std::vector<int>{1, 1});
  CHECK(weighted_dynkin({'D', 4}, {5, 3}) == std::vector<int>{2, 0, 2, 2});
  CHECK(weighted_dynkin({'B', 2}, {5}) == std::vector<int>{2, 2});
  CHECK(weighted_dynkin({'C', 2}, {4}) == std::vector<int>{2, 2});
  for (auto t : {ClassicalType{'A', 5}, ClassicalType{'B', 4}, ClassicalType{'C', 3}, ClassicalType{'D', 4}})
    for (const auto& p : admissible_partitions(t))
      for (int x : weighted_dynkin(t, p)) CHECK((x >= 0 && x <= 2));
  CHECK_THROWS_AS(weighted_dynkin({'C', 2}, {3, 1}), Error);
}

TEST_CASE("nilpotent search") {
  ChevalleyAlgebra g = chevalley("A2");
  auto reg = nilpotent_search(g, 2, 100, 1);
  REQUIRE(reg);
  CHECK(centralizer(*g.algebra, std::vector<Vec>{*reg}).dim() == 2);
  CHECK_FALSE(nilpotent_search(g, 1, 100, 1));
  ChevalleyAlgebra g2 = chevalley("G2");
  auto sub = nilpotent_search(g2, 4, 500, 7);
  REQUIRE(sub);
  CHECK(centralizer(*g2.algebra, std::vector<Vec>{*sub}).dim() == 4);
  SL2Triple t = sl2_complete(*g2.algebra, *sub);
  auto dims = eigen_dims(*g2.algebra, t.h);
  CHECK(dims[2] == 4);
  CHECK(dims[4] == 1);
}
