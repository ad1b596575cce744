#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <sstream>

#include "partita/group.hpp"

using namespace partita;

TEST_CASE("cyclic and abelian builders") {
  FiniteGroup z1 = cyclic_group(1);
  CHECK(z1.order() == 1);
  CHECK(z1.element_order(0) == 1);

  FiniteGroup z6 = cyclic_group(6);
  CHECK(z6.order() == 6);
  CHECK(z6.element_order(1) == 6);
  CHECK(is_cyclic(z6));

  FiniteGroup v4 = abelian_group({2, 2});
  CHECK(v4.order() == 4);
  CHECK_FALSE(is_cyclic(v4));
  auto stats = order_statistics(v4);
  CHECK(stats == std::map<int, int>{{1, 1}, {2, 3}});

  CHECK(abelian_group({}).order() == 1);
  CHECK_THROWS_AS(cyclic_group(0), ParameterError);
}

TEST_CASE("quaternion group has exactly one involution") {
  FiniteGroup q8 = quaternion_group(8);
  int involutions = 0;
  for (int x = 1; x < q8.order(); ++x)
    if (q8.mul(x, x) == 0) ++involutions;
  CHECK(involutions == 1);
  CHECK(order_statistics(q8) == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}});

  FiniteGroup q16 = quaternion_group(16);
  CHECK(q16.order() == 16);
  CHECK(order_statistics(q16)[2] == 1);

  CHECK_THROWS_AS(quaternion_group(4), ParameterError);
  CHECK_THROWS_AS(quaternion_group(12), ParameterError);
}

TEST_CASE("metacyclic family") {
  // p=3, q=2, m=1, r=2 is the symmetric group on three letters
  FiniteGroup g = metacyclic_group(3, 2, 1, 2);
  CHECK(g.order() == 6);
  CHECK(center(g).count() == 1);
  CHECK(order_statistics(g) == std::map<int, int>{{1, 1}, {2, 3}, {3, 2}});

  CHECK(metacyclic_group(7, 3, 1, 2).order() == 21);
  CHECK(metacyclic_group(3, 2, 2, 2).order() == 12);

  CHECK_THROWS_WITH_AS(metacyclic_group(3, 2, 1, 1), // r = 1 (mod p)
                       doctest::Contains("r != 1"), ParameterError);
  // r^q = 2^2 = 4 != 1 (mod 5): the violated congruence is named
  CHECK_THROWS_WITH_AS(metacyclic_group(5, 2, 1, 2),
                       doctest::Contains("r^q == 1"), ParameterError);
  CHECK_THROWS_AS(metacyclic_group(4, 2, 1, 3), ParameterError);
  CHECK_THROWS_AS(metacyclic_group(3, 3, 1, 2), ParameterError);
}

TEST_CASE("table invariants are checked at construction") {
  // identity not at index 0
  CHECK_THROWS_AS(FiniteGroup("bad", 2, {1, 0, 0, 1}), ConstructionError);
  // not a Latin square
  CHECK_THROWS_AS(FiniteGroup("bad", 2, {0, 1, 1, 1}), ConstructionError);
  // Latin square with identity but not associative: a*(b*c) vs (a*b)*c
  std::vector<int> t = {
      0, 1, 2, 3, 4,
      1, 0, 3, 4, 2,
      2, 4, 0, 1, 3,
      3, 2, 4, 0, 1,
      4, 3, 1, 2, 0,
  };
  CHECK_THROWS_WITH_AS(FiniteGroup("bad", 5, t),
                       doctest::Contains("associativity"), ConstructionError);
  // order 5 has a unique group, Z5
  CHECK(cyclic_group(5).order() == 5);
}

TEST_CASE("semidirect products") {
  FiniteGroup z2 = cyclic_group(2);
  FiniteGroup z3 = cyclic_group(3);

  FiniteGroup z6 = semidirect_product(z2, z3, trivial_action(z2, z3));
  CHECK(z6.order() == 6);
  CHECK(is_cyclic(z6));

  FiniteGroup s3 = semidirect_product(z2, z3, inversion_action(z2, z3));
  CHECK(order_statistics(s3) == order_statistics(metacyclic_group(3, 2, 1, 2)));

  // action that is not an automorphism: swap identity with a nontrivial element
  std::vector<std::vector<int>> bad = {{0, 1, 2}, {1, 0, 2}};
  CHECK_THROWS_WITH_AS(semidirect_product(z2, z3, bad),
                       doctest::Contains("automorphism"), ConstructionError);

  // each slot a genuine automorphism of Z5, but b and b^2 both acting by
  // doubling breaks the homomorphism law
  FiniteGroup z4 = cyclic_group(4);
  FiniteGroup z5 = cyclic_group(5);
  std::vector<int> dbl = {0, 2, 4, 1, 3};
  std::vector<int> id5 = {0, 1, 2, 3, 4};
  std::vector<std::vector<int>> nothom = {id5, dbl, id5, dbl};
  CHECK_THROWS_WITH_AS(semidirect_product(z4, z5, nothom),
                       doctest::Contains("homomorphism"), ConstructionError);

  FiniteGroup prod = direct_product(z2, z3);
  CHECK(prod.order() == 6);
}

TEST_CASE("coprime direct products multiply element orders") {
  FiniteGroup a = cyclic_group(4), b = cyclic_group(9);
  FiniteGroup g = direct_product(a, b);
  for (int k = 0; k < a.order(); ++k)
    for (int x = 0; x < b.order(); ++x) {
      int idx = k * b.order() + x;
      CHECK(g.element_order(idx) ==
            std::lcm(a.element_order(k), b.element_order(x)));
    }
}

TEST_CASE("quotients") {
  FiniteGroup q8 = quaternion_group(8);
  ElementSet z = center(q8);
  REQUIRE(z.count() == 2);
  auto q = quotient(q8, z);
  CHECK(q.group.order() == 4);
  // all non-identity elements of Q8/Z have order 2
  for (int x = 1; x < 4; ++x) CHECK(q.group.mul(x, x) == 0);
  // hand-built coset oracle: cosets are {e,a^2}, {a,a^3}, {b,a^2 b}, {ab,a^3 b}
  CHECK(q.projection[0] == q.projection[2]);
  CHECK(q.projection[1] == q.projection[3]);
  CHECK(q.projection[4] == q.projection[6]);
  CHECK(q.projection[5] == q.projection[7]);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      CHECK(q.projection[q8.mul(a, b)] ==
            q.group.mul(q.projection[a], q.projection[b]));

  // quotient by the trivial subgroup is the identity projection
  FiniteGroup s3 = symmetric_group(3);
  ElementSet triv = s3.singleton(0);
  auto qt = quotient(s3, triv);
  CHECK(qt.group.order() == 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(qt.group.mul(a, b) == s3.mul(a, b));

  // S3 / A3 is Z2
  ElementSet a3 = s3.make_set();
  for (int x = 0; x < 6; ++x)
    if (s3.element_order(x) != 2) a3.set(x);
  auto qa = quotient(s3, a3);
  CHECK(qa.group.order() == 2);

  // a non-normal subgroup is rejected, naming a conjugating element
  ElementSet refl = closure(s3, s3.singleton([&] {
    for (int x = 1; x < 6; ++x)
      if (s3.element_order(x) == 2) return x;
    return 0;
  }()));
  CHECK_THROWS_WITH_AS(quotient(s3, refl), doctest::Contains("conjugated by"),
                       ConstructionError);
}

TEST_CASE("element orders") {
  FiniteGroup z6 = cyclic_group(6);
  CHECK(z6.element_order(0) == 1);
  CHECK(z6.element_order(1) == 6);
  FiniteGroup q8 = quaternion_group(8);
  ElementSet z = center(q8);
  z.for_each([&](int x) {
    if (x != 0) CHECK(q8.element_order(x) == 2);
  });
  for (int x = 0; x < q8.order(); ++x)
    CHECK(q8.order() % q8.element_order(x) == 0);
}

TEST_CASE("centers and centralizers") {
  FiniteGroup z8 = cyclic_group(8);
  CHECK(center(z8).count() == 8);

  // D8: the rotation generator and every reflection have centralizers of
  // order 4; C(x^i y) = {e, x^i y, x^k, x^(k+i) y} with k = n/2
  FiniteGroup d8 = dihedral_group(4);
  auto [z, cents] = center_and_centralizers(d8);
  CHECK(z.count() == 2);
  CHECK(z.test(2));  // x^2
  CHECK(cents[1].count() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(cents[4 + i].count() == 4);
    CHECK(cents[4 + i].test(0));
    CHECK(cents[4 + i].test(2));           // x^2
    CHECK(cents[4 + i].test(4 + i));       // x^i y
    CHECK(cents[4 + i].test(4 + (i + 2) % 4));  // x^(i+2) y
  }
  for (int x = 0; x < d8.order(); ++x) {
    CHECK(z.subset_of(cents[x]));
    CHECK(cents[x].test(x));
  }

  // S3: trivial center, verified against an exhaustive commuting check
  FiniteGroup s3 = symmetric_group(3);
  ElementSet zc = s3.make_set();
  for (int x = 0; x < 6; ++x) {
    bool commutes = true;
    for (int y = 0; y < 6; ++y) commutes &= s3.mul(x, y) == s3.mul(y, x);
    if (commutes) zc.set(x);
  }
  CHECK(center(s3) == zc);
  CHECK(zc.count() == 1);
}

TEST_CASE("series, nilpotency, solvability") {
  FiniteGroup d8 = dihedral_group(4);
  CHECK(is_nilpotent(d8));
  CHECK(hypercenter(d8).count() == 8);

  FiniteGroup s3 = symmetric_group(3);
  CHECK_FALSE(is_nilpotent(s3));
  CHECK(hypercenter(s3).count() == 1);
  CHECK(is_solvable(s3));

  FiniteGroup a5 = alternating_group(5);
  CHECK_FALSE(is_solvable(a5));
  // the derived subgroup of A5 is A5 itself
  auto der = series(a5, SeriesKind::Derived);
  CHECK(der.terms.back().count() == 60);

  FiniteGroup s4 = symmetric_group(4);
  CHECK(is_solvable(s4));
  CHECK_FALSE(is_nilpotent(s4));
  auto low = series(s4, SeriesKind::LowerCentral);
  CHECK(low.terms.back().count() == 12);  // stabilizes at A4

  // descending chains descend, ascending chains ascend
  for (auto kind : {SeriesKind::Derived, SeriesKind::LowerCentral}) {
    auto ch = series(s4, kind);
    for (std::size_t i = 1; i < ch.terms.size(); ++i)
      CHECK(ch.terms[i].subset_of(ch.terms[i - 1]));
  }
  auto up = series(s4, SeriesKind::UpperCentral);
  for (std::size_t i = 1; i < up.terms.size(); ++i)
    CHECK(up.terms[i - 1].subset_of(up.terms[i]));
}

TEST_CASE("order statistics") {
  CHECK(order_statistics(cyclic_group(4)) ==
        std::map<int, int>{{1, 1}, {2, 1}, {4, 2}});
  CHECK(order_statistics(abelian_group({2, 2})) ==
        std::map<int, int>{{1, 1}, {2, 3}});
  int total = 0;
  for (auto [o, c] : order_statistics(symmetric_group(4))) total += c;
  CHECK(total == 24);
}

TEST_CASE("permutation groups enumerate in lexicographic order") {
  FiniteGroup s3 = symmetric_group(3);
  CHECK(s3.order() == 6);
  CHECK(s3.label(0) == "e");
  FiniteGroup a4 = alternating_group(4);
  CHECK(a4.order() == 12);
  FiniteGroup a5 = alternating_group(5);
  CHECK(a5.order() == 60);
  CHECK(order_statistics(a5) ==
        std::map<int, int>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});
}

TEST_CASE("cayley table file round trip") {
  FiniteGroup d8 = dihedral_group(4);
  std::string text = group_to_cayley(d8);
  std::istringstream in(text);
  FiniteGroup back = group_from_cayley(in, "d8-copy");
  REQUIRE(back.order() == d8.order());
  for (int a = 0; a < 8; ++a) {
    CHECK(back.label(a) == d8.label(a));
    for (int b = 0; b < 8; ++b) CHECK(back.mul(a, b) == d8.mul(a, b));
  }

  std::istringstream trunc("3\n0 1 2\n1 2 0\n");
  CHECK_THROWS_AS(group_from_cayley(trunc, "bad"), ParameterError);
  std::istringstream nolabels("2\n0 1\n1 0\n");
  CHECK(group_from_cayley(nolabels, "z2").order() == 2);
}

TEST_CASE("induced subgroups") {
  FiniteGroup s3 = symmetric_group(3);
  ElementSet a3 = s3.make_set();
  for (int x = 0; x < 6; ++x)
    if (s3.element_order(x) != 2) a3.set(x);
  auto ind = induced_subgroup(s3, a3);
  CHECK(ind.group.order() == 3);
  CHECK(is_cyclic(ind.group));
  CHECK(ind.to_parent[0] == 0);
  // a non-subgroup set is rejected
  ElementSet notsub = s3.set_of({0, 1});
  if (!is_subgroup_set(s3, notsub))
    CHECK_THROWS_AS(induced_subgroup(s3, notsub), ParameterError);
}

TEST_CASE("element set tags keep groups apart") {
  FiniteGroup a = cyclic_group(4), b = cyclic_group(4);
  CHECK_THROWS_AS(a.full_set() & b.full_set(), Error);
}

TEST_CASE("group order cap") {
  CHECK(quaternion_group(32).order() == 32);
  CHECK_THROWS_AS(quaternion_group(1024), SizeError);
  CHECK_THROWS_AS(cyclic_group(513), SizeError);
  CHECK(cyclic_group(512).order() == 512);
}
