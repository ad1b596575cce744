#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "partita/corpus.hpp"
#include "partita/lattice.hpp"

using namespace partita;

TEST_CASE("subgroup counts on named groups") {
  CHECK(Lattice::enumerate(cyclic_group(6)).size() == 4);
  CHECK(Lattice::enumerate(quaternion_group(8)).size() == 6);
  CHECK(Lattice::enumerate(symmetric_group(4)).size() == 30);
  CHECK(Lattice::enumerate(alternating_group(5)).size() == 59);
}

TEST_CASE("naive subset-closure oracle agrees up to order 16") {
  Corpus corpus(CorpusManifest::builtin());
  int checked = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const FiniteGroup& g = corpus.group(i);
    if (g.order() > 16) continue;
    CAPTURE(corpus.entry(i).name);
    CHECK(std::size_t(corpus.lattice(i).size()) ==
          oracles::count_subgroups_naive(g));
    ++checked;
  }
  CHECK(checked >= 20);
  // and once at order 24
  CHECK(oracles::count_subgroups_naive(symmetric_group(4)) == 30);
}

TEST_CASE("lattice structure") {
  FiniteGroup q8 = quaternion_group(8);
  Lattice lat = Lattice::enumerate(q8);
  CHECK(lat.at(lat.trivial_id()).order == 1);
  CHECK(lat.at(lat.whole_id()).order == 8);
  // Q8: 1, Z2, three Z4, Q8; everything normal
  for (int i = 0; i < lat.size(); ++i) {
    CHECK(lat.at(i).normal);
    CHECK(8 % lat.at(i).order == 0);  // Lagrange
  }
  CHECK(lat.at(1).order == 2);
  CHECK(lat.at(1).cyclic);
  // ids are the canonical (order, elements) sort
  for (int i = 1; i < lat.size(); ++i)
    CHECK(lat.at(i - 1).order <= lat.at(i).order);
  // closed under intersection
  for (int a = 0; a < lat.size(); ++a)
    for (int b = 0; b < lat.size(); ++b)
      CHECK(lat.id_of(lat.at(a).elements & lat.at(b).elements) >= 0);
}

TEST_CASE("generated subgroups") {
  FiniteGroup s3 = symmetric_group(3);
  CHECK(generated_subgroup(s3, s3.singleton(0)).count() == 1);
  int three_cycle = -1, a3_size = 0;
  for (int x = 0; x < 6; ++x)
    if (s3.element_order(x) == 3) three_cycle = x;
  ElementSet a3 = generated_subgroup(s3, s3.singleton(three_cycle));
  a3_size = a3.count();
  CHECK(a3_size == 3);
  // the elements of order != 2 generate A3 (the Hughes subgroup for p=2)
  ElementSet gen = s3.make_set();
  for (int x = 0; x < 6; ++x)
    if (s3.element_order(x) != 2) gen.set(x);
  CHECK(generated_subgroup(s3, gen) == a3);
  CHECK_THROWS_AS(generated_subgroup(s3, s3.make_set()), ParameterError);
}

TEST_CASE("normal core and antinormality") {
  FiniteGroup s3 = symmetric_group(3);
  Lattice lat = Lattice::enumerate(s3);
  for (int i = 0; i < lat.size(); ++i) {
    const Subgroup& s = lat.at(i);
    if (s.order == 2) {
      CHECK(lat.normal_core(i) == lat.trivial_id());
      CHECK(lat.is_antinormal(i));
    }
    if (s.normal) CHECK(lat.normal_core(i) == i);
    // the definition cross-check
    CHECK(lat.is_antinormal(i) == (lat.normal_core(i) == lat.trivial_id()));
    // core is normal and contained in s
    CHECK(lat.at(lat.normal_core(i)).normal);
    CHECK(lat.le(lat.normal_core(i), i));
  }

  FiniteGroup q8 = quaternion_group(8);
  Lattice ql = Lattice::enumerate(q8);
  int zid = ql.id_of(center(q8));
  CHECK(ql.normal_core(zid) == zid);
}

TEST_CASE("frattini subgroups") {
  FiniteGroup q8 = quaternion_group(8);
  Lattice ql = Lattice::enumerate(q8);
  CHECK(ql.at(ql.frattini()).elements == center(q8));

  Lattice v4 = Lattice::enumerate(abelian_group({2, 2}));
  CHECK(v4.frattini() == v4.trivial_id());

  Lattice z9 = Lattice::enumerate(cyclic_group(9));
  CHECK(z9.at(z9.frattini()).order == 3);

  // normal and contained in every maximal subgroup
  Lattice s4 = Lattice::enumerate(symmetric_group(4));
  int f = s4.frattini();
  CHECK(s4.at(f).normal);
  for (int m : s4.maximal_ids()) CHECK(s4.le(f, m));
}

TEST_CASE("sylow subgroups") {
  FiniteGroup s3 = symmetric_group(3);
  Lattice l3 = Lattice::enumerate(s3);
  int p3 = l3.sylow(3);
  CHECK(l3.at(p3).order == 3);
  CHECK(l3.at(p3).normal);

  Lattice z12 = Lattice::enumerate(cyclic_group(12));
  CHECK(z12.at(z12.sylow(2)).order == 4);

  Corpus corpus(CorpusManifest::builtin());
  int sl = corpus.find("sl23");
  REQUIRE(sl >= 0);
  const Lattice& lat = corpus.lattice(sl);
  int syl2 = lat.sylow(2);
  CHECK(lat.at(syl2).order == 8);
  CHECK(lat.at(syl2).normal);
  CHECK_FALSE(lat.at(syl2).cyclic);

  CHECK_THROWS_AS(l3.sylow(5), ParameterError);
  CHECK_THROWS_AS(z12.sylow(4), ParameterError);  // not prime
}

TEST_CASE("hughes subgroups") {
  FiniteGroup s3 = symmetric_group(3);
  Lattice l3 = Lattice::enumerate(s3);
  CHECK(l3.at(l3.hughes(2)).order == 3);

  Lattice z3 = Lattice::enumerate(cyclic_group(3));
  CHECK(z3.hughes(3) == z3.trivial_id());

  Lattice q8 = Lattice::enumerate(quaternion_group(8));
  CHECK(q8.hughes(2) == q8.whole_id());
}

TEST_CASE("proper non-cyclic subgroups") {
  Lattice q8 = Lattice::enumerate(quaternion_group(8));
  CHECK(q8.proper_noncyclic().empty());

  Lattice z3z3 = Lattice::enumerate(abelian_group({3, 3}));
  CHECK(z3z3.proper_noncyclic().empty());

  Corpus corpus(CorpusManifest::builtin());
  int idx = corpus.find("z3xq8");
  const Lattice& lat = corpus.lattice(idx);
  auto pnc = lat.proper_noncyclic();
  REQUIRE(pnc.size() == 1);
  CHECK(lat.at(pnc[0]).order == 8);  // the embedded Q8
}

TEST_CASE("corpus-wide lattice properties") {
  Corpus corpus(CorpusManifest::builtin());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const FiniteGroup& g = corpus.group(i);
    const Lattice& lat = corpus.lattice(i);
    CAPTURE(corpus.entry(i).name);
    for (int s = 0; s < lat.size(); ++s)
      CHECK(g.order() % lat.at(s).order == 0);
    // Sylow index is coprime to p
    int n = g.order();
    for (int p = 2; p <= n; ++p) {
      if (!is_prime(p) || n % p != 0) continue;
      int syl = lat.sylow(p);
      CHECK(lat.at(syl).order == p_part(n, p));
      CHECK((n / lat.at(syl).order) % p != 0);
    }
    // nilpotency agrees with "every Sylow subgroup normal"
    bool all_normal = true;
    for (int p = 2; p <= n; ++p)
      if (is_prime(p) && n % p == 0 && !lat.at(lat.sylow(p)).normal)
        all_normal = false;
    CHECK(all_normal == is_nilpotent(g));
  }
}

TEST_CASE("lattice size cap") {
  CHECK_THROWS_AS(Lattice::enumerate(symmetric_group(4), 20), SizeError);
}

TEST_CASE("more frozen subgroup counts") {
  CHECK(Lattice::enumerate(quaternion_group(16)).size() == 11);
  CHECK(Lattice::enumerate(dihedral_group(6)).size() == 16);
  CHECK(Lattice::enumerate(alternating_group(4)).size() == 10);
  CHECK(Lattice::enumerate(dihedral_group(4)).size() == 10);
  CHECK(Lattice::enumerate(abelian_group({3, 3})).size() == 6);
}
