#include <doctest.h>

#include <map>
#include <stdexcept>

#include "cgt/bsgs.hpp"
#include "cgt/oracle.hpp"
#include "support.hpp"

using namespace cgt;
using namespace testsupport;

TEST_CASE("orders of standard groups") {
  CHECK(StabilizerChain::build(symmetric(4)).order() == BigUint(24));
  CHECK(StabilizerChain::build(alternating(5)).order() == BigUint(60));
  CHECK(StabilizerChain::build(cyclic(12)).order() == BigUint(12));
  CHECK(StabilizerChain::build(dihedral(7)).order() == BigUint(14));
  CHECK(StabilizerChain::build(PermGroup::trivial(5)).order() == BigUint(1));
  CHECK(StabilizerChain::build(quaternion()).order() == BigUint(8));
}

TEST_CASE("chain is independent of the seed") {
  PermGroup g = symmetric(5);
  StabilizerChain a = StabilizerChain::build(g, 1);
  StabilizerChain b = StabilizerChain::build(g, 99);
  CHECK(a.order() == b.order());
  CHECK(same_group(a, b));
}

TEST_CASE("membership") {
  StabilizerChain s4 = StabilizerChain::build(symmetric(4));
  for (const Perm& g : symmetric(4).generators) CHECK(s4.contains(g));
  CHECK(s4.contains(Perm(4)));

  StabilizerChain a4 = StabilizerChain::build(alternating(4));
  CHECK(a4.contains(parse_cycles("(1,2,3)", 4)));
  CHECK_FALSE(a4.contains(parse_cycles("(1,2)", 4)));  // odd permutation
  CHECK_FALSE(a4.contains(parse_cycles("(1,2,3,4)", 4)));
}

TEST_CASE("every input generator sifts to the identity") {
  RandomStream rng(41);
  for (int i = 0; i < 20; ++i) {
    PermGroup g = random_small_group(rng);
    StabilizerChain chain = StabilizerChain::build(g);
    for (const Perm& s : g.generators) CHECK(chain.sift(s).is_identity());
  }
}

TEST_CASE("chain certificate: strong generator times transversal sifts home") {
  RandomStream rng(43);
  for (int i = 0; i < 10; ++i) {
    StabilizerChain chain = StabilizerChain::build(random_small_group(rng));
    for (std::size_t l = 0; l < chain.levels().size(); ++l) {
      const auto& lv = chain.levels()[l];
      for (std::size_t pos = 0; pos < lv.orbit.size(); ++pos) {
        for (const Perm& s : lv.gens) {
          CHECK(chain.contains(lv.transversal[pos] * s));
        }
      }
    }
  }
}

TEST_CASE("order matches brute-force enumeration on random groups") {
  RandomStream rng(47);
  for (int i = 0; i < 50; ++i) {
    PermGroup g = random_small_group(rng);
    StabilizerChain chain = StabilizerChain::build(g);
    auto table = oracle::enumerate_elements(g);
    CHECK(chain.order() == BigUint(table.size()));
    // membership agreement: all members contained, random non-members not
    for (std::size_t j = 0; j < table.size(); j += 1 + table.size() / 16)
      CHECK(chain.contains(table.elements[j]));
    for (int j = 0; j < 20; ++j) {
      Perm p = random_perm(rng, g.degree);
      CHECK(chain.contains(p) == table.contains(p));
    }
  }
}

TEST_CASE("prescribed base keeps every level") {
  PermGroup g = symmetric(4);
  std::vector<Point> base{3, 2, 1, 0};
  StabilizerChain chain = StabilizerChain::build_with_base(g, base);
  REQUIRE(chain.levels().size() >= 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(chain.levels()[i].base_point == base[i]);
  CHECK(chain.order() == BigUint(24));

  StabilizerChain trivial = StabilizerChain::build_with_base(PermGroup::trivial(4), {0, 1, 2});
  CHECK(trivial.levels().size() == 3);
  CHECK(trivial.order() == BigUint(1));
}

TEST_CASE("uniform_random on the trivial group") {
  StabilizerChain chain = StabilizerChain::build(PermGroup::trivial(3));
  RandomStream rng(1);
  for (int i = 0; i < 5; ++i) CHECK(chain.random_element(rng) == Perm(3));
}

TEST_CASE("uniform_random on C2 is a fair coin") {
  StabilizerChain chain = StabilizerChain::build(cyclic(2));
  RandomStream rng(3);
  int heads = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i)
    if (chain.random_element(rng).is_identity()) ++heads;
  // binomial(10^4, 1/2): 3 sigma = 150
  CHECK(heads > n / 2 - 150);
  CHECK(heads < n / 2 + 150);
}

TEST_CASE("uniform_random chi-squared on S3 and S5") {
  for (std::size_t deg : {3u, 5u}) {
    PermGroup g = symmetric(deg);
    StabilizerChain chain = StabilizerChain::build(g);
    auto table = oracle::enumerate_elements(g);
    std::map<Perm, std::size_t> counts;
    RandomStream rng(deg);
    const std::size_t draws = deg == 3 ? 10000 : 100000;
    for (std::size_t i = 0; i < draws; ++i) ++counts[chain.random_element(rng)];
    CHECK(counts.size() == table.size());
    double expected = static_cast<double>(draws) / table.size();
    double chi2 = 0;
    for (const auto& [perm, count] : counts) {
      double diff = count - expected;
      chi2 += diff * diff / expected;
    }
    // df = 5: crit(0.001) = 20.5; df = 119: crit(0.001) ~ 173
    CHECK(chi2 < (deg == 3 ? 20.5 : 173.0));
  }
}

TEST_CASE("subgroup_of and same_group") {
  StabilizerChain s4 = StabilizerChain::build(symmetric(4));
  StabilizerChain a4 = StabilizerChain::build(alternating(4));
  CHECK(subgroup_of(alternating(4), s4));
  CHECK_FALSE(subgroup_of(symmetric(4), a4));
  CHECK(same_group(s4, s4));
  CHECK_FALSE(same_group(s4, a4));

  // the same group from different generators
  PermGroup s4b(4, {parse_cycles("(1,2)", 4), parse_cycles("(2,3)", 4), parse_cycles("(3,4)", 4)});
  CHECK(same_group(s4, StabilizerChain::build(s4b)));
}

TEST_CASE("degree mismatch throws") {
  StabilizerChain s4 = StabilizerChain::build(symmetric(4));
  CHECK_THROWS_AS(s4.contains(Perm(5)), std::invalid_argument);
  CHECK_THROWS_AS(subgroup_of(symmetric(5), s4), std::invalid_argument);
}
