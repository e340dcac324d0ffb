#include <doctest.h>

#include <set>
#include <stdexcept>

#include "cgt/groupops.hpp"
#include "cgt/oracle.hpp"
#include "support.hpp"

using namespace cgt;
using namespace testsupport;

TEST_CASE("wreath over the trivial group is the base group") {
  WreathProduct w = wreath_imprimitive(2, PermGroup::trivial(1));
  CHECK(StabilizerChain::build(w.group).order() == BigUint(2));
}

TEST_CASE("wreath(2, C2) is dihedral of order 8") {
  WreathProduct w = wreath_imprimitive(2, cyclic(2));
  StabilizerChain chain = StabilizerChain::build(w.group);
  CHECK(chain.order() == BigUint(8));
  auto table = oracle::enumerate_elements(w.group);
  CHECK(oracle::brute_center(table).size() == 2);  // dihedral of order 8 has center C2
  CHECK(oracle::brute_derived(table).size() == 2);
}

TEST_CASE("wreath order law for transitive tops") {
  RandomStream dummy(0);
  std::vector<PermGroup> tops{cyclic(3), cyclic(4), symmetric(3), cyclic(5), alternating(4),
                              cyclic(6), symmetric(4)};
  for (const PermGroup& top : tops) {
    std::uint64_t top_order = StabilizerChain::build(top).order().to_u64();
    WreathProduct w = wreath_imprimitive(2, top);
    BigUint expected = BigUint(1);
    for (std::size_t i = 0; i < top.degree; ++i) expected *= 2;
    expected = expected * BigUint(top_order);
    CHECK(StabilizerChain::build(w.group).order() == expected);
    // cross-check the small ones against full enumeration
    if (expected <= BigUint(5000)) {
      CHECK(oracle::enumerate_elements(w.group, 5000).size() == expected.to_u64());
    }
  }
}

TEST_CASE("block_action of a wreath recovers the top group") {
  WreathProduct w = wreath_imprimitive(2, symmetric(3));
  PermGroup action = block_action(w.group, w.blocks);
  CHECK(action.degree == 3);
  CHECK(StabilizerChain::build(action).order() == BigUint(6));
}

TEST_CASE("block_action is a homomorphism") {
  WreathProduct w = wreath_imprimitive(2, symmetric(4));
  StabilizerChain chain = StabilizerChain::build(w.group);
  RandomStream rng(67);
  std::vector<std::size_t> block_of(w.group.degree);
  for (std::size_t i = 0; i < w.blocks.blocks.size(); ++i)
    for (Point p : w.blocks.blocks[i]) block_of[p] = i;
  auto induced = [&](const Perm& p) {
    std::vector<Point> img(w.blocks.blocks.size());
    for (std::size_t i = 0; i < w.blocks.blocks.size(); ++i)
      img[i] = static_cast<Point>(block_of[p[w.blocks.blocks[i][0]]]);
    return Perm(std::move(img));
  };
  for (int i = 0; i < 20; ++i) {
    Perm a = chain.random_element(rng);
    Perm b = chain.random_element(rng);
    CHECK(induced(a * b) == induced(a) * induced(b));
  }
}

TEST_CASE("a generator splitting a block is rejected") {
  // (2,3) maps the pair {1,2} onto {1,3}, splitting it
  PermGroup g(4, {parse_cycles("(2,3)", 4)});
  CHECK_THROWS_AS(block_action(g, BlockSystem::consecutive(4, 2)), std::invalid_argument);
}

TEST_CASE("normal closure") {
  StabilizerChain s4 = StabilizerChain::build(symmetric(4));
  CHECK(normal_closure(s4, {Perm(4)}).order() == BigUint(1));
  CHECK(normal_closure(s4, {parse_cycles("(1,2,3)", 4)}).order() == BigUint(12));
  // central element generates its own cyclic subgroup as closure
  StabilizerChain q8 = StabilizerChain::build(quaternion());
  Perm minus_one = parse_cycles("(1,3)(2,4)(5,7)(6,8)", 8);
  CHECK(normal_closure(q8, {minus_one}).order() == BigUint(2));
  CHECK_THROWS_AS(normal_closure(s4, {parse_cycles("(1,2,3,4,5)", 5)}), std::invalid_argument);
}

TEST_CASE("derived subgroups") {
  CHECK(derived_subgroup(StabilizerChain::build(cyclic(12))).order() == BigUint(1));
  CHECK(derived_subgroup(StabilizerChain::build(klein_four())).order() == BigUint(1));

  StabilizerChain s4 = StabilizerChain::build(symmetric(4));
  StabilizerChain d = derived_subgroup(s4);
  CHECK(d.order() == BigUint(12));
  CHECK(same_group(d, StabilizerChain::build(alternating(4))));
}

TEST_CASE("derived subgroup is normal") {
  RandomStream rng(71);
  for (int i = 0; i < 10; ++i) {
    PermGroup g = random_small_group(rng, 8, 500);
    StabilizerChain chain = StabilizerChain::build(g);
    StabilizerChain d = derived_subgroup(chain);
    for (const Perm& n : d.group().generators)
      for (const Perm& s : g.generators) CHECK(d.contains(conjugate(n, s)));
  }
}

TEST_CASE("derived matches brute force") {
  RandomStream rng(73);
  for (int i = 0; i < 15; ++i) {
    PermGroup g = random_small_group(rng, 8, 400);
    StabilizerChain chain = StabilizerChain::build(g);
    auto table = oracle::enumerate_elements(g);
    CHECK(derived_subgroup(chain).order() == BigUint(oracle::brute_derived(table).size()));
  }
}

TEST_CASE("center") {
  CHECK(center(StabilizerChain::build(cyclic(9))).order() == BigUint(9));
  CHECK(center(StabilizerChain::build(symmetric(3))).order() == BigUint(1));
  CHECK(center(StabilizerChain::build(dihedral(4))).order() == BigUint(2));
  CHECK(center(StabilizerChain::build(quaternion())).order() == BigUint(2));
}

TEST_CASE("center matches brute force and commutes with everything") {
  RandomStream rng(79);
  for (int i = 0; i < 15; ++i) {
    PermGroup g = random_small_group(rng, 8, 500);
    StabilizerChain chain = StabilizerChain::build(g);
    auto table = oracle::enumerate_elements(g);
    StabilizerChain z = center(chain);
    CHECK(z.order() == BigUint(oracle::brute_center(table).size()));
    for (const Perm& zg : z.group().generators) {
      CHECK(chain.contains(zg));
      for (const Perm& s : g.generators) CHECK(zg * s == s * zg);
    }
  }
}

TEST_CASE("is_perfect") {
  CHECK(is_perfect(StabilizerChain::build(alternating(5))));
  CHECK_FALSE(is_perfect(StabilizerChain::build(symmetric(4))));
  CHECK_FALSE(is_perfect(StabilizerChain::build(cyclic(3))));
}

TEST_CASE("direct products") {
  PermGroup p = direct_product(symmetric(3), symmetric(3));
  CHECK(p.degree == 6);
  CHECK(StabilizerChain::build(p).order() == BigUint(36));
  CHECK(StabilizerChain::build(direct_product(cyclic(2), cyclic(2))).order() == BigUint(4));
  PermGroup padded = direct_product(PermGroup::trivial(2), symmetric(3));
  CHECK(padded.degree == 5);
  CHECK(StabilizerChain::build(padded).order() == BigUint(6));
}

TEST_CASE("central quotient of C2 has order 2") {
  StabilizerChain c2 = StabilizerChain::build(cyclic(2));
  CentralQuotientGroup k = central_quotient(c2, parse_cycles("(1,2)", 2));
  CHECK(k.order() == BigUint(2));
}

TEST_CASE("central quotient rejects bad t") {
  StabilizerChain s4 = StabilizerChain::build(symmetric(4));
  CHECK_THROWS_AS(central_quotient(s4, Perm(4)), std::invalid_argument);                    // identity
  CHECK_THROWS_AS(central_quotient(s4, parse_cycles("(1,2,3)", 4)), std::invalid_argument);  // order 3
  CHECK_THROWS_AS(central_quotient(s4, parse_cycles("(1,2)", 4)), std::invalid_argument);    // not central
}

TEST_CASE("central quotient of the quaternion group") {
  StabilizerChain q8 = StabilizerChain::build(quaternion());
  Perm t = parse_cycles("(1,3)(2,4)(5,7)(6,8)", 8);
  CentralQuotientGroup k = central_quotient(q8, t);
  CHECK(k.order() == BigUint(32));
  CHECK(k.product_chain().order() == BigUint(64));

  // (t,1)T and (1,t)T are the same coset
  CHECK(k.canonical(t, Perm(8)) == k.canonical(Perm(8), t));

  // enumerate K by canonical representatives and check the order exactly
  auto table = oracle::enumerate_elements(quaternion());
  std::set<CentralQuotientGroup::Element> elements;
  for (const Perm& x : table.elements)
    for (const Perm& y : table.elements) elements.insert(k.canonical(x, y));
  CHECK(BigUint(elements.size()) == k.order());

  // canonical-representative arithmetic is exhaustively associative and
  // respects inverses
  std::vector<CentralQuotientGroup::Element> elems(elements.begin(), elements.end());
  for (const auto& a : elems) {
    CHECK(k.multiply(a, k.inverse(a)) == k.identity());
    for (const auto& b : elems)
      for (const auto& c : elems)
        CHECK(k.multiply(k.multiply(a, b), c) == k.multiply(a, k.multiply(b, c)));
  }

  // the brute commutator set of K equals the canonical images of pairwise
  // base-group commutators
  std::set<CentralQuotientGroup::Element> comm_arith;
  for (const auto& a : elems)
    for (const auto& b : elems)
      comm_arith.insert(
          k.multiply(k.multiply(k.inverse(a), k.inverse(b)), k.multiply(a, b)));
  std::set<CentralQuotientGroup::Element> comm_pairs;
  auto comms = oracle::brute_commutator_set(table);
  for (const Perm& c1 : comms)
    for (const Perm& c2 : comms) comm_pairs.insert(k.canonical(c1, c2));
  CHECK(comm_arith == comm_pairs);
}

TEST_CASE("central quotient of an order-16 base group, exhaustively") {
  PermGroup g = direct_product(cyclic(4), cyclic(4));
  StabilizerChain chain = StabilizerChain::build(g);
  Perm t = parse_cycles("(1,3)(2,4)", 8);  // the square of the first C4 factor
  CentralQuotientGroup k = central_quotient(chain, t);
  CHECK(k.order() == BigUint(128));

  auto table = oracle::enumerate_elements(g);
  std::set<CentralQuotientGroup::Element> elements;
  for (const Perm& x : table.elements)
    for (const Perm& y : table.elements) elements.insert(k.canonical(x, y));
  REQUIRE(BigUint(elements.size()) == k.order());

  std::vector<CentralQuotientGroup::Element> elems(elements.begin(), elements.end());
  std::size_t violations = 0;
  for (const auto& a : elems) {
    CHECK(k.multiply(a, k.inverse(a)) == k.identity());
    for (const auto& b : elems) {
      CentralQuotientGroup::Element ab = k.multiply(a, b);
      for (const auto& c : elems)
        if (!(k.multiply(ab, c) == k.multiply(a, k.multiply(b, c)))) ++violations;
    }
  }
  CHECK(violations == 0);
}
