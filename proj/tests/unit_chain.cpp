#include "doctest.h"

#include <stdexcept>

#include "jnt/chain.hpp"
#include "jnt/group.hpp"

using namespace jnt;

namespace {

Permutation perm(std::vector<std::uint16_t> v) { return Permutation(std::move(v)); }

GeneratedGroup s4() { return GeneratedGroup(4, {perm({1, 2, 3, 0}), perm({1, 0, 2, 3})}); }
GeneratedGroup a4() { return GeneratedGroup(4, {perm({1, 2, 0, 3}), perm({0, 2, 3, 1})}); }
GeneratedGroup a5() { return GeneratedGroup(5, {perm({1, 2, 3, 4, 0}), perm({1, 2, 0, 3, 4})}); }
GeneratedGroup c7() {
  return GeneratedGroup(7, {perm({1, 2, 3, 4, 5, 6, 0})});
}

// AGL(3,2) on the 8 vectors of F_2^3: a point translation plus two linear maps.
GeneratedGroup agl32() {
  return GeneratedGroup(8, {perm({1, 0, 3, 2, 5, 4, 7, 6}),
                            perm({0, 4, 1, 5, 2, 6, 3, 7}),
                            perm({0, 3, 2, 1, 4, 7, 6, 5})});
}

} // namespace

TEST_CASE("orbits") {
  CHECK(point_orbit(s4(), 2) == std::vector<std::uint16_t>({0, 1, 2, 3}));
  GeneratedGroup g(5, {perm({1, 0, 2, 4, 3})});
  CHECK(point_orbit(g, 0) == std::vector<std::uint16_t>({0, 1}));
  CHECK(point_orbit(g, 2) == std::vector<std::uint16_t>({2}));
  auto parts = orbit_partition(g);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == std::vector<std::uint16_t>({0, 1}));
  CHECK(parts[1] == std::vector<std::uint16_t>({2}));
  CHECK(parts[2] == std::vector<std::uint16_t>({3, 4}));
  CHECK(!is_transitive(g));
  CHECK(is_transitive(s4()));
}

TEST_CASE("chain orders of small groups") {
  CHECK(StabilizerChain::build(s4()).order() == 24);
  CHECK(StabilizerChain::build(a4()).order() == 12);
  CHECK(StabilizerChain::build(a5()).order() == 60);
  CHECK(StabilizerChain::build(c7()).order() == 7);
  CHECK(StabilizerChain::build(agl32()).order() == 1344);
}

TEST_CASE("declared order is enforced") {
  CHECK_NOTHROW(StabilizerChain::build(s4(), 24));
  CHECK_THROWS_AS(StabilizerChain::build(s4(), 23), std::runtime_error);
  CHECK_NOTHROW(StabilizerChain::build(agl32(), 1344));
}

TEST_CASE("membership") {
  StabilizerChain c = StabilizerChain::build(a4());
  CHECK(c.contains(perm({1, 0, 3, 2})));       // (0 1)(2 3)
  CHECK(!c.contains(perm({1, 0, 2, 3})));      // (0 1) is odd
  CHECK(c.contains(Permutation::identity(4)));
  CHECK_THROWS_AS(c.contains(Permutation::identity(5)), std::invalid_argument);
  StabilizerChain cs = StabilizerChain::build(s4());
  CHECK(cs.contains(perm({1, 0, 2, 3})));
}

TEST_CASE("chain is deterministic") {
  StabilizerChain c1 = StabilizerChain::build(agl32());
  StabilizerChain c2 = StabilizerChain::build(agl32());
  REQUIRE(c1.base() == c2.base());
  REQUIRE(c1.levels().size() == c2.levels().size());
  for (std::size_t i = 0; i < c1.levels().size(); ++i) {
    CHECK(c1.levels()[i].orbit == c2.levels()[i].orbit);
  }
}

TEST_CASE("point stabilizers have the right order") {
  auto stab_order = [](const GeneratedGroup& g, std::uint16_t u) {
    StabilizerChain c = StabilizerChain::build(g);
    GeneratedGroup s = c.point_stabilizer(g, u);
    return StabilizerChain::build(s).order();
  };
  CHECK(stab_order(s4(), 0) == 6);
  CHECK(stab_order(s4(), 3) == 6);
  CHECK(stab_order(a5(), 2) == 12);
  CHECK(stab_order(agl32(), 0) == 168);
  CHECK(stab_order(c7(), 0) == 1);
}

TEST_CASE("orbit stabilizer identity") {
  for (const GeneratedGroup& g : {s4(), a4(), a5(), agl32()}) {
    StabilizerChain c = StabilizerChain::build(g);
    std::uint64_t n = c.order();
    for (std::uint16_t u = 0; u < g.degree; ++u) {
      GeneratedGroup s = c.point_stabilizer(g, u);
      std::uint64_t so = StabilizerChain::build(s).order();
      CHECK(so * point_orbit(g, u).size() == n);
    }
  }
}

TEST_CASE("stabilizer generators all fix the point") {
  GeneratedGroup g = agl32();
  StabilizerChain c = StabilizerChain::build(g);
  GeneratedGroup s = c.point_stabilizer(g, 3);
  for (const auto& p : s.generators) CHECK(p(3) == 3);
  // and they are all members of g
  for (const auto& p : s.generators) CHECK(c.contains(p));
}

TEST_CASE("product transitivity test") {
  KSubset plane = make_subset({0, 1, 2, 3});
  // Full setwise stabilizer of the plane in AGL(3,2): transitive on the plane
  // and, after fixing 0, transitive on the other coset.
  GeneratedGroup h(8, {perm({1, 0, 3, 2, 5, 4, 7, 6}),
                       perm({0, 3, 2, 1, 4, 7, 6, 5}),
                       perm({0, 2, 1, 3, 4, 6, 5, 7}),
                       perm({0, 1, 2, 3, 5, 4, 7, 6})});
  CHECK(StabilizerChain::build(h).order() == 96);
  CHECK(is_transitive_on_product(h, plane));
  // Linear subgroup fixing the plane pointwise at 0: not transitive on it.
  GeneratedGroup lin(8, {perm({0, 3, 2, 1, 4, 7, 6, 5}),
                         perm({0, 2, 1, 3, 4, 6, 5, 7})});
  CHECK(!is_transitive_on_product(lin, plane));
  // Whole point set: no outside points to pair with.
  KSubset all = make_subset({0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(!is_transitive_on_product(h, all));
}
