#include "doctest.h"

#include <stdexcept>

#include "jnt/perm.hpp"

using namespace jnt;

namespace {
Permutation perm(std::vector<std::uint16_t> v) { return Permutation(std::move(v)); }
} // namespace

TEST_CASE("composition acts left-to-right") {
  // p = (0 1), q = (1 2); "p then q" sends 0->2, 1->0, 2->1.
  Permutation p = perm({1, 0, 2});
  Permutation q = perm({0, 2, 1});
  Permutation pq = compose(p, q);
  CHECK(pq(0) == 2);
  CHECK(pq(1) == 0);
  CHECK(pq(2) == 1);
  Permutation qp = compose(q, p);
  CHECK(qp(0) == 1);
  CHECK(qp(2) == 0);
  CHECK(pq != qp);
}

TEST_CASE("identity and inverse") {
  Permutation id = Permutation::identity(5);
  CHECK(id.is_identity());
  CHECK(id.degree() == 5);
  Permutation p = perm({2, 0, 1, 4, 3});
  CHECK(!p.is_identity());
  Permutation pi = inverse(p);
  CHECK(compose(p, pi).is_identity());
  CHECK(compose(pi, p).is_identity());
  CHECK(pi.images() == std::vector<std::uint16_t>({1, 2, 0, 4, 3}));
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(element_order(Permutation::identity(4)) == 1);
  CHECK(element_order(perm({1, 2, 3, 4, 0})) == 5);
  CHECK(element_order(perm({1, 0, 3, 4, 2})) == 6); // (0 1)(2 3 4)
  CHECK(element_order(perm({1, 0, 2})) == 2);
}

TEST_CASE("set images") {
  Permutation p = perm({2, 0, 1});
  KSubset a = make_subset({0, 1});
  KSubset b = image_of_set(p, a);
  CHECK(b.elements() == std::vector<std::uint16_t>({0, 2}));
  CHECK(image_of_set(inverse(p), b) == a);
}

TEST_CASE("bijection validation") {
  CHECK_THROWS_AS(perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perm({0, 3, 1}), std::invalid_argument);
  CHECK_NOTHROW(perm({0}));
  CHECK_NOTHROW(check_bijection({1, 2, 0}));
  CHECK_THROWS_AS(check_bijection({1, 1, 0}), std::invalid_argument);
}
