#include "doctest.h"

#include <random>
#include <stdexcept>

#include "jnt/binom.hpp"
#include "jnt/subset.hpp"

using namespace jnt;

TEST_CASE("binomial known values") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(24, 12) == 2704156ull);
  CHECK(binomial(52, 5) == 2598960ull);
  CHECK(binomial(276, 3) == 3466100ull);
  CHECK(binomial(64, 32) == 1832624140942590534ull);
}

TEST_CASE("binomial overflow handling") {
  CHECK(binomial_checked(64, 32).has_value());
  CHECK(!binomial_checked(68, 34).has_value());
  CHECK_THROWS_AS(binomial(68, 34), std::overflow_error);
  CHECK_THROWS_AS(binomial(513, 1), std::out_of_range);
  // Pascal rows near the saturation boundary must stay exact.
  CHECK(binomial(67, 33) == binomial(66, 32) + binomial(66, 33));
}

TEST_CASE("KSubset bit operations") {
  KSubset a = make_subset({0, 3, 70, 200});
  CHECK(a.popcount() == 4);
  CHECK(a.test(0));
  CHECK(a.test(70));
  CHECK(!a.test(1));
  CHECK(a.min_element() == 0);
  a.reset(0);
  CHECK(a.min_element() == 3);
  CHECK(a.next_element(4) == 70);
  CHECK(a.next_element(71) == 200);
  CHECK(a.next_element(201) == KSubset::kBits);
  a.set(0);
  auto e = a.elements();
  CHECK(e == std::vector<std::uint16_t>({0, 3, 70, 200}));
  CHECK(!a.empty());
  CHECK(KSubset{}.empty());
}

TEST_CASE("intersection and johnson distance") {
  KSubset a = make_subset({0, 1, 2, 3, 4, 5});
  KSubset b = make_subset({3, 4, 5, 6, 7, 8});
  CHECK(intersection_size(a, b) == 3);
  CHECK(johnson_distance(a, b) == 3);
  CHECK(johnson_distance(a, a) == 0);
  KSubset c = make_subset({0, 1});
  CHECK_THROWS_AS(johnson_distance(a, c), std::invalid_argument);
}

TEST_CASE("complement") {
  KSubset a = make_subset({0, 2, 4});
  KSubset ac = complement(a, 6);
  CHECK(ac.elements() == std::vector<std::uint16_t>({1, 3, 5}));
  CHECK(complement(ac, 6) == a);
}

TEST_CASE("colex rank fixed points") {
  // rank = sum of C(c_i, i+1) over sorted elements
  CHECK(colex_rank(make_subset({0, 1, 2})) == 0);
  CHECK(colex_rank(make_subset({2, 3, 4})) == 9); // C(5,3)-1
  CHECK(colex_rank(make_subset({0, 2, 3})) == 2);
  CHECK(colex_rank(make_subset({0, 1, 4})) == 4);
  CHECK(colex_rank(make_subset({1, 2, 5})) == 12);
  CHECK(colex_unrank(12, 3, 6) == make_subset({1, 2, 5}));
  CHECK(colex_unrank(0, 3, 6) == make_subset({0, 1, 2}));
  CHECK(colex_unrank(19, 3, 6) == make_subset({3, 4, 5}));
}

TEST_CASE("colex rank is the enumeration order and matches mask order") {
  // Walking ranks 0..C(6,3)-1 must produce strictly increasing bitmasks.
  std::uint64_t prev_mask = 0;
  for (std::uint64_t r = 0; r < binomial(6, 3); ++r) {
    KSubset s = colex_unrank(r, 3, 6);
    CHECK(s.popcount() == 3);
    CHECK(colex_rank(s) == r);
    if (r > 0) {
      CHECK(prev_mask < s.w[0]);
      KSubset p = colex_unrank(r - 1, 3, 6);
      CHECK(p.colex_less(s));
      CHECK(!s.colex_less(p));
    }
    prev_mask = s.w[0];
  }
}

TEST_CASE("colex round trip randomized") {
  std::mt19937 rng(20260823);
  for (int it = 0; it < 2000; ++it) {
    unsigned v = 1 + rng() % 40;
    unsigned k = 1 + rng() % v;
    std::vector<std::uint16_t> pool(v);
    for (unsigned i = 0; i < v; ++i) pool[i] = static_cast<std::uint16_t>(i);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    KSubset s = make_subset(pool);
    std::uint64_t r = colex_rank(s);
    CHECK(r < binomial(v, k));
    CHECK(colex_unrank(r, k, v) == s);
  }
}

TEST_CASE("colex rank overflow is an error") {
  std::vector<std::uint16_t> big;
  for (unsigned i = 256; i < 512; ++i) big.push_back(static_cast<std::uint16_t>(i));
  CHECK_THROWS_AS(colex_rank(make_subset(big)), std::overflow_error);
}

TEST_CASE("colex unrank range check") {
  CHECK_THROWS_AS(colex_unrank(binomial(6, 3), 3, 6), std::out_of_range);
}

TEST_CASE("subset printing is 1-based") {
  CHECK(subset_to_string(make_subset({0, 1, 4, 6})) == "{1,2,5,7}");
  CHECK(subset_to_string(KSubset{}) == "{}");
}

TEST_CASE("subset hashing distinguishes nearby sets") {
  KSubset a = make_subset({0, 1, 2});
  KSubset b = make_subset({0, 1, 3});
  CHECK(subset_hash(a) != subset_hash(b));
  CHECK((subset_hash(a) != subset_hash(b) || subset_hash2(a) != subset_hash2(b)));
  CHECK(subset_hash(a) == subset_hash(make_subset({0, 1, 2})));
}
