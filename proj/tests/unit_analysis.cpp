#include "doctest.h"

#include <bit>
#include <stdexcept>

#include "jnt/analysis.hpp"
#include "jnt/engine.hpp"

using namespace jnt;

namespace {

Permutation perm(std::vector<std::uint16_t> v) { return Permutation(std::move(v)); }

GeneratedGroup agl32() {
  return GeneratedGroup(8, {perm({1, 0, 3, 2, 5, 4, 7, 6}),
                            perm({0, 4, 1, 5, 2, 6, 3, 7}),
                            perm({0, 3, 2, 1, 4, 7, 6, 5})});
}

// The 14 affine planes of F_2^3, colex-sorted.
std::vector<KSubset> plane_code() {
  return orbit_words(agl32(), make_subset({0, 1, 2, 3}), 1u << 20);
}

} // namespace

TEST_CASE("orbit words are sorted and canonical") {
  auto words = plane_code();
  REQUIRE(words.size() == 14);
  CHECK(words[0] == make_subset({0, 1, 2, 3}));
  for (std::size_t i = 1; i < words.size(); ++i) {
    CHECK(colex_less(words[i - 1], words[i]));
    CHECK(words[i].popcount() == 4);
  }
}

TEST_CASE("minimum distance, fast scan vs all pairs") {
  auto words = plane_code();
  CHECK(min_distance(words) == 2);
  CHECK(min_distance_naive(words) == 2);
  std::vector<KSubset> two = {make_subset({0, 1, 2, 3}), make_subset({4, 5, 6, 7})};
  CHECK(min_distance(two) == 4);
  CHECK(min_distance_naive(two) == 4);
  std::vector<KSubset> one = {make_subset({0, 1})};
  CHECK_THROWS_AS(min_distance(one), std::invalid_argument);
}

TEST_CASE("self-complementarity") {
  auto words = plane_code();
  CHECK(is_self_complementary(words, 8));
  auto comp = complement_code(words, 8);
  REQUIRE(comp.size() == words.size());
  for (std::size_t i = 0; i < words.size(); ++i) CHECK(comp[i] == words[i]);

  std::vector<KSubset> lop = {make_subset({0, 1, 2})};
  CHECK(!is_self_complementary(lop, 8)); // 2k != v
  std::vector<KSubset> half = {make_subset({0, 1, 2, 3})};
  CHECK(!is_self_complementary(half, 8)); // complement missing
}

TEST_CASE("design counting") {
  auto words = plane_code();
  DesignCheck d1 = design_check(words, 8, 1);
  CHECK(d1.status == DesignStatus::kDesign);
  CHECK(d1.lambda == 7);
  DesignCheck d2 = design_check(words, 8, 2);
  CHECK(d2.status == DesignStatus::kDesign);
  CHECK(d2.lambda == 3);
  DesignCheck d3 = design_check(words, 8, 3);
  CHECK(d3.status == DesignStatus::kDesign);
  CHECK(d3.lambda == 1);
  DesignCheck d4 = design_check(words, 8, 4);
  CHECK(d4.status == DesignStatus::kNotDesign);

  std::vector<KSubset> pair = {make_subset({0, 1, 2, 3}), make_subset({0, 1, 4, 5})};
  CHECK(design_check(pair, 8, 2).status == DesignStatus::kNotDesign);

  CHECK(design_check(words, 8, 2, /*table_budget=*/3).status == DesignStatus::kSkipped);
  CHECK(design_check(words, 8, 5).status == DesignStatus::kSkipped); // t > k
}

TEST_CASE("neighbour counting") {
  auto words = plane_code();
  // every non-plane 4-set contains an affinely independent triple of some
  // plane, so all 56 of them are neighbours
  CHECK(neighbour_count(words, 8, 1u << 20) == 56);
  CHECK_THROWS_AS(neighbour_count(words, 8, 10), SearchLimit);
}

TEST_CASE("lean orbit counting") {
  GeneratedGroup g = agl32();
  CHECK(count_set_orbit(g, make_subset({0, 1, 2, 3}), 1u << 20) == 14);
  CHECK(count_set_orbit(g, make_subset({0, 1, 2, 4}), 1u << 20) == 56);
  CHECK_THROWS_AS(count_set_orbit(g, make_subset({0, 1, 2, 4}), 10), SearchLimit);
}

TEST_CASE("neighbour transitivity") {
  GeneratedGroup g = agl32();
  auto words = plane_code();
  bool checked = false;
  CHECK(is_neighbour_transitive(g, words, 8, 1u << 20, checked));
  CHECK(checked);
  // too small a budget: the check declines rather than guessing
  CHECK(!is_neighbour_transitive(g, words, 8, 10, checked));
  CHECK(!checked);
}

TEST_CASE("hamming view") {
  auto words = plane_code();
  auto vecs = hamming_image(words, 8);
  REQUIRE(vecs.size() == 14);
  for (auto m : vecs) CHECK(std::popcount(m) == 4);
  CHECK(hamming_min_distance(vecs) == 4); // twice the set distance
  CHECK_THROWS_AS(hamming_image(words, 65), std::invalid_argument);
}

TEST_CASE("candidate analysis end to end") {
  CatalogEntry e;
  e.name = "AGL3_2";
  e.degree = 8;
  e.order = 1344;
  e.generators = agl32().generators;
  SearchOptions opts;
  SearchResult res = exhaustive_search(e, opts);
  REQUIRE(res.candidates.size() == 1);
  CodeAnalysis a = analyse_candidate(e.group(), res.candidates[0], opts);
  CHECK(a.delta == 2);
  CHECK(a.self_complementary);
  CHECK(a.lambda2 == 3);
  CHECK(a.design_t == 3);
  CHECK(a.design_lambda == 1);
  REQUIRE(a.design.size() == 2);
  CHECK(a.design[0] == std::pair<unsigned, std::uint64_t>(2, 3));
  CHECK(a.design[1] == std::pair<unsigned, std::uint64_t>(3, 1));
  CHECK(a.lambda_at(2) == 3);
  CHECK(a.lambda_at(3) == 1);
  CHECK(!a.lambda_at(4).has_value());
  CHECK(a.neighbour_checked);
  CHECK(a.neighbour_transitive);
}
