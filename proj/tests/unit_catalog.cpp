#include "doctest.h"

#include <stdexcept>
#include <string>

#include "jnt/catalog.hpp"
#include "jnt/chain.hpp"

using namespace jnt;

namespace {
std::string data_path(const char* name) {
  return std::string(JNT_TEST_DATA_DIR) + "/" + name;
}
} // namespace

TEST_CASE("loading a well formed catalog") {
  Catalog cat = load_catalog(data_path("agl32.json"));
  REQUIRE(cat.entries.size() == 1);
  const CatalogEntry& e = cat.entries[0];
  CHECK(e.name == "AGL3_2");
  CHECK(e.degree == 8);
  CHECK(e.order == 1344);
  CHECK(e.two_transitive);
  CHECK(e.generators.size() == 3);
  // generator rows in the file are 1-based
  CHECK(e.generators[0](0) == 1);
  CHECK(e.generators[1](1) == 4);
  REQUIRE(e.maximal_subgroups.size() == 2);
  // children inherit the degree and may declare the order as a decimal string
  CHECK(e.maximal_subgroups[0].degree == 8);
  CHECK(e.maximal_subgroups[0].order == 96);
  CHECK(e.maximal_subgroups[1].order == 8);
  CHECK(e.maximal_subgroups[0].name == "plane_stab");
  CHECK(StabilizerChain::build(e.group()).order() == 1344);
}

TEST_CASE("entry lookup") {
  Catalog cat = load_catalog(data_path("agl32.json"));
  CHECK(find_entry(cat, "AGL3_2") == &cat.entries[0]);
  CHECK(find_entry(cat, "nonexistent") == nullptr);
}

TEST_CASE("validation accepts the good catalog") {
  Catalog cat = load_catalog(data_path("agl32.json"));
  auto problems = validate_catalog(cat);
  for (const auto& p : problems) MESSAGE(p);
  CHECK(problems.empty());
}

TEST_CASE("validation flags a wrong declared order") {
  Catalog cat = load_catalog(data_path("agl32_bad_order.json"));
  auto problems = validate_catalog(cat);
  REQUIRE(!problems.empty());
  CHECK(problems[0].find("order") != std::string::npos);
}

TEST_CASE("validation flags a non-member subgroup generator") {
  Catalog cat = load_catalog(data_path("agl32_bad_member.json"));
  auto problems = validate_catalog(cat);
  CHECK(!problems.empty());
}

TEST_CASE("malformed json is a load error") {
  CHECK_THROWS_AS(load_catalog(data_path("agl32_truncated.json")), std::runtime_error);
  CHECK_THROWS_AS(load_catalog(data_path("no_such_file.json")), std::runtime_error);
}
