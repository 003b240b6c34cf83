#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jnt/group.hpp"

namespace jnt {

// One group in the catalog, with the subgroups the search may descend into.
struct CatalogEntry {
  std::string name;
  unsigned degree = 0;
  std::uint64_t order = 0;
  bool two_transitive = false;
  std::vector<Permutation> generators;
  std::vector<CatalogEntry> maximal_subgroups;

  GeneratedGroup group() const { return GeneratedGroup(degree, generators); }
};

struct Catalog {
  std::vector<CatalogEntry> entries;
};

// Parses the JSON catalog file. Throws std::runtime_error on malformed input.
Catalog load_catalog(const std::string& path);

// Looks up a top-level entry by name; nullptr when absent.
const CatalogEntry* find_entry(const Catalog& cat, const std::string& name);

// Consistency checks over the whole catalog:
//  - every node's computed group order equals its declared order
//  - every subgroup generator is a member of the parent group
//  - every subgroup order strictly divides the parent order
//  - entries flagged two_transitive really are 2-transitive
// Returns one message per failure; empty means the catalog is consistent.
std::vector<std::string> validate_catalog(const Catalog& cat);

} // namespace jnt
