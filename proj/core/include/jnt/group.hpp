#pragma once

#include <vector>

#include "jnt/perm.hpp"

namespace jnt {

// A permutation group given by generators (all of the same degree).
struct GeneratedGroup {
  unsigned degree = 0;
  std::vector<Permutation> generators;

  GeneratedGroup() = default;
  GeneratedGroup(unsigned deg, std::vector<Permutation> gens);
};

// Smallest generator-closed set containing u, sorted ascending.
std::vector<std::uint16_t> point_orbit(const GeneratedGroup& g, std::uint16_t u);

// Partition of {0,...,v-1} into orbits, each sorted, ordered by minimal element.
std::vector<std::vector<std::uint16_t>> orbit_partition(const GeneratedGroup& g);

// True when the group moves point 0 to every other point.
bool is_transitive(const GeneratedGroup& g);

// True iff h is transitive on gamma and the stabilizer in h of min(gamma) is
// transitive on the complement of gamma. Callers guarantee h fixes gamma setwise
// (checked by assertion in debug builds).
bool is_transitive_on_product(const GeneratedGroup& h, const KSubset& gamma);

} // namespace jnt
