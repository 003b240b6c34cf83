#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jnt/catalog.hpp"
#include "jnt/chain.hpp"
#include "jnt/group.hpp"
#include "jnt/subset.hpp"

namespace jnt {

// Thrown when an orbit or sweep would exceed its configured cap.
class SearchLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  unsigned k_min = 2;
  unsigned k_max = 0;                          // 0 means degree/2
  std::uint64_t orbit_cap = 1ull << 24;        // max k-sets in one orbit
  std::uint64_t neighbour_cap = 1ull << 27;    // max states in flag/neighbour sweeps
  unsigned workers = 1;                        // parallel k-slices (exhaustive only)
};

// A code surfaced by either strategy: the orbit of `representative` under the
// top-level group. `representative` is the colex-least member of the orbit.
struct Candidate {
  std::string group_name;
  unsigned v = 0;
  unsigned k = 0;
  KSubset representative;
  std::uint64_t code_size = 0;
  std::uint64_t stab_order = 0;
  std::string found_via;
};

struct SearchResult {
  std::vector<Candidate> candidates;   // sorted by (k, representative), deduplicated
  std::vector<std::string> warnings;   // each one names a reason the search may be incomplete
  bool complete = true;
};

// k(v-k) must divide the order of the setwise stabilizer of any strongly
// incidence-transitive code; used as a cheap gate before orbit work.
bool divisibility_filter(std::uint64_t order, unsigned v, unsigned k);

// Materialized orbit of a k-set with a generator-image index table, the shared
// substrate for flag sweeps and stabilizer extraction.
struct IndexedSetOrbit {
  unsigned v = 0;
  unsigned k = 0;
  unsigned nw = 0;                    // 64-bit words per stored subset
  unsigned ngens = 0;
  std::vector<std::uint64_t> flat;    // size()*nw words, BFS discovery order
  std::vector<std::uint32_t> move;    // size()*ngens image indices
  std::vector<std::uint32_t> parent;  // BFS tree: parent index (self for root)
  std::vector<std::uint32_t> via_gen; // generator applied at parent

  std::uint64_t size() const { return nw ? flat.size() / nw : 0; }
  KSubset get(std::uint64_t i) const;
  std::uint64_t min_rep_index() const; // index of colex-least member
};

IndexedSetOrbit build_indexed_orbit(const GeneratedGroup& g, const KSubset& seed,
                                    std::uint64_t cap);

// Orbit size of the flag (gamma, min gamma, min complement) under g, walking
// states (orbit index, inner point, outer point). Throws SearchLimit past cap.
std::uint64_t triple_orbit_size(const GeneratedGroup& g, const IndexedSetOrbit& orb,
                                std::uint64_t cap);

// The flag orbit of a strongly incidence-transitive code has maximal size
// |orbit| * k * (v-k); this is the exhaustive-side test.
bool sit_by_triple_orbit(const GeneratedGroup& g, const IndexedSetOrbit& orb,
                         std::uint64_t cap);

// Subgroup-side test: h (a subgroup fixing gamma setwise) already moves
// (point of gamma, point outside) to every such pair.
bool sit_test_subgroup(const GeneratedGroup& h, const KSubset& gamma);

// Orbit-stabilizer arithmetic: h is the full setwise stabilizer of the orbit
// representative iff orbit_size * |h| equals |g|.
bool full_stabilizer_test(std::uint64_t group_order, std::uint64_t orbit_size,
                          std::uint64_t subgroup_order);

// Generators of the full setwise stabilizer of gamma in g, extracted from the
// orbit's Schreier generators. Stops as soon as order |g|/|orbit| is reached.
GeneratedGroup set_stabilizer(const GeneratedGroup& g, std::uint64_t group_order,
                              const IndexedSetOrbit& orb);

// Strategy 1: walk the catalog's subgroup tree; any node with exactly two
// point orbits proposes its smaller orbit as a code representative.
SearchResult chain_search(const CatalogEntry& top, const SearchOptions& opts);

// Strategy 2: sweep every k-set orbit of the top-level group (degree <= 24).
SearchResult exhaustive_search(const CatalogEntry& top, const SearchOptions& opts);

} // namespace jnt
