#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jnt/engine.hpp"
#include "jnt/subset.hpp"

namespace jnt {

enum class DesignStatus { kDesign, kNotDesign, kSkipped };

struct DesignCheck {
  DesignStatus status = DesignStatus::kSkipped;
  std::uint64_t lambda = 0; // meaningful only when status == kDesign
};

// Full orbit of `rep`, colex-sorted so words[0] is the canonical representative.
std::vector<KSubset> orbit_words(const GeneratedGroup& g, const KSubset& rep,
                                 std::uint64_t cap);

// Minimum Johnson distance k - |a ∩ b|. The first variant scans distances from
// words[0] only, which equals the true minimum for orbit codes; the second
// compares all pairs and is the reference for small codes.
unsigned min_distance(const std::vector<KSubset>& words);
unsigned min_distance_naive(const std::vector<KSubset>& words);

// words must be colex-sorted. A group orbit contains the complement of one
// member iff it contains the complements of all of them.
bool is_self_complementary(const std::vector<KSubset>& words, unsigned v);

std::vector<KSubset> complement_code(const std::vector<KSubset>& words, unsigned v);

// Does every t-subset of points lie in the same number of words? Skipped when
// the count table or the increment sweep would exceed the given budgets.
DesignCheck design_check(const std::vector<KSubset>& words, unsigned v, unsigned t,
                         std::uint64_t table_budget = 1000000,
                         std::uint64_t increment_budget = 1ull << 33);

// Number of distinct k-sets at Johnson distance exactly 1 from the code
// (requires min distance >= 2 so codewords never appear as neighbours).
std::uint64_t neighbour_count(const std::vector<KSubset>& words, unsigned v,
                              std::uint64_t cap);

// Orbit size of one subset without materializing a move table.
std::uint64_t count_set_orbit(const GeneratedGroup& g, const KSubset& seed,
                              std::uint64_t cap);

// The group permutes the neighbours transitively iff one neighbour's orbit
// already covers every neighbour. `checked` is false when the cap was hit.
bool is_neighbour_transitive(const GeneratedGroup& g, const std::vector<KSubset>& words,
                             unsigned v, std::uint64_t cap, bool& checked);

// Characteristic vectors as 64-bit masks (degree <= 64 only).
std::vector<std::uint64_t> hamming_image(const std::vector<KSubset>& words, unsigned v);
unsigned hamming_min_distance(const std::vector<std::uint64_t>& vecs);

// Everything the reports need about one candidate.
struct CodeAnalysis {
  Candidate cand;
  unsigned delta = 0;
  bool self_complementary = false;
  // (t, lambda) for every t from 2 up to the largest certified within budget.
  std::vector<std::pair<unsigned, std::uint64_t>> design;
  unsigned design_t = 0;            // largest certified t (0 if not a 2-design)
  std::uint64_t design_lambda = 0;  // lambda at design_t
  std::uint64_t lambda2 = 0;        // lambda at t = 2 (0 if not a 2-design)
  bool neighbour_transitive = false;
  bool neighbour_checked = false;

  std::optional<std::uint64_t> lambda_at(unsigned t) const {
    for (const auto& d : design) {
      if (d.first == t) return d.second;
    }
    return std::nullopt;
  }
};

CodeAnalysis analyse_candidate(const GeneratedGroup& g, const Candidate& cand,
                               const SearchOptions& opts);

} // namespace jnt
