#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "jnt/analysis.hpp"
#include "jnt/catalog.hpp"
#include "jnt/engine.hpp"
#include "jnt/expected.hpp"

namespace jnt {

enum class SearchMode { kAuto, kChain, kExhaustive };

// Picks the strategy by degree: a full orbit sweep is feasible up to 24 points,
// larger groups go through the subgroup tree.
SearchResult run_auto(const CatalogEntry& entry, const SearchOptions& opts);

// Search one entry and analyse every candidate, merging candidates that share
// (v, k, delta, size, self-complementarity) into a single report row.
std::vector<CodeAnalysis> classify_entry(const CatalogEntry& entry, const SearchOptions& opts,
                                         SearchMode mode, SearchResult* result_out);

// Tab-separated report, one row per parameter class, sorted by
// (group, v, k, size). Byte-identical across runs and worker counts.
std::string render_tsv(const std::vector<CodeAnalysis>& rows);

struct VerifyOutcome {
  bool all_ok = true;    // every reference row matched and no stray codes
  bool complete = true;  // no search reported itself incomplete
};

struct VerifyConfig {
  std::vector<std::string> groups;  // empty = every group in the reference table
  SearchMode mode = SearchMode::kAuto;
  unsigned perturb_line = 0;  // self-test hook: bump delta of this row before comparing
};

// Re-derives every reference row and prints one verdict line per row, plus a
// line per unexpected code.
VerifyOutcome verify_table(const Catalog& cat, const SearchOptions& opts,
                           const VerifyConfig& cfg, std::ostream& out);

} // namespace jnt
