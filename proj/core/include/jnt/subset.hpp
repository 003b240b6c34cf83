#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "jnt/binom.hpp"

namespace jnt {

// A subset of the point set {0,...,v-1} as a fixed 512-bit bitset.
// 512 = smallest power-of-two word multiple above the largest degree in scope (276).
struct KSubset {
  static constexpr unsigned kBits = 512;
  static constexpr unsigned kWords = kBits / 64;
  std::array<std::uint64_t, kWords> w{};

  bool test(unsigned i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void set(unsigned i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(unsigned i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  unsigned popcount() const;
  bool empty() const;

  // Smallest element; degree if empty.
  unsigned min_element() const;
  // Smallest element >= i; kBits if none.
  unsigned next_element(unsigned i) const;

  std::vector<std::uint16_t> elements() const;

  bool operator==(const KSubset& o) const { return w == o.w; }
  bool operator!=(const KSubset& o) const { return w != o.w; }

  // Numeric comparison of characteristic vectors, high word first. Orders subsets
  // by their largest differing element, i.e. colex order.
  bool colex_less(const KSubset& o) const;
};

inline bool colex_less(const KSubset& a, const KSubset& b) { return a.colex_less(b); }

KSubset make_subset(const std::vector<std::uint16_t>& elts);

unsigned intersection_size(const KSubset& a, const KSubset& b);

// k - |a n b| for equal-size subsets. Throws std::invalid_argument on size mismatch.
unsigned johnson_distance(const KSubset& a, const KSubset& b);

// Bitwise complement within {0,...,v-1}.
KSubset complement(const KSubset& a, unsigned v);

// Colex rank: sum of C(c_i, i+1) over the sorted elements c_0 < ... < c_{k-1}.
// Throws std::overflow_error when the rank does not fit 64 bits.
std::uint64_t colex_rank(const KSubset& a);
KSubset colex_unrank(std::uint64_t r, unsigned k, unsigned v);

// Binomial coefficient C(v,k); errors on overflow (see binom.hpp).
inline std::uint64_t k_subset_count(unsigned v, unsigned k) { return binomial(v, k); }

// 1-based, ascending, braced: {1,2,5,7}.
std::string subset_to_string(const KSubset& a);

// 64-bit mix of the words, for hash containers.
std::uint64_t subset_hash(const KSubset& a);
// Second independent mix; together with subset_hash gives a 128-bit fingerprint.
std::uint64_t subset_hash2(const KSubset& a);

} // namespace jnt
