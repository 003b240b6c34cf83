#include "jnt/binom.hpp"

#include <array>
#include <limits>
#include <stdexcept>
#include <vector>

namespace jnt {
namespace {

constexpr unsigned kMaxV = 512;
constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

struct Table {
  // Row v has v+1 entries; saturated entries hold kSat.
  std::vector<std::vector<std::uint64_t>> rows;
  Table() {
    rows.resize(kMaxV + 1);
    rows[0] = {1};
    for (unsigned v = 1; v <= kMaxV; ++v) {
      rows[v].assign(v + 1, 1);
      for (unsigned k = 1; k < v; ++k) {
        std::uint64_t a = rows[v - 1][k - 1];
        std::uint64_t b = rows[v - 1][k];
        if (a == kSat || b == kSat || a > kSat - b) {
          rows[v][k] = kSat;
        } else {
          rows[v][k] = a + b;
        }
      }
    }
  }
};

const Table& table() {
  static const Table t;
  return t;
}

} // namespace

std::optional<std::uint64_t> binomial_checked(unsigned v, unsigned k) {
  if (v > kMaxV) throw std::out_of_range("binomial: v exceeds 512");
  if (k > v) return 0;
  std::uint64_t r = table().rows[v][k];
  if (r == kSat) return std::nullopt;
  return r;
}

std::uint64_t binomial(unsigned v, unsigned k) {
  auto r = binomial_checked(v, k);
  if (!r) throw std::overflow_error("binomial: C(v,k) exceeds 64 bits");
  return *r;
}

} // namespace jnt
