#include "jnt/subset.hpp"

#include <bit>
#include <stdexcept>

namespace jnt {

unsigned KSubset::popcount() const {
  unsigned n = 0;
  for (auto x : w) n += std::popcount(x);
  return n;
}

bool KSubset::empty() const {
  for (auto x : w) {
    if (x) return false;
  }
  return true;
}

unsigned KSubset::min_element() const {
  for (unsigned i = 0; i < kWords; ++i) {
    if (w[i]) return i * 64 + std::countr_zero(w[i]);
  }
  return kBits;
}

unsigned KSubset::next_element(unsigned i) const {
  if (i >= kBits) return kBits;
  unsigned wi = i >> 6;
  std::uint64_t masked = w[wi] & (~std::uint64_t(0) << (i & 63));
  if (masked) return wi * 64 + std::countr_zero(masked);
  for (unsigned j = wi + 1; j < kWords; ++j) {
    if (w[j]) return j * 64 + std::countr_zero(w[j]);
  }
  return kBits;
}

std::vector<std::uint16_t> KSubset::elements() const {
  std::vector<std::uint16_t> out;
  out.reserve(popcount());
  for (unsigned i = min_element(); i < kBits; i = next_element(i + 1)) {
    out.push_back(static_cast<std::uint16_t>(i));
  }
  return out;
}

bool KSubset::colex_less(const KSubset& o) const {
  for (unsigned i = kWords; i-- > 0;) {
    if (w[i] != o.w[i]) return w[i] < o.w[i];
  }
  return false;
}

KSubset make_subset(const std::vector<std::uint16_t>& elts) {
  KSubset s;
  for (auto e : elts) {
    if (e >= KSubset::kBits) throw std::out_of_range("make_subset: element exceeds capacity");
    s.set(e);
  }
  return s;
}

unsigned intersection_size(const KSubset& a, const KSubset& b) {
  unsigned n = 0;
  for (unsigned i = 0; i < KSubset::kWords; ++i) n += std::popcount(a.w[i] & b.w[i]);
  return n;
}

unsigned johnson_distance(const KSubset& a, const KSubset& b) {
  unsigned ka = a.popcount(), kb = b.popcount();
  if (ka != kb) throw std::invalid_argument("johnson_distance: size mismatch");
  return ka - intersection_size(a, b);
}

KSubset complement(const KSubset& a, unsigned v) {
  if (v > KSubset::kBits) throw std::out_of_range("complement: v exceeds capacity");
  KSubset r;
  for (unsigned i = 0; i < KSubset::kWords; ++i) r.w[i] = ~a.w[i];
  // clear bits at positions >= v
  for (unsigned i = v; i < KSubset::kBits && (i & 63); ++i) r.reset(i);
  for (unsigned j = (v + 63) / 64; j < KSubset::kWords; ++j) r.w[j] = 0;
  return r;
}

std::uint64_t colex_rank(const KSubset& a) {
  std::uint64_t r = 0;
  unsigned idx = 0;
  for (unsigned i = a.min_element(); i < KSubset::kBits; i = a.next_element(i + 1)) {
    std::uint64_t c = binomial(i, ++idx); // throws on overflow
    if (r > ~std::uint64_t(0) - c) throw std::overflow_error("colex_rank: exceeds 64 bits");
    r += c;
  }
  return r;
}

KSubset colex_unrank(std::uint64_t r, unsigned k, unsigned v) {
  if (r >= k_subset_count(v, k)) throw std::out_of_range("colex_unrank: rank out of range");
  KSubset s;
  unsigned c = v;
  for (unsigned i = k; i > 0; --i) {
    // largest c with C(c, i) <= r, scanning down from the previous element
    while (binomial(c, i) > r) --c;
    s.set(c);
    r -= binomial(c, i);
  }
  return s;
}

std::string subset_to_string(const KSubset& a) {
  std::string out = "{";
  bool first = true;
  for (unsigned i = a.min_element(); i < KSubset::kBits; i = a.next_element(i + 1)) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(i + 1);
  }
  out += '}';
  return out;
}

namespace {
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}
} // namespace

std::uint64_t subset_hash(const KSubset& a) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto x : a.w) h = mix64(h ^ mix64(x + 0x165667b19e3779f9ULL));
  return h;
}

std::uint64_t subset_hash2(const KSubset& a) {
  std::uint64_t h = 0xc2b2ae3d27d4eb4fULL;
  for (auto x : a.w) h = mix64((h << 1 | h >> 63) ^ mix64(x ^ 0x2545f4914f6cdd1dULL));
  return h;
}

} // namespace jnt
