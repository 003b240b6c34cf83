#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace jnt {

// Open-addressing map from a 128-bit key to a 32-bit value. Keys are
// fingerprints (or exact masks zero-extended), values are orbit indices.
// Deliberately minimal: insert-or-find only, no deletion.
class FingerprintMap {
public:
  explicit FingerprintMap(std::size_t expected = 64) {
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    slots_.assign(cap, Slot{});
  }

  // Returns the value already stored under (a,b), or inserts `fresh` and
  // returns it. `occupied` reports which case happened.
  std::uint32_t find_or_insert(std::uint64_t a, std::uint64_t b, std::uint32_t fresh,
                               bool& occupied) {
    if ((size_ + 1) * 2 > slots_.size()) grow();
    std::size_t mask = slots_.size() - 1;
    std::size_t i = mix(a, b) & mask;
    for (;;) {
      Slot& s = slots_[i];
      if (!s.used) {
        s.used = true;
        s.a = a;
        s.b = b;
        s.val = fresh;
        ++size_;
        occupied = false;
        return fresh;
      }
      if (s.a == a && s.b == b) {
        occupied = true;
        return s.val;
      }
      i = (i + 1) & mask;
    }
  }

  // Lookup without insertion; -1 when the key is absent.
  std::int64_t find(std::uint64_t a, std::uint64_t b) const {
    std::size_t mask = slots_.size() - 1;
    std::size_t i = mix(a, b) & mask;
    for (;;) {
      const Slot& s = slots_[i];
      if (!s.used) return -1;
      if (s.a == a && s.b == b) return s.val;
      i = (i + 1) & mask;
    }
  }

  std::size_t size() const { return size_; }

private:
  struct Slot {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint32_t val = 0;
    bool used = false;
  };

  static std::size_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = a ^ (b * 0x9e3779b97f4a7c15ull);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }

  void grow() {
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(old.size() * 2, Slot{});
    std::size_t mask = slots_.size() - 1;
    for (const Slot& s : old) {
      if (!s.used) continue;
      std::size_t i = mix(s.a, s.b) & mask;
      while (slots_[i].used) i = (i + 1) & mask;
      slots_[i] = s;
    }
  }

  std::vector<Slot> slots_;
  std::size_t size_ = 0;
};

} // namespace jnt
