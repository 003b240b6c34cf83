#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jnt/subset.hpp"

namespace jnt {

// A bijection on {0,...,v-1} stored as an image array.
// Convention: permutations act on the right; compose(p,q) means "p then q".
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint16_t> images);

  static Permutation identity(unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  std::uint16_t operator()(std::uint16_t i) const { return images_[i]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  bool is_identity() const;
  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }

private:
  std::vector<std::uint16_t> images_;
};

// result(i) = q(p(i))
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// { p(x) : x in a }
KSubset image_of_set(const Permutation& p, const KSubset& a);

// Multiplicative order (lcm of cycle lengths).
std::uint64_t element_order(const Permutation& p);

// Verifies the image array is a bijection; throws std::invalid_argument otherwise.
void check_bijection(const std::vector<std::uint16_t>& images);

} // namespace jnt
