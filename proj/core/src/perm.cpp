#include "jnt/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace jnt {

void check_bijection(const std::vector<std::uint16_t>& images) {
  std::vector<bool> seen(images.size(), false);
  for (auto x : images) {
    if (x >= images.size() || seen[x]) {
      throw std::invalid_argument("permutation image array is not a bijection");
    }
    seen[x] = true;
  }
}

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  check_bijection(images_);
}

Permutation Permutation::identity(unsigned degree) {
  std::vector<std::uint16_t> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<std::uint16_t> im(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) im[i] = q(p(static_cast<std::uint16_t>(i)));
  return Permutation(std::move(im));
}

Permutation inverse(const Permutation& p) {
  std::vector<std::uint16_t> im(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) im[p(static_cast<std::uint16_t>(i))] = static_cast<std::uint16_t>(i);
  return Permutation(std::move(im));
}

KSubset image_of_set(const Permutation& p, const KSubset& a) {
  KSubset r;
  for (unsigned i = a.min_element(); i < KSubset::kBits; i = a.next_element(i + 1)) {
    r.set(p(static_cast<std::uint16_t>(i)));
  }
  return r;
}

std::uint64_t element_order(const Permutation& p) {
  std::vector<bool> seen(p.degree(), false);
  std::uint64_t ord = 1;
  for (unsigned i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (unsigned j = i; !seen[j]; j = p(static_cast<std::uint16_t>(j))) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

} // namespace jnt
