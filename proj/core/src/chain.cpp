#include "jnt/chain.hpp"

#include <cassert>
#include <stdexcept>

namespace jnt {

GeneratedGroup::GeneratedGroup(unsigned deg, std::vector<Permutation> gens)
    : degree(deg), generators(std::move(gens)) {
  if (generators.empty()) throw std::invalid_argument("GeneratedGroup: empty generator list");
  for (const auto& p : generators) {
    if (p.degree() != degree) throw std::invalid_argument("GeneratedGroup: generator degree mismatch");
  }
}

namespace {

std::uint16_t min_moved_point(const Permutation& p) {
  for (unsigned i = 0; i < p.degree(); ++i) {
    if (p(static_cast<std::uint16_t>(i)) != i) return static_cast<std::uint16_t>(i);
  }
  throw std::logic_error("min_moved_point: identity");
}

bool fixes_all(const Permutation& p, const std::vector<std::uint16_t>& pts, unsigned n) {
  for (unsigned i = 0; i < n; ++i) {
    if (p(pts[i]) != pts[i]) return false;
  }
  return true;
}

} // namespace

void StabilizerChain::rebuild_orbit(unsigned level) {
  Level& L = levels_[level];
  L.orbit.clear();
  L.transversal.clear();
  L.transversal_idx.assign(degree_, -1);
  L.orbit.push_back(L.base_point);
  L.transversal_idx[L.base_point] = 0;
  L.transversal.push_back(Permutation::identity(degree_));
  for (std::size_t qi = 0; qi < L.orbit.size(); ++qi) {
    std::uint16_t p = L.orbit[qi];
    for (const auto& s : L.generators) {
      std::uint16_t x = s(p);
      if (L.transversal_idx[x] < 0) {
        L.transversal_idx[x] = static_cast<std::int32_t>(L.orbit.size());
        L.orbit.push_back(x);
        L.transversal.push_back(compose(L.transversal[qi], s));
      }
    }
  }
}

bool StabilizerChain::sift(const Permutation& p, unsigned from_level, Permutation* residue_out,
                           unsigned* level_out) const {
  Permutation h = p;
  unsigned j = from_level;
  for (; j < levels_.size(); ++j) {
    const Level& L = levels_[j];
    std::uint16_t x = h(L.base_point);
    std::int32_t idx = L.transversal_idx[x];
    if (idx < 0) break;
    if (x != L.base_point) h = compose(h, inverse(L.transversal[idx]));
  }
  if (residue_out) *residue_out = h;
  if (level_out) *level_out = j;
  return j == levels_.size() && h.is_identity();
}

StabilizerChain StabilizerChain::build(const GeneratedGroup& g,
                                       std::optional<std::uint64_t> declared_order,
                                       const std::vector<std::uint16_t>& base_prefix) {
  StabilizerChain c;
  c.degree_ = g.degree;

  auto add_level = [&c](std::uint16_t b) {
    Level L;
    L.base_point = b;
    c.levels_.push_back(std::move(L));
    c.base_.push_back(b);
  };

  for (auto u : base_prefix) {
    if (u >= c.degree_) throw std::out_of_range("base point exceeds degree");
    add_level(u);
  }

  std::vector<Permutation> gens;
  for (const auto& p : g.generators) {
    if (!p.is_identity()) gens.push_back(p);
  }
  for (const auto& p : gens) {
    if (fixes_all(p, c.base_, static_cast<unsigned>(c.base_.size()))) add_level(min_moved_point(p));
  }
  for (unsigned m = 0; m < c.levels_.size(); ++m) {
    for (const auto& p : gens) {
      if (fixes_all(p, c.base_, m)) c.levels_[m].generators.push_back(p);
    }
    c.rebuild_orbit(m);
  }

  // Bottom-up verification: a level is certified once all its Schreier generators
  // sift to the identity through the levels below it.
  int i = static_cast<int>(c.levels_.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    Level& L = c.levels_[i];
    // NB: add_level below reallocates levels_, so restart must short-circuit
    // before the conditions touch L again.
    for (std::size_t oi = 0; !restart && oi < L.orbit.size(); ++oi) {
      std::uint16_t p = L.orbit[oi];
      const Permutation tp = L.transversal[oi];
      for (std::size_t si = 0; !restart && si < L.generators.size(); ++si) {
        const Permutation s = L.generators[si];
        std::uint16_t ps = s(p);
        std::int32_t tidx = L.transversal_idx[ps];
        assert(tidx >= 0);
        Permutation schreier = compose(compose(tp, s), inverse(L.transversal[tidx]));
        if (schreier.is_identity()) continue;
        Permutation h;
        unsigned j = 0;
        if (c.sift(schreier, static_cast<unsigned>(i) + 1, &h, &j)) continue;
        if (j == c.levels_.size()) {
          if (h.is_identity()) continue;
          add_level(min_moved_point(h));
        }
        for (unsigned m = static_cast<unsigned>(i) + 1; m <= j; ++m) {
          c.levels_[m].generators.push_back(h);
          c.rebuild_orbit(m);
        }
        i = static_cast<int>(j);
        restart = true;
      }
    }
    if (!restart) --i;
  }

  if (declared_order) {
    if (c.order() != *declared_order) {
      throw std::runtime_error("stabilizer chain order " + std::to_string(c.order()) +
                               " differs from declared order " + std::to_string(*declared_order));
    }
  }
  return c;
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t ord = 1;
  for (const auto& L : levels_) {
    std::uint64_t n = L.orbit.size();
    std::uint64_t prod = 0;
    if (__builtin_mul_overflow(ord, n, &prod)) {
      throw std::overflow_error("group order exceeds 64 bits");
    }
    ord = prod;
  }
  return ord;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("contains: degree mismatch");
  return sift(p, 0, nullptr, nullptr);
}

GeneratedGroup StabilizerChain::point_stabilizer(const GeneratedGroup& g, std::uint16_t u) const {
  StabilizerChain c = build(g, std::nullopt, {u});
  std::vector<Permutation> gens;
  if (c.levels_.size() >= 2) {
    gens = c.levels_[1].generators;
  } else if (!c.levels_.empty() && c.levels_[0].orbit.size() == 1) {
    gens = g.generators; // u is fixed by the whole group
  }
  if (gens.empty()) gens.push_back(Permutation::identity(g.degree));
  return GeneratedGroup(g.degree, std::move(gens));
}

bool is_transitive_on_product(const GeneratedGroup& h, const KSubset& gamma) {
#ifndef NDEBUG
  for (const auto& p : h.generators) {
    assert(image_of_set(p, gamma) == gamma && "is_transitive_on_product: gamma not fixed setwise");
  }
#endif
  unsigned k = gamma.popcount();
  if (k == 0) return false;
  unsigned v = h.degree;
  std::uint16_t u = static_cast<std::uint16_t>(gamma.min_element());
  auto orb = point_orbit(h, u);
  if (orb.size() != k) return false;
  if (k == v) return false; // no outside points: product is empty
  StabilizerChain hc = StabilizerChain::build(h);
  GeneratedGroup stab = hc.point_stabilizer(h, u);
  KSubset comp = complement(gamma, v);
  std::uint16_t w = static_cast<std::uint16_t>(comp.min_element());
  auto orb2 = point_orbit(stab, w);
  return orb2.size() == v - k;
}

} // namespace jnt
