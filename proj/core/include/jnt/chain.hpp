#pragma once

#include <cstdint>
#include <optional>

#include "jnt/group.hpp"

namespace jnt {

// Base, basic orbits and transversals for a permutation group, built by a
// deterministic (non-randomized) Schreier-Sims so identical generator lists
// always produce identical chains. Base points are chosen as the smallest
// moved points. Orders are unsigned 64-bit; overflow is a hard error.
class StabilizerChain {
public:
  struct Level {
    std::uint16_t base_point = 0;
    std::vector<Permutation> generators;       // generators of this level's group
    std::vector<std::uint16_t> orbit;          // basic orbit in discovery order
    std::vector<std::int32_t> transversal_idx; // point -> index into transversal, -1 if absent
    std::vector<Permutation> transversal;      // element mapping base_point to orbit point
  };

  // Builds the chain. If declared_order is given and the computed order differs,
  // throws std::runtime_error (corrupt data signal).
  // base_prefix forces the given points to head the base (used for point stabilizers).
  static StabilizerChain build(const GeneratedGroup& g,
                               std::optional<std::uint64_t> declared_order = std::nullopt,
                               const std::vector<std::uint16_t>& base_prefix = {});

  std::uint64_t order() const;
  bool contains(const Permutation& p) const;

  unsigned degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }
  const std::vector<std::uint16_t>& base() const { return base_; }

  // Generators of the full stabilizer of u in the group: rebuild with base
  // prefix [u] and return the strong generators fixing u. The result always
  // carries at least the identity.
  GeneratedGroup point_stabilizer(const GeneratedGroup& g, std::uint16_t u) const;

private:
  unsigned degree_ = 0;
  std::vector<std::uint16_t> base_;
  std::vector<Level> levels_;

  bool sift(const Permutation& p, unsigned from_level, Permutation* residue_out,
            unsigned* level_out) const;
  void rebuild_orbit(unsigned level);
};

} // namespace jnt
