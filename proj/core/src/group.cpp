#include "jnt/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace jnt {

std::vector<std::uint16_t> point_orbit(const GeneratedGroup& g, std::uint16_t u) {
  if (u >= g.degree) throw std::out_of_range("point_orbit: point exceeds degree");
  std::vector<bool> seen(g.degree, false);
  std::vector<std::uint16_t> queue;
  queue.push_back(u);
  seen[u] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::uint16_t p = queue[qi];
    for (const auto& s : g.generators) {
      std::uint16_t x = s(p);
      if (!seen[x]) {
        seen[x] = true;
        queue.push_back(x);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::vector<std::uint16_t>> orbit_partition(const GeneratedGroup& g) {
  std::vector<std::vector<std::uint16_t>> parts;
  std::vector<bool> done(g.degree, false);
  for (unsigned u = 0; u < g.degree; ++u) {
    if (done[u]) continue;
    auto orb = point_orbit(g, static_cast<std::uint16_t>(u));
    for (auto p : orb) done[p] = true;
    parts.push_back(std::move(orb));
  }
  return parts;
}

bool is_transitive(const GeneratedGroup& g) {
  return point_orbit(g, 0).size() == g.degree;
}

} // namespace jnt
