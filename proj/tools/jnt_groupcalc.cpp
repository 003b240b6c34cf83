// Offline helper for building the group catalog: orbit/stabilizer extraction,
// membership, and centralizers at degrees too large for a scripting language.
// Input and output are JSON; permutations are 1-based image arrays.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "jnt/chain.hpp"
#include "jnt/engine.hpp"
#include "jnt/group.hpp"
#include "jnt/hashset.hpp"
#include "jnt/perm.hpp"
#include "jnt/subset.hpp"

using nlohmann::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

jnt::Permutation parse_perm(const json& arr, unsigned degree) {
  std::vector<std::uint16_t> img(degree);
  if (arr.size() != degree) throw std::runtime_error("image array length != degree");
  for (unsigned i = 0; i < degree; ++i) {
    img[i] = static_cast<std::uint16_t>(arr[i].get<unsigned>() - 1);
  }
  return jnt::Permutation(std::move(img));
}

jnt::GeneratedGroup parse_group(const json& j) {
  unsigned degree = j.at("degree").get<unsigned>();
  std::vector<jnt::Permutation> gens;
  for (const auto& g : j.at("generators")) gens.push_back(parse_perm(g, degree));
  return jnt::GeneratedGroup(degree, std::move(gens));
}

json perm_to_json(const jnt::Permutation& p) {
  json arr = json::array();
  for (unsigned i = 0; i < p.degree(); ++i) arr.push_back(p(static_cast<std::uint16_t>(i)) + 1);
  return arr;
}

std::uint64_t group_order(const json& spec, const jnt::GeneratedGroup& g) {
  if (spec.contains("order")) {
    const auto& o = spec.at("order");
    if (o.is_string()) return std::stoull(o.get<std::string>());
    return o.get<std::uint64_t>();
  }
  return jnt::StabilizerChain::build(g).order();
}

int cmd_order(const std::string& gpath) {
  jnt::GeneratedGroup g = parse_group(load_json(gpath));
  auto chain = jnt::StabilizerChain::build(g);
  json out{{"order", std::to_string(chain.order())}};
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_orbits(const std::string& gpath) {
  jnt::GeneratedGroup g = parse_group(load_json(gpath));
  json sizes = json::array();
  for (const auto& orb : jnt::orbit_partition(g)) sizes.push_back(orb.size());
  std::cout << json{{"orbit_sizes", sizes}}.dump() << "\n";
  return 0;
}

int cmd_point_stab(const std::string& gpath, unsigned point1) {
  jnt::GeneratedGroup g = parse_group(load_json(gpath));
  auto chain = jnt::StabilizerChain::build(g);
  jnt::GeneratedGroup stab =
      chain.point_stabilizer(g, static_cast<std::uint16_t>(point1 - 1));
  auto sc = jnt::StabilizerChain::build(stab);
  json gens = json::array();
  for (const auto& p : stab.generators) gens.push_back(perm_to_json(p));
  json out{{"order", std::to_string(sc.order())}, {"generators", gens}};
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_orbit_stab(const std::string& gpath, const std::string& spath) {
  json gspec = load_json(gpath);
  jnt::GeneratedGroup g = parse_group(gspec);
  json sspec = load_json(spath);
  std::vector<std::uint16_t> pts;
  for (const auto& p : sspec.at("points")) {
    pts.push_back(static_cast<std::uint16_t>(p.get<unsigned>() - 1));
  }
  jnt::KSubset gamma = jnt::make_subset(pts);
  std::uint64_t order = group_order(gspec, g);

  jnt::IndexedSetOrbit orb = jnt::build_indexed_orbit(g, gamma, 1ull << 26);
  jnt::GeneratedGroup stab = jnt::set_stabilizer(g, order, orb);

  json gens = json::array();
  for (const auto& p : stab.generators) gens.push_back(perm_to_json(p));
  json rep = json::array();
  for (auto e : orb.get(orb.min_rep_index()).elements()) rep.push_back(e + 1);
  json out{{"orbit_size", orb.size()},
           {"stab_order", std::to_string(order / orb.size())},
           {"stab_generators", gens},
           {"min_rep", rep}};
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_contains(const std::string& gpath, const std::string& ppath) {
  jnt::GeneratedGroup g = parse_group(load_json(gpath));
  auto chain = jnt::StabilizerChain::build(g);
  json pl = load_json(ppath);
  json res = json::array();
  for (const auto& arr : pl.at("perms")) {
    res.push_back(chain.contains(parse_perm(arr, g.degree)));
  }
  std::cout << json{{"contains", res}}.dump() << "\n";
  return 0;
}

// Conjugation-orbit sweep: the class of x under g, its centralizer (the
// stabilizer in the conjugation action), and conjugators x -> x^e for the
// requested powers e.
int cmd_centralizer(const std::string& gpath, const std::string& epath,
                    const std::vector<unsigned>& powers) {
  json gspec = load_json(gpath);
  jnt::GeneratedGroup g = parse_group(gspec);
  const unsigned deg = g.degree;
  jnt::Permutation x = parse_perm(load_json(epath).at("images"), deg);
  std::uint64_t order = group_order(gspec, g);

  auto hash_perm = [deg](const jnt::Permutation& p) {
    std::uint64_t h1 = 0x243f6a8885a308d3ull, h2 = 0x13198a2e03707344ull;
    for (unsigned i = 0; i < deg; ++i) {
      std::uint64_t v = p(static_cast<std::uint16_t>(i)) + 1u;
      h1 = (h1 ^ v) * 0x100000001b3ull;
      h2 = (h2 + v) * 0x9e3779b97f4a7c15ull;
      h2 ^= h2 >> 29;
    }
    return std::pair<std::uint64_t, std::uint64_t>{h1, h2};
  };

  std::vector<std::uint16_t> flat;
  std::vector<std::uint32_t> parent, via;
  jnt::FingerprintMap seen(1024);
  auto push = [&](const jnt::Permutation& p, std::uint32_t par, std::uint32_t gi) {
    for (unsigned i = 0; i < deg; ++i) flat.push_back(p(static_cast<std::uint16_t>(i)));
    parent.push_back(par);
    via.push_back(gi);
  };
  auto at = [&](std::uint64_t i) {
    std::vector<std::uint16_t> img(flat.begin() + i * deg, flat.begin() + (i + 1) * deg);
    return jnt::Permutation(std::move(img));
  };

  {
    auto key = hash_perm(x);
    bool occ = false;
    seen.find_or_insert(key.first, key.second, 0, occ);
    push(x, 0, 0);
  }
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    jnt::Permutation p = at(i);
    for (unsigned gi = 0; gi < g.generators.size(); ++gi) {
      const auto& s = g.generators[gi];
      jnt::Permutation q = jnt::compose(jnt::compose(jnt::inverse(s), p), s);
      auto key = hash_perm(q);
      bool occ = false;
      seen.find_or_insert(key.first, key.second, static_cast<std::uint32_t>(n), occ);
      if (!occ) {
        push(q, static_cast<std::uint32_t>(i), gi);
        ++n;
        if (n > (1ull << 24)) throw std::runtime_error("conjugacy class too large");
      }
    }
  }
  if (order % n != 0) throw std::runtime_error("class size does not divide group order");
  std::uint64_t target = order / n;

  auto transversal = [&](std::uint32_t i) {
    std::vector<std::uint32_t> path;
    while (i != 0) {
      path.push_back(via[i]);
      i = parent[i];
    }
    jnt::Permutation t = jnt::Permutation::identity(deg);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      t = jnt::compose(t, g.generators[*it]);
    }
    return t;
  };

  std::vector<jnt::Permutation> cgens;
  jnt::StabilizerChain sc;
  std::uint64_t cur = 1;
  for (std::uint32_t i = 0; i < n && cur < target; ++i) {
    jnt::Permutation ti = transversal(i);
    for (unsigned gi = 0; gi < g.generators.size() && cur < target; ++gi) {
      jnt::Permutation q =
          jnt::compose(jnt::compose(jnt::inverse(g.generators[gi]), at(i)), g.generators[gi]);
      auto key = hash_perm(q);
      auto j = seen.find(key.first, key.second);
      if (j < 0) throw std::runtime_error("conjugate fell outside the class");
      jnt::Permutation s = jnt::compose(jnt::compose(ti, g.generators[gi]),
                                        jnt::inverse(transversal(static_cast<std::uint32_t>(j))));
      if (s.is_identity()) continue;
      if (!cgens.empty() && sc.contains(s)) continue;
      cgens.push_back(s);
      sc = jnt::StabilizerChain::build(jnt::GeneratedGroup(deg, cgens));
      cur = sc.order();
    }
  }
  if (cur != target) throw std::runtime_error("centralizer sweep incomplete");

  json conj = json::object();
  for (unsigned e : powers) {
    jnt::Permutation xe = x;
    for (unsigned t = 1; t < e; ++t) xe = jnt::compose(xe, x);
    auto key = hash_perm(xe);
    auto j = seen.find(key.first, key.second);
    if (j < 0) {
      conj[std::to_string(e)] = nullptr;
    } else {
      conj[std::to_string(e)] = perm_to_json(transversal(static_cast<std::uint32_t>(j)));
    }
  }

  json gens = json::array();
  for (const auto& p : cgens) gens.push_back(perm_to_json(p));
  json out{{"class_size", n},
           {"centralizer_order", std::to_string(target)},
           {"centralizer_generators", gens},
           {"conjugators", conj}};
  std::cout << out.dump() << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    if (args.size() == 2 && args[0] == "order") return cmd_order(args[1]);
    if (args.size() == 2 && args[0] == "orbits") return cmd_orbits(args[1]);
    if (args.size() == 3 && args[0] == "point-stab") {
      return cmd_point_stab(args[1], static_cast<unsigned>(std::stoul(args[2])));
    }
    if (args.size() == 3 && args[0] == "orbit-stab") return cmd_orbit_stab(args[1], args[2]);
    if (args.size() == 3 && args[0] == "contains") return cmd_contains(args[1], args[2]);
    if ((args.size() == 3 || args.size() == 4) && args[0] == "centralizer") {
      std::vector<unsigned> powers;
      if (args.size() == 4) {
        std::string s = args[3];
        std::size_t pos = 0;
        while (pos < s.size()) {
          auto comma = s.find(',', pos);
          if (comma == std::string::npos) comma = s.size();
          powers.push_back(static_cast<unsigned>(std::stoul(s.substr(pos, comma - pos))));
          pos = comma + 1;
        }
      }
      return cmd_centralizer(args[1], args[2], powers);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  std::cerr << "usage: jnt_groupcalc order GROUP.json\n"
            << "       jnt_groupcalc orbits GROUP.json\n"
            << "       jnt_groupcalc point-stab GROUP.json POINT\n"
            << "       jnt_groupcalc orbit-stab GROUP.json SET.json\n"
            << "       jnt_groupcalc contains GROUP.json PERMS.json\n"
            << "       jnt_groupcalc centralizer GROUP.json ELEM.json [POWERS]\n";
  return 2;
}
