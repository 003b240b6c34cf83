#include "jnt/catalog.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

#include "jnt/chain.hpp"

namespace jnt {

namespace {

using nlohmann::json;

std::uint64_t parse_order(const json& j) {
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    std::size_t pos = 0;
    std::uint64_t val = std::stoull(s, &pos);
    if (pos != s.size()) throw std::runtime_error("bad order string: " + s);
    return val;
  }
  return j.get<std::uint64_t>();
}

Permutation parse_generator(const json& j, unsigned degree) {
  if (!j.is_array() || j.size() != degree) {
    throw std::runtime_error("generator image list must have one entry per point");
  }
  std::vector<std::uint16_t> images(degree);
  for (unsigned i = 0; i < degree; ++i) {
    std::uint64_t img = j[i].get<std::uint64_t>();
    if (img < 1 || img > degree) throw std::runtime_error("generator image out of range");
    images[i] = static_cast<std::uint16_t>(img - 1); // file format is 1-based
  }
  return Permutation(std::move(images));
}

CatalogEntry parse_entry(const json& j, unsigned inherited_degree) {
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.degree = j.contains("degree") ? j.at("degree").get<unsigned>() : inherited_degree;
  if (e.degree == 0) throw std::runtime_error("entry " + e.name + ": missing degree");
  e.order = parse_order(j.at("order"));
  e.two_transitive = j.value("two_transitive", false);
  for (const auto& gj : j.at("generators")) e.generators.push_back(parse_generator(gj, e.degree));
  if (e.generators.empty()) throw std::runtime_error("entry " + e.name + ": no generators");
  if (j.contains("maximal_subgroups")) {
    for (const auto& cj : j.at("maximal_subgroups")) {
      e.maximal_subgroups.push_back(parse_entry(cj, e.degree));
    }
  }
  return e;
}

void validate_node(const CatalogEntry& e, const StabilizerChain* parent_chain,
                   const std::string& path, std::vector<std::string>& problems) {
  StabilizerChain chain;
  bool chain_ok = false;
  try {
    chain = StabilizerChain::build(e.group());
    chain_ok = true;
  } catch (const std::exception& ex) {
    problems.push_back(path + ": chain construction failed: " + ex.what());
  }
  if (chain_ok && chain.order() != e.order) {
    problems.push_back(path + ": computed order " + std::to_string(chain.order()) +
                       " != declared " + std::to_string(e.order));
  }
  if (parent_chain) {
    for (std::size_t i = 0; i < e.generators.size(); ++i) {
      if (!parent_chain->contains(e.generators[i])) {
        problems.push_back(path + ": generator " + std::to_string(i + 1) +
                           " is not a member of the parent group");
      }
    }
  }
  if (e.two_transitive && chain_ok) {
    GeneratedGroup g = e.group();
    if (!is_transitive(g)) {
      problems.push_back(path + ": flagged two_transitive but not transitive");
    } else {
      GeneratedGroup stab = chain.point_stabilizer(g, 0);
      auto orb = point_orbit(stab, 1);
      if (orb.size() != g.degree - 1) {
        problems.push_back(path + ": flagged two_transitive but point stabilizer is not "
                           "transitive on the remaining points");
      }
    }
  }
  for (const auto& child : e.maximal_subgroups) {
    std::string cpath = path + "/" + child.name;
    if (child.degree != e.degree) {
      problems.push_back(cpath + ": degree differs from parent");
      continue;
    }
    if (child.order == 0 || e.order % child.order != 0 || child.order == e.order) {
      problems.push_back(cpath + ": order " + std::to_string(child.order) +
                         " must strictly divide parent order " + std::to_string(e.order));
    }
    validate_node(child, chain_ok ? &chain : nullptr, cpath, problems);
  }
}

} // namespace

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  json root;
  try {
    in >> root;
  } catch (const json::exception& ex) {
    throw std::runtime_error("catalog parse error in " + path + ": " + ex.what());
  }
  Catalog cat;
  for (const auto& ej : root.at("entries")) cat.entries.push_back(parse_entry(ej, 0));
  return cat;
}

const CatalogEntry* find_entry(const Catalog& cat, const std::string& name) {
  for (const auto& e : cat.entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::vector<std::string> validate_catalog(const Catalog& cat) {
  std::vector<std::string> problems;
  for (const auto& e : cat.entries) validate_node(e, nullptr, e.name, problems);
  return problems;
}

} // namespace jnt
