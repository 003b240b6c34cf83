#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "jnt/analysis.hpp"
#include "jnt/catalog.hpp"
#include "jnt/engine.hpp"
#include "jnt/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIncomplete = 3;

struct CommonArgs {
  std::string catalog_path;
  std::vector<std::string> groups;
  std::string k_range;
  std::string mode = "auto";
  std::uint64_t orbit_cap = 1ull << 24;
  std::uint64_t neighbour_cap = 1ull << 27;
  unsigned workers = 0;
  std::string out_path;
};

void add_catalog_flag(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--catalog", a.catalog_path, "catalog JSON file (default: $JNT_CATALOG)");
}

void add_search_flags(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--group", a.groups, "group name filter, comma separated")->delimiter(',');
  cmd->add_option("--k", a.k_range, "codeword size: K (exact) or MIN:MAX");
  cmd->add_option("--mode", a.mode, "chain | exhaustive | auto (default auto)")
      ->check(CLI::IsMember({"chain", "exhaustive", "auto"}));
  cmd->add_option("--orbit-cap", a.orbit_cap, "max k-sets per orbit (default 2^24)");
  cmd->add_option("--neighbour-cap", a.neighbour_cap,
                  "max states in flag/neighbour sweeps (default 2^27)");
  cmd->add_option("--workers", a.workers, "worker threads (default: hardware parallelism)");
  cmd->add_option("--out", a.out_path, "write the report here instead of stdout");
}

std::string resolved_catalog(const CommonArgs& a) {
  if (!a.catalog_path.empty()) return a.catalog_path;
  if (const char* env = std::getenv("JNT_CATALOG")) return env;
  throw CLI::ValidationError("--catalog", "no catalog given and JNT_CATALOG is not set");
}

jnt::SearchOptions make_options(const CommonArgs& a) {
  jnt::SearchOptions opts;
  opts.orbit_cap = a.orbit_cap;
  opts.neighbour_cap = a.neighbour_cap;
  opts.workers = a.workers ? a.workers : std::max(1u, std::thread::hardware_concurrency());
  if (!a.k_range.empty()) {
    auto colon = a.k_range.find(':');
    if (colon == std::string::npos) {
      unsigned k = static_cast<unsigned>(std::stoul(a.k_range));
      opts.k_min = k;
      opts.k_max = k;
    } else {
      std::string lo = a.k_range.substr(0, colon);
      std::string hi = a.k_range.substr(colon + 1);
      opts.k_min = lo.empty() ? 2 : static_cast<unsigned>(std::stoul(lo));
      opts.k_max = hi.empty() ? 0 : static_cast<unsigned>(std::stoul(hi));
    }
  }
  return opts;
}

jnt::SearchMode parse_mode(const std::string& s) {
  if (s == "chain") return jnt::SearchMode::kChain;
  if (s == "exhaustive") return jnt::SearchMode::kExhaustive;
  return jnt::SearchMode::kAuto;
}

std::vector<const jnt::CatalogEntry*> select_entries(const jnt::Catalog& cat,
                                                     const std::vector<std::string>& names) {
  std::vector<const jnt::CatalogEntry*> out;
  if (names.empty()) {
    for (const auto& e : cat.entries) out.push_back(&e);
    return out;
  }
  for (const auto& name : names) {
    bool any = false;
    for (const auto& e : cat.entries) {
      if (e.name == name) {
        out.push_back(&e);
        any = true;
      }
    }
    if (!any) throw CLI::ValidationError("--group", "unknown group: " + name);
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << text;
}

int cmd_validate(const CommonArgs& a) {
  std::string path = resolved_catalog(a);
  {
    std::ifstream probe(path);
    if (!probe) {
      std::cerr << "error: cannot open catalog file: " << path << "\n";
      return kExitUsage;
    }
  }
  jnt::Catalog cat;
  try {
    cat = jnt::load_catalog(path);
  } catch (const std::exception& ex) {
    std::cerr << "catalog is not loadable: " << ex.what() << "\n";
    return kExitMismatch;
  }
  auto problems = jnt::validate_catalog(cat);
  for (const auto& p : problems) std::cout << p << "\n";
  std::cout << "validated " << cat.entries.size() << " top-level entries, " << problems.size()
            << " problems\n";
  return problems.empty() ? kExitOk : kExitMismatch;
}

int cmd_classify(const CommonArgs& a) {
  jnt::Catalog cat = jnt::load_catalog(resolved_catalog(a));
  auto entries = select_entries(cat, a.groups);
  jnt::SearchMode mode = parse_mode(a.mode);
  if (mode == jnt::SearchMode::kExhaustive) {
    for (const auto* e : entries) {
      if (e->degree > 24) {
        throw CLI::ValidationError("--mode",
                                   "exhaustive mode needs degree <= 24, but " + e->name +
                                       " acts on " + std::to_string(e->degree) + " points");
      }
    }
  }
  jnt::SearchOptions opts = make_options(a);
  std::vector<jnt::CodeAnalysis> rows;
  bool complete = true;
  for (const auto* e : entries) {
    jnt::SearchResult res;
    auto part = jnt::classify_entry(*e, opts, mode, &res);
    for (auto& r : part) rows.push_back(std::move(r));
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
    if (!res.complete) complete = false;
  }
  emit(jnt::render_tsv(rows), a.out_path);
  return complete ? kExitOk : kExitIncomplete;
}

int cmd_verify_table(const CommonArgs& a, unsigned perturb_line) {
  jnt::Catalog cat = jnt::load_catalog(resolved_catalog(a));
  jnt::VerifyConfig cfg;
  cfg.groups = a.groups;
  cfg.mode = parse_mode(a.mode);
  cfg.perturb_line = perturb_line;
  jnt::SearchOptions opts = make_options(a);
  std::ostringstream buf;
  jnt::VerifyOutcome outcome = jnt::verify_table(cat, opts, cfg, buf);
  emit(buf.str(), a.out_path);
  if (!a.out_path.empty()) std::cout << buf.str();
  if (!outcome.complete) return kExitIncomplete;
  return outcome.all_ok ? kExitOk : kExitMismatch;
}

int cmd_export(const CommonArgs& a) {
  jnt::Catalog cat = jnt::load_catalog(resolved_catalog(a));
  if (a.groups.empty()) throw CLI::ValidationError("--group", "export needs a group name");
  if (a.k_range.empty() || a.k_range.find(':') != std::string::npos) {
    throw CLI::ValidationError("--k", "export needs one exact k value");
  }
  auto entries = select_entries(cat, a.groups);
  jnt::SearchOptions opts = make_options(a);
  unsigned k = static_cast<unsigned>(std::stoul(a.k_range));
  opts.k_min = k;
  opts.k_max = k;

  std::ostringstream out;
  unsigned exported = 0;
  for (const auto* e : entries) {
    jnt::SearchResult res;
    auto rows = jnt::classify_entry(*e, opts, jnt::SearchMode::kAuto, &res);
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
    for (const auto& r : rows) {
      if (r.cand.k != k) continue;
      if (r.cand.v > 64) {
        throw std::runtime_error("export supports degree <= 64 only (requested " +
                                 std::to_string(r.cand.v) + ")");
      }
      jnt::GeneratedGroup g = e->group();
      auto words = jnt::orbit_words(g, r.cand.representative, opts.orbit_cap);
      auto vecs = jnt::hamming_image(words, r.cand.v);
      unsigned hd = jnt::hamming_min_distance(vecs);
      out << "# group=" << r.cand.group_name << " v=" << r.cand.v << " k=" << r.cand.k
          << " size=" << r.cand.code_size << " delta=" << r.delta << " hamming_min=" << hd
          << "\n";
      out << "# columns are points 1.." << r.cand.v << "\n";
      for (auto m : vecs) {
        for (unsigned i = 0; i < r.cand.v; ++i) out << (((m >> i) & 1) ? '1' : '0');
        out << "\n";
      }
      ++exported;
    }
  }
  if (exported == 0) {
    std::cerr << "warning: no codes matched the selection; nothing written\n";
    return kExitOk;
  }
  emit(out.str(), a.out_path);
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"classification and verification of highly symmetric codes in Johnson graphs"};
  app.require_subcommand(1);

  CommonArgs va;
  CLI::App* validate = app.add_subcommand("validate", "check catalog consistency");
  add_catalog_flag(validate, va);

  CommonArgs ca;
  CLI::App* classify = app.add_subcommand("classify", "search for codes and report them");
  add_catalog_flag(classify, ca);
  add_search_flags(classify, ca);

  CommonArgs ta;
  unsigned perturb_line = 0;
  CLI::App* verify = app.add_subcommand("verify-table", "re-derive the reference classification");
  add_catalog_flag(verify, ta);
  add_search_flags(verify, ta);
  verify->add_option("--perturb-line", perturb_line,
                     "self-test: alter this reference row and expect a mismatch");

  CommonArgs ea;
  CLI::App* exportc = app.add_subcommand("export", "write a code as binary rows");
  add_catalog_flag(exportc, ea);
  add_search_flags(exportc, ea);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(va);
    if (classify->parsed()) return cmd_classify(ca);
    if (verify->parsed()) return cmd_verify_table(ta, perturb_line);
    if (exportc->parsed()) return cmd_export(ea);
  } catch (const CLI::ValidationError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
