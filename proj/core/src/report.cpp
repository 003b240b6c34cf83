#include "jnt/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace jnt {

SearchResult run_auto(const CatalogEntry& entry, const SearchOptions& opts) {
  if (entry.degree <= 24) return exhaustive_search(entry, opts);
  return chain_search(entry, opts);
}

namespace {

bool same_class(const CodeAnalysis& a, const CodeAnalysis& b) {
  return a.cand.v == b.cand.v && a.cand.k == b.cand.k && a.delta == b.delta &&
         a.cand.code_size == b.cand.code_size &&
         a.self_complementary == b.self_complementary;
}

} // namespace

std::vector<CodeAnalysis> classify_entry(const CatalogEntry& entry, const SearchOptions& opts,
                                         SearchMode mode, SearchResult* result_out) {
  if (mode == SearchMode::kAuto) {
    mode = entry.degree <= 24 ? SearchMode::kExhaustive : SearchMode::kChain;
  }
  SearchResult res =
      mode == SearchMode::kExhaustive ? exhaustive_search(entry, opts) : chain_search(entry, opts);
  GeneratedGroup g = entry.group();
  std::vector<CodeAnalysis> rows;
  for (const auto& cand : res.candidates) {
    CodeAnalysis a = analyse_candidate(g, cand, opts);
    bool merged = false;
    for (auto& row : rows) {
      if (same_class(row, a)) {
        // Same parameters from a second orbit (possible for twin orbits):
        // keep one row but insist the analyses agree.
        if (row.lambda2 != a.lambda2 || row.design_t != a.design_t) {
          res.warnings.push_back(entry.name + " k=" + std::to_string(a.cand.k) +
                                 ": twin orbits disagree on design analysis");
          res.complete = false;
        }
        merged = true;
        break;
      }
    }
    if (!merged) rows.push_back(std::move(a));
  }
  if (result_out) *result_out = std::move(res);
  return rows;
}

std::string render_tsv(const std::vector<CodeAnalysis>& rows) {
  std::vector<const CodeAnalysis*> order;
  order.reserve(rows.size());
  for (const auto& r : rows) order.push_back(&r);
  std::sort(order.begin(), order.end(), [](const CodeAnalysis* a, const CodeAnalysis* b) {
    if (a->cand.group_name != b->cand.group_name) return a->cand.group_name < b->cand.group_name;
    if (a->cand.v != b->cand.v) return a->cand.v < b->cand.v;
    if (a->cand.k != b->cand.k) return a->cand.k < b->cand.k;
    return a->cand.code_size < b->cand.code_size;
  });
  std::ostringstream out;
  out << "group\tv\tk\tdelta\tsize\tsc\tdesign_t\tdesign_lambda\tstatus\n";
  for (const CodeAnalysis* r : order) {
    std::string status;
    if (!r->neighbour_checked) {
      status = "nt_skipped";
    } else if (!r->neighbour_transitive) {
      status = "nt_fail";
    } else {
      status = "ok";
    }
    out << r->cand.group_name << '\t' << r->cand.v << '\t' << r->cand.k << '\t' << r->delta
        << '\t' << r->cand.code_size << '\t' << (r->self_complementary ? "yes" : "no") << '\t'
        << r->design_t << '\t' << r->design_lambda << '\t' << status << '\n';
  }
  return out.str();
}

namespace {

const CatalogEntry* find_by_name_degree(const Catalog& cat, const std::string& name,
                                        unsigned v) {
  for (const auto& e : cat.entries) {
    if (e.name == name && e.degree == v) return &e;
  }
  return nullptr;
}

} // namespace

VerifyOutcome verify_table(const Catalog& cat, const SearchOptions& opts,
                           const VerifyConfig& cfg, std::ostream& out) {
  VerifyOutcome outcome;

  std::vector<ExpectedRow> rows_to_check;
  for (const auto& r : expected_table()) {
    if (!cfg.groups.empty() &&
        std::find(cfg.groups.begin(), cfg.groups.end(), r.group) == cfg.groups.end()) {
      continue;
    }
    rows_to_check.push_back(r);
    if (cfg.perturb_line != 0 && r.line == cfg.perturb_line) {
      ++rows_to_check.back().delta; // deliberate mismatch: exercises failure reporting
    }
  }

  std::vector<std::pair<std::string, unsigned>> keys;
  for (const auto& r : rows_to_check) {
    std::pair<std::string, unsigned> key{r.group, r.v};
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
  }

  struct GroupRun {
    bool present = false;
    std::vector<CodeAnalysis> rows;
    std::vector<bool> used;
    SearchResult res;
  };
  std::vector<GroupRun> runs(keys.size());

  for (std::size_t i = 0; i < keys.size(); ++i) {
    const CatalogEntry* e = find_by_name_degree(cat, keys[i].first, keys[i].second);
    if (!e) {
      out << "group " << keys[i].first << " degree " << keys[i].second
          << ": missing from catalog\n";
      outcome.all_ok = false;
      continue;
    }
    GroupRun& gr = runs[i];
    gr.present = true;
    gr.rows = classify_entry(*e, opts, cfg.mode, &gr.res);
    gr.used.assign(gr.rows.size(), false);
    for (const auto& w : gr.res.warnings) out << "warning: " << w << "\n";
    if (!gr.res.complete) outcome.complete = false;
  }

  unsigned ok_rows = 0;
  for (const auto& r : rows_to_check) {
    std::size_t ki = 0;
    while (ki < keys.size() && !(keys[ki].first == r.group && keys[ki].second == r.v)) ++ki;
    GroupRun& gr = runs[ki];

    char head[160];
    std::snprintf(head, sizeof(head), "row %02u %-9s v=%-3u k=%-3u", r.line, r.group, r.v, r.k);
    out << head;

    if (!gr.present) {
      out << " [FAIL: group missing]\n";
      outcome.all_ok = false;
      continue;
    }
    CodeAnalysis* hit = nullptr;
    for (std::size_t i = 0; i < gr.rows.size(); ++i) {
      if (gr.rows[i].cand.k == r.k && gr.rows[i].cand.code_size == r.size) {
        hit = &gr.rows[i];
        gr.used[i] = true;
        break;
      }
    }
    if (!hit) {
      out << " [FAIL: no code with this k and size]\n";
      outcome.all_ok = false;
      continue;
    }

    std::vector<std::string> faults;
    if (hit->delta != r.delta) {
      faults.push_back("delta " + std::to_string(hit->delta) + "!=" + std::to_string(r.delta));
    }
    if (hit->self_complementary != r.self_complementary) faults.push_back("sc mismatch");
    if (hit->lambda2 != r.lambda2) {
      faults.push_back("lambda2 " + std::to_string(hit->lambda2) +
                       "!=" + std::to_string(r.lambda2));
    }
    if (r.label_t >= 2) {
      auto lam = hit->lambda_at(r.label_t);
      if (!lam) {
        faults.push_back("design t=" + std::to_string(r.label_t) + " not certified");
      } else if (*lam != r.label_lambda) {
        faults.push_back("lambda_t " + std::to_string(*lam) +
                         "!=" + std::to_string(r.label_lambda));
      }
    }
    if (hit->neighbour_checked && !hit->neighbour_transitive) {
      faults.push_back("not neighbour-transitive");
    }

    char mid[200];
    std::snprintf(mid, sizeof(mid), " delta=%-3u size=%-8llu sc=%-3s lambda2=%llu nt=%s",
                  hit->delta, static_cast<unsigned long long>(hit->cand.code_size),
                  hit->self_complementary ? "yes" : "no",
                  static_cast<unsigned long long>(hit->lambda2),
                  hit->neighbour_checked ? (hit->neighbour_transitive ? "yes" : "NO")
                                         : "skipped");
    out << mid;
    if (faults.empty()) {
      out << " [ok]\n";
      ++ok_rows;
    } else {
      out << " [FAIL:";
      for (const auto& f : faults) out << ' ' << f << ';';
      out << "]\n";
      outcome.all_ok = false;
    }
  }

  unsigned extras = 0;
  for (std::size_t ki = 0; ki < keys.size(); ++ki) {
    GroupRun& gr = runs[ki];
    if (!gr.present) continue;
    for (std::size_t i = 0; i < gr.rows.size(); ++i) {
      if (gr.used[i]) continue;
      const auto& c = gr.rows[i].cand;
      out << "extra code: " << c.group_name << " v=" << c.v << " k=" << c.k
          << " size=" << c.code_size << " [FAIL]\n";
      outcome.all_ok = false;
      ++extras;
    }
  }

  out << "verified " << ok_rows << "/" << rows_to_check.size() << " rows, " << extras
      << " unexpected codes, search " << (outcome.complete ? "complete" : "INCOMPLETE") << "\n";
  return outcome;
}

} // namespace jnt
