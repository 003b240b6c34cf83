#include "jnt/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <thread>

#include "jnt/binom.hpp"
#include "jnt/hashset.hpp"

namespace jnt {

namespace {

std::pair<std::uint64_t, std::uint64_t> subset_key(const KSubset& s, unsigned degree) {
  if (degree <= 64) return {s.w[0], 0};
  return {subset_hash(s), subset_hash2(s)};
}

} // namespace

bool divisibility_filter(std::uint64_t order, unsigned v, unsigned k) {
  if (k == 0 || k >= v) return false;
  std::uint64_t m = static_cast<std::uint64_t>(k) * (v - k);
  return order % m == 0;
}

KSubset IndexedSetOrbit::get(std::uint64_t i) const {
  KSubset s;
  for (unsigned w = 0; w < nw; ++w) s.w[w] = flat[i * nw + w];
  return s;
}

std::uint64_t IndexedSetOrbit::min_rep_index() const {
  std::uint64_t best = 0;
  KSubset bs = get(0);
  for (std::uint64_t i = 1; i < size(); ++i) {
    KSubset c = get(i);
    if (colex_less(c, bs)) {
      bs = c;
      best = i;
    }
  }
  return best;
}

IndexedSetOrbit build_indexed_orbit(const GeneratedGroup& g, const KSubset& seed,
                                    std::uint64_t cap) {
  IndexedSetOrbit orb;
  orb.v = g.degree;
  orb.k = seed.popcount();
  orb.nw = (g.degree + 63) / 64;
  orb.ngens = static_cast<unsigned>(g.generators.size());

  FingerprintMap idx_of(1024);
  auto push = [&orb](const KSubset& s, std::uint32_t par, std::uint32_t gi) {
    for (unsigned w = 0; w < orb.nw; ++w) orb.flat.push_back(s.w[w]);
    orb.parent.push_back(par);
    orb.via_gen.push_back(gi);
  };

  {
    auto key = subset_key(seed, orb.v);
    bool occ = false;
    idx_of.find_or_insert(key.first, key.second, 0, occ);
    push(seed, 0, 0);
  }

  for (std::uint64_t i = 0; i < orb.size(); ++i) {
    KSubset s = orb.get(i);
    for (unsigned gi = 0; gi < orb.ngens; ++gi) {
      KSubset img = image_of_set(g.generators[gi], s);
      auto key = subset_key(img, orb.v);
      bool occ = false;
      std::uint32_t next = static_cast<std::uint32_t>(orb.size());
      std::uint32_t j = idx_of.find_or_insert(key.first, key.second, next, occ);
      if (!occ) {
        if (orb.size() >= cap) {
          throw SearchLimit("set orbit exceeds cap of " + std::to_string(cap) + " elements");
        }
        push(img, static_cast<std::uint32_t>(i), gi);
      }
      orb.move.push_back(j);
    }
  }
  return orb;
}

std::uint64_t triple_orbit_size(const GeneratedGroup& g, const IndexedSetOrbit& orb,
                                std::uint64_t cap) {
  const std::uint64_t n = orb.size();
  const unsigned v = orb.v;
  const std::uint64_t space = n * v * v;
  if (space > (1ull << 33)) {
    throw SearchLimit("flag-orbit state space too large: " + std::to_string(space));
  }
  KSubset s0 = orb.get(0);
  std::uint16_t a0 = static_cast<std::uint16_t>(s0.min_element());
  std::uint16_t b0 = static_cast<std::uint16_t>(complement(s0, v).min_element());

  std::vector<std::uint64_t> seen((space + 63) / 64, 0);
  auto mark = [&seen](std::uint64_t st) {
    std::uint64_t w = st >> 6, b = st & 63;
    bool was = (seen[w] >> b) & 1;
    seen[w] |= 1ull << b;
    return was;
  };

  std::vector<std::uint64_t> queue;
  std::uint64_t start = (static_cast<std::uint64_t>(0) * v + a0) * v + b0;
  mark(start);
  queue.push_back(start);
  std::uint64_t count = 1;

  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::uint64_t st = queue[qi];
    std::uint16_t b = static_cast<std::uint16_t>(st % v);
    std::uint64_t rest = st / v;
    std::uint16_t a = static_cast<std::uint16_t>(rest % v);
    std::uint64_t idx = rest / v;
    for (unsigned gi = 0; gi < orb.ngens; ++gi) {
      const Permutation& p = g.generators[gi];
      std::uint64_t idx2 = orb.move[idx * orb.ngens + gi];
      std::uint64_t st2 = (idx2 * v + p(a)) * v + p(b);
      if (!mark(st2)) {
        if (++count > cap) throw SearchLimit("flag orbit exceeds cap");
        queue.push_back(st2);
      }
    }
  }
  return count;
}

bool sit_by_triple_orbit(const GeneratedGroup& g, const IndexedSetOrbit& orb,
                         std::uint64_t cap) {
  std::uint64_t expected = orb.size() * orb.k * (orb.v - orb.k);
  if (expected > cap) {
    throw SearchLimit("flag-orbit budget " + std::to_string(expected) + " exceeds cap");
  }
  return triple_orbit_size(g, orb, cap) == expected;
}

bool sit_test_subgroup(const GeneratedGroup& h, const KSubset& gamma) {
  return is_transitive_on_product(h, gamma);
}

bool full_stabilizer_test(std::uint64_t group_order, std::uint64_t orbit_size,
                          std::uint64_t subgroup_order) {
  return orbit_size != 0 && group_order / orbit_size == subgroup_order &&
         group_order % orbit_size == 0;
}

GeneratedGroup set_stabilizer(const GeneratedGroup& g, std::uint64_t group_order,
                              const IndexedSetOrbit& orb) {
  const std::uint64_t n = orb.size();
  assert(n > 0 && group_order % n == 0);
  const std::uint64_t target = group_order / n;
  if (target == 1) return GeneratedGroup(g.degree, {Permutation::identity(g.degree)});

  auto transversal = [&g, &orb](std::uint32_t i) {
    std::vector<std::uint32_t> path;
    while (i != 0) {
      path.push_back(orb.via_gen[i]);
      i = orb.parent[i];
    }
    Permutation p = Permutation::identity(g.degree);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      p = compose(p, g.generators[*it]);
    }
    return p;
  };

  std::vector<Permutation> sgens;
  StabilizerChain sc;
  std::uint64_t cur = 1;
  for (std::uint32_t i = 0; i < n && cur < target; ++i) {
    Permutation ti = transversal(i);
    for (unsigned gi = 0; gi < orb.ngens && cur < target; ++gi) {
      std::uint32_t j = orb.move[static_cast<std::uint64_t>(i) * orb.ngens + gi];
      Permutation s = compose(compose(ti, g.generators[gi]), inverse(transversal(j)));
      if (s.is_identity()) continue;
      if (!sgens.empty() && sc.contains(s)) continue;
      sgens.push_back(s);
      sc = StabilizerChain::build(GeneratedGroup(g.degree, sgens));
      cur = sc.order();
    }
  }
  if (cur != target) {
    throw std::runtime_error("set_stabilizer: Schreier sweep stopped at order " +
                             std::to_string(cur) + " of " + std::to_string(target));
  }
  return GeneratedGroup(g.degree, sgens);
}

namespace {

struct ChainCtx {
  const GeneratedGroup& top;
  std::uint64_t top_order;
  std::string group_name;
  unsigned v;
  unsigned k_lo;
  unsigned k_hi;
  const SearchOptions& opts;
  SearchResult& out;
  std::vector<std::vector<std::uint64_t>> seen_reps; // dedup keys: k then packed words
};

bool remember_rep(ChainCtx& ctx, unsigned k, const KSubset& rep, unsigned nw) {
  std::vector<std::uint64_t> key;
  key.push_back(k);
  for (unsigned w = 0; w < nw; ++w) key.push_back(rep.w[w]);
  for (const auto& old : ctx.seen_reps) {
    if (old == key) return false;
  }
  ctx.seen_reps.push_back(std::move(key));
  return true;
}

void chain_node(ChainCtx& ctx, const CatalogEntry& node, const std::string& path) {
  GeneratedGroup h = node.group();
  auto parts = orbit_partition(h);

  if (parts.size() == 1) {
    if (!node.maximal_subgroups.empty()) {
      for (const auto& child : node.maximal_subgroups) {
        chain_node(ctx, child, path + "/" + child.name);
      }
      return;
    }
    // Transitive leaf: safe to drop only when no k in range passes the
    // divisibility gate (k <= 2 orbits are complete under a 2-transitive
    // group and are excluded anyway).
    for (unsigned k = std::max(3u, ctx.k_lo); k <= ctx.k_hi; ++k) {
      if (divisibility_filter(node.order, ctx.v, k)) {
        ctx.out.warnings.push_back(path + ": transitive subgroup has no listed subgroups but k=" +
                                   std::to_string(k) +
                                   " passes the divisibility gate; search may be incomplete");
        ctx.out.complete = false;
        return;
      }
    }
    return;
  }
  if (parts.size() != 2) return;

  const auto& small = parts[0].size() <= parts[1].size() ? parts[0] : parts[1];
  unsigned k = static_cast<unsigned>(small.size());
  if (k < ctx.k_lo || k > ctx.k_hi) return;
  if (!divisibility_filter(node.order, ctx.v, k)) return;

  std::vector<std::uint16_t> pts(small.begin(), small.end());
  KSubset gamma = make_subset(pts);
  if (!sit_test_subgroup(h, gamma)) return;

  IndexedSetOrbit orb;
  try {
    orb = build_indexed_orbit(ctx.top, gamma, ctx.opts.orbit_cap);
  } catch (const SearchLimit& ex) {
    ctx.out.warnings.push_back(path + ": " + ex.what());
    ctx.out.complete = false;
    return;
  }
  auto total = binomial_checked(ctx.v, k);
  if (total && orb.size() == *total) return; // orbit is every k-set: distance 1
  assert(ctx.top_order % orb.size() == 0);

  KSubset rep = orb.get(orb.min_rep_index());
  if (!remember_rep(ctx, k, rep, orb.nw)) return;

  Candidate c;
  c.group_name = ctx.group_name;
  c.v = ctx.v;
  c.k = k;
  c.representative = rep;
  c.code_size = orb.size();
  c.stab_order = ctx.top_order / orb.size();
  c.found_via = path;
  ctx.out.candidates.push_back(std::move(c));
}

void sort_candidates(std::vector<Candidate>& cands) {
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.k != b.k) return a.k < b.k;
    return colex_less(a.representative, b.representative);
  });
}

unsigned effective_k_hi(const SearchOptions& opts, unsigned v) {
  unsigned hi = v / 2;
  if (opts.k_max != 0 && opts.k_max < hi) hi = opts.k_max;
  return hi;
}

} // namespace

SearchResult chain_search(const CatalogEntry& top, const SearchOptions& opts) {
  SearchResult res;
  GeneratedGroup g = top.group();
  ChainCtx ctx{g,      top.order, top.name, top.degree, std::max(opts.k_min, 1u),
               effective_k_hi(opts, top.degree), opts, res, {}};
  if (top.maximal_subgroups.empty()) {
    for (unsigned k = std::max(3u, ctx.k_lo); k <= ctx.k_hi; ++k) {
      if (divisibility_filter(top.order, top.degree, k)) {
        res.warnings.push_back(top.name + ": no subgroups listed but k=" + std::to_string(k) +
                               " passes the divisibility gate; search may be incomplete");
        res.complete = false;
        break;
      }
    }
  }
  for (const auto& child : top.maximal_subgroups) {
    chain_node(ctx, child, top.name + "/" + child.name);
  }
  sort_candidates(res.candidates);
  return res;
}

namespace {

void exhaustive_k(const GeneratedGroup& g, std::uint64_t group_order, const std::string& name,
                  unsigned v, unsigned k, const SearchOptions& opts,
                  std::vector<Candidate>& out, std::vector<std::string>& warnings,
                  bool& complete) {
  std::uint64_t total = binomial(v, k);
  std::vector<std::uint64_t> visited((total + 63) / 64, 0);
  for (std::uint64_t r0 = 0; r0 < total; ++r0) {
    if ((visited[r0 >> 6] >> (r0 & 63)) & 1) continue;
    KSubset seed = colex_unrank(r0, k, v);
    IndexedSetOrbit orb;
    try {
      orb = build_indexed_orbit(g, seed, opts.orbit_cap);
    } catch (const SearchLimit& ex) {
      warnings.push_back(name + " k=" + std::to_string(k) + ": " + ex.what());
      complete = false;
      return;
    }
    std::uint64_t n = orb.size();
    for (std::uint64_t i = 0; i < n; ++i) {
      std::uint64_t r = colex_rank(orb.get(i));
      visited[r >> 6] |= 1ull << (r & 63);
    }
    if (n == total) continue;
    assert(group_order % n == 0);
    std::uint64_t stab = group_order / n;
    if (!divisibility_filter(stab, v, k)) continue;

    bool sit;
    std::uint64_t budget = n * k * (v - k);
    if (budget <= opts.neighbour_cap) {
      sit = sit_by_triple_orbit(g, orb, opts.neighbour_cap);
    } else {
      // Exact fallback: extract the full setwise stabilizer and test it
      // directly; never leaves the search incomplete.
      GeneratedGroup sg = set_stabilizer(g, group_order, orb);
      sit = sit_test_subgroup(sg, orb.get(0));
    }
    if (!sit) continue;

    Candidate c;
    c.group_name = name;
    c.v = v;
    c.k = k;
    c.representative = orb.get(0); // ascending sweep: the seed is colex-least
    c.code_size = n;
    c.stab_order = stab;
    c.found_via = "exhaustive";
    out.push_back(std::move(c));
  }
}

} // namespace

SearchResult exhaustive_search(const CatalogEntry& top, const SearchOptions& opts) {
  SearchResult res;
  GeneratedGroup g = top.group();
  const unsigned v = top.degree;
  if (v > 24) {
    throw std::invalid_argument("exhaustive strategy is limited to degree <= 24");
  }
  unsigned lo = std::max(opts.k_min, 1u);
  unsigned hi = effective_k_hi(opts, v);

  std::vector<unsigned> ks;
  for (unsigned k = lo; k <= hi; ++k) ks.push_back(k);

  unsigned workers = std::max(1u, opts.workers);
  if (workers <= 1 || ks.size() <= 1) {
    for (unsigned k : ks) {
      exhaustive_k(g, top.order, top.name, v, k, opts, res.candidates, res.warnings,
                   res.complete);
    }
  } else {
    struct Slice {
      std::vector<Candidate> cands;
      std::vector<std::string> warnings;
      bool complete = true;
    };
    std::vector<Slice> slices(ks.size());
    std::atomic<std::size_t> next{0};
    auto body = [&]() {
      for (;;) {
        std::size_t idx = next.fetch_add(1);
        if (idx >= ks.size()) break;
        Slice& sl = slices[idx];
        exhaustive_k(g, top.order, top.name, v, ks[idx], opts, sl.cands, sl.warnings,
                     sl.complete);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(workers, ks.size()); ++t) {
      pool.emplace_back(body);
    }
    for (auto& t : pool) t.join();
    for (auto& sl : slices) {
      for (auto& c : sl.cands) res.candidates.push_back(std::move(c));
      for (auto& w : sl.warnings) res.warnings.push_back(std::move(w));
      if (!sl.complete) res.complete = false;
    }
  }
  sort_candidates(res.candidates);
  return res;
}

} // namespace jnt
