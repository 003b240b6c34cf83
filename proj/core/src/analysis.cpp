#include "jnt/analysis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "jnt/binom.hpp"
#include "jnt/hashset.hpp"

namespace jnt {

std::vector<KSubset> orbit_words(const GeneratedGroup& g, const KSubset& rep,
                                 std::uint64_t cap) {
  IndexedSetOrbit orb = build_indexed_orbit(g, rep, cap);
  std::vector<KSubset> words;
  words.reserve(orb.size());
  for (std::uint64_t i = 0; i < orb.size(); ++i) words.push_back(orb.get(i));
  std::sort(words.begin(), words.end(), colex_less);
  return words;
}

unsigned min_distance(const std::vector<KSubset>& words) {
  if (words.size() < 2) throw std::invalid_argument("min_distance: need at least two words");
  unsigned best = ~0u;
  const KSubset& w0 = words[0];
  for (std::size_t i = 1; i < words.size(); ++i) {
    best = std::min(best, johnson_distance(w0, words[i]));
  }
  return best;
}

unsigned min_distance_naive(const std::vector<KSubset>& words) {
  if (words.size() < 2) throw std::invalid_argument("min_distance_naive: need at least two words");
  unsigned best = ~0u;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      best = std::min(best, johnson_distance(words[i], words[j]));
    }
  }
  return best;
}

bool is_self_complementary(const std::vector<KSubset>& words, unsigned v) {
  if (words.empty()) return false;
  if (2 * words[0].popcount() != v) return false;
  KSubset c = complement(words[0], v);
  return std::binary_search(words.begin(), words.end(), c, colex_less);
}

std::vector<KSubset> complement_code(const std::vector<KSubset>& words, unsigned v) {
  std::vector<KSubset> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(complement(w, v));
  std::sort(out.begin(), out.end(), colex_less);
  return out;
}

DesignCheck design_check(const std::vector<KSubset>& words, unsigned v, unsigned t,
                         std::uint64_t table_budget, std::uint64_t increment_budget) {
  DesignCheck res;
  if (words.empty() || t == 0) return res;
  unsigned k = words[0].popcount();
  if (t > k) return res;
  auto table = binomial_checked(v, t);
  auto per_word = binomial_checked(k, t);
  if (!table || !per_word || *table > table_budget ||
      *per_word > increment_budget / words.size()) {
    return res; // budget exceeded: stays kSkipped
  }

  std::vector<std::uint32_t> count(static_cast<std::size_t>(*table), 0);
  std::vector<std::uint16_t> el;
  for (const auto& w : words) {
    el = w.elements();
    if (t == 2) {
      for (std::size_t j = 1; j < el.size(); ++j) {
        std::size_t base = static_cast<std::size_t>(el[j]) * (el[j] - 1) / 2;
        for (std::size_t i = 0; i < j; ++i) ++count[base + el[i]];
      }
    } else {
      // walk all t-combinations of the word's elements in colex order
      std::vector<unsigned> c(t);
      for (unsigned i = 0; i < t; ++i) c[i] = i;
      for (;;) {
        std::uint64_t rank = 0;
        for (unsigned i = 0; i < t; ++i) rank += binomial(el[c[i]], i + 1);
        ++count[static_cast<std::size_t>(rank)];
        unsigned i = 0;
        while (i + 1 < t && c[i] + 1 == c[i + 1]) {
          c[i] = i;
          ++i;
        }
        ++c[i];
        if (c[t - 1] >= el.size()) break;
      }
    }
  }
  std::uint32_t lo = count[0], hi = count[0];
  for (std::uint32_t x : count) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (lo == hi && lo > 0) {
    res.status = DesignStatus::kDesign;
    res.lambda = lo;
  } else {
    res.status = DesignStatus::kNotDesign;
  }
  return res;
}

namespace {

std::pair<std::uint64_t, std::uint64_t> nkey(const KSubset& s, unsigned v) {
  if (v <= 64) return {s.w[0], 0};
  return {subset_hash(s), subset_hash2(s)};
}

} // namespace

std::uint64_t neighbour_count(const std::vector<KSubset>& words, unsigned v,
                              std::uint64_t cap) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> keys;
  for (const auto& w : words) {
    std::vector<std::uint16_t> in = w.elements();
    KSubset comp = complement(w, v);
    std::vector<std::uint16_t> out = comp.elements();
    if (keys.size() + in.size() * out.size() > cap) {
      throw SearchLimit("neighbour sweep exceeds cap");
    }
    for (auto a : in) {
      KSubset base = w;
      base.reset(a);
      for (auto b : out) {
        KSubset n = base;
        n.set(b);
        keys.push_back(nkey(n, v));
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys.size();
}

std::uint64_t count_set_orbit(const GeneratedGroup& g, const KSubset& seed,
                              std::uint64_t cap) {
  const unsigned nw = (g.degree + 63) / 64;
  FingerprintMap seen(1024);
  std::vector<std::uint64_t> flat;
  auto push = [&flat, nw](const KSubset& s) {
    for (unsigned w = 0; w < nw; ++w) flat.push_back(s.w[w]);
  };
  auto at = [&flat, nw](std::uint64_t i) {
    KSubset s;
    for (unsigned w = 0; w < nw; ++w) s.w[w] = flat[i * nw + w];
    return s;
  };
  {
    auto key = nkey(seed, g.degree);
    bool occ = false;
    seen.find_or_insert(key.first, key.second, 0, occ);
    push(seed);
  }
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    KSubset s = at(i);
    for (const auto& gen : g.generators) {
      KSubset img = image_of_set(gen, s);
      auto key = nkey(img, g.degree);
      bool occ = false;
      seen.find_or_insert(key.first, key.second, static_cast<std::uint32_t>(n), occ);
      if (!occ) {
        if (n >= cap) throw SearchLimit("set orbit exceeds cap");
        push(img);
        ++n;
      }
    }
  }
  return n;
}

bool is_neighbour_transitive(const GeneratedGroup& g, const std::vector<KSubset>& words,
                             unsigned v, std::uint64_t cap, bool& checked) {
  checked = false;
  if (words.empty()) return false;
  unsigned k = words[0].popcount();
  std::uint64_t budget = words.size() * static_cast<std::uint64_t>(k) * (v - k);
  if (budget > cap) return false;
  std::uint64_t total;
  try {
    total = neighbour_count(words, v, cap);
  } catch (const SearchLimit&) {
    return false;
  }
  KSubset nb = words[0];
  std::uint16_t drop = static_cast<std::uint16_t>(nb.min_element());
  std::uint16_t add = static_cast<std::uint16_t>(complement(nb, v).min_element());
  nb.reset(drop);
  nb.set(add);
  std::uint64_t orbit;
  try {
    orbit = count_set_orbit(g, nb, cap);
  } catch (const SearchLimit&) {
    return false;
  }
  checked = true;
  return orbit == total; // the orbit is always a subset of the neighbours
}

std::vector<std::uint64_t> hamming_image(const std::vector<KSubset>& words, unsigned v) {
  if (v > 64) throw std::invalid_argument("hamming_image: degree must be <= 64");
  std::vector<std::uint64_t> vecs;
  vecs.reserve(words.size());
  for (const auto& w : words) vecs.push_back(w.w[0]);
  return vecs;
}

unsigned hamming_min_distance(const std::vector<std::uint64_t>& vecs) {
  if (vecs.size() < 2) throw std::invalid_argument("hamming_min_distance: need two vectors");
  unsigned best = ~0u;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    for (std::size_t j = i + 1; j < vecs.size(); ++j) {
      best = std::min(best, static_cast<unsigned>(std::popcount(vecs[i] ^ vecs[j])));
    }
  }
  return best;
}

CodeAnalysis analyse_candidate(const GeneratedGroup& g, const Candidate& cand,
                               const SearchOptions& opts) {
  CodeAnalysis a;
  a.cand = cand;
  std::vector<KSubset> words = orbit_words(g, cand.representative, opts.orbit_cap);
  a.delta = min_distance(words);
  a.self_complementary = is_self_complementary(words, cand.v);

  DesignCheck d2 = design_check(words, cand.v, 2);
  if (d2.status == DesignStatus::kDesign) {
    a.lambda2 = d2.lambda;
    a.design_t = 2;
    a.design_lambda = d2.lambda;
    a.design.emplace_back(2, d2.lambda);
    for (unsigned t = 3; t <= 5 && t <= cand.k; ++t) {
      DesignCheck dt = design_check(words, cand.v, t, 1000000, opts.neighbour_cap);
      if (dt.status != DesignStatus::kDesign) break;
      a.design_t = t;
      a.design_lambda = dt.lambda;
      a.design.emplace_back(t, dt.lambda);
    }
  }
  a.neighbour_transitive =
      is_neighbour_transitive(g, words, cand.v, opts.neighbour_cap, a.neighbour_checked);
  return a;
}

} // namespace jnt
