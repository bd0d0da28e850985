#include "beauville/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <random>
#include <thread>

namespace beauville {

namespace {

using Bitset = std::vector<std::uint64_t>;

bool bitset_disjoint(const Bitset& a, const Bitset& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return false;
  return true;
}

bool bitset_test(const Bitset& a, std::uint32_t bit) {
  return (a[bit / 64] >> (bit % 64)) & 1;
}

struct PairWitness {
  std::uint32_t x, y;
};

struct ShardResult {
  std::map<Bitset, std::vector<PairWitness>> sigma_sets;
  std::uint64_t generating_pairs = 0;
  bool central_in_all = true;
};

// Sigma of the pair (x, y) as the set of conjugacy classes of the
// nontrivial powers of x, y and x*y, in the element table's index space.
Bitset sigma_bits(ElementTable& t, std::uint32_t x, std::uint32_t y, std::size_t words) {
  Bitset bits(words, 0);
  auto add_powers = [&](std::uint32_t e) {
    std::uint32_t p = e;
    while (p != 0) {
      std::uint32_t c = t.class_of(p);
      bits[c / 64] |= 1ull << (c % 64);
      p = t.mult(p, e);
    }
  };
  add_powers(x);
  add_powers(y);
  add_powers(t.mult(x, y));
  return bits;
}

std::optional<std::uint32_t> inverting_conjugator_index(ElementTable& t, std::uint32_t x,
                                                        std::uint32_t y) {
  std::uint32_t xi = t.inverse_of(x), yi = t.inverse_of(y);
  for (std::uint32_t c = 0; c < t.size(); ++c) {
    std::uint32_t ci = t.inverse_of(c);
    if (t.mult(t.mult(ci, x), c) == xi && t.mult(t.mult(ci, y), c) == yi) return c;
  }
  return std::nullopt;
}

}  // namespace

SearchOutcome search_structures(const RealizedGroup& g, const SearchOptions& opt) {
  SearchOutcome out;
  auto table = std::make_shared<ElementTable>(g, opt.group_bound);
  table->compute_classes();
  std::size_t n = table->size();
  std::size_t cc = table->class_count();
  std::size_t words = (cc + 63) / 64;

  // central involution, if the group has one
  std::optional<std::uint32_t> central;
  for (std::uint32_t c = 0; c < cc; ++c) {
    std::uint32_t r = table->class_rep(c);
    if (table->class_size(c) == 1 && r != 0 && table->element_order(r) == 2) central = c;
  }

  if (!opt.exhaustive) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
    for (std::uint64_t attempt = 0; attempt < opt.budget; ++attempt) {
      std::uint32_t x1 = pick(rng), y1 = pick(rng), x2 = pick(rng), y2 = pick(rng);
      BeauvilleStructure s{{table->element_at(x1), table->element_at(y1)},
                           {table->element_at(x2), table->element_at(y2)},
                           std::nullopt,
                           std::nullopt};
      auto rep = verify_unmixed(g, s, SigmaMode::Exact);
      if (rep.beauville_ok) {
        out.verdict = SearchVerdict::Found;
        out.structure = s;
        out.report = rep;
        return out;
      }
    }
    out.verdict = SearchVerdict::Exhausted;
    return out;
  }

  // exhaustive walk: x over class representatives, y over everything
  std::vector<std::uint32_t> reps;
  for (std::uint32_t c = 0; c < cc; ++c) reps.push_back(table->class_rep(c));
  unsigned workers = std::max(1u, opt.workers);
  std::vector<ShardResult> shard(reps.size());

  auto run_rep = [&](std::size_t ri) {
    ShardResult& res = shard[ri];
    std::uint32_t x = reps[ri];
    std::vector<std::uint32_t> closure;
    std::vector<std::uint32_t> stamp(n, 0xffffffffu);
    for (std::uint32_t y = 0; y < n; ++y) {
      // subgroup closure of {x, y} in index space
      closure.clear();
      closure.push_back(0);
      stamp[0] = y;
      for (std::size_t i = 0; i < closure.size(); ++i) {
        for (std::uint32_t step : {x, y}) {
          std::uint32_t q = table->mult(closure[i], step);
          if (stamp[q] != y) {
            stamp[q] = y;
            closure.push_back(q);
          }
        }
        if (closure.size() == n) break;
      }
      if (closure.size() != n) continue;
      ++res.generating_pairs;
      Bitset bits = sigma_bits(*table, x, y, words);
      if (central && !bitset_test(bits, *central)) res.central_in_all = false;
      auto& wit = res.sigma_sets[bits];
      if (wit.size() < 32) wit.push_back({x, y});
    }
  };

  if (workers <= 1) {
    for (std::size_t ri = 0; ri < reps.size(); ++ri) run_rep(ri);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    // the shared table is fully built before the shards start
    table->mult(0, 0);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t ri = next.fetch_add(1);
          if (ri >= reps.size()) break;
          run_rep(ri);
        }
      });
    for (auto& th : pool) th.join();
  }

  std::map<Bitset, std::vector<PairWitness>> sigma_sets;
  bool central_in_all = true;
  for (auto& res : shard) {
    out.generating_pair_classes += res.generating_pairs;
    central_in_all = central_in_all && res.central_in_all;
    for (auto& [bits, wit] : res.sigma_sets) {
      auto& dst = sigma_sets[bits];
      for (auto& w : wit)
        if (dst.size() < 32) dst.push_back(w);
    }
  }
  out.distinct_sigma_sets = sigma_sets.size();
  if (central) out.central_involution_in_all_sigma = central_in_all;

  std::vector<const Bitset*> keys;
  std::vector<const std::vector<PairWitness>*> wits;
  for (auto& [bits, w] : sigma_sets) {
    keys.push_back(&bits);
    wits.push_back(&w);
  }
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = i; j < keys.size(); ++j) {
      if (!bitset_disjoint(*keys[i], *keys[j])) continue;
      auto pick_pair = [&](std::size_t k) -> std::optional<PairWitness> {
        if (!opt.require_strongly_real) return (*wits[k])[0];
        for (auto& w : *wits[k])
          if (inverting_conjugator_index(*table, w.x, w.y)) return w;
        return std::nullopt;
      };
      auto w1 = pick_pair(i), w2 = pick_pair(j);
      if (!w1 || !w2) continue;
      BeauvilleStructure s;
      s.pair1 = {table->element_at(w1->x), table->element_at(w1->y)};
      s.pair2 = {table->element_at(w2->x), table->element_at(w2->y)};
      if (opt.require_strongly_real) {
        auto c1 = inverting_conjugator_index(*table, w1->x, w1->y);
        auto c2 = inverting_conjugator_index(*table, w2->x, w2->y);
        s.t1 = table->element_at(*c1);
        s.t2 = table->element_at(*c2);
      }
      auto rep = verify_unmixed(g, s, SigmaMode::Exact);
      if (rep.beauville_ok) {
        out.verdict = SearchVerdict::Found;
        out.structure = std::move(s);
        out.report = std::move(rep);
        return out;
      }
    }
  }
  out.verdict = SearchVerdict::NoneExists;
  return out;
}

}  // namespace beauville
