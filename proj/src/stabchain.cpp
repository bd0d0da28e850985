#include "beauville/stabchain.hpp"

#include <stdexcept>

namespace beauville {

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Permutation>& gens,
                                 const std::vector<std::uint32_t>& base_prefix)
    : degree_(degree) {
  for (auto b : base_prefix) {
    Level lv;
    lv.beta = b;
    levels_.push_back(std::move(lv));
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_orbit(i);
  for (const auto& g : gens) {
    if (g.degree() != degree_) throw std::invalid_argument("StabilizerChain: degree mismatch");
    auto [lvl, h] = strip(g, 0);
    if (!h.is_identity()) insert(std::move(h), lvl);
  }
  complete(0);
  order_ = BigInt(1);
  for (const auto& lv : levels_) order_ *= BigInt(static_cast<std::int64_t>(lv.orbit.size()));
}

// Orbit of this level's base point under the cumulative strong generators
// (everything stored at this level or deeper).
void StabilizerChain::rebuild_orbit(std::size_t lvl) {
  Level& lv = levels_[lvl];
  lv.act.clear();
  for (std::size_t j = lvl; j < levels_.size(); ++j)
    for (const auto& g : levels_[j].gens) lv.act.push_back(g);
  lv.where.assign(degree_, -1);
  lv.orbit.clear();
  lv.via_gen.clear();
  lv.via_from.clear();
  lv.orbit.push_back(lv.beta);
  lv.via_gen.push_back(-1);
  lv.via_from.push_back(-1);
  lv.where[lv.beta] = 0;
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    std::uint32_t p = lv.orbit[i];
    for (std::size_t gi = 0; gi < lv.act.size(); ++gi) {
      std::uint32_t q = lv.act[gi](p);
      if (lv.where[q] < 0) {
        lv.where[q] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(q);
        lv.via_gen.push_back(static_cast<std::int32_t>(gi));
        lv.via_from.push_back(static_cast<std::int32_t>(i));
      }
    }
  }
  lv.rep_cache.assign(lv.orbit.size(), std::nullopt);
  lv.pairs_done = 0;
}

// coset representative u with beta^u = point, composed along the Schreier tree
const Permutation& StabilizerChain::rep(std::size_t lvl, std::uint32_t point) const {
  const Level& lv = levels_[lvl];
  std::int32_t idx = lv.where[point];
  if (idx < 0) throw std::logic_error("StabilizerChain: point outside orbit");
  if (lv.rep_cache[idx]) return *lv.rep_cache[idx];
  std::vector<std::int32_t> path;  // generator indices from point back to the root
  std::int32_t cur = idx;
  while (lv.via_gen[cur] >= 0) {
    path.push_back(lv.via_gen[cur]);
    cur = lv.via_from[cur];
  }
  Permutation u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) u = u * lv.act[*it];
  lv.rep_cache[idx] = std::move(u);
  return *lv.rep_cache[idx];
}

std::pair<std::size_t, Permutation> StabilizerChain::strip(Permutation g, std::size_t from) const {
  for (std::size_t lvl = from; lvl < levels_.size(); ++lvl) {
    if (g.is_identity()) return {lvl, std::move(g)};
    std::uint32_t image = g(levels_[lvl].beta);
    if (image == levels_[lvl].beta) continue;
    if (levels_[lvl].where[image] < 0) return {lvl, std::move(g)};
    g = g * rep(lvl, image).inverse();
  }
  return {levels_.size(), std::move(g)};
}

void StabilizerChain::insert(Permutation g, std::size_t at_level) {
  if (g.is_identity()) return;
  if (at_level == levels_.size()) {
    Level lv;
    std::uint32_t beta = 0;
    while (g(beta) == beta) ++beta;
    lv.beta = beta;
    levels_.push_back(std::move(lv));
  }
  levels_[at_level].gens.push_back(std::move(g));
  // orbits of this level and every earlier one see the new generator
  for (std::size_t lvl = 0; lvl <= at_level; ++lvl) rebuild_orbit(lvl);
}

// Verifies the Schreier generators of this level, stripping residues
// through the deeper levels and inserting what does not sift; deeper
// levels are completed first after an insertion. Counters restart
// whenever an orbit is rebuilt, so every (point, generator) pair of the
// final chain has been checked when this returns.
void StabilizerChain::complete(std::size_t lvl) {
  if (lvl >= levels_.size()) return;
  for (;;) {
    Level& lv = levels_[lvl];
    std::size_t total = lv.orbit.size() * lv.act.size();
    if (lv.pairs_done >= total) break;
    std::size_t pair = lv.pairs_done++;
    std::size_t oi = pair / lv.act.size();
    std::size_t gi = pair % lv.act.size();
    std::uint32_t delta = lv.orbit[oi];
    Permutation w = rep(lvl, delta) * lv.act[gi];
    std::uint32_t target = w(lv.beta);
    Permutation schreier = w * rep(lvl, target).inverse();
    auto [at, residue] = strip(std::move(schreier), lvl + 1);
    if (!residue.is_identity()) {
      insert(std::move(residue), at);
      complete(at);
    }
  }
  if (lvl + 1 < levels_.size()) complete(lvl + 1);
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [lvl, residue] = strip(p, 0);
  (void)lvl;
  return residue.is_identity();
}

std::vector<Permutation> StabilizerChain::level_generators(std::size_t lvl) const {
  std::vector<Permutation> out;
  for (std::size_t i = lvl; i < levels_.size(); ++i)
    for (const auto& g : levels_[i].gens) out.push_back(g);
  if (out.empty()) out.push_back(Permutation(degree_));
  return out;
}

BigInt StabilizerChain::stabilizer_order(std::size_t lvl) const {
  BigInt o(1);
  for (std::size_t i = lvl; i < levels_.size(); ++i)
    o *= BigInt(static_cast<std::int64_t>(levels_[i].orbit.size()));
  return o;
}

}  // namespace beauville
