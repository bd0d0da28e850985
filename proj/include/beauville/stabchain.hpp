#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "beauville/exact.hpp"
#include "beauville/perms.hpp"

namespace beauville {

// Base and strong generating set for a permutation group, built with the
// deterministic Schreier-Sims algorithm. Base points follow the natural
// point order (an explicit prefix can be forced, which yields pointwise
// stabilizers of that prefix deeper in the chain). Read-only and safe for
// concurrent queries once built.
class StabilizerChain {
public:
  StabilizerChain(std::size_t degree, const std::vector<Permutation>& gens,
                  const std::vector<std::uint32_t>& base_prefix = {});

  std::size_t degree() const { return degree_; }
  const BigInt& order() const { return order_; }
  bool contains(const Permutation&) const;

  std::size_t base_length() const { return levels_.size(); }
  std::uint32_t base_point(std::size_t lvl) const { return levels_[lvl].beta; }
  std::size_t orbit_size(std::size_t lvl) const { return levels_[lvl].orbit.size(); }

  // Strong generators fixing the first `lvl` base points (lvl = 0 gives
  // generators of the whole group as stored).
  std::vector<Permutation> level_generators(std::size_t lvl) const;

  // Order of the pointwise stabilizer of base[0..lvl).
  BigInt stabilizer_order(std::size_t lvl) const;

private:
  struct Level {
    std::uint32_t beta = 0;
    std::vector<Permutation> gens;        // strong generators first stuck here
    std::vector<Permutation> act;         // cumulative: every generator from this level down
    std::vector<std::int32_t> where;      // point -> orbit index, -1 outside
    std::vector<std::uint32_t> orbit;     // BFS order, orbit[0] = beta
    std::vector<std::int32_t> via_gen;    // tree edge: index into act
    std::vector<std::int32_t> via_from;   // tree edge: parent orbit index
    mutable std::vector<std::optional<Permutation>> rep_cache;
    std::size_t pairs_done = 0;           // processed Schreier pairs
  };

  std::size_t degree_;
  std::vector<Level> levels_;
  BigInt order_;

  const Permutation& rep(std::size_t lvl, std::uint32_t point) const;
  void rebuild_orbit(std::size_t lvl);
  // strips g through levels [from..); returns level where it stuck and the
  // residue (identity residue means full sift)
  std::pair<std::size_t, Permutation> strip(Permutation g, std::size_t from) const;
  void insert(Permutation g, std::size_t at_level);
  void complete(std::size_t lvl);
};

}  // namespace beauville
