#pragma once

#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "beauville/groups.hpp"

namespace beauville {

struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenerationResult {
  bool generates = false;
  BigInt subgroup_order;
};

// Chain order of <elems> inside g's action, compared with |g|.
GenerationResult generates_whole(const RealizedGroup& g, const std::vector<Element>& elems);

// Full element list via BFS over the Cayley graph, elements identified by
// their action image. Words are kept as BFS tree edges so concrete
// Elements can be rebuilt on demand. Conjugacy classes and the small
// multiplication table are filled in lazily by the compute_* helpers.
class ElementTable {
public:
  ElementTable(const RealizedGroup& g, std::size_t bound = 1000000);

  const RealizedGroup& group() const { return *group_; }
  std::size_t size() const { return perms_.size(); }
  const Permutation& perm_at(std::size_t i) const { return perms_[i]; }
  Element element_at(std::size_t i) const;  // materialized from its BFS word
  std::uint32_t index_of(const Permutation& p) const;  // throws if absent
  std::optional<std::uint32_t> find(const Permutation& p) const;

  std::uint32_t mult(std::uint32_t i, std::uint32_t j) const;  // index of elem_i * elem_j
  std::uint32_t inverse_of(std::uint32_t i) const;
  std::uint64_t element_order(std::uint32_t i) const { return perms_[i].order(); }

  void compute_classes();  // conjugacy partition (idempotent)
  std::size_t class_count() const { return class_rep_.size(); }
  std::uint32_t class_of(std::uint32_t elem) const { return class_of_[elem]; }
  std::uint32_t class_rep(std::uint32_t cls) const { return class_rep_[cls]; }
  std::uint32_t class_size(std::uint32_t cls) const { return class_size_[cls]; }

private:
  // the dense multiplication table is only affordable for search-sized
  // groups; larger tables fall back to composing permutations
  static constexpr std::size_t kMultTableLimit = 6000;

  const RealizedGroup* group_;
  std::vector<Permutation> perms_;
  std::vector<Permutation> gen_perms_;
  std::vector<std::pair<std::int32_t, std::int32_t>> via_;  // parent, generator
  std::unordered_map<std::string, std::uint32_t> index_;
  std::vector<std::uint32_t> gen_index_;  // table indices of the generators
  // lazy pieces
  std::vector<std::uint32_t> mult_;  // flattened, built for small tables
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> class_of_, class_rep_, class_size_;

  void build_mult();
  static std::string perm_key(const Permutation&);
};

// Conjugation orbit of a single element under the group's generators,
// computed on the faithful action's permutation images, with tree edges
// kept so a conjugator witness can be reconstructed as a group element.
class ClassOrbit {
public:
  // stop_at, when given, halts the orbit walk as soon as that element
  // appears; hit_target() then reports the early exit
  ClassOrbit(const RealizedGroup& g, const Element& seed, std::size_t bound = 1000000,
             const Element* stop_at = nullptr);

  bool complete() const { return complete_; }
  bool hit_target() const { return hit_.has_value(); }
  std::size_t target_index() const { return *hit_; }
  std::size_t size() const { return perms_.size(); }
  const Element& seed() const { return seed_; }
  // membership test through the faithful action
  std::optional<std::size_t> find(const Element& x) const;
  // group element c with seed^c = the orbit element at idx
  Element conjugator_to(std::size_t idx) const;

private:
  const RealizedGroup* group_;
  Element seed_;
  std::vector<Permutation> perms_;
  std::vector<std::pair<std::int32_t, std::int32_t>> via_;
  std::unordered_map<std::string, std::size_t> index_;
  bool complete_ = true;
  std::optional<std::size_t> hit_;
};

bool is_transitive(std::size_t degree, const std::vector<Permutation>& gens);

// One nontrivial block system (a minimal one through {0, beta} for some
// beta), or nullopt when the transitive group is primitive.
std::optional<std::vector<std::vector<std::uint32_t>>> find_block_system(
    std::size_t degree, const std::vector<Permutation>& gens);

bool is_primitive(std::size_t degree, const std::vector<Permutation>& gens);

// Chain for the derived subgroup: normal closure of the generator
// commutators.
StabilizerChain derived_subgroup(const RealizedGroup& g);

// Index-2 subgroup as a sign character on the generators; elements are
// evaluated through membership in the kernel's chain.
class Character2 {
public:
  Character2(const RealizedGroup& g, std::vector<int> gen_values,
             std::shared_ptr<StabilizerChain> kernel);
  const std::vector<int>& generator_values() const { return vals_; }
  int value(const Element& x) const;  // +1 or -1
  const StabilizerChain& kernel() const { return *kernel_; }
  std::string label() const;

private:
  const RealizedGroup* group_;
  std::vector<int> vals_;
  std::shared_ptr<StabilizerChain> kernel_;
};

std::vector<Character2> index2_subgroups(const RealizedGroup& g);

// Jones generation oracle for A/B/D groups viewed on their natural
// points: proves transitivity, then primitivity, then hunts the powers of
// short generator words for an m-cycle with 2 <= m <= n-3. A positive
// answer certifies the plain image contains Alt(n); a negative answer
// proves nothing.
struct JonesCertificate {
  bool contains_alt = false;
  std::string reason;        // "ok" or why no certificate was found
  std::string witness_word;  // e.g. "x^2 y^2"
  std::uint32_t cycle_length = 0;
};

JonesCertificate jones_certificate(const RealizedGroup& g, const Element& x, const Element& y);

}  // namespace beauville
