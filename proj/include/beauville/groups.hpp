#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "beauville/action.hpp"
#include "beauville/element.hpp"
#include "beauville/stabchain.hpp"

namespace beauville {

enum class Family { A, B, D, I2, E6, E7, E8, F4, H3, H4 };

struct CoxeterType {
  Family family;
  int rank = 0;  // rank for A/B/D, k for I2, fixed for the exceptionals

  bool operator==(const CoxeterType&) const = default;
};

CoxeterType parse_type(const std::string& descriptor);  // "B12", "I2(7)", "H4", ...
std::string type_to_string(const CoxeterType&);
BigInt coxeter_order(const CoxeterType&);
// C2-rank of the abelianisation: 2 for B/F4/I2(even), 1 otherwise.
int abelianization_rank(const CoxeterType&);

// A Coxeter (or auxiliary) group realized concretely: generators in a
// faithful carrier plus a finite action for the permutation engine. The
// stabilizer chain is built once on first use and then read-only; the
// expected order is asserted against the chain, never trusted.
class RealizedGroup {
public:
  RealizedGroup(std::string name, std::vector<Element> gens, ActionPtr action,
                BigInt expected_order, std::optional<CoxeterType> type = std::nullopt);

  const std::string& name() const { return name_; }
  const std::vector<Element>& generators() const { return gens_; }
  const ActionPtr& action() const { return action_; }
  const BigInt& expected_order() const { return expected_; }
  const std::optional<CoxeterType>& type() const { return type_; }

  Element identity() const;
  const StabilizerChain& chain() const;  // builds lazily; asserts the order
  BigInt order() const { return chain().order(); }
  bool contains(const Element&) const;
  Permutation action_perm(const Element& g) const { return action_->permutation_of(g); }

private:
  std::string name_;
  std::vector<Element> gens_;
  ActionPtr action_;
  BigInt expected_;
  std::optional<CoxeterType> type_;
  mutable std::once_flag chain_once_;
  mutable std::unique_ptr<StabilizerChain> chain_;
};

// Constructs the group of the given type in its standard realization:
// A/B/D as signed permutations, I2(k) dihedral, E6/E7/E8/F4 as integer
// matrices in the simple-root basis acting on the root system, H3/H4 as
// exact matrices over Q(sqrt5). Verifies the Coxeter relations of each
// generator set and the root-system sizes.
RealizedGroup build_coxeter(const CoxeterType&);

// Group generated by explicit matrices in an arbitrary basis. A faithful
// action is derived from the orbit of a reflection root found inside the
// generated group; the chain order against expected_order is the
// authoritative generation test for such matrices.
RealizedGroup group_from_matrices(const std::string& name,
                                  const std::vector<ExactMatrix>& gens,
                                  const BigInt& expected_order);

// Identifies a matrix with an element of a matrix-realized group: it must
// permute the group's root set and the induced permutation must pass
// chain membership.
Element membership_matrix(const RealizedGroup& g, const ExactMatrix& m);

// The four simple reflections of the H4 realization used throughout
// (three permutation matrices and one involving sqrt5/4), and the H4/H3
// root seeds derived from them.
std::vector<ExactMatrix> h4_simple_reflections();

}  // namespace beauville
