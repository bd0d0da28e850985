#pragma once

#include "beauville/sigma.hpp"

namespace beauville {

// Quadruple (G0; a, c; g): G0 an index-2 subgroup given by its sign
// character, a and c inside it, g outside.
struct MixedQuadruple {
  const RealizedGroup* group = nullptr;
  const Character2* subgroup = nullptr;
  Element a, c, g;
};

struct MixedReport {
  bool precondition_ok = false;   // a, c in the kernel; g outside
  bool generation_ok = false;     // <a, c> = G0
  bool square_condition_ok = false;  // (g*gamma)^2 never meets Sigma(a,c) u {e}
  bool dagger_ok = false;         // Sigma(a,c) and Sigma(a^g, c^g) meet only at e
  std::string failure;            // first condition that failed, for the report
  bool mixed_ok() const {
    return precondition_ok && generation_ok && square_condition_ok && dagger_ok;
  }
};

// Direct check of the four mixed-structure conditions by enumeration;
// needs the whole group within the bound.
MixedReport verify_mixed(const MixedQuadruple& q, std::size_t bound = 1000000);

struct ObstructionResult {
  bool blocked = false;
  std::optional<Element> witness;
  std::string note;
};

// An element outside ker(chi) whose order is not a multiple of 4 blocks
// any mixed structure on (G, ker chi). For Coxeter groups a generator
// with chi = -1 is already such a witness (generators are involutions);
// the coset scan below it is the general fallback, class-representative
// based for the A/B/D families and full enumeration otherwise.
ObstructionResult order_mod4_obstruction(const RealizedGroup& g, const Character2& chi,
                                         std::size_t bound = 1000000);

// Mixable test: o(a1), o(c1) even; <a1^2, a1 c1, c1^2> = H; <a2, c2> = H;
// nu(a1,c1) coprime to nu(a2,c2) with nu(a,c) = o(a) o(c) o(ac).
bool mixable_check(const RealizedGroup& h, const Element& a1, const Element& c1,
                   const Element& a2, const Element& c2);

// Blocked when every element outside the derived subgroup has even order
// (which kills mixable condition (4) for any generating pair). Verified
// by scanning, not assumed: class representatives for A/B/D, full
// enumeration for the rest.
ObstructionResult mixable_obstruction(const RealizedGroup& h, std::size_t bound = 1000000);

}  // namespace beauville
