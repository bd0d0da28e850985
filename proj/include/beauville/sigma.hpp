#pragma once

#include <map>
#include <optional>
#include <set>

#include "beauville/groupops.hpp"

namespace beauville {

enum class SigmaMode { Exact, Invariant };

struct GeneratingPair {
  Element x, y;
};

// One nontrivial power of a seed element together with its conjugacy
// data: an exact class id in Exact mode, or a package of class
// invariants in Invariant mode.
struct PowerEntry {
  std::string seed;       // "x", "y" or "xy"
  std::uint64_t exponent = 1;
  Element value;
  std::uint64_t order = 1;
  std::string trace;      // exact trace of the carrier matrix, as text
  bool diagonal = false;  // diagonal in the written carrier
  bool monomial = false;  // carrier where diagonality is a class invariant
  std::string fine_key;   // signed cycle type / char poly + action cycle type
  std::uint32_t class_id = 0;  // Exact mode only
};

// Certified description of Sigma(x, y) = all conjugates of the
// nontrivial powers of x, y and xy. Exact mode stores the set of
// conjugacy classes meeting it; Invariant mode stores one sound
// class-invariant key per power.
class SigmaFingerprint {
public:
  SigmaMode mode;
  const RealizedGroup* group = nullptr;
  GeneratingPair pair;
  std::vector<PowerEntry> powers;
  std::set<std::uint32_t> classes;  // Exact mode: class ids, identity excluded
  std::shared_ptr<ElementTable> table;  // Exact mode: the group's element table

  // Exact-mode expansion into the literal element set (for oracle tests).
  std::vector<Element> exact_elements() const;
};

struct SigmaOptions {
  std::size_t exact_bound = 100000;      // largest group enumerated for Exact mode
  std::size_t class_orbit_bound = 1000000;  // escalation cap for collisions
};

SigmaFingerprint sigma(const RealizedGroup& g, const GeneratingPair& p, SigmaMode mode,
                       const SigmaOptions& opt = {});

enum class DaggerOutcome { DisjointCertified, IntersectNontrivial, Inconclusive };

struct DaggerCertificate {
  DaggerOutcome outcome = DaggerOutcome::Inconclusive;
  // IntersectNontrivial: u from side 1, v from side 2, conjugator c with u^c = v
  std::optional<Element> witness_u, witness_v, witness_conjugator;
  std::string witness_note;
  // how often the trace comparison alone was ambiguous and the
  // diagonal-vs-nondiagonal rule settled it (monomial carriers only)
  std::size_t diagonal_rule_fired = 0;
  std::size_t escalations = 0;  // collisions settled by a bounded class orbit
  std::vector<std::string> collisions;  // unresolved key collisions (Inconclusive)
};

DaggerCertificate check_dagger(const SigmaFingerprint& s1, const SigmaFingerprint& s2,
                               const SigmaOptions& opt = {});

struct BeauvilleStructure {
  GeneratingPair pair1, pair2;
  std::optional<Element> t1, t2;  // strong-reality witnesses, when known
};

struct BeauvilleReport {
  std::string group;
  bool generation1 = false, generation2 = false;
  BigInt order1, order2, expected_order;
  DaggerCertificate dagger;
  bool beauville_ok = false;
  std::optional<bool> strongly_real;  // set when witnesses were supplied
  SigmaMode mode_used = SigmaMode::Invariant;
  std::int64_t elapsed_ms = 0;

  bool certified_strongly_real() const {
    return beauville_ok && strongly_real && *strongly_real;
  }
};

// Both generation checks plus the dagger certificate; strong reality is
// verified as well when the structure carries witnesses.
BeauvilleReport verify_unmixed(const RealizedGroup& g, const BeauvilleStructure& s,
                               std::optional<SigmaMode> force_mode = std::nullopt,
                               const SigmaOptions& opt = {});

// Definition of strong reality with an inner automorphism: t1 inverts
// both members of pair 1 and t2 both members of pair 2 (phi = conjugation
// by t1, g1 = e, g2 = t1^-1 t2).
bool verify_strongly_real(const RealizedGroup& g, const BeauvilleStructure& s);

// Search over the group for an element inverting both x and y under
// conjugation; works by enumeration, so only for enumerable groups.
std::optional<Element> find_inverting_conjugator(const RealizedGroup& g, const Element& x,
                                                 const Element& y, std::size_t bound = 1000000);

}  // namespace beauville
