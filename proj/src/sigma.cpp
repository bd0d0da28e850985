#include "beauville/sigma.hpp"

#include <chrono>
#include <mutex>

namespace beauville {

namespace {

std::shared_ptr<ElementTable> exact_table_for(const RealizedGroup& g, std::size_t bound) {
  static std::mutex mu;
  static std::map<const RealizedGroup*, std::weak_ptr<ElementTable>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[&g];
  if (auto t = slot.lock()) return t;
  auto t = std::make_shared<ElementTable>(g, bound);
  t->compute_classes();
  slot = t;
  return t;
}

bool monomial_carrier(const Element& e) {
  if (e.is_signed_perm()) return true;
  if (e.is_pair())
    return monomial_carrier(e.as_pair().first) && monomial_carrier(e.as_pair().second);
  return false;
}

std::string trace_repr(const Element& e) {
  if (e.is_signed_perm()) return std::to_string(e.as_signed_perm().trace());
  if (e.is_matrix()) return e.as_matrix().trace().to_string();
  if (e.is_pair())
    return "(" + trace_repr(e.as_pair().first) + "," + trace_repr(e.as_pair().second) + ")";
  return "";  // dihedral carrier has no matrix trace; never separates
}

std::string action_cycle_key(const RealizedGroup& g, const Element& e) {
  auto lens = g.action_perm(e).cycle_lengths();
  std::string s;
  for (auto l : lens) s += std::to_string(l) + ".";
  return s;
}

std::string fine_key_of(const RealizedGroup& g, const Element& e) {
  if (e.is_signed_perm()) {
    std::string s = "ct:";
    for (auto& [len, sg] : e.as_signed_perm().cycle_type())
      s += std::to_string(len) + (sg < 0 ? "-" : "+");
    return s;
  }
  if (e.is_matrix()) {
    std::string s = "cp:";
    for (const auto& c : e.as_matrix().char_poly()) s += c.to_string() + ";";
    s += "|act:" + action_cycle_key(g, e);
    return s;
  }
  if (e.is_dihedral()) {
    // dihedral conjugacy: rotations come in inverse pairs; reflections
    // fall in one class (k odd) or two by rotation parity (k even)
    const auto& d = e.as_dihedral();
    if (!d.flip) {
      std::uint32_t a = d.rot % d.k;
      return "rot:" + std::to_string(std::min(a, d.k - a) % d.k);
    }
    if (d.k % 2 == 1) return "refl";
    return d.rot % 2 == 0 ? "refl0" : "refl1";
  }
  return "pair:[" + fine_key_of(g, e.as_pair().first) + "][" +
         fine_key_of(g, e.as_pair().second) + "]";
}

PowerEntry make_entry(const RealizedGroup& g, const std::string& seed, std::uint64_t exp,
                      Element value) {
  PowerEntry pe;
  pe.seed = seed;
  pe.exponent = exp;
  pe.order = value.order();
  pe.trace = trace_repr(value);
  pe.diagonal = value.is_diagonal_matrix();
  pe.monomial = monomial_carrier(value);
  pe.fine_key = fine_key_of(g, value);
  pe.value = std::move(value);
  return pe;
}

}  // namespace

std::vector<Element> SigmaFingerprint::exact_elements() const {
  if (mode != SigmaMode::Exact || !table)
    throw std::logic_error("SigmaFingerprint: exact expansion needs Exact mode");
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < table->size(); ++i)
    if (classes.count(table->class_of(i))) out.push_back(table->element_at(i));
  return out;
}

SigmaFingerprint sigma(const RealizedGroup& g, const GeneratingPair& p, SigmaMode mode,
                       const SigmaOptions& opt) {
  SigmaFingerprint fp;
  fp.mode = mode;
  fp.group = &g;
  fp.pair = p;
  struct Seed {
    const char* name;
    Element val;
  };
  Seed seeds[3] = {{"x", p.x}, {"y", p.y}, {"xy", p.x * p.y}};
  if (mode == SigmaMode::Exact) {
    if (BigInt(static_cast<std::int64_t>(opt.exact_bound)) < g.expected_order())
      throw BoundExceeded(g.name() +
                          ": group too large for Exact sigma; use Invariant mode");
    fp.table = exact_table_for(g, opt.exact_bound);
  }
  for (const auto& s : seeds) {
    std::uint64_t o = s.val.order();
    Element pw = s.val * s.val.inverse();  // identity
    for (std::uint64_t i = 1; i < o; ++i) {
      pw = pw * s.val;
      PowerEntry pe = make_entry(g, s.name, i, pw);
      if (mode == SigmaMode::Exact) {
        pe.class_id = fp.table->class_of(fp.table->index_of(g.action_perm(pw)));
        fp.classes.insert(pe.class_id);
      }
      fp.powers.push_back(std::move(pe));
    }
  }
  return fp;
}

DaggerCertificate check_dagger(const SigmaFingerprint& s1, const SigmaFingerprint& s2,
                               const SigmaOptions& opt) {
  if (s1.mode != s2.mode) throw std::invalid_argument("check_dagger: fingerprint mode mismatch");
  if (s1.group != s2.group) throw std::invalid_argument("check_dagger: fingerprints from different groups");
  const RealizedGroup& g = *s1.group;
  DaggerCertificate cert;
  if (s1.mode == SigmaMode::Exact) {
    std::vector<std::uint32_t> common;
    for (auto c : s1.classes)
      if (s2.classes.count(c)) common.push_back(c);
    if (common.empty()) {
      cert.outcome = DaggerOutcome::DisjointCertified;
      return cert;
    }
    std::uint32_t c = common.front();
    const PowerEntry* a = nullptr;
    const PowerEntry* b = nullptr;
    for (const auto& pe : s1.powers)
      if (pe.class_id == c) { a = &pe; break; }
    for (const auto& pe : s2.powers)
      if (pe.class_id == c) { b = &pe; break; }
    ClassOrbit orbit(g, a->value, opt.class_orbit_bound);
    auto idx = orbit.find(b->value);
    cert.outcome = DaggerOutcome::IntersectNontrivial;
    cert.witness_u = a->value;
    cert.witness_v = b->value;
    if (idx) cert.witness_conjugator = orbit.conjugator_to(*idx);
    cert.witness_note = a->seed + "^" + std::to_string(a->exponent) + " conjugate to " +
                        b->seed + "^" + std::to_string(b->exponent);
    return cert;
  }
  // Invariant mode: prove every cross pair of powers non-conjugate
  for (const auto& a : s1.powers) {
    for (const auto& b : s2.powers) {
      if (a.order != b.order) continue;
      if (a.trace != b.trace && !a.trace.empty()) continue;
      if (a.monomial && b.monomial && a.diagonal != b.diagonal) {
        // equal traces, settled by diagonality (sound in monomial carriers)
        ++cert.diagonal_rule_fired;
        continue;
      }
      if (a.fine_key != b.fine_key) continue;
      auto note = [&] {
        return a.seed + "^" + std::to_string(a.exponent) + " conjugate to " + b.seed + "^" +
               std::to_string(b.exponent);
      };
      if (a.value == b.value) {
        cert.outcome = DaggerOutcome::IntersectNontrivial;
        cert.witness_u = a.value;
        cert.witness_v = b.value;
        cert.witness_conjugator = g.identity();
        cert.witness_note = note();
        return cert;
      }
      // full key collision: escalate to a bounded class orbit, stopping
      // early if the other element turns up inside it
      ClassOrbit orbit_a(g, a.value, opt.class_orbit_bound, &b.value);
      if (orbit_a.hit_target()) {
        ++cert.escalations;
        cert.outcome = DaggerOutcome::IntersectNontrivial;
        cert.witness_u = a.value;
        cert.witness_v = b.value;
        cert.witness_conjugator = orbit_a.conjugator_to(orbit_a.target_index());
        cert.witness_note = note();
        return cert;
      }
      if (orbit_a.complete()) {
        ++cert.escalations;
        continue;  // full class seen, other element absent: non-conjugate
      }
      ClassOrbit orbit_b(g, b.value, opt.class_orbit_bound, &a.value);
      if (orbit_b.hit_target()) {
        ++cert.escalations;
        cert.outcome = DaggerOutcome::IntersectNontrivial;
        cert.witness_u = a.value;
        cert.witness_v = b.value;
        cert.witness_conjugator = orbit_b.conjugator_to(orbit_b.target_index()).inverse();
        cert.witness_note = note();
        return cert;
      }
      if (orbit_b.complete()) {
        ++cert.escalations;
        continue;
      }
      cert.collisions.push_back(a.seed + "^" + std::to_string(a.exponent) + " vs " + b.seed +
                                "^" + std::to_string(b.exponent) + " share key " + a.fine_key);
    }
  }
  cert.outcome = cert.collisions.empty() ? DaggerOutcome::DisjointCertified
                                         : DaggerOutcome::Inconclusive;
  return cert;
}

bool verify_strongly_real(const RealizedGroup& g, const BeauvilleStructure& s) {
  if (!s.t1 || !s.t2) return false;
  if (!g.contains(*s.t1) || !g.contains(*s.t2))
    throw std::invalid_argument("verify_strongly_real: witness outside the group");
  auto inverts = [&](const Element& t, const GeneratingPair& p) {
    return p.x.conjugate_by(t) == p.x.inverse() && p.y.conjugate_by(t) == p.y.inverse();
  };
  return inverts(*s.t1, s.pair1) && inverts(*s.t2, s.pair2);
}

BeauvilleReport verify_unmixed(const RealizedGroup& g, const BeauvilleStructure& s,
                               std::optional<SigmaMode> force_mode, const SigmaOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  BeauvilleReport rep;
  rep.group = g.name();
  rep.expected_order = g.order();
  auto g1 = generates_whole(g, {s.pair1.x, s.pair1.y});
  auto g2 = generates_whole(g, {s.pair2.x, s.pair2.y});
  rep.generation1 = g1.generates;
  rep.generation2 = g2.generates;
  rep.order1 = g1.subgroup_order;
  rep.order2 = g2.subgroup_order;
  SigmaMode mode = force_mode.value_or(
      g.expected_order() <= BigInt(static_cast<std::int64_t>(opt.exact_bound))
          ? SigmaMode::Exact
          : SigmaMode::Invariant);
  rep.mode_used = mode;
  auto f1 = sigma(g, s.pair1, mode, opt);
  auto f2 = sigma(g, s.pair2, mode, opt);
  rep.dagger = check_dagger(f1, f2, opt);
  rep.beauville_ok = rep.generation1 && rep.generation2 &&
                     rep.dagger.outcome == DaggerOutcome::DisjointCertified;
  if (s.t1 && s.t2) rep.strongly_real = verify_strongly_real(g, s);
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

std::optional<Element> find_inverting_conjugator(const RealizedGroup& g, const Element& x,
                                                 const Element& y, std::size_t bound) {
  ElementTable table(g, bound);
  Permutation px = g.action_perm(x), py = g.action_perm(y);
  Permutation tx = px.inverse(), ty = py.inverse();
  for (std::uint32_t i = 0; i < table.size(); ++i) {
    const Permutation& pc = table.perm_at(i);
    Permutation pci = pc.inverse();
    if (pci * px * pc == tx && pci * py * pc == ty) return table.element_at(i);
  }
  return std::nullopt;
}

}  // namespace beauville
