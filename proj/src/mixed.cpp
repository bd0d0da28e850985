#include "beauville/mixed.hpp"

#include <numeric>
#include <unordered_set>

namespace beauville {

namespace {

void partitions_of(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                   std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<unsigned>> partitions_of(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  partitions_of(n, n, cur, out);
  return out;
}

SignedPermutation rep_from_type(std::size_t degree, const std::vector<unsigned>& pos,
                                const std::vector<unsigned>& neg) {
  std::vector<std::uint32_t> img(degree);
  std::vector<std::uint8_t> sign(degree, 0);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  std::uint32_t at = 0;
  auto lay_cycle = [&](unsigned len, bool negative) {
    for (unsigned j = 0; j < len; ++j) img[at + j] = at + (j + 1) % len;
    if (negative) sign[at] = 1;
    at += len;
  };
  for (auto len : pos) lay_cycle(len, false);
  for (auto len : neg) lay_cycle(len, true);
  return SignedPermutation(Permutation(std::move(img)), std::move(sign));
}

// Conjugacy class representatives for the A/B/D families, built from
// (signed) cycle types; order and index-2 characters are constant on the
// classes these cover, which is all a coset scan needs.
std::optional<std::vector<Element>> combinatorial_class_reps(const RealizedGroup& g) {
  if (!g.type()) return std::nullopt;
  Family f = g.type()->family;
  if (f != Family::A && f != Family::B && f != Family::D) return std::nullopt;
  std::size_t degree = g.generators()[0].as_signed_perm().degree();
  std::vector<Element> reps;
  if (f == Family::A) {
    for (const auto& lam : partitions_of(static_cast<unsigned>(degree)))
      reps.emplace_back(rep_from_type(degree, lam, {}));
    return reps;
  }
  unsigned n = static_cast<unsigned>(degree);
  for (unsigned k = 0; k <= n; ++k) {
    auto lams = partitions_of(k);
    auto mus = partitions_of(n - k);
    for (const auto& lam : lams)
      for (const auto& mu : mus) {
        if (f == Family::D && mu.size() % 2 != 0) continue;  // odd sign count
        reps.emplace_back(rep_from_type(degree, lam, mu));
      }
  }
  return reps;
}

}  // namespace

MixedReport verify_mixed(const MixedQuadruple& q, std::size_t bound) {
  const RealizedGroup& g = *q.group;
  const Character2& chi = *q.subgroup;
  MixedReport rep;
  rep.precondition_ok =
      chi.value(q.a) == 1 && chi.value(q.c) == 1 && chi.value(q.g) == -1;
  if (!rep.precondition_ok) {
    rep.failure = "a, c must lie in the index-2 subgroup and g outside it";
    return rep;
  }
  ElementTable table(g, bound);
  std::uint32_t ia = table.index_of(g.action_perm(q.a));
  std::uint32_t ic = table.index_of(g.action_perm(q.c));
  std::uint32_t ig = table.index_of(g.action_perm(q.g));

  // the index-2 subgroup as a set of table indices
  std::vector<std::uint32_t> sub;
  std::vector<bool> in_sub(table.size(), false);
  for (std::uint32_t i = 0; i < table.size(); ++i)
    if (chi.kernel().contains(table.perm_at(i))) {
      sub.push_back(i);
      in_sub[i] = true;
    }

  // generation: closure of {a, c}
  {
    std::unordered_set<std::uint32_t> closure{0};
    std::vector<std::uint32_t> work{0};
    while (!work.empty()) {
      auto s = work.back();
      work.pop_back();
      for (std::uint32_t step : {ia, ic}) {
        auto t = table.mult(s, step);
        if (closure.insert(t).second) work.push_back(t);
      }
    }
    rep.generation_ok = closure.size() == sub.size();
    if (!rep.generation_ok) rep.failure = "<a, c> is a proper subgroup of G0";
  }

  // Sigma(a, c) inside G0: conjugates over the subgroup of all nontrivial
  // powers of a, c, ac
  std::vector<bool> in_sigma(table.size(), false);
  auto add_powers = [&](std::uint32_t e) {
    std::uint32_t p = e;
    while (p != 0) {
      for (auto k : sub) {
        std::uint32_t cj = table.mult(table.mult(table.inverse_of(k), p), k);
        in_sigma[cj] = true;
      }
      p = table.mult(p, e);
    }
  };
  add_powers(ia);
  add_powers(ic);
  add_powers(table.mult(ia, ic));

  // (g*gamma)^2 must avoid Sigma(a,c) together with the identity
  rep.square_condition_ok = true;
  for (auto gamma : sub) {
    std::uint32_t s = table.mult(ig, gamma);
    std::uint32_t sq = table.mult(s, s);
    if (sq == 0 || in_sigma[sq]) {
      rep.square_condition_ok = false;
      if (rep.failure.empty())
        rep.failure = "(g*gamma)^2 meets Sigma(a,c) for some gamma in G0";
      break;
    }
  }

  // dagger between (a,c) and (a^g, c^g): the second Sigma is the
  // g-conjugate of the first since G0 is normal
  rep.dagger_ok = true;
  std::uint32_t igi = table.inverse_of(ig);
  for (std::uint32_t u = 1; u < table.size(); ++u) {
    if (!in_sigma[u]) continue;
    std::uint32_t v = table.mult(table.mult(igi, u), ig);
    if (in_sigma[v] && v != 0) {
      rep.dagger_ok = false;
      if (rep.failure.empty())
        rep.failure = "Sigma(a,c) meets Sigma(a^g, c^g) nontrivially";
      break;
    }
  }
  return rep;
}

ObstructionResult order_mod4_obstruction(const RealizedGroup& g, const Character2& chi,
                                         std::size_t bound) {
  ObstructionResult res;
  // generators first: an involution with chi = -1 settles it immediately
  for (const auto& gen : g.generators()) {
    if (chi.value(gen) == -1 && gen.order() % 4 != 0) {
      res.blocked = true;
      res.witness = gen;
      res.note = "generator outside the subgroup has order " + std::to_string(gen.order());
      return res;
    }
  }
  auto scan = [&](const std::vector<Element>& candidates, const char* how) {
    for (const auto& e : candidates) {
      if (chi.value(e) == -1 && e.order() % 4 != 0) {
        res.blocked = true;
        res.witness = e;
        res.note = std::string(how) + " scan found order-" + std::to_string(e.order()) +
                   " element outside the subgroup";
        return true;
      }
    }
    return false;
  };
  if (auto reps = combinatorial_class_reps(g)) {
    if (!scan(*reps, "class-representative")) res.note = "no witness in any class";
    return res;
  }
  ElementTable table(g, bound);
  for (std::uint32_t i = 0; i < table.size(); ++i) {
    // order and character value are computed from the permutation image,
    // so materialize only candidate witnesses
    if (!chi.kernel().contains(table.perm_at(i)) && table.element_order(i) % 4 != 0) {
      res.blocked = true;
      res.witness = table.element_at(i);
      res.note = "enumeration found order-" + std::to_string(table.element_order(i)) +
                 " element outside the subgroup";
      return res;
    }
  }
  res.note = "every element outside the subgroup has order divisible by 4";
  return res;
}

bool mixable_check(const RealizedGroup& h, const Element& a1, const Element& c1,
                   const Element& a2, const Element& c2) {
  if (a1.order() % 2 != 0 || c1.order() % 2 != 0) return false;
  if (!generates_whole(h, {a1 * a1, a1 * c1, c1 * c1}).generates) return false;
  if (!generates_whole(h, {a2, c2}).generates) return false;
  auto nu = [](const Element& a, const Element& c) {
    return a.order() * c.order() * (a * c).order();
  };
  return std::gcd(nu(a1, c1), nu(a2, c2)) == 1;
}

ObstructionResult mixable_obstruction(const RealizedGroup& h, std::size_t bound) {
  ObstructionResult res;
  StabilizerChain derived = derived_subgroup(h);
  if (derived.order() == h.order()) {
    res.blocked = true;
    res.note = "perfect group: no elements outside the derived subgroup (vacuously blocked)";
    return res;
  }
  if (auto reps = combinatorial_class_reps(h)) {
    for (const auto& e : *reps) {
      Permutation p = h.action_perm(e);
      if (!derived.contains(p) && p.order() % 2 == 1) {
        res.witness = e;
        res.note = "odd-order element outside the derived subgroup";
        return res;
      }
    }
    res.blocked = true;
    res.note = "class scan: every element outside the derived subgroup has even order";
    return res;
  }
  ElementTable table(h, bound);
  for (std::uint32_t i = 0; i < table.size(); ++i) {
    const Permutation& p = table.perm_at(i);
    if (!derived.contains(p) && p.order() % 2 == 1) {
      res.witness = table.element_at(i);
      res.note = "odd-order element outside the derived subgroup";
      return res;
    }
  }
  res.blocked = true;
  res.note = "enumeration: every element outside the derived subgroup has even order";
  return res;
}

}  // namespace beauville
