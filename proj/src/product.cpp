#include "beauville/product.hpp"

namespace beauville {

RealizedGroup direct_product(const RealizedGroup& g1, const RealizedGroup& g2) {
  std::vector<Element> gens;
  Element e1 = g1.identity(), e2 = g2.identity();
  for (const auto& a : g1.generators()) gens.push_back(Element::pair(a, e2));
  for (const auto& b : g2.generators()) gens.push_back(Element::pair(e1, b));
  auto action = std::make_shared<ProductAction>(g1.action(), g2.action());
  return RealizedGroup(g1.name() + "x" + g2.name(), std::move(gens), std::move(action),
                       g1.expected_order() * g2.expected_order());
}

ProductStructureResult product_structure(const RealizedGroup& product, const RealizedGroup& g1,
                                         const BeauvilleStructure& s1, const RealizedGroup& g2,
                                         const BeauvilleStructure& s2) {
  if (!s1.t1 || !s1.t2 || !s2.t1 || !s2.t2)
    throw std::invalid_argument("product_structure: factor structures need witnesses");
  auto pre1 = verify_unmixed(g1, s1);
  auto pre2 = verify_unmixed(g2, s2);
  if (!pre1.certified_strongly_real() || !pre2.certified_strongly_real())
    throw std::invalid_argument("product_structure: factor structures failed verification");

  struct Option {
    bool swap_sides;   // match factor-1 pair 1 with factor-2 pair 2, or pair 1
    bool invert;       // invert the second coordinates
    bool swap_roles;   // pair the second coordinates (x', y') or (y', x')
  };
  // first candidate is the crossed, inverted, role-preserving pattern
  std::vector<Option> options;
  for (bool sw : {true, false})
    for (bool inv : {true, false})
      for (bool roles : {false, true}) options.push_back({sw, inv, roles});

  for (const auto& o : options) {
    const GeneratingPair& q1 = o.swap_sides ? s2.pair2 : s2.pair1;
    const GeneratingPair& q2 = o.swap_sides ? s2.pair1 : s2.pair2;
    const Element& t1b = o.swap_sides ? *s2.t2 : *s2.t1;
    const Element& t2b = o.swap_sides ? *s2.t1 : *s2.t2;
    auto tw = [&](const Element& e) { return o.invert ? e.inverse() : e; };
    auto first = [&](const GeneratingPair& q) { return o.swap_roles ? q.y : q.x; };
    auto second = [&](const GeneratingPair& q) { return o.swap_roles ? q.x : q.y; };
    BeauvilleStructure s;
    s.pair1 = {Element::pair(s1.pair1.x, tw(second(q1))),
               Element::pair(s1.pair1.y, tw(first(q1)))};
    s.pair2 = {Element::pair(s1.pair2.x, tw(second(q2))),
               Element::pair(s1.pair2.y, tw(first(q2)))};
    s.t1 = Element::pair(*s1.t1, t1b);
    s.t2 = Element::pair(*s1.t2, t2b);
    auto rep = verify_unmixed(product, s);
    if (rep.certified_strongly_real()) {
      std::string pattern = std::string(o.swap_sides ? "cross" : "straight") +
                            (o.invert ? "/inv" : "") + (o.swap_roles ? "/swapped" : "");
      return {std::move(s), std::move(rep), pattern};
    }
  }
  throw std::runtime_error("product_structure: no recombination verified");
}

bool two_generated_obstruction(const std::vector<CoxeterType>& factors) {
  int rank = 0;
  for (const auto& t : factors) rank += abelianization_rank(t);
  return rank >= 3;
}

bool i2_order_obstruction(const RealizedGroup& k1, int k) {
  BigInt g = BigInt::gcd(k1.order(), BigInt(k));
  return g == BigInt(1);
}

}  // namespace beauville
