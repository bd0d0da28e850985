#pragma once

#include "beauville/sigma.hpp"

namespace beauville {

// Direct product acting on the disjoint union of the factor actions;
// elements are component pairs.
RealizedGroup direct_product(const RealizedGroup& g1, const RealizedGroup& g2);

// Assembles a candidate structure on K1 x K2 from verified structures on
// the factors, using the mixed-coordinate pattern
//   {{(x1, y2'^-1), (y1, x2'^-1)}, {(x2, y1'^-1), (y2, x1'^-1)}}
// with doubled strong-reality witnesses, then verifies it; if the first
// candidate fails, the finite set of coset recombinations (swapping which
// factor pair meets which, and inverting components) is tried in a fixed
// order. Throws when nothing verifies.
struct ProductStructureResult {
  BeauvilleStructure structure;
  BeauvilleReport report;
  std::string pattern;  // which recombination verified
};

ProductStructureResult product_structure(const RealizedGroup& product, const RealizedGroup& g1,
                                         const BeauvilleStructure& s1, const RealizedGroup& g2,
                                         const BeauvilleStructure& s2);

// C2-rank obstruction: the abelianisation of a direct product of
// irreducible Coxeter groups has C2-rank at least the sum of the factor
// ranks, and a 2-generated group caps that rank at 2.
bool two_generated_obstruction(const std::vector<CoxeterType>& factors);

// gcd test: K1 x W(I2(k)) cannot be Beauville when k is coprime to |K1|
// (elements of order dividing 2k in the I2 part are then unreachable from
// the K1 side of any Sigma). Not a converse: a false result proves
// nothing, and the exhaustive search remains the decider.
bool i2_order_obstruction(const RealizedGroup& k1, int k);

}  // namespace beauville
