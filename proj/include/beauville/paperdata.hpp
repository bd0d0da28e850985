#pragma once

#include <map>

#include "beauville/sigma.hpp"

namespace beauville {

// One catalogued structure: six elements as cycle-notation strings (for
// the signed-permutation realizations) or as exact matrix literals (for
// the exceptional types). Annotations record where the transcribed source
// form failed verification and what replaced it; the transcribed text is
// always kept alongside, never silently altered.
struct StructureRecord {
  std::string group;       // descriptor, e.g. "B12", "E8", "H3xH3"
  std::string provenance;  // which family/table/figure the data came from
  std::size_t degree = 0;  // permutation degree for notation records
  std::string x1, y1, t1, x2, y2, t2;
  std::vector<ExactMatrix> matrices;  // x1, y1, x2, y2, t for matrix records
  std::map<std::string, std::string> annotations;
};

// Parametric generator families for the classical types. Preconditions:
// bn_even needs even n >= 12, bn_odd odd n >= 11, dn_even even n >= 10,
// dn_odd odd n >= 11.
StructureRecord bn_even(int n);
StructureRecord bn_odd(int n);
StructureRecord dn_even(int n);
StructureRecord dn_odd(int n);

// Small-rank table rows, loaded from the data catalogue:
// B with 5 <= n <= 10, D with 5 <= n <= 9.
StructureRecord small_case(Family family, int n);

// Exceptional-type matrix structures (E6, E7, E8, H4).
StructureRecord exceptional(Family family);

// The two explicit product structures (a 14-point realization of
// H3 x H3 and an 8-point realization of A4 x I2(3)).
std::vector<StructureRecord> product_examples();

// Closed-form traces of powers of the six structure elements. case_name
// is one of "B-even", "B-odd", "D-even", "D-odd"; role one of x1, y1,
// x1y1, x2, y2, x2y2; requires 1 <= r < order(element).
std::int64_t trace_oracle(const std::string& case_name, const std::string& role, int n, int r);
std::uint64_t trace_oracle_element_order(const std::string& case_name, const std::string& role,
                                         int n);

// The elements whose powers the trace tables describe. For the odd B
// family these are the transcribed forms (whose traces the closed forms
// match), not the verified replacement structure.
struct TraceFamilyElements {
  SignedPermutation x1, y1, x2, y2;
};
TraceFamilyElements trace_family_elements(const std::string& case_name, int n);

// The group a record lives in, and the record as a checkable structure.
RealizedGroup realize_record_group(const StructureRecord& rec);
BeauvilleStructure to_structure(const StructureRecord& rec, const RealizedGroup& g);

// Every descriptor verify-paper-all covers, in a fixed order.
std::vector<std::string> catalogue_descriptors(int max_rank = 30);
StructureRecord record_for(const std::string& descriptor);

// data directory resolution: $BEAUVILLE_DATA_DIR, else the source tree
std::string data_dir();

// matrix literal (de)serialization used by the catalogue: a JSON object
// {"dim": n, "den": d, "entries": [[[a,b], ...], ...]} where entry [a,b]
// denotes (a + b*sqrt5)/d; round-trips bit-exactly
ExactMatrix matrix_from_json_text(const std::string& json_text);
std::string matrix_to_json_text(const ExactMatrix& m);

}  // namespace beauville
