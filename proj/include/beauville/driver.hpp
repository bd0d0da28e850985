#pragma once

#include <string>
#include <vector>

#include "beauville/report.hpp"

namespace beauville {

// One verified catalogue entry or exhaustive negative, as the paper-wide
// run reports it.
struct PaperAllItem {
  std::string name;
  bool ok = false;
  std::string summary;     // one human line
  std::string item_json;   // machine form without volatile fields
};

struct PaperAllResult {
  bool all_ok = true;
  std::vector<PaperAllItem> items;
  std::string payload_json;  // deterministic document body
};

// Verifies every catalogued structure (B and D up to max_rank, the
// exceptional types, the product examples) and proves the exhaustive
// negative cases. Deterministic: two runs give byte-identical payloads.
PaperAllResult run_verify_paper_all(int max_rank = 30, unsigned workers = 1);

}  // namespace beauville
