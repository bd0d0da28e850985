#pragma once

#include "beauville/sigma.hpp"

namespace beauville {

enum class SearchVerdict { Found, NoneExists, Exhausted };

struct SearchOptions {
  bool exhaustive = true;
  std::size_t group_bound = 10000;   // largest group for the exhaustive walk
  std::uint64_t budget = 100000;     // attempts for the randomized walk
  std::uint64_t seed = 1;
  unsigned workers = 1;
  bool require_strongly_real = false;  // also look for inverting conjugators
};

struct SearchOutcome {
  SearchVerdict verdict = SearchVerdict::Exhausted;
  std::optional<BeauvilleStructure> structure;
  std::optional<BeauvilleReport> report;
  // exhaustive statistics
  std::uint64_t generating_pair_classes = 0;  // distinct (class rep, y) generating pairs
  std::uint64_t distinct_sigma_sets = 0;
  // every generating pair's Sigma contains this element's class (set when
  // the group has a central involution and the property holds)
  std::optional<bool> central_involution_in_all_sigma;
};

// Exhaustive mode enumerates generating pairs up to simultaneous
// conjugacy — x runs over conjugacy class representatives, y over the
// whole group — and compares exact Sigma class-sets pairwise. NoneExists
// is a proof; randomized mode only ever reports Found or Exhausted.
SearchOutcome search_structures(const RealizedGroup& g, const SearchOptions& opt = {});

}  // namespace beauville
