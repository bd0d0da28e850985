#pragma once

#include <string>

#include "beauville/mixed.hpp"
#include "beauville/search.hpp"

namespace beauville {

// Stable machine-readable forms of the verification outcomes. All maps
// are emitted in key order so identical inputs give byte-identical text;
// the volatile timestamp lives in its own top-level field.
std::string report_to_json(const BeauvilleReport& rep, const BeauvilleStructure* s,
                           int indent = 2);
std::string search_to_json(const std::string& group, const SearchOutcome& out, int indent = 2);
std::string obstruction_to_json(const std::string& group, const std::string& kind,
                                const std::vector<std::pair<std::string, ObstructionResult>>& rows,
                                int indent = 2);

// Wraps a payload with schema/version and a timestamp field.
std::string wrap_document(const std::string& payload_json, int indent = 2);

std::string element_text(const Element& e);

}  // namespace beauville
