#include "beauville/report.hpp"

#include <chrono>

#include <json.hpp>

namespace beauville {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* outcome_name(DaggerOutcome o) {
  switch (o) {
    case DaggerOutcome::DisjointCertified: return "DisjointCertified";
    case DaggerOutcome::IntersectNontrivial: return "IntersectNontrivial";
    case DaggerOutcome::Inconclusive: return "Inconclusive";
  }
  return "?";
}

ordered_json dagger_json(const DaggerCertificate& c) {
  ordered_json j;
  j["outcome"] = outcome_name(c.outcome);
  j["diagonalRuleFired"] = c.diagonal_rule_fired;
  j["escalations"] = c.escalations;
  if (c.witness_u) j["witnessU"] = element_text(*c.witness_u);
  if (c.witness_v) j["witnessV"] = element_text(*c.witness_v);
  if (c.witness_conjugator) j["witnessConjugator"] = element_text(*c.witness_conjugator);
  if (!c.witness_note.empty()) j["witnessNote"] = c.witness_note;
  if (!c.collisions.empty()) j["collisions"] = c.collisions;
  return j;
}

ordered_json report_json(const BeauvilleReport& rep, const BeauvilleStructure* s) {
  ordered_json j;
  j["schemaVersion"] = 1;
  j["group"] = rep.group;
  if (s) {
    ordered_json pairs = ordered_json::array();
    for (const GeneratingPair* p : {&s->pair1, &s->pair2}) {
      ordered_json pj;
      pj["x"] = element_text(p->x);
      pj["y"] = element_text(p->y);
      pairs.push_back(std::move(pj));
    }
    j["pairs"] = std::move(pairs);
    ordered_json w;
    if (s->t1) w["t1"] = element_text(*s->t1);
    if (s->t2) w["t2"] = element_text(*s->t2);
    j["witnesses"] = std::move(w);
  }
  ordered_json gen;
  gen["order1"] = rep.order1.to_string();
  gen["order2"] = rep.order2.to_string();
  gen["expected"] = rep.expected_order.to_string();
  gen["pair1Generates"] = rep.generation1;
  gen["pair2Generates"] = rep.generation2;
  j["generation"] = std::move(gen);
  j["dagger"] = dagger_json(rep.dagger);
  j["sigmaMode"] = rep.mode_used == SigmaMode::Exact ? "exact" : "invariant";
  j["beauville"] = rep.beauville_ok;
  if (rep.strongly_real) j["stronglyReal"] = *rep.strongly_real;
  j["elapsedMs"] = rep.elapsed_ms;
  return j;
}

}  // namespace

std::string element_text(const Element& e) { return e.to_string(); }

std::string report_to_json(const BeauvilleReport& rep, const BeauvilleStructure* s, int indent) {
  return report_json(rep, s).dump(indent);
}

std::string search_to_json(const std::string& group, const SearchOutcome& out, int indent) {
  ordered_json j;
  j["schemaVersion"] = 1;
  j["group"] = group;
  switch (out.verdict) {
    case SearchVerdict::Found: j["verdict"] = "Found"; break;
    case SearchVerdict::NoneExists: j["verdict"] = "NoneExists"; break;
    case SearchVerdict::Exhausted: j["verdict"] = "Exhausted"; break;
  }
  j["generatingPairClasses"] = out.generating_pair_classes;
  j["distinctSigmaSets"] = out.distinct_sigma_sets;
  if (out.central_involution_in_all_sigma)
    j["centralInvolutionInAllSigma"] = *out.central_involution_in_all_sigma;
  if (out.structure && out.report)
    j["structure"] = ordered_json::parse(report_to_json(*out.report, &*out.structure, indent));
  return j.dump(indent);
}

std::string obstruction_to_json(const std::string& group, const std::string& kind,
                                const std::vector<std::pair<std::string, ObstructionResult>>& rows,
                                int indent) {
  ordered_json j;
  j["schemaVersion"] = 1;
  j["group"] = group;
  j["kind"] = kind;
  ordered_json rs = ordered_json::array();
  for (const auto& [label, res] : rows) {
    ordered_json r;
    r["subgroup"] = label;
    r["blocked"] = res.blocked;
    if (res.witness) r["witness"] = element_text(*res.witness);
    r["note"] = res.note;
    rs.push_back(std::move(r));
  }
  j["results"] = std::move(rs);
  return j.dump(indent);
}

std::string wrap_document(const std::string& payload_json, int indent) {
  ordered_json j;
  j["payload"] = ordered_json::parse(payload_json);
  j["timestamp"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::system_clock::now().time_since_epoch())
                       .count();
  return j.dump(indent);
}

}  // namespace beauville
