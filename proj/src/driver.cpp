#include "beauville/driver.hpp"

#include <json.hpp>

#include "beauville/paperdata.hpp"
#include "beauville/search.hpp"

namespace beauville {

PaperAllResult run_verify_paper_all(int max_rank, unsigned workers) {
  PaperAllResult res;

  for (const auto& d : catalogue_descriptors(max_rank)) {
    StructureRecord rec = record_for(d);
    RealizedGroup g = realize_record_group(rec);
    BeauvilleStructure s = to_structure(rec, g);
    BeauvilleReport rep = verify_unmixed(g, s);
    PaperAllItem item;
    item.name = d;
    item.ok = rep.certified_strongly_real() &&
              rep.dagger.outcome == DaggerOutcome::DisjointCertified;
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(report_to_json(rep, &s));
    j.erase("elapsedMs");
    item.item_json = j.dump();
    item.summary = d + ": " + (item.ok ? "certified strongly real" : "FAILED");
    res.all_ok = res.all_ok && item.ok;
    res.items.push_back(std::move(item));
  }

  std::vector<std::string> negatives{"A2", "A3", "B2", "B3", "B4", "D4", "H3", "F4"};
  for (int k = 3; k <= 12; ++k) negatives.push_back("I2(" + std::to_string(k) + ")");
  for (const auto& d : negatives) {
    RealizedGroup g = build_coxeter(parse_type(d));
    SearchOptions opt;
    opt.workers = workers;
    SearchOutcome out = search_structures(g, opt);
    PaperAllItem item;
    item.name = d;
    item.ok = out.verdict == SearchVerdict::NoneExists;
    if (d == "H3")
      item.ok = item.ok && out.central_involution_in_all_sigma &&
                *out.central_involution_in_all_sigma;
    item.item_json = search_to_json(d, out, -1);
    item.summary = d + ": " + (item.ok ? "NoneExists (as classified)" : "UNEXPECTED RESULT");
    res.all_ok = res.all_ok && item.ok;
    res.items.push_back(std::move(item));
  }

  nlohmann::ordered_json doc;
  doc["schemaVersion"] = 1;
  doc["maxRank"] = max_rank;
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const auto& it : res.items) items.push_back(nlohmann::ordered_json::parse(it.item_json));
  doc["items"] = std::move(items);
  doc["allOk"] = res.all_ok;
  res.payload_json = doc.dump(2);
  return res;
}

}  // namespace beauville
