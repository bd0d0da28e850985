#include <doctest.h>

#include "beauville/paperdata.hpp"
#include "beauville/report.hpp"

using namespace beauville;

TEST_CASE("parametric records print the expected notation") {
  CHECK(bn_even(12).x1 == "(1,2,3,4,5,6,7,8,9,10,11)(_12)");
  CHECK(bn_even(12).t1 == "(1,2)(3,11)(4,10)(5,9)(6,8)");
  CHECK(dn_odd(11).t1 == "(2,9)(3,8)(4,7)(5,6)(10,11)");
  CHECK(dn_odd(11).x2 == "(1,2,3,4,5,6,7)(_8)(_9)(_10)(_11)");
  CHECK(bn_odd(11).y2 == "(11,10,9,8,7,6,5,4)");
  CHECK(small_case(Family::B, 5).x1 == "(_1,_2,_5)");
  CHECK(small_case(Family::D, 7).y2 == "(_7,_6,_5,_4)(3,2,1)");
  CHECK(small_case(Family::B, 8).t2 == "(1,3)(4,5)(6,8)");
  CHECK_THROWS_AS(bn_even(13), std::invalid_argument);
  CHECK_THROWS_AS(bn_odd(12), std::invalid_argument);
  CHECK_THROWS_AS(dn_even(8), std::invalid_argument);
  CHECK_THROWS_AS(small_case(Family::B, 11), std::invalid_argument);
  CHECK_THROWS_AS(small_case(Family::D, 10), std::invalid_argument);
}

TEST_CASE("replaced rows keep the transcribed data in their annotations") {
  CHECK(bn_odd(11).annotations.count("transcribed_x1"));
  CHECK(bn_odd(11).annotations.count("note"));
  CHECK(dn_odd(13).annotations.count("transcribed_t2"));
  CHECK(small_case(Family::D, 5).annotations.count("transcribed_x1"));
  CHECK(small_case(Family::D, 8).annotations.count("note"));
  CHECK(small_case(Family::B, 9).annotations.count("transcribed_y2"));
  CHECK(exceptional(Family::E8).annotations.count("note"));
  // untouched rows carry no annotations
  CHECK(small_case(Family::B, 5).annotations.empty());
  CHECK(bn_even(14).annotations.empty());
}

TEST_CASE("the even-family five-cycle identity holds for all even ranks") {
  for (int n = 12; n <= 30; n += 2) {
    StructureRecord rec = bn_even(n);
    SignedPermutation x1 = parse_signed(rec.x1, n);
    SignedPermutation y1 = parse_signed(rec.y1, n);
    SignedPermutation z = x1 * x1 * y1 * y1;
    std::string want = "(1," + std::to_string(n - 1) + ",2," + std::to_string(n) + "," +
                       std::to_string(n - 2) + ")";
    CHECK(format_signed(z) == want);
  }
}

TEST_CASE("trace oracle sweep: closed forms match the computed traces, n = 10..30") {
  for (const char* case_name : {"B-even", "B-odd", "D-even", "D-odd"}) {
    bool even = std::string(case_name).find("even") != std::string::npos;
    bool bfam = case_name[0] == 'B';
    int lo = bfam ? (even ? 12 : 11) : (even ? 10 : 11);
    for (int n = lo; n <= 30; n += 2) {
      TraceFamilyElements f = trace_family_elements(case_name, n);
      SignedPermutation e[6] = {f.x1, f.y1, f.x1 * f.y1, f.x2, f.y2, f.x2 * f.y2};
      const char* roles[6] = {"x1", "y1", "x1y1", "x2", "y2", "x2y2"};
      for (int k = 0; k < 6; ++k) {
        REQUIRE(e[k].order() == trace_oracle_element_order(case_name, roles[k], n));
        SignedPermutation p(static_cast<std::size_t>(n));
        for (std::uint64_t r = 1; r < e[k].order(); ++r) {
          p = p * e[k];
          CHECK(p.trace() == trace_oracle(case_name, roles[k], n, static_cast<int>(r)));
        }
      }
    }
  }
}

TEST_CASE("trace oracle spot values") {
  CHECK(trace_oracle("B-even", "x1", 12, 11) == 10);   // r = n-1
  CHECK(trace_oracle("B-even", "x1y1", 12, 4) == 4);   // n-8
  CHECK(trace_oracle("B-even", "x1y1", 12, 3) == 8);   // n-4
  CHECK(trace_oracle("D-odd", "y1", 11, 3) == 1);
  CHECK(trace_oracle("B-odd", "x2y2", 13, 8) == -3);   // n-16
  CHECK(trace_oracle("B-even", "y1", 20, 7) == 2);
  CHECK_THROWS_AS(trace_oracle("B-even", "x1y1", 12, 8), std::invalid_argument);
  CHECK_THROWS_AS(trace_oracle("B-even", "x1", 12, 0), std::invalid_argument);
}

TEST_CASE("record_for covers the catalogue and realizes verifiable groups") {
  auto names = catalogue_descriptors(12);
  CHECK(names.size() == 8 + 8 + 6);
  StructureRecord rec = record_for("D10");
  CHECK(rec.provenance == "Dn-even-family");
  CHECK_THROWS_AS(record_for("A7"), std::invalid_argument);
}

TEST_CASE("small-table structures verify end to end") {
  for (const char* d : {"B5", "B9", "D5", "D7", "D8"}) {
    StructureRecord rec = record_for(d);
    RealizedGroup g = realize_record_group(rec);
    auto rep = verify_unmixed(g, to_structure(rec, g));
    CHECK(rep.certified_strongly_real());
  }
}

TEST_CASE("H4 figure elements are members identified through the root action") {
  StructureRecord rec = exceptional(Family::H4);
  RealizedGroup h4 = realize_record_group(rec);
  CHECK(h4.order() == BigInt(14400));
  BeauvilleStructure s = to_structure(rec, h4);
  CHECK(h4.contains(s.pair1.x));
  CHECK(h4.contains(s.pair2.y));
  CHECK(s.pair1.x.order() == 2);  // the quarter matrix is an involution
}

TEST_CASE("product examples generate groups of the product order") {
  for (const auto& rec : product_examples()) {
    RealizedGroup g = realize_record_group(rec);
    if (rec.group == "H3xH3") CHECK(g.order() == BigInt(14400));
    if (rec.group == "A4xI2(3)") CHECK(g.order() == BigInt(720));
  }
}

TEST_CASE("the 14-point realization splits into two factors of shape 2 x Alt(5)") {
  StructureRecord rec = record_for("H3xH3");
  RealizedGroup g = realize_record_group(rec);
  REQUIRE(g.order() == BigInt(14400));
  // pointwise stabilizer of the right seven points = the left factor
  std::size_t deg = g.action()->degree();
  std::vector<Permutation> gens;
  for (const auto& e : g.generators()) gens.push_back(g.action_perm(e));
  for (int side = 0; side < 2; ++side) {
    std::vector<std::uint32_t> prefix;
    for (std::uint32_t p = 0; p < 14; ++p)
      if ((side == 0) == (p >= 7)) {
        prefix.push_back(p);          // +points of the other factor
        prefix.push_back(p + 14);     // their signed copies
      }
    StabilizerChain chain(deg, gens, prefix);
    BigInt factor = chain.stabilizer_order(prefix.size());
    CHECK(factor == BigInt(120));
  }
  // each factor is 2 x Alt(5): derived subgroup of the whole group has
  // order 3600 = 60 * 60 and index 4
  CHECK(derived_subgroup(g).order() == BigInt(3600));
}

TEST_CASE("jones certificates agree with the chain on catalogue pairs") {
  // a fixed sample of ranks across both families
  for (const char* d : {"B12", "B17", "B23", "D14", "D21"}) {
    StructureRecord rec = record_for(d);
    RealizedGroup g = realize_record_group(rec);
    BeauvilleStructure s = to_structure(rec, g);
    auto cert = jones_certificate(g, s.pair1.x, s.pair1.y);
    CHECK(cert.contains_alt);
    CHECK(generates_whole(g, {s.pair1.x, s.pair1.y}).generates);
  }
  // at rank 12 the product x1^2 y1^2 is the five-cycle the even-family
  // generation argument rests on; the certificate search may settle for a
  // shorter witness, so check the five-cycle directly as well
  StructureRecord rec = record_for("B12");
  RealizedGroup g = realize_record_group(rec);
  BeauvilleStructure s = to_structure(rec, g);
  auto cert = jones_certificate(g, s.pair1.x, s.pair1.y);
  CHECK(cert.contains_alt);
  CHECK(cert.cycle_length >= 2);
  CHECK(cert.cycle_length <= 9);
  Element five = s.pair1.x.pow(2) * s.pair1.y.pow(2);
  auto lens = five.as_signed_perm().perm().cycle_lengths();
  CHECK(lens.back() == 5);
  CHECK(lens[lens.size() - 2] == 1);
}

TEST_CASE("report JSON carries the machine contract fields") {
  StructureRecord rec = record_for("B5");
  RealizedGroup g = realize_record_group(rec);
  BeauvilleStructure s = to_structure(rec, g);
  auto rep = verify_unmixed(g, s);
  std::string j = report_to_json(rep, &s);
  for (const char* field : {"schemaVersion", "group", "pairs", "generation", "dagger",
                            "stronglyReal", "elapsedMs"})
    CHECK(j.find(field) != std::string::npos);
}
