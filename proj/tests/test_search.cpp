#include <doctest.h>

#include "beauville/product.hpp"
#include "beauville/search.hpp"
#include "beauville/paperdata.hpp"

using namespace beauville;

TEST_CASE("exhaustive search proves the small negative cases") {
  for (const char* d : {"A2", "A3", "B2", "B3", "D4", "I2(3)", "I2(7)", "I2(12)"}) {
    RealizedGroup g = build_coxeter(parse_type(d));
    SearchOutcome out = search_structures(g);
    CHECK(out.verdict == SearchVerdict::NoneExists);
  }
}

TEST_CASE("B4 is not a Beauville group") {
  SearchOutcome out = search_structures(build_coxeter(parse_type("B4")));
  CHECK(out.verdict == SearchVerdict::NoneExists);
  CHECK(out.generating_pair_classes > 0);
}

TEST_CASE("H3: no structure, and every generating pair meets the central involution") {
  SearchOutcome out = search_structures(build_coxeter(parse_type("H3")));
  CHECK(out.verdict == SearchVerdict::NoneExists);
  REQUIRE(out.central_involution_in_all_sigma.has_value());
  CHECK(*out.central_involution_in_all_sigma);
}

TEST_CASE("B5 has a structure and the found one fully verifies") {
  SearchOptions opt;
  opt.require_strongly_real = true;
  SearchOutcome out = search_structures(build_coxeter(parse_type("B5")), opt);
  REQUIRE(out.verdict == SearchVerdict::Found);
  REQUIRE(out.report.has_value());
  CHECK(out.report->certified_strongly_real());
}

TEST_CASE("search results are identical across worker counts") {
  SearchOptions one;
  one.workers = 1;
  SearchOptions four;
  four.workers = 4;
  RealizedGroup g1 = build_coxeter(parse_type("B3"));
  RealizedGroup g4 = build_coxeter(parse_type("B3"));
  SearchOutcome a = search_structures(g1, one);
  SearchOutcome b = search_structures(g4, four);
  CHECK(a.verdict == b.verdict);
  CHECK(a.generating_pair_classes == b.generating_pair_classes);
  CHECK(a.distinct_sigma_sets == b.distinct_sigma_sets);
}

TEST_CASE("randomized mode is reproducible for a fixed seed and budget") {
  SearchOptions opt;
  opt.exhaustive = false;
  opt.budget = 40;
  opt.seed = 11;
  RealizedGroup g = build_coxeter(parse_type("A4"));
  SearchOutcome a = search_structures(g, opt);
  SearchOutcome b = search_structures(g, opt);
  CHECK(a.verdict == b.verdict);
  if (a.structure && b.structure) {
    CHECK(a.structure->pair1.x == b.structure->pair1.x);
    CHECK(a.structure->pair2.y == b.structure->pair2.y);
  }
}

TEST_CASE("search bound is enforced loudly") {
  SearchOptions opt;
  opt.group_bound = 100;
  CHECK_THROWS_AS(search_structures(build_coxeter(parse_type("B5")), opt), BoundExceeded);
}

TEST_CASE("two-generated obstruction from abelianisation ranks") {
  auto t = [](const char* d) { return parse_type(d); };
  CHECK(two_generated_obstruction({t("A5"), t("A5"), t("A5")}));
  CHECK(two_generated_obstruction({t("B5"), t("A5")}));
  CHECK(two_generated_obstruction({t("F4"), t("H3")}));
  CHECK(two_generated_obstruction({t("I2(6)"), t("A2")}));
  CHECK_FALSE(two_generated_obstruction({t("A5")}));
  CHECK_FALSE(two_generated_obstruction({t("A5"), t("D6")}));
  CHECK_FALSE(two_generated_obstruction({t("H3"), t("I2(5)")}));
}

TEST_CASE("I2 coprimality obstruction") {
  RealizedGroup a4 = build_coxeter(parse_type("A4"));
  CHECK_FALSE(i2_order_obstruction(a4, 5));  // gcd(5, 120) = 5: not obstructed by this test
  RealizedGroup a2 = build_coxeter(parse_type("A2"));
  CHECK(i2_order_obstruction(a2, 7));  // gcd(7, 6) = 1
}

TEST_CASE("A4 x I2(5) still fails by exhaustive search") {
  // the gcd test alone does not reject this product; the search does
  RealizedGroup prod =
      direct_product(build_coxeter(parse_type("A4")), build_coxeter(parse_type("I2(5)")));
  CHECK(prod.order() == BigInt(1200));
  SearchOutcome out = search_structures(prod);
  CHECK(out.verdict == SearchVerdict::NoneExists);
}

TEST_CASE("I2(3) x I2(5) is no Beauville group") {
  RealizedGroup prod =
      direct_product(build_coxeter(parse_type("I2(3)")), build_coxeter(parse_type("I2(5)")));
  SearchOutcome out = search_structures(prod);
  CHECK(out.verdict == SearchVerdict::NoneExists);
}

TEST_CASE("product structure on two verified Sym(5) structures") {
  RealizedGroup a4a = build_coxeter(parse_type("A4"));
  RealizedGroup a4b = build_coxeter(parse_type("A4"));
  SearchOptions opt;
  opt.require_strongly_real = true;
  SearchOutcome s1 = search_structures(a4a, opt);
  SearchOutcome s2 = search_structures(a4b, opt);
  REQUIRE(s1.verdict == SearchVerdict::Found);
  REQUIRE(s2.verdict == SearchVerdict::Found);
  RealizedGroup prod = direct_product(a4a, a4b);
  CHECK(prod.order() == BigInt(14400));
  auto res = product_structure(prod, a4a, *s1.structure, a4b, *s2.structure);
  CHECK(res.report.certified_strongly_real());
}
