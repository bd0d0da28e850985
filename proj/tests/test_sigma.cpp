#include <doctest.h>

#include <random>

#include "beauville/paperdata.hpp"
#include "oracle_sigma.hpp"

using namespace beauville;

namespace {

GeneratingPair pair_of(const std::string& xs, const std::string& ys, std::size_t deg) {
  return {Element(parse_signed(xs, deg)), Element(parse_signed(ys, deg))};
}

}  // namespace

TEST_CASE("exact sigma on Sym(3) covers every nontrivial element") {
  RealizedGroup a2 = build_coxeter(parse_type("A2"));
  GeneratingPair p = pair_of("(1,2,3)", "(1,2)", 3);
  SigmaFingerprint fp = sigma(a2, p, SigmaMode::Exact);
  auto elems = fp.exact_elements();
  CHECK(elems.size() == 5);  // all of Sym(3) minus the identity
  for (const auto& e : elems) CHECK_FALSE(e.is_identity());
}

TEST_CASE("exact sigma equals the brute-force double loop") {
  std::mt19937_64 rng(2718);
  for (const char* type : {"A2", "A3", "B3", "I2(5)", "I2(8)", "D4", "A4"}) {
    RealizedGroup g = build_coxeter(parse_type(type));
    ElementTable table(g, 20000);
    std::uniform_int_distribution<std::uint32_t> pick(
        0, static_cast<std::uint32_t>(table.size() - 1));
    int done = 0;
    while (done < 3) {
      Element x = table.element_at(pick(rng));
      Element y = table.element_at(pick(rng));
      if (!generates_whole(g, {x, y}).generates) continue;
      ++done;
      SigmaFingerprint fp = sigma(g, {x, y}, SigmaMode::Exact);
      std::set<std::string> got;
      for (const auto& e : fp.exact_elements()) got.insert(e.key());
      CHECK(got == beauville::testing::brute_sigma_keys_fast(g, x, y));
    }
  }
}

TEST_CASE("sigma is symmetric and conjugation invariant as a set") {
  RealizedGroup b3 = build_coxeter(parse_type("B3"));
  ElementTable table(b3, 100);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> pick(0, 47);
  auto keys = [&](const GeneratingPair& p) {
    std::set<std::string> ks;
    for (const auto& e : sigma(b3, p, SigmaMode::Exact).exact_elements()) ks.insert(e.key());
    return ks;
  };
  for (int trial = 0; trial < 10; ++trial) {
    Element x = table.element_at(pick(rng)), y = table.element_at(pick(rng));
    auto base = keys({x, y});
    CHECK(base == keys({y, x}));
    Element c = table.element_at(pick(rng));
    std::set<std::string> conj;
    for (const auto& e : sigma(b3, {x, y}, SigmaMode::Exact).exact_elements())
      conj.insert(e.conjugate_by(c).key());
    CHECK(conj == base);
  }
}

TEST_CASE("dagger: identical pairs intersect, with a verified witness") {
  RealizedGroup b5 = build_coxeter(parse_type("B5"));
  GeneratingPair p = pair_of("(_1,_2,_5)", "(1,2,3)(4,5)", 5);
  auto f1 = sigma(b5, p, SigmaMode::Exact);
  DaggerCertificate cert = check_dagger(f1, f1);
  CHECK(cert.outcome == DaggerOutcome::IntersectNontrivial);
  REQUIRE(cert.witness_u.has_value());
  REQUIRE(cert.witness_conjugator.has_value());
  CHECK(cert.witness_u->conjugate_by(*cert.witness_conjugator) == *cert.witness_v);
}

TEST_CASE("dagger is symmetric in its arguments and rejects mode mixes") {
  StructureRecord rec = record_for("B5");
  RealizedGroup g = realize_record_group(rec);
  BeauvilleStructure s = to_structure(rec, g);
  auto f1 = sigma(g, s.pair1, SigmaMode::Exact);
  auto f2 = sigma(g, s.pair2, SigmaMode::Exact);
  CHECK(check_dagger(f1, f2).outcome == DaggerOutcome::DisjointCertified);
  CHECK(check_dagger(f2, f1).outcome == DaggerOutcome::DisjointCertified);
  CHECK_THROWS_AS(check_dagger(f1, sigma(g, s.pair2, SigmaMode::Invariant)),
                  std::invalid_argument);
}

TEST_CASE("invariant mode agrees with exact mode on the small B ranks") {
  for (const char* d : {"B5", "B6"}) {
    StructureRecord rec = record_for(d);
    RealizedGroup g = realize_record_group(rec);
    BeauvilleStructure s = to_structure(rec, g);
    auto exact = verify_unmixed(g, s, SigmaMode::Exact);
    auto invariant = verify_unmixed(g, s, SigmaMode::Invariant);
    CHECK(exact.beauville_ok);
    CHECK(invariant.beauville_ok);
    CHECK(exact.dagger.outcome == invariant.dagger.outcome);
  }
}

TEST_CASE("verify_unmixed fails when the second pair repeats the first") {
  StructureRecord rec = record_for("B12");
  RealizedGroup g = realize_record_group(rec);
  BeauvilleStructure s = to_structure(rec, g);
  s.pair2 = s.pair1;
  auto rep = verify_unmixed(g, s);
  CHECK_FALSE(rep.beauville_ok);
  CHECK(rep.dagger.outcome == DaggerOutcome::IntersectNontrivial);
}

TEST_CASE("verify_unmixed fails generation when a pair collapses") {
  StructureRecord rec = record_for("B12");
  RealizedGroup g = realize_record_group(rec);
  BeauvilleStructure s = to_structure(rec, g);
  s.pair1.y = s.pair1.x;  // cyclic subgroup only
  auto rep = verify_unmixed(g, s);
  CHECK_FALSE(rep.generation1);
  CHECK_FALSE(rep.beauville_ok);
}

TEST_CASE("strong reality checks the witnesses exactly") {
  StructureRecord rec = record_for("B12");
  RealizedGroup g = realize_record_group(rec);
  BeauvilleStructure s = to_structure(rec, g);
  CHECK(verify_strongly_real(g, s));
  std::swap(s.t1, s.t2);
  CHECK_FALSE(verify_strongly_real(g, s));
  s = to_structure(rec, g);
  s.t1 = g.identity();
  CHECK_FALSE(verify_strongly_real(g, s));
  // a witness outside the group is an error, not a false
  RealizedGroup d12 = build_coxeter(parse_type("D12"));
  BeauvilleStructure s2 = to_structure(record_for("D12"), d12);
  std::vector<std::uint8_t> sg(12, 0);
  sg[0] = 1;
  s2.t1 = Element(SignedPermutation(Permutation(12), sg));  // one -1: outside D12
  CHECK_THROWS_AS(verify_strongly_real(d12, s2), std::invalid_argument);
}

TEST_CASE("the B12 trace collisions resolve through the diagonal rule") {
  StructureRecord rec = record_for("B12");
  RealizedGroup g = realize_record_group(rec);
  BeauvilleStructure s = to_structure(rec, g);
  auto f1 = sigma(g, s.pair1, SigmaMode::Invariant);
  auto f2 = sigma(g, s.pair2, SigmaMode::Invariant);
  auto cert = check_dagger(f1, f2);
  CHECK(cert.outcome == DaggerOutcome::DisjointCertified);
  CHECK(cert.diagonal_rule_fired > 0);
  Element z = s.pair1.x * s.pair1.y;
  CHECK(z.order() == 8);
  CHECK(z.pow(4).is_diagonal_matrix());
  CHECK(z.pow(4).as_signed_perm().trace() == 4);  // n - 8
}

TEST_CASE("find_inverting_conjugator recovers a witness on a small group") {
  StructureRecord rec = record_for("B5");
  RealizedGroup g = realize_record_group(rec);
  BeauvilleStructure s = to_structure(rec, g);
  auto t = find_inverting_conjugator(g, s.pair1.x, s.pair1.y);
  REQUIRE(t.has_value());
  CHECK(s.pair1.x.conjugate_by(*t) == s.pair1.x.inverse());
  CHECK(s.pair1.y.conjugate_by(*t) == s.pair1.y.inverse());
}

TEST_CASE("exact mode refuses oversized groups and suggests invariant") {
  RealizedGroup b12 = build_coxeter(parse_type("B12"));
  BeauvilleStructure s = to_structure(record_for("B12"), b12);
  CHECK_THROWS_AS(sigma(b12, s.pair1, SigmaMode::Exact), BoundExceeded);
}
