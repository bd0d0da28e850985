#include <doctest.h>

#include <random>

#include "beauville/mixed.hpp"
#include "beauville/paperdata.hpp"

using namespace beauville;

TEST_CASE("order-mod-4 obstruction blocks the classical families") {
  for (const char* d : {"D5", "A4", "H3", "E6", "I2(9)", "I2(20)"}) {
    RealizedGroup g = build_coxeter(parse_type(d));
    auto chars = index2_subgroups(g);
    REQUIRE_FALSE(chars.empty());
    for (const auto& chi : chars) {
      auto res = order_mod4_obstruction(g, chi);
      CHECK(res.blocked);
      REQUIRE(res.witness.has_value());
      CHECK(chi.value(*res.witness) == -1);
      CHECK(res.witness->order() % 4 != 0);
    }
  }
}

TEST_CASE("B3 and F4 block on all three index-2 subgroups") {
  for (const char* d : {"B3", "F4"}) {
    RealizedGroup g = build_coxeter(parse_type(d));
    auto chars = index2_subgroups(g);
    CHECK(chars.size() == 3);
    for (const auto& chi : chars) CHECK(order_mod4_obstruction(g, chi).blocked);
  }
}

TEST_CASE("class-representative scan matches full enumeration on B4") {
  // order and character value are class functions; the representative
  // scan must reach the same verdict the full coset scan reaches
  RealizedGroup g = build_coxeter(parse_type("B4"));
  ElementTable table(g, 1000);
  for (const auto& chi : index2_subgroups(g)) {
    bool full_scan_blocked = false;
    for (std::uint32_t i = 0; i < table.size() && !full_scan_blocked; ++i)
      if (!chi.kernel().contains(table.perm_at(i)) && table.element_order(i) % 4 != 0)
        full_scan_blocked = true;
    CHECK(order_mod4_obstruction(g, chi).blocked == full_scan_blocked);
  }
}

TEST_CASE("mixable obstruction blocks every Coxeter group tested") {
  for (const char* d : {"A4", "B5", "D5", "F4", "H3", "H4", "I2(7)", "A8"}) {
    RealizedGroup g = build_coxeter(parse_type(d));
    auto res = mixable_obstruction(g);
    CHECK(res.blocked);
  }
}

TEST_CASE("every element outside the sign kernel is a product of an odd number of reflections") {
  // at small rank, enumerate and confirm even order outside the kernel
  RealizedGroup g = build_coxeter(parse_type("B3"));
  ElementTable table(g, 100);
  auto chars = index2_subgroups(g);
  for (const auto& chi : chars)
    for (std::uint32_t i = 0; i < table.size(); ++i)
      if (!chi.kernel().contains(table.perm_at(i)))
        CHECK(table.element_order(i) % 2 == 0);
}

TEST_CASE("mixable conditions on explicit tuples") {
  RealizedGroup a4 = build_coxeter(parse_type("A4"));
  Element e = a4.identity();
  // condition (3) fails with a trivial second pair
  CHECK_FALSE(mixable_check(a4, a4.generators()[0], a4.generators()[1], e, e));
  // condition (1) fails with an odd-order first component
  Element three = a4.generators()[0] * a4.generators()[1];  // order 3
  CHECK(three.order() == 3);
  CHECK_FALSE(mixable_check(a4, three, a4.generators()[0], a4.generators()[1],
                            a4.generators()[2]));
  // nu is symmetric because ac and ca are conjugate
  std::mt19937_64 rng(5);
  ElementTable table(a4, 200);
  std::uniform_int_distribution<std::uint32_t> pick(0, 119);
  for (int trial = 0; trial < 20; ++trial) {
    Element a = table.element_at(pick(rng)), c = table.element_at(pick(rng));
    CHECK((a * c).order() == (c * a).order());
  }
}

TEST_CASE("verify_mixed rejects quadruples in D5") {
  RealizedGroup d5 = build_coxeter(parse_type("D5"));
  auto chars = index2_subgroups(d5);
  REQUIRE(chars.size() == 1);
  const Character2& chi = chars[0];
  // find a generating pair of the kernel and an element outside
  ElementTable table(d5, 4000);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(table.size() - 1));
  Element a = d5.identity(), c = a, g = a;
  for (;;) {
    std::uint32_t i = pick(rng), j = pick(rng);
    if (!chi.kernel().contains(table.perm_at(i))) continue;
    if (!chi.kernel().contains(table.perm_at(j))) continue;
    StabilizerChain sub(d5.action()->degree(), {table.perm_at(i), table.perm_at(j)});
    if (sub.order() * BigInt(2) == d5.order()) {
      a = table.element_at(i);
      c = table.element_at(j);
      break;
    }
  }
  for (std::uint32_t i = 0; i < table.size(); ++i)
    if (!chi.kernel().contains(table.perm_at(i))) {
      g = table.element_at(i);
      break;
    }
  MixedQuadruple q{&d5, &chi, a, c, g};
  MixedReport rep = verify_mixed(q);
  CHECK(rep.precondition_ok);
  CHECK(rep.generation_ok);
  CHECK_FALSE(rep.mixed_ok());  // the order-mod-4 obstruction bites somewhere

  // precondition failure: g inside the subgroup
  MixedQuadruple bad{&d5, &chi, a, c, a};
  CHECK_FALSE(verify_mixed(bad).precondition_ok);

  // generation failure: a = c = e
  MixedQuadruple bad2{&d5, &chi, d5.identity(), d5.identity(), g};
  auto rep2 = verify_mixed(bad2);
  CHECK(rep2.precondition_ok);
  CHECK_FALSE(rep2.generation_ok);
}

TEST_CASE("a perfect permutation group is vacuously mixable-blocked") {
  // Alt(5) on five points: derived subgroup is everything
  std::vector<std::uint32_t> c3{1, 2, 0, 3, 4};
  std::vector<std::uint32_t> c5{1, 2, 3, 4, 0};
  std::vector<Element> gens{Element(SignedPermutation(Permutation(c3), std::vector<std::uint8_t>(5, 0))),
                            Element(SignedPermutation(Permutation(c5), std::vector<std::uint8_t>(5, 0)))};
  RealizedGroup alt5("Alt5", gens, std::make_shared<SignedPointAction>(5), BigInt(60));
  CHECK(alt5.order() == BigInt(60));
  auto res = mixable_obstruction(alt5);
  CHECK(res.blocked);
  CHECK(res.note.find("vacuous") != std::string::npos);
}
