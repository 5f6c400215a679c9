#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hhh/diff_rules.hpp"
#include "hhh/verify.hpp"

using namespace hhh;

static SubwordTerm term(const Word& letters, int beta_len) {
  SubwordTerm t;
  t.letters = letters;
  auto [c, s] = contract_word(letters);
  t.contracted = c;
  t.shift = s;
  t.cohom_degree = beta_len - (int)letters.size();
  return t;
}

TEST_CASE("classify_component") {
  // sst -> st: odd run at strand 1, sign +
  auto c1 = classify_component(term({1, 1, 2}, 6), term({1, 2}, 6));
  REQUIRE(c1.has_value());
  CHECK(c1->kind == DiffKind::RunOdd);
  CHECK(c1->strand == 1);
  CHECK(c1->letter == 1);
  CHECK(c1->sign == 1);
  // sst -> ss: enddot on the trailing letter (position 3), sign (-1)^2
  auto c2 = classify_component(term({1, 1, 2}, 6), term({1, 1}, 6));
  REQUIRE(c2.has_value());
  CHECK(c2->kind == DiffKind::Enddot);
  CHECK(c2->letter == 3);
  CHECK(c2->strand == 2);
  CHECK(c2->sign == 1);
  // sts -> ss: trivalent enddot
  auto c3 = classify_component(term({1, 2, 1}, 6), term({1, 1}, 6));
  REQUIRE(c3.has_value());
  CHECK(c3->kind == DiffKind::TrivalentEnddot);
  CHECK(c3->sign == -1);
  // sss -> ss: even run
  auto c4 = classify_component(term({1, 1, 1}, 6), term({1, 1}, 6));
  REQUIRE(c4.has_value());
  CHECK(c4->kind == DiffKind::RunEven);
  // not a deletion
  CHECK(!classify_component(term({1, 2, 2}, 6), term({1, 1}, 6)).has_value());
  CHECK(!classify_component(term({1, 2}, 6), term({2, 1}, 6)).has_value());
}

static HHClass mk(const Word& w, const std::string& decs, std::uint32_t ext = 0) {
  HHClass c;
  c.word = w;
  c.ext = ext;
  for (size_t i = 0; i < decs.size(); ++i)
    c.dec[i] = decs[i] == 'H' ? Decor::Hoch : Decor::Dot;
  return c;
}

TEST_CASE("apply_enddot: barbell and hochschild barbell") {
  // Enddot on Dot_s Dot_t at position 2 -> alpha_t * Dot_s
  auto img = apply_enddot(mk({1, 2}, "DD"), 2, 3);
  REQUIRE(img.size() == 1);
  CHECK(img[0].cls.label() == "D1");
  CHECK(img[0].coeff == Poly::variable(2));
  // Enddot on HochDot_s at n=2: unit with ext alpha_s-dual
  auto img2 = apply_enddot(mk({1}, "H"), 1, 2);
  REQUIRE(img2.size() == 1);
  CHECK(img2[0].cls.word.empty());
  CHECK(img2[0].cls.ext == 1u);
  CHECK(img2[0].coeff == Poly::constant(1));
  // one-color rewrite: hochschild barbell next to a surviving dot strand
  // h_s D_t D_s, delete the first strand: alpha_s * D_t h_s
  auto img3 = apply_enddot(mk({1, 2, 1}, "HDD"), 1, 3);
  REQUIRE(img3.size() == 1);
  CHECK(img3[0].cls.label() == "D2.H1");
  CHECK(img3[0].coeff == Poly::variable(1));
}

TEST_CASE("apply_run_map parity") {
  auto z = apply_run_map(mk({1}, "D"), 1, false, 2);
  CHECK(z.empty());
  auto e = apply_run_map(mk({1}, "D"), 1, true, 2);
  REQUIRE(e.size() == 1);
  CHECK(e[0].coeff == Poly::variable(1));
  CHECK(e[0].cls.label() == "D1");
  CHECK(apply_run_map(mk({1}, "H"), 1, false, 2).empty());
}

TEST_CASE("cup image tables") {
  DiffComponent del_third{3, 3, DiffKind::Enddot, 1};
  DiffComponent del_first{1, 1, DiffKind::Enddot, 1};
  DiffComponent triv{2, 2, DiffKind::TrivalentEnddot, -1};
  HHClass plain;
  plain.word = {1, 2, 1};
  plain.cup = CupFlavor::Plain;
  // adjacent: D_a D_b + D_b D_a + D_a
  auto i1 = apply_cup_table(plain, del_third, {1, 2}, 3);
  REQUIRE(i1.size() == 1);
  CHECK(i1[0].cls.label() == "D1.D2");
  CHECK(i1[0].coeff == Poly::constant(1));
  auto i2 = apply_cup_table(plain, del_first, {2, 1}, 3);
  CHECK(i2[0].cls.label() == "D2.D1");
  auto i3 = apply_cup_table(plain, triv, {1}, 3);
  REQUIRE(i3.size() == 1);
  CHECK(i3[0].cls.label() == "D1");
  // distant: no tail into the contracted target
  HHClass distant = plain;
  distant.word = {1, 3, 1};
  CHECK(apply_cup_table(distant, triv, {1}, 4).empty());
  // hoch-double: two targets, no tail even when adjacent
  HHClass dbl;
  dbl.word = {1, 2, 1};
  dbl.cup = CupFlavor::HochDouble;
  auto i4 = apply_cup_table(dbl, del_third, {1, 2}, 3);
  CHECK(i4[0].cls.label() == "H1.H2");
  CHECK(apply_cup_table(dbl, triv, {1}, 3).empty());
}

TEST_CASE("hh_component_matrix examples") {
  // (sts -> ss, k=0, n=3): {Dot^3, Cup} |-> (-alpha_t, 1) in the C_ss row
  auto m = hh_component_matrix(term({1, 2, 1}, 6), term({1, 1}, 6), 0, 3);
  REQUIRE(m.cols.size() == 2);
  REQUIRE(m.rows.size() == 1);
  Poly e0, e1;
  for (auto& [r, c, p] : m.entries) (c == 0 ? e0 : e1) = p;
  CHECK(e0 == -Poly::variable(2));
  CHECK(e1 == Poly::constant(1));
  // (ss -> s, any k): zero
  for (int k = 0; k <= 2; ++k) {
    auto z = hh_component_matrix(term({1, 1}, 6), term({1}, 6), k, 3);
    CHECK(z.entries.empty());
  }
  // (s -> eps, k=0, n=2): barbell alpha_s
  auto b = hh_component_matrix(term({1}, 3), term({}, 3), 0, 2);
  REQUIRE(b.entries.size() == 1);
  CHECK(std::get<2>(b.entries[0]) == Poly::variable(1));
}

TEST_CASE("fixture matrices reproduce the displayed partial complexes") {
  SuiteOptions opt;
  SuiteResult r = suite_fixtures(opt);
  for (const auto& line : r.notes) {
    INFO(line);
  }
  CHECK(r.passed);
  CHECK(r.checks == 528);
}
