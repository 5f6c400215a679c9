#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hhh/braid.hpp"

using namespace hhh;

static BraidWord bw(const std::string& s, int n) { return parse_braid(s, n); }

TEST_CASE("parse_braid maps tokens and rejects bad input") {
  BraidWord b = bw("1 1 1", 2);
  CHECK(b.length() == 3);
  CHECK(b.is_positive());
  b = bw("1 2 1 2", 3);
  CHECK(b.letters == std::vector<int>({1, 2, 1, 2}));
  b = bw("1 -2", 3);
  CHECK(b.letters == std::vector<int>({1, -2}));
  CHECK(!b.is_positive());
  CHECK(!b.is_negative());
  CHECK_THROWS_AS(bw("0", 2), BraidParseError);
  CHECK_THROWS_AS(bw("3", 3), BraidParseError);
  CHECK_THROWS_AS(bw("-3", 3), BraidParseError);
  CHECK_THROWS_AS(bw("1", 1), BraidParseError);
  CHECK_THROWS_AS(bw("x", 2), BraidParseError);
}

TEST_CASE("writhe") {
  CHECK(writhe(bw("1 1 1", 2)) == 3);
  CHECK(writhe(bw("1 -2", 3)) == 0);
  CHECK(writhe(bw("-1 -2 -1 -2", 3)) == -4);
}

TEST_CASE("closure_components") {
  CHECK(closure_components(bw("1 1 1", 2)) == 1);  // trefoil
  CHECK(closure_components(bw("1 1", 2)) == 2);    // hopf
  CHECK(closure_components(bw("", 3)) == 3);
  CHECK(closure_components(bw("1 2 1 2", 3)) == 1);
}

TEST_CASE("mirror is an involution") {
  BraidWord b = bw("1 1 1", 2);
  CHECK(mirror(b).letters == std::vector<int>({-1, -1, -1}));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    BraidWord r;
    r.n = 4;
    for (int i = 0; i < 8; ++i)
      r.letters.push_back((1 + (int)(rng() % 3)) * (rng() % 2 ? 1 : -1));
    CHECK(mirror(mirror(r)).letters == r.letters);
  }
}

TEST_CASE("cyclic_shift") {
  BraidWord b = bw("1 2", 3);
  CHECK(cyclic_shift(b, 1).letters == std::vector<int>({2, 1}));
  CHECK(cyclic_shift(b, 0).letters == b.letters);
  CHECK(cyclic_shift(b, b.length()).letters == b.letters);
}

TEST_CASE("destabilize") {
  auto d = destabilize(bw("1 1 2", 3));
  REQUIRE(d.has_value());
  CHECK(d->n == 2);
  CHECK(d->letters == std::vector<int>({1, 1}));
  CHECK(!destabilize(bw("1 1", 2)).has_value());
  auto e = destabilize(bw("2", 3));
  REQUIRE(e.has_value());
  CHECK(e->letters.empty());
  CHECK(e->n == 2);
}

TEST_CASE("contains_subexpression") {
  // ss inside stts
  CHECK(contains_subexpression(bw("1 2 2 1", 3), {1, 1}));
  CHECK(!contains_subexpression(bw("1 1 2 2", 3), {1, 2, 1, 2}));
  CHECK(contains_subexpression(bw("1 2", 3), {}));
  // monotone: subexpression of a subexpression
  CHECK(contains_subexpression(bw("1 2 2 1", 3), {1, 2}));
  CHECK(contains_subexpression(bw("1 2 2 1", 3), {2}));
}

TEST_CASE("uses_all_generators") {
  CHECK(uses_all_generators(bw("1 2 1 2", 3)));
  CHECK(!uses_all_generators(bw("1 1 1", 3)));
  CHECK(uses_all_generators(bw("1 1 1", 2)));
}

TEST_CASE("primeness criterion") {
  CHECK(primeness_criterion(bw("1 2 1 2", 3)));
  CHECK(!primeness_criterion(bw("1 1 2 2", 3)));
  CHECK(primeness_criterion(bw("1 1", 2)));  // vacuous
  CHECK_THROWS(primeness_criterion(bw("-1", 2)));
}

TEST_CASE("connect_sum_window") {
  auto w = connect_sum_window(bw("1 1 3 3", 4));
  REQUIRE(w.has_value());
  CHECK(*w == 2);
  CHECK(!connect_sum_window(bw("1 3 1 3", 4)).has_value());
  CHECK(!connect_sum_window(bw("1 2 1", 3)).has_value());
}

TEST_CASE("primeness implies no connect-sum window on the word") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    BraidWord b;
    b.n = 3 + (int)(rng() % 2);
    int len = 4 + (int)(rng() % 8);
    for (int i = 0; i < len; ++i) b.letters.push_back(1 + (int)(rng() % (b.n - 1)));
    if (primeness_criterion(b)) CHECK(!connect_sum_window(b).has_value());
  }
}

TEST_CASE("contract_word") {
  auto [c1, s1] = contract_word({1, 1});
  CHECK(c1 == Word({1}));
  CHECK(s1 == -1);
  auto [c2, s2] = contract_word({1, 2, 1});
  CHECK(c2 == Word({1, 2, 1}));
  CHECK(s2 == 0);
  auto [c3, s3] = contract_word({1, 1, 1, 2});
  CHECK(c3 == Word({1, 2}));
  CHECK(s3 == -2);
  // no equal adjacent letters, shift + |contracted| = |input|
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Word w;
    for (int i = 0; i < 12; ++i) w.push_back(1 + (int)(rng() % 3));
    auto [c, s] = contract_word(w);
    for (size_t i = 0; i + 1 < c.size(); ++i) CHECK(c[i] != c[i + 1]);
    CHECK(s <= 0);
    CHECK((int)c.size() - s == (int)w.size());
  }
}

TEST_CASE("subwords_up_to_length") {
  // sstt at L=2 gives {eps, s, t, ss, st, tt}
  auto subs = subwords_up_to_length(bw("1 1 2 2", 3), 2);
  CHECK(subs.size() == 6);
  std::set<Word> got;
  for (const auto& s : subs) got.insert(s.letters);
  CHECK(got == std::set<Word>({{}, {1}, {2}, {1, 1}, {1, 2}, {2, 2}}));
  // ss at L=1: only one subword of length 1
  auto subs2 = subwords_up_to_length(bw("1 1", 2), 1);
  CHECK(subs2.size() == 2);
  // single letter with large L
  auto subs3 = subwords_up_to_length(bw("1", 2), 3);
  CHECK(subs3.size() == 2);
  CHECK_THROWS(subwords_up_to_length(bw("-1", 2), 2));
  // shift/contraction bookkeeping
  for (const auto& s : subs) {
    CHECK(s.shift <= 0);
    CHECK((s.shift == 0) == (s.letters == s.contracted));
    CHECK(s.cohom_degree == 4 - (int)s.letters.size());
  }
}

TEST_CASE("subword count is bounded independently of the braid length") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    BraidWord b;
    b.n = 4;
    for (int i = 0; i < 30; ++i) b.letters.push_back(1 + (int)(rng() % 3));
    auto subs = subwords_up_to_length(b, 3);
    CHECK((int)subs.size() <= 1 + 3 + 9 + 27);
  }
}
