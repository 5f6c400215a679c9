#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hhh/homology.hpp"
#include "hhh/invariant.hpp"
#include "hhh/verify.hpp"

using namespace hhh;

static const FieldSpec kQ = FieldSpec::rationals();

TEST_CASE("trefoil as stst: the spec's cohomology values") {
  BraidWord b = parse_braid("1 2 1 2", 3);
  TriGradedTable t = extreme_hhh(b, default_qmax(4), kQ);
  // T = 4: only (A=0, Q=-4)
  CHECK(t.dim(0, 4, -4) == 1);
  // T = 3: nothing at any A
  for (const auto& [key, d] : t.entries) CHECK(std::get<1>(key) != 3);
  // T = 2: A=0 at Q=0, A=1 at Q=-4, nothing at A=2
  CHECK(t.dim(0, 2, 0) == 1);
  CHECK(t.dim(1, 2, -4) == 1);
  for (const auto& [key, d] : t.entries) CHECK(std::get<0>(key) != 2);
  CHECK(t.entries.size() == 3);
  CHECK(t.tails.empty());
  for (const auto& v : t.theorems) CHECK(v.status == "match");
}

TEST_CASE("boundary positions are rejected") {
  BraidWord b = parse_braid("1 2 1 2 1", 3);
  TruncatedComplex c = build_truncated(b);
  FreeComplexK f = extract_k(c, 0);
  CHECK_THROWS(cohomology_dims(f, b.length() - 3, 10, kQ));  // open left end
  CHECK_NOTHROW(cohomology_dims(f, b.length(), 10, kQ));     // closed top
}

TEST_CASE("slice matrices against a dense row-reduction oracle") {
  // independent dense Gaussian elimination over rationals
  auto dense_rank = [](std::vector<std::vector<Rational>> m) {
    int rank = 0;
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    for (size_t c = 0, pr = 0; c < cols && pr < rows; ++c) {
      size_t piv = pr;
      while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
      if (piv == rows) continue;
      std::swap(m[piv], m[pr]);
      for (size_t i = 0; i < rows; ++i) {
        if (i == pr || sgn(m[i][c]) == 0) continue;
        Rational f = m[i][c] / m[pr][c];
        for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[pr][j];
      }
      ++pr;
      ++rank;
    }
    return rank;
  };
  BraidWord b = parse_braid("1 2 1 2 1 2", 3);
  TruncatedComplex c = build_truncated(b);
  FreeComplexK f = extract_k(c, 0);
  RationalField F;
  for (int q : {-8, -6, -4, -2}) {
    SliceSide rows = make_slice_side(f.offsets[1], q, f.nvars);
    SliceSide cols = make_slice_side(f.offsets[0], q, f.nvars);
    auto sparse_cols = slice_columns(F, f.d[0], rows, cols);
    std::vector<std::vector<Rational>> dense(
        (size_t)rows.dim, std::vector<Rational>((size_t)cols.dim, Rational(0)));
    for (size_t j = 0; j < sparse_cols.size(); ++j)
      for (const auto& [r, v] : sparse_cols[j]) dense[(size_t)r][j] = v;
    auto copy = sparse_cols;
    CHECK(sparse_rank(F, copy) == dense_rank(dense));
  }
  // zero matrix slices to the zero map with the right shape
  SparsePolyMat z;
  z.nrows = 1;
  z.ncols = 1;
  SliceSide r1 = make_slice_side({0}, 4, 2), c1 = make_slice_side({0}, 4, 2);
  auto zc = slice_columns(F, z, r1, c1);
  CHECK((std::int64_t)zc.size() == c1.dim);
  for (const auto& col : zc) CHECK(col.empty());
  // 1x1 alpha_s entry: the multiplication map, injective on every slice
  SparsePolyMat m1;
  m1.nrows = 1;
  m1.ncols = 1;
  m1.add(0, 0, Poly::variable(1));
  SliceSide rr = make_slice_side({0}, 4, 2), cc2 = make_slice_side({2}, 4, 2);
  auto mc = slice_columns(F, m1, rr, cc2);
  auto own = mc;
  CHECK(sparse_rank(F, own) == (std::int64_t)mc.size());
}

TEST_CASE("two-strand tables reproduce the closed forms") {
  // m = 3: A=0 {T=3,Q=-3},{T=1,Q=1}; A=1 {T=1,Q=-3}
  TriGradedTable t3 = two_strand_hhh(3, +1, 16, kQ);
  CHECK(t3.dim(0, 3, -3) == 1);
  CHECK(t3.dim(0, 1, 1) == 1);
  CHECK(t3.dim(1, 1, -3) == 1);
  CHECK(t3.entries.size() == 3);
  CHECK(t3.tails.empty());
  // m = 2: A=0 {T=2,Q=-2} plus tails
  TriGradedTable t2 = two_strand_hhh(2, +1, 14, kQ);
  CHECK(t2.dim(0, 2, -2) == 1);
  REQUIRE(t2.tails.size() == 2);
  CHECK(t2.tails[0] == Tail{0, 0, 2, 2});
  CHECK(t2.tails[1] == Tail{1, 0, -2, 2});
  // m = 1 normalizes to the unknot
  TriGradedTable t1 = two_strand_hhh(1, +1, 12, kQ);
  BraidWord unknot = parse_braid("1", 2);
  Superpolynomial p = superpolynomial(unknot, t1);
  REQUIRE(p.finite.size() == 1);
  CHECK(p.finite[0].coef == Rational(1));
  CHECK(p.finite[0].a == 0);
  CHECK(p.finite[0].t == 0);
  CHECK(p.finite[0].q == 0);
  // negative m = 3 matches the negative table
  TriGradedTable n3 = two_strand_hhh(3, -1, 16, kQ);
  CHECK(n3.dim(0, 0, -1) == 1);
  CHECK(n3.dim(1, -2, -1) == 1);
  CHECK(n3.dim(1, 0, -5) == 1);
  CHECK(n3.entries.size() == 3);
}

TEST_CASE("slice_matrix wraps a component matrix") {
  // the barbell component s -> eps at n=2: multiplication by alpha_s
  SubwordTerm x, z;
  x.letters = {1};
  x.contracted = {1};
  x.cohom_degree = 2;
  z.cohom_degree = 3;
  auto m = hh_component_matrix(x, z, 0, 2);
  for (int q : {-1, 1, 3}) {
    auto cols = slice_matrix(m, q, 1);
    REQUIRE(cols.size() == 1);  // one monomial per degree in one variable
    CHECK(cols[0].size() == 1);
  }
  CHECK(slice_matrix(m, -2, 1).empty());  // wrong parity
}

TEST_CASE("connect sums factor as tensor products of the factors' tables") {
  // sigma1^2 sigma2^3 closes to Hopf # trefoil
  BraidWord b = parse_braid("1 1 2 2 2", 3);
  TriGradedTable t = extreme_hhh(b, b.length() + 6, kQ);
  CHECK(t.dim(0, 5, -5) == 1);          // k(2) x k(3)
  CHECK(t.dim(0, 3, -1) == 2);          // k(2) x k(-1) plus a tail slice
  CHECK(t.dim(1, 3, -5) == 2);
  REQUIRE(t.tails.size() == 2);
  CHECK(t.tails[0] == Tail{0, 3, 1, 2});
  CHECK(t.tails[1] == Tail{1, 3, -3, 2});
  for (const auto& v : t.theorems)
    if (v.name == "penultimate(beta-2)") CHECK(v.status == "suppressed");
}

TEST_CASE("negative extreme values for the dual of stst") {
  BraidWord a = parse_braid("-1 -2 -1 -2", 3);
  TriGradedTable t = negative_extreme_hhh(a, default_qmax(4), kQ);
  CHECK(t.entries.size() == 1);
  CHECK(t.dim(2, -2, -4) == 1);  // k(8-|a|) = k(4)
  for (const auto& v : t.theorems) CHECK(v.status == "match");
}

TEST_CASE("detect_free_tail on synthetic dims") {
  std::map<int, int> dims;
  for (int q = 2; q <= 20; q += 2) dims[q] = 1;
  auto tail = detect_free_tail(dims, 20, [](int) { return true; });
  REQUIRE(tail.has_value());
  CHECK(tail->qstart == 2);
  CHECK(tail->period == 2);
  CHECK(!detect_free_tail({}, 20, [](int) { return true; }).has_value());
  CHECK(!detect_free_tail({{4, 1}}, 20, [](int) { return true; }).has_value());
  // a non-bijective step disqualifies the run
  CHECK(!detect_free_tail(dims, 20, [](int) { return false; }).has_value());
}

TEST_CASE("markov-I stability for a small orbit") {
  BraidWord b = parse_braid("1 2 1 2 1", 3);
  int qmax = b.length() + 6;
  TriGradedTable base = extreme_hhh(b, qmax, kQ);
  for (int s = 1; s < b.length(); ++s) {
    TriGradedTable t = extreme_hhh(cyclic_shift(b, s), qmax, kQ);
    CHECK(t.entries == base.entries);
  }
}

TEST_CASE("rational and prime-field dimensions agree") {
  for (const char* w : {"1 2 1 2", "1 2 1 2 2 1", "1 1 2 1 2"}) {
    BraidWord b = parse_braid(w, 3);
    TriGradedTable tq = extreme_hhh(b, b.length() + 6, kQ);
    TriGradedTable tp = extreme_hhh(b, b.length() + 6, FieldSpec::prime(10007));
    CHECK(tq.entries == tp.entries);
  }
}

TEST_CASE("two-strand extreme degrees agree with the full table") {
  BraidWord b = parse_braid("1 1 1 1 1", 2);
  TriGradedTable full = two_strand_hhh(5, +1, 20, kQ);
  TriGradedTable ext = extreme_hhh(b, 20, kQ);
  for (int t : {3, 4, 5}) {
    std::map<int, int> a, c;
    for (const auto& [key, d] : full.entries)
      if (std::get<1>(key) == t) a[std::get<2>(key) * 8 + std::get<0>(key)] = d;
    for (const auto& [key, d] : ext.entries)
      if (std::get<1>(key) == t) c[std::get<2>(key) * 8 + std::get<0>(key)] = d;
    CHECK(a == c);
  }
}

TEST_CASE("extreme_hhh validates its preconditions") {
  CHECK_THROWS(extreme_hhh(parse_braid("-1 -2", 3), 10, kQ));
  CHECK_THROWS(extreme_hhh(parse_braid("1 1 1", 3), 10, kQ));  // missing sigma_2
}

TEST_CASE("table JSON round-trips") {
  BraidWord b = parse_braid("1 1", 2);
  TriGradedTable t = two_strand_hhh(2, +1, 14, kQ);
  TriGradedTable back = TriGradedTable::from_json(t.to_json());
  CHECK(back.same_data(t));
  CHECK(back.braid == t.braid);
  CHECK(back.qlo == t.qlo);
  CHECK(back.hyp.all_generators == t.hyp.all_generators);
}
