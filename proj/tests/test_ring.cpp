#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hhh/ring.hpp"

using namespace hhh;

static Poly a(int i) { return Poly::variable(i); }

static Poly random_poly(std::mt19937_64& rng, int nvars, int maxdeg) {
  Poly p;
  int terms = 1 + (int)(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int deg = (int)(rng() % (maxdeg + 1));
    for (int d = 0; d < deg; ++d) m.e[rng() % nvars] += 1;
    int c = (int)(rng() % 7) - 3;
    p = p + Poly::monomial(m, c);
  }
  return p;
}

TEST_CASE("reflect on generators (geometric realization)") {
  CHECK(reflect(a(1), 1, 3) == -a(1));
  CHECK(reflect(a(2), 1, 3) == a(1) + a(2));
  CHECK(reflect(a(3), 1, 4) == a(3));
  CHECK(reflect(a(1), 2, 3) == a(1) + a(2));
}

TEST_CASE("demazure") {
  CHECK(demazure(a(1), 1, 2) == Poly::constant(2));
  CHECK(demazure(Poly::constant(5), 1, 3).is_zero());
  CHECK(demazure(a(2), 1, 3) == Poly::constant(-1));
}

TEST_CASE("forcing identity and twisted Leibniz") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int nvars = 2 + (int)(rng() % 3);
    int i = 1 + (int)(rng() % nvars);
    Poly f = random_poly(rng, nvars, 4);
    Poly g = random_poly(rng, nvars, 3);
    // f = s_i(f) + alpha_i * d_i(f)
    CHECK(f == reflect(f, i, nvars) + a(i) * demazure(f, i, nvars));
    // d_i(fg) = d_i(f) g + s_i(f) d_i(g)
    CHECK(demazure(f * g, i, nvars) ==
          demazure(f, i, nvars) * g + reflect(f, i, nvars) * demazure(g, i, nvars));
    // reflections are involutions
    CHECK(reflect(reflect(f, i, nvars), i, nvars) == f);
  }
}

TEST_CASE("graded_slice_basis order and size") {
  auto b = graded_slice_basis(4, 2);
  REQUIRE(b.size() == 3);
  CHECK(b[0].e[0] == 2);  // a1^2
  CHECK((b[1].e[0] == 1 && b[1].e[1] == 1));
  CHECK(b[2].e[1] == 2);
  CHECK(graded_slice_basis(0, 3).size() == 1);
  auto c = graded_slice_basis(2, 4);
  REQUIRE(c.size() == 3 + 1);
  CHECK(graded_slice_basis(3, 2).empty());   // odd degree
  CHECK(graded_slice_basis(-2, 2).empty());
  // binomial count C(d/2 + v - 1, v - 1)
  for (int v = 1; v <= 4; ++v)
    for (int d = 0; d <= 12; d += 2) {
      std::int64_t want = 1;
      for (int k = 1; k <= v - 1; ++k) want = want * (d / 2 + k) / k;
      CHECK((std::int64_t)graded_slice_basis(d, v).size() == want);
    }
}

TEST_CASE("slice indexer ranks agree with enumeration order") {
  SliceIndexer ix(3);
  for (int d = 0; d <= 6; ++d) {
    auto basis = graded_slice_basis(2 * d, 3);
    CHECK((std::int64_t)basis.size() == ix.size(d));
    for (std::int64_t i = 0; i < (std::int64_t)basis.size(); ++i)
      CHECK(ix.rank(basis[i]) == i);
  }
}

TEST_CASE("exterior products") {
  ExtMono e1{1u << 0, 1}, e2{1u << 1, 1}, e3{1u << 2, 1};
  CHECK(ext_product(e1, e1).sign == 0);
  auto p21 = ext_product(e2, e1);
  CHECK(p21.mask == 0b11u);
  CHECK(p21.sign == -1);
  auto p13 = ext_product(e1, e3);
  CHECK(p13.mask == 0b101u);
  CHECK(p13.sign == 1);
  // graded commutativity on generators and associativity
  auto p12 = ext_product(e1, e2);
  CHECK(p12.mask == p21.mask);
  CHECK(p12.sign == -p21.sign);
  auto left = ext_product(ext_product(e1, e2), e3);
  auto right = ext_product(e1, ext_product(e2, e3));
  CHECK(left.mask == right.mask);
  CHECK(left.sign == right.sign);
}

TEST_CASE("polynomial arithmetic basics") {
  Poly p = a(1) * a(1) + a(2).scaled(Rational(3));
  CHECK(p.homogeneous_qdeg() == -1);  // inhomogeneous
  Poly q = a(1) * a(2) - a(2) * a(1);
  CHECK(q.is_zero());
  CHECK((a(1) + a(2)).homogeneous_qdeg() == 2);
  CHECK(Poly::constant(Rational(1, 2)) + Poly::constant(Rational(1, 2)) ==
        Poly::constant(1));
}
