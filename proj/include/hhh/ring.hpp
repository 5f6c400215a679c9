#pragma once
// The graded polynomial ring R = k[alpha_1..alpha_{n-1}] with deg alpha_i = 2,
// the exterior algebra on the dual roots alpha_i^vee (bidegree (1,-2)), the
// geometric S_n reflection action and Demazure operators.

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hhh/field.hpp"

namespace hhh {

constexpr int kMaxVars = 8;  // supports strand counts up to 9

// Exponent vector of a monomial in alpha_1..alpha_v.  Q-degree is twice the
// exponent sum.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  int total() const {
    int s = 0;
    for (auto x : e) s += x;
    return s;
  }
  int qdeg() const { return 2 * total(); }
  bool operator==(const Monomial& o) const { return e == o.e; }
  // alpha_1-major order: larger leading exponents come first.
  bool lex_before(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] != o.e[i]) return e[i] > o.e[i];
    return false;
  }
  Monomial times(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::uint8_t(e[i] + o.e[i]);
    return r;
  }
  static Monomial one() { return Monomial{}; }
  static Monomial var(int i) {  // alpha_i, 1-based
    Monomial m;
    m.e[i - 1] = 1;
    return m;
  }
  std::string str() const;
};

// Sparse polynomial with exact rational coefficients, terms kept sorted in
// the monomial order above with no zero coefficients.
struct Poly {
  std::vector<std::pair<Monomial, Rational>> terms;

  static Poly zero() { return Poly{}; }
  static Poly constant(const Rational& c);
  static Poly variable(int i) { return monomial(Monomial::var(i), 1); }
  static Poly monomial(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms.empty(); }
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  bool operator==(const Poly& o) const { return terms == o.terms; }

  // -1 for the zero polynomial or inhomogeneous input.
  int homogeneous_qdeg() const;
  std::string str() const;
};

// Simple reflection s_i in the geometric realization of S_n on
// span(alpha_1..alpha_{n-1}): s_i(alpha_i) = -alpha_i,
// s_i(alpha_j) = alpha_j + alpha_i for |i-j| = 1, fixed otherwise.
Poly reflect(const Poly& f, int i, int nvars);

// Demazure operator (f - s_i f)/alpha_i; throws if the division is inexact.
Poly demazure(const Poly& f, int i, int nvars);

// All monomials of the given (even) Q-degree in nvars variables, in the
// canonical order.  Odd or negative degrees give an empty list.
std::vector<Monomial> graded_slice_basis(int qdeg, int nvars);

// Indexing of the degree-d slice: rank/unrank monomials within
// graded_slice_basis(2d, nvars).
struct SliceIndexer {
  int nvars;
  explicit SliceIndexer(int v) : nvars(v) {}
  static std::int64_t compositions(int d, int parts);  // weak compositions
  std::int64_t size(int expdeg) const {
    return expdeg < 0 ? 0 : compositions(expdeg, nvars);
  }
  std::int64_t rank(const Monomial& m) const;
};

// Product in the exterior algebra on the dual roots.  Bitmask bit (i-1)
// stands for alpha_i^vee; sign carries the Koszul sign, 0 means the product
// vanished (repeated index).
struct ExtMono {
  std::uint32_t mask = 0;
  int sign = 1;
};
ExtMono ext_product(const ExtMono& a, const ExtMono& b);

std::string ext_mask_str(std::uint32_t mask);

}  // namespace hhh
