#pragma once
// Exact coefficient arithmetic: arbitrary-precision rationals (default field)
// and odd prime fields F_p, p > 3.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hhh {

using Rational = mpq_class;

inline bool rat_is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool rat_is_integer(const Rational& x) { return x.get_den() == 1; }

// Field abstraction used by the slice linear algebra. Both fields expose the
// same static-shape interface; elimination code is templated on it.
struct RationalField {
  using Elem = Rational;
  static constexpr bool exact_char_zero = true;
  Elem zero() const { return Rational(0); }
  bool nonzero(const Elem& e) const { return sgn(e) != 0; }
  Elem neg(const Elem& a) const { return -a; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem from_rational(const Rational& r) const { return r; }
};

struct PrimeField {
  using Elem = std::uint64_t;
  static constexpr bool exact_char_zero = false;
  std::uint64_t p;

  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (p <= 3) throw std::invalid_argument("prime field needs p > 3");
  }
  Elem zero() const { return 0; }
  bool nonzero(const Elem& e) const { return e != 0; }
  Elem neg(const Elem& a) const { return a == 0 ? 0 : p - a; }
  Elem add(const Elem& a, const Elem& b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem mul(const Elem& a, const Elem& b) const {
    return (unsigned __int128)a * b % p;
  }
  Elem inv(const Elem& a) const {
    // extended euclid
    std::int64_t t = 0, newt = 1;
    std::int64_t r = (std::int64_t)p, newr = (std::int64_t)a;
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (r != 1) throw std::domain_error("not invertible mod p");
    if (t < 0) t += (std::int64_t)p;
    return (Elem)t;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem from_rational(const Rational& r) const {
    mpz_class num = r.get_num() % mpz_class((unsigned long)p);
    mpz_class den = r.get_den() % mpz_class((unsigned long)p);
    if (den == 0) throw std::domain_error("denominator divisible by p");
    std::uint64_t n = mpz_class(num < 0 ? num + mpz_class((unsigned long)p) : num).get_ui();
    return div(n, den.get_ui());
  }
};

// Runtime field selection carried through the homology engine.
struct FieldSpec {
  bool rational = true;
  std::uint64_t p = 0;  // when !rational
  static FieldSpec rationals() { return FieldSpec{true, 0}; }
  static FieldSpec prime(std::uint64_t p) { return FieldSpec{false, p}; }
  std::string describe() const {
    return rational ? "rational" : ("F_" + std::to_string(p));
  }
};

}  // namespace hhh
