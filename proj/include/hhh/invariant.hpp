#pragma once
// Normalization of graded dimension tables into the reduced superpolynomial,
// the positive-braid form checks, the HOMFLY specialization and the mirror
// relation for knots.

#include <optional>
#include <string>
#include <vector>

#include "hhh/braid.hpp"
#include "hhh/field.hpp"
#include "hhh/homology.hpp"

namespace hhh {

struct SPTerm {
  Rational coef;
  int a = 0, t = 0, q = 0;  // coef * A^a T^t Q^q
  bool operator==(const SPTerm& o) const {
    return coef == o.coef && a == o.a && t == o.t && q == o.q;
  }
};

struct Superpolynomial {
  std::vector<SPTerm> finite;
  std::vector<SPTerm> tails;  // each term divided by (1 - Q^2)
  int t_lo = 0, t_hi = 0;     // T-exponent window actually covered
  bool complete = false;      // full table (2-strand) vs extreme truncation

  void sort_canonical();
  Rational coeff(int a, int t, int q) const;
  std::string str() const;
  std::string to_json() const;
  static Superpolynomial from_json(const std::string& text);
  bool operator==(const Superpolynomial& o) const {
    return finite == o.finite && tails == o.tails;
  }
};

// Definition-1 normalization; throws on parity violation of (e+c-n)/2.
Superpolynomial superpolynomial(const BraidWord& b, const TriGradedTable& table);

struct FormReport {
  bool top_ok = false;        // T^M A^M Q^{-4M} with coefficient 1
  bool no_subtop = false;     // nothing at T^{M-1}
  bool prime_checked = false;
  bool prime_factor_ok = false;  // (1 + T^{-2}Q^4 + T^{-2}A) at T^{M-2}
  std::string detail;
  bool passed() const {
    return top_ok && no_subtop && (!prime_checked || prime_factor_ok);
  }
};

FormReport positive_form_check(const Superpolynomial& p, bool prime);

struct HomflyTerm {
  Rational coef;
  int a_exp = 0, q_exp = 0;
  bool operator==(const HomflyTerm& o) const {
    return coef == o.coef && a_exp == o.a_exp && q_exp == o.q_exp;
  }
};

struct HomflySeries {
  std::vector<HomflyTerm> poly;
  std::vector<HomflyTerm> tails;  // each divided by (1 - q^2)
  std::string str() const;
};

// T = -1, A = -a^2 q^2, Q = q (unit normalized so the unknot gives 1)
HomflySeries homfly_specialize(const Superpolynomial& p);

// Mirror relation P_K(A,T,Q) = P_{K^vee}(A^{-1},T^{-1},Q^{-1}) on the
// overlapping computed T-window; knots only.
bool mirror_check(const BraidWord& b, int qmax, const FieldSpec& field,
                  std::string* detail = nullptr);

// table dispatch shared by the CLI: two-strand words get the full table,
// sign-homogeneous words the extreme tables; mixed signs are rejected.
TriGradedTable hhh_table_for(const BraidWord& b, int qmax, const FieldSpec& field);

}  // namespace hhh
