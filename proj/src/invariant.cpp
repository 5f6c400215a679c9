#include "hhh/invariant.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "vendor_json.hpp"

namespace hhh {

void Superpolynomial::sort_canonical() {
  auto lt = [](const SPTerm& x, const SPTerm& y) {
    return std::tie(x.t, x.a, x.q) > std::tie(y.t, y.a, y.q);
  };
  std::sort(finite.begin(), finite.end(), lt);
  std::sort(tails.begin(), tails.end(), lt);
}

Rational Superpolynomial::coeff(int a, int t, int q) const {
  for (const auto& m : finite)
    if (m.a == a && m.t == t && m.q == q) return m.coef;
  return Rational(0);
}

static std::string term_str(const SPTerm& m) {
  std::string s = m.coef.get_str();
  auto pow = [](const std::string& v, int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return v;
    return v + "^" + std::to_string(e);
  };
  std::string vars;
  for (const std::string& p : {pow("A", m.a), pow("T", m.t), pow("Q", m.q)}) {
    if (p.empty()) continue;
    if (!vars.empty()) vars += "*";
    vars += p;
  }
  if (vars.empty()) return s;
  if (s == "1") return vars;
  if (s == "-1") return "-" + vars;
  return s + "*" + vars;
}

std::string Superpolynomial::str() const {
  std::string s;
  for (const auto& m : finite) {
    if (!s.empty()) s += " + ";
    s += term_str(m);
  }
  for (const auto& m : tails) {
    if (!s.empty()) s += " + ";
    s += term_str(m) + "/(1-Q^2)";
  }
  return s.empty() ? "0" : s;
}

std::string Superpolynomial::to_json() const {
  nlohmann::json j;
  auto dump = [](const std::vector<SPTerm>& v) {
    auto arr = nlohmann::json::array();
    for (const auto& m : v)
      arr.push_back({{"coef", m.coef.get_str()}, {"A", m.a}, {"T", m.t}, {"Q", m.q}});
    return arr;
  };
  j["monomials"] = dump(finite);
  j["tails"] = dump(tails);
  j["t_lo"] = t_lo;
  j["t_hi"] = t_hi;
  j["complete"] = complete;
  return j.dump(2);
}

Superpolynomial Superpolynomial::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  Superpolynomial p;
  auto load = [](const nlohmann::json& arr, std::vector<SPTerm>& v) {
    for (const auto& e : arr) {
      SPTerm m;
      m.coef = Rational(e.at("coef").get<std::string>());
      m.a = e.at("A").get<int>();
      m.t = e.at("T").get<int>();
      m.q = e.at("Q").get<int>();
      v.push_back(m);
    }
  };
  load(j.at("monomials"), p.finite);
  load(j.at("tails"), p.tails);
  p.t_lo = j.at("t_lo").get<int>();
  p.t_hi = j.at("t_hi").get<int>();
  p.complete = j.at("complete").get<bool>();
  return p;
}

Superpolynomial superpolynomial(const BraidWord& b, const TriGradedTable& table) {
  int e = writhe(b);
  int c = closure_components(b);
  int n = b.n;
  if ((e + c - n) % 2 != 0)
    throw std::domain_error("superpolynomial: (e+c-n)/2 is not an integer");
  int g = (e + c - n) / 2;
  // prefactor (Q^{-4} A T)^g Q^e T^{-e}
  Superpolynomial p;
  for (const auto& [key, dim] : table.entries) {
    auto [a, t, q] = key;
    p.finite.push_back({Rational(dim), a + g, t + g - e, q - 4 * g + e});
  }
  for (const auto& tail : table.tails)
    p.tails.push_back({Rational(1), tail.a + g, tail.t + g - e,
                       tail.qstart - 4 * g + e});
  p.sort_canonical();
  // covered T-exponent window: two-strand tables are complete, extreme
  // tables report exactly three homological degrees (zero slices included)
  int len = b.length();
  p.complete = n == 2;
  if (p.complete) {
    p.t_lo = -len + g - e;
    p.t_hi = len + g - e;
  } else if (b.is_positive()) {
    p.t_lo = (len - 2) + g - e;
    p.t_hi = len + g - e;
  } else {
    p.t_lo = -len + g - e;
    p.t_hi = (-len + 2) + g - e;
  }
  return p;
}

FormReport positive_form_check(const Superpolynomial& p, bool prime) {
  FormReport r;
  r.prime_checked = prime;
  if (p.finite.empty()) {
    r.detail = "empty superpolynomial";
    return r;
  }
  int M = p.finite.front().t;
  for (const auto& m : p.finite) M = std::max(M, m.t);
  for (const auto& m : p.tails) M = std::max(M, m.t);
  std::map<std::pair<int, int>, Rational> top, subtop, sub2;
  for (const auto& m : p.finite) {
    if (m.t == M) top[{m.a, m.q}] = m.coef;
    if (m.t == M - 1) subtop[{m.a, m.q}] = m.coef;
    if (m.t == M - 2) sub2[{m.a, m.q}] = m.coef;
  }
  for (const auto& m : p.tails)
    if (m.t >= M - 2) {
      r.detail = "free tail intrudes into the top T-degrees";
      return r;
    }
  r.top_ok = top.size() == 1 && top.count({M, -4 * M}) &&
             top[{M, -4 * M}] == Rational(1);
  r.no_subtop = subtop.empty();
  if (prime) {
    std::map<std::pair<int, int>, Rational> want;
    want[{M, -4 * M + 4}] = Rational(1);
    want[{M + 1, -4 * M}] = Rational(1);
    r.prime_factor_ok = sub2 == want;
  }
  if (!r.passed()) r.detail = "superpolynomial shape differs from the positive form";
  return r;
}

HomflySeries homfly_specialize(const Superpolynomial& p) {
  HomflySeries h;
  auto spec = [](const SPTerm& m) {
    // T = -1, A = -a^2 q^2, Q = q
    HomflyTerm t;
    int sign = ((m.t + m.a) % 2 + 2) % 2 == 0 ? 1 : -1;
    t.coef = m.coef * sign;
    t.a_exp = 2 * m.a;
    t.q_exp = m.q + 2 * m.a;
    return t;
  };
  std::map<std::pair<int, int>, Rational> acc;
  for (const auto& m : p.finite) {
    auto t = spec(m);
    acc[{t.a_exp, t.q_exp}] += t.coef;
  }
  for (auto& [k, c] : acc)
    if (!rat_is_zero(c)) h.poly.push_back({c, k.first, k.second});
  for (const auto& m : p.tails) {
    auto t = spec(m);
    h.tails.push_back(t);
  }
  return h;
}

std::string HomflySeries::str() const {
  auto one = [](const HomflyTerm& t) {
    std::string s = t.coef.get_str();
    if (t.a_exp) s += "*a^" + std::to_string(t.a_exp);
    if (t.q_exp) s += "*q^" + std::to_string(t.q_exp);
    return s;
  };
  std::string s;
  for (const auto& t : poly) {
    if (!s.empty()) s += " + ";
    s += one(t);
  }
  for (const auto& t : tails) {
    if (!s.empty()) s += " + ";
    s += one(t) + "/(1-q^2)";
  }
  return s.empty() ? "0" : s;
}

TriGradedTable hhh_table_for(const BraidWord& b, int qmax, const FieldSpec& field) {
  if (b.length() == 0)
    throw std::invalid_argument("empty braid word");
  if (!b.is_positive() && !b.is_negative())
    throw std::invalid_argument("mixed-sign braid: only sign-homogeneous words "
                                "are computable (see the analyze command)");
  if (b.n == 2) {
    int m = b.length();
    int sign = b.is_positive() ? 1 : -1;
    return two_strand_hhh(m, sign, qmax, field);
  }
  return b.is_positive() ? extreme_hhh(b, qmax, field)
                         : negative_extreme_hhh(b, qmax, field);
}

bool mirror_check(const BraidWord& b, int qmax, const FieldSpec& field,
                  std::string* detail) {
  if (closure_components(b) != 1) {
    if (detail) *detail = "closure is not a knot";
    throw std::invalid_argument("mirror_check: closure must be a knot");
  }
  BraidWord bm = mirror(b);
  Superpolynomial pb = superpolynomial(b, hhh_table_for(b, qmax, field));
  Superpolynomial pm = superpolynomial(bm, hhh_table_for(bm, qmax, field));
  // overlap of pb's T-window with the negated window of pm
  int lo = std::max(pb.t_lo, -pm.t_hi);
  int hi = std::min(pb.t_hi, -pm.t_lo);
  if (pb.complete && pm.complete) {
    lo = std::min(pb.t_lo, -pm.t_hi);
    hi = std::max(pb.t_hi, -pm.t_lo);
  }
  auto slice = [](const Superpolynomial& p, int t, bool invert) {
    std::map<std::pair<int, int>, Rational> s;
    for (const auto& m : p.finite)
      if ((invert ? -m.t : m.t) == t) s[{invert ? -m.a : m.a, invert ? -m.q : m.q}] = m.coef;
    return s;
  };
  int compared = 0;
  for (int t = lo; t <= hi; ++t) {
    auto sb = slice(pb, t, false);
    auto sm = slice(pm, t, true);
    if (sb != sm) {
      if (detail)
        *detail = "mismatch at T-exponent " + std::to_string(t);
      return false;
    }
    compared += (int)sb.size();
  }
  // tails are matched under the inversion 1/(1-Q^-2) = -Q^2/(1-Q^2)
  if (pb.complete && pm.complete) {
    std::map<std::tuple<int, int, int>, Rational> tb, tm;
    for (const auto& m : pb.tails) tb[{m.a, m.t, m.q}] = m.coef;
    for (const auto& m : pm.tails) tm[{-m.a, -m.t, -m.q + 2}] = -m.coef;
    if (tb != tm) {
      if (detail) *detail = "tail mismatch under inversion";
      return false;
    }
  }
  if (detail)
    *detail = "overlapping window T-exp [" + std::to_string(lo) + "," +
              std::to_string(hi) + "], " + std::to_string(compared) +
              " monomials matched";
  return true;
}

}  // namespace hhh
