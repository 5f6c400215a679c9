#include "hhh/ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhh {

std::string Monomial::str() const {
  std::string s;
  for (int i = 0; i < kMaxVars; ++i) {
    for (int k = 0; k < e[i]; ++k) {
      if (!s.empty()) s += "*";
      s += "a" + std::to_string(i + 1);
    }
  }
  return s.empty() ? "1" : s;
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  if (!rat_is_zero(c)) p.terms.push_back({Monomial::one(), c});
  return p;
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (!rat_is_zero(c)) p.terms.push_back({m, c});
  return p;
}

static Poly merge(const Poly& a, const Poly& b, int bsign) {
  Poly r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size() ||
        (i < a.terms.size() && a.terms[i].first.lex_before(b.terms[j].first))) {
      r.terms.push_back(a.terms[i++]);
    } else if (i == a.terms.size() || b.terms[j].first.lex_before(a.terms[i].first)) {
      r.terms.push_back({b.terms[j].first, bsign > 0 ? b.terms[j].second : -b.terms[j].second});
      ++j;
    } else {
      Rational c = bsign > 0 ? Rational(a.terms[i].second + b.terms[j].second)
                             : Rational(a.terms[i].second - b.terms[j].second);
      if (!rat_is_zero(c)) r.terms.push_back({a.terms[i].first, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator+(const Poly& o) const { return merge(*this, o, +1); }
Poly Poly::operator-(const Poly& o) const { return merge(*this, o, -1); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms) t.second = -t.second;
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r;
  if (rat_is_zero(c)) return r;
  r.terms = terms;
  for (auto& t : r.terms) t.second *= c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ma, ca] : terms)
    for (const auto& [mb, cb] : o.terms)
      r = r + Poly::monomial(ma.times(mb), ca * cb);
  return r;
}

int Poly::homogeneous_qdeg() const {
  if (terms.empty()) return -1;
  int d = terms.front().first.qdeg();
  for (const auto& t : terms)
    if (t.first.qdeg() != d) return -1;
  return d;
}

std::string Poly::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms) {
    std::string cs = c.get_str();
    if (!s.empty()) s += " + ";
    if (m.total() == 0)
      s += cs;
    else if (c == 1)
      s += m.str();
    else if (c == -1)
      s += "-" + m.str();
    else
      s += cs + "*" + m.str();
  }
  return s;
}

static Poly reflect_monomial(const Monomial& m, const Rational& c, int i, int nvars) {
  // images of the generators under s_i
  Poly out = Poly::constant(c);
  for (int v = 1; v <= nvars; ++v) {
    Poly img;
    if (v == i)
      img = Poly::monomial(Monomial::var(i), -1);
    else if (v == i - 1 || v == i + 1)
      img = Poly::variable(v) + Poly::variable(i);
    else
      img = Poly::variable(v);
    for (int k = 0; k < m.e[v - 1]; ++k) out = out * img;
  }
  return out;
}

Poly reflect(const Poly& f, int i, int nvars) {
  if (i < 1 || i > nvars) throw std::out_of_range("reflect: generator index");
  Poly r;
  for (const auto& [m, c] : f.terms) r = r + reflect_monomial(m, c, i, nvars);
  return r;
}

Poly demazure(const Poly& f, int i, int nvars) {
  Poly num = f - reflect(f, i, nvars);
  // divide exactly by alpha_i
  Poly q;
  for (const auto& [m, c] : num.terms) {
    if (m.e[i - 1] == 0)
      throw std::domain_error("demazure: alpha_i does not divide f - s_i(f)");
    Monomial d = m;
    d.e[i - 1] -= 1;
    q = q + Poly::monomial(d, c);
  }
  return q;
}

std::vector<Monomial> graded_slice_basis(int qdeg, int nvars) {
  std::vector<Monomial> out;
  if (qdeg < 0 || qdeg % 2 != 0) return out;
  int d = qdeg / 2;
  Monomial cur;
  // enumerate weak compositions of d into nvars parts, alpha_1-major
  std::vector<int> parts(nvars, 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == nvars - 1) {
      parts[pos] = rem;
      Monomial m;
      for (int i = 0; i < nvars; ++i) m.e[i] = (std::uint8_t)parts[i];
      out.push_back(m);
      return;
    }
    for (int k = rem; k >= 0; --k) {
      parts[pos] = k;
      self(self, pos + 1, rem - k);
    }
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial::one());
    return out;
  }
  rec(rec, 0, d);
  return out;
}

std::int64_t SliceIndexer::compositions(int d, int parts) {
  if (d < 0) return 0;
  if (parts == 0) return d == 0 ? 1 : 0;
  // C(d + parts - 1, parts - 1)
  std::int64_t r = 1;
  for (int k = 1; k <= parts - 1; ++k) r = r * (d + k) / k;
  return r;
}

std::int64_t SliceIndexer::rank(const Monomial& m) const {
  int d = m.total();
  std::int64_t r = 0;
  int rem = d;
  for (int pos = 0; pos < nvars - 1; ++pos) {
    // monomials whose exponent at pos exceeds m.e[pos] come first
    for (int f = rem; f > m.e[pos]; --f) r += compositions(rem - f, nvars - pos - 1);
    rem -= m.e[pos];
  }
  return r;
}

ExtMono ext_product(const ExtMono& a, const ExtMono& b) {
  if (a.sign == 0 || b.sign == 0) return ExtMono{0, 0};
  if (a.mask & b.mask) return ExtMono{0, 0};
  // Koszul sign: each generator of b moves left past the a-generators of
  // larger index to reach sorted position
  int swaps = 0;
  for (std::uint32_t bb = b.mask; bb; bb &= bb - 1) {
    int j = std::countr_zero(bb);
    swaps += std::popcount(a.mask & ~((2u << j) - 1));
  }
  ExtMono r;
  r.mask = a.mask | b.mask;
  r.sign = a.sign * b.sign * (swaps % 2 ? -1 : 1);
  return r;
}

std::string ext_mask_str(std::uint32_t mask) {
  std::string s;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) s += "e" + std::to_string(i + 1);
  return s.empty() ? "" : s;
}

}  // namespace hhh
