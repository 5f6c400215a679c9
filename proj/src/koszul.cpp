#include "hhh/koszul.hpp"

#include <algorithm>
#include <stdexcept>

#include "hhh/homology.hpp"

namespace hhh {

KoszulComplex build_koszul(const std::vector<Poly>& seq, int nvars) {
  KoszulComplex k;
  k.nvars = nvars;
  k.seq = seq;
  for (const auto& s : seq) {
    int d = s.homogeneous_qdeg();
    if (d < 0) throw std::invalid_argument("build_koszul: entries must be homogeneous");
    k.degs.push_back(d);
  }
  return k;
}

std::vector<std::vector<int>> KoszulComplex::wedge_basis(int j) const {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(j);
  auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == j) {
      out.push_back(pick);
      return;
    }
    for (int i = from; i <= r(); ++i) {
      pick[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  if (j >= 0 && j <= r()) rec(rec, 0, 1);
  return out;
}

FreeComplexK KoszulComplex::to_free() const {
  FreeComplexK f;
  f.nvars = nvars;
  f.left_closed = true;
  f.right_closed = true;
  int rr = r();
  std::vector<std::vector<std::vector<int>>> bases;
  for (int j = rr; j >= 0; --j) {
    f.t.push_back(-j);
    bases.push_back(wedge_basis(j));
    std::vector<int> offs;
    for (const auto& S : bases.back()) {
      int o = 0;
      for (int i : S) o += degs[i - 1];
      offs.push_back(o);
    }
    f.offsets.push_back(offs);
  }
  for (int p = 0; p + 1 <= rr; ++p) {
    // map Lambda^{rr-p} -> Lambda^{rr-p-1}
    const auto& src = bases[p];
    const auto& dst = bases[p + 1];
    std::map<std::vector<int>, int> dst_index;
    for (int i = 0; i < (int)dst.size(); ++i) dst_index[dst[i]] = i;
    SparsePolyMat m;
    m.nrows = (int)dst.size();
    m.ncols = (int)src.size();
    for (int c = 0; c < (int)src.size(); ++c) {
      const auto& S = src[c];
      for (int pos = 0; pos < (int)S.size(); ++pos) {
        std::vector<int> T = S;
        T.erase(T.begin() + pos);
        Poly entry = seq[S[pos] - 1];
        if (pos % 2 == 1) entry = -entry;
        m.add(dst_index.at(T), c, entry);
      }
    }
    f.d.push_back(std::move(m));
  }
  return f;
}

std::map<int, int> koszul_cohomology(const KoszulComplex& k, int position, int qmax,
                                     const FieldSpec& field) {
  FreeComplexK f = k.to_free();
  return cohomology_dims(f, -position, -qmax, qmax, field);
}

namespace {

bool poly_equals_signed(const Poly& p, const Poly& q, int sign) {
  return sign > 0 ? p == q : p == -q;
}

}  // namespace

KoszulMatch match_to_koszul(const JBlock& block, const TruncatedComplex& c, int k) {
  KoszulMatch res;
  int n = c.n;
  size_t p0 = c.t.size() - 3;
  // target Koszul data: s_i = 1 for i in J, alpha_i otherwise
  std::vector<Poly> s(n - 1);
  for (int i = 1; i <= n - 1; ++i)
    s[i - 1] = (block.J >> (i - 1)) & 1 ? Poly::constant(1) : Poly::variable(i);

  if (block.members[2].size() != 1) {
    res.detail = "top term is not rank one";
    return res;
  }
  // G-classes carry their e-index as the single word letter
  int gsize = (int)block.members[1].size();
  if (gsize != n - 1) {
    res.detail = "G-term rank differs from n-1";
    return res;
  }
  res.g_index.resize(gsize);
  res.g_sign.assign(gsize, 0);
  std::vector<int> g_of_index(n, -1);
  for (int gi = 0; gi < gsize; ++gi) {
    const auto& be = c.basis[p0 + 1][k][block.members[1][gi]];
    if (be.cls.word.size() != 1) {
      res.detail = "G-class is not a single-letter class";
      return res;
    }
    int idx = be.cls.word[0];
    res.g_index[gi] = idx;
    if (g_of_index[idx] != -1) {
      res.detail = "duplicate G-index";
      return res;
    }
    g_of_index[idx] = gi;
  }
  // d1 entries fix the G signs
  std::vector<std::vector<Poly>> d1(1, std::vector<Poly>(gsize));
  for (const auto& [r, col, p] : block.d[1].ents) d1[r][col] = p;
  for (int gi = 0; gi < gsize; ++gi) {
    const Poly& want = s[res.g_index[gi] - 1];
    if (poly_equals_signed(d1[0][gi], want, +1))
      res.g_sign[gi] = +1;
    else if (poly_equals_signed(d1[0][gi], want, -1))
      res.g_sign[gi] = -1;
    else {
      res.detail = "d1 entry is not +-s_i at index " + std::to_string(res.g_index[gi]);
      return res;
    }
  }
  // F-classes: group columns by unordered pair; verify duplicates negate.
  // Contracted-run terms (the C_ii summands) are not part of the Koszul
  // identification; their columns must vanish (odd run maps).
  int fsize = (int)block.members[0].size();
  std::vector<std::pair<int, int>> pair_of(fsize);
  std::vector<bool> run_term(fsize, false);
  for (int fi = 0; fi < fsize; ++fi) {
    const auto& be = c.basis[p0][k][block.members[0][fi]];
    const auto& term = c.terms[p0][be.term];
    if (term.shift != 0) {
      run_term[fi] = true;
      continue;
    }
    if (be.cls.word.size() != 2) {
      res.detail = "F-class is not a two-letter class";
      return res;
    }
    int a = be.cls.word[0], b = be.cls.word[1];
    pair_of[fi] = {std::min(a, b), std::max(a, b)};
  }
  std::vector<std::vector<Poly>> d2(gsize, std::vector<Poly>(fsize));
  for (const auto& [r, col, p] : block.d[0].ents) d2[r][col] = p;
  std::map<std::pair<int, int>, int> kept;
  res.f_sign.assign(fsize, 0);
  for (int fi = 0; fi < fsize; ++fi) {
    if (run_term[fi]) {
      for (int gi = 0; gi < gsize; ++gi)
        if (!d2[gi][fi].is_zero()) {
          res.detail = "run-contracted column is not zero";
          return res;
        }
      continue;
    }
    auto pr = pair_of[fi];
    auto it = kept.find(pr);
    if (it != kept.end()) {
      // duplicate ordering: column must be the negative of its partner
      for (int gi = 0; gi < gsize; ++gi)
        if (!(d2[gi][fi] == -d2[gi][it->second])) {
          res.detail = "duplicate pair column is not the negative of its partner";
          return res;
        }
      continue;
    }
    kept[pr] = fi;
    auto [a, b] = pr;
    int ga = g_of_index[a], gb = g_of_index[b];
    // koszul: d2(e_ab) = s_a e_b - s_b e_a; solve the sign from the e_b row
    const Poly& want_b = s[a - 1];
    const Poly& want_a = s[b - 1];
    int sign = 0;
    Poly eb = d2[gb][fi].scaled(Rational(res.g_sign[gb]));
    if (poly_equals_signed(eb, want_b, +1))
      sign = +1;
    else if (poly_equals_signed(eb, want_b, -1))
      sign = -1;
    else {
      res.detail = "d2 entry at (e_b, e_ab) is not +-s_a";
      return res;
    }
    Poly ea = d2[ga][fi].scaled(Rational(res.g_sign[ga]));
    if (!poly_equals_signed(ea, want_a, -sign)) {
      res.detail = "d2 entry at (e_a, e_ab) inconsistent with the chosen signs";
      return res;
    }
    for (int gi = 0; gi < gsize; ++gi)
      if (gi != ga && gi != gb && !d2[gi][fi].is_zero()) {
        res.detail = "d2 column touches a third index";
        return res;
      }
    res.f_sign[fi] = sign;
  }
  if ((int)kept.size() != (n - 1) * (n - 2) / 2) {
    res.detail = "not every unordered pair occurs";
    return res;
  }
  res.ok = true;
  res.detail = "signed permutation witness found";
  return res;
}

}  // namespace hhh
