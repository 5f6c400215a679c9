#include "hhh/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "vendor_json.hpp"

namespace hhh {

int TruncatedComplex::position_of(int tt) const {
  for (int i = 0; i < (int)t.size(); ++i)
    if (t[i] == tt) return i;
  throw std::out_of_range("position not in complex");
}

std::vector<int> TruncatedComplex::offsets(int pos, int k) const {
  std::vector<int> out;
  out.reserve(basis[pos][k].size());
  for (const auto& b : basis[pos][k]) out.push_back(b.offset);
  return out;
}

namespace {

TruncatedComplex build_from_subwords(const BraidWord& b, int L) {
  TruncatedComplex c;
  c.n = b.n;
  c.beta_length = b.length();
  c.left_closed = L >= b.length();
  c.right_closed = true;

  auto subs = subwords_up_to_length(b, L);
  for (int len = L; len >= 0; --len) {
    c.t.push_back(b.length() - len);
    std::vector<SubwordTerm> at;
    for (const auto& s : subs)
      if ((int)s.letters.size() == len) at.push_back(s);
    c.terms.push_back(std::move(at));
  }

  int kmax = c.n - 1;
  c.basis.resize(c.t.size());
  for (size_t p = 0; p < c.t.size(); ++p) {
    c.basis[p].resize(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
      for (int ti = 0; ti < (int)c.terms[p].size(); ++ti) {
        const auto& term = c.terms[p][ti];
        for (const auto& cls : hh_basis(term.contracted, k, c.n))
          c.basis[p][k].push_back({ti, cls, term_q_offset(term, cls)});
      }
    }
  }

  c.maps.resize(c.t.size() ? c.t.size() - 1 : 0);
  for (size_t p = 0; p + 1 < c.t.size(); ++p) {
    c.maps[p].resize(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
      c.maps[p][k].nrows = (int)c.basis[p + 1][k].size();
      c.maps[p][k].ncols = (int)c.basis[p][k].size();
    }
    // row lookup per target term and class key
    std::vector<std::map<std::uint64_t, int>> row_of(c.terms[p + 1].size());
    std::vector<std::vector<int>> term_rows(kmax + 1);
    for (int k = 0; k <= kmax; ++k)
      for (int i = 0; i < (int)c.basis[p + 1][k].size(); ++i) {
        const auto& be = c.basis[p + 1][k][i];
        row_of[be.term][be.cls.key() | ((std::uint64_t)k << 40)] = i;
      }
    for (int xi = 0; xi < (int)c.terms[p].size(); ++xi) {
      const auto& x = c.terms[p][xi];
      for (int zi = 0; zi < (int)c.terms[p + 1].size(); ++zi) {
        const auto& z = c.terms[p + 1][zi];
        auto comp = classify_component(x, z);
        if (!comp) continue;
        for (int k = 0; k <= kmax; ++k) {
          for (int j = 0; j < (int)c.basis[p][k].size(); ++j) {
            const auto& be = c.basis[p][k][j];
            if (be.term != xi) continue;
            for (const auto& img : apply_component(be.cls, *comp, z.contracted, c.n)) {
              if (img.coeff.is_zero()) continue;
              auto it = row_of[zi].find(img.cls.key() | ((std::uint64_t)k << 40));
              if (it == row_of[zi].end())
                throw std::logic_error("differential left the basis: " + img.cls.label());
              c.maps[p][k].add(it->second, j, img.coeff);
            }
          }
        }
      }
    }
  }

  // exact d^2 = 0 and homogeneity of every entry
  for (size_t p = 0; p + 1 < c.t.size(); ++p)
    for (int k = 0; k <= kmax; ++k) {
      for (const auto& [r, col, poly] : c.maps[p][k].ents) {
        int want = c.basis[p][k][col].offset - c.basis[p + 1][k][r].offset;
        if (poly.homogeneous_qdeg() != want)
          throw std::logic_error("inhomogeneous differential entry");
      }
      if (p + 2 < c.t.size()) {
        if (!sparse_is_zero(sparse_mul(c.maps[p + 1][k], c.maps[p][k])))
          throw std::logic_error("d^2 != 0: rule table inconsistency");
      }
    }
  return c;
}

}  // namespace

TruncatedComplex build_truncated(const BraidWord& b) {
  if (!b.is_positive())
    throw std::invalid_argument("build_truncated: braid must be positive");
  return build_from_subwords(b, std::min(3, b.length()));
}

TruncatedComplex build_two_strand_full(int m, int sign) {
  if (m < 1) throw std::invalid_argument("build_two_strand_full: m >= 1");
  BraidWord b;
  b.n = 2;
  b.letters.assign(m, 1);
  TruncatedComplex pos = build_from_subwords(b, m);
  if (sign >= 0) return pos;
  return dualize(pos, 2);
}

TruncatedComplex dualize(const TruncatedComplex& c, int n) {
  TruncatedComplex d;
  d.n = n;
  d.beta_length = c.beta_length;
  d.transposed = !c.transposed;
  d.left_closed = c.right_closed;
  d.right_closed = c.left_closed;
  int np = (int)c.t.size();
  int kmax = n - 1;
  int shift = 2 * (n - 1);
  for (int p = np - 1; p >= 0; --p) {
    d.t.push_back(-c.t[p]);
    d.terms.push_back(c.terms[p]);
    std::vector<std::vector<BasisElem>> bk(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
      bk[kmax - k] = c.basis[p][k];
      for (auto& be : bk[kmax - k]) be.offset = -be.offset - shift;
    }
    d.basis.push_back(std::move(bk));
  }
  for (int p = np - 2; p >= 0; --p) {
    std::vector<SparsePolyMat> mk(kmax + 1);
    for (int k = 0; k <= kmax; ++k) mk[kmax - k] = c.maps[p][k].transposed();
    d.maps.push_back(std::move(mk));
  }
  return d;
}

std::vector<JBlock> block_decompose(const TruncatedComplex& c, int k) {
  if (c.transposed)
    throw std::invalid_argument("block_decompose: positive truncated complexes only");
  if (c.t.size() < 3)
    throw std::invalid_argument("block_decompose: need at least three positions");
  size_t p0 = c.t.size() - 3;
  std::map<std::uint32_t, JBlock> blocks;
  for (int off = 0; off < 3; ++off) {
    size_t p = p0 + off;
    for (int i = 0; i < (int)c.basis[p][k].size(); ++i) {
      const auto& be = c.basis[p][k][i];
      std::uint32_t J = class_support(be.cls);
      if ((int)std::popcount(J) != k)
        throw std::logic_error("class support size differs from Hochschild degree");
      auto& blk = blocks[J];
      blk.J = J;
      blk.members.resize(3);
      blk.offsets.resize(3);
      blk.members[off].push_back(i);
      blk.offsets[off].push_back(be.offset);
    }
  }
  // restrict the two maps; any entry crossing blocks is an error
  std::vector<JBlock> out;
  for (auto& [J, blk] : blocks) {
    blk.members.resize(3);
    blk.offsets.resize(3);
    for (int step = 0; step < 2; ++step) {
      std::map<int, int> rowmap, colmap;
      for (int i = 0; i < (int)blk.members[step].size(); ++i)
        colmap[blk.members[step][i]] = i;
      for (int i = 0; i < (int)blk.members[step + 1].size(); ++i)
        rowmap[blk.members[step + 1][i]] = i;
      SparsePolyMat m;
      m.nrows = (int)rowmap.size();
      m.ncols = (int)colmap.size();
      for (const auto& [r, cc, p] : c.maps[p0 + step][k].ents) {
        bool rin = rowmap.count(r), cin = colmap.count(cc);
        if (rin != cin)
          throw std::logic_error("nonzero cross-block differential entry");
        if (rin && cin) m.add(rowmap[r], colmap[cc], p);
      }
      blk.d.push_back(std::move(m));
    }
    out.push_back(std::move(blk));
  }
  return out;
}

FreeComplexK extract_k(const TruncatedComplex& c, int k) {
  FreeComplexK f;
  f.nvars = c.nvars();
  f.left_closed = c.left_closed;
  f.right_closed = c.right_closed;
  f.t = c.t;
  for (size_t p = 0; p < c.t.size(); ++p) f.offsets.push_back(c.offsets((int)p, k));
  for (size_t p = 0; p + 1 < c.t.size(); ++p) f.d.push_back(c.maps[p][k]);
  return f;
}

int FreeComplexK::position_of(int tt) const {
  for (int i = 0; i < (int)t.size(); ++i)
    if (t[i] == tt) return i;
  throw std::out_of_range("position not in complex");
}

std::string complex_to_json(const TruncatedComplex& c) {
  nlohmann::json j;
  j["n"] = c.n;
  j["length"] = c.beta_length;
  j["transposed"] = c.transposed;
  auto positions = nlohmann::json::array();
  for (size_t p = 0; p < c.t.size(); ++p) {
    nlohmann::json jp;
    jp["t"] = c.t[p];
    auto terms = nlohmann::json::array();
    for (const auto& term : c.terms[p]) {
      nlohmann::json jt;
      std::string w;
      for (int x : term.letters) w += std::to_string(x);
      std::string cw;
      for (int x : term.contracted) cw += std::to_string(x);
      jt["word"] = w;
      jt["contracted"] = cw;
      jt["shift"] = term.shift;
      terms.push_back(jt);
    }
    jp["terms"] = terms;
    auto classes = nlohmann::json::array();
    for (size_t k = 0; k < c.basis[p].size(); ++k)
      for (const auto& be : c.basis[p][k]) {
        nlohmann::json jc;
        jc["A"] = (int)k;
        jc["term"] = be.term;
        jc["label"] = be.cls.label();
        jc["offset"] = be.offset;
        classes.push_back(jc);
      }
    jp["classes"] = classes;
    positions.push_back(jp);
  }
  j["positions"] = positions;
  auto maps = nlohmann::json::array();
  for (size_t p = 0; p + 1 < c.t.size(); ++p) {
    for (size_t k = 0; k < c.maps[p].size(); ++k) {
      for (const auto& [r, col, poly] : c.maps[p][k].ents) {
        nlohmann::json je;
        je["from_t"] = c.t[p];
        je["A"] = (int)k;
        je["row"] = r;
        je["col"] = col;
        je["entry"] = poly.str();
        maps.push_back(je);
      }
    }
  }
  j["entries"] = maps;
  return j.dump(2);
}

}  // namespace hhh
