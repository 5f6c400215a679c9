#include "hhh/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include "vendor_json.hpp"

namespace hhh {

namespace {

constexpr std::uint64_t kCertPrime = 2147483647ull;  // 2^31 - 1
constexpr int kTailHeadroom = 10;

bool integer_entries(const SparsePolyMat& m) {
  for (const auto& [r, c, p] : m.ents)
    for (const auto& [mono, coef] : p.terms)
      if (!rat_is_integer(coef)) return false;
  return true;
}

struct PositionView {
  const FreeComplexK& c;
  int pos;
  bool has_in, has_out;
};

PositionView view_at(const FreeComplexK& c, int t) {
  int pos = c.position_of(t);
  bool has_in = pos > 0;
  bool has_out = pos + 1 < (int)c.t.size();
  if (!has_in && !c.left_closed)
    throw std::invalid_argument("cohomology: no incoming differential at this position");
  if (!has_out && !c.right_closed)
    throw std::invalid_argument("cohomology: no outgoing differential at this position");
  return {c, pos, has_in, has_out};
}

}  // namespace

std::vector<SparseVec<RationalField>> slice_matrix(const HHMatrix& m, int q,
                                                   int nvars) {
  SparsePolyMat mat;
  mat.nrows = (int)m.rows.size();
  mat.ncols = (int)m.cols.size();
  for (const auto& [r, c, p] : m.entries) mat.add(r, c, p);
  SliceSide rows = make_slice_side(m.row_offsets, q, nvars);
  SliceSide cols = make_slice_side(m.col_offsets, q, nvars);
  RationalField F;
  return slice_columns(F, mat, rows, cols);
}

// Shared rank computation over the whole chain: the slice rank of each
// differential serves both as outgoing rank of its source position and
// incoming rank of its target, so it is computed once per (map, q).
struct ChainRanker {
  const FreeComplexK& c;
  const FieldSpec& field;
  bool certify;
  PrimeField cert{kCertPrime};
  std::optional<PrimeField> prime;
  std::map<std::pair<int, int>, std::int64_t> cache_cert, cache_exact;

  ChainRanker(const FreeComplexK& cc, const FieldSpec& f) : c(cc), field(f) {
    certify = field.rational;
    if (certify)
      for (const auto& m : c.d)
        if (!integer_entries(m)) certify = false;
    if (!field.rational) prime.emplace(field.p);
  }

  template <class F>
  std::int64_t rank_with(const F& fld, int mi, int q) const {
    SliceSide rows = make_slice_side(c.offsets[mi + 1], q, c.nvars);
    SliceSide cols = make_slice_side(c.offsets[mi], q, c.nvars);
    if (rows.dim == 0 || cols.dim == 0) return 0;
    auto v = slice_columns(fld, c.d[mi], rows, cols);
    return sparse_rank(fld, v);
  }

  std::int64_t rank_fast(int mi, int q) {  // mod-p certificate or requested prime
    auto key = std::make_pair(mi, q);
    auto it = cache_cert.find(key);
    if (it != cache_cert.end()) return it->second;
    std::int64_t r = prime ? rank_with(*prime, mi, q)
                           : (certify ? rank_with(cert, mi, q)
                                      : rank_with(RationalField{}, mi, q));
    cache_cert.emplace(key, r);
    return r;
  }

  std::int64_t rank_exact(int mi, int q) {
    if (prime || !certify) return rank_fast(mi, q);
    auto key = std::make_pair(mi, q);
    auto it = cache_exact.find(key);
    if (it != cache_exact.end()) return it->second;
    std::int64_t r = rank_with(RationalField{}, mi, q);
    cache_exact.emplace(key, r);
    return r;
  }

  int dim_at(int t, int q) {
    PositionView v = view_at(c, t);
    std::int64_t mid = make_slice_side(c.offsets[v.pos], q, c.nvars).dim;
    if (mid == 0) return 0;
    std::int64_t fast = mid - (v.has_out ? rank_fast(v.pos, q) : 0) -
                        (v.has_in ? rank_fast(v.pos - 1, q) : 0);
    if (fast < 0) throw std::logic_error("negative homology dimension: d^2 != 0?");
    if (fast == 0) return 0;  // exact: dim_Q <= dim_p for integer matrices
    if (prime || !certify) return (int)fast;
    std::int64_t d = mid - (v.has_out ? rank_exact(v.pos, q) : 0) -
                     (v.has_in ? rank_exact(v.pos - 1, q) : 0);
    if (d < 0) throw std::logic_error("negative homology dimension: d^2 != 0?");
    return (int)d;
  }
};

std::map<int, int> cohomology_dims(const FreeComplexK& c, int t, int qlo, int qhi,
                                   const FieldSpec& field) {
  ChainRanker ranker(c, field);
  view_at(c, t);  // validate the position
  std::map<int, int> out;
  for (int q = qlo; q <= qhi; ++q) {
    int d = ranker.dim_at(t, q);
    if (d > 0) out[q] = d;
  }
  return out;
}

std::map<int, int> cohomology_dims(const FreeComplexK& c, int t, int qmax,
                                   const FieldSpec& field) {
  return cohomology_dims(c, t, -qmax, qmax, field);
}

namespace {

using QVec = SparseVec<RationalField>;

// lifted basis of H at (t, q): kernel representatives independent of the image
std::vector<QVec> h_basis_lift(const PositionView& v, int q, const RationalField& F) {
  SliceSide mid = make_slice_side(v.c.offsets[v.pos], q, v.c.nvars);
  std::vector<QVec> kernel;
  if (v.has_out) {
    SliceSide rows = make_slice_side(v.c.offsets[v.pos + 1], q, v.c.nvars);
    auto cols = slice_columns(F, v.c.d[v.pos], rows, mid);
    auto coords = kernel_basis(F, cols, rows.dim);
    kernel = std::move(coords);  // coordinates in the middle slice
  } else {
    for (std::int64_t i = 0; i < mid.dim; ++i)
      kernel.push_back({{i, Rational(1)}});
  }
  Eliminator<RationalField> e(F);
  if (v.has_in) {
    SliceSide srcs = make_slice_side(v.c.offsets[v.pos - 1], q, v.c.nvars);
    auto im = slice_columns(F, v.c.d[v.pos - 1], mid, srcs);
    for (auto& col : im) e.add(std::move(col));
  }
  std::vector<QVec> lifts;
  for (auto& kv : kernel)
    if (e.add(QVec(kv))) lifts.push_back(kv);
  return lifts;
}

// middle-slice coordinate map of multiplication by alpha_i from degree q to q+2
QVec mult_alpha(const FreeComplexK& c, int pos, int q, int i, const QVec& vec) {
  SliceSide from = make_slice_side(c.offsets[pos], q, c.nvars);
  SliceSide to = make_slice_side(c.offsets[pos], q + 2, c.nvars);
  SliceIndexer ix(c.nvars);
  QVec out;
  for (const auto& [idx, val] : vec) {
    // locate the class block
    int cls = (int)(std::upper_bound(from.start.begin(), from.start.end(), idx) -
                    from.start.begin()) - 1;
    std::int64_t local = idx - from.start[cls];
    auto monos = graded_slice_basis(2 * from.expdeg[cls], c.nvars);
    Monomial m = monos[(size_t)local].times(Monomial::var(i));
    out.emplace_back(to.start[cls] + ix.rank(m), val);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

bool tail_step_bijective(const FreeComplexK& c, int t, int q, int var_i) {
  RationalField F;
  PositionView v = view_at(c, t);
  auto lifts_q = h_basis_lift(v, q, F);
  auto lifts_q2 = h_basis_lift(v, q + 2, F);
  if (lifts_q.size() != lifts_q2.size()) return false;
  if (lifts_q.empty()) return true;
  Eliminator<RationalField> e(F);
  if (v.has_in) {
    SliceSide mid2 = make_slice_side(v.c.offsets[v.pos], q + 2, v.c.nvars);
    SliceSide srcs = make_slice_side(v.c.offsets[v.pos - 1], q + 2, v.c.nvars);
    auto im = slice_columns(F, v.c.d[v.pos - 1], mid2, srcs);
    for (auto& col : im) e.add(std::move(col));
  }
  for (const auto& lift : lifts_q)
    if (!e.add(mult_alpha(c, v.pos, q, var_i, lift))) return false;
  return true;
}

std::optional<Tail> detect_free_tail(const std::map<int, int>& dims, int qhi,
                                     const std::function<bool(int)>& step_bijective) {
  // longest run of dimension-1 slices with period 2 reaching the window end
  for (auto it = dims.begin(); it != dims.end(); ++it) {
    auto [q0, d0] = *it;
    if (d0 != 1) continue;
    int q = q0;
    bool runs_out = true;
    while (q + 2 <= qhi) {
      auto nx = dims.find(q + 2);
      if (nx == dims.end() || nx->second != 1) {
        runs_out = false;
        break;
      }
      q += 2;
    }
    if (!runs_out || q - q0 < 4) continue;  // need at least three slices
    bool ok = true;
    for (int qq = q0; qq + 2 <= q && ok; qq += 2) ok = step_bijective(qq);
    if (ok) return Tail{0, 0, q0, 2};
  }
  return std::nullopt;
}

int default_qmax(int beta_length) { return 2 * beta_length + 10; }

Hypotheses analyze_hypotheses(const BraidWord& b) {
  Hypotheses h;
  h.positive = b.is_positive();
  h.negative = b.is_negative() && b.length() > 0;
  h.mixed = !h.positive && !h.negative;
  h.all_generators = uses_all_generators(b);
  h.stst_pairs = stst_pair_flags(b);
  h.stst_all = std::all_of(h.stst_pairs.begin(), h.stst_pairs.end(),
                           [](bool f) { return f; });
  h.csum_window = connect_sum_window(b);
  return h;
}

namespace {

void fill_meta(TriGradedTable& tab, const BraidWord& b, int qmax) {
  tab.braid = b.text();
  tab.n = b.n;
  tab.writhe = writhe(b);
  tab.components = closure_components(b);
  tab.qmax = qmax;
  tab.hyp = analyze_hypotheses(b);
}

std::pair<int, int> complex_window(const TruncatedComplex& c,
                                   const std::vector<int>& report_t, int qmax) {
  int hi = -qmax;
  for (int t : report_t) {
    int pos = c.position_of(t);
    for (size_t k = 0; k < c.basis[pos].size(); ++k)
      for (const auto& be : c.basis[pos][k]) hi = std::max(hi, be.offset);
  }
  return {-qmax, std::min(qmax, hi + kTailHeadroom)};
}

void compute_positions(TriGradedTable& tab, const TruncatedComplex& c,
                       const std::vector<int>& report_t, int qlo, int qhi,
                       const FieldSpec& field, bool detect_tails) {
  tab.qlo = qlo;
  tab.qhi = qhi;
  for (int k = 0; k <= c.n - 1; ++k) {
    FreeComplexK fk = extract_k(c, k);
    ChainRanker ranker(fk, field);
    for (int t : report_t) {
      std::map<int, int> dims;
      for (int q = qlo; q <= qhi; ++q) {
        int d = ranker.dim_at(t, q);
        if (d > 0) dims[q] = d;
      }
      for (auto [q, d] : dims) tab.entries[{k, t, q}] = d;
      if (detect_tails) {
        auto tail = detect_free_tail(dims, qhi, [&](int q) {
          for (int i = 1; i <= c.nvars(); ++i)
            if (tail_step_bijective(fk, t, q, i)) return true;
          return false;
        });
        if (tail) {
          tail->a = k;
          tail->t = t;
          tab.tails.push_back(*tail);
          // a flagged tail is free rank one: drop its slices from the finite list
          for (int q = tail->qstart; q <= qhi; q += 2) tab.entries.erase({k, t, q});
        }
      }
    }
  }
}

void compare_theorems(TriGradedTable& tab, bool negative_side, int len) {
  auto check = [&](const std::string& name, bool hypotheses_hold,
                   const std::map<std::tuple<int, int, int>, int>& expected,
                   const std::vector<int>& ts) {
    TheoremVerdict v;
    v.name = name;
    if (!hypotheses_hold) {
      v.status = "suppressed";
      v.detail = "hypotheses not satisfied";
      tab.theorems.push_back(v);
      return;
    }
    for (const auto& [key, dim] : expected) {
      if (tab.dim(std::get<0>(key), std::get<1>(key), std::get<2>(key)) != dim) {
        v.status = "mismatch";
        v.detail = "expected dim " + std::to_string(dim) + " at (A=" +
                   std::to_string(std::get<0>(key)) + ",T=" +
                   std::to_string(std::get<1>(key)) + ",Q=" +
                   std::to_string(std::get<2>(key)) + ")";
        tab.theorems.push_back(v);
        return;
      }
    }
    // nothing unexpected in the compared T-degrees
    for (const auto& [key, dim] : tab.entries) {
      auto [a, t, q] = key;
      if (std::find(ts.begin(), ts.end(), t) == ts.end()) continue;
      if (!expected.count(key)) {
        v.status = "mismatch";
        v.detail = "unexpected class at (A=" + std::to_string(a) + ",T=" +
                   std::to_string(t) + ",Q=" + std::to_string(q) + ")";
        tab.theorems.push_back(v);
        return;
      }
    }
    v.status = "match";
    tab.theorems.push_back(v);
  };

  if (!negative_side) {
    std::map<std::tuple<int, int, int>, int> top;
    top[{0, len, -len}] = 1;
    check("top-degrees(beta,beta-1)", tab.hyp.all_generators, top, {len, len - 1});
    std::map<std::tuple<int, int, int>, int> pen;
    pen[{0, len - 2, -len + 4}] = 1;
    pen[{1, len - 2, -len}] = 1;
    check("penultimate(beta-2)", tab.hyp.all_generators && tab.hyp.stst_all, pen,
          {len - 2});
  } else {
    std::map<std::tuple<int, int, int>, int> low;  // empty: all zero
    check("bottom-degrees(-alpha,-alpha+1)",
          tab.hyp.all_generators && tab.n >= 3, low, {-len, -len + 1});
    std::map<std::tuple<int, int, int>, int> pen;
    if (tab.n == 3) pen[{2, -len + 2, len - 8}] = 1;
    check("penultimate(-alpha+2)", tab.hyp.all_generators && tab.hyp.stst_all,
          pen, {-len + 2});
  }
}

}  // namespace

TriGradedTable extreme_hhh(const BraidWord& b, int qmax, const FieldSpec& field) {
  if (!b.is_positive())
    throw std::invalid_argument("extreme_hhh: braid must be positive");
  if (!uses_all_generators(b))
    throw std::invalid_argument("extreme_hhh: every generator must occur");
  TriGradedTable tab;
  fill_meta(tab, b, qmax);
  TruncatedComplex c = build_truncated(b);
  int len = b.length();
  std::vector<int> report;
  for (int t : {len - 2, len - 1, len})
    if (t >= c.t.front() && t <= len) report.push_back(t);
  auto [qlo, qhi] = complex_window(c, report, qmax);
  compute_positions(tab, c, report, qlo, qhi, field, true);
  compare_theorems(tab, false, len);
  return tab;
}

TriGradedTable negative_extreme_hhh(const BraidWord& a, int qmax, const FieldSpec& field) {
  if (!a.is_negative() || a.length() == 0)
    throw std::invalid_argument("negative_extreme_hhh: braid must be negative");
  TriGradedTable tab;
  fill_meta(tab, a, qmax);
  BraidWord b = mirror(a);
  TruncatedComplex dual = dualize(build_truncated(b), a.n);
  int len = a.length();
  std::vector<int> report;
  for (int t : {-len, -len + 1, -len + 2})
    if (t >= -len && t <= dual.t.back()) report.push_back(t);
  auto [qlo, qhi] = complex_window(dual, report, qmax);
  compute_positions(tab, dual, report, qlo, qhi, field, true);
  compare_theorems(tab, true, len);
  return tab;
}

TriGradedTable two_strand_hhh(int m, int sign, int qmax, const FieldSpec& field) {
  if (m < 1) throw std::invalid_argument("two_strand_hhh: m >= 1");
  BraidWord b;
  b.n = 2;
  b.letters.assign(m, sign >= 0 ? 1 : -1);
  TriGradedTable tab;
  fill_meta(tab, b, qmax);
  TruncatedComplex c = build_two_strand_full(m, sign);
  std::vector<int> report = c.t;
  compute_positions(tab, c, report, -qmax, qmax, field, true);
  return tab;
}

std::string TriGradedTable::to_json() const {
  nlohmann::json j;
  j["braid"] = braid;
  j["n"] = n;
  j["writhe"] = writhe;
  j["components"] = components;
  j["qmax"] = qmax;
  j["qlo"] = qlo;
  j["qhi"] = qhi;
  auto ent = nlohmann::json::array();
  for (const auto& [key, d] : entries) {
    auto [a, t, q] = key;
    ent.push_back({{"A", a}, {"T", t}, {"Q", q}, {"dim", d}});
  }
  j["entries"] = ent;
  auto tl = nlohmann::json::array();
  for (const auto& tail : tails)
    tl.push_back({{"A", tail.a}, {"T", tail.t}, {"qstart", tail.qstart},
                  {"period", tail.period}});
  j["tails"] = tl;
  nlohmann::json hy;
  hy["positive"] = hyp.positive;
  hy["negative"] = hyp.negative;
  hy["mixed"] = hyp.mixed;
  hy["all_generators"] = hyp.all_generators;
  hy["stst_per_pair"] = hyp.stst_pairs;
  hy["stst_all"] = hyp.stst_all;
  if (hyp.csum_window)
    hy["connect_sum_window"] = *hyp.csum_window;
  else
    hy["connect_sum_window"] = nullptr;
  j["hypotheses"] = hy;
  auto th = nlohmann::json::array();
  for (const auto& v : theorems)
    th.push_back({{"name", v.name}, {"status", v.status}, {"detail", v.detail}});
  j["theorems"] = th;
  return j.dump(2);
}

TriGradedTable TriGradedTable::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  TriGradedTable t;
  t.braid = j.at("braid").get<std::string>();
  t.n = j.at("n").get<int>();
  t.writhe = j.at("writhe").get<int>();
  t.components = j.at("components").get<int>();
  t.qmax = j.at("qmax").get<int>();
  t.qlo = j.at("qlo").get<int>();
  t.qhi = j.at("qhi").get<int>();
  for (const auto& e : j.at("entries"))
    t.entries[{e.at("A").get<int>(), e.at("T").get<int>(), e.at("Q").get<int>()}] =
        e.at("dim").get<int>();
  for (const auto& e : j.at("tails"))
    t.tails.push_back(Tail{e.at("A").get<int>(), e.at("T").get<int>(),
                           e.at("qstart").get<int>(), e.at("period").get<int>()});
  const auto& hy = j.at("hypotheses");
  t.hyp.positive = hy.at("positive").get<bool>();
  t.hyp.negative = hy.at("negative").get<bool>();
  t.hyp.mixed = hy.at("mixed").get<bool>();
  t.hyp.all_generators = hy.at("all_generators").get<bool>();
  t.hyp.stst_pairs = hy.at("stst_per_pair").get<std::vector<bool>>();
  t.hyp.stst_all = hy.at("stst_all").get<bool>();
  if (!hy.at("connect_sum_window").is_null())
    t.hyp.csum_window = hy.at("connect_sum_window").get<int>();
  for (const auto& v : j.at("theorems"))
    t.theorems.push_back(TheoremVerdict{v.at("name").get<std::string>(),
                                        v.at("status").get<std::string>(),
                                        v.at("detail").get<std::string>()});
  return t;
}

}  // namespace hhh
