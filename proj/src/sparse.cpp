#include "hhh/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhh {

SparsePolyMat sparse_mul(const SparsePolyMat& b, const SparsePolyMat& a) {
  if (b.ncols != a.nrows) throw std::invalid_argument("sparse_mul: shape mismatch");
  std::map<std::pair<int, int>, Poly> acc;
  // index a's entries by row
  std::map<int, std::vector<std::pair<int, const Poly*>>> a_by_row;
  for (const auto& [r, c, p] : a.ents) a_by_row[r].push_back({c, &p});
  for (const auto& [br, bc, bp] : b.ents) {
    auto it = a_by_row.find(bc);
    if (it == a_by_row.end()) continue;
    for (const auto& [ac, ap] : it->second) {
      auto key = std::make_pair(br, ac);
      auto found = acc.find(key);
      if (found == acc.end())
        acc.emplace(key, bp * (*ap));
      else
        found->second = found->second + bp * (*ap);
    }
  }
  SparsePolyMat out;
  out.nrows = b.nrows;
  out.ncols = a.ncols;
  for (auto& [key, p] : acc)
    if (!p.is_zero()) out.ents.emplace_back(key.first, key.second, p);
  return out;
}

bool sparse_is_zero(const SparsePolyMat& m) { return m.ents.empty(); }

SliceSide make_slice_side(const std::vector<int>& offsets, int q, int nvars) {
  SliceSide s;
  s.q = q;
  s.nvars = nvars;
  s.start.reserve(offsets.size());
  SliceIndexer ix(nvars);
  std::int64_t at = 0;
  for (int off : offsets) {
    int d = q - off;
    int ed = (d >= 0 && d % 2 == 0) ? d / 2 : -1;
    s.expdeg.push_back(ed);
    s.start.push_back(at);
    at += ix.size(ed);
  }
  s.dim = at;
  return s;
}

namespace {
const std::vector<Monomial>& cached_slice_basis(int expdeg, int nvars) {
  thread_local std::map<std::pair<int, int>, std::vector<Monomial>> cache;
  auto key = std::make_pair(expdeg, nvars);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, graded_slice_basis(2 * expdeg, nvars)).first;
  return it->second;
}
}  // namespace

template <class F>
std::vector<SparseVec<F>> slice_columns(const F& field, const SparsePolyMat& m,
                                        const SliceSide& rows, const SliceSide& cols) {
  if ((int)rows.expdeg.size() != m.nrows || (int)cols.expdeg.size() != m.ncols)
    throw std::invalid_argument("slice_columns: side mismatch");
  SliceIndexer ix(rows.nvars);
  // group entries by column class
  std::vector<std::vector<std::pair<int, const Poly*>>> by_col(m.ncols);
  for (const auto& [r, c, p] : m.ents) by_col[c].push_back({r, &p});

  std::vector<SparseVec<F>> out;
  out.reserve((size_t)cols.dim);
  for (int c = 0; c < m.ncols; ++c) {
    int ed = cols.expdeg[c];
    if (ed < 0) continue;
    const auto& monos = cached_slice_basis(ed, cols.nvars);
    for (const auto& mono : monos) {
      SparseVec<F> col;
      for (const auto& [r, p] : by_col[c]) {
        if (rows.expdeg[r] < 0) continue;
        for (const auto& [pm, coef] : p->terms) {
          Monomial target = mono.times(pm);
          if (target.total() != rows.expdeg[r]) continue;  // shouldn't happen
          std::int64_t row = rows.start[r] + ix.rank(target);
          col.emplace_back(row, field.from_rational(coef));
        }
      }
      std::sort(col.begin(), col.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      // merge duplicates
      SparseVec<F> merged;
      for (auto& e : col) {
        if (!merged.empty() && merged.back().first == e.first) {
          auto v = field.add(merged.back().second, e.second);
          if (field.nonzero(v))
            merged.back().second = v;
          else
            merged.pop_back();
        } else {
          merged.push_back(e);
        }
      }
      out.push_back(std::move(merged));
    }
  }
  return out;
}

template std::vector<SparseVec<RationalField>> slice_columns<RationalField>(
    const RationalField&, const SparsePolyMat&, const SliceSide&, const SliceSide&);
template std::vector<SparseVec<PrimeField>> slice_columns<PrimeField>(
    const PrimeField&, const SparsePolyMat&, const SliceSide&, const SliceSide&);

}  // namespace hhh
