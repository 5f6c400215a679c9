#pragma once
// Sparse matrices over R, their Q-graded field slices, and exact sparse
// elimination (deterministic smallest-pivot-first) used for all rank, kernel
// and quotient computations.

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "hhh/field.hpp"
#include "hhh/ring.hpp"

namespace hhh {

struct SparsePolyMat {
  int nrows = 0, ncols = 0;
  std::vector<std::tuple<int, int, Poly>> ents;  // (row, col, entry)

  void add(int r, int c, const Poly& p) {
    if (!p.is_zero()) ents.emplace_back(r, c, p);
  }
  SparsePolyMat transposed() const {
    SparsePolyMat t;
    t.nrows = ncols;
    t.ncols = nrows;
    for (const auto& [r, c, p] : ents) t.ents.emplace_back(c, r, p);
    return t;
  }
};

// product b*a (apply a, then b); used for d^2 = 0 verification
SparsePolyMat sparse_mul(const SparsePolyMat& b, const SparsePolyMat& a);
bool sparse_is_zero(const SparsePolyMat& m);

// The field slice of a free graded module at internal degree q: one block of
// monomials per class, ordered class-major then monomial-lex.
struct SliceSide {
  int q = 0, nvars = 1;
  std::vector<int> expdeg;         // per class; -1 when empty
  std::vector<std::int64_t> start;  // per class block start
  std::int64_t dim = 0;
};

SliceSide make_slice_side(const std::vector<int>& offsets, int q, int nvars);

template <class F>
using SparseVec = std::vector<std::pair<std::int64_t, typename F::Elem>>;

// columns of the slice of m at degree q (rows/cols sides must match m)
template <class F>
std::vector<SparseVec<F>> slice_columns(const F& field, const SparsePolyMat& m,
                                        const SliceSide& rows, const SliceSide& cols);

// Column-space elimination with pivots at the smallest available row index.
template <class F>
struct Eliminator {
  const F& field;
  std::map<std::int64_t, SparseVec<F>> pivots;  // pivot row -> normalized column
  int rank = 0;

  explicit Eliminator(const F& f) : field(f) {}

  // in-place a -= s * b, sorted-merge through a reused scratch buffer
  mutable SparseVec<F> scratch;
  void axpy(SparseVec<F>& a, const typename F::Elem& s, const SparseVec<F>& b) const {
    scratch.clear();
    scratch.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        scratch.push_back(std::move(a[i++]));
      } else if (i == a.size() || b[j].first < a[i].first) {
        scratch.emplace_back(b[j].first, field.neg(field.mul(s, b[j].second)));
        ++j;
      } else {
        auto v = field.sub(a[i].second, field.mul(s, b[j].second));
        if (field.nonzero(v)) scratch.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    a.swap(scratch);
  }

  // reduce against current pivots without inserting
  void reduce(SparseVec<F>& col) const {
    while (!col.empty()) {
      auto it = pivots.find(col.front().first);
      if (it == pivots.end()) return;
      axpy(col, col.front().second, it->second);
    }
  }

  // returns true when the column added a new pivot
  bool add(SparseVec<F> col) {
    reduce(col);
    if (col.empty()) return false;
    auto lead = col.front();
    for (auto& e : col) e.second = field.div(e.second, lead.second);
    pivots.emplace(lead.first, std::move(col));
    ++rank;
    return true;
  }
};

template <class F>
int sparse_rank(const F& field, std::vector<SparseVec<F>>& cols) {
  Eliminator<F> e(field);
  for (auto& c : cols) e.add(std::move(c));
  return e.rank;
}

// Kernel basis of the matrix whose columns are given, as coordinate vectors
// in the column index space (augmented elimination).
template <class F>
std::vector<SparseVec<F>> kernel_basis(const F& field,
                                       const std::vector<SparseVec<F>>& cols,
                                       std::int64_t row_dim) {
  Eliminator<F> e(field);
  std::vector<SparseVec<F>> kernel;
  for (std::int64_t j = 0; j < (std::int64_t)cols.size(); ++j) {
    // augmented column: rows then unit tail at row_dim + j
    SparseVec<F> aug = cols[j];
    aug.emplace_back(row_dim + j, field.from_rational(Rational(1)));
    // reduce only the genuine-row part
    while (!aug.empty() && aug.front().first < row_dim) {
      auto it = e.pivots.find(aug.front().first);
      if (it == e.pivots.end()) break;
      e.axpy(aug, aug.front().second, it->second);
    }
    if (aug.empty() || aug.front().first >= row_dim) {
      // column is dependent: the tail is a kernel vector
      SparseVec<F> kv;
      for (auto& [r, v] : aug) kv.emplace_back(r - row_dim, v);
      kernel.push_back(std::move(kv));
    } else {
      auto lead = aug.front();
      for (auto& t : aug) t.second = field.div(t.second, lead.second);
      e.pivots.emplace(lead.first, std::move(aug));
      ++e.rank;
    }
  }
  return kernel;
}

}  // namespace hhh
