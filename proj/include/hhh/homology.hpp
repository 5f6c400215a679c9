#pragma once
// Exact graded cohomology of the assembled complexes: per-(A,Q) slice linear
// algebra, assembly into (A,T,Q) dimension tables, free-tail detection and
// theorem comparison.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hhh/braid.hpp"
#include "hhh/complex.hpp"
#include "hhh/field.hpp"

namespace hhh {

struct Tail {
  int a = 0, t = 0, qstart = 0, period = 2;
  bool operator==(const Tail& o) const {
    return a == o.a && t == o.t && qstart == o.qstart && period == o.period;
  }
};

struct Hypotheses {
  bool positive = false, negative = false, mixed = false;
  bool all_generators = false;
  std::vector<bool> stst_pairs;  // per adjacent pair (unsigned indices)
  bool stst_all = false;
  std::optional<int> csum_window;
};

Hypotheses analyze_hypotheses(const BraidWord& b);

struct TheoremVerdict {
  std::string name;
  std::string status;  // "match" | "mismatch" | "suppressed"
  std::string detail;
};

struct TriGradedTable {
  std::string braid;
  int n = 2;
  int writhe = 0;
  int components = 1;
  int qmax = 0;
  int qlo = 0, qhi = 0;  // window actually computed
  std::map<std::tuple<int, int, int>, int> entries;  // (A,T,Q) -> dim > 0
  std::vector<Tail> tails;
  Hypotheses hyp;
  std::vector<TheoremVerdict> theorems;

  int dim(int a, int t, int q) const {
    auto it = entries.find({a, t, q});
    return it == entries.end() ? 0 : it->second;
  }
  std::string to_json() const;
  static TriGradedTable from_json(const std::string& text);
  // equality of the mathematical content (entries, tails, window)
  bool same_data(const TriGradedTable& o) const {
    return entries == o.entries && tails == o.tails;
  }
};

// The linear map between graded slices at total degree q, as sparse columns
// over the rationals (rows and columns are monomial-times-class pairs).
std::vector<SparseVec<RationalField>> slice_matrix(const HHMatrix& m, int q,
                                                   int nvars);

// dim ker - rank(incoming) per Q-slice at homological position t of the
// HH^k complex; boundary positions without the needed differential are
// rejected unless the complex is closed on that side.
std::map<int, int> cohomology_dims(const FreeComplexK& c, int t, int qlo, int qhi,
                                   const FieldSpec& field);
// spec-default symmetric window |Q| <= qmax
std::map<int, int> cohomology_dims(const FreeComplexK& c, int t, int qmax,
                                   const FieldSpec& field);

// Whether multiplication by alpha_i: H^t_Q=q -> H^t_Q=q+2 is bijective.
bool tail_step_bijective(const FreeComplexK& c, int t, int q, int var_i);

// Arithmetic-progression free-tail detector over a computed window; the
// callback answers whether the alpha-multiplication step q -> q+2 is
// bijective (it is consulted only on the candidate run).
std::optional<Tail> detect_free_tail(const std::map<int, int>& dims, int qhi,
                                     const std::function<bool(int)>& step_bijective);

// Default window cutoff: all finite classes in the extreme degrees occur
// within |Q| <= |beta| + 4; tails need headroom for period-2 stability.
int default_qmax(int beta_length);

TriGradedTable extreme_hhh(const BraidWord& b, int qmax, const FieldSpec& field);
TriGradedTable negative_extreme_hhh(const BraidWord& a, int qmax, const FieldSpec& field);
TriGradedTable two_strand_hhh(int m, int sign, int qmax, const FieldSpec& field);

}  // namespace hhh
