#pragma once
// Koszul complexes K(s_1..s_r) over R with the signed contraction
// differential, their graded cohomology, and the signed-permutation matching
// of J-blocks of the main complex onto Koszul tails.

#include <map>
#include <string>
#include <vector>

#include "hhh/complex.hpp"
#include "hhh/field.hpp"
#include "hhh/ring.hpp"
#include "hhh/sparse.hpp"

namespace hhh {

struct KoszulComplex {
  int nvars = 1;
  std::vector<Poly> seq;  // homogeneous entries s_1..s_r
  std::vector<int> degs;  // their Q-degrees

  int r() const { return (int)seq.size(); }
  // free complex with Lambda^j at t = -j; R sits at t = 0
  FreeComplexK to_free() const;
  // ordered basis of Lambda^j: index subsets, combination-lex
  std::vector<std::vector<int>> wedge_basis(int j) const;
};

KoszulComplex build_koszul(const std::vector<Poly>& seq, int nvars);

// cohomology dims at homological position j (R is j = 0)
std::map<int, int> koszul_cohomology(const KoszulComplex& k, int position, int qmax,
                                     const FieldSpec& field);

struct KoszulMatch {
  bool ok = false;
  std::string detail;
  // e-index assigned to each G-class, sign per G-class and per kept F-class
  std::vector<int> g_index;
  std::vector<int> g_sign;
  std::vector<int> f_sign;
};

// Identify the last three terms of a J-block with those of
// K({alpha_i}_{i not in J}, 1,...,1) via a signed permutation.  When both
// orderings of a pair occur the duplicate column is checked to be the
// negative of its partner and dropped.
KoszulMatch match_to_koszul(const JBlock& block, const TruncatedComplex& c, int k);

}  // namespace hhh
