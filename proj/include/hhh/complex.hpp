#pragma once
// Assembly of the truncated reduced Rouquier complex for positive braids (top
// three/four cohomological degrees, full complex for short words and 2-strand
// braids), the J-block decomposition of the last three terms, and the duality
// transpose computing negative braids.

#include <cstdint>
#include <string>
#include <vector>

#include "hhh/braid.hpp"
#include "hhh/diff_rules.hpp"
#include "hhh/sparse.hpp"

namespace hhh {

struct BasisElem {
  int term = 0;  // index into the position's term list
  HHClass cls;
  int offset = 0;  // Q-offset inside the complex
};

struct TruncatedComplex {
  int n = 2;
  int beta_length = 0;
  bool transposed = false;
  bool left_closed = false;   // no incoming differential at the lowest t
  bool right_closed = false;  // no outgoing differential at the highest t
  std::vector<int> t;                            // positions, ascending
  std::vector<std::vector<SubwordTerm>> terms;   // per position, lex-sorted
  // basis[pos][k]: graded basis of HH^k of the position
  std::vector<std::vector<std::vector<BasisElem>>> basis;
  // maps[pos][k]: differential pos -> pos+1 at HH^k
  std::vector<std::vector<SparsePolyMat>> maps;

  int nvars() const { return n - 1; }
  int position_of(int tt) const;
  std::vector<int> offsets(int pos, int k) const;
};

// Truncated complex of a positive braid: subwords of length <= 3 (the whole
// complex when |b| <= 3).  Verifies d^2 = 0 exactly.
TruncatedComplex build_truncated(const BraidWord& b);

// Full reduced complex of sigma_1^{+-m} in B_2 (dual transpose for -1).
TruncatedComplex build_two_strand_full(int m, int sign);

// Duality transpose: reversed arrows, HH index k -> (n-1)-k, offsets negated
// and shifted by 2(n-1), T-degrees negated.
TruncatedComplex dualize(const TruncatedComplex& c, int n);

// One J-block of the last three terms of HH^k: restricted differentials
// F_J -> G_J -> top.
struct JBlock {
  std::uint32_t J = 0;
  // global basis indices per position (the three last positions of c)
  std::vector<std::vector<int>> members;
  std::vector<SparsePolyMat> d;  // the two restricted maps
  std::vector<std::vector<int>> offsets;
};

// Partition of the last three terms by exterior support at |J| = k; raises if
// any cross-block entry is nonzero.
std::vector<JBlock> block_decompose(const TruncatedComplex& c, int k);

// Per-Hochschild-degree free complex view used by the homology engine.
struct FreeComplexK {
  int nvars = 1;
  bool left_closed = false, right_closed = false;
  std::vector<int> t;
  std::vector<std::vector<int>> offsets;
  std::vector<SparsePolyMat> d;
  int position_of(int tt) const;
};

FreeComplexK extract_k(const TruncatedComplex& c, int k);

std::string complex_to_json(const TruncatedComplex& c);

}  // namespace hhh
