#pragma once
// Hochschild-level evaluation of the reduced Rouquier differential: component
// classification (which letter was deleted, with the alternating sign), the
// local rules (barbell, Hochschild barbell, one-color rewrite, trivalent
// merge, odd/even run maps) and the normative cup-image tables, assembled
// into matrices over R between HH bases.

#include <optional>
#include <vector>

#include "hhh/hh_basis.hpp"
#include "hhh/ring.hpp"

namespace hhh {

enum class DiffKind { Enddot, RunOdd, RunEven, TrivalentEnddot };

struct DiffComponent {
  int strand = 0;  // 1-based position in the source's contracted word
  int letter = 0;  // 1-based start of the deleted run in the uncontracted word
  DiffKind kind = DiffKind::Enddot;
  int sign = 1;  // (-1)^{|w1|}
};

// The differential component from C_x to C_z, or nullopt when z is not a
// single-letter deletion of x.
std::optional<DiffComponent> classify_component(const SubwordTerm& x,
                                                const SubwordTerm& z);

// One summand of an image: a basis class of the target word with an R
// coefficient.
struct ImageTerm {
  HHClass cls;
  Poly coeff;
};

// Signed image of a source class under a component.  target_word is the
// contracted word of z; n fixes the ambient ring.
std::vector<ImageTerm> apply_component(const HHClass& c, const DiffComponent& comp,
                                       const Word& target_word, int n);

// Individual rules, exposed for direct testing.  These return the raw
// (unsigned) images; apply_component applies the component sign for non-cup
// classes and uses the already-signed tables for cups.
std::vector<ImageTerm> apply_enddot(const HHClass& c, int strand, int n);
std::vector<ImageTerm> apply_run_map(const HHClass& c, int strand, bool even, int n);
std::vector<ImageTerm> apply_trivalent_enddot(const HHClass& c, int n);
std::vector<ImageTerm> apply_cup_table(const HHClass& c, const DiffComponent& comp,
                                       const Word& target_word, int n);

// Matrix of HH^k applied to the signed component d_x^z, rows and columns in
// canonical hh_basis order.  Every entry is homogeneous of the degree forced
// by the row/column offsets.
struct HHMatrix {
  std::vector<HHClass> rows, cols;
  std::vector<int> row_offsets, col_offsets;  // Q-offsets within the complex
  // dense-by-index sparse storage: (row, col, entry)
  std::vector<std::tuple<int, int, Poly>> entries;
};

HHMatrix hh_component_matrix(const SubwordTerm& x, const SubwordTerm& z, int k, int n);

}  // namespace hhh
