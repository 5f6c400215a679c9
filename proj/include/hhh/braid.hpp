#pragma once
// Braid words on n strands and the structural predicates used by the closure
// results: Markov moves, subexpressions, subword enumeration, run
// contraction, connect-sum windows and the primeness criterion.

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hhh {

using Word = std::vector<int>;  // positive word: generator indices, 1-based

struct BraidWord {
  int n = 2;                 // strand count, >= 2
  std::vector<int> letters;  // signed indices: +i or -i, |i| in [1, n-1]

  int length() const { return (int)letters.size(); }
  bool is_positive() const;
  bool is_negative() const;
  Word index_word() const;  // |letters|
  std::string text() const;
};

struct BraidParseError : std::runtime_error {
  int token_position;
  BraidParseError(const std::string& msg, int pos)
      : std::runtime_error(msg), token_position(pos) {}
};

// Whitespace-separated nonzero integers; sign = crossing sign.
BraidWord parse_braid(const std::string& text, int n);

int writhe(const BraidWord& b);
int closure_components(const BraidWord& b);
BraidWord mirror(const BraidWord& b);
BraidWord cyclic_shift(const BraidWord& b, int k);

// Markov II when sigma_{n-1}^{+-1} occurs exactly once.
std::optional<BraidWord> destabilize(const BraidWord& b);

// Order-preserving, not necessarily contiguous embedding of pattern into the
// index word of b.
bool contains_subexpression(const BraidWord& b, const Word& pattern);

bool uses_all_generators(const BraidWord& b);

// Per adjacent pair i: does b contain s_i s_{i+1} s_i s_{i+1} or its flip as
// a subexpression?  (indices taken unsigned)
std::vector<bool> stst_pair_flags(const BraidWord& b);

// Combinatorial condition of the primeness criterion: all stst_pair_flags
// hold.  Rejects non-positive input.
bool primeness_criterion(const BraidWord& b);

// Smallest k in [2, n-1] with every letter of index < k before every letter
// of index >= k.
std::optional<int> connect_sum_window(const BraidWord& b);

// Collapse equal adjacent runs; returns (contracted, shift = |w*| - |w|).
std::pair<Word, int> contract_word(const Word& w);

struct SubwordTerm {
  Word letters;     // the subword x
  Word contracted;  // x*
  int shift = 0;    // |x*| - |x|, <= 0
  int cohom_degree = 0;  // |beta| - |x|
  bool operator<(const SubwordTerm& o) const { return letters < o.letters; }
};

// Distinct words of length <= L realizable as subexpressions of the positive
// braid b, each wrapped with its contraction data.  Rejects non-positive b.
std::vector<SubwordTerm> subwords_up_to_length(const BraidWord& b, int L);

}  // namespace hhh
