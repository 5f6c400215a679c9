#pragma once
// Free R-module bases of HH^k for every Bott-Samelson object the truncated
// complex needs: the empty word, B_a, B_aB_b (adjacent or distant), B_aB_bB_a
// and B_aB_bB_c, each tensored with the exterior algebra on the unused dual
// roots.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hhh/braid.hpp"

namespace hhh {

enum class Decor : std::uint8_t { Dot, Hoch };
enum class CupFlavor : std::uint8_t { None, Plain, HochOut, HochIn, HochDouble };

struct HHClass {
  Word word;                        // contracted word, length <= 3
  CupFlavor cup = CupFlavor::None;  // only for words of shape aba
  std::array<Decor, 3> dec{Decor::Dot, Decor::Dot, Decor::Dot};
  std::uint32_t ext = 0;            // dual roots, disjoint from word letters

  int a_degree() const;
  int q_intrinsic() const;
  std::uint64_t key() const;  // identity within a fixed word
  std::string label() const;
  bool operator==(const HHClass& o) const {
    return word == o.word && key() == o.key();
  }
};

// Exterior support: hochdot strand indices union ext indices, as a bitmask.
std::uint32_t class_support(const HHClass& c);

// The ordered basis of HH^k of BS(word) over R = k[alpha_1..alpha_{n-1}].
// word must be contracted and of one of the supported shapes; 0 <= k <= n-1.
std::vector<HHClass> hh_basis(const Word& word, int k, int n);

// Total Q-offset of a class inside the complex: intrinsic degree minus shift
// minus cohomological degree (a summand k(m) has dimension 1 in Q = -m).
int term_q_offset(const SubwordTerm& term, const HHClass& cls);

}  // namespace hhh
