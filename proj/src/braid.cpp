#include "hhh/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hhh {

bool BraidWord::is_positive() const {
  return std::all_of(letters.begin(), letters.end(), [](int x) { return x > 0; });
}

bool BraidWord::is_negative() const {
  return std::all_of(letters.begin(), letters.end(), [](int x) { return x < 0; });
}

Word BraidWord::index_word() const {
  Word w;
  w.reserve(letters.size());
  for (int x : letters) w.push_back(x > 0 ? x : -x);
  return w;
}

std::string BraidWord::text() const {
  std::string s;
  for (int x : letters) {
    if (!s.empty()) s += " ";
    s += std::to_string(x);
  }
  return s;
}

BraidWord parse_braid(const std::string& text, int n) {
  if (n < 2) throw BraidParseError("strand count must be at least 2", 0);
  BraidWord b;
  b.n = n;
  std::istringstream in(text);
  std::string tok;
  int pos = 0;
  while (in >> tok) {
    ++pos;
    int v;
    try {
      size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw BraidParseError("token '" + tok + "' is not an integer", pos);
    }
    if (v == 0) throw BraidParseError("zero generator index", pos);
    if (std::abs(v) >= n)
      throw BraidParseError("generator index " + std::to_string(v) +
                                " out of range for n=" + std::to_string(n),
                            pos);
    b.letters.push_back(v);
  }
  return b;
}

int writhe(const BraidWord& b) {
  int e = 0;
  for (int x : b.letters) e += x > 0 ? 1 : -1;
  return e;
}

int closure_components(const BraidWord& b) {
  std::vector<int> perm(b.n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int x : b.letters) {
    int i = std::abs(x) - 1;
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(b.n, false);
  int cycles = 0;
  for (int i = 0; i < b.n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
  }
  return cycles;
}

BraidWord mirror(const BraidWord& b) {
  BraidWord m = b;
  for (int& x : m.letters) x = -x;
  return m;
}

BraidWord cyclic_shift(const BraidWord& b, int k) {
  BraidWord r = b;
  int len = b.length();
  if (len == 0) return r;
  int s = ((k % len) + len) % len;
  std::rotate(r.letters.begin(), r.letters.begin() + s, r.letters.end());
  return r;
}

std::optional<BraidWord> destabilize(const BraidWord& b) {
  int top = b.n - 1;
  int count = 0, at = -1;
  for (int i = 0; i < b.length(); ++i)
    if (std::abs(b.letters[i]) == top) {
      ++count;
      at = i;
    }
  if (count != 1 || b.n < 2) return std::nullopt;
  BraidWord r;
  r.n = b.n - 1;
  for (int i = 0; i < b.length(); ++i)
    if (i != at) r.letters.push_back(b.letters[i]);
  return r;
}

static bool embeds(const Word& host, const Word& pattern) {
  size_t j = 0;
  for (size_t i = 0; i < host.size() && j < pattern.size(); ++i)
    if (host[i] == pattern[j]) ++j;
  return j == pattern.size();
}

bool contains_subexpression(const BraidWord& b, const Word& pattern) {
  return embeds(b.index_word(), pattern);
}

bool uses_all_generators(const BraidWord& b) {
  std::vector<bool> seen(b.n, false);
  for (int x : b.letters) seen[std::abs(x)] = true;
  for (int i = 1; i <= b.n - 1; ++i)
    if (!seen[i]) return false;
  return true;
}

std::vector<bool> stst_pair_flags(const BraidWord& b) {
  std::vector<bool> flags;
  Word w = b.index_word();
  for (int i = 1; i <= b.n - 2; ++i) {
    Word p1 = {i, i + 1, i, i + 1};
    Word p2 = {i + 1, i, i + 1, i};
    flags.push_back(embeds(w, p1) || embeds(w, p2));
  }
  return flags;
}

bool primeness_criterion(const BraidWord& b) {
  if (!b.is_positive()) throw std::invalid_argument("primeness_criterion: braid must be positive");
  auto flags = stst_pair_flags(b);
  return std::all_of(flags.begin(), flags.end(), [](bool f) { return f; });
}

std::optional<int> connect_sum_window(const BraidWord& b) {
  for (int k = 2; k <= b.n - 1; ++k) {
    int last_low = -1, first_high = b.length();
    for (int i = 0; i < b.length(); ++i) {
      if (std::abs(b.letters[i]) < k)
        last_low = i;
      else if (first_high == b.length())
        first_high = i;
    }
    if (last_low < first_high) return k;
  }
  return std::nullopt;
}

std::pair<Word, int> contract_word(const Word& w) {
  Word c;
  for (int x : w)
    if (c.empty() || c.back() != x) c.push_back(x);
  return {c, (int)c.size() - (int)w.size()};
}

std::vector<SubwordTerm> subwords_up_to_length(const BraidWord& b, int L) {
  if (!b.is_positive())
    throw std::invalid_argument("subwords_up_to_length: braid must be positive");
  std::set<Word> words;
  words.insert(Word{});
  for (int x : b.letters) {
    std::set<Word> grown;
    for (const auto& w : words) {
      if ((int)w.size() < L) {
        Word e = w;
        e.push_back(x);
        grown.insert(std::move(e));
      }
    }
    words.insert(grown.begin(), grown.end());
  }
  std::vector<SubwordTerm> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    SubwordTerm t;
    t.letters = w;
    auto [c, shift] = contract_word(w);
    t.contracted = std::move(c);
    t.shift = shift;
    t.cohom_degree = b.length() - (int)w.size();
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hhh
