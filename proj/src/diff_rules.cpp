#include "hhh/diff_rules.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hhh {

namespace {

struct Run {
  int letter;
  int start;  // index into the uncontracted word
  int len;
};

std::vector<Run> runs_of(const Word& w) {
  std::vector<Run> rs;
  for (int i = 0; i < (int)w.size();) {
    int j = i;
    while (j < (int)w.size() && w[j] == w[i]) ++j;
    rs.push_back({w[i], i, j - i});
    i = j;
  }
  return rs;
}

}  // namespace

std::optional<DiffComponent> classify_component(const SubwordTerm& x,
                                                const SubwordTerm& z) {
  if ((int)z.letters.size() != (int)x.letters.size() - 1) return std::nullopt;
  auto rs = runs_of(x.letters);
  std::optional<DiffComponent> found;
  for (int r = 0; r < (int)rs.size(); ++r) {
    // delete one letter of run r
    Word cand;
    cand.reserve(x.letters.size() - 1);
    for (int i = 0; i < (int)x.letters.size(); ++i)
      if (i != rs[r].start) cand.push_back(x.letters[i]);
    if (cand != z.letters) continue;
    DiffComponent comp;
    comp.strand = r + 1;
    comp.letter = rs[r].start + 1;
    comp.sign = rs[r].start % 2 == 0 ? 1 : -1;
    int k = rs[r].len - 1;
    if (k == 0) {
      bool trivalent = r > 0 && r + 1 < (int)rs.size() &&
                       rs[r - 1].letter == rs[r + 1].letter;
      comp.kind = trivalent ? DiffKind::TrivalentEnddot : DiffKind::Enddot;
    } else {
      comp.kind = k % 2 == 1 ? DiffKind::RunOdd : DiffKind::RunEven;
    }
    if (found) throw std::logic_error("classify_component: ambiguous deletion");
    found = comp;
  }
  return found;
}

namespace {

// Insert a freshly created dual root alpha_u^vee into the class, applying the
// one-color rewrite when the remaining word still carries color u.  The
// interleaving of hochdots and dual roots is by index, so no sign appears.
// Returns false when the term dies (repeated dual root).
bool settle_dual_root(HHClass& c, int u, Poly& coeff) {
  for (size_t i = 0; i < c.word.size(); ++i) {
    if (c.word[i] == u) {
      if (c.dec[i] == Decor::Hoch)
        throw std::logic_error("dual root collides with a hochschild strand");
      // one-color relation: Dot_u * a_u^vee = Hoch_u * alpha_u
      c.dec[i] = Decor::Hoch;
      coeff = coeff * Poly::variable(u);
      return true;
    }
  }
  std::uint32_t bit = 1u << (u - 1);
  if (c.ext & bit) return false;
  c.ext |= bit;
  return true;
}

HHClass strandless_copy(const HHClass& c, int strand /*1-based, removed*/) {
  HHClass r;
  r.cup = CupFlavor::None;
  r.ext = c.ext;
  int j = 0;
  for (int i = 0; i < (int)c.word.size(); ++i) {
    if (i + 1 == strand) continue;
    r.word.push_back(c.word[i]);
    r.dec[j++] = c.dec[i];
  }
  return r;
}

}  // namespace

std::vector<ImageTerm> apply_enddot(const HHClass& c, int strand, int n) {
  (void)n;
  if (c.cup != CupFlavor::None)
    throw std::invalid_argument("apply_enddot: cup classes use apply_cup_table");
  int u = c.word[strand - 1];
  HHClass t = strandless_copy(c, strand);
  Poly coeff = Poly::constant(1);
  if (c.dec[strand - 1] == Decor::Dot) {
    coeff = Poly::variable(u);  // barbell
  } else {
    if (!settle_dual_root(t, u, coeff)) return {};  // hochschild barbell
  }
  return {{t, coeff}};
}

std::vector<ImageTerm> apply_run_map(const HHClass& c, int strand, bool even, int n) {
  (void)n;
  if (!even) return {};
  if (c.cup != CupFlavor::None)
    throw std::logic_error("run map on a cup class cannot occur in these complexes");
  int u = c.word[strand - 1];
  return {{c, Poly::variable(u)}};
}

std::vector<ImageTerm> apply_trivalent_enddot(const HHClass& c, int n) {
  (void)n;
  if (c.cup != CupFlavor::None)
    throw std::invalid_argument("apply_trivalent_enddot: cup classes use apply_cup_table");
  if (c.word.size() != 3 || c.word[0] != c.word[2])
    throw std::invalid_argument("trivalent enddot needs a word of shape aba");
  int u = c.word[1];
  // merge the flanking strands: a hochschild dot survives the merge
  HHClass t;
  t.cup = CupFlavor::None;
  t.ext = c.ext;
  t.word = {c.word[0]};
  if (c.dec[0] == Decor::Hoch && c.dec[2] == Decor::Hoch)
    throw std::logic_error("double hochschild merge is not in any basis image");
  t.dec[0] = (c.dec[0] == Decor::Hoch || c.dec[2] == Decor::Hoch) ? Decor::Hoch
                                                                  : Decor::Dot;
  Poly coeff = Poly::constant(1);
  if (c.dec[1] == Decor::Dot) {
    coeff = Poly::variable(u);
  } else {
    if (!settle_dual_root(t, u, coeff)) return {};
  }
  return {{t, coeff}};
}

std::vector<ImageTerm> apply_cup_table(const HHClass& c, const DiffComponent& comp,
                                       const Word& target_word, int n) {
  (void)n;
  if (c.cup == CupFlavor::None)
    throw std::invalid_argument("apply_cup_table: not a cup class");
  int a = c.word[0], b = c.word[1];
  bool adjacent = std::abs(a - b) == 1;
  auto cls = [&](std::initializer_list<std::pair<int, Decor>> strands) {
    HHClass t;
    t.cup = CupFlavor::None;
    t.ext = c.ext;
    int i = 0;
    for (auto [letter, d] : strands) {
      t.word.push_back(letter);
      t.dec[i++] = d;
    }
    return t;
  };
  const Decor D = Decor::Dot, H = Decor::Hoch;
  Poly one = Poly::constant(1);
  std::vector<ImageTerm> out;
  // The three deletions from aba: third letter -> ab, first letter -> ba,
  // middle letter (trivalent) -> a.  Coefficients below are the total signed
  // values transcribed from the displayed matrices.
  if (comp.kind == DiffKind::TrivalentEnddot) {
    if (!adjacent) return {};  // distant pitchfork kills the cup
    switch (c.cup) {
      case CupFlavor::Plain: out.push_back({cls({{a, D}}), one}); break;
      case CupFlavor::HochOut:
      case CupFlavor::HochIn: out.push_back({cls({{a, H}}), one}); break;
      case CupFlavor::HochDouble: break;  // no tail term
      default: break;
    }
    return out;
  }
  if (comp.kind != DiffKind::Enddot)
    throw std::logic_error("cup classes only meet single-letter deletions");
  bool to_ab = target_word == Word{a, b};
  bool to_ba = target_word == Word{b, a};
  if (!to_ab && !to_ba) throw std::logic_error("cup component with unexpected target");
  switch (c.cup) {
    case CupFlavor::Plain:
      out.push_back({to_ab ? cls({{a, D}, {b, D}}) : cls({{b, D}, {a, D}}), one});
      break;
    case CupFlavor::HochOut:
      out.push_back({to_ab ? cls({{a, H}, {b, D}}) : cls({{b, D}, {a, H}}), one});
      break;
    case CupFlavor::HochIn:
      out.push_back({to_ab ? cls({{a, D}, {b, H}}) : cls({{b, H}, {a, D}}), one});
      break;
    case CupFlavor::HochDouble:
      out.push_back({to_ab ? cls({{a, H}, {b, H}}) : cls({{b, H}, {a, H}}), one});
      break;
    default:
      break;
  }
  return out;
}

std::vector<ImageTerm> apply_component(const HHClass& c, const DiffComponent& comp,
                                       const Word& target_word, int n) {
  if (c.cup != CupFlavor::None) return apply_cup_table(c, comp, target_word, n);
  std::vector<ImageTerm> raw;
  switch (comp.kind) {
    case DiffKind::Enddot: raw = apply_enddot(c, comp.strand, n); break;
    case DiffKind::RunOdd: raw = apply_run_map(c, comp.strand, false, n); break;
    case DiffKind::RunEven: raw = apply_run_map(c, comp.strand, true, n); break;
    case DiffKind::TrivalentEnddot: raw = apply_trivalent_enddot(c, n); break;
  }
  if (comp.sign < 0)
    for (auto& t : raw) t.coeff = -t.coeff;
  return raw;
}

HHMatrix hh_component_matrix(const SubwordTerm& x, const SubwordTerm& z, int k, int n) {
  auto comp = classify_component(x, z);
  if (!comp) throw std::invalid_argument("hh_component_matrix: not a deletion pair");
  HHMatrix m;
  m.cols = hh_basis(x.contracted, k, n);
  m.rows = hh_basis(z.contracted, k, n);
  for (const auto& c : m.cols) m.col_offsets.push_back(term_q_offset(x, c));
  for (const auto& r : m.rows) m.row_offsets.push_back(term_q_offset(z, r));
  std::map<std::uint64_t, int> row_index;
  for (int i = 0; i < (int)m.rows.size(); ++i) row_index[m.rows[i].key()] = i;
  for (int j = 0; j < (int)m.cols.size(); ++j) {
    for (const auto& img : apply_component(m.cols[j], *comp, z.contracted, n)) {
      if (img.coeff.is_zero()) continue;
      auto it = row_index.find(img.cls.key());
      if (it == row_index.end())
        throw std::logic_error("rule engine produced a non-basis class: " +
                               img.cls.label());
      m.entries.emplace_back(it->second, j, img.coeff);
    }
  }
  // homogeneity: every entry has the degree forced by its offsets
  for (const auto& [r, cidx, p] : m.entries) {
    int want = m.col_offsets[cidx] - m.row_offsets[r];
    if (p.homogeneous_qdeg() != want)
      throw std::logic_error("inhomogeneous differential entry");
  }
  return m;
}

}  // namespace hhh
