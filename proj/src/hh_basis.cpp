#include "hhh/hh_basis.hpp"

#include <bit>
#include <stdexcept>

#include "hhh/ring.hpp"

namespace hhh {

int HHClass::a_degree() const {
  int a = std::popcount(ext);
  switch (cup) {
    case CupFlavor::None:
      for (size_t i = 0; i < word.size(); ++i)
        if (dec[i] == Decor::Hoch) ++a;
      return a;
    case CupFlavor::Plain:
      return a;
    case CupFlavor::HochOut:
    case CupFlavor::HochIn:
      return a + 1;
    case CupFlavor::HochDouble:
      return a + 2;
  }
  return a;
}

int HHClass::q_intrinsic() const {
  int q = -2 * std::popcount(ext);
  switch (cup) {
    case CupFlavor::None:
      for (size_t i = 0; i < word.size(); ++i)
        q += dec[i] == Decor::Dot ? 1 : -3;
      return q;
    case CupFlavor::Plain:
      return q + 1;
    case CupFlavor::HochOut:
    case CupFlavor::HochIn:
      return q - 3;
    case CupFlavor::HochDouble:
      return q - 7;
  }
  return q;
}

std::uint64_t HHClass::key() const {
  std::uint64_t k = (std::uint64_t)cup;
  for (int i = 0; i < 3; ++i)
    k |= (std::uint64_t)(cup == CupFlavor::None && i < (int)word.size() &&
                                 dec[i] == Decor::Hoch
                             ? 1
                             : 0)
         << (3 + i);
  k |= (std::uint64_t)ext << 8;
  return k;
}

std::string HHClass::label() const {
  std::string s;
  if (cup == CupFlavor::None) {
    for (size_t i = 0; i < word.size(); ++i) {
      if (!s.empty()) s += ".";
      s += (dec[i] == Decor::Dot ? "D" : "H") + std::to_string(word[i]);
    }
    if (s.empty()) s = "1";
  } else {
    switch (cup) {
      case CupFlavor::Plain: s = "cupP"; break;
      case CupFlavor::HochOut: s = "cupO"; break;
      case CupFlavor::HochIn: s = "cupI"; break;
      case CupFlavor::HochDouble: s = "cupD"; break;
      default: break;
    }
    s += "(" + std::to_string(word[0]) + "," + std::to_string(word[1]) + ")";
  }
  std::string e = ext_mask_str(ext);
  if (!e.empty()) s += "|" + e;
  return s;
}

std::uint32_t class_support(const HHClass& c) {
  std::uint32_t s = c.ext;
  switch (c.cup) {
    case CupFlavor::None:
      for (size_t i = 0; i < c.word.size(); ++i)
        if (c.dec[i] == Decor::Hoch) s |= 1u << (c.word[i] - 1);
      break;
    case CupFlavor::Plain:
      break;
    case CupFlavor::HochOut:
    case CupFlavor::HochIn:
      // one hochschild dot riding the outer color
      s |= 1u << (c.word[0] - 1);
      break;
    case CupFlavor::HochDouble:
      s |= (1u << (c.word[0] - 1)) | (1u << (c.word[1] - 1));
      break;
  }
  return s;
}

namespace {

enum class Shape { Empty, Single, Pair, ABA, ABC };

Shape word_shape(const Word& w) {
  switch (w.size()) {
    case 0: return Shape::Empty;
    case 1: return Shape::Single;
    case 2:
      if (w[0] == w[1]) throw std::invalid_argument("hh_basis: word not contracted");
      return Shape::Pair;
    case 3:
      if (w[0] == w[1] || w[1] == w[2])
        throw std::invalid_argument("hh_basis: word not contracted");
      if (w[0] == w[2]) return Shape::ABA;
      return Shape::ABC;
    default:
      throw std::invalid_argument("hh_basis: words longer than 3 unsupported");
  }
}

// Core classes of HH^j(BS(word)) over the parabolic subring on the word's own
// colors, in the order the basis lemmas display them.
std::vector<HHClass> core_classes(const Word& w, Shape shape, int j) {
  std::vector<HHClass> out;
  auto mk = [&](CupFlavor cup, std::initializer_list<Decor> ds) {
    HHClass c;
    c.word = w;
    c.cup = cup;
    int i = 0;
    for (Decor d : ds) c.dec[i++] = d;
    out.push_back(c);
  };
  const Decor D = Decor::Dot, H = Decor::Hoch;
  switch (shape) {
    case Shape::Empty:
      if (j == 0) mk(CupFlavor::None, {});
      break;
    case Shape::Single:
      if (j == 0) mk(CupFlavor::None, {D});
      if (j == 1) mk(CupFlavor::None, {H});
      break;
    case Shape::Pair:
      if (j == 0) mk(CupFlavor::None, {D, D});
      if (j == 1) {
        mk(CupFlavor::None, {H, D});
        mk(CupFlavor::None, {D, H});
      }
      if (j == 2) mk(CupFlavor::None, {H, H});
      break;
    case Shape::ABA:
      if (j == 0) {
        mk(CupFlavor::None, {D, D, D});
        mk(CupFlavor::Plain, {});
      }
      if (j == 1) {
        mk(CupFlavor::None, {H, D, D});
        mk(CupFlavor::HochOut, {});
        mk(CupFlavor::HochIn, {});
        mk(CupFlavor::None, {D, H, D});
      }
      if (j == 2) {
        mk(CupFlavor::HochDouble, {});
        mk(CupFlavor::None, {H, H, D});
      }
      break;
    case Shape::ABC:
      if (j == 0) mk(CupFlavor::None, {D, D, D});
      if (j == 1) {
        mk(CupFlavor::None, {H, D, D});
        mk(CupFlavor::None, {D, H, D});
        mk(CupFlavor::None, {D, D, H});
      }
      if (j == 2) {
        mk(CupFlavor::None, {H, H, D});
        mk(CupFlavor::None, {H, D, H});
        mk(CupFlavor::None, {D, H, H});
      }
      if (j == 3) mk(CupFlavor::None, {H, H, H});
      break;
  }
  return out;
}

int max_core_degree(Shape shape) {
  switch (shape) {
    case Shape::Empty: return 0;
    case Shape::Single: return 1;
    case Shape::Pair:
    case Shape::ABA: return 2;
    case Shape::ABC: return 3;
  }
  return 0;
}

// subsets of `avail` (bitmask) with popcount == size, in increasing mask
// order, i.e. lexicographic on the sorted index lists
void ext_monomials(std::uint32_t avail, int size, std::vector<std::uint32_t>& out) {
  std::vector<int> idx;
  for (int i = 0; i < 32; ++i)
    if (avail & (1u << i)) idx.push_back(i);
  if (size < 0 || size > (int)idx.size()) return;
  std::vector<int> pick(size);
  auto rec = [&](auto&& self, int pos, int from) -> void {
    if (pos == size) {
      std::uint32_t m = 0;
      for (int p : pick) m |= 1u << p;
      out.push_back(m);
      return;
    }
    for (int i = from; i < (int)idx.size(); ++i) {
      pick[pos] = idx[i];
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::vector<HHClass> hh_basis(const Word& word, int k, int n) {
  Shape shape = word_shape(word);
  if (k < 0 || k > n - 1) return {};
  std::uint32_t used = 0;
  for (int x : word) {
    if (x < 1 || x > n - 1) throw std::invalid_argument("hh_basis: letter out of range");
    used |= 1u << (x - 1);
  }
  std::uint32_t avail = ((n - 1) >= 32 ? ~0u : ((1u << (n - 1)) - 1)) & ~used;

  std::vector<HHClass> out;
  for (int j = std::min(k, max_core_degree(shape)); j >= 0; --j) {
    auto cores = core_classes(word, shape, j);
    if (cores.empty()) continue;
    std::vector<std::uint32_t> exts;
    ext_monomials(avail, k - j, exts);
    for (const auto& core : cores)
      for (std::uint32_t e : exts) {
        HHClass c = core;
        c.ext = e;
        out.push_back(c);
      }
  }
  return out;
}

int term_q_offset(const SubwordTerm& term, const HHClass& cls) {
  return cls.q_intrinsic() - term.shift - term.cohom_degree;
}

}  // namespace hhh
