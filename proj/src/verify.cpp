#include "hhh/verify.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hhh/complex.hpp"
#include "hhh/homology.hpp"
#include "hhh/invariant.hpp"
#include "hhh/koszul.hpp"
#include "vendor_json.hpp"

#ifndef HHH_FIXTURE_DIR
#define HHH_FIXTURE_DIR "tests/fixtures"
#endif

namespace hhh {

namespace {

Poly parse_entry(const std::string& s) {
  if (s == "0") return Poly::zero();
  if (s == "1") return Poly::constant(1);
  if (s == "-1") return Poly::constant(-1);
  bool neg = s[0] == '-';
  std::string body = neg ? s.substr(1) : s;
  if (body.size() >= 2 && body[0] == 'a') {
    int i = std::stoi(body.substr(1));
    Poly p = Poly::variable(i);
    return neg ? -p : p;
  }
  throw std::invalid_argument("fixture entry '" + s + "' not understood");
}

Word parse_word(const std::string& s) {
  Word w;
  for (char ch : s) w.push_back(ch - '0');
  return w;
}

std::string word_str(const Word& w) {
  std::string s;
  for (int x : w) s += std::to_string(x);
  return s;
}

}  // namespace

BraidWord random_positive_with_hypotheses(std::mt19937_64& rng, int n, int max_len) {
  BraidWord b;
  b.n = n;
  for (int i = 1; i <= n - 2; ++i)
    for (int x : {i, i + 1, i, i + 1}) b.letters.push_back(x);
  if (n == 2) b.letters = {1, 1, 1};
  int skeleton = b.length();
  std::uniform_int_distribution<int> len_dist(skeleton, std::max(skeleton, max_len));
  int target = len_dist(rng);
  std::uniform_int_distribution<int> letter(1, n - 1);
  while (b.length() < target) {
    std::uniform_int_distribution<int> at(0, b.length());
    b.letters.insert(b.letters.begin() + at(rng), letter(rng));
  }
  return b;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "fixtures",          "theorems-positive", "theorems-negative", "koszul",
      "two-strand",        "markov",            "mirror"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "fixtures") return suite_fixtures(opt);
  if (name == "theorems-positive") return suite_theorems_positive(opt);
  if (name == "theorems-negative") return suite_theorems_negative(opt);
  if (name == "koszul") return suite_koszul(opt);
  if (name == "two-strand") return suite_two_strand(opt);
  if (name == "markov") return suite_markov(opt);
  if (name == "mirror") return suite_mirror(opt);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteResult suite_fixtures(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "fixtures";
  std::string dir = opt.fixture_dir.empty() ? HHH_FIXTURE_DIR : opt.fixture_dir;
  for (const std::string& file : {"adjacent_3strand.json", "distant_pair.json"}) {
    std::ifstream in(dir + "/" + file);
    if (!in) {
      res.fail("cannot open fixture " + dir + "/" + file);
      continue;
    }
    nlohmann::json j;
    in >> j;
    BraidWord b = parse_braid(j.at("braid").get<std::string>(), j.at("n").get<int>());
    TruncatedComplex c = build_truncated(b);
    for (const auto& jm : j.at("matrices")) {
      int k = jm.at("k").get<int>();
      int source_len = jm.at("source_len").get<int>();
      int p = c.position_of(b.length() - source_len);
      const SparsePolyMat& mat = c.maps[p][k];
      // map fixture labels to global indices
      auto locate = [&](int pos, const std::string& word, const std::string& label) {
        for (int i = 0; i < (int)c.basis[pos][k].size(); ++i) {
          const auto& be = c.basis[pos][k][i];
          if (word_str(c.terms[pos][be.term].letters) == word &&
              be.cls.label() == label)
            return i;
        }
        throw std::runtime_error("fixture class not found: " + word + " " + label);
      };
      std::vector<int> cols, rows;
      for (const auto& jc : jm.at("cols"))
        cols.push_back(locate(p, jc[0].get<std::string>(), jc[1].get<std::string>()));
      for (const auto& jr : jm.at("rows"))
        rows.push_back(locate(p + 1, jr[0].get<std::string>(), jr[1].get<std::string>()));
      std::map<std::pair<int, int>, Poly> got;
      std::set<int> colset(cols.begin(), cols.end());
      std::set<int> rowset(rows.begin(), rows.end());
      for (const auto& [r, cc, poly] : mat.ents) {
        if (!colset.count(cc)) continue;
        if (!rowset.count(r)) {
          res.fail(file + ": k=" + std::to_string(k) +
                   " entry leaves the fixture row set");
          continue;
        }
        got[{r, cc}] = poly;
      }
      const auto& ent = jm.at("entries");
      for (size_t ri = 0; ri < rows.size(); ++ri)
        for (size_t ci = 0; ci < cols.size(); ++ci) {
          Poly want = parse_entry(ent[ri][ci].get<std::string>());
          Poly have;
          auto it = got.find({rows[ri], cols[ci]});
          if (it != got.end()) have = it->second;
          ++res.checks;
          if (!(have == want))
            res.fail(file + ": k=" + std::to_string(k) + " len" +
                     std::to_string(source_len) + " entry (" + std::to_string(ri) +
                     "," + std::to_string(ci) + ") = " + have.str() +
                     ", fixture says " + want.str());
        }
    }
  }
  res.note("entrywise checks: " + std::to_string(res.checks));
  return res;
}

namespace {

// closed-form sec-2.5 tables on the non-overlapping clauses (i < m), plus the
// free tail at i = m for even m
struct TwoStrandExpected {
  std::map<std::tuple<int, int, int>, int> entries;
  std::vector<Tail> tails;
};

TwoStrandExpected two_strand_expected(int m, int sign) {
  TwoStrandExpected e;
  if (sign > 0) {
    // A=0: k(m) at i=0, k(m-2i) for even 2 <= i < m; A=1: k(m-2i+4) there.
    // For even m the i=m slice is the free tail k[a](-m) resp. k[a](-m+4);
    // the table's overlapping finite clause at i=m is not compared.
    e.entries[{0, m, -m}] = 1;
    for (int i = 2; i < m; i += 2) {
      e.entries[{0, m - i, 2 * i - m}] = 1;
      e.entries[{1, m - i, 2 * i - m - 4}] = 1;
    }
    if (m % 2 == 0) {
      e.tails.push_back(Tail{0, 0, m, 2});
      e.tails.push_back(Tail{1, 0, m - 4, 2});
    }
  } else {
    // A=0: k(-m+2i-2) for odd 3 <= i <= m; A=1: k(-m+2i+2) for odd 1 <= i <= m
    for (int i = 3; i <= m; i += 2) e.entries[{0, -m + i, m - 2 * i + 2}] = 1;
    for (int i = 1; i <= m; i += 2) e.entries[{1, -m + i, m - 2 * i - 2}] = 1;
    if (m % 2 == 0) {
      e.tails.push_back(Tail{0, 0, 2 - m, 2});
      e.tails.push_back(Tail{1, 0, -m - 2, 2});
    }
  }
  return e;
}

}  // namespace

SuiteResult suite_two_strand(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "two-strand";
  for (int m = 1; m <= 8; ++m) {
    for (int sign : {+1, -1}) {
      int qmax = 2 * m + 10;
      TriGradedTable tab = two_strand_hhh(m, sign, qmax, opt.field);
      TwoStrandExpected want = two_strand_expected(m, sign);
      ++res.checks;
      // compare the i < m clauses exactly, and for odd m the i = m clause too
      for (const auto& [key, dim] : want.entries) {
        if (tab.dim(std::get<0>(key), std::get<1>(key), std::get<2>(key)) != dim)
          res.fail("m=" + std::to_string(m * sign) + ": missing class at (A=" +
                   std::to_string(std::get<0>(key)) + ",T=" +
                   std::to_string(std::get<1>(key)) + ",Q=" +
                   std::to_string(std::get<2>(key)) + ")");
      }
      for (const auto& [key, dim] : tab.entries) {
        if (!want.entries.count(key))
          res.fail("m=" + std::to_string(m * sign) + ": unexpected class at (A=" +
                   std::to_string(std::get<0>(key)) + ",T=" +
                   std::to_string(std::get<1>(key)) + ",Q=" +
                   std::to_string(std::get<2>(key)) + ") dim " + std::to_string(dim));
      }
      std::vector<Tail> tails = tab.tails;
      std::sort(tails.begin(), tails.end(), [](const Tail& x, const Tail& y) {
        return std::tie(x.a, x.t, x.qstart) < std::tie(y.a, y.t, y.qstart);
      });
      std::sort(want.tails.begin(), want.tails.end(), [](const Tail& x, const Tail& y) {
        return std::tie(x.a, x.t, x.qstart) < std::tie(y.a, y.t, y.qstart);
      });
      if (!(tails == want.tails))
        res.fail("m=" + std::to_string(m * sign) + ": free-tail list mismatch");
    }
  }
  res.note("compared m = 1..8, both signs");
  return res;
}

SuiteResult suite_theorems_positive(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "theorems-positive";
  std::mt19937_64 rng(opt.seed);
  for (int n : {3, 4, 5}) {
    for (int i = 0; i < opt.count; ++i) {
      BraidWord b = random_positive_with_hypotheses(rng, n, 14);
      int qmax = b.length() + 6;
      TriGradedTable tab = extreme_hhh(b, qmax, opt.field);
      ++res.checks;
      for (const auto& v : tab.theorems)
        if (v.status != "match")
          res.fail("n=" + std::to_string(n) + " braid '" + b.text() + "': " +
                   v.name + " " + v.status + " (" + v.detail + ")");
    }
  }
  res.note("checked " + std::to_string(res.checks) + " positive braids");
  return res;
}

SuiteResult suite_theorems_negative(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "theorems-negative";
  std::mt19937_64 rng(opt.seed);
  for (int n : {3, 4, 5}) {
    for (int i = 0; i < opt.count; ++i) {
      BraidWord b = mirror(random_positive_with_hypotheses(rng, n, 14));
      int qmax = b.length() + 6;
      TriGradedTable tab = negative_extreme_hhh(b, qmax, opt.field);
      ++res.checks;
      for (const auto& v : tab.theorems)
        if (v.status != "match")
          res.fail("n=" + std::to_string(n) + " braid '" + b.text() + "': " +
                   v.name + " " + v.status + " (" + v.detail + ")");
    }
  }
  res.note("checked " + std::to_string(res.checks) + " negative braids");
  return res;
}

SuiteResult suite_koszul(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "koszul";
  std::mt19937_64 rng(opt.seed);
  // J-block matching across the randomized suite
  for (int n : {3, 4, 5}) {
    int count = std::max(1, opt.count / 5);
    for (int i = 0; i < count; ++i) {
      BraidWord b = random_positive_with_hypotheses(rng, n, 14);
      TruncatedComplex c = build_truncated(b);
      for (int k = 0; k <= n - 1; ++k) {
        for (const auto& blk : block_decompose(c, k)) {
          ++res.checks;
          auto m = match_to_koszul(blk, c, k);
          if (!m.ok)
            res.fail("n=" + std::to_string(n) + " braid '" + b.text() +
                     "' k=" + std::to_string(k) + " J=" + std::to_string(blk.J) +
                     ": " + m.detail);
        }
      }
    }
  }
  // unit sequences are exact everywhere
  for (int nvars : {2, 3, 4}) {
    std::vector<Poly> seq;
    for (int i = 1; i <= nvars; ++i) seq.push_back(Poly::variable(i));
    seq[nvars / 2] = Poly::constant(1);
    KoszulComplex K = build_koszul(seq, nvars);
    for (int j = 0; j <= K.r(); ++j) {
      auto dims = koszul_cohomology(K, j, 20, opt.field);
      ++res.checks;
      if (!dims.empty())
        res.fail("unit Koszul sequence has cohomology at position " + std::to_string(j));
    }
  }
  res.note("matched " + std::to_string(res.checks) + " blocks/positions");
  return res;
}

SuiteResult suite_markov(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "markov";
  std::mt19937_64 rng(opt.seed);
  int words = std::min(10, std::max(1, opt.count));
  for (int i = 0; i < words; ++i) {
    int n = 3 + (int)(rng() % 2);  // n in {3,4}
    BraidWord b = random_positive_with_hypotheses(rng, n, n == 3 ? 9 : 11);
    int qmax = b.length() + 6;
    TriGradedTable base = extreme_hhh(b, qmax, opt.field);
    for (int s = 1; s < b.length(); ++s) {
      BraidWord rot = cyclic_shift(b, s);
      TriGradedTable tab = extreme_hhh(rot, qmax, opt.field);
      ++res.checks;
      int lo = std::max(base.qlo, tab.qlo), hi = std::min(base.qhi, tab.qhi);
      auto filter = [&](const TriGradedTable& t) {
        std::map<std::tuple<int, int, int>, int> f;
        for (const auto& [key, d] : t.entries)
          if (std::get<2>(key) >= lo && std::get<2>(key) <= hi) f[key] = d;
        return f;
      };
      if (filter(base) != filter(tab) || !(base.tails == tab.tails))
        res.fail("cyclic shift by " + std::to_string(s) + " of '" + b.text() +
                 "' changed the table");
    }
  }
  res.note("full cyclic orbits of " + std::to_string(words) + " words");
  return res;
}

SuiteResult suite_mirror(const SuiteOptions& opt) {
  SuiteResult res;
  res.name = "mirror";
  auto check = [&](const BraidWord& b, const std::string& what) {
    ++res.checks;
    std::string detail;
    bool ok = mirror_check(b, default_qmax(b.length()), opt.field, &detail);
    if (!ok) res.fail(what + ": " + detail);
  };
  for (int m : {3, 5}) {
    BraidWord b;
    b.n = 2;
    b.letters.assign(m, 1);
    check(b, "sigma1^" + std::to_string(m));
    check(mirror(b), "sigma1^-" + std::to_string(m));
  }
  std::mt19937_64 rng(opt.seed);
  int found = 0;
  while (found < 5) {
    BraidWord b = random_positive_with_hypotheses(rng, 3, 11);
    if (closure_components(b) != 1 || !primeness_criterion(b)) continue;
    ++found;
    check(b, "3-strand prime knot '" + b.text() + "'");
  }
  res.note("checked " + std::to_string(res.checks) + " mirror pairs");
  return res;
}

}  // namespace hhh
