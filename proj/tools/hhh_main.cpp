// Command-line front end: analyze braid-word structure, compute the extreme
// (or full 2-strand) HHH tables, normalize to the reduced superpolynomial,
// and run the verification suites.
//
// Exit codes: 0 success, 1 input error, 2 verification failure, 3 internal
// consistency failure.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hhh/homology.hpp"
#include "hhh/invariant.hpp"
#include "hhh/verify.hpp"

using namespace hhh;

namespace {

FieldSpec parse_field(const std::string& s) {
  if (s.empty() || s == "rational" || s == "q" || s == "Q")
    return FieldSpec::rationals();
  std::uint64_t p = std::stoull(s);
  return FieldSpec::prime(p);
}

std::string field_default_from_env() {
  const char* env = std::getenv("HHH_FIELD");
  return env ? std::string(env) : std::string("rational");
}

void print_analysis(const BraidWord& b) {
  Hypotheses h = analyze_hypotheses(b);
  std::cout << "braid: " << b.text() << "  (n = " << b.n << ", |b| = "
            << b.length() << ")\n";
  std::cout << "writhe e = " << writhe(b) << "\n";
  std::cout << "closure components c = " << closure_components(b) << "\n";
  std::cout << "sign: "
            << (h.positive ? "positive" : h.negative ? "negative" : "mixed")
            << (h.mixed ? " (structural fields only; HHH needs a sign-homogeneous word)"
                        : "")
            << "\n";
  std::cout << "uses all generators: " << (h.all_generators ? "yes" : "no") << "\n";
  for (int i = 0; i < (int)h.stst_pairs.size(); ++i)
    std::cout << "  pair (" << i + 1 << "," << i + 2 << "): stst/tsts subexpression "
              << (h.stst_pairs[i] ? "present" : "absent") << "\n";
  if (h.positive)
    std::cout << "primeness criterion (combinatorial condition): "
              << (h.stst_all ? "satisfied" : "not satisfied") << "\n";
  if (h.csum_window)
    std::cout << "connect-sum window: k = " << *h.csum_window << "\n";
  else
    std::cout << "connect-sum window: none\n";
}

void print_table(const TriGradedTable& t) {
  std::cout << "braid: " << t.braid << "  (n = " << t.n << ", e = " << t.writhe
            << ", c = " << t.components << ")\n";
  std::cout << "computed Q window: [" << t.qlo << ", " << t.qhi << "]\n";
  if (t.entries.empty()) std::cout << "no classes in the computed degrees\n";
  for (const auto& [key, dim] : t.entries) {
    auto [a, tt, q] = key;
    std::cout << "  A=" << a << "  T=" << tt << "  Q=" << q << "  dim " << dim << "\n";
  }
  for (const auto& tail : t.tails)
    std::cout << "  A=" << tail.a << "  T=" << tail.t << "  free tail k[a] from Q="
              << tail.qstart << " (period " << tail.period << ")\n";
  for (const auto& v : t.theorems)
    std::cout << "theorem " << v.name << ": " << v.status
              << (v.detail.empty() ? "" : " - " + v.detail) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reduced triply graded link homology of positive/negative braids "
               "in the extreme T-degrees, with superpolynomial normalization"};
  app.require_subcommand(1);

  std::string braid_text;
  int n = 2;
  int qmax = -1;
  std::string field_str = field_default_from_env();
  bool as_json = false;

  auto add_braid_opts = [&](CLI::App* cmd, bool need_braid) {
    if (need_braid)
      cmd->add_option("braid", braid_text,
                      "braid word: whitespace-separated nonzero integers")
          ->required();
    cmd->add_option("--n", n, "strand count")->required();
    cmd->add_option("--qmax", qmax,
                    "Q cutoff (default 2|b|+10, window clipped as documented)");
    cmd->add_option("--field", field_str, "rational (default) or a prime > 3");
    cmd->add_flag("--json", as_json, "emit JSON");
  };

  auto* analyze = app.add_subcommand("analyze", "structural report for a braid word");
  add_braid_opts(analyze, true);

  auto* hhh_cmd = app.add_subcommand("hhh", "triply graded dimension table");
  add_braid_opts(hhh_cmd, true);

  auto* super = app.add_subcommand("superpoly", "reduced superpolynomial");
  add_braid_opts(super, true);
  bool with_homfly = false;
  super->add_flag("--homfly", with_homfly, "also print the HOMFLY specialization");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::uint64_t seed = 1;
  int count = 50;
  verify->add_option("--suite", suite, "one of: fixtures, theorems-positive, "
                                       "theorems-negative, koszul, two-strand, "
                                       "markov, mirror")
      ->required();
  verify->add_option("--seed", seed, "random seed (default 1)");
  verify->add_option("--count", count, "braids per strand count (default 50)");
  verify->add_option("--field", field_str, "rational (default) or a prime > 3");

  CLI11_PARSE(app, argc, argv);

  try {
    FieldSpec field = parse_field(field_str);

    if (app.got_subcommand(verify)) {
      SuiteOptions opt;
      opt.seed = seed;
      opt.count = count;
      opt.field = field;
      SuiteResult r = run_suite(suite, opt);
      for (const auto& line : r.notes) std::cout << line << "\n";
      std::cout << "suite " << r.name << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
      return r.passed ? 0 : 2;
    }

    BraidWord b = parse_braid(braid_text, n);
    if (qmax < 0) qmax = default_qmax(b.length());

    if (app.got_subcommand(analyze)) {
      print_analysis(b);
      return 0;
    }
    if (app.got_subcommand(hhh_cmd)) {
      TriGradedTable t = hhh_table_for(b, qmax, field);
      if (as_json)
        std::cout << t.to_json() << "\n";
      else
        print_table(t);
      return 0;
    }
    if (app.got_subcommand(super)) {
      TriGradedTable t = hhh_table_for(b, qmax, field);
      Superpolynomial p = superpolynomial(b, t);
      if (as_json)
        std::cout << p.to_json() << "\n";
      else {
        std::cout << "P = " << p.str() << "\n";
        if (!p.complete)
          std::cout << "(extreme T-degrees only: T-exponents " << p.t_lo << ".."
                    << p.t_hi << ")\n";
        if (with_homfly)
          std::cout << "HOMFLY(T=-1, A=-a^2q^2, Q=q) = "
                    << homfly_specialize(p).str() << "\n";
      }
      return 0;
    }
  } catch (const BraidParseError& e) {
    std::cerr << "input error at token " << e.token_position << ": " << e.what()
              << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
