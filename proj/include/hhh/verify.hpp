#pragma once
// Named verification suites: paper-matrix fixtures, the two-strand
// regression, the randomized positive/negative theorem suites, Koszul
// matching, Markov-I invariance and the mirror relation.  Shared by the CLI
// `verify` command and the acceptance runner.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hhh/braid.hpp"
#include "hhh/field.hpp"

namespace hhh {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> notes;  // failures and summary lines
  int checks = 0;

  void fail(const std::string& msg) {
    passed = false;
    notes.push_back(msg);
  }
  void note(const std::string& msg) { notes.push_back(msg); }
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  int count = 50;
  FieldSpec field = FieldSpec::rationals();
  std::string fixture_dir;  // defaults to the compiled-in source path
};

// positive braid containing sigma_i sigma_{i+1} sigma_i sigma_{i+1} for every
// adjacent pair (hence all generators), padded with random letters
BraidWord random_positive_with_hypotheses(std::mt19937_64& rng, int n, int max_len);

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

// individual suites
SuiteResult suite_fixtures(const SuiteOptions& opt);
SuiteResult suite_two_strand(const SuiteOptions& opt);
SuiteResult suite_theorems_positive(const SuiteOptions& opt);
SuiteResult suite_theorems_negative(const SuiteOptions& opt);
SuiteResult suite_koszul(const SuiteOptions& opt);
SuiteResult suite_markov(const SuiteOptions& opt);
SuiteResult suite_mirror(const SuiteOptions& opt);

}  // namespace hhh
