#pragma once

#include <optional>
#include <string>

#include "ubeta/branches.hpp"
#include "ubeta/palindromes.hpp"
#include "ubeta/profiles.hpp"

namespace ubeta {

struct Verdict {
  std::string name;
  bool applicable;
  bool pass;
  std::string detail;  // first counterexample, or a short note
};

struct CheckOptions {
  std::size_t prefix_len = 0;  // 0 = pick by default_prefix_len
  std::size_t n_max = 500;
  std::size_t psi_depth = 2000;
  std::size_t classify_max_len = 60;
  std::size_t lift_max_len = 24;
  std::size_t branch_min_len = 64;
  std::size_t ladder_check_cap = 100'000;  // compare U/V words vs lengths up to here
  bool timings = false;
};

struct AnalysisResult {
  RenyiDigits digits;
  Classification cls;
  std::size_t prefix_len = 0;
  PrefixProfiles profiles;
  // Closed forms, indexed by n up to the horizon; empty for NonConfluent.
  std::vector<int> delta_c_closed;
  std::vector<int> p_closed;
  std::optional<PsiResult> psi;  // when the empty-center branch exists
  std::vector<Verdict> verdicts;
  std::vector<std::pair<std::string, std::int64_t>> timings_us;

  bool all_pass() const {
    for (const Verdict& v : verdicts)
      if (v.applicable && !v.pass) return false;
    return true;
  }
};

// Default prefix length: max(1e5, 4 |U^(6)|) capped at 1e7 for confluent
// digits, 1e5 otherwise.
std::size_t default_prefix_len(const Classification& cls);

// Builds the prefix, profiles it, and runs every identity the word class
// supports; inapplicable checks are reported with applicable = false.
AnalysisResult run_analysis(const RenyiDigits& d, const CheckOptions& opt = {});

}  // namespace ubeta
