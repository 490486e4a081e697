#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "ubeta/checks.hpp"

using namespace ubeta;

namespace {

std::vector<std::string> verdict_names(const AnalysisResult& r) {
  std::vector<std::string> out;
  out.reserve(r.verdicts.size());
  for (const Verdict& v : r.verdicts) out.push_back(v.name);
  return out;
}

const Verdict& find_verdict(const AnalysisResult& r, const std::string& name) {
  auto it = std::find_if(r.verdicts.begin(), r.verdicts.end(),
                         [&](const Verdict& v) { return v.name == name; });
  REQUIRE(it != r.verdicts.end());
  return *it;
}

// Every report lists the same checks in the same order, so downstream
// consumers can diff reports across digit strings.
const std::vector<std::string> kVerdictOrder = {
    "primitive_substitution",
    "delta_c_window_formula",
    "delta2_c_spikes",
    "palindromic_complexity_closed_form",
    "palindrome_sum_identity",
    "zero_block_structure",
    "palindrome_lifting",
    "ladder_structure",
    "palindrome_extension_classification",
    "left_special_structure",
    "center_transport",
    "ladder_centers",
    "branch_existence_table",
    "finite_parity_palindromes",
    "psi_substitution",
    "psi_invariance",
    "fullness",
    "palindrome_tail_vanishes",
    "digit_round_trip",
    "sturmian_mechanical_equality",
};

}  // namespace

TEST_CASE("run_analysis on a confluent word passes every applicable check") {
  CheckOptions opt;
  opt.prefix_len = 20000;
  opt.n_max = 200;
  AnalysisResult r = run_analysis(RenyiDigits{{2, 2, 2}}, opt);

  CHECK(r.cls.tag == WordClass::ConfluentNonUnit);
  REQUIRE(r.cls.params.has_value());
  CHECK(*r.cls.params == ConfluentParams{2, 2, 3});
  CHECK(r.prefix_len == 20000);

  CHECK(verdict_names(r) == kVerdictOrder);
  CHECK(r.all_pass());
  for (const Verdict& v : r.verdicts) {
    CAPTURE(v.name);
    CAPTURE(v.detail);
    CHECK(v.pass);  // inapplicable checks still report pass = true
  }

  // 20000 letters certify the full requested range here.
  CHECK(r.profiles.complexity.horizon == 200);
  CHECK(r.profiles.palindromes.horizon == 200);
  CHECK_FALSE(r.profiles.complexity.truncated);

  // Closed-form tables cover n = 0..H; the closed delta does not need C(H+1).
  CHECK(r.delta_c_closed.size() == r.profiles.complexity.horizon + 1);
  CHECK(r.p_closed.size() == r.profiles.palindromes.horizon + 1);
  REQUIRE(r.psi.has_value());

  // Parity-dependent checks: t = s = 2 means even palindromes die out and
  // only the empty-center branch survives.
  CHECK(find_verdict(r, "finite_parity_palindromes").applicable);
  CHECK(find_verdict(r, "psi_substitution").applicable);
  CHECK_FALSE(find_verdict(r, "palindrome_tail_vanishes").applicable);
  CHECK_FALSE(find_verdict(r, "sturmian_mechanical_equality").applicable);
}

TEST_CASE("run_analysis on an Arnoux-Rauzy word") {
  CheckOptions opt;
  opt.prefix_len = 20000;
  opt.n_max = 150;
  AnalysisResult r = run_analysis(RenyiDigits{{1, 1}}, opt);

  CHECK(r.cls.tag == WordClass::ArnouxRauzy);
  CHECK(r.all_pass());
  CHECK(verdict_names(r) == kVerdictOrder);

  // Sturmian case: the rotation check applies and the even/odd cutoff does not.
  CHECK(find_verdict(r, "sturmian_mechanical_equality").applicable);
  CHECK_FALSE(find_verdict(r, "finite_parity_palindromes").applicable);
  CHECK_FALSE(find_verdict(r, "palindrome_tail_vanishes").applicable);
  REQUIRE(r.psi.has_value());

  // P alternates 1, 2 for a Sturmian word.
  for (std::size_t n = 0; n <= r.profiles.palindromes.horizon; ++n)
    CHECK(r.profiles.palindromes.p[n] == (n % 2 == 0 ? 1 : 2));
}

TEST_CASE("run_analysis on a non-confluent word") {
  CheckOptions opt;
  opt.prefix_len = 20000;
  opt.n_max = 120;
  AnalysisResult r = run_analysis(RenyiDigits{{3, 1, 1}}, opt);

  CHECK(r.cls.tag == WordClass::NonConfluent);
  CHECK_FALSE(r.cls.params.has_value());
  CHECK(verdict_names(r) == kVerdictOrder);
  CHECK(r.all_pass());

  // Confluent-only identities are skipped, the survivors still run.
  CHECK_FALSE(find_verdict(r, "delta_c_window_formula").applicable);
  CHECK_FALSE(find_verdict(r, "palindromic_complexity_closed_form").applicable);
  CHECK_FALSE(find_verdict(r, "branch_existence_table").applicable);
  CHECK(find_verdict(r, "primitive_substitution").applicable);
  CHECK(find_verdict(r, "fullness").applicable);
  CHECK(find_verdict(r, "digit_round_trip").applicable);

  const Verdict& tail = find_verdict(r, "palindrome_tail_vanishes");
  CHECK(tail.applicable);
  CHECK(tail.pass);

  CHECK(r.delta_c_closed.empty());
  CHECK(r.p_closed.empty());
  CHECK_FALSE(r.psi.has_value());
}

TEST_CASE("default prefix length") {
  // Small digits: the floor of 1e5 dominates.
  CHECK(default_prefix_len(classify(RenyiDigits{{1, 1}})) == 100000);
  CHECK(default_prefix_len(classify(RenyiDigits{{3, 1, 1}})) == 100000);

  // Large digits grow the ladder fast enough to need more than the floor,
  // but the cap keeps the build bounded.
  std::size_t big = default_prefix_len(classify(RenyiDigits{{4, 4, 4, 4}}));
  CHECK(big >= 100000);
  CHECK(big <= 10'000'000);

  CheckOptions opt;
  opt.n_max = 50;
  AnalysisResult r = run_analysis(RenyiDigits{{1, 1}}, opt);
  CHECK(r.prefix_len == 100000);
  CHECK(r.profiles.complexity.horizon == 50);
}

TEST_CASE("timings are opt-in") {
  CheckOptions opt;
  opt.prefix_len = 5000;
  opt.n_max = 60;
  AnalysisResult quiet = run_analysis(RenyiDigits{{1, 1}}, opt);
  CHECK(quiet.timings_us.empty());

  opt.timings = true;
  AnalysisResult timed = run_analysis(RenyiDigits{{1, 1}}, opt);
  REQUIRE(timed.timings_us.size() == 4);
  CHECK(timed.timings_us[0].first == "prefix");
  CHECK(timed.timings_us[1].first == "profiles");
  CHECK(timed.timings_us[2].first == "closed_forms");
  CHECK(timed.timings_us[3].first == "checks");
  for (const auto& [name, us] : timed.timings_us) {
    CAPTURE(name);
    CHECK(us >= 0);
  }
}

TEST_CASE("truncation is reported when the prefix cannot certify n_max") {
  CheckOptions opt;
  opt.prefix_len = 200;  // far too short for n_max = 400
  opt.n_max = 400;
  AnalysisResult r = run_analysis(RenyiDigits{{2, 2}}, opt);
  CHECK(r.profiles.complexity.truncated);
  CHECK(r.profiles.complexity.horizon < 400);
  // The closed-form tables shrink with the horizon instead of guessing.
  CHECK(r.delta_c_closed.size() == r.profiles.complexity.horizon + 1);
  CHECK(r.p_closed.size() == r.profiles.palindromes.horizon + 1);
}
