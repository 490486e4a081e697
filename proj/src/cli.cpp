#include "ubeta/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "ubeta/report.hpp"

namespace ubeta::cli {

namespace {

std::vector<std::uint32_t> parse_digit_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  if (s.empty()) throw std::invalid_argument("empty digit string");
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t used = 0;
      unsigned long v = std::stoul(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("bad digit '" + tok + "'");
      out.push_back(static_cast<std::uint32_t>(v));
    }
  } else {
    for (char ch : s) {
      if (ch < '0' || ch > '9') throw std::invalid_argument(std::string("bad digit '") + ch + "'");
      out.push_back(static_cast<std::uint32_t>(ch - '0'));
    }
  }
  return out;
}

std::size_t worker_count(std::size_t jobs) {
  std::size_t n = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("UBETA_WORKERS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v >= 1) n = v;
  }
  if (n < 1) n = 1;
  return std::min(n, jobs);
}

std::string case_line(const ConfluentParams& p, const AnalysisResult& r) {
  std::size_t applicable = 0, passed = 0;
  std::string failed;
  for (const Verdict& v : r.verdicts) {
    if (!v.applicable) continue;
    ++applicable;
    if (v.pass)
      ++passed;
    else
      failed += (failed.empty() ? "" : ",") + v.name;
  }
  std::ostringstream line;
  line << "m=" << p.m << " t=" << p.t << " s=" << p.s
       << " class=" << word_class_name(r.cls.tag)
       << " horizon=" << r.profiles.complexity.horizon << " checks=" << passed << "/"
       << applicable;
  if (failed.empty())
    line << " pass";
  else
    line << " FAIL(" << failed << ")";
  return line.str();
}

struct AnalyzeArgs {
  std::string digits;
  std::size_t prefix_len = 0;
  std::size_t n_max = 500;
  std::size_t psi_depth = 2000;
  std::string format = "json";
  bool timings = false;
};

CheckOptions to_options(const AnalyzeArgs& a) {
  CheckOptions opt;
  opt.prefix_len = a.prefix_len;
  opt.n_max = a.n_max;
  opt.psi_depth = a.psi_depth;
  opt.timings = a.timings;
  return opt;
}

int do_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  RenyiDigits d = check_parry(parse_digit_list(a.digits));
  AnalysisResult r = run_analysis(d, to_options(a));
  if (a.format == "csv")
    out << analysis_csv(r);
  else
    out << render_json(analysis_json(r, a.timings));
  if (!r.all_pass()) {
    err << render_json(counterexample_json(r));
    return 1;
  }
  return 0;
}

int do_sweep(std::size_t m_max, std::size_t t_max, const AnalyzeArgs& base, std::ostream& out,
             std::ostream& err) {
  std::vector<ConfluentParams> cases;
  for (std::uint32_t m = 2; m <= m_max; ++m)
    for (std::uint32_t t = 1; t <= t_max; ++t)
      for (std::uint32_t s = 1; s <= t; ++s) cases.push_back({t, s, m});

  std::vector<AnalysisResult> results(cases.size());
  std::vector<std::string> errors(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) {
      try {
        results[i] = run_analysis(digits_of(cases[i]), to_options(base));
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = worker_count(cases.size()); w > 1; --w) pool.emplace_back(work);
  work();
  for (std::thread& th : pool) th.join();

  int rc = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (!errors[i].empty()) {
      out << "m=" << cases[i].m << " t=" << cases[i].t << " s=" << cases[i].s << " ERROR\n";
      err << "error: " << errors[i] << "\n";
      rc = 1;
      continue;
    }
    out << case_line(cases[i], results[i]) << "\n";
    if (!results[i].all_pass()) {
      err << render_json(counterexample_json(results[i]));
      rc = 1;
    }
  }
  return rc;
}

int do_branch(const std::string& digits, const std::string& center_str, std::size_t len,
              bool with_psi, std::ostream& out, std::ostream& err) {
  RenyiDigits d = check_parry(parse_digit_list(digits));
  Classification cls = classify(d);
  if (!cls.params) {
    err << "error: palindromic branches require the confluent case\n";
    return 2;
  }
  std::optional<Letter> center;
  if (center_str != "eps") {
    std::size_t used = 0;
    unsigned long c = std::stoul(center_str, &used);
    if (used != center_str.size() || c >= d.m()) {
      err << "error: center must be 'eps' or a letter below " << d.m() << "\n";
      return 2;
    }
    center = static_cast<Letter>(c);
  }

  OrderedJson j;
  j["digits"] = d.digits;
  j["center"] = center ? std::to_string(+*center) : "eps";
  try {
    Word w = branch_central_factor(*cls.params, center, len);
    j["length"] = w.size();
    j["factor"] = word_to_string(w, d.m());
  } catch (const BranchAbsent& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (with_psi) {
    try {
      PsiResult psi = psi_substitution(*cls.params);
      OrderedJson pj;
      pj["conjugator"] = word_to_string(psi.conjugator, d.m());
      OrderedJson images = OrderedJson::array();
      for (std::size_t a = 0; a < d.m(); ++a)
        images.push_back(word_to_string(psi.psi.image(static_cast<Letter>(a)), d.m()));
      pj["images"] = images;
      pj["images_palindromic"] = psi.images_palindromic;
      j["psi"] = pj;
    } catch (const BranchAbsent& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }
  out << render_json(j);
  return 0;
}

int do_defect(const std::string& digits, std::size_t len, std::ostream& out) {
  RenyiDigits d = check_parry(parse_digit_list(digits));
  Word prefix = fixed_point_prefix(canonical_substitution(d), 0, len);
  DefectSeries series = defect_series(prefix, d.m());
  OrderedJson j;
  j["digits"] = d.digits;
  j["length"] = prefix.size();
  j["full"] = series.full;
  std::int64_t final_defect = series.defect.empty() ? 0 : series.defect.back();
  j["defect"] = final_defect;
  OrderedJson first = nullptr;
  for (std::size_t k = 0; k < series.defect.size(); ++k)
    if (series.defect[k] != 0) {
      first = k;
      break;
    }
  j["first_defective_prefix"] = first;
  out << render_json(j);
  return 0;
}

int do_expand(double beta, std::size_t max_digits, std::ostream& out) {
  RenyiExpansion e = renyi_digits(beta, max_digits);
  OrderedJson j;
  j["beta"] = beta;
  j["digits"] = e.digits;
  j["finite"] = e.finite;
  if (e.finite) {
    try {
      RenyiDigits d = check_parry(e.digits);
      j["class"] = d.m() >= 2 ? word_class_name(classify(d).tag) : "Integer";
    } catch (const ParryError&) {
      j["class"] = nullptr;
    }
  } else {
    j["class"] = nullptr;
  }
  out << render_json(j);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"factor and palindrome structure of u_beta for simple Parry numbers"};
  app.require_subcommand(1);

  AnalyzeArgs a;
  std::string format_help = "json or csv";

  CLI::App* analyze = app.add_subcommand("analyze", "profile a word and run every check");
  analyze->add_option("--digits", a.digits, "Renyi digits, e.g. 2,2,2 or 222")->required();
  analyze->add_option("--prefix-len", a.prefix_len, "prefix length (0 = automatic)");
  analyze->add_option("--nmax", a.n_max, "largest n to profile");
  analyze->add_option("--psi-depth", a.psi_depth, "letters of the branch to verify");
  analyze->add_option("--format", a.format, format_help)
      ->check(CLI::IsMember({"json", "csv"}));
  analyze->add_flag("--timings", a.timings, "emit stage timings (microseconds)");

  CLI::App* verify = app.add_subcommand("verify", "run the identity suite, exit 0 iff all pass");
  verify->add_option("--digits", a.digits, "Renyi digits")->required();
  verify->add_option("--prefix-len", a.prefix_len, "prefix length (0 = automatic)");
  verify->add_option("--nmax", a.n_max, "largest n to profile");
  verify->add_option("--psi-depth", a.psi_depth, "letters of the branch to verify");
  verify->add_flag("--timings", a.timings, "emit stage timings (microseconds)");

  std::size_t m_max = 4, t_max = 4;
  CLI::App* sweep = app.add_subcommand("sweep", "verify all confluent digit strings in range");
  sweep->add_option("--m-max", m_max, "largest alphabet size")->required();
  sweep->add_option("--t-max", t_max, "largest leading digit")->required();
  sweep->add_option("--nmax", a.n_max, "largest n to profile");
  sweep->add_option("--prefix-len", a.prefix_len, "prefix length (0 = automatic)");

  std::size_t gen_len = 0;
  CLI::App* generate = app.add_subcommand("generate", "print a prefix of the word");
  generate->add_option("--digits", a.digits, "Renyi digits")->required();
  generate->add_option("--len", gen_len, "number of letters")->required();

  std::string center_str;
  bool with_psi = false;
  std::size_t branch_len = 64;
  CLI::App* branch = app.add_subcommand("branch", "central factors of a palindromic branch");
  branch->add_option("--digits", a.digits, "Renyi digits")->required();
  branch->add_option("--center", center_str, "eps or a letter")->required();
  branch->add_option("--len", branch_len, "minimum factor length");
  branch->add_flag("--psi", with_psi, "include the conjugated substitution");

  std::size_t defect_len = 0;
  CLI::App* defect = app.add_subcommand("defect", "palindromic defect of a prefix");
  defect->add_option("--digits", a.digits, "Renyi digits")->required();
  defect->add_option("--len", defect_len, "prefix length")->required();

  double beta = 0.0;
  std::size_t max_digits = 64;
  CLI::App* expand = app.add_subcommand("expand", "Renyi digits of a real base");
  expand->add_option("--beta", beta, "base, > 1")->required();
  expand->add_option("--max-digits", max_digits, "give up after this many digits");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("ubeta");
  for (const std::string& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) return do_analyze(a, out, err);
    if (app.got_subcommand(verify)) {
      a.format = "json";
      return do_analyze(a, out, err);
    }
    if (app.got_subcommand(sweep)) return do_sweep(m_max, t_max, a, out, err);
    if (app.got_subcommand(generate)) {
      RenyiDigits d = check_parry(parse_digit_list(a.digits));
      Word prefix = fixed_point_prefix(canonical_substitution(d), 0, gen_len);
      out << word_to_string(prefix, d.m()) << "\n";
      return 0;
    }
    if (app.got_subcommand(branch))
      return do_branch(a.digits, center_str, branch_len, with_psi, out, err);
    if (app.got_subcommand(defect)) return do_defect(a.digits, defect_len, out);
    if (app.got_subcommand(expand)) return do_expand(beta, max_digits, out);
  } catch (const ParryError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const PrecisionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace ubeta::cli
