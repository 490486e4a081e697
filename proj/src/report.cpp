#include "ubeta/report.hpp"

#include <sstream>

namespace ubeta {

namespace {

OrderedJson classification_json(const Classification& cls) {
  OrderedJson j;
  j["class"] = word_class_name(cls.tag);
  if (cls.params) {
    j["t"] = cls.params->t;
    j["s"] = cls.params->s;
    j["m"] = cls.params->m;
  } else {
    j["t"] = nullptr;
    j["s"] = nullptr;
    j["m"] = nullptr;
  }
  return j;
}

OrderedJson verdict_json(const Verdict& v) {
  OrderedJson j;
  j["name"] = v.name;
  j["applicable"] = v.applicable;
  j["pass"] = v.pass;
  j["detail"] = v.detail;
  return j;
}

}  // namespace

OrderedJson analysis_json(const AnalysisResult& r, bool with_timings) {
  OrderedJson j;
  j["digits"] = r.digits.digits;

  j["classification"] = classification_json(r.cls);
  j["classification"]["prefix_len"] = r.prefix_len;
  j["classification"]["horizon_truncated"] = r.profiles.complexity.truncated;

  j["horizon"] = r.profiles.complexity.horizon;
  j["c"] = r.profiles.complexity.c;
  j["delta_c"] = r.profiles.complexity.delta;
  j["p"] = r.profiles.palindromes.p;

  OrderedJson closed;
  if (!r.delta_c_closed.empty() || !r.p_closed.empty()) {
    closed["delta_c"] = r.delta_c_closed;
    closed["p"] = r.p_closed;
  } else {
    closed["delta_c"] = nullptr;
    closed["p"] = nullptr;
  }
  if (r.psi) {
    OrderedJson psi;
    std::size_t m = r.psi->psi.alphabet_size();
    psi["conjugator"] = word_to_string(r.psi->conjugator, m);
    OrderedJson images = OrderedJson::array();
    for (std::size_t a = 0; a < m; ++a)
      images.push_back(word_to_string(r.psi->psi.image(static_cast<Letter>(a)), m));
    psi["images"] = images;
    psi["images_palindromic"] = r.psi->images_palindromic;
    closed["psi"] = psi;
  } else {
    closed["psi"] = nullptr;
  }
  j["closed_forms"] = closed;

  OrderedJson verdicts = OrderedJson::array();
  for (const Verdict& v : r.verdicts) verdicts.push_back(verdict_json(v));
  j["verdicts"] = verdicts;

  if (with_timings) {
    OrderedJson t;
    for (const auto& [name, us] : r.timings_us) t[name] = us;
    j["timings"] = t;
  } else {
    j["timings"] = nullptr;
  }
  return j;
}

std::string analysis_csv(const AnalysisResult& r) {
  const auto& c = r.profiles.complexity.c;
  const auto& d1 = r.profiles.complexity.delta;
  const auto& d2 = r.profiles.complexity.delta2;
  const auto& p = r.profiles.palindromes.p;
  std::ostringstream out;
  out << "n,c,delta_c,delta2_c,p,p_closed,delta_c_closed\n";
  for (std::size_t n = 0; n < c.size(); ++n) {
    out << n << ',' << c[n] << ',';
    if (n < d1.size()) out << d1[n];
    out << ',';
    if (n < d2.size()) out << d2[n];
    out << ',' << p[n] << ',';
    if (n < r.p_closed.size()) out << r.p_closed[n];
    out << ',';
    if (n < r.delta_c_closed.size()) out << r.delta_c_closed[n];
    out << '\n';
  }
  return out.str();
}

OrderedJson counterexample_json(const AnalysisResult& r) {
  OrderedJson j;
  j["digits"] = r.digits.digits;
  j["classification"] = classification_json(r.cls);
  OrderedJson failures = OrderedJson::array();
  for (const Verdict& v : r.verdicts)
    if (v.applicable && !v.pass) failures.push_back(verdict_json(v));
  j["failures"] = failures;
  return j;
}

std::string render_json(const OrderedJson& j) { return j.dump(2) + "\n"; }

}  // namespace ubeta
