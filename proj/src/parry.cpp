#include "ubeta/parry.hpp"

#include <cmath>
#include <numeric>

namespace ubeta {

std::optional<std::size_t> parry_violation_index(const std::vector<std::uint32_t>& digits) {
  std::size_t m = digits.size();
  for (std::size_t i = 2; i <= m; ++i) {
    // Compare t_i t_{i+1} ... padded with zeros against t_1 t_2 ...; the last
    // digit is nonzero, so a verdict always falls within m positions.
    for (std::size_t j = 0; j < m; ++j) {
      std::uint32_t suf = (i + j <= m) ? digits[i + j - 1] : 0;
      std::uint32_t whole = digits[j];
      if (suf < whole) break;
      if (suf > whole) return i;
    }
  }
  return std::nullopt;
}

RenyiDigits check_parry(const std::vector<std::uint32_t>& digits) {
  if (digits.empty()) throw ParryError("digit string is empty", 0);
  if (digits.back() == 0)
    throw ParryError("last digit must be nonzero (strip trailing zeros)", 0);
  std::uint64_t total = std::accumulate(digits.begin(), digits.end(), std::uint64_t{0});
  if (total < 2) throw ParryError("digit string (1) has root beta = 1, not > 1", 0);
  if (auto i = parry_violation_index(digits)) {
    throw ParryError(
        "admissibility fails: suffix starting at digit " + std::to_string(*i) +
            " is not lexicographically smaller than the whole string",
        *i);
  }
  return RenyiDigits{digits};
}

const char* word_class_name(WordClass c) {
  switch (c) {
    case WordClass::ArnouxRauzy: return "ArnouxRauzy";
    case WordClass::ConfluentNonUnit: return "ConfluentNonUnit";
    case WordClass::NonConfluent: return "NonConfluent";
  }
  return "?";
}

Classification classify(const RenyiDigits& d) {
  std::size_t m = d.m();
  if (m == 1)
    throw std::invalid_argument("beta is an integer; the fixed point 0^w is out of scope");
  if (m > 256) throw std::invalid_argument("alphabet size above 256 not supported");
  bool confluent = true;
  for (std::size_t i = 1; i + 1 < m; ++i) confluent &= (d.digits[i] == d.digits[0]);
  if (!confluent) return {WordClass::NonConfluent, std::nullopt};
  ConfluentParams p{d.digits[0], d.digits[m - 1], static_cast<std::uint32_t>(m)};
  // t >= s >= 1 comes with admissibility; keep it as a hard invariant.
  if (p.s < 1 || p.s > p.t) throw std::logic_error("confluent params violate t >= s >= 1");
  WordClass tag = (p.s == 1) ? WordClass::ArnouxRauzy : WordClass::ConfluentNonUnit;
  return {tag, p};
}

Morphism canonical_substitution(const RenyiDigits& d) {
  std::size_t m = d.m();
  if (m > 256) throw std::invalid_argument("alphabet size above 256 not supported");
  std::vector<Word> images(m);
  for (std::size_t i = 0; i < m; ++i) {
    Word im(d.digits[i], 0);
    if (i + 1 < m) im.push_back(static_cast<Letter>(i + 1));
    images[i] = std::move(im);
  }
  return Morphism(m, std::move(images));
}

namespace {

// f(x) = sum t_i x^{-i} - 1, strictly decreasing on (0, inf); the dominant
// root is its unique zero and lies in (1, 1+t_1].
double eval_f(const std::vector<std::uint32_t>& d, double x) {
  double acc = 0.0;
  for (std::size_t i = d.size(); i-- > 0;) acc = (acc + d[i]) / x;
  return acc - 1.0;
}

double eval_poly(const std::vector<std::uint32_t>& d, double x, double* deriv) {
  // p(x) = x^m - t_1 x^{m-1} - ... - t_m, Horner with derivative.
  double p = 1.0, dp = 0.0;
  for (std::uint32_t t : d) {
    dp = dp * x + p;
    p = p * x - t;
  }
  if (deriv) *deriv = dp;
  return p;
}

}  // namespace

double dominant_root(const RenyiDigits& d, double tol) {
  double lo = 1.0, hi = 1.0 + d.digits[0];
  for (int it = 0; it < 80 && hi - lo > 1e-8; ++it) {
    double mid = 0.5 * (lo + hi);
    (eval_f(d.digits, mid) > 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 40; ++it) {
    double dp = 0.0;
    double p = eval_poly(d.digits, x, &dp);
    if (dp == 0.0) break;
    double nx = x - p / dp;
    nx = std::min(std::max(nx, lo), hi);
    if (std::abs(nx - x) <= tol * 0.5) {
      x = nx;
      break;
    }
    x = nx;
  }
  return x;
}

RenyiExpansion renyi_digits(double beta, std::size_t max_len, double guard) {
  if (!(beta > 1.0)) throw std::invalid_argument("beta must exceed 1");
  if (guard <= 0 || guard >= 0.5) throw std::invalid_argument("guard must be in (0, 0.5)");
  // Distance below `snap` counts as an exact hit of an integer (the orbit
  // reached 0, the expansion is finite); distance inside [snap, guard) is
  // genuinely undecidable at double precision and errors out.
  const long double snap = 1e-12L;
  RenyiExpansion out{{}, false};
  long double b = beta;
  long double x = 1.0L;  // T^{i-1}(1)
  for (std::size_t i = 0; i < max_len; ++i) {
    long double y = b * x;
    long double nearest = std::floor(y + 0.5L);
    long double dist = std::abs(y - nearest);
    if (dist < snap && nearest >= 1.0L) {
      out.digits.push_back(static_cast<std::uint32_t>(nearest));
      out.finite = true;
      return out;
    }
    if (dist < static_cast<long double>(guard))
      throw PrecisionError("digit " + std::to_string(i + 1) +
                           " is ambiguous at this precision: beta*T^{i-1}(1) lies within the "
                           "guard band of an integer");
    long double fl = std::floor(y);
    out.digits.push_back(static_cast<std::uint32_t>(fl));
    x = y - fl;
  }
  return out;  // finite == false: undecided after max_len digits
}

}  // namespace ubeta
