#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ubeta/morphism.hpp"
#include "ubeta/word.hpp"

namespace ubeta {

// Digit string t_1..t_m of the Renyi expansion of 1 for a simple Parry number.
// Only obtainable through check_parry, so holders can assume validity.
struct RenyiDigits {
  std::vector<std::uint32_t> digits;
  std::size_t m() const { return digits.size(); }

  friend bool operator==(const RenyiDigits&, const RenyiDigits&) = default;
};

struct ParryError : std::runtime_error {
  ParryError(std::string msg, std::size_t index)
      : std::runtime_error(std::move(msg)), suffix_index(index) {}
  // 1-based index i of the offending suffix t_i t_{i+1} ...; 0 when the
  // failure is structural (empty, trailing zero, beta <= 1).
  std::size_t suffix_index;
};

// Admissibility: every proper suffix, zero-padded, is lexicographically
// smaller than the whole string; last digit nonzero; beta > 1.
RenyiDigits check_parry(const std::vector<std::uint32_t>& digits);
std::optional<std::size_t> parry_violation_index(const std::vector<std::uint32_t>& digits);

enum class WordClass { ArnouxRauzy, ConfluentNonUnit, NonConfluent };

// Confluent digit strings look like t,t,...,t,s with t >= s >= 1.
struct ConfluentParams {
  std::uint32_t t;
  std::uint32_t s;
  std::uint32_t m;  // alphabet size = digit count

  friend bool operator==(const ConfluentParams&, const ConfluentParams&) = default;
};

struct Classification {
  WordClass tag;
  std::optional<ConfluentParams> params;  // set unless NonConfluent
};

const char* word_class_name(WordClass c);

// m == 1 (integer beta, periodic fixed point) is out of scope and throws.
Classification classify(const RenyiDigits& d);

inline RenyiDigits digits_of(const ConfluentParams& p) {
  std::vector<std::uint32_t> d(p.m, p.t);
  d.back() = p.s;
  return RenyiDigits{std::move(d)};
}

// phi(i) = 0^{t_{i+1}} (i+1) for i < m-1, phi(m-1) = 0^{t_m}.
Morphism canonical_substitution(const RenyiDigits& d);

// Unique root > 1 of x^m = t_1 x^{m-1} + ... + t_m. Bisection bracket
// (1, 1+t_1], then Newton polish; absolute error <= tol.
double dominant_root(const RenyiDigits& d, double tol = 1e-13);

struct RenyiExpansion {
  std::vector<std::uint32_t> digits;
  bool finite;  // orbit of 1 under T_beta hit 0 before max_len digits
};

struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Digits of the greedy beta-expansion of 1, t_i = floor(beta * T^{i-1}(1)).
// A floor within `guard` below an integer is ambiguous at this precision and
// throws; within `guard` above an integer it is taken as an exact hit of 0.
RenyiExpansion renyi_digits(double beta, std::size_t max_len, double guard = 1e-9);

}  // namespace ubeta
