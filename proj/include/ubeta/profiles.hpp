#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ubeta/word.hpp"

namespace ubeta {

struct ComplexityProfile {
  std::vector<std::int64_t> c;       // C(0..horizon)
  std::vector<std::int64_t> delta;   // first differences, 0..horizon-1
  std::vector<std::int64_t> delta2;  // second differences, 0..horizon-2
  std::size_t horizon = 0;
  bool truncated = false;  // horizon fell short of the requested n_max
};

struct PalindromeProfile {
  std::vector<std::int64_t> p;  // P(0..horizon)
  std::size_t horizon = 0;
  bool truncated = false;
};

struct PrefixProfiles {
  ComplexityProfile complexity;
  PalindromeProfile palindromes;
};

// Counts distinct factors and distinct palindromic factors per length over
// `prefix`, then certifies a horizon: the largest n <= n_max such that the
// counts C(0..n), P(0..n) agree between the full prefix and its first half.
// Values at or below the horizon are taken as exact for the infinite word
// the prefix approximates.
PrefixProfiles profile_prefix(std::span<const Letter> prefix, std::size_t n_max,
                              std::size_t alphabet_size);

// Same assembly from precomputed per-length counts (full prefix vs first
// half), each sized cap+1 with cap <= half_length - 1.
PrefixProfiles assemble_profiles(const std::vector<std::int64_t>& c_full,
                                 const std::vector<std::int64_t>& c_half,
                                 const std::vector<std::int64_t>& p_full,
                                 const std::vector<std::int64_t>& p_half, std::size_t n_max);

}  // namespace ubeta
