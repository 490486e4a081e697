#pragma once

#include "ubeta/numeration.hpp"
#include "ubeta/profiles.hpp"

namespace ubeta {

ComplexityProfile factor_profile(std::span<const Letter> prefix, std::size_t n_max,
                                 std::size_t alphabet_size);

struct LetterExtensions {
  Word factor;
  std::vector<Letter> letters;
};

struct SpecialFactorReport {
  std::size_t n;
  std::vector<LetterExtensions> left_specials;   // >= 2 left extensions
  std::vector<LetterExtensions> right_specials;  // >= 2 right extensions
};

// Extension sets are read off prefix windows; reliable for the underlying
// infinite word when n + 1 does not exceed the certified horizon.
SpecialFactorReport special_factors(std::span<const Letter> prefix, std::size_t n,
                                    std::size_t alphabet_size);

// First difference of factor complexity for the confluent word with the given
// parameters: m when |V^(k)| < n <= |U^(k)| for some k, else m-1. For s == 1
// the windows are empty and the value is constantly m-1.
int closed_form_delta_c(const ConfluentParams& p, std::size_t n);
std::vector<int> closed_form_delta_c_table(const ConfluentParams& p, std::size_t n_max);

}  // namespace ubeta
