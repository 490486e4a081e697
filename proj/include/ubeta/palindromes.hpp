#pragma once

#include <optional>

#include "ubeta/eertree.hpp"
#include "ubeta/factor_index.hpp"
#include "ubeta/numeration.hpp"
#include "ubeta/profiles.hpp"

namespace ubeta {

PalindromeProfile palindrome_profile(std::span<const Letter> prefix, std::size_t n_max,
                                     std::size_t alphabet_size);

enum class PalindromeKind { Maximal, TwoExtensions, UniqueExtension };

struct PalindromeClass {
  std::vector<Letter> extensions;  // letters a with a p a in the language
  PalindromeKind kind() const {
    if (extensions.empty()) return PalindromeKind::Maximal;
    return extensions.size() >= 2 ? PalindromeKind::TwoExtensions
                                  : PalindromeKind::UniqueExtension;
  }
};

// Extension letters of palindrome p read off a prefix index; requires
// |p| + 2 <= horizon so prefix membership decides language membership.
PalindromeClass palindromic_extensions(std::span<const Letter> p, const FactorIndex& language,
                                       std::size_t horizon);

// V^(1) = 0^t, U^(1) = 0^{t+s-1}, X^(k+1) = phi(X^(k)) 0^t. Throws when the
// requested U^(k) would exceed length_cap (message names |U^(k)|).
std::pair<Word, Word> uv_words(const ConfluentParams& p, std::size_t k,
                               std::size_t length_cap = 10'000'000);

// Both ladders up to (and including) the first terms longer than max_len.
struct UVLadderWords {
  std::vector<Word> v, u;
};
UVLadderWords uv_ladder_up_to(const ConfluentParams& p, std::size_t max_len,
                              std::size_t length_cap = 10'000'000);

struct PalindromeVerdict {
  Word palindrome;
  PalindromeKind kind;
  bool is_u;  // equals some U^(k)
  bool is_v;  // equals some V^(k)
  bool match;
};

// For s >= 2: checks every distinct palindromic factor of length <= max_len
// against the rule "no extension iff U^(k), two extensions iff V^(k),
// otherwise exactly one".
std::vector<PalindromeVerdict> classify_all_palindromes(const Eertree& tree,
                                                        const FactorIndex& language,
                                                        std::size_t horizon,
                                                        const ConfluentParams& p,
                                                        std::size_t max_len);

// Palindromic complexity of the confluent word, every parity case.
int closed_form_p(const ConfluentParams& p, std::size_t n);
std::vector<int> closed_form_p_table(const ConfluentParams& p, std::size_t n_max);

// Middle letter for odd length, nullopt for even length; throws when w is not
// a palindrome.
std::optional<Letter> center_of(std::span<const Letter> w);

struct DefectSeries {
  std::vector<std::int64_t> defect;  // index k: defect of the length-k prefix
  bool full;                         // all zero
};
DefectSeries defect_series(std::span<const Letter> w, std::size_t alphabet_size);

struct PalindromicSuffix {
  Word suffix;
  bool unioccurrent;  // occurs exactly once in w
};
PalindromicSuffix longest_palindromic_suffix(std::span<const Letter> w,
                                             std::size_t alphabet_size);

}  // namespace ubeta
