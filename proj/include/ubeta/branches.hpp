#pragma once

#include <optional>

#include "ubeta/morphism.hpp"
#include "ubeta/parry.hpp"

namespace ubeta {

// An infinite palindromic branch is a two-sided palindrome whose central
// factors are all factors of u_beta; at most one exists per center. Which
// centers occur depends only on the parities of t and s:
//   s odd             -> every letter and the empty center
//   s even, t odd     -> every letter, no empty center
//   s even, t even    -> only the empty center
bool branch_exists(const ConfluentParams& p, std::optional<Letter> center);

struct BranchAbsent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Palindromic central factor of the branch with the given center, of the
// smallest admissible length >= min_len (parity matching the center). Built
// by iterating the appropriate ladder, then trimming symmetrically.
Word branch_central_factor(const ConfluentParams& p, std::optional<Letter> center,
                           std::size_t min_len, std::size_t length_cap = 10'000'000);

struct PsiResult {
  Morphism psi;
  Word conjugator;  // w with psi(a) = w^{-1} phi^j(a) w
  bool images_palindromic;
};

// Substitution fixing the branch with empty center: conjugate of phi by
// w = 0^{t/2} when t is even, of phi^{m+1} by w = phi^m(0^{(t+1)/2}) 0^{(t-s)/2}
// when t and s are both odd. Throws BranchAbsent for t odd, s even.
PsiResult psi_substitution(const ConfluentParams& p);

struct PsiVerification {
  bool pass;
  std::size_t checked;                  // letters compared
  std::optional<std::size_t> mismatch;  // first differing position
};

// Checks the defining property of psi against the branch generated
// independently through the V-ladder: for t even, psi maps prefixes of the
// right half to prefixes; for t,s odd the same holds for a -> reverse(psi(a)).
PsiVerification verify_psi(const ConfluentParams& p, std::size_t depth);

// Right half of the empty-center branch (a right-infinite word), first n
// letters, grown from the V-ladder.
Word epsilon_branch_right_half(const ConfluentParams& p, std::size_t n,
                               std::size_t length_cap = 100'000'000);

// u_beta as a Sturmian word: for digits (t, 1) the n-th letter is
// floor((n+2)a) - floor((n+1)a) with a = 1/(beta+1), evaluated exactly in
// Z[sqrt(t^2+4)] via integer square roots.
Word mechanical_word(const ConfluentParams& p, std::size_t n_len);

}  // namespace ubeta
