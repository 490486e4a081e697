#include "ubeta/palindromes.hpp"

#include <algorithm>

#include "ubeta/complexity.hpp"
#include "ubeta/parry.hpp"

namespace ubeta {

PalindromeProfile palindrome_profile(std::span<const Letter> prefix, std::size_t n_max,
                                     std::size_t alphabet_size) {
  return profile_prefix(prefix, n_max, alphabet_size).palindromes;
}

PalindromeClass palindromic_extensions(std::span<const Letter> p, const FactorIndex& language,
                                       std::size_t horizon) {
  if (p.size() + 2 > horizon)
    throw std::invalid_argument("palindrome too long for the certified horizon");
  if (!is_palindrome(p)) throw std::invalid_argument("not a palindrome");
  PalindromeClass out;
  Word probe(p.size() + 2, 0);
  std::copy(p.begin(), p.end(), probe.begin() + 1);
  for (std::size_t a = 0; a < language.alphabet_size(); ++a) {
    probe.front() = probe.back() = static_cast<Letter>(a);
    if (language.contains(probe)) out.extensions.push_back(static_cast<Letter>(a));
  }
  return out;
}

namespace {

Word ladder_step(const Morphism& phi, const Word& x, std::uint32_t t) {
  Word next = phi.apply(x);
  next.insert(next.end(), t, 0);
  return next;
}

}  // namespace

std::pair<Word, Word> uv_words(const ConfluentParams& p, std::size_t k, std::size_t length_cap) {
  if (k == 0) throw std::invalid_argument("ladder index starts at 1");
  LengthLadder lengths(p);
  if (lengths.u(k) > length_cap) {
    throw std::length_error("U^(" + std::to_string(k) + ") has length " +
                            lengths.u(k).str() + ", above the cap " +
                            std::to_string(length_cap));
  }
  Morphism phi = canonical_substitution(digits_of(p));
  Word v(p.t, 0);
  Word u(static_cast<std::size_t>(p.t + p.s - 1), 0);
  for (std::size_t i = 1; i < k; ++i) {
    v = ladder_step(phi, v, p.t);
    u = ladder_step(phi, u, p.t);
  }
  return {std::move(v), std::move(u)};
}

UVLadderWords uv_ladder_up_to(const ConfluentParams& p, std::size_t max_len,
                              std::size_t length_cap) {
  UVLadderWords out;
  Morphism phi = canonical_substitution(digits_of(p));
  Word v(p.t, 0);
  Word u(static_cast<std::size_t>(p.t + p.s - 1), 0);
  for (;;) {
    bool v_done = v.size() > max_len, u_done = u.size() > max_len;
    out.v.push_back(v);
    out.u.push_back(u);
    if (v_done && u_done) break;
    if (phi.total_image_length(u) + p.t > length_cap)
      throw std::length_error("ladder exceeds the length cap");
    v = ladder_step(phi, v, p.t);
    u = ladder_step(phi, u, p.t);
  }
  return out;
}

std::vector<PalindromeVerdict> classify_all_palindromes(const Eertree& tree,
                                                        const FactorIndex& language,
                                                        std::size_t horizon,
                                                        const ConfluentParams& p,
                                                        std::size_t max_len) {
  if (p.s < 2)
    throw std::invalid_argument(
        "classification by extension count needs s >= 2; for s == 1 every "
        "palindrome has exactly one palindromic extension");
  std::size_t cap = std::min(max_len, horizon >= 2 ? horizon - 2 : 0);
  UVLadderWords ladder = uv_ladder_up_to(p, cap);
  std::vector<PalindromeVerdict> out;
  for (Word& pal : tree.palindromes_up_to(cap)) {
    PalindromeClass cls = palindromic_extensions(pal, language, horizon);
    bool is_u = std::find(ladder.u.begin(), ladder.u.end(), pal) != ladder.u.end();
    bool is_v = std::find(ladder.v.begin(), ladder.v.end(), pal) != ladder.v.end();
    PalindromeKind kind = cls.kind();
    bool match = (kind == PalindromeKind::Maximal) == is_u &&
                 (kind == PalindromeKind::TwoExtensions) == is_v;
    out.push_back({std::move(pal), kind, is_u, is_v, match});
  }
  return out;
}

int closed_form_p(const ConfluentParams& p, std::size_t n) {
  return closed_form_p_table(p, n)[n];
}

std::vector<int> closed_form_p_table(const ConfluentParams& p, std::size_t n_max) {
  std::vector<int> out(n_max + 1, 0);
  int m = static_cast<int>(p.m);
  if (p.s == 1) {
    for (std::size_t n = 0; n <= n_max; ++n) out[n] = (n % 2 == 0) ? 1 : m;
    return out;
  }
  LengthLadder lad(p);
  bool t_odd = p.t % 2 == 1, s_odd = p.s % 2 == 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    BigInt bn(n);
    std::optional<std::size_t> win = lad.window_containing(bn);
    bool odd = n % 2 == 1;
    int val = 0;
    if (s_odd && !t_odd) {
      val = odd ? m : (win ? 2 : 1);
    } else if (s_odd && t_odd) {
      if (odd)
        val = (win && *win % (p.m + 1) != 0) ? m + 1 : m;
      else
        val = (win && *win % (p.m + 1) == 0) ? 2 : 1;
    } else if (!s_odd && t_odd) {
      if (odd) {
        if (win && *win >= 2)
          val = m + 2;
        else
          val = (bn <= lad.v(1)) ? m : m + 1;
      } else {
        val = (bn <= lad.u(1)) ? 1 : 0;
      }
    } else {  // t, s both even
      if (odd) {
        val = (bn <= lad.u(p.m)) ? static_cast<int>(lad.count_u_at_least(p.m, bn)) : 0;
      } else {
        if (win && *win >= p.m + 1)
          val = m + 2;
        else if (bn <= lad.v(p.m + 1))
          val = static_cast<int>(lad.count_v_below(p.m, bn)) + 1;
        else
          val = m + 1;
      }
    }
    out[n] = val;
  }
  return out;
}

std::optional<Letter> center_of(std::span<const Letter> w) {
  if (!is_palindrome(w)) throw std::invalid_argument("not a palindrome");
  if (w.size() % 2 == 0) return std::nullopt;
  return w[w.size() / 2];
}

DefectSeries defect_series(std::span<const Letter> w, std::size_t alphabet_size) {
  Eertree tree(alphabet_size);
  tree.append_all(w);
  const std::vector<std::uint8_t>& flags = tree.new_palindrome_flags();
  DefectSeries out;
  out.defect.resize(w.size() + 1);
  out.defect[0] = 0;
  std::int64_t missing = 0;
  for (std::size_t k = 1; k <= w.size(); ++k) {
    missing += flags[k - 1] ? 0 : 1;
    out.defect[k] = missing;
  }
  out.full = missing == 0;
  return out;
}

PalindromicSuffix longest_palindromic_suffix(std::span<const Letter> w,
                                             std::size_t alphabet_size) {
  if (w.empty()) return {Word{}, false};
  Eertree tree(alphabet_size);
  tree.append_all(w);
  std::size_t l = tree.longest_suffix_palindrome_length();
  return {Word(w.end() - l, w.end()), tree.longest_suffix_palindrome_unioccurrent()};
}

}  // namespace ubeta
