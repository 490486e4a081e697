#include "ubeta/branches.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>

#include "ubeta/palindromes.hpp"

namespace ubeta {

bool branch_exists(const ConfluentParams& p, std::optional<Letter> center) {
  if (center && *center >= p.m) throw std::invalid_argument("center letter out of alphabet");
  bool t_odd = p.t % 2 == 1, s_odd = p.s % 2 == 1;
  if (s_odd) return true;
  return center.has_value() ? t_odd : !t_odd;
}

namespace {

std::string parity_note(const ConfluentParams& p, std::optional<Letter> center) {
  std::string who = center ? "letter centers" : "the empty center";
  return "no infinite palindromic branch with " + who + " for t " +
         (p.t % 2 ? "odd" : "even") + ", s " + (p.s % 2 ? "odd" : "even");
}

struct LadderPlan {
  Word start;
  std::size_t modulus;  // accept ladder indices n with n % modulus == residue
  std::size_t residue;
};

// Which ladder converges to the branch with this center. V^(n) covers every
// case except letter centers with t even, s odd, where the W-ladder
// (W^(1) = 0, same step) walks the letters instead.
LadderPlan plan_for(const ConfluentParams& p, std::optional<Letter> center) {
  bool t_odd = p.t % 2 == 1, s_odd = p.s % 2 == 1;
  Word v1(p.t, 0);
  if (!center) {
    if (!t_odd) return {v1, 1, 0};
    return {v1, p.m + std::size_t(1), 0};  // t, s odd
  }
  std::size_t c = *center;
  if (t_odd && s_odd) return {v1, p.m + std::size_t(1), (c + 1) % (p.m + std::size_t(1))};
  if (t_odd) return {v1, p.m, (c + 1) % p.m};  // s even
  return {Word{0}, p.m, (c + 1) % p.m};        // t even, s odd: W-ladder
}

}  // namespace

Word branch_central_factor(const ConfluentParams& p, std::optional<Letter> center,
                           std::size_t min_len, std::size_t length_cap) {
  if (!branch_exists(p, center))
    throw BranchAbsent(parity_note(p, center));
  std::size_t target = min_len;
  if (center)
    target += (target % 2 == 0) ? 1 : 0;
  else
    target += target % 2;

  LadderPlan plan = plan_for(p, center);
  Morphism phi = canonical_substitution(digits_of(p));
  Word x = plan.start;
  std::size_t n = 1;
  while (x.size() < target || n % plan.modulus != plan.residue) {
    if (phi.total_image_length(x) + p.t > length_cap)
      throw std::length_error("branch central factor would exceed the length cap");
    Word next = phi.apply(x);
    next.insert(next.end(), p.t, 0);
    x = std::move(next);
    ++n;
  }
  Word out = central_slice(x, target);
  assert(is_palindrome(out));
  assert(center_of(out) == center);
  return out;
}

PsiResult psi_substitution(const ConfluentParams& p) {
  bool t_odd = p.t % 2 == 1, s_odd = p.s % 2 == 1;
  if (t_odd && !s_odd)
    throw BranchAbsent(parity_note(p, std::nullopt));
  Morphism phi = canonical_substitution(digits_of(p));
  Word w;
  std::size_t j;
  if (!t_odd) {
    j = 1;
    w.assign(p.t / 2, 0);
  } else {
    j = p.m + std::size_t(1);
    Word half((p.t + 1) / 2, 0);
    w = phi.power(p.m).apply(half);
    w.insert(w.end(), (p.t - p.s) / 2, 0);
  }
  Morphism phi_j = phi.power(j);
  std::vector<Word> images(p.m);
  bool all_pal = true;
  for (std::size_t a = 0; a < p.m; ++a) {
    Word x = phi_j.image(static_cast<Letter>(a));
    x.insert(x.end(), w.begin(), w.end());
    if (!is_prefix_of(w, x))
      throw std::logic_error("conjugator is not a prefix of phi^j(a) w");
    images[a] = Word(x.begin() + w.size(), x.end());
    all_pal = all_pal && is_palindrome(images[a]);
  }
  return {Morphism(p.m, std::move(images)), std::move(w), all_pal};
}

Word epsilon_branch_right_half(const ConfluentParams& p, std::size_t n,
                               std::size_t length_cap) {
  bool t_odd = p.t % 2 == 1, s_odd = p.s % 2 == 1;
  if (t_odd && !s_odd) throw BranchAbsent(parity_note(p, std::nullopt));
  std::size_t modulus = t_odd ? p.m + std::size_t(1) : 1;
  Morphism phi = canonical_substitution(digits_of(p));
  Word x(p.t, 0);
  std::size_t k = 1;
  while (x.size() < 2 * n || k % modulus != 0) {
    if (phi.total_image_length(x) + p.t > length_cap)
      throw std::length_error("branch development exceeds the length cap");
    Word next = phi.apply(x);
    next.insert(next.end(), p.t, 0);
    x = std::move(next);
    ++k;
  }
  assert(x.size() % 2 == 0);
  return Word(x.begin() + x.size() / 2, x.begin() + x.size() / 2 + n);
}

PsiVerification verify_psi(const ConfluentParams& p, std::size_t depth) {
  PsiResult res = psi_substitution(p);
  bool reverse_images = p.t % 2 == 1;  // t, s odd: the branch fixes a -> reverse(psi(a))
  Word ref = epsilon_branch_right_half(p, depth + 1);
  Word q(ref.begin(), ref.begin() + depth);
  Word image;
  image.reserve(res.psi.total_image_length(q));
  for (Letter a : q) {
    Word im = res.psi.image(a);
    if (reverse_images) std::reverse(im.begin(), im.end());
    image.insert(image.end(), im.begin(), im.end());
    if (image.size() >= depth) break;
  }
  std::size_t checked = std::min(image.size(), depth);
  for (std::size_t i = 0; i < checked; ++i)
    if (image[i] != ref[i]) return {false, checked, i};
  return {true, checked, std::nullopt};
}

namespace {

using boost::multiprecision::cpp_int;

// floor(j * a) for a = 1/(beta+1) = (t+2-sqrt(t^2+4)) / (2t), exact.
cpp_int floor_mult_alpha(const cpp_int& j, std::uint32_t t) {
  if (j == 0) return 0;
  cpp_int d = cpp_int(t) * t + 4;
  cpp_int radicand = j * j * d;
  cpp_int root = boost::multiprecision::sqrt(radicand);  // floor(j sqrt(d)), irrational inside
  cpp_int q = j * (t + 2) - root - 1;
  return q / (2 * cpp_int(t));
}

}  // namespace

Word mechanical_word(const ConfluentParams& p, std::size_t n_len) {
  if (p.m != 2 || p.s != 1)
    throw std::invalid_argument("mechanical form implemented for digit strings (t, 1) only");
  Word out;
  out.reserve(n_len);
  cpp_int prev = floor_mult_alpha(1, p.t);
  for (std::size_t n = 0; n < n_len; ++n) {
    cpp_int cur = floor_mult_alpha(cpp_int(n) + 2, p.t);
    out.push_back(static_cast<Letter>((cur - prev).convert_to<int>()));
    prev = cur;
  }
  return out;
}

}  // namespace ubeta
