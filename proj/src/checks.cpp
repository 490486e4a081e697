#include "ubeta/checks.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "ubeta/complexity.hpp"
#include "ubeta/factor_index.hpp"

namespace ubeta {

std::size_t default_prefix_len(const Classification& cls) {
  BigInt want(100'000);
  if (cls.params) {
    BigInt four_u = 4 * uv_lengths(*cls.params, 6).second;
    if (four_u > want) want = four_u;
  }
  if (want > 10'000'000) want = BigInt(10'000'000);
  return want.convert_to<std::size_t>();
}

namespace {

class Stopwatch {
 public:
  Stopwatch(std::vector<std::pair<std::string, std::int64_t>>& sink, bool enabled)
      : sink_(sink), enabled_(enabled) {}
  void lap(const std::string& name) {
    if (!enabled_) return;
    auto now = std::chrono::steady_clock::now();
    sink_.emplace_back(
        name, std::chrono::duration_cast<std::chrono::microseconds>(now - t_).count());
    t_ = now;
  }

 private:
  std::vector<std::pair<std::string, std::int64_t>>& sink_;
  bool enabled_;
  std::chrono::steady_clock::time_point t_ = std::chrono::steady_clock::now();
};

std::size_t lcp_len(std::span<const Letter> a, std::span<const Letter> b) {
  std::size_t n = std::min(a.size(), b.size()), i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

std::string ws(const Word& w, std::size_t m) { return word_to_string(w, m); }

}  // namespace

AnalysisResult run_analysis(const RenyiDigits& d, const CheckOptions& opt) {
  AnalysisResult res;
  res.digits = d;
  res.cls = classify(d);
  const bool confluent = res.cls.tag != WordClass::NonConfluent;
  const std::size_t m = d.m();
  Stopwatch watch(res.timings_us, opt.timings);

  res.prefix_len = opt.prefix_len ? opt.prefix_len : default_prefix_len(res.cls);
  Morphism phi = canonical_substitution(d);
  Word prefix = fixed_point_prefix(phi, 0, res.prefix_len);
  watch.lap("prefix");

  std::size_t half = prefix.size() / 2;
  std::size_t cap = std::min(opt.n_max, half >= 1 ? half - 1 : 0);
  FactorIndex language(prefix, m);
  FactorIndex half_language(std::span<const Letter>(prefix).subspan(0, half), m);
  Eertree tree(m);
  tree.append_all(std::span<const Letter>(prefix).subspan(0, half));
  std::vector<std::int64_t> p_half = tree.counts_by_length(cap);
  tree.append_all(std::span<const Letter>(prefix).subspan(half));
  res.profiles = assemble_profiles(language.counts_by_length(cap),
                                   half_language.counts_by_length(cap),
                                   tree.counts_by_length(cap), p_half, opt.n_max);
  const std::size_t H = res.profiles.complexity.horizon;
  const std::vector<std::int64_t>& C = res.profiles.complexity.c;
  const std::vector<std::int64_t>& dC = res.profiles.complexity.delta;
  const std::vector<std::int64_t>& d2C = res.profiles.complexity.delta2;
  const std::vector<std::int64_t>& P = res.profiles.palindromes.p;
  watch.lap("profiles");

  const std::optional<ConfluentParams>& par = res.cls.params;
  if (confluent) {
    res.delta_c_closed = closed_form_delta_c_table(*par, H);
    res.p_closed = closed_form_p_table(*par, H);
  }
  watch.lap("closed_forms");

  auto add = [&](std::string name, bool applicable, bool pass, std::string detail = "") {
    res.verdicts.push_back({std::move(name), applicable, applicable ? pass : true,
                            std::move(detail)});
  };

  add("primitive_substitution", true, is_primitive(phi));

  {  // C(1) = m and the first-difference window formula
    bool ok = confluent;
    std::string detail;
    if (confluent) {
      for (std::size_t n = 0; n < H && ok; ++n) {
        if (dC[n] != res.delta_c_closed[n]) {
          ok = false;
          detail = "n=" + std::to_string(n) + ": delta C=" + std::to_string(dC[n]) +
                   " closed=" + std::to_string(res.delta_c_closed[n]);
        }
      }
      if (ok && H >= 1 && C[1] != static_cast<std::int64_t>(m)) {
        ok = false;
        detail = "C(1)=" + std::to_string(C[1]);
      }
    }
    add("delta_c_window_formula", confluent, ok, detail);
  }

  {  // second difference spikes only at ladder lengths
    bool ok = true;
    std::string detail;
    if (confluent) {
      LengthLadder lad(*par);
      std::vector<std::int64_t> expected(H >= 1 ? H - 1 : 0, 0);
      for (std::size_t k = 1; lad.v(k) < static_cast<std::int64_t>(expected.size()) + 1; ++k) {
        BigInt v = lad.v(k), u = lad.u(k);
        if (v < BigInt(expected.size())) expected[v.convert_to<std::size_t>()] += 1;
        if (u < BigInt(expected.size())) expected[u.convert_to<std::size_t>()] -= 1;
      }
      for (std::size_t n = 0; n < d2C.size() && ok; ++n) {
        if (d2C[n] != expected[n]) {
          ok = false;
          detail = "n=" + std::to_string(n) + ": delta2 C=" + std::to_string(d2C[n]) +
                   " expected=" + std::to_string(expected[n]);
        }
      }
    }
    add("delta2_c_spikes", confluent, ok, detail);
  }

  {  // P(n) closed form, all parity cases
    bool ok = true;
    std::string detail;
    if (confluent) {
      for (std::size_t n = 0; n <= H && ok; ++n) {
        if (P[n] != res.p_closed[n]) {
          ok = false;
          detail = "n=" + std::to_string(n) + ": P=" + std::to_string(P[n]) +
                   " closed=" + std::to_string(res.p_closed[n]);
        }
      }
    }
    add("palindromic_complexity_closed_form", confluent, ok, detail);
  }

  {  // P(n+1) + P(n) = delta C(n) + 2
    bool ok = true;
    std::string detail;
    if (confluent) {
      for (std::size_t n = 0; n < H && ok; ++n) {
        if (P[n + 1] + P[n] != dC[n] + 2) {
          ok = false;
          detail = "n=" + std::to_string(n) + ": P(n+1)+P(n)=" + std::to_string(P[n + 1] + P[n]) +
                   " deltaC+2=" + std::to_string(dC[n] + 2);
        }
      }
    }
    add("palindrome_sum_identity", confluent, ok, detail);
  }

  {  // maximal zero blocks: X 0^t 1, 1 0^t X, 1 0^{t+s} 1 and nothing else
    bool ok = true;
    std::string detail;
    if (confluent) {
      std::uint32_t t = par->t, s = par->s;
      std::size_t prev_nonzero = std::string::npos;
      for (std::size_t i = 0; i < prefix.size() && ok; ++i) {
        if (prefix[i] == 0) continue;
        if (prev_nonzero != std::string::npos) {
          std::size_t gap = i - prev_nonzero - 1;
          Letter left = prefix[prev_nonzero], right = prefix[i];
          bool good = (gap == t && (left == 1 || right == 1)) ||
                      (gap == t + s && left == 1 && right == 1);
          if (!good) {
            ok = false;
            detail = "position " + std::to_string(prev_nonzero) + ": " +
                     std::to_string(+left) + " 0^" + std::to_string(gap) + " " +
                     std::to_string(+right);
          }
        }
        prev_nonzero = i;
      }
    }
    add("zero_block_structure", confluent, ok, detail);
  }

  std::vector<Word> small_palindromes =
      confluent ? tree.palindromes_up_to(std::min(opt.lift_max_len, H >= 2 ? H - 2 : 0))
                : std::vector<Word>{};

  {  // p palindromic factor <-> phi(p)0^t palindromic factor, extensions preserved
    bool ok = true;
    std::string detail;
    if (confluent) {
      std::uint32_t t = par->t;
      for (const Word& pal : small_palindromes) {
        Word lifted = phi.apply(pal);
        lifted.insert(lifted.end(), t, 0);
        if (!is_palindrome(lifted)) {
          ok = false;
          detail = "phi(" + ws(pal, m) + ")0^t is not a palindrome";
          break;
        }
        if (lifted.size() + 2 <= H) {
          if (!language.contains(lifted)) {
            ok = false;
            detail = "phi(" + ws(pal, m) + ")0^t not a factor";
            break;
          }
          std::size_t e1 = palindromic_extensions(pal, language, H).extensions.size();
          std::size_t e2 = palindromic_extensions(lifted, language, H).extensions.size();
          if (e1 != e2) {
            ok = false;
            detail = ws(pal, m) + " has " + std::to_string(e1) + " palindromic extensions, " +
                     "its image " + std::to_string(e2);
            break;
          }
        }
      }
      // converse direction, structurally: non-palindromes lift to non-palindromes
      if (ok) {
        std::size_t tried = 0;
        for (std::size_t len = 2; len <= 6 && ok && tried < 64; ++len) {
          for (std::size_t pos = 0; pos + len <= prefix.size() && pos < 400 && ok; ++pos) {
            Word q(prefix.begin() + pos, prefix.begin() + pos + len);
            if (is_palindrome(q)) continue;
            ++tried;
            Word lifted = phi.apply(q);
            lifted.insert(lifted.end(), t, 0);
            if (is_palindrome(lifted)) {
              ok = false;
              detail = "non-palindrome " + ws(q, m) + " lifted to a palindrome";
            }
          }
        }
      }
    }
    add("palindrome_lifting", confluent, ok, detail);
  }

  {  // U/V ladders: lengths, palindromicity, prefix structure
    bool ok = true;
    std::string detail;
    if (confluent) {
      LengthLadder lengths(*par);
      UVLadderWords lad = uv_ladder_up_to(*par, std::min(opt.ladder_check_cap, prefix.size()));
      for (std::size_t i = 0; i < lad.v.size() && ok; ++i) {
        std::size_t k = i + 1;
        const Word &v = lad.v[i], &u = lad.u[i];
        if (BigInt(v.size()) != lengths.v(k) || BigInt(u.size()) != lengths.u(k)) {
          ok = false;
          detail = "k=" + std::to_string(k) + ": ladder word lengths disagree with the recurrence";
          break;
        }
        if (!is_palindrome(v) || !is_palindrome(u)) {
          ok = false;
          detail = "k=" + std::to_string(k) + ": ladder word is not a palindrome";
          break;
        }
        if (v.size() <= prefix.size() &&
            !std::equal(v.begin(), v.end(), prefix.begin())) {
          ok = false;
          detail = "V^(" + std::to_string(k) + ") is not a prefix of the word";
          break;
        }
        if (par->s >= 2) {
          if (!(lengths.v(k) < lengths.u(k) && lengths.u(k) < lengths.v(k + 1))) {
            ok = false;
            detail = "k=" + std::to_string(k) + ": |V| < |U| < |V'| fails";
            break;
          }
          if (u.size() <= prefix.size() &&
              lcp_len(u, prefix) != lengths.v(k).convert_to<std::size_t>()) {
            ok = false;
            detail = "k=" + std::to_string(k) +
                     ": longest common prefix with U^(k) is not |V^(k)|";
            break;
          }
        }
        if (u.size() + 0 <= H && !language.contains(u)) {
          ok = false;
          detail = "U^(" + std::to_string(k) + ") not a factor";
          break;
        }
      }
    }
    add("ladder_structure", confluent, ok, detail);
  }

  {  // extension-count classification of every palindrome up to the bound
    bool ok = true;
    std::string detail;
    if (confluent) {
      std::size_t bound = std::min(opt.classify_max_len, H >= 2 ? H - 2 : 0);
      if (par->s >= 2) {
        for (const PalindromeVerdict& pv :
             classify_all_palindromes(tree, language, H, *par, bound)) {
          if (!pv.match) {
            ok = false;
            detail = ws(pv.palindrome, m) + ": kind/ladder mismatch";
            break;
          }
        }
      } else {
        for (const Word& pal : tree.palindromes_up_to(bound)) {
          PalindromeClass cls = palindromic_extensions(pal, language, H);
          if (cls.extensions.size() != 1) {
            ok = false;
            detail = ws(pal, m) + " has " + std::to_string(cls.extensions.size()) +
                     " palindromic extensions";
            break;
          }
        }
      }
    }
    add("palindrome_extension_classification", confluent, ok, detail);
  }

  {  // left specials: the prefix with all letters, U-prefixes with two
    bool ok = true;
    std::string detail;
    if (confluent) {
      UVLadderWords lad = uv_ladder_up_to(*par, 64);
      std::vector<std::size_t> ns = {0, 1, 2, par->t, static_cast<std::size_t>(par->t) + par->s,
                                     std::min<std::size_t>(30, H >= 1 ? H - 1 : 0)};
      std::sort(ns.begin(), ns.end());
      ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
      for (std::size_t n : ns) {
        if (H < 1 || n > H - 1) continue;
        SpecialFactorReport rep = special_factors(prefix, n, m);
        std::int64_t sum = 0;
        for (const LetterExtensions& ls : rep.left_specials) {
          sum += static_cast<std::int64_t>(ls.letters.size()) - 1;
          bool is_word_prefix = std::equal(ls.factor.begin(), ls.factor.end(), prefix.begin());
          if (is_word_prefix) {
            if (ls.letters.size() != m) {
              ok = false;
              detail = "n=" + std::to_string(n) + ": prefix misses a left extension";
            }
          } else {
            bool u_prefix = false;
            for (const Word& u : lad.u)
              u_prefix |= ls.factor.size() <= u.size() &&
                          std::equal(ls.factor.begin(), ls.factor.end(), u.begin());
            if (!u_prefix || ls.letters.size() != 2) {
              ok = false;
              detail = "n=" + std::to_string(n) + ": stray left special " + ws(ls.factor, m);
            }
          }
        }
        if (ok && sum != dC[n]) {
          ok = false;
          detail = "n=" + std::to_string(n) + ": sum of extra left extensions " +
                   std::to_string(sum) + " != delta C " + std::to_string(dC[n]);
        }
        if (!ok) break;
      }
    }
    add("left_special_structure", confluent, ok, detail);
  }

  {  // centers move a -> a+1 -> ... -> m-1 -> 0 or eps under lifting
    bool ok = true;
    std::string detail;
    if (confluent) {
      std::uint32_t t = par->t, s = par->s;
      for (const Word& pal : small_palindromes) {
        Word lifted = phi.apply(pal);
        lifted.insert(lifted.end(), t, 0);
        std::optional<Letter> c = center_of(pal);
        std::optional<Letter> expect;
        if (c && *c + 1u < m)
          expect = static_cast<Letter>(*c + 1);
        else if (c)
          expect = ((s + t) % 2 == 1) ? std::optional<Letter>(0) : std::nullopt;
        else
          expect = (t % 2 == 0) ? std::nullopt : std::optional<Letter>(0);
        if (center_of(lifted) != expect) {
          ok = false;
          detail = "center of phi(" + ws(pal, m) + ")0^t off the expected track";
          break;
        }
      }
    }
    add("center_transport", confluent, ok, detail);
  }

  {  // V^(n) centers cycle through the alphabet / eps by parity case
    bool ok = true;
    std::string detail;
    if (confluent) {
      bool t_odd = par->t % 2 == 1, s_odd = par->s % 2 == 1;
      UVLadderWords lad = uv_ladder_up_to(*par, 4096);
      for (std::size_t i = 0; i < lad.v.size() && ok; ++i) {
        std::size_t n = i + 1;
        std::optional<Letter> expect;
        std::size_t nest = 0;  // V^(n) central in V^(n + nest)
        if (!t_odd) {
          expect = std::nullopt;
          nest = 1;
        } else if (!s_odd) {
          expect = static_cast<Letter>((n - 1) % m);
          nest = m;
        } else {
          nest = m + 1;
          if (n % (m + 1) == 0)
            expect = std::nullopt;
          else
            expect = static_cast<Letter>((n - 1) % (m + 1));
        }
        if (center_of(lad.v[i]) != expect) {
          ok = false;
          detail = "V^(" + std::to_string(n) + ") center off";
          break;
        }
        if (i + nest < lad.v.size() &&
            central_slice(lad.v[i + nest], lad.v[i].size()) != lad.v[i]) {
          ok = false;
          detail = "V^(" + std::to_string(n) + ") not central in V^(" +
                   std::to_string(n + nest) + ")";
        }
      }
    }
    add("ladder_centers", confluent, ok, detail);
  }

  {  // branch existence by parity, with palindromic central factors as witnesses
    bool ok = true;
    std::string detail;
    if (confluent) {
      std::size_t want_len = std::max(opt.branch_min_len, std::min<std::size_t>(H, 2000));
      for (std::size_t ci = 0; ci <= m && ok; ++ci) {
        std::optional<Letter> center =
            ci < m ? std::optional<Letter>(static_cast<Letter>(ci)) : std::nullopt;
        bool s_odd = par->s % 2 == 1, t_odd = par->t % 2 == 1;
        bool expect = s_odd || (center.has_value() ? t_odd : !t_odd);
        if (branch_exists(*par, center) != expect) {
          ok = false;
          detail = "existence table disagrees";
          break;
        }
        if (expect) {
          Word w = branch_central_factor(*par, center, want_len);
          if (!is_palindrome(w) || center_of(w) != center || !language.contains(w)) {
            ok = false;
            detail = "central factor for center " +
                     (center ? std::to_string(+*center) : std::string("eps")) + " rejected";
          } else {
            // uniqueness of the branch: factors at growing min_len are nested
            Word w2 = branch_central_factor(*par, center, 2 * w.size() + 8);
            if (central_slice(w2, w.size()) != w) {
              ok = false;
              detail = "central factors at increasing length are not nested";
            }
          }
        } else {
          try {
            branch_central_factor(*par, center, 8);
            ok = false;
            detail = "absent branch produced a factor";
          } catch (const BranchAbsent&) {
          }
        }
      }
    }
    add("branch_existence_table", confluent, ok, detail);
  }

  {  // s even: one parity carries only finitely many palindromes
    bool applicable = confluent && par->s % 2 == 0;
    bool ok = true;
    std::string detail;
    if (applicable) {
      LengthLadder lengths(*par);
      if (par->t % 2 == 1) {
        BigInt bound = lengths.u(1);
        if (BigInt(tree.max_palindrome_length_of_parity(0)) > bound) {
          ok = false;
          detail = "even palindrome longer than |U^(1)|";
        }
      } else {
        BigInt bound = lengths.u(m);
        if (BigInt(tree.max_palindrome_length_of_parity(1)) > bound) {
          ok = false;
          detail = "odd palindrome longer than |U^(m)|";
        }
      }
    }
    add("finite_parity_palindromes", applicable, ok, detail);
  }

  {  // conjugated substitution for the empty-center branch
    bool applicable = confluent;
    bool ok = true;
    std::string detail;
    if (applicable) {
      bool t_odd = par->t % 2 == 1, s_odd = par->s % 2 == 1;
      if (t_odd && !s_odd) {
        try {
          psi_substitution(*par);
          ok = false;
          detail = "psi exists despite the missing empty-center branch";
        } catch (const BranchAbsent&) {
        }
      } else {
        PsiResult psi = psi_substitution(*par);
        Morphism phi_j = phi.power(t_odd ? m + 1 : 1);
        for (std::size_t a = 0; a < m && ok; ++a) {
          if (psi.psi.image(static_cast<Letter>(a)).size() !=
              phi_j.image(static_cast<Letter>(a)).size()) {
            ok = false;
            detail = "psi image length differs from the conjugated power";
          }
        }
        if (ok && !t_odd && !psi.images_palindromic) {
          ok = false;
          detail = "t even but a psi image is not a palindrome";
        }
        res.psi = std::move(psi);
      }
    }
    add("psi_substitution", applicable, ok, detail);
  }

  {  // the branch equation and psi-invariance of the right half
    bool applicable = confluent && !(par->t % 2 == 1 && par->s % 2 == 0);
    bool ok = true;
    std::string detail;
    if (applicable) {
      PsiVerification ver = verify_psi(*par, opt.psi_depth);
      if (!ver.pass) {
        ok = false;
        detail = "first mismatch at position " + std::to_string(*ver.mismatch);
      }
      if (ok && res.psi) {
        // right half of the branch satisfies x = reverse(w) phi^j-reversed(x)
        std::size_t depth = std::min<std::size_t>(opt.psi_depth, 4096);
        Word ref = epsilon_branch_right_half(*par, depth);
        Word built = reversed(res.psi->conjugator);
        Morphism phi_j = phi.power(par->t % 2 == 1 ? m + 1 : 1);
        for (std::size_t i = 0; i < ref.size() && built.size() < depth; ++i) {
          Word im = reversed(phi_j.image(ref[i]));
          built.insert(built.end(), im.begin(), im.end());
        }
        built.resize(std::min(built.size(), depth));
        if (!std::equal(built.begin(), built.end(), ref.begin())) {
          ok = false;
          detail = "branch equation fails within depth " + std::to_string(depth);
        }
      }
    }
    add("psi_invariance", applicable, ok, detail);
  }

  {  // defect zero on every prefix iff confluent
    const std::vector<std::uint8_t>& flags = tree.new_palindrome_flags();
    std::size_t missing = 0;
    for (std::uint8_t f : flags) missing += f ? 0 : 1;
    bool ok = confluent ? missing == 0 : missing > 0;
    std::string detail = confluent && missing
                             ? std::to_string(missing) + " prefixes miss a new palindrome"
                             : "";
    add("fullness", true, ok, detail);
  }

  {  // reversal-closed language fails: palindromes die out
    bool applicable = !confluent;
    bool ok = true;
    std::string detail;
    if (applicable) {
      for (std::size_t n = H / 2 + 1; n <= H && ok; ++n) {
        if (P[n] != 0) {
          ok = false;
          detail = "P(" + std::to_string(n) + ")=" + std::to_string(P[n]);
        }
      }
    }
    add("palindrome_tail_vanishes", applicable, ok, detail);
  }

  {  // digits -> root -> digits
    bool ok = true;
    std::string detail;
    try {
      RenyiExpansion back = renyi_digits(dominant_root(d), m + 1);
      ok = back.finite && back.digits == d.digits;
      if (!ok) detail = "round trip produced a different digit string";
    } catch (const PrecisionError& e) {
      ok = false;
      detail = e.what();
    }
    add("digit_round_trip", true, ok, detail);
  }

  {  // two-letter unit case is Sturmian: floor-difference form matches
    bool applicable = confluent && m == 2 && par->s == 1;
    bool ok = true;
    std::string detail;
    if (applicable) {
      std::size_t n = std::min<std::size_t>(prefix.size(), 10'000);
      Word mech = mechanical_word(*par, n);
      for (std::size_t i = 0; i < n; ++i) {
        if (mech[i] != prefix[i]) {
          ok = false;
          detail = "first mismatch at position " + std::to_string(i);
          break;
        }
      }
    }
    add("sturmian_mechanical_equality", applicable, ok, detail);
  }

  watch.lap("checks");
  return res;
}

}  // namespace ubeta
