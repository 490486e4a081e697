#include "ubeta/complexity.hpp"

#include <array>
#include <cstring>
#include <unordered_map>

#include "ubeta/eertree.hpp"
#include "ubeta/factor_index.hpp"

namespace ubeta {

PrefixProfiles assemble_profiles(const std::vector<std::int64_t>& c_full,
                                 const std::vector<std::int64_t>& c_half,
                                 const std::vector<std::int64_t>& p_full,
                                 const std::vector<std::int64_t>& p_half, std::size_t n_max) {
  std::size_t cap = c_full.size() - 1;
  std::size_t horizon = 0;
  while (horizon < cap && c_full[horizon + 1] == c_half[horizon + 1] &&
         p_full[horizon + 1] == p_half[horizon + 1])
    ++horizon;

  PrefixProfiles out;
  out.complexity.horizon = horizon;
  out.complexity.truncated = horizon < n_max;
  out.complexity.c.assign(c_full.begin(), c_full.begin() + horizon + 1);
  for (std::size_t n = 0; n < horizon; ++n)
    out.complexity.delta.push_back(c_full[n + 1] - c_full[n]);
  for (std::size_t n = 0; n + 1 < horizon; ++n)
    out.complexity.delta2.push_back(out.complexity.delta[n + 1] - out.complexity.delta[n]);
  out.palindromes.horizon = horizon;
  out.palindromes.truncated = horizon < n_max;
  out.palindromes.p.assign(p_full.begin(), p_full.begin() + horizon + 1);
  return out;
}

PrefixProfiles profile_prefix(std::span<const Letter> prefix, std::size_t n_max,
                              std::size_t alphabet_size) {
  if (prefix.empty()) {
    PrefixProfiles out;
    out.complexity.c = {1};
    out.palindromes.p = {1};
    out.complexity.truncated = n_max > 0;
    out.palindromes.truncated = n_max > 0;
    return out;
  }
  std::size_t half = prefix.size() / 2;
  std::size_t cap = n_max;
  if (half >= 1) cap = std::min(cap, half - 1);

  FactorIndex full_idx(prefix, alphabet_size);
  FactorIndex half_idx(prefix.subspan(0, half), alphabet_size);

  Eertree tree(alphabet_size);
  tree.append_all(prefix.subspan(0, half));
  std::vector<std::int64_t> p_half = tree.counts_by_length(cap);
  tree.append_all(prefix.subspan(half));

  return assemble_profiles(full_idx.counts_by_length(cap), half_idx.counts_by_length(cap),
                           tree.counts_by_length(cap), p_half, n_max);
}

ComplexityProfile factor_profile(std::span<const Letter> prefix, std::size_t n_max,
                                 std::size_t alphabet_size) {
  return profile_prefix(prefix, n_max, alphabet_size).complexity;
}

namespace {

constexpr std::uint64_t kHashMod = (std::uint64_t(1) << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kHashMod);
}

struct ExtGroup {
  std::size_t first_pos;
  std::array<std::uint64_t, 4> left{}, right{};
};

void set_bit(std::array<std::uint64_t, 4>& mask, Letter a) {
  mask[a >> 6] |= std::uint64_t(1) << (a & 63);
}

std::vector<Letter> bits_of(const std::array<std::uint64_t, 4>& mask) {
  std::vector<Letter> out;
  for (int w = 0; w < 4; ++w)
    for (int b = 0; b < 64; ++b)
      if (mask[w] >> b & 1) out.push_back(static_cast<Letter>(w * 64 + b));
  return out;
}

}  // namespace

SpecialFactorReport special_factors(std::span<const Letter> prefix, std::size_t n,
                                    std::size_t alphabet_size) {
  SpecialFactorReport rep{n, {}, {}};
  if (n == 0) {
    std::array<std::uint64_t, 4> seen{};
    for (Letter a : prefix) set_bit(seen, a);
    std::vector<Letter> letters = bits_of(seen);
    if (letters.size() >= 2) {
      rep.left_specials.push_back({Word{}, letters});
      rep.right_specials.push_back({Word{}, letters});
    }
    return rep;
  }
  if (n > prefix.size()) return rep;

  // Fingerprint each window; exactness restored by comparing each window
  // against its group's first occurrence.
  std::uint64_t base = 0x9e3779b97f4a7c55ULL % kHashMod;
  std::uint64_t top = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) top = mulmod(top, base);
  std::vector<ExtGroup> groups;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_hash;
  by_hash.reserve(prefix.size() * 2);

  std::uint64_t h = 0;
  for (std::size_t i = 0; i < n; ++i) h = (mulmod(h, base) + prefix[i] + 1) % kHashMod;
  for (std::size_t pos = 0;; ++pos) {
    std::size_t gid = static_cast<std::size_t>(-1);
    auto& bucket = by_hash[h];
    for (std::size_t cand : bucket) {
      if (std::memcmp(prefix.data() + groups[cand].first_pos, prefix.data() + pos, n) == 0) {
        gid = cand;
        break;
      }
    }
    if (gid == static_cast<std::size_t>(-1)) {
      gid = groups.size();
      groups.push_back(ExtGroup{pos, {}, {}});
      bucket.push_back(gid);
    }
    if (pos > 0) set_bit(groups[gid].left, prefix[pos - 1]);
    if (pos + n < prefix.size()) set_bit(groups[gid].right, prefix[pos + n]);

    if (pos + n >= prefix.size()) break;
    h = (mulmod(h - mulmod(prefix[pos] + 1, top) % kHashMod + kHashMod, base) + prefix[pos + n] +
         1) %
        kHashMod;
  }

  for (const ExtGroup& g : groups) {
    std::vector<Letter> lext = bits_of(g.left);
    std::vector<Letter> rext = bits_of(g.right);
    Word w(prefix.begin() + g.first_pos, prefix.begin() + g.first_pos + n);
    if (lext.size() >= 2) rep.left_specials.push_back({w, lext});
    if (rext.size() >= 2) rep.right_specials.push_back({std::move(w), rext});
  }
  (void)alphabet_size;
  return rep;
}

int closed_form_delta_c(const ConfluentParams& p, std::size_t n) {
  if (p.s == 1) return static_cast<int>(p.m) - 1;
  LengthLadder lad(p);
  return lad.window_containing(BigInt(n)) ? static_cast<int>(p.m)
                                          : static_cast<int>(p.m) - 1;
}

std::vector<int> closed_form_delta_c_table(const ConfluentParams& p, std::size_t n_max) {
  std::vector<int> out(n_max + 1, static_cast<int>(p.m) - 1);
  if (p.s == 1) return out;
  LengthLadder lad(p);
  for (std::size_t k = 1; lad.v(k) <= n_max; ++k) {
    BigInt lo = lad.v(k) + 1;
    BigInt hi = std::min(lad.u(k), BigInt(n_max));
    for (BigInt n = lo; n <= hi; ++n) out[n.convert_to<std::size_t>()] = static_cast<int>(p.m);
  }
  return out;
}

}  // namespace ubeta
