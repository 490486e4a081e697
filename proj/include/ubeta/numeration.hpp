#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "ubeta/parry.hpp"

namespace ubeta {

using BigInt = boost::multiprecision::cpp_int;

// Canonical numeration basis for confluent digits t,...,t,s:
//   G_0 = 1,
//   G_n = t(G_{n-1}+...+G_0) + 1            for 1 <= n <= m-1,
//   G_n = t(G_{n-1}+...+G_{n-m+1}) + s G_{n-m}  for n >= m.
// Returns G_0..G_k.
std::vector<BigInt> numeration_basis(const ConfluentParams& p, std::size_t k);

// (|V^(k)|, |U^(k)|) for k >= 1:
//   |V^(k)| = t * sum_{i<k} G_i,   |U^(k)| = |V^(k)| + (s-1) G_{k-1}.
std::pair<BigInt, BigInt> uv_lengths(const ConfluentParams& p, std::size_t k);

// Incremental view of the same ladder with window queries. Windows are the
// intervals (|V^(k)|, |U^(k)|], pairwise disjoint and increasing (empty when
// s == 1).
class LengthLadder {
 public:
  explicit LengthLadder(const ConfluentParams& p);

  const BigInt& v(std::size_t k);  // |V^(k)|, k >= 1
  const BigInt& u(std::size_t k);  // |U^(k)|, k >= 1
  const BigInt& g(std::size_t i);  // G_i, i >= 0

  // k with |V^(k)| < n <= |U^(k)|, if any.
  std::optional<std::size_t> window_containing(const BigInt& n);

  // #{k in [1, k_max] : n <= |U^(k)|} and #{k in [1, k_max] : n > |V^(k)|}.
  std::size_t count_u_at_least(std::size_t k_max, const BigInt& n);
  std::size_t count_v_below(std::size_t k_max, const BigInt& n);

 private:
  void ensure(std::size_t k);
  ConfluentParams p_;
  std::vector<BigInt> g_, vlen_, ulen_;  // vlen_[k-1] = |V^(k)|
  BigInt gsum_;                          // sum of g_ entries
};

}  // namespace ubeta
