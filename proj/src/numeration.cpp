#include "ubeta/numeration.hpp"

namespace ubeta {

std::vector<BigInt> numeration_basis(const ConfluentParams& p, std::size_t k) {
  if (p.m < 2) throw std::invalid_argument("confluent params need m >= 2");
  std::vector<BigInt> g;
  g.reserve(k + 1);
  g.emplace_back(1);
  BigInt window = 1;  // sum of the last min(n, m-1) entries before step n
  for (std::size_t n = 1; n <= k; ++n) {
    BigInt next = (n <= p.m - 1) ? BigInt(p.t * window + 1)
                                 : BigInt(p.t * window + p.s * g[n - p.m]);
    window += next;
    if (n >= p.m - 1) window -= g[n - (p.m - 1)];
    g.push_back(std::move(next));
  }
  return g;
}

std::pair<BigInt, BigInt> uv_lengths(const ConfluentParams& p, std::size_t k) {
  if (k == 0) throw std::invalid_argument("ladder index starts at 1");
  std::vector<BigInt> g = numeration_basis(p, k - 1);
  BigInt sum = 0;
  for (const BigInt& x : g) sum += x;
  BigInt v = p.t * sum;
  BigInt u = v + (p.s - 1) * g[k - 1];
  return {std::move(v), std::move(u)};
}

LengthLadder::LengthLadder(const ConfluentParams& p) : p_(p) {
  if (p.m < 2) throw std::invalid_argument("confluent params need m >= 2");
  g_.emplace_back(1);
  gsum_ = 1;
}

void LengthLadder::ensure(std::size_t k) {
  while (vlen_.size() < k) {
    std::size_t idx = vlen_.size();  // building |V^(idx+1)|, needs G_0..G_idx
    while (g_.size() <= idx) {
      std::size_t n = g_.size();
      BigInt window = 0;
      for (std::size_t j = (n >= p_.m - 1) ? n - (p_.m - 1) : 0; j < n; ++j) window += g_[j];
      BigInt next = (n <= p_.m - 1) ? BigInt(p_.t * window + 1)
                                    : BigInt(p_.t * window + p_.s * g_[n - p_.m]);
      gsum_ += next;
      g_.push_back(std::move(next));
    }
    vlen_.push_back(p_.t * gsum_);
    ulen_.push_back(vlen_.back() + (p_.s - 1) * g_[idx]);
  }
}

const BigInt& LengthLadder::v(std::size_t k) {
  if (k == 0) throw std::invalid_argument("ladder index starts at 1");
  ensure(k);
  return vlen_[k - 1];
}

const BigInt& LengthLadder::u(std::size_t k) {
  if (k == 0) throw std::invalid_argument("ladder index starts at 1");
  ensure(k);
  return ulen_[k - 1];
}

const BigInt& LengthLadder::g(std::size_t i) {
  while (g_.size() <= i) ensure(vlen_.size() + 1);
  return g_[i];
}

std::optional<std::size_t> LengthLadder::window_containing(const BigInt& n) {
  if (n <= 0) return std::nullopt;
  for (std::size_t k = 1;; ++k) {
    if (v(k) >= n) return std::nullopt;  // ladders only grow from here
    if (n <= u(k)) return k;
  }
}

std::size_t LengthLadder::count_u_at_least(std::size_t k_max, const BigInt& n) {
  std::size_t c = 0;
  for (std::size_t k = 1; k <= k_max; ++k)
    if (n <= u(k)) ++c;
  return c;
}

std::size_t LengthLadder::count_v_below(std::size_t k_max, const BigInt& n) {
  std::size_t c = 0;
  for (std::size_t k = 1; k <= k_max; ++k)
    if (n > v(k)) ++c;
  return c;
}

}  // namespace ubeta
