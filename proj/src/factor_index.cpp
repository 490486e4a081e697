#include "ubeta/factor_index.hpp"

#include <stdexcept>

namespace ubeta {

FactorIndex::FactorIndex(std::span<const Letter> w, std::size_t alphabet_size)
    : m_(alphabet_size) {
  if (m_ == 0 || m_ > 256) throw std::invalid_argument("alphabet size must be in 1..256");
  len_.reserve(2 * w.size() + 2);
  link_.reserve(2 * w.size() + 2);
  trans_.reserve((2 * w.size() + 2) * m_);
  len_.push_back(0);
  link_.push_back(-1);
  trans_.assign(m_, -1);
  for (Letter a : w) {
    if (a >= m_) throw std::invalid_argument("letter out of alphabet");
    extend(a);
  }
  length_ = w.size();
}

void FactorIndex::extend(Letter a) {
  auto new_state = [&](std::int32_t length, std::int32_t link, std::int32_t clone_from) {
    std::int32_t id = static_cast<std::int32_t>(len_.size());
    len_.push_back(length);
    link_.push_back(link);
    if (clone_from < 0) {
      trans_.insert(trans_.end(), m_, -1);
    } else {
      std::size_t base = static_cast<std::size_t>(clone_from) * m_;
      trans_.insert(trans_.end(), trans_.begin() + base, trans_.begin() + base + m_);
    }
    return id;
  };

  std::int32_t cur = new_state(len_[last_] + 1, -1, -1);
  std::int32_t p = last_;
  while (p != -1 && transition(p, a) == -1) {
    trans_[static_cast<std::size_t>(p) * m_ + a] = cur;
    p = link_[p];
  }
  if (p == -1) {
    link_[cur] = 0;
  } else {
    std::int32_t q = transition(p, a);
    if (len_[p] + 1 == len_[q]) {
      link_[cur] = q;
    } else {
      std::int32_t clone = new_state(len_[p] + 1, link_[q], q);
      while (p != -1 && transition(p, a) == q) {
        trans_[static_cast<std::size_t>(p) * m_ + a] = clone;
        p = link_[p];
      }
      link_[q] = clone;
      link_[cur] = clone;
    }
  }
  last_ = cur;
}

bool FactorIndex::contains(std::span<const Letter> w) const {
  std::int32_t s = 0;
  for (Letter a : w) {
    if (a >= m_) return false;
    s = transition(s, a);
    if (s == -1) return false;
  }
  return true;
}

std::vector<std::int64_t> FactorIndex::counts_by_length(std::size_t n_max) const {
  std::vector<std::int64_t> diff(n_max + 2, 0);
  for (std::size_t v = 1; v < len_.size(); ++v) {
    std::size_t lo = static_cast<std::size_t>(len_[link_[v]]) + 1;
    std::size_t hi = static_cast<std::size_t>(len_[v]);
    if (lo > n_max) continue;
    diff[lo] += 1;
    diff[std::min(hi, n_max) + 1] -= 1;
  }
  std::vector<std::int64_t> c(n_max + 1, 0);
  c[0] = 1;
  std::int64_t run = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    run += diff[n];
    c[n] = run;
  }
  return c;
}

}  // namespace ubeta
