#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ubeta/word.hpp"

namespace ubeta {

// Suffix automaton over a fixed alphabet. States recognize exactly the
// factors of the indexed word; counting states by [minlen, len] intervals
// yields the whole complexity sequence in one pass.
class FactorIndex {
 public:
  FactorIndex(std::span<const Letter> w, std::size_t alphabet_size);

  std::size_t word_length() const { return length_; }
  std::size_t alphabet_size() const { return m_; }

  bool contains(std::span<const Letter> w) const;

  // C(0..n_max) as counts of distinct factors per length; C(n) == 0 beyond
  // the word length.
  std::vector<std::int64_t> counts_by_length(std::size_t n_max) const;

 private:
  std::int32_t transition(std::int32_t state, Letter a) const {
    return trans_[static_cast<std::size_t>(state) * m_ + a];
  }
  void extend(Letter a);

  std::size_t m_;
  std::size_t length_ = 0;
  std::vector<std::int32_t> len_, link_;
  std::vector<std::int32_t> trans_;  // states * m_, -1 = absent
  std::int32_t last_ = 0;
};

}  // namespace ubeta
