#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ubeta/word.hpp"

namespace ubeta {

// Palindromic tree: one node per distinct nonempty palindromic factor, built
// online, at most one new node per appended letter. The per-position
// new-node flags carry the whole defect story: the prefix of length k is
// "full" exactly when the first k flags are all set.
class Eertree {
 public:
  explicit Eertree(std::size_t alphabet_size);

  void append(Letter a);
  void append_all(std::span<const Letter> w) {
    for (Letter a : w) append(a);
  }

  static Eertree build(std::span<const Letter> w, std::size_t alphabet_size);

  std::size_t size() const { return word_.size(); }
  std::size_t alphabet_size() const { return m_; }
  const Word& word() const { return word_; }

  std::size_t distinct_nonempty() const { return len_.size() - 2; }

  // flag[i] == 1 iff appending letter i created a node, i.e. the longest
  // palindromic suffix of the (i+1)-prefix occurs there for the first time.
  const std::vector<std::uint8_t>& new_palindrome_flags() const { return new_flag_; }

  // P(n) for n = 0..n_max over the current word (P(0) = 1 for the empty word).
  std::vector<std::int64_t> counts_by_length(std::size_t n_max) const;

  // Distinct nonempty palindromic factors with length <= max_len, cut out of
  // the word at their first occurrence.
  std::vector<Word> palindromes_up_to(std::size_t max_len) const;

  std::size_t longest_suffix_palindrome_length() const;
  // First occurrence of the longest palindromic suffix ends at the last
  // position, i.e. it occurs exactly once so far.
  bool longest_suffix_palindrome_unioccurrent() const;

  std::size_t max_palindrome_length_of_parity(int parity) const;  // 0 even, 1 odd

 private:
  std::int32_t transition(std::int32_t node, Letter a) const {
    return trans_[static_cast<std::size_t>(node) * m_ + a];
  }
  std::int32_t suffix_search(std::int32_t node, std::size_t pos) const;

  std::size_t m_;
  Word word_;
  // node 0: length -1 root, node 1: length 0 root
  std::vector<std::int32_t> len_, link_, first_end_;
  std::vector<std::int32_t> trans_;
  std::int32_t active_ = 1;
  std::vector<std::uint8_t> new_flag_;
};

}  // namespace ubeta
