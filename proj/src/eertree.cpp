#include "ubeta/eertree.hpp"

#include <stdexcept>

namespace ubeta {

Eertree::Eertree(std::size_t alphabet_size) : m_(alphabet_size) {
  if (m_ == 0 || m_ > 256) throw std::invalid_argument("alphabet size must be in 1..256");
  len_ = {-1, 0};
  link_ = {0, 0};
  first_end_ = {-1, -1};
  trans_.assign(2 * m_, -1);
}

Eertree Eertree::build(std::span<const Letter> w, std::size_t alphabet_size) {
  Eertree t(alphabet_size);
  t.append_all(w);
  return t;
}

// Longest palindromic suffix of word_[0..pos] that node's palindrome extends
// to via the letter at pos: walk suffix links until the mirror letter matches.
// The length -1 root always matches (single letter case).
std::int32_t Eertree::suffix_search(std::int32_t node, std::size_t pos) const {
  Letter c = word_[pos];
  for (;;) {
    std::int32_t l = len_[node];
    std::int64_t mirror = static_cast<std::int64_t>(pos) - l - 1;
    if (mirror >= 0 && word_[static_cast<std::size_t>(mirror)] == c) return node;
    node = link_[node];
  }
}

void Eertree::append(Letter a) {
  if (a >= m_) throw std::invalid_argument("letter out of alphabet");
  word_.push_back(a);
  std::size_t pos = word_.size() - 1;
  std::int32_t x = suffix_search(active_, pos);
  std::int32_t existing = transition(x, a);
  if (existing != -1) {
    active_ = existing;
    new_flag_.push_back(0);
    return;
  }
  std::int32_t id = static_cast<std::int32_t>(len_.size());
  len_.push_back(len_[x] + 2);
  first_end_.push_back(static_cast<std::int32_t>(pos));
  trans_.insert(trans_.end(), m_, -1);
  // Suffix link: longest proper palindromic suffix, found one rung down.
  if (len_[id] == 1) {
    link_.push_back(1);
  } else {
    std::int32_t y = suffix_search(link_[x], pos);
    link_.push_back(transition(y, a));
  }
  trans_[static_cast<std::size_t>(x) * m_ + a] = id;
  active_ = id;
  new_flag_.push_back(1);
}

std::vector<std::int64_t> Eertree::counts_by_length(std::size_t n_max) const {
  std::vector<std::int64_t> p(n_max + 1, 0);
  p[0] = 1;
  for (std::size_t v = 2; v < len_.size(); ++v) {
    std::size_t l = static_cast<std::size_t>(len_[v]);
    if (l <= n_max) p[l] += 1;
  }
  return p;
}

std::vector<Word> Eertree::palindromes_up_to(std::size_t max_len) const {
  std::vector<Word> out;
  for (std::size_t v = 2; v < len_.size(); ++v) {
    std::size_t l = static_cast<std::size_t>(len_[v]);
    if (l > max_len) continue;
    std::size_t end = static_cast<std::size_t>(first_end_[v]) + 1;
    out.emplace_back(word_.begin() + (end - l), word_.begin() + end);
  }
  return out;
}

std::size_t Eertree::longest_suffix_palindrome_length() const {
  return active_ <= 1 ? 0 : static_cast<std::size_t>(len_[active_]);
}

bool Eertree::longest_suffix_palindrome_unioccurrent() const {
  if (word_.empty()) return false;
  if (active_ <= 1) return false;
  return static_cast<std::size_t>(first_end_[active_]) == word_.size() - 1;
}

std::size_t Eertree::max_palindrome_length_of_parity(int parity) const {
  std::size_t best = 0;
  for (std::size_t v = 2; v < len_.size(); ++v) {
    std::size_t l = static_cast<std::size_t>(len_[v]);
    if (static_cast<int>(l % 2) == parity) best = std::max(best, l);
  }
  return best;
}

}  // namespace ubeta
