#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ubeta {

// Letters are 0..m-1 for an alphabet of size m. m is the number of Renyi
// digits, so a byte is plenty; alphabet-creating code enforces m <= 256.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

inline bool is_palindrome(std::span<const Letter> w) {
  std::size_t i = 0, j = w.size();
  while (i + 1 < j) {
    if (w[i] != w[j - 1]) return false;
    ++i;
    --j;
  }
  return true;
}

inline Word reversed(std::span<const Letter> w) {
  return Word(w.rbegin(), w.rend());
}

inline bool is_prefix_of(std::span<const Letter> p, std::span<const Letter> w) {
  if (p.size() > w.size()) return false;
  return std::equal(p.begin(), p.end(), w.begin());
}

// Central slice of length `len`; requires same parity and len <= |w| so the
// midpoint is preserved.
inline Word central_slice(std::span<const Letter> w, std::size_t len) {
  if (len > w.size() || (w.size() - len) % 2 != 0)
    throw std::invalid_argument("central_slice: bad length/parity");
  std::size_t off = (w.size() - len) / 2;
  return Word(w.begin() + off, w.begin() + off + len);
}

// "0102010" for alphabets up to 10 letters, "0,1,10,2" beyond that.
std::string word_to_string(std::span<const Letter> w, std::size_t alphabet_size = 10);
Word word_from_string(const std::string& s);

}  // namespace ubeta
