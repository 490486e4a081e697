#include "ubeta/word.hpp"

#include <sstream>

namespace ubeta {

std::string word_to_string(std::span<const Letter> w, std::size_t alphabet_size) {
  std::ostringstream os;
  if (alphabet_size <= 10) {
    for (Letter a : w) os << static_cast<char>('0' + a);
  } else {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << ',';
      os << static_cast<unsigned>(w[i]);
    }
  }
  return os.str();
}

Word word_from_string(const std::string& s) {
  Word w;
  if (s.find(',') == std::string::npos) {
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad letter: " + std::string(1, c));
      w.push_back(static_cast<Letter>(c - '0'));
    }
  } else {
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      int v = std::stoi(tok);
      if (v < 0 || v > 255) throw std::invalid_argument("letter out of range: " + tok);
      w.push_back(static_cast<Letter>(v));
    }
  }
  return w;
}

}  // namespace ubeta
