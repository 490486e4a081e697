#include "ubeta/morphism.hpp"

#include <algorithm>
#include <cassert>

namespace ubeta {

Morphism::Morphism(std::size_t alphabet_size, std::vector<Word> images)
    : images_(std::move(images)) {
  if (alphabet_size == 0 || alphabet_size > 256)
    throw std::invalid_argument("alphabet size must be in 1..256");
  if (images_.size() != alphabet_size)
    throw std::invalid_argument("need one image per letter");
  for (const Word& im : images_) {
    if (im.empty()) throw std::invalid_argument("erasing morphism not supported");
    for (Letter a : im)
      if (a >= alphabet_size) throw std::invalid_argument("image letter out of alphabet");
  }
}

const Word& Morphism::image(Letter a) const {
  if (a >= images_.size()) throw std::invalid_argument("letter out of alphabet");
  return images_[a];
}

Word Morphism::apply(std::span<const Letter> w) const {
  Word out;
  out.reserve(total_image_length(w));
  for (Letter a : w) {
    const Word& im = image(a);
    out.insert(out.end(), im.begin(), im.end());
  }
  return out;
}

std::size_t Morphism::total_image_length(std::span<const Letter> w) const {
  std::size_t n = 0;
  for (Letter a : w) n += image(a).size();
  return n;
}

Morphism Morphism::power(std::size_t k) const {
  std::size_t m = alphabet_size();
  std::vector<Word> ims(m);
  for (std::size_t a = 0; a < m; ++a) ims[a] = Word{static_cast<Letter>(a)};
  Morphism acc(m, std::move(ims));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Word> next(m);
    for (std::size_t a = 0; a < m; ++a) next[a] = apply(acc.image(static_cast<Letter>(a)));
    acc = Morphism(m, std::move(next));
  }
  return acc;
}

bool Morphism::substitution_seed(Letter a) const {
  const Word& im = image(a);
  return im.size() >= 2 && im[0] == a;
}

bool is_primitive(const Morphism& phi) {
  std::size_t m = phi.alphabet_size();
  std::vector<std::uint8_t> mat(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (Letter b : phi.image(static_cast<Letter>(a))) mat[a * m + b] = 1;

  // Square until the exponent clears 2*m^2; positivity, once reached, persists.
  std::size_t power = 1;
  std::vector<std::uint8_t> sq(m * m);
  while (power < 2 * m * m) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        std::uint8_t v = 0;
        for (std::size_t k = 0; k < m && !v; ++k) v = mat[i * m + k] & mat[k * m + j];
        sq[i * m + j] = v;
      }
    mat.swap(sq);
    power *= 2;
  }
  return std::all_of(mat.begin(), mat.end(), [](std::uint8_t v) { return v != 0; });
}

Word fixed_point_prefix(const Morphism& phi, Letter seed, std::size_t n) {
  if (n == 0) return {};
  if (!phi.substitution_seed(seed))
    throw std::invalid_argument("seed image must start with the seed and have length >= 2");
  if (n == 1) return {seed};
  Word buf = phi.image(seed);
  buf.reserve(n + 16);
  std::size_t read = 1;
  while (buf.size() < n) {
    assert(read < buf.size());
    const Word& im = phi.image(buf[read++]);
    std::size_t want = n - buf.size();
    buf.insert(buf.end(), im.begin(), im.begin() + std::min(want, im.size()));
  }
  buf.resize(n);
  return buf;
}

FixedPointStream::FixedPointStream(const Morphism& phi, Letter seed) : phi_(phi) {
  if (!phi.substitution_seed(seed))
    throw std::invalid_argument("seed image must start with the seed and have length >= 2");
  buf_ = phi.image(seed);
  read_ = 1;  // buf_ already equals image(buf_[0])
}

Letter FixedPointStream::next() {
  while (pos_ >= buf_.size()) {
    assert(read_ < buf_.size());
    const Word& im = phi_.image(buf_[read_++]);
    buf_.insert(buf_.end(), im.begin(), im.end());
  }
  return buf_[pos_++];
}

void FixedPointStream::take(std::size_t n, Word& out) {
  out.reserve(out.size() + n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(next());
}

}  // namespace ubeta
