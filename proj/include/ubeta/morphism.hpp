#pragma once

#include <cstddef>
#include <initializer_list>

#include "ubeta/word.hpp"

namespace ubeta {

// Non-erasing morphism on {0..m-1}*. Images are validated on construction.
class Morphism {
 public:
  Morphism(std::size_t alphabet_size, std::vector<Word> images);

  std::size_t alphabet_size() const { return images_.size(); }
  const Word& image(Letter a) const;

  Word apply(std::span<const Letter> w) const;
  Word apply(std::initializer_list<Letter> w) const {
    return apply(std::span<const Letter>(w.begin(), w.size()));
  }
  Word operator()(std::span<const Letter> w) const { return apply(w); }

  // Images of this composed k times; power(0) is the identity.
  Morphism power(std::size_t k) const;

  std::size_t total_image_length(std::span<const Letter> w) const;

  // a is a valid fixed-point seed when image(a) starts with a and |image(a)| >= 2.
  bool substitution_seed(Letter a) const;

 private:
  std::vector<Word> images_;
};

// Entrywise-positive power of the incidence matrix exists. Non-erasing images
// make positivity monotone in the exponent, so one saturated power >= 2*m^2
// decides it.
bool is_primitive(const Morphism& phi);

// First n letters of lim phi^k(seed). Demand-driven: the buffer being built is
// itself the source of letters to expand, so no iterate is materialized beyond
// n letters (up to one image of slack, trimmed before return).
Word fixed_point_prefix(const Morphism& phi, Letter seed, std::size_t n);

// Streaming flavour of the same generator.
class FixedPointStream {
 public:
  FixedPointStream(const Morphism& phi, Letter seed);
  Letter next();
  void take(std::size_t n, Word& out);
  std::size_t position() const { return pos_; }

 private:
  const Morphism& phi_;
  Word buf_;
  std::size_t read_ = 0;  // next letter of buf_ whose image gets appended
  std::size_t pos_ = 0;   // next letter to emit
};

}  // namespace ubeta
