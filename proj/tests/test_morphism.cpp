#include "doctest.h"

#include <stdexcept>

#include "ubeta/morphism.hpp"

using namespace ubeta;

namespace {
Morphism fibonacci() { return Morphism(2, {{0, 1}, {0}}); }
Morphism tribonacci() { return Morphism(3, {{0, 1}, {0, 2}, {0}}); }
}  // namespace

TEST_CASE("image application") {
  Morphism phi = fibonacci();
  CHECK(phi.image(0) == Word{0, 1});
  CHECK(phi.image(1) == Word{0});
  CHECK(phi.apply({0, 1, 0}) == Word{0, 1, 0, 0, 1});
  CHECK(phi.apply({}) == Word{});
  CHECK(phi.total_image_length(Word{0, 1, 0}) == 5);
}

TEST_CASE("construction is validated") {
  CHECK_THROWS_AS(Morphism(2, {{0, 1}}), std::invalid_argument);       // missing image
  CHECK_THROWS_AS(Morphism(2, {{0, 1}, {}}), std::invalid_argument);   // erasing
  CHECK_THROWS_AS(Morphism(2, {{0, 2}, {0}}), std::invalid_argument);  // letter out of range
  CHECK_THROWS_AS(Morphism(0, {}), std::invalid_argument);
}

TEST_CASE("powers compose images") {
  Morphism phi = tribonacci();
  Morphism phi2 = phi.power(2);
  for (Letter a = 0; a < 3; ++a) CHECK(phi2.image(a) == phi.apply(phi.image(a)));
  Morphism phi3 = phi.power(3);
  for (Letter a = 0; a < 3; ++a) CHECK(phi3.image(a) == phi.apply(phi2.image(a)));
  CHECK(phi.power(1).image(0) == phi.image(0));
  CHECK(phi.power(0).image(1) == Word{1});  // identity
}

TEST_CASE("fixed point prefixes") {
  Morphism phi = fibonacci();
  CHECK(fixed_point_prefix(phi, 0, 0) == Word{});
  CHECK(fixed_point_prefix(phi, 0, 1) == Word{0});
  CHECK(fixed_point_prefix(phi, 0, 9) == word_from_string("010010100"));

  // the prefix is a prefix of every longer one
  Word p40 = fixed_point_prefix(phi, 0, 40);
  Word p7 = fixed_point_prefix(phi, 0, 7);
  CHECK(is_prefix_of(p7, p40));

  // and of plain iteration
  Word iter = phi.apply(phi.apply(phi.apply(phi.apply(phi.image(0)))));
  CHECK(is_prefix_of(fixed_point_prefix(phi, 0, iter.size()), iter));

  Morphism two(2, {{0, 0, 1}, {0, 0}});
  CHECK(fixed_point_prefix(two, 0, 8) == word_from_string("00100100"));

  // seed letter must start its own image
  CHECK_THROWS_AS(fixed_point_prefix(phi, 1, 5), std::invalid_argument);
}

TEST_CASE("streaming generator agrees with the batch one") {
  Morphism phi = tribonacci();
  FixedPointStream stream(phi, 0);
  Word got;
  stream.take(7, got);
  CHECK(got == fixed_point_prefix(phi, 0, 7));
  CHECK(stream.position() == 7);
  stream.take(93, got);
  CHECK(got == fixed_point_prefix(phi, 0, 100));
  Word letters;
  FixedPointStream one(phi, 0);
  for (int i = 0; i < 50; ++i) letters.push_back(one.next());
  CHECK(letters == fixed_point_prefix(phi, 0, 50));
}

TEST_CASE("primitivity") {
  CHECK(is_primitive(fibonacci()));
  CHECK(is_primitive(tribonacci()));
  CHECK_FALSE(is_primitive(Morphism(2, {{0, 1}, {1}})));  // 1 never reaches 0
  CHECK(is_primitive(Morphism(1, {{0, 0}})));
  CHECK_FALSE(is_primitive(Morphism(2, {{0}, {1}})));  // identity
}
