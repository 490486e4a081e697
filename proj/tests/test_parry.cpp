#include "doctest.h"

#include "ubeta/parry.hpp"

using namespace ubeta;

TEST_CASE("admissibility") {
  CHECK_NOTHROW(check_parry({1, 1}));
  CHECK_NOTHROW(check_parry({2, 2, 2}));
  CHECK_NOTHROW(check_parry({3, 1, 1}));
  CHECK_NOTHROW(check_parry({2, 1, 2}));  // suffix (1,2) < (2,1), suffix (2) zero-pads below
  CHECK_NOTHROW(check_parry({2}));        // integer base 2 is admissible (just not classifiable)

  CHECK(parry_violation_index({1, 2}) == 2);
  CHECK_THROWS_AS(check_parry({1, 2}), ParryError);
  CHECK_THROWS_AS(check_parry({2, 2, 3}), ParryError);
  CHECK_THROWS_AS(check_parry({1, 0}), ParryError);  // trailing zero
  CHECK_THROWS_AS(check_parry({}), ParryError);
  CHECK_THROWS_AS(check_parry({1}), ParryError);  // beta would be 1

  bool threw = false;
  try {
    check_parry({3, 3, 4});
  } catch (const ParryError& e) {
    threw = true;
    CHECK(e.suffix_index == 2);  // (3,4,0) vs (3,3,4) diverges at the second digit
  }
  CHECK(threw);
  CHECK_FALSE(parry_violation_index({2, 2, 2}).has_value());
}

TEST_CASE("classification") {
  Classification fib = classify(check_parry({1, 1}));
  CHECK(fib.tag == WordClass::ArnouxRauzy);
  REQUIRE(fib.params.has_value());
  CHECK(fib.params->t == 1);
  CHECK(fib.params->s == 1);
  CHECK(fib.params->m == 2);

  Classification c222 = classify(check_parry({2, 2, 2}));
  CHECK(c222.tag == WordClass::ConfluentNonUnit);
  CHECK(c222.params == ConfluentParams{2, 2, 3});

  CHECK(classify(check_parry({2, 2, 1})).tag == WordClass::ArnouxRauzy);

  Classification nc = classify(check_parry({3, 1, 1}));
  CHECK(nc.tag == WordClass::NonConfluent);
  CHECK_FALSE(nc.params.has_value());
  CHECK(classify(check_parry({4, 2, 3})).tag == WordClass::NonConfluent);

  CHECK_THROWS_AS(classify(check_parry({2})), std::invalid_argument);  // m = 1 out of scope

  CHECK(digits_of(ConfluentParams{2, 1, 3}).digits == std::vector<std::uint32_t>{2, 2, 1});
}

TEST_CASE("canonical substitution") {
  Morphism fib = canonical_substitution(check_parry({1, 1}));
  CHECK(fib.image(0) == Word{0, 1});
  CHECK(fib.image(1) == Word{0});

  Morphism m222 = canonical_substitution(check_parry({2, 2, 2}));
  CHECK(m222.image(0) == Word{0, 0, 1});
  CHECK(m222.image(1) == Word{0, 0, 2});
  CHECK(m222.image(2) == Word{0, 0});

  Morphism nc = canonical_substitution(check_parry({3, 1, 1}));
  CHECK(nc.image(0) == Word{0, 0, 0, 1});
  CHECK(nc.image(1) == Word{0, 2});
  CHECK(nc.image(2) == Word{0});
  CHECK(is_primitive(nc));
}

TEST_CASE("dominant roots") {
  CHECK(dominant_root(check_parry({1, 1})) == doctest::Approx(1.618033988749895).epsilon(1e-12));
  CHECK(dominant_root(check_parry({2, 2})) == doctest::Approx(2.732050807568877).epsilon(1e-12));
  CHECK(dominant_root(check_parry({1, 1, 1})) ==
        doctest::Approx(1.839286755214161).epsilon(1e-12));
  CHECK(dominant_root(check_parry({3, 1, 1})) > 3.0);
  CHECK(dominant_root(check_parry({2})) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("digit expansions") {
  RenyiExpansion golden = renyi_digits(1.618033988749895, 8);
  CHECK(golden.finite);
  CHECK(golden.digits == std::vector<std::uint32_t>{1, 1});

  RenyiExpansion two = renyi_digits(2.0, 8);
  CHECK(two.finite);
  CHECK(two.digits == std::vector<std::uint32_t>{2});

  RenyiExpansion trib = renyi_digits(1.8392867552141612, 8);
  CHECK(trib.finite);
  CHECK(trib.digits == std::vector<std::uint32_t>{1, 1, 1});

  // cut off before the expansion ends: undecided
  RenyiExpansion cut = renyi_digits(1.8392867552141612, 2);
  CHECK_FALSE(cut.finite);
  CHECK(cut.digits == std::vector<std::uint32_t>{1, 1});

  CHECK_THROWS_AS(renyi_digits(1.9999999995, 8), PrecisionError);
  CHECK_THROWS_AS(renyi_digits(0.9, 8), std::invalid_argument);
  CHECK_THROWS_AS(renyi_digits(2.5, 8, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(renyi_digits(2.5, 8, 0.6), std::invalid_argument);
}

TEST_CASE("digits survive the trip through the root") {
  for (std::vector<std::uint32_t> d :
       {std::vector<std::uint32_t>{1, 1}, {2, 2}, {1, 1, 1}, {3, 3, 2}, {4, 4, 4, 4}, {3, 1, 1}}) {
    RenyiDigits digits = check_parry(d);
    RenyiExpansion back = renyi_digits(dominant_root(digits), d.size() + 1);
    CHECK(back.finite);
    CHECK(back.digits == d);
  }
}
