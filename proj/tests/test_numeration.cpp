#include "doctest.h"

#include "ubeta/numeration.hpp"

using namespace ubeta;

namespace {
std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}
}  // namespace

TEST_CASE("basis sequences") {
  CHECK(numeration_basis({1, 1, 2}, 4) == big({1, 2, 3, 5, 8}));
  CHECK(numeration_basis({2, 2, 2}, 2) == big({1, 3, 8}));
  CHECK(numeration_basis({4, 4, 4}, 0) == big({1}));
  // m = 3: G_1 = 3+1, G_2 = 3(4+1)+1, then the order-3 recurrence with s = 3
  CHECK(numeration_basis({3, 3, 3}, 4) == big({1, 4, 16, 63, 249}));
  CHECK(numeration_basis({2, 1, 3}, 5) == big({1, 3, 9, 25, 71, 201}));
  CHECK_THROWS_AS(numeration_basis({2, 2, 1}, 3), std::invalid_argument);  // m < 2
}

TEST_CASE("ladder lengths") {
  CHECK(uv_lengths({2, 2, 2}, 1) == std::pair<BigInt, BigInt>{2, 3});
  CHECK(uv_lengths({2, 2, 2}, 2) == std::pair<BigInt, BigInt>{8, 11});
  CHECK(uv_lengths({2, 2, 2}, 3) == std::pair<BigInt, BigInt>{24, 32});
  CHECK(uv_lengths({1, 1, 2}, 3) == std::pair<BigInt, BigInt>{6, 6});
  CHECK(uv_lengths({1, 1, 2}, 1) == std::pair<BigInt, BigInt>{1, 1});
  CHECK(uv_lengths({3, 2, 2}, 1) == std::pair<BigInt, BigInt>{3, 4});
}

TEST_CASE("ladder object answers window queries") {
  LengthLadder lad({2, 2, 2});
  CHECK(lad.g(0) == 1);
  CHECK(lad.g(3) == 22);
  CHECK(lad.v(2) == 8);
  CHECK(lad.u(2) == 11);

  CHECK_FALSE(lad.window_containing(0).has_value());
  CHECK_FALSE(lad.window_containing(2).has_value());
  CHECK(lad.window_containing(3) == 1);
  CHECK_FALSE(lad.window_containing(8).has_value());
  CHECK(lad.window_containing(9) == 2);
  CHECK(lad.window_containing(11) == 2);
  CHECK_FALSE(lad.window_containing(12).has_value());
  CHECK(lad.window_containing(25) == 3);

  CHECK(lad.count_u_at_least(3, 3) == 3);   // u = 3, 11, 32
  CHECK(lad.count_u_at_least(3, 4) == 2);
  CHECK(lad.count_u_at_least(3, 33) == 0);
  CHECK(lad.count_v_below(3, 9) == 2);      // v = 2, 8, 24
  CHECK(lad.count_v_below(3, 2) == 0);
  CHECK(lad.count_v_below(3, 1000) == 3);
}

TEST_CASE("interlacing for s >= 2") {
  for (ConfluentParams p : {ConfluentParams{2, 2, 2}, {3, 2, 2}, {4, 3, 3}, {4, 4, 4}}) {
    LengthLadder lad(p);
    for (std::size_t k = 1; k <= 20; ++k) {
      CHECK(lad.v(k) < lad.u(k));
      CHECK(lad.u(k) < lad.v(k + 1));
    }
  }
  // s = 1 collapses the two ladders
  LengthLadder fib({1, 1, 2});
  for (std::size_t k = 1; k <= 20; ++k) CHECK(fib.v(k) == fib.u(k));
}

TEST_CASE("growth stays exact far beyond 64 bits") {
  LengthLadder lad({4, 4, 4});
  BigInt prev = 0;
  for (std::size_t k = 1; k <= 120; ++k) {
    CHECK(lad.v(k) > prev);
    prev = lad.v(k);
  }
  CHECK(lad.v(120) > BigInt(1) << 250);
}
