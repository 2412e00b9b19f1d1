#include <limits>
#include <random>

#include "doctest.h"
#include "normfilt/arith.hpp"
#include "oracles.hpp"

using namespace normfilt;

TEST_CASE("binomial uses the polynomial convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-1, 0) == 1);
  CHECK(binomial(-1, 2) == 1);
  CHECK(binomial(-2, 3) == -4);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == Integer("118264581564861424"));
}

TEST_CASE("series coefficients of 1/(1-z)^d") {
  CHECK(series_coefficient(3, 2) == 6);
  CHECK(series_coefficient(1, 7) == 1);
  CHECK(series_coefficient(0, 0) == 1);
  CHECK(series_coefficient(0, 3) == 0);
  CHECK(series_coefficient(2, -1) == 0);
}

TEST_CASE("checked exponent arithmetic reports overflow") {
  const Exponent big = std::numeric_limits<Exponent>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK(checked_mul(-4, 3) == -12);
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big, 2), std::overflow_error);
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + trial % 5;
    std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
    std::vector<std::vector<__int128>> r(k, std::vector<__int128>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const int v = trial % 7 == 0 && j == 0 ? 0 : entry(rng);
        m[i][j] = v;
        r[i][j] = v;
      }
    }
    CHECK(determinant(m) == Integer(static_cast<long long>(oracle::det(r))));
  }
}

TEST_CASE("to_integer rejects fractions") {
  CHECK(to_integer(Rational(12, 4)) == 3);
  CHECK_THROWS_AS(to_integer(Rational(1, 2)), std::domain_error);
}
