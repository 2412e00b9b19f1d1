#include <random>

#include "doctest.h"
#include "normfilt/error.hpp"
#include "normfilt/filtration.hpp"
#include "normfilt/newton.hpp"
#include "normfilt/rings.hpp"
#include "oracles.hpp"

using namespace normfilt;

namespace {

std::vector<Integer> table_of(const std::vector<Integer>& c, std::size_t k, std::size_t n_max) {
  std::vector<Integer> t;
  for (std::size_t n = 0; n <= n_max; ++n) t.push_back(polynomial_value(c, k, static_cast<long>(n)));
  return t;
}

}  // namespace

TEST_CASE("fit recovers random coefficients and agrees with the difference oracle") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> e(-20, 40);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = trial % 4;
    std::vector<Integer> c;
    for (std::size_t i = 0; i <= k; ++i) c.push_back(e(rng));
    std::vector<Integer> t = table_of(c, k, k + 6);
    const HilbertCoefficients fit = fit_coefficients(t, k, k + 2);
    CHECK(fit.e == c);
    CHECK(oracle::difference_fit(t, k) == c);
    // Garbage in the first entries only moves stable_from.
    t[0] += 5;
    const HilbertCoefficients late = fit_coefficients(t, k, k + 2);
    CHECK(late.e == c);
    CHECK(late.stable_from == 1);
  }
}

TEST_CASE("fit failures raise HorizonError") {
  const std::vector<Integer> c{27, 18, 1, 0};
  std::vector<Integer> t = table_of(c, 3, 8);
  CHECK_THROWS_AS(fit_coefficients(std::vector<Integer>(t.begin(), t.begin() + 5), 3, 2), HorizonError);
  t[4] += 1;
  CHECK_THROWS_AS(fit_coefficients(t, 3, 5), HorizonError);
  // 3n^2 = 6 C(n+2,2) - 9 C(n+1,1) + 3
  std::vector<Integer> squares;
  for (long n = 0; n <= 8; ++n) squares.push_back(n * n * 3);
  CHECK(fit_coefficients(squares, 2, 3).e == std::vector<Integer>{6, 9, 3});
  std::vector<Integer> bad{0, 1, 5, 12, 22};
  CHECK_THROWS_AS(fit_coefficients(bad, 1, 2), HorizonError);
}

TEST_CASE("Hilbert series of the E filtration") {
  // (lambda + (e0 - lambda) z)/(1-z)^d
  CHECK(minimal_multiplicity_series(3, 27, 10, 0) == 10);
  CHECK(minimal_multiplicity_series(3, 27, 10, 1) == 47);
  CHECK(minimal_multiplicity_series(3, 27, 10, 2) == 111);
  CHECK(minimal_multiplicity_series(1, 4, 1, 0) == 1);
  CHECK(minimal_multiplicity_series(1, 4, 1, 5) == 4);
  CHECK(differences({10, 56, 165}) == std::vector<Integer>{10, 46, 109});
}

TEST_CASE("(x^3, y^3, z^3): tables, reduction number and Valabrega-Valla") {
  const PolynomialRing ring(3);
  const MonomialIdeal i = MonomialIdeal::pure_powers({3, 3, 3});
  const MonomialIdeal j = i;
  FiltrationSpec<PolynomialRing> normal{ring, FiltrationKind::normal, i, j, {}};
  const auto f = normal.terms(11);
  const auto table = length_table(f, 8);
  // Independent count: exponents with sum < 3(n+1).
  for (std::size_t n = 0; n <= 8; ++n) {
    const long c = 3 * static_cast<long>(n + 1);
    CHECK(table[n] == oracle::count_box({c, c, c}, [&](const oracle::Point& p) { return p[0] + p[1] + p[2] < c; }));
  }
  const auto rn = reduction_number(f, j, 8);
  REQUIRE(rn.r.has_value());
  CHECK(*rn.r == 2);
  REQUIRE(rn.witness.has_value());
  CHECK_FALSE(multiply(j, f[1]).contains(*rn.witness));
  const auto vv = valabrega_valla(f, j, 8);
  CHECK(vv.passed());
  CHECK(cm_status(vv, rn) == CMStatus::certified);
  CHECK(cm_status(vv, rn, 7) == CMStatus::inconclusive);
  FiltrationSpec<PolynomialRing> adic{ring, FiltrationKind::adic, i, j, {}};
  CHECK(reduction_number(adic.terms(10), j, 8).r == std::optional<std::size_t>(0));
  FiltrationSpec<PolynomialRing> custom{ring, FiltrationKind::custom, i, j, [&](std::size_t n) { return closure_power(i, n); }};
  CHECK(length_table(custom, 4) == std::vector<Integer>(table.begin(), table.begin() + 5));
}
