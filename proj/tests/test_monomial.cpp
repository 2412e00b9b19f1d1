#include <random>

#include "doctest.h"
#include "normfilt/error.hpp"
#include "normfilt/monomial_ideal.hpp"
#include "oracles.hpp"

using namespace normfilt;

namespace {

MonomialIdeal ideal(std::size_t d, std::vector<std::vector<Exponent>> gens) {
  std::vector<ExponentVector> v;
  for (auto& g : gens) v.emplace_back(g);
  return minimal_generators(v, d);
}

std::vector<oracle::Point> points(const MonomialIdeal& a) {
  std::vector<oracle::Point> out;
  for (const auto& g : a.generators()) out.emplace_back(g.coords().begin(), g.coords().end());
  return out;
}

MonomialIdeal random_primary(std::mt19937& rng, std::size_t d) {
  std::uniform_int_distribution<int> e(0, 4);
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(ExponentVector::unit_vector(d, i, 2 + e(rng) % 3));
  for (int k = 0; k < 3; ++k) {
    std::vector<Exponent> c(d);
    for (auto& x : c) x = e(rng) % 3;
    gens.emplace_back(c);
  }
  return minimal_generators(gens, d);
}

}  // namespace

TEST_CASE("minimal generators drop multiples and sort") {
  const MonomialIdeal a = ideal(2, {{2, 0}, {3, 1}, {0, 2}, {1, 1}, {1, 1}});
  REQUIRE(a.generators().size() == 3);
  CHECK(a.generators()[0] == ExponentVector{0, 2});
  CHECK(a.generators()[1] == ExponentVector{1, 1});
  CHECK(a.generators()[2] == ExponentVector{2, 0});
  CHECK(a.is_m_primary());
  CHECK(*a.pure_power_exponents() == std::vector<Exponent>{2, 2});
  CHECK_FALSE(ideal(2, {{2, 0}, {1, 1}}).is_m_primary());
}

TEST_CASE("colength matches box enumeration") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const MonomialIdeal a = random_primary(rng, d);
    const auto gens = points(a);
    const oracle::Point bound(d, 12);
    const Integer expected = oracle::count_box(bound, [&](const oracle::Point& p) { return !oracle::divisible_by_some(gens, p); });
    CHECK(colength(a) == expected);

    const MonomialIdeal sq = power(a, 2);
    const auto sqgens = oracle::naive_power(gens, 2);
    const Integer sq_expected =
        oracle::count_box(oracle::Point(d, 24), [&](const oracle::Point& p) { return !oracle::divisible_by_some(sqgens, p); });
    CHECK(colength(sq) == sq_expected);
    CHECK(quotient_length(a, sq) == sq_expected - expected);
  }
}

TEST_CASE("intersection, sum and colon agree with membership") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2 + trial % 2;
    const MonomialIdeal a = random_primary(rng, d);
    const MonomialIdeal b = random_primary(rng, d);
    const MonomialIdeal i = intersect(a, b);
    const MonomialIdeal s = sum(a, b);
    const MonomialIdeal c = colon(a, b);
    const ExponentVector shift = ExponentVector::unit_vector(d, 0, 1);
    const MonomialIdeal cx = colon(a, shift);
    oracle::count_box(oracle::Point(d, 8), [&](const oracle::Point& p) {
      const ExponentVector e(std::vector<Exponent>(p.begin(), p.end()));
      CHECK(i.contains(e) == (a.contains(e) && b.contains(e)));
      CHECK(s.contains(e) == (a.contains(e) || b.contains(e)));
      CHECK(cx.contains(e) == a.contains(e + shift));
      bool in_colon = true;
      for (const auto& g : b.generators()) in_colon = in_colon && a.contains(e + g);
      CHECK(c.contains(e) == in_colon);
      return false;
    });
    CHECK(ideal_contains(s, a));
    CHECK(ideal_contains(a, i));
  }
}

TEST_CASE("first_outside and containment") {
  const MonomialIdeal m = MonomialIdeal::maximal(2);
  const MonomialIdeal m2 = power(m, 2);
  CHECK_FALSE(first_outside(m2, m).has_value());
  REQUIRE(first_outside(m, m2).has_value());
  CHECK_FALSE(m2.contains(*first_outside(m, m2)));
  CHECK_THROWS_AS(quotient_length(m2, m), PreconditionError);
  CHECK_THROWS_AS(colength(ideal(2, {{1, 0}})), PreconditionError);
}
