#include <random>

#include "doctest.h"
#include "normfilt/error.hpp"
#include "normfilt/newton.hpp"
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

void compare_on_box(const MonomialIdeal& a, long side, std::size_t max_n) {
  const NewtonPolyhedron p = newton_polyhedron(a);
  const auto gens = points(a);
  const std::size_t d = a.dim();
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::size_t mismatches = 0;
    oracle::count_box(oracle::Point(d, side), [&](const oracle::Point& q) {
      const ExponentVector e(std::vector<Exponent>(q.begin(), q.end()));
      if (in_dilation(p, n, e) != oracle::in_dilation(gens, static_cast<long>(n), q)) ++mismatches;
      return false;
    });
    CHECK(mismatches == 0);
  }
}

}  // namespace

TEST_CASE("Newton polyhedron of (x^3, y^3, z^3)") {
  const NewtonPolyhedron p = newton_polyhedron(ideal(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}));
  REQUIRE(p.halfspaces().size() == 1);
  CHECK(p.halfspaces()[0].normal == std::vector<Integer>{1, 1, 1});
  CHECK(p.halfspaces()[0].threshold == 3);
  CHECK(p.intercepts() == std::vector<Exponent>{3, 3, 3});
  CHECK(multiplicity(p) == 27);
  CHECK(in_dilation(p, 1, ExponentVector{1, 1, 1}));
  CHECK_FALSE(in_dilation(p, 1, ExponentVector{1, 1, 0}));
}

TEST_CASE("in_dilation agrees with the convex-combination oracle on random ideals") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(0, 5);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t d = 2 + trial % 2;
    std::vector<ExponentVector> gens;
    for (std::size_t i = 0; i < d; ++i) gens.push_back(ExponentVector::unit_vector(d, i, 1 + e(rng)));
    for (int k = 0; k < 2; ++k) {
      std::vector<Exponent> c(d);
      for (auto& x : c) x = e(rng) % 4;
      gens.emplace_back(c);
    }
    compare_on_box(minimal_generators(gens, d), 6, 2);
  }
}

TEST_CASE("closure powers match oracle lattice counts") {
  const MonomialIdeal a = ideal(2, {{5, 0}, {0, 3}, {2, 1}});
  const auto gens = points(a);
  for (std::size_t n = 1; n <= 4; ++n) {
    const MonomialIdeal c = closure_power(a, n);
    const oracle::Point bound{static_cast<long>(5 * n), static_cast<long>(3 * n)};
    CHECK(colength(c) == oracle::closure_colength(gens, static_cast<long>(n), bound));
    CHECK(ideal_contains(c, power(a, n)));
  }
}

TEST_CASE("multiplicity equals d! times the covolume") {
  // e0(m^k) = k^d, e0 of pure powers is the product, (x^2, xy, y^3) has
  // covolume 5/2.
  CHECK(multiplicity(power(MonomialIdeal::maximal(3), 2)) == 8);
  CHECK(multiplicity(MonomialIdeal::pure_powers({2, 3, 5})) == 30);
  CHECK(multiplicity(ideal(2, {{2, 0}, {1, 1}, {0, 3}})) == 5);
  CHECK(multiplicity(ideal(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}})) == 27);
  // Asymptotic colength: lambda(R/closure(I^n)) ~ e0 n^d / d!.
  const MonomialIdeal a = ideal(2, {{4, 0}, {1, 1}, {0, 5}});
  const auto gens = points(a);
  const long n = 30;
  const Integer c = oracle::closure_colength(gens, n, {4 * n, 5 * n});
  const Integer e0 = multiplicity(a);
  CHECK(e0 == 9);
  CHECK(abs(Integer(2) * c - e0 * n * n) <= Integer(20) * n);
}

TEST_CASE("pure-power reductions") {
  const auto cert = find_monomial_reduction(ideal(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}}));
  REQUIRE(cert.has_value());
  CHECK(cert->is_reduction);
  CHECK(cert->reduction == MonomialIdeal::pure_powers({3, 3, 3}));
  CHECK_FALSE(find_monomial_reduction(ideal(2, {{2, 0}, {1, 1}, {0, 3}})).has_value());
}

TEST_CASE("precondition errors") {
  CHECK_THROWS_AS(newton_polyhedron(ideal(2, {{2, 0}, {1, 1}})), PreconditionError);
  CHECK_THROWS_AS(newton_polyhedron(MonomialIdeal::maximal(5)), PreconditionError);
}
