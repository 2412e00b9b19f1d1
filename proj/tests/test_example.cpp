#include "doctest.h"
#include "normfilt/analysis.hpp"
#include "normfilt/filtration.hpp"
#include "normfilt/input.hpp"
#include "normfilt/rings.hpp"
#include "normfilt/semigroup.hpp"

using namespace normfilt;

namespace {

ExponentVector ev(std::vector<Exponent> c) { return ExponentVector(std::move(c)); }

// Element-by-element comparison over the box of t-valuations < tmax and
// (U,V)-degrees <= bmax.
bool same_degreewise(const ExtIdeal& a, const ExtIdeal& b, Exponent tmax, Exponent bmax) {
  const auto& s = a.semigroup();
  for (Exponent t = 0; t < tmax; ++t) {
    if (!s.contains(t)) continue;
    for (Exponent u = 0; u <= bmax; ++u) {
      for (Exponent v = 0; v <= bmax; ++v) {
        if (a.contains(ev({t, u, v})) != b.contains(ev({t, u, v}))) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("normal filtration of n in k[[t^4,t^5,t^11]][[U,V]]") {
  const auto s = semigroup({4, 5, 11});
  const SemigroupRing ring(s, 2);
  const ExtIdeal n = ring.maximal();
  const ExtIdeal j(s, 2, {ev({4, 0, 0}), ev({0, 1, 0}), ev({0, 0, 1})});
  const ExtIdeal z(s, 2, {ev({11, 0, 0})});
  const ExtIdeal uv(s, 2, {ev({0, 1, 0}), ev({0, 0, 1})});
  CHECK(is_minimal_reduction(ring, n, j));

  const ExtIdeal g2 = sum(power(n, 2), z);
  CHECK(normal_power(n, 2) == g2);
  CHECK(ideal_contains(g2, power(n, 2)));
  // G_2 cap J = J G_1
  CHECK(intersect(g2, j) == multiply(j, n));
  for (std::size_t k = 3; k <= 8; ++k) {
    CAPTURE(k);
    const ExtIdeal closed_form = sum(power(n, k), multiply(z, power(uv, k - 2)));
    const ExtIdeal recursive = multiply(power(j, k - 2), g2);
    const ExtIdeal normal = normal_power(n, k);
    CHECK(normal == closed_form);
    CHECK(normal == recursive);
    CHECK(same_degreewise(normal, closed_form, 4 * static_cast<Exponent>(k) + 12, static_cast<Exponent>(k) + 1));
  }
}

TEST_CASE("example analysis numbers") {
  const InputSpec spec = parse_input("ring semigroup gens=4,5,11 adjoin=2\nideal maximal\nreduction t^4,U,V\nnmax 8\n");
  const EntryAnalysis a = analyze(spec);
  CHECK(a.e0 == 4);
  CHECK(a.type == 2);
  CHECK(a.has_reduction);
  REQUIRE(a.normal_fit.ok());
  CHECK(a.normal_fit.fit->e == std::vector<Integer>{4, 5, 2, 0});
  REQUIRE(a.adic_fit.ok());
  CHECK(*a.adic_fit.at(0) == 4);
  CHECK(*a.adic_fit.at(1) == 5);
  REQUIRE(a.normal_rn.r.has_value());
  CHECK(*a.normal_rn.r == 2);
  CHECK(a.normal_cm == CMStatus::certified);
  CHECK(*a.maximal_cm == CMStatus::not_cohen_macaulay);
  CHECK(a.normal == std::vector<Integer>{1, 5, 16, 38, 75, 131, 210, 316, 453});

  // One-dimensional factor: the m-adic Valabrega-Valla check fails at n = 3
  // with an element of valuation 15.
  REQUIRE(a.vv_residual.has_value());
  REQUIRE(a.vv_residual->failure.has_value());
  CHECK(*a.vv_residual->failure == 3);
  REQUIRE(a.vv_residual->witness.has_value());
  CHECK((*a.vv_residual->witness)[0] == 15);
  CHECK(*a.residual_cm == CMStatus::not_cohen_macaulay);
}

TEST_CASE("one-dimensional k[[t^4,t^5,t^11]]") {
  const EntryAnalysis a = analyze(parse_input("ring semigroup gens=4,5,11\nideal maximal\nnmax 8\n"));
  CHECK(a.normal == std::vector<Integer>{1, 3, 7, 11, 15, 19, 23, 27, 31});
  CHECK(a.adic == std::vector<Integer>{1, 4, 7, 11, 15, 19, 23, 27, 31});
  CHECK(a.normal_fit.fit->e == std::vector<Integer>{4, 5});
  CHECK(a.adic_fit.fit->e == std::vector<Integer>{4, 5});
  CHECK(a.normal_fit.fit->stable_from == 1);
  CHECK(a.e_graded == std::vector<Integer>{1, 4, 4, 4, 4, 4, 4, 4, 4});
  CHECK(*a.adic_rn.r == 3);
  CHECK(a.adic_cm == CMStatus::not_cohen_macaulay);
  CHECK(*a.vv_adic.failure == 3);
  CHECK((*a.vv_adic.witness)[0] == 15);
}
