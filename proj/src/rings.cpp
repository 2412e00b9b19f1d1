#include "normfilt/rings.hpp"

namespace normfilt {

std::optional<MonomialIdeal> PolynomialRing::pure_power_ideal(const MonomialIdeal& a) const {
  auto exps = a.pure_power_exponents();
  if (!exps) return std::nullopt;
  return MonomialIdeal::pure_powers(*exps);
}

std::optional<ExtIdeal> SemigroupRing::pure_power_ideal(const ExtIdeal& a) const {
  auto bounds = a.primary_bounds();
  if (!bounds) return std::nullopt;
  std::vector<ExponentVector> gens;
  gens.push_back(ExponentVector::unit_vector(dim(), 0, (*bounds)[0]));
  for (std::size_t i = 0; i < vars_; ++i) gens.push_back(ExponentVector::unit_vector(dim(), i + 1, (*bounds)[i + 1]));
  return ExtIdeal(s_, vars_, std::move(gens));
}

}  // namespace normfilt
