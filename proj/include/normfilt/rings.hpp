#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "normfilt/monomial_ideal.hpp"
#include "normfilt/newton.hpp"
#include "normfilt/semigroup.hpp"

namespace normfilt {

// Backend adapters. Ideal arithmetic (multiply, sum, intersect, colon,
// ideal_contains, quotient_length, colength, first_outside, multiplicity) is
// found by overload resolution on the Ideal type; the adapter supplies what
// depends on the ring itself.

/// k[x_1..x_d] localized at the origin, with monomial ideals.
class PolynomialRing {
 public:
  using Ideal = MonomialIdeal;

  explicit PolynomialRing(std::size_t d) : d_(d) {}

  std::size_t dim() const noexcept { return d_; }
  Ideal unit() const { return MonomialIdeal::unit(d_); }
  Ideal maximal() const { return MonomialIdeal::maximal(d_); }
  Ideal closure_power(const Ideal& a, std::size_t n) const { return normfilt::closure_power(a, n); }
  /// Pure powers of the least exponents; nullopt when a is not m-primary.
  std::optional<Ideal> pure_power_ideal(const Ideal& a) const;
  /// Regular local ring: type 1.
  std::size_t type() const noexcept { return 1; }
  /// mu(m)
  std::size_t embedding_dimension() const noexcept { return d_; }

 private:
  std::size_t d_;
};

/// k[[S]][[x_1..x_v]] for a numerical semigroup S, with monomial ideals.
class SemigroupRing {
 public:
  using Ideal = ExtIdeal;

  SemigroupRing(SemigroupPtr s, std::size_t vars) : s_(std::move(s)), vars_(vars) {}

  const SemigroupPtr& semigroup() const noexcept { return s_; }
  std::size_t vars() const noexcept { return vars_; }
  std::size_t dim() const noexcept { return vars_ + 1; }
  Ideal unit() const { return ExtIdeal::unit(s_, vars_); }
  Ideal maximal() const { return ExtIdeal::maximal(s_, vars_); }
  Ideal closure_power(const Ideal& a, std::size_t n) const { return normal_power(a, n); }
  /// (t^q, x_1^{p_1}, ..., x_v^{p_v}) from a's primary bounds.
  std::optional<Ideal> pure_power_ideal(const Ideal& a) const;
  /// Adjoining variables keeps the type of k[[S]].
  std::size_t type() const noexcept { return s_->type(); }
  std::size_t embedding_dimension() const noexcept { return s_->embedding_dimension() + vars_; }

 private:
  SemigroupPtr s_;
  std::size_t vars_;
};

/// d-generated m-primary ideal J inside `ideal` with e_0(J) = e_0(ideal).
template <class Ring>
bool is_minimal_reduction(const Ring& ring, const typename Ring::Ideal& ideal, const typename Ring::Ideal& j) {
  if (j.generators().size() != ring.dim()) return false;
  if (!j.is_m_primary() || !ideal_contains(ideal, j)) return false;
  return multiplicity(ideal) == multiplicity(j);
}

}  // namespace normfilt
