#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "normfilt/arith.hpp"

namespace normfilt {

/// Exponent tuple of a monomial x^a in d variables.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<Exponent> coords);
  ExponentVector(std::initializer_list<Exponent> coords);

  static ExponentVector zero(std::size_t d) { return ExponentVector(std::vector<Exponent>(d, 0)); }
  static ExponentVector unit_vector(std::size_t d, std::size_t i, Exponent power = 1);

  std::size_t dim() const noexcept { return coords_.size(); }
  Exponent operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Exponent>& coords() const noexcept { return coords_; }
  Exponent total_degree() const;

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend ExponentVector componentwise_max(const ExponentVector& a, const ExponentVector& b);
  /// max(a - b, 0): exponent of the generator of (x^a) : x^b.
  friend ExponentVector saturating_difference(const ExponentVector& a, const ExponentVector& b);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Exponent> coords_;
};

/// Monomial ideal of k[x_1..x_d] held by its minimal generators, sorted
/// lexicographically. The zero ideal has no generators; the unit ideal is
/// generated by the zero vector.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t dim);  // zero ideal

  static MonomialIdeal zero(std::size_t d) { return MonomialIdeal(d); }
  static MonomialIdeal unit(std::size_t d);
  static MonomialIdeal maximal(std::size_t d);
  static MonomialIdeal pure_powers(const std::vector<Exponent>& exponents);
  static MonomialIdeal principal(const ExponentVector& a);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const;

  bool contains(const ExponentVector& a) const;

  /// Smallest p_i with x_i^{p_i} in the ideal, one per variable; nullopt when
  /// some variable has no pure power (the ideal is not m-primary).
  std::optional<std::vector<Exponent>> pure_power_exponents() const;
  bool is_m_primary() const { return pure_power_exponents().has_value(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimal_generators(std::vector<ExponentVector> raw, std::size_t d);
  std::size_t dim_;
  std::vector<ExponentVector> gens_;
};

MonomialIdeal minimal_generators(std::vector<ExponentVector> raw, std::size_t d);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, std::size_t n);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// a : x^b
MonomialIdeal colon(const MonomialIdeal& a, const ExponentVector& b);
/// a : b. Throws PreconditionError when b is the zero ideal.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);

/// b is a subset of a.
bool ideal_contains(const MonomialIdeal& a, const MonomialIdeal& b);

/// Length of a/b: the number of exponent vectors in a but not in b.
/// Requires b in a and b m-primary; otherwise throws PreconditionError.
Integer quotient_length(const MonomialIdeal& a, const MonomialIdeal& b);
/// Length of R/b.
Integer colength(const MonomialIdeal& b);

/// First generator of a (in lexicographic order) that lies outside b, or
/// nullopt when a is contained in b.
std::optional<ExponentVector> first_outside(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace normfilt
