#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "normfilt/arith.hpp"
#include "normfilt/monomial_ideal.hpp"

namespace normfilt {

/// Numerical semigroup <a_1, ..., a_k> with gcd 1, i.e. the value semigroup of
/// the ring k[[t^{a_1}, ..., t^{a_k}]].
class NumericalSemigroup {
 public:
  /// Throws PreconditionError when gens is empty, has a nonpositive entry, or
  /// has gcd != 1 (the complement would be infinite).
  explicit NumericalSemigroup(std::vector<Exponent> gens);

  /// Minimal generators, ascending.
  const std::vector<Exponent>& generators() const noexcept { return gens_; }
  Exponent multiplicity() const noexcept { return gens_.front(); }
  Exponent conductor() const noexcept { return conductor_; }
  Exponent frobenius() const noexcept { return conductor_ - 1; }
  const std::vector<Exponent>& gaps() const noexcept { return gaps_; }
  const std::vector<Exponent>& pseudo_frobenius() const noexcept { return pseudo_frobenius_; }
  std::size_t type() const noexcept { return pseudo_frobenius_.size(); }
  std::size_t genus() const noexcept { return gaps_.size(); }
  std::size_t embedding_dimension() const noexcept { return gens_.size(); }

  bool contains(Exponent v) const noexcept {
    if (v < 0) return false;
    if (v >= conductor_) return true;
    return member_[static_cast<std::size_t>(v)];
  }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) { return a.gens_ == b.gens_; }

 private:
  std::vector<Exponent> gens_;
  Exponent conductor_ = 0;
  std::vector<bool> member_;  // indices [0, conductor)
  std::vector<Exponent> gaps_;
  std::vector<Exponent> pseudo_frobenius_;
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

SemigroupPtr semigroup(std::vector<Exponent> gens);

/// Monomial ideal of k[[S]]: an upward-closed subset of S held by its minimal
/// valuations (no two differ by an element of S).
class SgIdeal {
 public:
  /// Ideal generated by t^v for v in valuations; every v must lie in S.
  SgIdeal(SemigroupPtr s, std::vector<Exponent> valuations);

  static SgIdeal zero(SemigroupPtr s) { return SgIdeal(std::move(s), {}); }
  static SgIdeal unit(SemigroupPtr s) { return SgIdeal(std::move(s), {0}); }
  static SgIdeal maximal(SemigroupPtr s);
  /// {v in S : v >= bound}, the closure of any ideal with minimal valuation bound.
  static SgIdeal at_least(SemigroupPtr s, Exponent bound);

  const NumericalSemigroup& semigroup() const noexcept { return *s_; }
  const SemigroupPtr& semigroup_ptr() const noexcept { return s_; }
  const std::vector<Exponent>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return !gens_.empty() && gens_.front() == 0; }
  Exponent min_valuation() const;

  bool contains(Exponent v) const;
  /// Every integer at or above this value is a member. Requires a nonzero ideal.
  Exponent frontier() const;

  friend bool operator==(const SgIdeal& a, const SgIdeal& b) { return *a.s_ == *b.s_ && a.gens_ == b.gens_; }

 private:
  SemigroupPtr s_;
  std::vector<Exponent> gens_;
};

SgIdeal multiply(const SgIdeal& a, const SgIdeal& b);
SgIdeal power(const SgIdeal& a, std::size_t n);
SgIdeal sum(const SgIdeal& a, const SgIdeal& b);
SgIdeal intersect(const SgIdeal& a, const SgIdeal& b);
/// a : t^v
SgIdeal colon(const SgIdeal& a, Exponent v);
SgIdeal colon(const SgIdeal& a, const SgIdeal& b);
bool ideal_contains(const SgIdeal& a, const SgIdeal& b);
/// #(a \ b); b must be nonzero and contained in a.
Integer quotient_length(const SgIdeal& a, const SgIdeal& b);
Integer colength(const SgIdeal& b);
/// Closure of a^n in the normalization k[[t]] intersected with S.
SgIdeal normal_power(const SgIdeal& a, std::size_t n);

/// Socle length of S/(t^a), a the multiplicity: lambda(((t^a) : m) / (t^a)).
Integer socle_length(const SemigroupPtr& s);

/// Monomial ideal of R = k[[S]][[x_1..x_v]]. Elements t^s x^b are encoded as
/// ExponentVector (s, b_1, ..., b_v) with s in S; t^s x^b divides t^s' x^b'
/// iff b <= b' and s' - s lies in S. The ideal is held by its minimal
/// generators. Its component at multidegree b is the S-ideal
/// {s : t^s x^b in I}; components only change while b stays inside the box
/// spanned by the generators' multidegrees, and are constant beyond it.
class ExtIdeal {
 public:
  ExtIdeal(SemigroupPtr s, std::size_t vars, std::vector<ExponentVector> gens);

  static ExtIdeal zero(SemigroupPtr s, std::size_t vars) { return ExtIdeal(std::move(s), vars, {}); }
  static ExtIdeal unit(SemigroupPtr s, std::size_t vars);
  /// m + (x_1, ..., x_v)
  static ExtIdeal maximal(SemigroupPtr s, std::size_t vars);
  static ExtIdeal from_component(const SgIdeal& c, std::size_t vars);

  const NumericalSemigroup& semigroup() const noexcept { return *s_; }
  const SemigroupPtr& semigroup_ptr() const noexcept { return s_; }
  std::size_t vars() const noexcept { return vars_; }
  std::size_t dim() const noexcept { return vars_ + 1; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  bool contains(const ExponentVector& e) const;
  SgIdeal component(const std::vector<Exponent>& degree) const;

  /// (q, p_1, ..., p_v): least t-valuation in the degree-0 component and the
  /// least pure powers of each x_i; nullopt when the ideal is not m-primary.
  std::optional<std::vector<Exponent>> primary_bounds() const;
  bool is_m_primary() const { return primary_bounds().has_value(); }

  friend bool operator==(const ExtIdeal& a, const ExtIdeal& b) {
    return *a.s_ == *b.s_ && a.vars_ == b.vars_ && a.gens_ == b.gens_;
  }

 private:
  SemigroupPtr s_;
  std::size_t vars_;
  std::vector<ExponentVector> gens_;
};

/// t^s x^b divides t^s' x^b' in R.
bool ext_divides(const NumericalSemigroup& s, const ExponentVector& a, const ExponentVector& b);

ExtIdeal multiply(const ExtIdeal& a, const ExtIdeal& b);
ExtIdeal power(const ExtIdeal& a, std::size_t n);
ExtIdeal sum(const ExtIdeal& a, const ExtIdeal& b);
ExtIdeal intersect(const ExtIdeal& a, const ExtIdeal& b);
ExtIdeal colon(const ExtIdeal& a, const ExponentVector& e);
ExtIdeal colon(const ExtIdeal& a, const ExtIdeal& b);
bool ideal_contains(const ExtIdeal& a, const ExtIdeal& b);
/// Sum over multidegrees of the component colengths; b must be m-primary and
/// contained in a.
Integer quotient_length(const ExtIdeal& a, const ExtIdeal& b);
Integer colength(const ExtIdeal& b);
std::optional<ExponentVector> first_outside(const ExtIdeal& a, const ExtIdeal& b);

/// I*T for T = k[[t]][[x_1..x_v]], the normalization of R: a monomial ideal
/// in 1 + v variables.
MonomialIdeal induced_monomial_ideal(const ExtIdeal& a);

/// Integral closure of a^n: the closure of (aT)^n in T computed by its
/// Newton polyhedron, restricted to R (t^s x^b lies in R iff s lies in S).
/// Valid because T is finite over R, so the closure in R is the closure in T
/// contracted to R.
ExtIdeal normal_power(const ExtIdeal& a, std::size_t n);

/// e_0 of an m-primary ideal, computed as e_0(aT) in T (T is birational and
/// finite over R with the same residue field).
Integer multiplicity(const ExtIdeal& a);

}  // namespace normfilt
