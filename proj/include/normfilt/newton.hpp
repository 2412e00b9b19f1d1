#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "normfilt/arith.hpp"
#include "normfilt/monomial_ideal.hpp"

namespace normfilt {

inline constexpr std::size_t kMaxNewtonDimension = 4;

/// <normal, a> >= threshold, with a primitive nonnegative integer normal.
struct Halfspace {
  std::vector<Integer> normal;
  Integer threshold;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend bool operator<(const Halfspace& a, const Halfspace& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.threshold < b.threshold;
  }
};

/// conv(exponents of I) + R^d_{>=0} for an m-primary monomial ideal I.
///
/// Only the facets with positive threshold are stored; the coordinate
/// halfspaces a_i >= 0 are implicit. Because I contains a pure power of every
/// variable, each stored normal is strictly positive, so every such facet is
/// bounded and is the convex hull of the generator exponents lying on it.
/// n * NP(I) describes the integral closure of I^n: x^a is integral over I^n
/// iff a lies in the dilation.
class NewtonPolyhedron {
 public:
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Halfspace>& halfspaces() const noexcept { return facets_; }
  /// Exponents of the smallest pure powers inside the polyhedron.
  const std::vector<Exponent>& intercepts() const noexcept { return intercepts_; }
  /// Exponent vectors of the source ideal's generators.
  const std::vector<ExponentVector>& points() const noexcept { return points_; }
  /// Indices into points() of the generators on each facet.
  const std::vector<std::vector<std::size_t>>& facet_points() const noexcept { return facet_points_; }

  bool contains(const ExponentVector& a, std::size_t n = 1) const;

  /// Least c with (prefix, c) in n * NP, prefix holding the first d-1 coordinates.
  Exponent column_threshold(const std::vector<Exponent>& prefix, std::size_t n) const;

 private:
  friend NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);
  std::size_t dim_ = 0;
  std::vector<Halfspace> facets_;
  std::vector<Exponent> intercepts_;
  std::vector<ExponentVector> points_;
  std::vector<std::vector<std::size_t>> facet_points_;
};

/// Throws PreconditionError for the zero ideal, a non m-primary ideal, or
/// d > kMaxNewtonDimension.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

bool in_dilation(const NewtonPolyhedron& p, std::size_t n, const ExponentVector& a);

/// Integral closure of I^n.
MonomialIdeal closure_power(const NewtonPolyhedron& p, std::size_t n);
MonomialIdeal closure_power(const MonomialIdeal& ideal, std::size_t n);

/// e_0(I) = d! * vol(R^d_{>=0} \ NP(I)), by coning every bounded facet to
/// the origin and triangulating it.
Integer multiplicity(const NewtonPolyhedron& p);
Integer multiplicity(const MonomialIdeal& ideal);

struct ReductionCertificate {
  MonomialIdeal reduction;
  Integer e0_ideal;
  Integer e0_reduction;
  bool is_reduction = false;
};

/// Validates a pure-power ideal J as a reduction of I: J in I and e_0 agree.
ReductionCertificate certify_reduction(const MonomialIdeal& ideal, const MonomialIdeal& reduction);

/// J = (x_1^{a_1}, ..., x_d^{a_d}) with a_i the smallest pure-power exponents
/// of I. Returns nullopt when e_0(J) != e_0(I), i.e. no pure-power reduction
/// exists.
std::optional<ReductionCertificate> find_monomial_reduction(const MonomialIdeal& ideal);

namespace detail {

struct Hyperplane {
  std::vector<Integer> normal;
  Integer threshold;
  std::vector<std::size_t> on;  // indices of points on the hyperplane
};

/// Hyperplanes through k affinely independent points of `pts` (in Z^k) with
/// every point on the nonnegative side. Normals are primitive.
std::vector<Hyperplane> supporting_hyperplanes(const std::vector<std::vector<Integer>>& pts, std::size_t k);

/// Pulling triangulation of conv(pts), pts spanning Z^k affinely. Each simplex
/// is a list of k+1 point indices.
std::vector<std::vector<std::size_t>> triangulate(const std::vector<std::vector<Integer>>& pts, std::size_t k);

}  // namespace detail

}  // namespace normfilt
