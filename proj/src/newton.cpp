#include "normfilt/newton.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "normfilt/error.hpp"

namespace normfilt {

namespace detail {

namespace {

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::vector<Hyperplane> supporting_hyperplanes(const std::vector<std::vector<Integer>>& pts, std::size_t k) {
  std::map<std::pair<std::vector<Integer>, Integer>, std::size_t> seen;
  std::vector<Hyperplane> out;
  for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& subset) {
    const auto& base = pts[subset[0]];
    std::vector<std::vector<Integer>> diffs;
    for (std::size_t j = 1; j < k; ++j) {
      std::vector<Integer> row(k);
      for (std::size_t c = 0; c < k; ++c) row[c] = pts[subset[j]][c] - base[c];
      diffs.push_back(std::move(row));
    }
    // Generalized cross product: cofactors along a virtual first row.
    std::vector<Integer> normal(k);
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<std::vector<Integer>> minor;
      for (const auto& row : diffs) {
        std::vector<Integer> r;
        for (std::size_t cc = 0; cc < k; ++cc) {
          if (cc != c) r.push_back(row[cc]);
        }
        minor.push_back(std::move(r));
      }
      normal[c] = determinant(std::move(minor));
      if (c % 2 == 1) normal[c] = -normal[c];
    }
    Integer g = 0;
    for (const auto& v : normal) g = boost::multiprecision::gcd(g, v);
    if (g == 0) return;
    for (auto& v : normal) v /= g;
    Integer threshold = dot(normal, base);
    bool any_neg = false;
    bool any_pos = false;
    for (const auto& p : pts) {
      Integer s = dot(normal, p) - threshold;
      if (s < 0) any_neg = true;
      if (s > 0) any_pos = true;
    }
    if (any_neg && any_pos) return;
    // With every point on the hyperplane, orient so the first nonzero entry is positive.
    bool flip = any_neg;
    if (!any_neg && !any_pos) {
      std::size_t c = 0;
      while (normal[c] == 0) ++c;
      flip = normal[c] < 0;
    }
    if (flip) {
      for (auto& v : normal) v = -v;
      threshold = -threshold;
    }
    auto key = std::make_pair(normal, threshold);
    if (seen.count(key)) return;
    seen.emplace(key, out.size());
    Hyperplane h{normal, threshold, {}};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (dot(normal, pts[i]) == threshold) h.on.push_back(i);
    }
    out.push_back(std::move(h));
  });
  return out;
}

std::vector<std::vector<std::size_t>> triangulate(const std::vector<std::vector<Integer>>& pts, std::size_t k) {
  if (pts.empty()) return {};
  if (k == 0) return {{0}};
  if (k == 1) {
    std::size_t lo = 0;
    std::size_t hi = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    if (lo == hi) return {};
    return {{lo, hi}};
  }
  const std::size_t apex = 0;
  std::vector<std::vector<std::size_t>> out;
  for (const auto& facet : supporting_hyperplanes(pts, k)) {
    if (std::find(facet.on.begin(), facet.on.end(), apex) != facet.on.end()) continue;
    std::size_t drop = 0;
    while (facet.normal[drop] == 0) ++drop;
    std::vector<std::vector<Integer>> projected;
    for (std::size_t i : facet.on) {
      std::vector<Integer> q;
      for (std::size_t c = 0; c < k; ++c) {
        if (c != drop) q.push_back(pts[i][c]);
      }
      projected.push_back(std::move(q));
    }
    for (auto& simplex : triangulate(projected, k - 1)) {
      for (auto& i : simplex) i = facet.on[i];
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

}  // namespace detail

namespace {

std::vector<Integer> to_integers(const ExponentVector& a) {
  std::vector<Integer> out;
  out.reserve(a.dim());
  for (Exponent c : a.coords()) out.emplace_back(c);
  return out;
}

Integer ceil_div(const Integer& num, const Integer& den) {
  // den > 0
  Integer q = num / den;
  if (q * den < num) ++q;
  return q;
}

}  // namespace

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  const std::size_t d = ideal.dim();
  if (d > kMaxNewtonDimension) {
    throw PreconditionError("Newton polyhedra are supported up to dimension " +
                            std::to_string(kMaxNewtonDimension) + ", got " + std::to_string(d));
  }
  if (ideal.is_zero()) throw PreconditionError("Newton polyhedron of the zero ideal");
  auto intercepts = ideal.pure_power_exponents();
  if (!intercepts) throw PreconditionError("ideal is not m-primary");

  NewtonPolyhedron p;
  p.dim_ = d;
  p.intercepts_ = *intercepts;
  p.points_ = ideal.generators();
  if (ideal.is_unit()) return p;

  std::vector<std::vector<Integer>> pts;
  for (const auto& g : p.points_) pts.push_back(to_integers(g));
  std::vector<std::pair<Halfspace, std::vector<std::size_t>>> found;
  for (auto& h : detail::supporting_hyperplanes(pts, d)) {
    if (h.threshold <= 0) continue;
    bool nonneg = std::all_of(h.normal.begin(), h.normal.end(), [](const Integer& v) { return v >= 0; });
    if (!nonneg) continue;
    found.emplace_back(Halfspace{std::move(h.normal), std::move(h.threshold)}, std::move(h.on));
  }
  std::sort(found.begin(), found.end());
  for (auto& [h, on] : found) {
    p.facets_.push_back(std::move(h));
    p.facet_points_.push_back(std::move(on));
  }
  return p;
}

bool NewtonPolyhedron::contains(const ExponentVector& a, std::size_t n) const {
  if (a.dim() != dim_) throw PreconditionError("dimension mismatch in Newton polyhedron membership");
  for (const auto& h : facets_) {
    Integer s = 0;
    for (std::size_t i = 0; i < dim_; ++i) s += h.normal[i] * a[i];
    if (s < h.threshold * Integer(n)) return false;
  }
  return true;
}

Exponent NewtonPolyhedron::column_threshold(const std::vector<Exponent>& prefix, std::size_t n) const {
  const std::size_t last = dim_ - 1;
  Integer best = 0;
  for (const auto& h : facets_) {
    Integer rest = h.threshold * Integer(n);
    for (std::size_t i = 0; i < last; ++i) rest -= h.normal[i] * prefix[i];
    if (rest > 0) best = std::max(best, ceil_div(rest, h.normal[last]));
  }
  if (best > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
  return static_cast<Exponent>(best);
}

bool in_dilation(const NewtonPolyhedron& p, std::size_t n, const ExponentVector& a) { return p.contains(a, n); }

MonomialIdeal closure_power(const NewtonPolyhedron& p, std::size_t n) {
  const std::size_t d = p.dim();
  if (n == 0) return MonomialIdeal::unit(d);
  std::vector<Exponent> prefix(d - 1, 0);
  std::vector<Exponent> bounds(d - 1);
  for (std::size_t i = 0; i + 1 < d; ++i) bounds[i] = checked_mul(p.intercepts()[i], static_cast<Exponent>(n));
  std::vector<ExponentVector> raw;
  while (true) {
    std::vector<Exponent> c = prefix;
    c.push_back(p.column_threshold(prefix, n));
    raw.emplace_back(std::move(c));
    std::size_t i = 0;
    while (i + 1 < d) {
      if (++prefix[i] <= bounds[i]) break;
      prefix[i] = 0;
      ++i;
    }
    if (i + 1 >= d) break;
  }
  return minimal_generators(std::move(raw), d);
}

MonomialIdeal closure_power(const MonomialIdeal& ideal, std::size_t n) {
  return closure_power(newton_polyhedron(ideal), n);
}

Integer multiplicity(const NewtonPolyhedron& p) {
  const std::size_t d = p.dim();
  Integer total = 0;
  for (std::size_t f = 0; f < p.halfspaces().size(); ++f) {
    const auto& on = p.facet_points()[f];
    if (d == 1) {
      total += p.halfspaces()[f].threshold;
      continue;
    }
    // Facet normals are strictly positive, so dropping the last coordinate is
    // an affine bijection of the facet onto a full-dimensional set in Z^{d-1}.
    std::vector<std::vector<Integer>> projected;
    for (std::size_t i : on) {
      auto q = to_integers(p.points()[i]);
      q.pop_back();
      projected.push_back(std::move(q));
    }
    for (const auto& simplex : detail::triangulate(projected, d - 1)) {
      std::vector<std::vector<Integer>> m;
      for (std::size_t i : simplex) m.push_back(to_integers(p.points()[on[i]]));
      total += boost::multiprecision::abs(determinant(std::move(m)));
    }
  }
  return total;
}

Integer multiplicity(const MonomialIdeal& ideal) { return multiplicity(newton_polyhedron(ideal)); }

ReductionCertificate certify_reduction(const MonomialIdeal& ideal, const MonomialIdeal& reduction) {
  if (ideal.dim() != reduction.dim()) throw PreconditionError("dimension mismatch between ideal and reduction");
  ReductionCertificate cert{reduction, multiplicity(ideal), 0, false};
  cert.e0_reduction = multiplicity(reduction);
  cert.is_reduction = cert.e0_ideal == cert.e0_reduction && ideal_contains(ideal, reduction);
  return cert;
}

std::optional<ReductionCertificate> find_monomial_reduction(const MonomialIdeal& ideal) {
  auto exps = ideal.pure_power_exponents();
  if (!exps) throw PreconditionError("ideal is not m-primary");
  auto cert = certify_reduction(ideal, MonomialIdeal::pure_powers(*exps));
  if (!cert.is_reduction) return std::nullopt;
  return cert;
}

}  // namespace normfilt
