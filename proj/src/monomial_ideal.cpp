#include "normfilt/monomial_ideal.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "normfilt/error.hpp"

namespace normfilt {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw PreconditionError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

constexpr Exponent kNoThreshold = std::numeric_limits<Exponent>::max();

// Least last coordinate of a member of `ideal` whose first d-1 coordinates are
// `prefix`, or kNoThreshold when the column misses the ideal entirely.
Exponent column_threshold(const MonomialIdeal& ideal, const std::vector<Exponent>& prefix) {
  const std::size_t last = ideal.dim() - 1;
  Exponent best = kNoThreshold;
  for (const auto& g : ideal.generators()) {
    bool fits = true;
    for (std::size_t i = 0; i < last && fits; ++i) fits = g[i] <= prefix[i];
    if (fits) best = std::min(best, g[last]);
  }
  return best;
}

// Calls visit(prefix) for every prefix in [0, bounds[0]) x ... x [0, bounds[d-2]).
template <class Visit>
void for_each_prefix(const std::vector<Exponent>& bounds, Visit&& visit) {
  const std::size_t k = bounds.size() - 1;
  std::vector<Exponent> prefix(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (bounds[i] <= 0) return;
  }
  while (true) {
    visit(prefix);
    std::size_t i = 0;
    while (i < k) {
      if (++prefix[i] < bounds[i]) break;
      prefix[i] = 0;
      ++i;
    }
    if (i == k) return;
  }
}

}  // namespace

ExponentVector::ExponentVector(std::vector<Exponent> coords) : coords_(std::move(coords)) {
  for (Exponent c : coords_) {
    if (c < 0) throw PreconditionError("negative exponent");
  }
}

ExponentVector::ExponentVector(std::initializer_list<Exponent> coords)
    : ExponentVector(std::vector<Exponent>(coords)) {}

ExponentVector ExponentVector::unit_vector(std::size_t d, std::size_t i, Exponent power) {
  std::vector<Exponent> c(d, 0);
  c.at(i) = power;
  return ExponentVector(std::move(c));
}

Exponent ExponentVector::total_degree() const {
  Exponent s = 0;
  for (Exponent c : coords_) s = checked_add(s, c);
  return s;
}

bool ExponentVector::divides(const ExponentVector& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  require_same_dim(a.dim(), b.dim());
  std::vector<Exponent> c(a.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a[i], b[i]);
  return ExponentVector(std::move(c));
}

ExponentVector componentwise_max(const ExponentVector& a, const ExponentVector& b) {
  require_same_dim(a.dim(), b.dim());
  std::vector<Exponent> c(a.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max(a[i], b[i]);
  return ExponentVector(std::move(c));
}

ExponentVector saturating_difference(const ExponentVector& a, const ExponentVector& b) {
  require_same_dim(a.dim(), b.dim());
  std::vector<Exponent> c(a.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::max<Exponent>(a[i] - b[i], 0);
  return ExponentVector(std::move(c));
}

MonomialIdeal::MonomialIdeal(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw PreconditionError("ambient dimension must be positive");
}

MonomialIdeal MonomialIdeal::unit(std::size_t d) {
  MonomialIdeal out(d);
  out.gens_.push_back(ExponentVector::zero(d));
  return out;
}

MonomialIdeal MonomialIdeal::maximal(std::size_t d) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(ExponentVector::unit_vector(d, i));
  return minimal_generators(std::move(gens), d);
}

MonomialIdeal MonomialIdeal::pure_powers(const std::vector<Exponent>& exponents) {
  const std::size_t d = exponents.size();
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(ExponentVector::unit_vector(d, i, exponents[i]));
  return minimal_generators(std::move(gens), d);
}

MonomialIdeal MonomialIdeal::principal(const ExponentVector& a) { return minimal_generators({a}, a.dim()); }

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().total_degree() == 0; }

bool MonomialIdeal::contains(const ExponentVector& a) const {
  require_same_dim(dim_, a.dim());
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return g.divides(a); });
}

std::optional<std::vector<Exponent>> MonomialIdeal::pure_power_exponents() const {
  std::vector<Exponent> out(dim_, kNoThreshold);
  for (const auto& g : gens_) {
    std::size_t support = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (g[i] != 0) {
        ++support;
        var = i;
      }
    }
    if (support == 0) return std::vector<Exponent>(dim_, 0);
    if (support == 1) out[var] = std::min(out[var], g[var]);
  }
  for (Exponent e : out) {
    if (e == kNoThreshold) return std::nullopt;
  }
  return out;
}

MonomialIdeal minimal_generators(std::vector<ExponentVector> raw, std::size_t d) {
  MonomialIdeal out(d);
  for (const auto& v : raw) require_same_dim(d, v.dim());
  std::vector<std::pair<Exponent, ExponentVector>> keyed;
  keyed.reserve(raw.size());
  for (auto& v : raw) {
    Exponent deg = v.total_degree();
    keyed.emplace_back(deg, std::move(v));
  }
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
  // A divisor has total degree no larger than its multiple, so scanning by
  // degree only needs to test against already accepted generators.
  for (auto& [deg, v] : keyed) {
    bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(),
                                 [&](const ExponentVector& g) { return g.divides(v); });
    if (!redundant) out.gens_.push_back(std::move(v));
  }
  std::sort(out.gens_.begin(), out.gens_.end());
  return out;
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a.dim(), b.dim());
  std::vector<ExponentVector> raw;
  raw.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) raw.push_back(g + h);
  }
  return minimal_generators(std::move(raw), a.dim());
}

MonomialIdeal power(const MonomialIdeal& a, std::size_t n) {
  MonomialIdeal out = MonomialIdeal::unit(a.dim());
  for (std::size_t i = 0; i < n; ++i) out = multiply(out, a);
  return out;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a.dim(), b.dim());
  std::vector<ExponentVector> raw = a.generators();
  raw.insert(raw.end(), b.generators().begin(), b.generators().end());
  return minimal_generators(std::move(raw), a.dim());
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a.dim(), b.dim());
  std::vector<ExponentVector> raw;
  raw.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) raw.push_back(componentwise_max(g, h));
  }
  return minimal_generators(std::move(raw), a.dim());
}

MonomialIdeal colon(const MonomialIdeal& a, const ExponentVector& b) {
  require_same_dim(a.dim(), b.dim());
  std::vector<ExponentVector> raw;
  for (const auto& g : a.generators()) raw.push_back(saturating_difference(g, b));
  return minimal_generators(std::move(raw), a.dim());
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a.dim(), b.dim());
  if (b.is_zero()) throw PreconditionError("colon by the zero ideal");
  std::optional<MonomialIdeal> out;
  for (const auto& g : b.generators()) {
    MonomialIdeal piece = colon(a, g);
    out = out ? intersect(*out, piece) : piece;
  }
  return *out;
}

bool ideal_contains(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a.dim(), b.dim());
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const ExponentVector& g) { return a.contains(g); });
}

Integer quotient_length(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a.dim(), b.dim());
  auto bounds = b.pure_power_exponents();
  if (!bounds) throw PreconditionError("infinite length: subideal is not m-primary");
  if (!ideal_contains(a, b)) throw PreconditionError("quotient_length requires b to be contained in a");
  if (a.is_zero()) return 0;
  std::uint64_t count = 0;
  const std::size_t last = a.dim() - 1;
  for_each_prefix(*bounds, [&](const std::vector<Exponent>& prefix) {
    Exponent ta = column_threshold(a, prefix);
    if (ta == kNoThreshold) return;
    Exponent tb = std::min(column_threshold(b, prefix), (*bounds)[last]);
    if (tb > ta) count += static_cast<std::uint64_t>(tb - ta);
  });
  return Integer(count);
}

Integer colength(const MonomialIdeal& b) { return quotient_length(MonomialIdeal::unit(b.dim()), b); }

std::optional<ExponentVector> first_outside(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a.dim(), b.dim());
  for (const auto& g : a.generators()) {
    if (!b.contains(g)) return g;
  }
  return std::nullopt;
}

}  // namespace normfilt
