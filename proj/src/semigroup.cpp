#include "normfilt/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "normfilt/error.hpp"
#include "normfilt/newton.hpp"

namespace normfilt {

NumericalSemigroup::NumericalSemigroup(std::vector<Exponent> gens) {
  if (gens.empty()) throw PreconditionError("semigroup needs at least one generator");
  Exponent g = 0;
  for (Exponent a : gens) {
    if (a <= 0) throw PreconditionError("semigroup generators must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1) throw PreconditionError("semigroup generators have gcd " + std::to_string(g) + " != 1");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  const Exponent a = gens.front();
  const Exponent top = gens.back();
  std::vector<bool> sieve{true};
  Exponent run = 1;
  Exponent v = 0;
  // Sieve until `a` consecutive members appear (then every larger integer is a
  // member) and every generator is covered.
  while (run < a || v < top) {
    ++v;
    bool in = std::any_of(gens.begin(), gens.end(), [&](Exponent h) {
      return h <= v && sieve[static_cast<std::size_t>(v - h)];
    });
    sieve.push_back(in);
    run = in ? run + 1 : 0;
    if (run >= a && v >= top) break;
  }
  // Conductor: start of the final run of members.
  Exponent c = static_cast<Exponent>(sieve.size());
  while (c > 0 && sieve[static_cast<std::size_t>(c - 1)]) --c;
  conductor_ = c;
  member_.assign(sieve.begin(), sieve.begin() + c);

  for (Exponent h : gens) {
    bool decomposable = false;
    for (Exponent s = 1; s < h && !decomposable; ++s) decomposable = contains(s) && contains(h - s);
    if (!decomposable) gens_.push_back(h);
  }
  for (Exponent gap = 1; gap < conductor_; ++gap) {
    if (contains(gap)) continue;
    gaps_.push_back(gap);
    bool pf = std::all_of(gens_.begin(), gens_.end(), [&](Exponent h) { return contains(gap + h); });
    if (pf) pseudo_frobenius_.push_back(gap);
  }
}

SemigroupPtr semigroup(std::vector<Exponent> gens) {
  return std::make_shared<const NumericalSemigroup>(std::move(gens));
}

// ---------------------------------------------------------------------------
// SgIdeal

namespace {

// Minimal elements of `values` under v <= w iff w - v in S.
std::vector<Exponent> minimal_valuations(const NumericalSemigroup& s, std::vector<Exponent> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Exponent> out;
  for (Exponent v : values) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](Exponent u) { return s.contains(v - u); });
    if (!redundant) out.push_back(v);
  }
  return out;
}

void require_same_semigroup(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  if (!(a == b)) throw PreconditionError("ideals over different semigroups");
}

}  // namespace

SgIdeal::SgIdeal(SemigroupPtr s, std::vector<Exponent> valuations) : s_(std::move(s)) {
  for (Exponent v : valuations) {
    if (!s_->contains(v)) throw PreconditionError("t^" + std::to_string(v) + " is not in the semigroup ring");
  }
  gens_ = minimal_valuations(*s_, std::move(valuations));
}

SgIdeal SgIdeal::maximal(SemigroupPtr s) {
  std::vector<Exponent> g = s->generators();
  return SgIdeal(std::move(s), std::move(g));
}

SgIdeal SgIdeal::at_least(SemigroupPtr s, Exponent bound) {
  if (bound <= 0) return unit(std::move(s));
  std::vector<Exponent> values;
  const Exponent hi = checked_add(checked_add(bound, s->conductor()), s->multiplicity());
  for (Exponent v = bound; v <= hi; ++v) {
    if (s->contains(v)) values.push_back(v);
  }
  return SgIdeal(std::move(s), std::move(values));
}

Exponent SgIdeal::min_valuation() const {
  if (gens_.empty()) throw PreconditionError("zero ideal has no minimal valuation");
  return gens_.front();
}

bool SgIdeal::contains(Exponent v) const {
  if (!s_->contains(v)) return false;
  return std::any_of(gens_.begin(), gens_.end(), [&](Exponent g) { return g <= v && s_->contains(v - g); });
}

Exponent SgIdeal::frontier() const { return checked_add(min_valuation(), s_->conductor()); }

SgIdeal multiply(const SgIdeal& a, const SgIdeal& b) {
  require_same_semigroup(a.semigroup(), b.semigroup());
  std::vector<Exponent> raw;
  for (Exponent g : a.generators()) {
    for (Exponent h : b.generators()) raw.push_back(checked_add(g, h));
  }
  return SgIdeal(a.semigroup_ptr(), std::move(raw));
}

SgIdeal power(const SgIdeal& a, std::size_t n) {
  SgIdeal out = SgIdeal::unit(a.semigroup_ptr());
  for (std::size_t i = 0; i < n; ++i) out = multiply(out, a);
  return out;
}

SgIdeal sum(const SgIdeal& a, const SgIdeal& b) {
  require_same_semigroup(a.semigroup(), b.semigroup());
  std::vector<Exponent> raw = a.generators();
  raw.insert(raw.end(), b.generators().begin(), b.generators().end());
  return SgIdeal(a.semigroup_ptr(), std::move(raw));
}

SgIdeal intersect(const SgIdeal& a, const SgIdeal& b) {
  require_same_semigroup(a.semigroup(), b.semigroup());
  if (a.is_zero() || b.is_zero()) return SgIdeal::zero(a.semigroup_ptr());
  const Exponent hi = checked_add(std::max(a.frontier(), b.frontier()), a.semigroup().multiplicity());
  std::vector<Exponent> raw;
  for (Exponent v = 0; v < hi; ++v) {
    if (a.contains(v) && b.contains(v)) raw.push_back(v);
  }
  return SgIdeal(a.semigroup_ptr(), std::move(raw));
}

SgIdeal colon(const SgIdeal& a, Exponent v) {
  if (!a.semigroup().contains(v)) throw PreconditionError("t^" + std::to_string(v) + " is not in the ring");
  if (a.is_zero()) return a;
  const Exponent hi = checked_add(a.frontier(), a.semigroup().multiplicity());
  std::vector<Exponent> raw;
  for (Exponent w = 0; w < hi; ++w) {
    if (a.semigroup().contains(w) && a.contains(checked_add(w, v))) raw.push_back(w);
  }
  return SgIdeal(a.semigroup_ptr(), std::move(raw));
}

SgIdeal colon(const SgIdeal& a, const SgIdeal& b) {
  require_same_semigroup(a.semigroup(), b.semigroup());
  if (b.is_zero()) throw PreconditionError("colon by the zero ideal");
  std::optional<SgIdeal> out;
  for (Exponent g : b.generators()) {
    SgIdeal piece = colon(a, g);
    out = out ? intersect(*out, piece) : piece;
  }
  return *out;
}

bool ideal_contains(const SgIdeal& a, const SgIdeal& b) {
  require_same_semigroup(a.semigroup(), b.semigroup());
  return std::all_of(b.generators().begin(), b.generators().end(), [&](Exponent g) { return a.contains(g); });
}

Integer quotient_length(const SgIdeal& a, const SgIdeal& b) {
  require_same_semigroup(a.semigroup(), b.semigroup());
  if (b.is_zero()) throw PreconditionError("infinite length: quotient by the zero ideal");
  if (!ideal_contains(a, b)) throw PreconditionError("quotient_length requires b to be contained in a");
  std::uint64_t count = 0;
  for (Exponent v = 0; v < b.frontier(); ++v) {
    if (a.contains(v) && !b.contains(v)) ++count;
  }
  return Integer(count);
}

Integer colength(const SgIdeal& b) { return quotient_length(SgIdeal::unit(b.semigroup_ptr()), b); }

SgIdeal normal_power(const SgIdeal& a, std::size_t n) {
  if (n == 0) return SgIdeal::unit(a.semigroup_ptr());
  if (a.is_zero()) return a;
  return SgIdeal::at_least(a.semigroup_ptr(), checked_mul(a.min_valuation(), static_cast<Exponent>(n)));
}

Integer socle_length(const SemigroupPtr& s) {
  SgIdeal x = SgIdeal(s, {s->multiplicity()});
  return quotient_length(colon(x, SgIdeal::maximal(s)), x);
}

// ---------------------------------------------------------------------------
// ExtIdeal

bool ext_divides(const NumericalSemigroup& s, const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 1; i < a.dim(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return s.contains(b[0] - a[0]);
}

namespace {

std::vector<ExponentVector> minimal_ext_generators(const NumericalSemigroup& s, std::vector<ExponentVector> raw) {
  std::vector<std::pair<Exponent, ExponentVector>> keyed;
  keyed.reserve(raw.size());
  for (auto& v : raw) {
    Exponent deg = v.total_degree();
    keyed.emplace_back(deg, std::move(v));
  }
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
  std::vector<ExponentVector> out;
  for (auto& [deg, v] : keyed) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const ExponentVector& g) { return ext_divides(s, g, v); });
    if (!redundant) out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void require_same_ring(const ExtIdeal& a, const ExtIdeal& b) {
  require_same_semigroup(a.semigroup(), b.semigroup());
  if (a.vars() != b.vars()) throw PreconditionError("ideals over rings with different numbers of variables");
}

ExponentVector make_element(Exponent s, const std::vector<Exponent>& degree) {
  std::vector<Exponent> c{s};
  c.insert(c.end(), degree.begin(), degree.end());
  return ExponentVector(std::move(c));
}

std::vector<Exponent> degree_of(const ExponentVector& e) {
  return std::vector<Exponent>(e.coords().begin() + 1, e.coords().end());
}

// Calls visit(b) for every b in [0, hi_1] x ... x [0, hi_v] (inclusive).
template <class Visit>
void for_each_degree(const std::vector<Exponent>& hi, Visit&& visit) {
  std::vector<Exponent> b(hi.size(), 0);
  while (true) {
    visit(b);
    std::size_t i = 0;
    while (i < b.size()) {
      if (++b[i] <= hi[i]) break;
      b[i] = 0;
      ++i;
    }
    if (i == b.size()) return;
  }
}

}  // namespace

ExtIdeal::ExtIdeal(SemigroupPtr s, std::size_t vars, std::vector<ExponentVector> gens)
    : s_(std::move(s)), vars_(vars) {
  for (const auto& g : gens) {
    if (g.dim() != vars_ + 1) throw PreconditionError("element has wrong number of coordinates");
    if (!s_->contains(g[0])) throw PreconditionError("t^" + std::to_string(g[0]) + " is not in the semigroup ring");
  }
  gens_ = minimal_ext_generators(*s_, std::move(gens));
}

ExtIdeal ExtIdeal::unit(SemigroupPtr s, std::size_t vars) {
  return ExtIdeal(std::move(s), vars, {ExponentVector::zero(vars + 1)});
}

ExtIdeal ExtIdeal::maximal(SemigroupPtr s, std::size_t vars) {
  std::vector<ExponentVector> gens;
  for (Exponent g : s->generators()) gens.push_back(ExponentVector::unit_vector(vars + 1, 0, g));
  for (std::size_t i = 0; i < vars; ++i) gens.push_back(ExponentVector::unit_vector(vars + 1, i + 1));
  return ExtIdeal(std::move(s), vars, std::move(gens));
}

ExtIdeal ExtIdeal::from_component(const SgIdeal& c, std::size_t vars) {
  std::vector<ExponentVector> gens;
  for (Exponent v : c.generators()) gens.push_back(ExponentVector::unit_vector(vars + 1, 0, v));
  return ExtIdeal(c.semigroup_ptr(), vars, std::move(gens));
}

bool ExtIdeal::contains(const ExponentVector& e) const {
  if (e.dim() != vars_ + 1) throw PreconditionError("element has wrong number of coordinates");
  if (!s_->contains(e[0])) return false;
  return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return ext_divides(*s_, g, e); });
}

SgIdeal ExtIdeal::component(const std::vector<Exponent>& degree) const {
  if (degree.size() != vars_) throw PreconditionError("multidegree has wrong length");
  std::vector<Exponent> vals;
  for (const auto& g : gens_) {
    bool fits = true;
    for (std::size_t i = 0; i < vars_ && fits; ++i) fits = g[i + 1] <= degree[i];
    if (fits) vals.push_back(g[0]);
  }
  return SgIdeal(s_, std::move(vals));
}

std::optional<std::vector<Exponent>> ExtIdeal::primary_bounds() const {
  constexpr Exponent none = -1;
  std::vector<Exponent> out(vars_ + 1, none);
  for (const auto& g : gens_) {
    std::size_t support = 0;
    std::size_t var = 0;
    for (std::size_t i = 1; i <= vars_; ++i) {
      if (g[i] != 0) {
        ++support;
        var = i;
      }
    }
    if (support == 0) {
      if (out[0] == none || g[0] < out[0]) out[0] = g[0];
    } else if (support == 1 && g[0] == 0) {
      if (out[var] == none || g[var] < out[var]) out[var] = g[var];
    }
  }
  if (std::find(out.begin(), out.end(), none) != out.end()) return std::nullopt;
  return out;
}

ExtIdeal multiply(const ExtIdeal& a, const ExtIdeal& b) {
  require_same_ring(a, b);
  std::vector<ExponentVector> raw;
  raw.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) raw.push_back(g + h);
  }
  return ExtIdeal(a.semigroup_ptr(), a.vars(), std::move(raw));
}

ExtIdeal power(const ExtIdeal& a, std::size_t n) {
  ExtIdeal out = ExtIdeal::unit(a.semigroup_ptr(), a.vars());
  for (std::size_t i = 0; i < n; ++i) out = multiply(out, a);
  return out;
}

ExtIdeal sum(const ExtIdeal& a, const ExtIdeal& b) {
  require_same_ring(a, b);
  std::vector<ExponentVector> raw = a.generators();
  raw.insert(raw.end(), b.generators().begin(), b.generators().end());
  return ExtIdeal(a.semigroup_ptr(), a.vars(), std::move(raw));
}

ExtIdeal intersect(const ExtIdeal& a, const ExtIdeal& b) {
  require_same_ring(a, b);
  const auto& s = a.semigroup_ptr();
  std::vector<ExponentVector> raw;
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) {
      // (t^g0 x^gb) cap (t^h0 x^hb) = x^max(gb,hb) * ((t^g0) cap (t^h0)).
      auto degree = degree_of(componentwise_max(g, h));
      const SgIdeal both = intersect(SgIdeal(s, {g[0]}), SgIdeal(s, {h[0]}));
      for (Exponent v : both.generators()) {
        raw.push_back(make_element(v, degree));
      }
    }
  }
  return ExtIdeal(s, a.vars(), std::move(raw));
}

ExtIdeal colon(const ExtIdeal& a, const ExponentVector& e) {
  if (e.dim() != a.dim()) throw PreconditionError("element has wrong number of coordinates");
  const auto& s = a.semigroup_ptr();
  std::vector<ExponentVector> raw;
  for (const auto& g : a.generators()) {
    auto degree = degree_of(saturating_difference(g, e));
    const SgIdeal piece = colon(SgIdeal(s, {g[0]}), e[0]);
    for (Exponent v : piece.generators()) raw.push_back(make_element(v, degree));
  }
  return ExtIdeal(s, a.vars(), std::move(raw));
}

ExtIdeal colon(const ExtIdeal& a, const ExtIdeal& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw PreconditionError("colon by the zero ideal");
  std::optional<ExtIdeal> out;
  for (const auto& g : b.generators()) {
    ExtIdeal piece = colon(a, g);
    out = out ? intersect(*out, piece) : piece;
  }
  return *out;
}

bool ideal_contains(const ExtIdeal& a, const ExtIdeal& b) {
  require_same_ring(a, b);
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const ExponentVector& g) { return a.contains(g); });
}

Integer quotient_length(const ExtIdeal& a, const ExtIdeal& b) {
  require_same_ring(a, b);
  auto bounds = b.primary_bounds();
  if (!bounds) throw PreconditionError("infinite length: subideal is not m-primary");
  if (!ideal_contains(a, b)) throw PreconditionError("quotient_length requires b to be contained in a");
  if (a.is_zero()) return 0;
  std::vector<Exponent> hi(a.vars());
  for (std::size_t i = 0; i < hi.size(); ++i) hi[i] = (*bounds)[i + 1] - 1;
  Integer total = 0;
  if (std::any_of(hi.begin(), hi.end(), [](Exponent h) { return h < 0; })) return 0;
  for_each_degree(hi, [&](const std::vector<Exponent>& degree) {
    SgIdeal ca = a.component(degree);
    if (ca.is_zero()) return;
    total += quotient_length(ca, b.component(degree));
  });
  return total;
}

Integer colength(const ExtIdeal& b) { return quotient_length(ExtIdeal::unit(b.semigroup_ptr(), b.vars()), b); }

std::optional<ExponentVector> first_outside(const ExtIdeal& a, const ExtIdeal& b) {
  require_same_ring(a, b);
  for (const auto& g : a.generators()) {
    if (!b.contains(g)) return g;
  }
  return std::nullopt;
}

MonomialIdeal induced_monomial_ideal(const ExtIdeal& a) { return minimal_generators(a.generators(), a.dim()); }

ExtIdeal normal_power(const ExtIdeal& a, std::size_t n) {
  const auto& s = a.semigroup_ptr();
  if (n == 0) return ExtIdeal::unit(s, a.vars());
  MonomialIdeal closure = closure_power(induced_monomial_ideal(a), n);
  std::vector<Exponent> cap(a.vars(), 0);
  for (const auto& g : closure.generators()) {
    for (std::size_t i = 0; i < cap.size(); ++i) cap[i] = std::max(cap[i], g[i + 1]);
  }
  std::vector<ExponentVector> raw;
  for_each_degree(cap, [&](const std::vector<Exponent>& degree) {
    Exponent least = -1;
    for (const auto& g : closure.generators()) {
      bool fits = true;
      for (std::size_t i = 0; i < degree.size() && fits; ++i) fits = g[i + 1] <= degree[i];
      if (fits && (least < 0 || g[0] < least)) least = g[0];
    }
    if (least < 0) return;
    const SgIdeal tail = SgIdeal::at_least(s, least);
    for (Exponent v : tail.generators()) raw.push_back(make_element(v, degree));
  });
  return ExtIdeal(s, a.vars(), std::move(raw));
}

Integer multiplicity(const ExtIdeal& a) { return multiplicity(induced_monomial_ideal(a)); }

}  // namespace normfilt
