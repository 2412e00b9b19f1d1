#include "normfilt/analysis.hpp"

#include <stdexcept>

#include "normfilt/error.hpp"
#include "normfilt/rings.hpp"

namespace normfilt {

std::optional<Integer> CoefficientFit::at(std::size_t i) const {
  if (!fit || i >= fit->e.size()) return std::nullopt;
  return fit->e[i];
}

std::optional<Integer> EntryAnalysis::sectional_genus() const {
  auto e1 = normal_fit.at(1);
  if (!e1) return std::nullopt;
  return *e1 - e0 + colength_closure;
}

std::string EntryAnalysis::format(const ExponentVector& e) const { return format_monomial(e, coordinates); }

namespace {

MonomialIdeal make_ideal(const PolynomialRing& ring, const std::vector<ExponentVector>& gens) {
  return minimal_generators(gens, ring.dim());
}

ExtIdeal make_ideal(const SemigroupRing& ring, const std::vector<ExponentVector>& gens) {
  return ExtIdeal(ring.semigroup(), ring.vars(), gens);
}

CoefficientFit try_fit(const std::vector<Integer>& table, std::size_t k, std::size_t window) {
  CoefficientFit out;
  try {
    out.fit = fit_coefficients(table, k, window);
  } catch (const HorizonError& e) {
    out.error = e.what();
  }
  return out;
}

void apply_perturbations(EntryAnalysis& a) {
  for (const auto& p : a.perturbations) {
    std::vector<Integer>* table = nullptr;
    if (p.table == "normal") table = &a.normal;
    if (p.table == "adic") table = &a.adic;
    if (p.table == "sally") table = &a.sally;
    if (p.table == "e_graded") table = &a.e_graded;
    if (!table) throw PreconditionError("unknown table '" + p.table + "' in perturbation");
    if (p.degree >= table->size()) {
      throw PreconditionError("perturbation degree " + std::to_string(p.degree) + " outside the " + p.table + " table");
    }
    (*table)[p.degree] += p.delta;
  }
}

template <class Ring>
void fill(EntryAnalysis& a, const Ring& ring, const typename Ring::Ideal& ideal,
          const std::optional<typename Ring::Ideal>& explicit_reduction) {
  using Ideal = typename Ring::Ideal;
  const std::size_t N = a.nmax;
  const Ideal m = ring.maximal();

  const Ideal ibar = ring.closure_power(ideal, 1);
  a.ideal = ideal.generators();
  a.closure = ibar.generators();
  a.closure_is_maximal = ibar == m;
  a.e0 = multiplicity(ideal);
  a.colength_closure = colength(ibar);

  Ideal j = explicit_reduction ? *explicit_reduction : *ring.pure_power_ideal(ideal);
  a.reduction_explicit = explicit_reduction.has_value();
  a.has_reduction = is_minimal_reduction(ring, ideal, j);
  if (explicit_reduction && !a.has_reduction) {
    throw PreconditionError("supplied reduction is not a d-generated reduction of the ideal (e0(J) = " +
                            to_string(multiplicity(j)) + ", e0(I) = " + to_string(a.e0) + ")");
  }
  a.reduction = j.generators();
  a.e0_reduction = multiplicity(j);
  a.colength_reduction = colength(j);

  FiltrationSpec<Ring> normal{ring, FiltrationKind::normal, ideal, j, {}};
  FiltrationSpec<Ring> adic{ring, FiltrationKind::adic, ideal, j, {}};
  const std::vector<Ideal> f = normal.terms(N + 3);
  const std::vector<Ideal> adic_terms = adic.terms(N + 2);
  std::vector<Ideal> jpow{ring.unit()};
  for (std::size_t n = 1; n <= N; ++n) jpow.push_back(multiply(jpow.back(), j));

  a.normal = length_table(f, N);
  a.adic = length_table(adic_terms, N);

  a.type = ring.type();
  a.embedding_dimension = ring.embedding_dimension();
  for (std::size_t n = 1; n <= 3; ++n) a.socle.push_back(quotient_length(colon(jpow[n], m), jpow[n]));

  if (a.has_reduction) {
    a.closure_over_reduction = quotient_length(ibar, j);
    a.sally = sally_lengths(f, j, N);
    a.n_module = n_module_lengths(f, j, N);
    a.e_graded = e_filtration_table(ring, ibar, j, N);
    for (std::size_t n = 0; n <= N; ++n) {
      a.hm_terms.push_back(quotient_length(f[n + 1], intersect(j, f[n + 1])));
      a.reduction_terms.push_back(quotient_length(f[n + 1], multiply(j, f[n])));
    }
    a.normal_rn = reduction_number(f, j, N);
    a.adic_rn = reduction_number(adic_terms, j, N);
    a.vv_normal = valabrega_valla(f, j, N);
    a.vv_adic = valabrega_valla(adic_terms, j, N);
    a.normal_cm = cm_status(a.vv_normal, a.normal_rn, a.cm_window);
    a.adic_cm = cm_status(a.vv_adic, a.adic_rn, a.cm_window);

    a.intersection = check_window(1, N, [&](std::size_t n) {
      // J^n F_1 is always inside both sides.
      return first_outside(intersect(f[n + 1], jpow[n]), multiply(jpow[n], ibar));
    });
    a.e3_containment = check_window(0, N, [&](std::size_t n) { return first_outside(f[n + 2], jpow[n]); });
    a.rn2 = check_window(1, N, [&](std::size_t n) { return equality_witness(f[n + 1], multiply(jpow[n - 1], f[2])); });

    if (a.closure_is_maximal) {
      const Ideal jm = multiply(j, m);
      a.m2_over_jm = quotient_length(multiply(m, m), jm);
      a.ibar2_over_jm = quotient_length(f[2], jm);
      FiltrationSpec<Ring> madic{ring, FiltrationKind::adic, m, j, {}};
      const std::vector<Ideal> mt = ideal == m ? adic_terms : madic.terms(N + 2);
      a.maximal_rn = reduction_number(mt, j, N);
      a.vv_maximal = valabrega_valla(mt, j, N);
      a.maximal_cm = cm_status(*a.vv_maximal, *a.maximal_rn, a.cm_window);
    }
  }
}

}  // namespace

EntryAnalysis analyze(const InputSpec& spec, const AnalysisOptions& options) {
  EntryAnalysis a;
  a.name = spec.name;
  a.ring = spec.ring;
  a.coordinates = coordinate_names(spec.ring);
  a.d = spec.ring.dimension();
  a.nmax = options.nmax ? *options.nmax : spec.nmax ? *spec.nmax : default_nmax(a.d);
  a.window = options.window ? *options.window : default_window(a.d);
  a.perturbations = spec.perturbations;
  if (a.nmax < a.d + 3) {
    throw HorizonError("horizon too small: nmax = " + std::to_string(a.nmax) + " but at least d + 3 = " +
                       std::to_string(a.d + 3) + " is required");
  }

  if (spec.ring.kind == RingKind::polynomial) {
    PolynomialRing ring(spec.ring.dim);
    MonomialIdeal ideal = spec.ideal_is_maximal ? ring.maximal() : make_ideal(ring, spec.ideal);
    std::optional<MonomialIdeal> j;
    if (spec.reduction) j = make_ideal(ring, *spec.reduction);
    fill(a, ring, ideal, j);
    a.type_method = "regular local ring";
  } else {
    auto s = semigroup(spec.ring.generators);
    SemigroupRing ring(s, spec.ring.adjoin);
    ExtIdeal ideal = spec.ideal_is_maximal ? ring.maximal() : make_ideal(ring, spec.ideal);
    std::optional<ExtIdeal> j;
    if (spec.reduction) j = make_ideal(ring, *spec.reduction);
    fill(a, ring, ideal, j);
    a.type_method = "pseudo-Frobenius count";
    a.socle_type = socle_length(s);

    SemigroupRing factor(s, 0);
    const ExtIdeal mf = factor.maximal();
    const ExtIdeal x = *factor.pure_power_ideal(mf);
    FiltrationSpec<SemigroupRing> madic{factor, FiltrationKind::adic, mf, x, {}};
    const auto terms = madic.terms(a.nmax + 2);
    a.residual_rn = reduction_number(terms, x, a.nmax);
    a.vv_residual = valabrega_valla(terms, x, a.nmax);
    a.residual_cm = cm_status(*a.vv_residual, *a.residual_rn, a.cm_window);
  }

  apply_perturbations(a);
  a.normal_graded = differences(a.normal);
  a.normal_fit = try_fit(a.normal, a.d, a.window);
  a.adic_fit = try_fit(a.adic, a.d, a.window);
  if (a.has_reduction) a.sally_fit = try_fit(a.sally, a.d - 1, a.window);
  return a;
}

}  // namespace normfilt
