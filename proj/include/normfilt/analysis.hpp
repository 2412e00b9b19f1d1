#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "normfilt/arith.hpp"
#include "normfilt/filtration.hpp"
#include "normfilt/input.hpp"
#include "normfilt/monomial_ideal.hpp"

namespace normfilt {

struct CoefficientFit {
  std::optional<HilbertCoefficients> fit;
  std::string error;  // set when the fit failed
  bool ok() const noexcept { return fit.has_value(); }
  /// i-th coefficient, or nullopt when the fit failed or i is out of range.
  std::optional<Integer> at(std::size_t i) const;
};

/// Everything the statement checkers need about one input, computed once.
/// Lengths are exact; each table is indexed by n = 0..nmax.
struct EntryAnalysis {
  std::string name;
  RingSpec ring;
  std::vector<std::string> coordinates;
  std::size_t d = 0;
  std::size_t nmax = 0;
  std::size_t window = 0;     // fit verification window
  std::size_t cm_window = 2;  // degrees past r required for a CM certificate

  std::vector<ExponentVector> ideal;
  std::vector<ExponentVector> closure;  // generators of Ibar
  bool closure_is_maximal = false;      // Ibar = m

  bool has_reduction = false;
  bool reduction_explicit = false;
  /// J when has_reduction; otherwise the pure-power parameter ideal of I
  /// (used only for the socle count).
  std::vector<ExponentVector> reduction;

  Integer e0;                 // multiplicity from the Newton polyhedron
  Integer e0_reduction;       // e_0(J)
  Integer colength_reduction; // lambda(R/J)
  Integer colength_closure;   // lambda(R/Ibar)
  std::optional<Integer> closure_over_reduction;  // lambda(Ibar/J)

  std::size_t type = 0;
  std::string type_method;
  std::optional<Integer> socle_type;  // socle of R/(x) in the semigroup factor
  std::size_t embedding_dimension = 0;
  std::optional<Integer> m2_over_jm;     // lambda(m^2/Jm), when Ibar = m
  std::optional<Integer> ibar2_over_jm;  // lambda(closure(I^2)/Jm), when Ibar = m

  std::vector<Integer> normal;         // lambda(R/closure(I^{n+1}))
  std::vector<Integer> adic;           // lambda(R/I^{n+1})
  std::vector<Integer> normal_graded;  // lambda(F_n/F_{n+1}), differences of `normal`
  std::vector<Integer> e_graded;       // lambda(E_n/E_{n+1}), E_n = J^{n-1} Ibar
  std::vector<Integer> sally;          // lambda(F_{n+1}/J^n Ibar), entry 0 = 0
  std::vector<Integer> n_module;       // lambda(F_n/J^n Ibar)
  std::vector<Integer> hm_terms;       // lambda(F_{n+1}/(J cap F_{n+1}))
  std::vector<Integer> reduction_terms;  // lambda(F_{n+1}/J F_n)
  std::vector<Integer> socle;          // lambda((J^n:m)/J^n) for n = 1..socle.size()

  CoefficientFit normal_fit;
  CoefficientFit adic_fit;
  CoefficientFit sally_fit;

  ReductionNumber normal_rn;
  ReductionNumber adic_rn;
  WindowCheck vv_normal;
  WindowCheck vv_adic;
  CMStatus normal_cm = CMStatus::inconclusive;
  CMStatus adic_cm = CMStatus::inconclusive;

  WindowCheck intersection;    // F_{n+1} cap J^n = J^n F_1, n = 1..nmax
  WindowCheck e3_containment;  // F_{n+2} in J^n, n = 0..nmax
  WindowCheck rn2;             // F_{n+1} = J^{n-1} F_2, n = 1..nmax

  /// m-adic data when Ibar = m (for statements about G(m)).
  std::optional<ReductionNumber> maximal_rn;
  std::optional<WindowCheck> vv_maximal;
  std::optional<CMStatus> maximal_cm;

  /// Semigroup rings: G(m) of the one-dimensional factor k[[S]], with the
  /// reduction (t^a), a the multiplicity.
  std::optional<WindowCheck> vv_residual;
  std::optional<ReductionNumber> residual_rn;
  std::optional<CMStatus> residual_cm;

  std::vector<Perturbation> perturbations;

  /// ebar1 - e0 + lambda(R/Ibar), when the normal fit succeeded.
  std::optional<Integer> sectional_genus() const;
  std::string format(const ExponentVector& e) const;
};

struct AnalysisOptions {
  std::optional<std::size_t> nmax;    // overrides the input file
  std::optional<std::size_t> window;  // default d + 2
};

/// Throws PreconditionError for an explicit reduction that does not certify,
/// HorizonError when nmax is too small for the reduction-number and
/// Valabrega-Valla ranges.
EntryAnalysis analyze(const InputSpec& spec, const AnalysisOptions& options = {});

}  // namespace normfilt
