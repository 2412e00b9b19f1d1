#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "normfilt/arith.hpp"
#include "normfilt/error.hpp"
#include "normfilt/monomial_ideal.hpp"

namespace normfilt {

/// Coefficients c_0..c_k of the polynomial
///   P(n) = sum_i (-1)^i c_i C(n+k-i, k-i)
/// that agrees with a table from index stable_from on. With k = d this is the
/// Hilbert polynomial lambda(R/F_{n+1}) of a filtration; with k = d-1 it is the
/// Sally module polynomial.
struct HilbertCoefficients {
  std::size_t degree = 0;  // k
  std::vector<Integer> e;
  std::size_t stable_from = 0;
  friend bool operator==(const HilbertCoefficients&, const HilbertCoefficients&) = default;
};

/// Default number of extra entries that must agree with a fit.
inline std::size_t default_window(std::size_t d) { return d + 2; }
/// Default horizon: fits in the d-dimensional basis need 2d+2 entries.
inline std::size_t default_nmax(std::size_t d) { return d + 5; }

Integer polynomial_value(const std::vector<Integer>& c, std::size_t k, long n);

/// Exact solve on the last k+1 entries; the `window` entries before them must
/// also match. Throws HorizonError when the table is too short, the solution is
/// not integral, or the window disagrees.
HilbertCoefficients fit_coefficients(const std::vector<Integer>& table, std::size_t k, std::size_t window);

/// Coefficient of z^n in (lambda + (e0 - lambda) z) / (1-z)^d, the Hilbert
/// series of the associated graded ring of E_0 = R, E_n = J^{n-1} Ibar.
Integer minimal_multiplicity_series(std::size_t d, const Integer& e0, const Integer& lambda, std::size_t n);

/// Outcome of a degreewise ideal check over [first, last].
struct WindowCheck {
  std::size_t first = 0;
  std::size_t last = 0;
  std::optional<std::size_t> failure;
  std::optional<ExponentVector> witness;
  bool passed() const noexcept { return !failure; }
};

/// step(n) returns a witness of failure at degree n, or nullopt.
template <class Step>
WindowCheck check_window(std::size_t first, std::size_t last, Step&& step) {
  WindowCheck out{first, last, std::nullopt, std::nullopt};
  for (std::size_t n = first; n <= last; ++n) {
    if (auto w = step(n)) {
      out.failure = n;
      out.witness = std::move(w);
      break;
    }
  }
  return out;
}

/// An element in exactly one of a and b, or nullopt when a = b.
template <class Ideal>
std::optional<ExponentVector> equality_witness(const Ideal& a, const Ideal& b) {
  if (auto w = first_outside(a, b)) return w;
  return first_outside(b, a);
}

enum class FiltrationKind { normal, adic, e_filtration, custom };

std::string to_string(FiltrationKind kind);

/// A filtration of a backend ring together with the reduction J used by the
/// J-dependent analytics.
template <class Ring>
struct FiltrationSpec {
  using Ideal = typename Ring::Ideal;
  Ring ring;
  FiltrationKind kind;
  Ideal ideal;
  Ideal reduction;
  /// Term F_n for kind == custom.
  std::function<Ideal(std::size_t)> rule;

  Ideal term(std::size_t n) const {
    switch (kind) {
      case FiltrationKind::normal:
        return ring.closure_power(ideal, n);
      case FiltrationKind::adic:
        return power(ideal, n);
      case FiltrationKind::e_filtration:
        if (n == 0) return ring.unit();
        return multiply(power(reduction, n - 1), ring.closure_power(ideal, 1));
      case FiltrationKind::custom:
        return rule(n);
    }
    throw std::logic_error("unknown filtration kind");
  }

  /// F_0, ..., F_{count-1}
  std::vector<Ideal> terms(std::size_t count) const {
    std::vector<Ideal> out;
    out.reserve(count);
    if (kind == FiltrationKind::normal || kind == FiltrationKind::custom) {
      for (std::size_t n = 0; n < count; ++n) out.push_back(term(n));
      return out;
    }
    // Multiplicative recursions.
    for (std::size_t n = 0; n < count; ++n) {
      if (n == 0) {
        out.push_back(ring.unit());
      } else if (n == 1) {
        out.push_back(term(1));
      } else {
        const Ideal& step = kind == FiltrationKind::adic ? ideal : reduction;
        out.push_back(multiply(out.back(), step));
      }
    }
    return out;
  }
};

/// Entry n = lambda(R/F_{n+1}) for n = 0..n_max; terms must hold F_0..F_{n_max+1}.
template <class Ideal>
std::vector<Integer> length_table(const std::vector<Ideal>& terms, std::size_t n_max) {
  if (terms.size() < n_max + 2) throw std::invalid_argument("length_table: too few terms");
  std::vector<Integer> out;
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(colength(terms[n + 1]));
  return out;
}

template <class Ring>
std::vector<Integer> length_table(const FiltrationSpec<Ring>& f, std::size_t n_max) {
  return length_table(f.terms(n_max + 2), n_max);
}

/// Entry n = lambda(F_n/F_{n+1}) for n = 0..n_max.
template <class Ideal>
std::vector<Integer> graded_lengths(const std::vector<Ideal>& terms, std::size_t n_max) {
  if (terms.size() < n_max + 2) throw std::invalid_argument("graded_lengths: too few terms");
  std::vector<Integer> out;
  for (std::size_t n = 0; n <= n_max; ++n) out.push_back(quotient_length(terms[n], terms[n + 1]));
  return out;
}

/// First differences of a length table: lambda(F_n/F_{n+1}) from lambda(R/F_{n+1}).
std::vector<Integer> differences(const std::vector<Integer>& table);

/// Entry n = lambda(F_{n+1}/J^n F_1) for n = 1..n_max, entry 0 = 0.
template <class Ideal>
std::vector<Integer> sally_lengths(const std::vector<Ideal>& normal, const Ideal& j, std::size_t n_max) {
  std::vector<Integer> out{0};
  Ideal jn_i = normal[1];
  for (std::size_t n = 1; n <= n_max; ++n) {
    jn_i = multiply(jn_i, j);
    out.push_back(quotient_length(normal[n + 1], jn_i));
  }
  return out;
}

/// Entry n = lambda(F_n/J^n F_1) for n = 0..n_max, the graded pieces of
/// N = (+)_n F_n / J^n F_1.
template <class Ideal>
std::vector<Integer> n_module_lengths(const std::vector<Ideal>& normal, const Ideal& j, std::size_t n_max) {
  std::vector<Integer> out;
  Ideal jn_i = normal[1];
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) jn_i = multiply(jn_i, j);
    out.push_back(quotient_length(normal[n], jn_i));
  }
  return out;
}

/// Entry n = lambda(E_n/E_{n+1}) of E_0 = R, E_n = J^{n-1} F_1.
template <class Ring>
std::vector<Integer> e_filtration_table(const Ring& ring, const typename Ring::Ideal& ibar,
                                        const typename Ring::Ideal& j, std::size_t n_max) {
  FiltrationSpec<Ring> e{ring, FiltrationKind::e_filtration, ibar, j, {}};
  return graded_lengths(e.terms(n_max + 2), n_max);
}

struct ReductionNumber {
  /// Least r with F_{n+1} = J F_n for r <= n <= checked_through; nullopt when
  /// even n = checked_through fails.
  std::optional<std::size_t> r;
  std::size_t checked_through = 0;
  /// For r >= 1: an element of F_r outside J F_{r-1}.
  std::optional<ExponentVector> witness;
};

template <class Ideal>
ReductionNumber reduction_number(const std::vector<Ideal>& terms, const Ideal& j, std::size_t n_max) {
  if (terms.size() < n_max + 2) throw std::invalid_argument("reduction_number: too few terms");
  ReductionNumber out;
  out.checked_through = n_max;
  // Scan downward: degree-wise equality is never extrapolated, the whole
  // range [r, n_max] has to hold.
  std::size_t r = n_max + 1;
  while (r > 0) {
    auto w = equality_witness(terms[r], multiply(j, terms[r - 1]));
    if (w) {
      out.witness = std::move(w);
      break;
    }
    --r;
  }
  if (r == n_max + 1) return out;
  out.r = r;
  return out;
}

/// Valabrega-Valla: F_n cap J = J F_{n-1} for n = 1..n_max.
template <class Ideal>
WindowCheck valabrega_valla(const std::vector<Ideal>& terms, const Ideal& j, std::size_t n_max) {
  if (terms.size() < n_max + 1) throw std::invalid_argument("valabrega_valla: too few terms");
  return check_window(1, n_max, [&](std::size_t n) {
    return first_outside(intersect(terms[n], j), multiply(j, terms[n - 1]));
  });
}

enum class CMStatus { certified, not_cohen_macaulay, inconclusive };

std::string to_string(CMStatus s);

/// A Valabrega-Valla failure is a proof of non-CM. Passing is a certificate
/// only when the range extends `window` degrees past the reduction number.
CMStatus cm_status(const WindowCheck& vv, const ReductionNumber& rn, std::size_t window = 2);

}  // namespace normfilt
