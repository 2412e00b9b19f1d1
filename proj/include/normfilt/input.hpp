#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normfilt/monomial_ideal.hpp"

namespace normfilt {

enum class RingKind { polynomial, semigroup };

struct RingSpec {
  RingKind kind = RingKind::polynomial;
  std::size_t dim = 0;               // polynomial: number of variables
  std::vector<Exponent> generators;  // semigroup generators as written
  std::size_t adjoin = 0;            // semigroup: adjoined power-series variables
  /// Polynomial: all variable names. Semigroup: names of the adjoined
  /// variables (the uniformizer is always t).
  std::vector<std::string> variables;

  /// Krull dimension, which is also the number of exponent coordinates.
  std::size_t dimension() const { return kind == RingKind::polynomial ? dim : adjoin + 1; }
  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Test hook: add `delta` to entry `degree` of a computed table before any
/// derived quantity is formed. Used by the negative-path fixtures.
struct Perturbation {
  std::string table;
  std::size_t degree = 0;
  long delta = 0;
  friend bool operator==(const Perturbation&, const Perturbation&) = default;
};

struct InputSpec {
  std::string name;
  RingSpec ring;
  bool ideal_is_maximal = false;
  std::vector<ExponentVector> ideal;
  /// nullopt selects the pure-power reduction automatically.
  std::optional<std::vector<ExponentVector>> reduction;
  std::optional<std::size_t> nmax;
  /// Statement ids to run; empty means all.
  std::vector<std::string> checks;
  std::vector<Perturbation> perturbations;
  friend bool operator==(const InputSpec&, const InputSpec&) = default;
};

/// Parses the line-oriented input format. Syntax errors raise ParseError with
/// the line and column; mathematical problems (gcd != 1, exponent of t outside
/// the semigroup, ideal not m-primary, unsupported dimension) raise
/// PreconditionError.
InputSpec parse_input(std::string_view text);
InputSpec read_input_file(const std::string& path);

/// Canonical text form; parse_input(print_input(s)) == s.
std::string print_input(const InputSpec& spec);

/// Names of the exponent coordinates: the variables, with t first for
/// semigroup rings.
std::vector<std::string> coordinate_names(const RingSpec& ring);
std::vector<std::string> default_variables(RingKind kind, std::size_t count);

/// x^2*y, t^5*U, or 1.
std::string format_monomial(const ExponentVector& e, const std::vector<std::string>& names);

/// k[x,y,z] or k[[t^4,t^5,t^11]][[U,V]].
std::string describe_ring(const RingSpec& ring);

}  // namespace normfilt
