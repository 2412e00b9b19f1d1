#include "normfilt/filtration.hpp"

#include <string>

namespace normfilt {

Integer polynomial_value(const std::vector<Integer>& c, std::size_t k, long n) {
  Integer v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const long top = n + static_cast<long>(k) - static_cast<long>(i);
    Integer term = c[i] * binomial(top, static_cast<long>(k - i));
    v += (i % 2 == 0) ? term : Integer(-term);
  }
  return v;
}

namespace {

// Solves the square system m * x = rhs over the rationals (m nonsingular).
std::vector<Rational> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular binomial basis system");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

}  // namespace

HilbertCoefficients fit_coefficients(const std::vector<Integer>& table, std::size_t k, std::size_t window) {
  const std::size_t unknowns = k + 1;
  if (table.size() < unknowns + window) {
    throw HorizonError("horizon too small: a degree-" + std::to_string(k) + " fit with window " +
                       std::to_string(window) + " needs " + std::to_string(unknowns + window) +
                       " table entries, have " + std::to_string(table.size()));
  }
  const std::size_t base = table.size() - unknowns;
  std::vector<std::vector<Rational>> m(unknowns, std::vector<Rational>(unknowns));
  std::vector<Rational> rhs(unknowns);
  for (std::size_t row = 0; row < unknowns; ++row) {
    const long n = static_cast<long>(base + row);
    for (std::size_t i = 0; i < unknowns; ++i) {
      Integer b = binomial(n + static_cast<long>(k) - static_cast<long>(i), static_cast<long>(k - i));
      m[row][i] = Rational(i % 2 == 0 ? b : Integer(-b));
    }
    rhs[row] = Rational(table[base + row]);
  }
  HilbertCoefficients out;
  out.degree = k;
  for (const auto& q : solve(std::move(m), std::move(rhs))) {
    if (denominator(q) != 1) throw HorizonError("horizon too small: fitted coefficient " + q.str() + " is not integral");
    out.e.push_back(numerator(q));
  }
  auto matches = [&](std::size_t n) { return polynomial_value(out.e, k, static_cast<long>(n)) == table[n]; };
  for (std::size_t n = base - window; n < base; ++n) {
    if (!matches(n)) {
      throw HorizonError("horizon too small: fitted polynomial disagrees with the table at n = " + std::to_string(n));
    }
  }
  std::size_t from = base - window;
  while (from > 0 && matches(from - 1)) --from;
  out.stable_from = from;
  return out;
}

Integer minimal_multiplicity_series(std::size_t d, const Integer& e0, const Integer& lambda, std::size_t n) {
  const long dd = static_cast<long>(d);
  const long nn = static_cast<long>(n);
  return lambda * series_coefficient(dd, nn) + (e0 - lambda) * series_coefficient(dd, nn - 1);
}

std::vector<Integer> differences(const std::vector<Integer>& table) {
  std::vector<Integer> out;
  for (std::size_t n = 0; n < table.size(); ++n) out.push_back(n == 0 ? table[0] : Integer(table[n] - table[n - 1]));
  return out;
}

std::string to_string(FiltrationKind kind) {
  switch (kind) {
    case FiltrationKind::normal:
      return "normal";
    case FiltrationKind::adic:
      return "adic";
    case FiltrationKind::e_filtration:
      return "e_filtration";
    case FiltrationKind::custom:
      return "custom";
  }
  return "unknown";
}

std::string to_string(CMStatus s) {
  switch (s) {
    case CMStatus::certified:
      return "certified";
    case CMStatus::not_cohen_macaulay:
      return "not_cohen_macaulay";
    case CMStatus::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

CMStatus cm_status(const WindowCheck& vv, const ReductionNumber& rn, std::size_t window) {
  if (!vv.passed()) return CMStatus::not_cohen_macaulay;
  if (!rn.r || *rn.r + window > vv.last) return CMStatus::inconclusive;
  return CMStatus::certified;
}

}  // namespace normfilt
