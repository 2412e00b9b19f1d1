#include "normfilt/arith.hpp"

#include <stdexcept>
#include <utility>

namespace normfilt {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("exponent overflow");
  return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("exponent overflow");
  return out;
}

Integer binomial(const Integer& x, long k) {
  if (k < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (long i = 0; i < k; ++i) {
    num *= x - i;
    den *= i + 1;
  }
  return num / den;
}

Integer binomial(long x, long k) { return binomial(Integer(x), k); }

Integer series_coefficient(long d, long n) {
  if (n < 0) return 0;
  if (d == 0) return n == 0 ? 1 : 0;
  return binomial(n + d - 1, d - 1);
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer to_integer(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw std::domain_error("value is not integral: " + q.str());
  }
  return boost::multiprecision::numerator(q);
}

std::string to_string(const Integer& v) { return v.str(); }

}  // namespace normfilt
