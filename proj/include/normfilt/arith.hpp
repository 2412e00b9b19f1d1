#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace normfilt {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Exponents and valuations. Arithmetic on them is overflow-checked; lengths,
// coefficients and volumes are carried as Integer.
using Exponent = std::int64_t;

Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

/// Polynomial binomial coefficient x(x-1)...(x-k+1)/k! for any integer x and
/// k >= 0; zero for k < 0. This is the convention of Hilbert polynomials, so
/// C(-1, 0) = 1.
Integer binomial(const Integer& x, long k);
Integer binomial(long x, long k);

/// Coefficient of z^n in 1/(1-z)^d: C(n+d-1, d-1) for n >= 0, zero for n < 0.
Integer series_coefficient(long d, long n);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(std::vector<std::vector<Integer>> m);

/// Rational that has to be integral; throws std::domain_error otherwise.
Integer to_integer(const Rational& q);

std::string to_string(const Integer& v);

}  // namespace normfilt
