#pragma once

// Brute-force reference implementations used only by the tests. None of them
// calls into the library's polyhedral, fitting or semigroup code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "normfilt/arith.hpp"

namespace oracle {

using Point = std::vector<long>;
using normfilt::Integer;

// Determinant by cofactor expansion, for cross-checking small matrices.
inline __int128 det(const std::vector<std::vector<__int128>>& m) {
  const std::size_t k = m.size();
  if (k == 1) return m[0][0];
  __int128 out = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<__int128>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<__int128> row;
      for (std::size_t j = 0; j < k; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(row);
    }
    const __int128 term = m[0][c] * det(minor);
    out += c % 2 == 0 ? term : -term;
  }
  return out;
}

inline constexpr std::size_t kMaxSize = 6;
using Square = __int128[kMaxSize][kMaxSize];

// Fraction-free elimination on a copy; exact for integer matrices.
inline __int128 small_det(const Square& in, std::size_t k) {
  Square a;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) a[r][c] = in[r][c];
  }
  __int128 sign = 1, prev = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t piv = i;
    while (piv < k && a[piv][i] == 0) ++piv;
    if (piv == k) return 0;
    if (piv != i) {
      for (std::size_t c = 0; c < k; ++c) std::swap(a[i][c], a[piv][c]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < k; ++r) {
      for (std::size_t c = i + 1; c < k; ++c) a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
      a[r][i] = 0;
    }
    prev = a[i][i];
  }
  return sign * a[k - 1][k - 1];
}

// p lies in n * conv(gens) + R^d_{>=0} iff the system
//   sum_i lambda_i n g_i + s = p,  sum_i lambda_i = 1,  lambda, s >= 0
// is feasible. A feasible system has a basic feasible solution, so it is
// enough to try every square basis of d+1 columns and solve it by Cramer's
// rule. The basis and the solution are the certificate.
inline bool in_dilation(const std::vector<Point>& gens, long n, const Point& p) {
  const std::size_t d = p.size();
  const std::size_t k = d + 1;
  std::vector<std::array<__int128, kMaxSize>> cols;
  for (const auto& g : gens) {
    std::array<__int128, kMaxSize> c{};
    for (std::size_t i = 0; i < d; ++i) c[i] = static_cast<__int128>(n) * g[i];
    c[d] = 1;
    cols.push_back(c);
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::array<__int128, kMaxSize> c{};
    c[i] = 1;
    cols.push_back(c);
  }
  std::array<__int128, kMaxSize> rhs{};
  for (std::size_t i = 0; i < d; ++i) rhs[i] = p[i];
  rhs[d] = 1;

  const std::size_t m = cols.size();
  if (m < k) return false;
  std::vector<std::size_t> basis(k);
  for (std::size_t i = 0; i < k; ++i) basis[i] = i;
  while (true) {
    Square a;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) a[r][c] = cols[basis[c]][r];
    }
    const __int128 D = small_det(a, k);
    if (D != 0) {
      bool feasible = true;
      for (std::size_t c = 0; c < k && feasible; ++c) {
        Square ac;
        for (std::size_t r = 0; r < k; ++r) {
          for (std::size_t j = 0; j < k; ++j) ac[r][j] = j == c ? rhs[r] : a[r][j];
        }
        const __int128 Dc = small_det(ac, k);
        if ((Dc > 0 && D < 0) || (Dc < 0 && D > 0)) feasible = false;
      }
      if (feasible) return true;
    }
    // Next k-subset in lexicographic order.
    std::size_t i = k;
    while (i > 0 && basis[i - 1] == m - k + i - 1) --i;
    if (i == 0) return false;
    ++basis[i - 1];
    for (std::size_t j = i; j < k; ++j) basis[j] = basis[j - 1] + 1;
  }
}

// Number of lattice points of the box [0, bound)^d outside n * NP, found by
// locating in each column the first point inside (membership is monotone in
// the last coordinate).
inline Integer closure_colength(const std::vector<Point>& gens, long n, const Point& bound) {
  const std::size_t d = bound.size();
  Integer total = 0;
  Point prefix(d - 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i + 1 == d) {
      long lo = 0, hi = bound[d - 1];
      Point p = prefix;
      p.push_back(0);
      while (lo < hi) {
        const long mid = (lo + hi) / 2;
        p[d - 1] = mid;
        if (in_dilation(gens, n, p)) {
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
      total += lo;
      return;
    }
    for (long v = 0; v < bound[i]; ++v) {
      prefix[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return total;
}

// All products of n generators (with repetition, not minimalized).
inline std::vector<Point> naive_power(const std::vector<Point>& gens, long n) {
  std::vector<Point> out{Point(gens.front().size(), 0)};
  for (long k = 0; k < n; ++k) {
    std::vector<Point> next;
    for (const auto& a : out) {
      for (const auto& g : gens) {
        Point s = a;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += g[i];
        next.push_back(s);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out = next;
  }
  return out;
}

inline bool divisible_by_some(const std::vector<Point>& gens, const Point& p) {
  return std::any_of(gens.begin(), gens.end(), [&](const Point& g) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (g[i] > p[i]) return false;
    }
    return true;
  });
}

// Lattice points of [0, bound)^d satisfying pred.
inline Integer count_box(const Point& bound, const std::function<bool(const Point&)>& pred) {
  Integer total = 0;
  Point p(bound.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == bound.size()) {
      if (pred(p)) ++total;
      return;
    }
    for (long v = 0; v < bound[i]; ++v) {
      p[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return total;
}

// Coefficients c_0..c_k with P(n) = sum_i (-1)^i c_i C(n+k-i, k-i), by
// repeated differencing of the tail of the table: the (k-i)-th difference of
// the remainder after removing c_0..c_{i-1} is the constant (-1)^i c_i.
inline std::vector<Integer> difference_fit(const std::vector<Integer>& table, std::size_t k) {
  std::vector<Integer> rest = table;
  std::vector<Integer> coeffs;
  const long N = static_cast<long>(table.size()) - 1;
  for (std::size_t i = 0; i <= k; ++i) {
    std::vector<Integer> diff = rest;
    for (std::size_t step = 0; step < k - i; ++step) {
      for (std::size_t j = diff.size() - 1; j > 0; --j) diff[j] -= diff[j - 1];
    }
    const Integer lead = diff[static_cast<std::size_t>(N)];
    const Integer c = i % 2 == 0 ? lead : Integer(-lead);
    coeffs.push_back(c);
    for (long n = 0; n <= N; ++n) {
      const Integer basis = normfilt::binomial(n + static_cast<long>(k - i), static_cast<long>(k - i));
      rest[static_cast<std::size_t>(n)] -= (i % 2 == 0 ? c : Integer(-c)) * basis;
    }
  }
  return coeffs;
}

// Membership in the numerical semigroup generated by gens, for 0..limit-1.
inline std::vector<bool> semigroup_members(const std::vector<long>& gens, long limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit), false);
  in[0] = true;
  for (long v = 1; v < limit; ++v) {
    for (long g : gens) {
      if (g <= v && in[static_cast<std::size_t>(v - g)]) {
        in[static_cast<std::size_t>(v)] = true;
        break;
      }
    }
  }
  return in;
}

}  // namespace oracle
