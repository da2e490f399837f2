#pragma once

// Hankel determinants of the series (1 - (1-9x)^(1/3)) / (3x).

#include <utility>
#include <vector>

#include "asmkit/bigint.hpp"
#include "asmkit/enumerate.hpp"
#include "asmkit/error.hpp"
#include "asmkit/grid.hpp"

namespace asmkit {

/// First m coefficients of (1 - (1-9x)^(1/3)) / (3x): 1, 3, 15, ...
/// The coefficients y_k of y = (1-9x)^(1/3) satisfy (1-9x) y' = -3y, i.e.
/// (k+1) y_{k+1} = (9k - 3) y_k, and the series coefficient is -y_{k+1}/3.
inline std::vector<BigInt> catalan3_coefficients(int m) {
  if (m < 1) throw Error(Errc::ZeroOrder, "need at least one coefficient");
  std::vector<BigInt> out;
  out.reserve(m);
  Rational y = 1;
  for (int k = 0; k < m; ++k) {
    y = y * Rational(9 * k - 3) / Rational(k + 1);
    Rational const c = -y / 3;
    if (!is_integer(c))
      throw Error(Errc::NonIntegerCoefficient, "coefficient " + std::to_string(k) + " is " + to_decimal(c));
    out.push_back(boost::multiprecision::numerator(c));
  }
  return out;
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
inline BigInt bareiss_determinant(Grid<BigInt> m) {
  int const n = m.rows();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      int p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline Grid<BigInt> hankel_matrix(int n) {
  auto const c = catalan3_coefficients(2 * n - 1);
  Grid<BigInt> h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = c[i + j];
  return h;
}

struct HankelReport {
  int n = 0;
  BigInt determinant;
  BigInt expected;  // 3^C(n,2) * A(n)
  bool equal = false;
};

inline HankelReport hankel_identity(int n) {
  if (n < 1) throw Error(Errc::ZeroOrder, "order must be at least 1");
  HankelReport r;
  r.n = n;
  r.determinant = bareiss_determinant(hankel_matrix(n));
  r.expected = pow_big(3, static_cast<unsigned>(n * (n - 1) / 2)) * count_formula(n);
  r.equal = r.determinant == r.expected;
  return r;
}

}  // namespace asmkit
