#pragma once

// Univariate integer power series truncated after t^N, for dimension
// generating functions.

#include <stdexcept>
#include <vector>

#include "onerel/scalar.hpp"

namespace onerel {

/// Coefficients c_0..c_N.
using PowerSeries = std::vector<Integer>;

inline PowerSeries ps_one(int N) {
  PowerSeries s(N + 1, Integer(0));
  s[0] = 1;
  return s;
}

inline PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t len = std::min(a.size(), b.size());
  PowerSeries r(len, Integer(0));
  for (std::size_t i = 0; i < len; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// 1/a for a with constant term +-1.
inline PowerSeries ps_inverse(const PowerSeries& a) {
  if (a.empty() || (a[0] != 1 && a[0] != -1)) throw std::domain_error("ps_inverse: constant term must be a unit");
  PowerSeries r(a.size(), Integer(0));
  r[0] = a[0];
  for (std::size_t k = 1; k < a.size(); ++k) {
    Integer s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += a[i] * r[k - i];
    r[k] = -s * a[0];
  }
  return r;
}

/// (1 - t^k)^exponent for any integer exponent, truncated after t^N.
inline PowerSeries ps_one_minus_power(int k, long exponent, int N) {
  if (k < 1) throw std::invalid_argument("ps_one_minus_power: k must be >= 1");
  PowerSeries r(N + 1, Integer(0));
  // Generalized binomial: sum_j C(exponent, j) (-1)^j t^{kj}.
  Integer c = 1;
  for (long j = 0; static_cast<long>(k) * j <= N; ++j) {
    r[k * j] = c;
    c = c * Integer(exponent - j) / Integer(j + 1) * -1;
  }
  return r;
}

}  // namespace onerel
