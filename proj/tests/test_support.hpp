#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gft/series.hpp"
#include "gft/verifier.hpp"

namespace gft::testing {

inline double coeff_distance(const PowerSeries& a, const PowerSeries& b, int upto) {
  double d = 0.0;
  for (int k = 0; k <= upto; ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

inline PowerSeries random_series(UnitRandom& rng, int order, double scale = 1.0) {
  std::vector<Complex> c(order + 1);
  for (auto& x : c) x = Complex{2.0 * rng.next() - 1.0, 2.0 * rng.next() - 1.0} * scale;
  return PowerSeries(std::move(c));
}

/// Normalized f = z + sum a_k z^k with |a_k| <= bound/k^2, degree `degree`,
/// padded to `order`.
inline PowerSeries random_normalized(UnitRandom& rng, int degree, double bound, int order = kDefaultOrder) {
  std::vector<Complex> c(order + 1);
  c[1] = 1.0;
  for (int k = 2; k <= degree; ++k) {
    c[k] = std::polar(rng.next() * bound / (k * k), 6.283185307179586 * rng.next());
  }
  return PowerSeries(std::move(c));
}

// Random polynomial A with sum |A_j| <= bound, so sup over the disk is <= bound.
inline PowerSeries random_potential(UnitRandom& rng, int degree, double bound) {
  std::vector<Complex> c(degree + 1);
  double total = 0.0;
  for (auto& x : c) {
    x = std::polar(rng.next(), 6.283185307179586 * rng.next());
    total += std::abs(x);
  }
  const double scale = bound * rng.next() / total;
  for (auto& x : c) x *= scale;
  return PowerSeries(std::move(c));
}

inline double l1(const PowerSeries& a) {
  double s = 0.0;
  for (const auto& c : a.coeffs()) s += std::abs(c);
  return s;
}

}  // namespace gft::testing
