#pragma once

#include <string>
#include <vector>

#include "gft/series.hpp"

namespace gft {

/// Observed maximum of |S(f,z)| on the circle |z| = radius_cap.
///
/// By the maximum-modulus principle this bounds sup|S| over the closed disk
/// of that radius, and is therefore a lower bound for the sup over the unit
/// disk. half of two_delta is the delta used by every criterion.
struct SupEstimate {
  double two_delta = 0.0;
  Complex argmax{};
  double radius_cap = 0.0;
  int grid_points = 0;
  // Tail coefficients of the Schwarzian series are not negligible at radius_cap.
  bool truncation_warning = false;
  // |S| grows sharply towards the boundary; the true sup may be unbounded.
  bool unbounded_growth = false;
  std::vector<std::string> diagnostics;

  double delta() const { return 0.5 * two_delta; }
};

struct SupOptions {
  double radius_cap = 0.999;
  int grid_n = 1024;
  int refine_iterations = 200;
  double angular_tol = 1e-10;
};

/// S(f,z) = (f''/f')' - (f''/f')^2 / 2 as a series of order N-3.
/// Throws NearZeroConstantTerm when f'(0) vanishes.
PowerSeries schwarzian_series(const PowerSeries& f);

/// Pointwise S(f,z) from f', f'', f''' evaluated at z.
/// Throws NearZeroDenominator when |f'(z)| < 1e-12.
Complex schwarzian_at(const PowerSeries& f, Complex z);

SupEstimate sup_schwarzian(const PowerSeries& f, const SupOptions& options = {});
SupEstimate sup_schwarzian(const PowerSeries& f, double radius_cap, int grid_n = 1024);

}  // namespace gft
