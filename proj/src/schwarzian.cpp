#include "gft/schwarzian.hpp"

#include <cmath>
#include <numbers>

#include "gft/errors.hpp"
#include "gft/golden.hpp"

namespace gft {

namespace {

constexpr double kDerivativeFloor = 1e-12;
constexpr double kTailFloor = 1e-10;
constexpr int kTailTerms = 8;
// Ratio of sup|S| at radius_cap to sup|S| at a radius ten times further from
// the boundary above which growth is flagged.
constexpr double kGrowthRatio = 2.0;

Complex on_circle(double r, double theta) { return std::polar(r, theta); }

double max_on_grid(const PowerSeries& f, double r, int n, int* best_index) {
  double best = -1.0;
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n;
    const double value = std::abs(schwarzian_at(f, on_circle(r, theta)));
    if (value > best) {
      best = value;
      if (best_index) *best_index = k;
    }
  }
  return best;
}

}  // namespace

PowerSeries schwarzian_series(const PowerSeries& f) {
  const PowerSeries f1 = derive(f);
  const PowerSeries f2 = derive(f1);
  const PowerSeries q = f2 / f1;
  return derive(q) - Complex{0.5} * (q * q);
}

Complex schwarzian_at(const PowerSeries& f, Complex z) {
  const auto d = eval_derivatives(f, z);
  if (std::abs(d[1]) < kDerivativeFloor) {
    throw NearZeroDenominator("Schwarzian: |f'(z)| below 1e-12 at z = (" + std::to_string(z.real()) +
                              ", " + std::to_string(z.imag()) + ")");
  }
  const Complex q = d[2] / d[1];
  return d[3] / d[1] - 1.5 * q * q;
}

SupEstimate sup_schwarzian(const PowerSeries& f, double radius_cap, int grid_n) {
  SupOptions options;
  options.radius_cap = radius_cap;
  options.grid_n = grid_n;
  return sup_schwarzian(f, options);
}

SupEstimate sup_schwarzian(const PowerSeries& f, const SupOptions& options) {
  const double r = options.radius_cap;
  if (!(r > 0.0 && r < 1.0)) throw DomainError("sup_schwarzian: radius_cap must lie in (0,1)");
  if (options.grid_n < 16) throw DomainError("sup_schwarzian: grid_n must be at least 16");

  SupEstimate est;
  est.radius_cap = r;
  est.grid_points = options.grid_n;

  int best_k = 0;
  const double grid_best = max_on_grid(f, r, options.grid_n, &best_k);
  const double step = 2.0 * std::numbers::pi / options.grid_n;
  double theta = step * best_k;

  const auto modulus = [&](double t) { return std::abs(schwarzian_at(f, on_circle(r, t))); };
  const double refined =
      golden_section_maximize(modulus, theta - step, theta + step, options.angular_tol,
                              options.refine_iterations);
  if (modulus(refined) > grid_best) theta = refined;

  est.argmax = on_circle(r, theta);
  est.two_delta = std::abs(schwarzian_at(f, est.argmax));

  // Truncation check on the series representation of S.
  try {
    const PowerSeries s = schwarzian_series(f);
    const int n = s.order();
    double tail = 0.0;
    for (int k = std::max(0, n - kTailTerms + 1); k <= n; ++k) {
      tail = std::max(tail, std::abs(s[k]) * std::pow(r, k));
    }
    if (tail >= kTailFloor) {
      est.truncation_warning = true;
      est.diagnostics.push_back("truncation: Schwarzian tail coefficients reach " + std::to_string(tail) +
                                " at radius_cap");
    }
  } catch (const NumericError& e) {
    est.truncation_warning = true;
    est.diagnostics.push_back(std::string("truncation: Schwarzian series unavailable: ") + e.what());
  }

  const double inner = 1.0 - 10.0 * (1.0 - r);
  if (inner > 0.0) {
    const double inner_sup = max_on_grid(f, inner, options.grid_n, nullptr);
    if (est.two_delta > kGrowthRatio * inner_sup + 1e-12) {
      est.unbounded_growth = true;
      est.diagnostics.push_back("unbounded-growth: two_delta >= estimate; |S| grows towards the boundary");
    }
  }
  return est;
}

}  // namespace gft
