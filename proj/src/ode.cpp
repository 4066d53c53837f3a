#include "gft/ode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gft/errors.hpp"
#include "gft/schwarzian.hpp"

namespace gft {

namespace {

constexpr int kWronskianSamples = 64;
constexpr double kWronskianRadius = 0.9;
constexpr double kBoundSlack = 1e-12;
constexpr double kPicardConverged = 1e-14;
constexpr double kPicardTolerance = 1e-8;

PowerSeries solve_one(const PowerSeries& A, int order, Complex y0, Complex y1) {
  std::vector<Complex> y(order + 1);
  y[0] = y0;
  if (order >= 1) y[1] = y1;
  for (int k = 0; k + 2 <= order; ++k) {
    Complex sum{};
    for (int j = 0; j <= std::min(k, A.order()); ++j) sum += A[j] * y[k - j];
    y[k + 2] = -sum / static_cast<double>((k + 2) * (k + 1));
  }
  return PowerSeries(std::move(y));
}

BoundCheck finish(double lhs_max, double rhs, Complex argmax) {
  BoundCheck b;
  b.lhs_max = lhs_max;
  b.rhs = rhs;
  b.argmax = argmax;
  b.holds = lhs_max < rhs + kBoundSlack;
  b.equality_boundary = std::abs(lhs_max - rhs) <= kBoundSlack;
  return b;
}

}  // namespace

double wronskian_residual(const PowerSeries& u, const PowerSeries& v) {
  const PowerSeries du = derive(u);
  const PowerSeries dv = derive(v);
  double worst = 0.0;
  for (int k = 0; k < kWronskianSamples; ++k) {
    const Complex z = std::polar(kWronskianRadius, 2.0 * std::numbers::pi * k / kWronskianSamples);
    const Complex w = eval(u, z) * eval(dv, z) - eval(du, z) * eval(v, z);
    worst = std::max(worst, std::abs(w + 1.0));
  }
  return worst;
}

OdeSolution solve_uv_series(const PowerSeries& A, int order, Complex c) {
  if (order < 2) throw DomainError("solve_uv_series: order must be at least 2");
  OdeSolution sol{solve_one(A, order, 0.0, 1.0), solve_one(A, order, 1.0, 0.0), c, 0.0, A};
  sol.wronskian_residual = wronskian_residual(sol.u, sol.v);
  return sol;
}

OdeSolution solve_for_function(const PowerSeries& f) {
  if (!f.is_normalized()) throw DomainError("solve_for_function: f must satisfy f(0)=0, f'(0)=1");
  const PowerSeries A = Complex{0.5} * schwarzian_series(f);
  // A carries N-3 terms, which fixes u and v exactly through order N-1.
  const int order = std::max(2, f.order() - 1);
  return solve_uv_series(A, order, -f[2]);
}

RaySamples picard_uv_ray(const PowerSeries& A, double theta, double r, int steps, int iters) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("picard_uv_ray: r must lie in (0,1)");
  if (steps < 64) throw DomainError("picard_uv_ray: steps must be at least 64");
  if (iters < 8) throw DomainError("picard_uv_ray: iters must be at least 8");

  const int n = steps + 1;
  const double h = r / steps;
  const Complex dir = std::polar(1.0, theta);
  const Complex dir2 = dir * dir;

  RaySamples out;
  out.t.resize(n);
  out.z.resize(n);
  std::vector<Complex> a(n);
  for (int j = 0; j < n; ++j) {
    out.t[j] = j * h;
    out.z[j] = out.t[j] * dir;
    a[j] = eval(A, out.z[j]);
  }

  // One Picard sweep: y_new(t) = y0(t) + dir^2 [ int_0^t s F ds - t int_0^t F ds ], F = A y.
  const auto sweep = [&](const std::vector<Complex>& y, const std::vector<Complex>& y0,
                         std::vector<Complex>& next) {
    Complex i0{}, i1{};
    next[0] = y0[0];
    for (int j = 1; j < n; ++j) {
      const Complex f_prev = a[j - 1] * y[j - 1];
      const Complex f_cur = a[j] * y[j];
      i0 += 0.5 * h * (f_prev + f_cur);
      i1 += 0.5 * h * (out.t[j - 1] * f_prev + out.t[j] * f_cur);
      next[j] = y0[j] + dir2 * (i1 - out.t[j] * i0);
    }
  };

  const std::vector<Complex> u0 = out.z;
  const std::vector<Complex> v0(n, Complex{1.0});
  std::vector<Complex> u = u0, v = v0, u_next(n), v_next(n);

  double update = 0.0;
  for (int it = 1; it <= iters; ++it) {
    sweep(u, u0, u_next);
    sweep(v, v0, v_next);
    update = 0.0;
    double scale = 1.0;
    for (int j = 0; j < n; ++j) {
      update = std::max({update, std::abs(u_next[j] - u[j]), std::abs(v_next[j] - v[j])});
      scale = std::max({scale, std::abs(u_next[j]), std::abs(v_next[j])});
    }
    u.swap(u_next);
    v.swap(v_next);
    out.iterations = it;
    if (update <= kPicardConverged * scale) break;
  }
  out.last_update = update;
  if (update > kPicardTolerance) {
    throw NonConvergence("picard_uv_ray: successive iterates differ by " + std::to_string(update) +
                         " after " + std::to_string(iters) + " rounds");
  }
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

PowerSeries reconstruct_f(const OdeSolution& sol) {
  if (sol.wronskian_residual >= 1e-9) {
    throw DomainError("reconstruct_f: Wronskian residual " + std::to_string(sol.wronskian_residual) +
                      " is not below 1e-9");
  }
  return sol.u / (sol.c * sol.u + sol.v);
}

GronwallReport gronwall_bounds(const OdeSolution& sol, double delta, double eta, const GridSpec& grid) {
  const PowerSeries u_over_z = divide_by_z(sol.u);
  const PowerSeries w = sol.c * sol.u + sol.v;

  double m_u = -1, m_uz = -1, m_w = -1, m_w1 = -1;
  Complex at_u{}, at_uz{}, at_w{}, at_w1{};
  const auto track = [](double value, Complex z, double& best, Complex& at) {
    if (value > best) {
      best = value;
      at = z;
    }
  };
  for (const Complex z : grid.points()) {
    const Complex wz = eval(w, z);
    track(std::abs(eval(sol.u, z)), z, m_u, at_u);
    track(std::abs(eval(u_over_z, z) - 1.0), z, m_uz, at_uz);
    track(std::abs(wz), z, m_w, at_w);
    track(std::abs(wz - 1.0), z, m_w1, at_w1);
  }

  const double growth = std::exp(delta / 2.0);
  GronwallReport report;
  report.bound_u = finish(m_u, growth, at_u);
  report.bound_u_over_z = finish(m_uz, 0.5 * delta * growth, at_uz);
  report.bound_cu_plus_v = finish(m_w, (1.0 + eta) * growth, at_w);
  report.bound_cu_plus_v_minus_1 = finish(m_w1, eta + 0.5 * (1.0 + eta) * delta * growth, at_w1);
  report.all_hold = report.bound_u.holds && report.bound_u_over_z.holds && report.bound_cu_plus_v.holds &&
                    report.bound_cu_plus_v_minus_1.holds;
  return report;
}

bool discrete_gronwall_check(std::span<const double> g, std::span<const double> A, double k, double T,
                             double rel_tol) {
  if (g.size() != A.size() || g.size() < 2) {
    throw DomainError("discrete_gronwall_check: g and A need the same number (>= 2) of samples");
  }
  if (!(k > 0.0) || !(T > 0.0)) throw DomainError("discrete_gronwall_check: need k > 0 and T > 0");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] < 0.0 || A[i] < 0.0) throw DomainError("discrete_gronwall_check: samples must be non-negative");
  }

  const double h = T / static_cast<double>(g.size() - 1);
  double int_ga = 0.0;
  double int_a = 0.0;
  bool conclusion = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i > 0) {
      int_ga += 0.5 * h * (g[i - 1] * A[i - 1] + g[i] * A[i]);
      int_a += 0.5 * h * (A[i - 1] + A[i]);
    }
    const double hyp_rhs = k + int_ga;
    if (g[i] > hyp_rhs * (1.0 + rel_tol)) {
      throw HypothesisViolated("Gronwall hypothesis fails at node " + std::to_string(i) + ": g = " +
                               std::to_string(g[i]) + " > " + std::to_string(hyp_rhs));
    }
    if (g[i] > k * std::exp(int_a) * (1.0 + rel_tol)) conclusion = false;
  }
  return conclusion;
}

}  // namespace gft
