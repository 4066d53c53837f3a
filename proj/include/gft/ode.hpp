#pragma once

#include <span>
#include <vector>

#include "gft/grid.hpp"
#include "gft/series.hpp"

namespace gft {

/// Fundamental solutions of y'' + A y = 0 with u(0)=0, u'(0)=1, v(0)=1,
/// v'(0)=0, together with c = -a_2 so that f = u/(cu+v).
struct OdeSolution {
  PowerSeries u;
  PowerSeries v;
  Complex c{};
  // max |u v' - u' v + 1| over 64 points of |z| = 0.9.
  double wronskian_residual = 0.0;
  PowerSeries A;
};

/// Series solution by the coefficient recurrence
/// y_{k+2} = -(sum_j A_j y_{k-j}) / ((k+2)(k+1)).
OdeSolution solve_uv_series(const PowerSeries& A, int order, Complex c = {});

/// A = S(f,.)/2 and c = -a_2 for a normalized f, solved to f's order.
OdeSolution solve_for_function(const PowerSeries& f);

double wronskian_residual(const PowerSeries& u, const PowerSeries& v);

struct RaySamples {
  std::vector<double> t;
  std::vector<Complex> z;
  std::vector<Complex> u;
  std::vector<Complex> v;
  int iterations = 0;
  double last_update = 0.0;
};

/// Picard iteration of
///   u(z) = z + int_0^z (s - z) A(s) u(s) ds,  v(z) = 1 + int_0^z (s - z) A(s) v(s) ds
/// along s = t e^{i theta}, t in [0, r], with the composite trapezoid rule on
/// `steps` intervals. Independent of the series recurrence.
/// Throws NonConvergence if successive iterates still differ by more than
/// 1e-8 after `iters` rounds.
RaySamples picard_uv_ray(const PowerSeries& A, double theta, double r, int steps = 4096, int iters = 64);

/// u/(cu+v).
PowerSeries reconstruct_f(const OdeSolution& sol);

struct BoundCheck {
  double lhs_max = 0.0;
  double rhs = 0.0;
  Complex argmax{};
  bool holds = false;
  // |lhs_max - rhs| <= 1e-12: the strict bound is met with equality in the limit.
  bool equality_boundary = false;
};

struct GronwallReport {
  BoundCheck bound_u;                    // |u| < e^{d/2}
  BoundCheck bound_u_over_z;             // |u/z - 1| < d e^{d/2} / 2
  BoundCheck bound_cu_plus_v;            // |cu+v| < (1+eta) e^{d/2}
  BoundCheck bound_cu_plus_v_minus_1;    // |cu+v-1| < eta + (1+eta) d e^{d/2} / 2
  bool all_hold = false;
};

/// Maximizes the left sides of the four Gronwall consequences over the grid.
/// The caller guarantees sup|A| <= delta and eta = |c|.
GronwallReport gronwall_bounds(const OdeSolution& sol, double delta, double eta, const GridSpec& grid);

/// Gronwall's lemma on a uniform grid of [0, T]: verifies the hypothesis
/// g(t) <= k + int_0^t g A and returns whether g(t) <= k exp(int_0^t A) at
/// every node. Integrals use the trapezoid rule. Throws HypothesisViolated if
/// the hypothesis fails at some node.
bool discrete_gronwall_check(std::span<const double> g, std::span<const double> A, double k, double T,
                             double rel_tol = 1e-12);

}  // namespace gft
