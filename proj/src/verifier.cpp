#include "gft/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <queue>
#include <vector>

#include "gft/errors.hpp"
#include "gft/schwarzian.hpp"

namespace gft {

namespace {

constexpr double kNearOrigin = 0.05;
constexpr double kValueFloor = 1e-12;
constexpr double kCollisionTolerance = 1e-9;
constexpr int kCandidatePairs = 32;
constexpr int kNewtonIterations = 60;
constexpr int kGenerationAttempts = 64;

Complex principal_pow(Complex w, double a) {
  if (a == 0.0) return 1.0;
  if (a == 1.0) return w;
  if (w == Complex{}) return 0.0;
  return std::exp(a * std::log(w));
}

std::string location(Complex z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

template <class Score>
GridReport scan(const PowerSeries& f, ExprKind kind, const CriterionParams& params, const GridSpec& grid,
                Score score) {
  const ExprEvaluator evaluate(f);
  GridReport report;
  report.quantity = std::string(to_string(kind));
  bool first = true;
  for (const Complex z : grid.points()) {
    Complex value;
    try {
      value = evaluate(kind, params, z);
    } catch (const NumericError& e) {
      throw NumericError(std::string(e.what()) + " while evaluating " + report.quantity + " at z = " + location(z));
    }
    const double s = score(value);
    if (first || s > report.extremum) {
      report.extremum = s;
      report.arg_extremum = z;
      first = false;
    }
  }
  return report;
}

}  // namespace

std::string_view to_string(ExprKind kind) {
  switch (kind) {
    case ExprKind::f_prime_minus_beta: return "f_prime_minus_beta";
    case ExprKind::bazilevic_expr: return "bazilevic_expr";
    case ExprKind::r_alpha_expr: return "r_alpha_expr";
    case ExprKind::nonlinear_expr: return "nonlinear_expr";
    case ExprKind::combo_expr: return "combo_expr";
    case ExprKind::p_gamma_expr: return "p_gamma_expr";
    case ExprKind::zfprime_over_f: return "zfprime_over_f";
    case ExprKind::one_plus_zfpp_over_fp: return "one_plus_zfpp_over_fp";
    case ExprKind::f_over_z: return "f_over_z";
  }
  return "unknown";
}

ExprEvaluator::ExprEvaluator(const PowerSeries& f)
    : f_(f), f1_(derive(f)), f2_(derive(f1_)), f_over_z_(divide_by_z(f)) {
  if (!f.is_normalized()) throw DomainError("expression evaluation needs a normalized f");
  z_over_f_ = PowerSeries::constant(1.0, f_over_z_.order()) / f_over_z_;
  zf1_over_f_ = f1_ * z_over_f_;
  z2f2_over_f_ = multiply_by_z(f2_ * z_over_f_);
}

Complex ExprEvaluator::operator()(ExprKind kind, const CriterionParams& p, Complex z) const {
  const bool near_origin = std::abs(z) < kNearOrigin;
  const Complex fz = eval(f_, z);
  const Complex f1 = eval(f1_, z);
  const Complex f2 = eval(f2_, z);

  const auto require_f = [&] {
    if (!near_origin && std::abs(fz) < kValueFloor) {
      throw NearZeroDenominator("|f(z)| below 1e-12 at z = " + location(z));
    }
  };
  const auto require_f1 = [&] {
    if (std::abs(f1) < kValueFloor) throw NearZeroDenominator("|f'(z)| below 1e-12 at z = " + location(z));
  };
  const auto f_over_z = [&] {
    if (near_origin) return eval(f_over_z_, z);
    require_f();
    return fz / z;
  };
  const auto z_over_f = [&] {
    if (near_origin) return eval(z_over_f_, z);
    require_f();
    return z / fz;
  };
  const auto zf1_over_f = [&] {
    if (near_origin) return eval(zf1_over_f_, z);
    require_f();
    return z * f1 / fz;
  };
  const auto z2f2_over_f = [&] {
    if (near_origin) return eval(z2f2_over_f_, z);
    require_f();
    return z * z * f2 / fz;
  };
  const auto one_plus_zf2_over_f1 = [&] {
    require_f1();
    return 1.0 + z * f2 / f1;
  };

  switch (kind) {
    case ExprKind::f_prime_minus_beta: return f1 - p.beta;
    case ExprKind::bazilevic_expr: return principal_pow(z_over_f(), 1.0 - p.alpha) * f1;
    case ExprKind::r_alpha_expr: return f1 + p.alpha * z * f2;
    case ExprKind::nonlinear_expr:
      return principal_pow(zf1_over_f(), p.alpha) * principal_pow(one_plus_zf2_over_f1(), p.beta);
    case ExprKind::combo_expr: return zf1_over_f() + p.beta * z2f2_over_f();
    case ExprKind::p_gamma_expr: return (1.0 - p.gamma) * f_over_z() + p.gamma * f1;
    case ExprKind::zfprime_over_f: return zf1_over_f();
    case ExprKind::one_plus_zfpp_over_fp: return one_plus_zf2_over_f1();
    case ExprKind::f_over_z: return f_over_z();
  }
  return {};
}

Complex eval_expr(const PowerSeries& f, ExprKind kind, const CriterionParams& params, Complex z) {
  return ExprEvaluator(f)(kind, params, z);
}

GridReport max_abs_arg(const PowerSeries& f, ExprKind kind, const CriterionParams& params, const GridSpec& grid,
                       double threshold) {
  GridReport report = scan(f, kind, params, grid, [](Complex w) { return std::abs(std::arg(w)); });
  report.quantity = "max |Arg " + report.quantity + "|";
  report.threshold = threshold;
  report.passed = report.extremum <= threshold + kVerifierSlack;
  return report;
}

GridReport min_real(const PowerSeries& f, ExprKind kind, const CriterionParams& params, const GridSpec& grid,
                    double threshold) {
  GridReport report = scan(f, kind, params, grid, [](Complex w) { return -w.real(); });
  report.extremum = -report.extremum;
  report.quantity = "min Re " + report.quantity;
  report.threshold = threshold;
  report.passed = report.extremum > threshold - kVerifierSlack;
  return report;
}

GridReport univalence_grid_check(const PowerSeries& f, double radius, int n) {
  if (!(radius > 0.0 && radius < 1.0)) throw DomainError("univalence_grid_check: radius must lie in (0,1)");
  if (n < 16 || n > 4096) throw DomainError("univalence_grid_check: n must lie in [16, 4096]");

  const int rings = std::max(2, static_cast<int>(std::lround(std::sqrt(n / 4.0))));
  const int per_ring = std::max(8, n / rings);
  std::vector<Complex> z;
  z.reserve(static_cast<std::size_t>(rings) * per_ring);
  for (int i = 1; i <= rings; ++i) {
    const double r = radius * i / rings;
    // Half-step offset on alternate rings avoids radially aligned samples.
    const double offset = (i % 2) ? 0.0 : 0.5;
    for (int j = 0; j < per_ring; ++j) z.push_back(std::polar(r, 2.0 * std::numbers::pi * (j + offset) / per_ring));
  }
  std::vector<Complex> w(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) w[i] = eval(f, z[i]);

  const PowerSeries f1 = derive(f);
  const double min_separation = 0.05 * radius;

  struct Candidate {
    double quotient;
    std::size_t i, j;
    bool operator<(const Candidate& o) const { return quotient < o.quotient; }
  };
  std::priority_queue<Candidate> worst;  // max-heap of the kCandidatePairs smallest quotients
  GridReport report;
  report.quantity = "min |f(z1)-f(z2)|/|z1-z2|";
  report.threshold = kCollisionTolerance;
  report.extremum = std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const double d = std::abs(z[i] - z[j]);
      if (d < min_separation) continue;
      const double q = std::abs(w[i] - w[j]) / d;
      if (q < report.extremum) {
        report.extremum = q;
        report.arg_extremum = z[i];
      }
      if (static_cast<int>(worst.size()) < kCandidatePairs) {
        worst.push({q, i, j});
      } else if (q < worst.top().quotient) {
        worst.pop();
        worst.push({q, i, j});
      }
    }
  }

  // Newton on f(x) = target from start; a converged root distinct from
  // anchor and inside the disk is a collision.
  const auto refine = [&](Complex anchor, Complex target, Complex start) -> std::optional<Complex> {
    Complex x = start;
    for (int it = 0; it < kNewtonIterations; ++it) {
      const Complex d1 = eval(f1, x);
      if (std::abs(d1) < kValueFloor) return std::nullopt;
      const Complex step = (eval(f, x) - target) / d1;
      x -= step;
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag()) || std::abs(x) > 2.0) return std::nullopt;
      if (std::abs(step) < 1e-15) break;
    }
    const double gap = std::abs(eval(f, x) - target);
    if (gap >= kCollisionTolerance) return std::nullopt;
    if (std::abs(x) > radius * (1.0 + 1e-12)) return std::nullopt;
    if (std::abs(x - anchor) < 1e-6) return std::nullopt;
    return x;
  };

  double best_separation = -1.0;
  while (!worst.empty()) {
    const Candidate c = worst.top();
    worst.pop();
    for (const auto& [a, b] : {std::pair{c.i, c.j}, std::pair{c.j, c.i}}) {
      if (auto x = refine(z[a], w[a], z[b])) {
        const double sep = std::abs(*x - z[a]);
        if (sep > best_separation) {
          best_separation = sep;
          report.witness = std::pair{z[a], *x};
          report.witness_gap = std::abs(eval(f, *x) - eval(f, z[a]));
        }
      }
    }
  }
  if (report.witness) {
    report.extremum = report.witness_gap / best_separation;
    report.arg_extremum = report.witness->first;
  }
  report.passed = !report.witness.has_value();
  return report;
}

UnitRandom::UnitRandom(std::uint64_t seed) : engine_(seed) {}

double UnitRandom::next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

PowerSeries random_budgeted_function(std::uint64_t seed, int n_coeffs, double two_delta_target, double eta_max,
                                     int order) {
  if (two_delta_target < 0.0) throw DomainError("random_budgeted_function: two_delta_target must be >= 0");
  if (n_coeffs < 1) throw DomainError("random_budgeted_function: n_coeffs must be >= 1");
  const int degree = n_coeffs + 1;
  if (order < degree) throw DomainError("random_budgeted_function: order below the generated degree");
  if (two_delta_target == 0.0) return PowerSeries::identity(order);

  UnitRandom rng(seed);
  for (int attempt = 0; attempt < kGenerationAttempts; ++attempt) {
    std::vector<Complex> c(degree + 1);
    c[1] = 1.0;
    for (int k = 2; k <= degree; ++k) {
      const double modulus = rng.next() * 0.5 / (k * k);
      c[k] = std::polar(modulus, 2.0 * std::numbers::pi * rng.next());
    }
    if (eta_max <= 0.0) c[2] = 0.0;
    const PowerSeries h(c);

    double t_max = 1.0;
    if (std::abs(c[2]) > eta_max) t_max = eta_max / std::abs(c[2]);

    const auto measure = [&](double t) { return sup_schwarzian(dilate(h, t)).two_delta; };
    try {
      double t = t_max;
      double s = measure(t);
      if (s > two_delta_target) {
        double lo = 0.0, hi = t_max;
        t = 0.0;
        for (int i = 0; i < 100; ++i) {
          const double mid = 0.5 * (lo + hi);
          const double sm = measure(mid);
          if (sm <= two_delta_target) {
            lo = mid;
            t = mid;
            s = sm;
            if (sm >= 0.99 * two_delta_target) break;
          } else {
            hi = mid;
          }
        }
        if (t == 0.0) continue;
      }
      std::vector<Complex> padded(order + 1);
      const PowerSeries g = dilate(h, t);
      std::copy(g.coeffs().begin(), g.coeffs().end(), padded.begin());
      return PowerSeries(std::move(padded));
    } catch (const NumericError&) {
      continue;
    }
  }
  throw GenerationFailed("random_budgeted_function: no instance met the budgets after 64 attempts");
}

}  // namespace gft
