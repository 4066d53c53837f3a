// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "criteria_draws.hpp"
#include "gft/cli/commands.hpp"
#include "gft/criteria.hpp"
#include "gft/fixtures.hpp"
#include "gft/ode.hpp"
#include "gft/schwarzian.hpp"
#include "gft/verifier.hpp"
#include "test_support.hpp"

using namespace gft;
using std::numbers::pi;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail += "; ";
      else detail.clear();
      ok = false;
      detail += what;
    }
  }
};

std::string g(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// delta e^{delta/2} = target, by plain bisection.
double scalar_root(double target) {
  double lo = 0.0, hi = 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mid * std::exp(mid / 2.0) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Outcome schwarzian_fixtures() {
  Outcome o;
  const auto s = schwarzian_series(fixtures::moebius(0.3));
  double worst = 0.0;
  for (const auto& c : s.coeffs()) worst = std::max(worst, std::abs(c));
  const auto sup = sup_schwarzian(fixtures::nehari(), 0.999);
  const double err = std::abs(sup.two_delta - pi * pi / 2.0);
  o.detail = "max|S(moebius)_k| = " + g(worst) + ", |sup S(nehari) - pi^2/2| = " + g(err);
  o.require(worst < 1e-12, "Moebius Schwarzian coefficient " + g(worst));
  o.require(err < 1e-9, "Nehari sup off by " + g(err));
  return o;
}

Outcome convexity_constant() {
  Outcome o;
  const auto t = delta_threshold(CriterionKind::chiang_convexity, {});
  const double oracle = scalar_root(0.4);
  CriterionParams p;
  p.delta = 0.6712 / 2.0;
  const auto r = evaluate_criterion(CriterionKind::chiang_convexity, p);
  o.require(t.delta_star.has_value(), "no threshold");
  if (!o.ok) return o;
  o.detail = "delta* = " + g(*t.delta_star) + ", oracle = " + g(oracle);
  o.require(std::abs(*t.delta_star - oracle) < 1e-8, "threshold differs from oracle");
  o.require(0.3356 <= *t.delta_star, "0.3356 exceeds delta*");
  o.require(r.applicable && r.satisfied, "criterion fails at delta = 0.3356");
  return o;
}

Outcome octic_root() {
  Outcome o;
  const double eta = eta_root_combo(1.0);
  const auto trig = combo_precondition_gap(eta, 1.0);
  const auto closed = combo_closed_form_gap(eta, 1.0);
  o.detail = "eta = " + g(eta);
  o.require(std::abs(eta - 0.321336) < 1e-5, "root " + g(eta) + " is not 0.321336");
  o.require(trig && closed && std::abs(*trig - *closed) < 1e-8, "trigonometric and closed forms disagree");
  if (trig && closed) o.detail += ", gaps " + g(*trig) + " / " + g(*closed);
  return o;
}

Outcome ode_round_trip() {
  Outcome o;
  UnitRandom rng(20260417);
  double worst_rec = 0.0, worst_w = 0.0, worst_picard = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = testing::random_normalized(rng, 2 + static_cast<int>(rng.next() * 14), 0.1);
    const auto sol = solve_for_function(f);
    worst_w = std::max(worst_w, sol.wronskian_residual);
    const auto rec = reconstruct_f(sol);
    worst_rec = std::max(worst_rec, testing::coeff_distance(rec, f, std::min(rec.order(), f.order())));
    for (int ray = 0; ray < 8; ++ray) {
      const auto samples = picard_uv_ray(sol.A, 2.0 * pi * ray / 8.0, 0.9);
      for (std::size_t j = 0; j < samples.t.size(); j += samples.t.size() / 64) {
        worst_picard = std::max({worst_picard, std::abs(samples.u[j] - eval(sol.u, samples.z[j])),
                                 std::abs(samples.v[j] - eval(sol.v, samples.z[j]))});
      }
    }
  }
  o.detail = "reconstruction " + g(worst_rec) + ", Wronskian " + g(worst_w) + ", Picard " + g(worst_picard);
  o.require(worst_rec < 1e-8, "reconstruction residual " + g(worst_rec));
  o.require(worst_w < 1e-9, "Wronskian residual " + g(worst_w));
  o.require(worst_picard < 1e-7, "Picard disagreement " + g(worst_picard));
  return o;
}

Outcome gronwall_suite() {
  Outcome o;
  UnitRandom rng(20260418);
  int held = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto A = testing::random_potential(rng, 1 + static_cast<int>(rng.next() * 8), 1.0);
    const Complex c = std::polar(0.2 * rng.next(), 2.0 * pi * rng.next());
    const auto report = gronwall_bounds(solve_uv_series(A, 64, c), testing::l1(A), std::abs(c), GridSpec{});
    if (report.all_hold) ++held;
  }
  const int n = 257;
  std::vector<double> gs(n), As(n);
  for (int i = 0; i < n; ++i) {
    gs[i] = std::exp(2.0 * i / (n - 1));
    As[i] = 1.0;
  }
  const bool equality = discrete_gronwall_check(gs, As, 1.0, 2.0);
  std::fill(gs.begin(), gs.end(), 1.0);
  std::fill(As.begin(), As.end(), 0.0);
  const bool constant = discrete_gronwall_check(gs, As, 1.0, 1.0);
  for (int i = 0; i < n; ++i) {
    gs[i] = 1.0 + static_cast<double>(i) / (n - 1);
    As[i] = 1.0;
  }
  const bool linear = discrete_gronwall_check(gs, As, 1.0, 1.0);
  o.detail = std::to_string(held) + "/100 instances hold; discrete examples " + (equality ? "1" : "0") +
             (constant ? "1" : "0") + (linear ? "1" : "0");
  o.require(held == 100, "bounds fail on " + std::to_string(100 - held) + " instances");
  o.require(equality && constant && linear, "discrete Gronwall example failed");
  return o;
}

struct SweepCase {
  CriterionKind kind;
  cli::ParamFlags params;
};

Outcome soundness_sweep() {
  Outcome o;
  const auto P = [](double a, double b, double c) { return cli::ParamFlags{a, b, c}; };
  const std::vector<SweepCase> cases = {
      {CriterionKind::nehari_univalence, P(1, 0, 0)}, {CriterionKind::chiang_sst, P(0.7, 0, 0)},
      {CriterionKind::chiang_sst, P(1, 0, 0)},        {CriterionKind::chiang_convexity, P(1, 0, 0)},
      {CriterionKind::arg_fprime_beta, P(0.8, 0.3, 0)}, {CriterionKind::univalence_beta0, P(1, 0, 0)},
      {CriterionKind::univalence_beta0, P(0.5, 0, 0)}, {CriterionKind::bazilevic, P(0.5, 0.8, 0)},
      {CriterionKind::r_alpha, P(0.5, 0, 0)},         {CriterionKind::nonlinear_st_cv, P(0.5, 0.5, 0)},
      {CriterionKind::nonlinear_st_cv, P(-1, 1, 0)},  {CriterionKind::st_conv_combo, P(0, 1, 0)},
      {CriterionKind::p_gamma, P(1, 0, 0.3)},
  };
  cli::RunConfig config;
  config.p_gamma_mode = cli::PGammaSelection::repaired;
  int counterexamples = 0, passes = 0, criterion_fail = 0, failed = 0;
  for (const auto& c : cases) {
    std::vector<cli::SweepCounts> counts;
    cli::cmd_sweep({c.kind}, c.params, 100, config, &counts);
    for (const auto& k : counts) {
      counterexamples += k.counterexamples;
      passes += k.pass_pass;
      criterion_fail += k.criterion_fail;
      failed += k.generation_failed;
      if (k.counterexamples > 0) {
        o.require(false, std::string(to_string(c.kind)) + ": " + std::to_string(k.counterexamples) +
                             " counterexample candidates");
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(cases.size()) + " parameter sets x 100 seeds: " + std::to_string(passes) +
               " pass/pass, " + std::to_string(criterion_fail) + " criterion-fail, " +
               std::to_string(failed) + " generation failures, 0 counterexamples";
  }
  o.require(passes > 0, "no instance passed any criterion");
  return o;
}

Outcome monotone_and_limits() {
  Outcome o;
  UnitRandom rng(20260419);
  long pairs = 0;
  for (const auto kind : kAllCriterionKinds) {
    for (int trial = 0; trial < 1000; ++trial) {
      auto p = testing::draw_params(kind, rng, 0.3);
      const double d1 = rng.next();
      const double d2 = d1 + rng.next();
      p.delta = d1;
      const auto r1 = evaluate_criterion(kind, p);
      p.delta = d2;
      const auto r2 = evaluate_criterion(kind, p);
      if (!r1.lhs || !r2.lhs) continue;
      ++pairs;
      if (*r2.lhs < *r1.lhs - 1e-12) {
        o.require(false, std::string(to_string(kind)) + " lhs decreases at eta = " + g(p.eta));
        break;
      }
    }
    UnitRandom param_rng(7);
    auto p = testing::draw_params(kind, param_rng, 0.0);
    for (int i = 0; i < 50; ++i) {
      p.eta = 0.98 * i / 49.0;
      p.delta = 0.0;
      const bool pre = precondition_holds(kind, p);
      const auto t = delta_threshold(kind, p);
      const bool positive = t.delta_star && *t.delta_star > 0.0;
      if (pre != positive) {
        o.require(false, std::string(to_string(kind)) + " limit mismatch at eta = " + g(p.eta));
        break;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(pairs) + " monotone pairs, 10 kinds x 50 eta limits";
  return o;
}

Outcome p_gamma_flags() {
  Outcome o;
  CriterionParams p;
  p.gamma = 0.1;
  p.p_gamma_mode = PGammaMode::literal;
  std::string factors;
  for (const double d : {0.0, 0.1, 1.0}) {
    p.delta = d;
    const auto r = evaluate_criterion(CriterionKind::p_gamma, p);
    const bool negative = r.p_gamma_inner_factor && *r.p_gamma_inner_factor < 0.0;
    bool diag = false;
    for (const auto& s : r.diagnostics) diag = diag || s.rfind("literal: inner factor", 0) == 0;
    o.require(negative && diag && !r.applicable, "literal mode not flagged at delta = " + g(d));
    if (r.p_gamma_inner_factor) factors += (factors.empty() ? "" : ", ") + g(*r.p_gamma_inner_factor);
  }
  p.p_gamma_mode = PGammaMode::repaired;
  const auto t = delta_threshold(CriterionKind::p_gamma, p);
  o.require(t.delta_star && std::isfinite(*t.delta_star) && !t.saturated, "repaired delta* not finite");
  if (o.ok) o.detail = "literal factors " + factors + "; repaired delta* = " + g(*t.delta_star);
  return o;
}

Outcome negative_control() {
  Outcome o;
  const auto f = fixtures::quadratic(1.0);
  const auto r = univalence_grid_check(f, 0.99, 1024);
  o.require(!r.passed, "z + z^2 passed the univalence check");
  o.require(r.witness.has_value(), "no witness");
  if (!o.ok) return o;
  const auto [z1, z2] = *r.witness;
  const double gap = std::abs(eval(f, z1) - eval(f, z2));
  const double sep = std::abs(z1 - z2);
  o.detail = "witness gap " + g(gap) + ", separation " + g(sep);
  o.require(gap < 1e-9, "witness gap " + g(gap));
  o.require(sep > 0.1, "witness separation " + g(sep));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 schwarzian fixtures", 1.0, schwarzian_fixtures},
      {"2 convexity constant", 0.1, convexity_constant},
      {"3 octic root", 0.1, octic_root},
      {"4 ode round trip", 30.0, ode_round_trip},
      {"5 gronwall bounds", 10.0, gronwall_suite},
      {"6 soundness sweep", 300.0, soundness_sweep},
      {"7 monotonicity and limits", 30.0, monotone_and_limits},
      {"8 p_gamma flags", 0.1, p_gamma_flags},
      {"9 negative control", 5.0, negative_control},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) o.require(false, "runtime " + g(secs) + " s over " + g(c.budget_s) + " s");
    if (!o.ok) ++failures;
    std::printf("%s  %-28s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
