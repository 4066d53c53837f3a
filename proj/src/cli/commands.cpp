#include "gft/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gft/errors.hpp"
#include "gft/fixtures.hpp"
#include "gft/ode.hpp"
#include "gft/schwarzian.hpp"

namespace gft::cli {

namespace {

using nlohmann::ordered_json;
constexpr double kPi = std::numbers::pi;

std::string join(const std::vector<std::string>& items, const char* sep = "; ") {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

std::string fmt_complex(Complex z) { return "(" + fmt12(z.real()) + "," + fmt12(z.imag()) + ")"; }

Cell opt_cell(const std::optional<double>& x) { return x ? Cell{*x} : Cell{}; }

CriterionParams make_params(const ParamFlags& flags, double eta, double delta, PGammaMode mode) {
  CriterionParams p;
  p.eta = eta;
  p.delta = delta;
  p.alpha = flags.alpha;
  p.beta = flags.beta;
  p.gamma = flags.gamma;
  p.p_gamma_mode = mode;
  return p;
}

SupEstimate measure(const PowerSeries& f, const RunConfig& config) {
  SupOptions o;
  o.radius_cap = config.radius_cap;
  o.grid_n = config.sup_grid_n;
  return sup_schwarzian(f, o);
}

std::string describe_report(const GridReport& g) {
  std::string s = g.quantity + " extremum=" + fmt12(g.extremum) + " at " + fmt_complex(g.arg_extremum) +
                  " threshold=" + fmt12(g.threshold) + (g.passed ? " passed" : " failed");
  if (g.witness) {
    s += " witness=" + fmt_complex(g.witness->first) + "/" + fmt_complex(g.witness->second) +
         " gap=" + fmt12(g.witness_gap);
  }
  return s;
}

ordered_json report_json(const GridReport& g) {
  ordered_json j;
  j["quantity"] = g.quantity;
  j["extremum"] = num(g.extremum);
  j["arg_extremum"] = num(g.arg_extremum);
  j["threshold"] = num(g.threshold);
  j["passed"] = g.passed;
  if (g.witness) {
    j["witness"] = ordered_json::array({num(g.witness->first), num(g.witness->second)});
    j["witness_gap"] = num(g.witness_gap);
  }
  return j;
}

ordered_json coeffs_json(const PowerSeries& f) {
  int last = f.order();
  while (last > 1 && f[last] == Complex{}) --last;
  ordered_json arr = ordered_json::array();
  for (int k = 0; k <= last; ++k) arr.push_back(num(f[k]));
  return arr;
}

struct Verification {
  bool ran = false;
  bool passed = false;
  std::vector<GridReport> reports;
  std::string error;
};

Verification run_verification(CriterionKind kind, const PowerSeries& f, const CriterionParams& p,
                              const CriterionResult& r, const RunConfig& config) {
  Verification v;
  if (kind == CriterionKind::p_gamma && p.p_gamma_mode == PGammaMode::literal) return v;
  v.ran = true;
  try {
    v.reports = verify_conclusion(kind, f, p, r, config);
    v.passed = std::all_of(v.reports.begin(), v.reports.end(), [](const GridReport& g) { return g.passed; });
  } catch (const NumericError& e) {
    v.error = e.what();
    v.passed = false;
  }
  return v;
}

std::string verification_text(const Verification& v) {
  if (!v.ran) return "";
  std::vector<std::string> parts;
  for (const auto& g : v.reports) parts.push_back(describe_report(g));
  if (!v.error.empty()) parts.push_back("error: " + v.error);
  return join(parts);
}

// Evaluates at the measured delta; a violation that disappears after shaving
// the measurement tolerance off delta is reported as satisfied on the boundary.
CriterionResult evaluate_measured(CriterionKind kind, const CriterionParams& p, const RunConfig& config) {
  auto r = evaluate_criterion(kind, p);
  if (r.applicable && r.satisfied) return r;
  auto q = p;
  q.delta = std::max(0.0, p.delta - config.measure_tol * std::max(1.0, p.delta));
  if (q.delta == p.delta) return r;
  auto r2 = evaluate_criterion(kind, q);
  if (r2.applicable && r2.satisfied) {
    r2.diagnostics.push_back("boundary: satisfied at delta - " + fmt12(p.delta - q.delta) +
                             " (within measurement tolerance)");
    return r2;
  }
  return r;
}

}  // namespace

std::vector<GridReport> verify_conclusion(CriterionKind kind, const PowerSeries& f, const CriterionParams& p,
                                          const CriterionResult& result, const RunConfig& config) {
  const auto& grid = config.grid;
  const double arg_bound = p.alpha * kPi / 2.0;
  switch (kind) {
    case CriterionKind::nehari_univalence:
      return {univalence_grid_check(f, grid.radius, config.univalence_n)};
    case CriterionKind::univalence_beta0: {
      auto q = p;
      q.beta = 0.0;
      return {max_abs_arg(f, ExprKind::f_prime_minus_beta, q, grid, arg_bound),
              univalence_grid_check(f, grid.radius, config.univalence_n)};
    }
    case CriterionKind::chiang_sst:
      return {max_abs_arg(f, ExprKind::zfprime_over_f, p, grid, arg_bound),
              max_abs_arg(f, ExprKind::f_over_z, p, grid, arg_bound)};
    case CriterionKind::chiang_convexity: {
      double order = 0.0;
      if (result.convexity_order && *result.convexity_order < 1.0) order = *result.convexity_order;
      return {min_real(f, ExprKind::one_plus_zfpp_over_fp, p, grid, order)};
    }
    case CriterionKind::arg_fprime_beta:
      return {max_abs_arg(f, ExprKind::f_prime_minus_beta, p, grid, arg_bound)};
    case CriterionKind::bazilevic:
      return {max_abs_arg(f, ExprKind::bazilevic_expr, p, grid, p.beta * kPi / 2.0)};
    case CriterionKind::r_alpha:
      return {min_real(f, ExprKind::r_alpha_expr, p, grid, 0.0)};
    case CriterionKind::nonlinear_st_cv:
      return {min_real(f, ExprKind::nonlinear_expr, p, grid, 0.0)};
    case CriterionKind::st_conv_combo:
      return {min_real(f, ExprKind::combo_expr, p, grid, 0.0)};
    case CriterionKind::p_gamma:
      return {max_abs_arg(f, ExprKind::p_gamma_expr, p, grid, kPi / 2.0)};
  }
  return {};
}

double eta_critical(CriterionKind kind, const CriterionParams& p) {
  auto q = p;
  q.delta = 0.0;
  const auto holds = [&](double eta) {
    q.eta = eta;
    return precondition_holds(kind, q);
  };
  if (!holds(0.0)) return 0.0;
  if (holds(1.0)) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 80 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (holds(mid) ? lo : hi) = mid;
  }
  return lo;
}

Report cmd_check(const FunctionSpec& spec, const std::vector<CriterionKind>& kinds, const ParamFlags& flags,
                 const RunConfig& config) {
  config.validate();
  Report rep;
  rep.command = "check";
  rep.config = config.to_json();
  rep.config["alpha"] = num(flags.alpha);
  rep.config["beta"] = num(flags.beta);
  rep.config["gamma"] = num(flags.gamma);
  rep.config["spec"] = to_json(spec);

  const PowerSeries f = materialize(spec, config.order);
  const SupEstimate sup = measure(f, config);
  const double eta = std::abs(f[2]);
  const double delta = sup.delta();

  rep.columns = {"kind",      "p_gamma_mode", "eta",       "delta",           "alpha",
                 "beta",      "gamma",        "applicable", "lhs",            "rhs",
                 "strict",    "satisfied",    "convexity_order", "p_gamma_inner_factor", "verifier_passed",
                 "consistent", "counted",     "verifier",  "diagnostics"};

  bool all_ok = true;
  for (const auto kind : kinds) {
    for (const auto mode : modes_for(kind, config.p_gamma_mode)) {
      const auto p = make_params(flags, eta, delta, mode);
      const auto r = evaluate_measured(kind, p, config);
      const auto v = run_verification(kind, f, p, r, config);
      const bool consistent = r.applicable && (!r.satisfied || v.passed);
      const bool counted = !(kind == CriterionKind::p_gamma && mode == PGammaMode::literal &&
                             config.p_gamma_mode == PGammaSelection::both);
      if (counted && !consistent) all_ok = false;
      rep.rows.push_back({std::string(to_string(kind)),
                          kind == CriterionKind::p_gamma ? Cell{std::string(to_string(mode))} : Cell{},
                          eta, delta, flags.alpha, flags.beta, flags.gamma, r.applicable, opt_cell(r.lhs), r.rhs,
                          r.strict, r.satisfied, opt_cell(r.convexity_order), opt_cell(r.p_gamma_inner_factor),
                          v.ran ? Cell{v.passed} : Cell{}, consistent, counted, verification_text(v),
                          join(r.diagnostics)});
    }
  }

  rep.summary["eta"] = num(eta);
  rep.summary["delta"] = num(delta);
  rep.summary["two_delta"] = num(sup.two_delta);
  rep.summary["argmax"] = num(sup.argmax);
  rep.summary["truncation_warning"] = sup.truncation_warning;
  rep.summary["unbounded_growth"] = sup.unbounded_growth;
  rep.summary["sup_diagnostics"] = sup.diagnostics;
  rep.summary["all_consistent"] = all_ok;
  rep.exit_code = all_ok ? 0 : 1;
  return rep;
}

Report cmd_threshold(const std::vector<CriterionKind>& kinds, const ParamFlags& flags,
                     const std::vector<double>& etas, const RunConfig& config) {
  config.validate();
  Report rep;
  rep.command = "threshold";
  rep.config = config.to_json();
  rep.config["alpha"] = num(flags.alpha);
  rep.config["beta"] = num(flags.beta);
  rep.config["gamma"] = num(flags.gamma);
  rep.columns = {"kind",       "p_gamma_mode",   "eta",       "alpha",     "beta",       "gamma",
                 "delta_star", "two_delta_star", "applicable", "saturated", "diagnostics"};
  int found = 0;
  for (const auto kind : kinds) {
    for (const auto mode : modes_for(kind, config.p_gamma_mode)) {
      for (const double eta : etas) {
        const auto p = make_params(flags, eta, 0.0, mode);
        const auto t = delta_threshold(kind, p, config.threshold_tol);
        if (t.delta_star) ++found;
        rep.rows.push_back({std::string(to_string(kind)),
                            kind == CriterionKind::p_gamma ? Cell{std::string(to_string(mode))} : Cell{}, eta,
                            flags.alpha, flags.beta, flags.gamma, opt_cell(t.delta_star),
                            t.delta_star ? Cell{2.0 * *t.delta_star} : Cell{}, t.delta_star.has_value(),
                            t.saturated, join(t.diagnostics)});
      }
    }
  }
  rep.summary["rows"] = static_cast<std::int64_t>(rep.rows.size());
  rep.summary["rows_with_threshold"] = found;
  return rep;
}

Report cmd_ode(const FunctionSpec& spec, const RunConfig& config) {
  config.validate();
  Report rep;
  rep.command = "ode";
  rep.config = config.to_json();
  rep.config["spec"] = to_json(spec);

  const PowerSeries f = materialize(spec, config.order);
  const SupEstimate sup = measure(f, config);
  const double eta = std::abs(f[2]);
  const double delta = sup.delta();
  const OdeSolution sol = solve_for_function(f);

  bool ok = sol.wronskian_residual < 1e-9;
  std::optional<PowerSeries> rec;
  std::string rec_error;
  double rec_residual = 0.0;
  try {
    rec = reconstruct_f(sol);
    const int n = std::min(rec->order(), f.order());
    for (int k = 0; k <= n; ++k) rec_residual = std::max(rec_residual, std::abs((*rec)[k] - f[k]));
    if (rec_residual > 1e-8) ok = false;
  } catch (const NumericError& e) {
    rec_error = e.what();
    ok = false;
  }

  // Closed forms: A = 0 gives u = z, v = 1; the Nehari function has A = pi^2/4.
  std::optional<double> closed_residual;
  const auto* b = std::get_if<BuiltinSpec>(&spec);
  const auto* cs = std::get_if<CoefficientSpec>(&spec);
  const bool linear_fraction =
      (b && b->name == "moebius") ||
      (cs && std::all_of(cs->coeffs.begin() + 2, cs->coeffs.end(), [](Complex c) { return c == Complex{}; }));
  if (linear_fraction || (b && b->name == "nehari")) {
    double worst = 0.0;
    for (const Complex z : config.grid.points()) {
      Complex U = z, V = 1.0;
      if (!linear_fraction) {
        U = std::sin(kPi * z / 2.0) * (2.0 / kPi);
        V = std::cos(kPi * z / 2.0);
      }
      worst = std::max({worst, std::abs(eval(sol.u, z) - U), std::abs(eval(sol.v, z) - V)});
    }
    closed_residual = worst;
    if (worst > 1e-8) ok = false;
  }

  const GronwallReport g = gronwall_bounds(sol, delta, eta, config.grid);
  if (!g.all_hold) ok = false;

  const auto bound_json = [](const BoundCheck& c) {
    ordered_json j;
    j["lhs_max"] = num(c.lhs_max);
    j["rhs"] = num(c.rhs);
    j["argmax"] = num(c.argmax);
    j["holds"] = c.holds;
    j["equality_boundary"] = c.equality_boundary;
    return j;
  };
  rep.summary["c"] = num(sol.c);
  rep.summary["eta"] = num(eta);
  rep.summary["delta"] = num(delta);
  rep.summary["wronskian_residual"] = num(sol.wronskian_residual);
  rep.summary["reconstruction_residual"] = rec ? num(rec_residual) : ordered_json(nullptr);
  if (!rec_error.empty()) rep.summary["reconstruction_error"] = rec_error;
  rep.summary["closed_form_residual"] = closed_residual ? num(*closed_residual) : ordered_json(nullptr);
  rep.summary["gronwall"] = {{"bound_u", bound_json(g.bound_u)},
                             {"bound_u_over_z", bound_json(g.bound_u_over_z)},
                             {"bound_cu_plus_v", bound_json(g.bound_cu_plus_v)},
                             {"bound_cu_plus_v_minus_1", bound_json(g.bound_cu_plus_v_minus_1)},
                             {"all_hold", g.all_hold}};
  rep.summary["ok"] = ok;

  rep.columns = {"k", "A_re", "A_im", "u_re", "u_im", "v_re", "v_im", "f_re", "f_im", "reconstructed_re",
                 "reconstructed_im"};
  const auto part = [](const PowerSeries& s, int k, bool im) -> Cell {
    if (k > s.order()) return {};
    return im ? s[k].imag() : s[k].real();
  };
  const int rows = std::max({sol.u.order(), sol.v.order(), f.order()});
  for (int k = 0; k <= rows; ++k) {
    std::vector<Cell> row{static_cast<std::int64_t>(k),
                          part(sol.A, k, false), part(sol.A, k, true),
                          part(sol.u, k, false), part(sol.u, k, true),
                          part(sol.v, k, false), part(sol.v, k, true),
                          part(f, k, false),     part(f, k, true)};
    row.push_back(rec ? part(*rec, k, false) : Cell{});
    row.push_back(rec ? part(*rec, k, true) : Cell{});
    rep.rows.push_back(std::move(row));
  }
  rep.exit_code = ok ? 0 : 1;
  return rep;
}

Report cmd_sweep(const std::vector<CriterionKind>& kinds, const ParamFlags& flags, int seeds,
                 const RunConfig& config, std::vector<SweepCounts>* counts_out) {
  config.validate();
  if (seeds < 0 || seeds > 10000) throw UsageError("--seeds must lie in [0, 10000]");
  Report rep;
  rep.command = "sweep";
  rep.config = config.to_json();
  rep.config["alpha"] = num(flags.alpha);
  rep.config["beta"] = num(flags.beta);
  rep.config["gamma"] = num(flags.gamma);
  rep.config["seeds"] = seeds;
  rep.columns = {"kind",      "p_gamma_mode", "seed",      "eta_cap",         "budget_two_delta",
                 "eta",       "delta",        "applicable", "satisfied",      "verifier_passed",
                 "outcome",   "verifier",     "coefficients", "diagnostics"};

  ordered_json per_kind = ordered_json::array();
  ordered_json counterexamples = ordered_json::array();
  if (counts_out) counts_out->clear();
  bool any_counterexample = false;

  for (const auto kind : kinds) {
    for (const auto mode : modes_for(kind, config.p_gamma_mode)) {
      SweepCounts counts;
      const auto base = make_params(flags, 0.0, 0.0, mode);
      auto budget_params = base;
      budget_params.p_gamma_mode = PGammaMode::repaired;
      const double eta_crit = eta_critical(kind, budget_params);

      for (int seed = 0; seed < seeds; ++seed) {
        const auto useed = static_cast<std::uint64_t>(seed);
        UnitRandom rng(useed ^ 0x9e3779b97f4a7c15ULL);
        const double eta_cap = rng.next() * std::min(eta_crit, 0.999);
        budget_params.eta = eta_cap;
        const auto thr = delta_threshold(kind, budget_params, config.threshold_tol);
        const double budget = thr.delta_star ? 2.0 * config.budget * *thr.delta_star : 0.0;

        std::vector<Cell> row{std::string(to_string(kind)),
                              kind == CriterionKind::p_gamma ? Cell{std::string(to_string(mode))} : Cell{},
                              static_cast<std::int64_t>(seed), eta_cap, budget};
        PowerSeries f = PowerSeries::identity(config.order);
        try {
          f = random_budgeted_function(useed, config.n_coeffs, budget, eta_cap,
                                       std::max(config.order, config.n_coeffs + 1));
        } catch (const NumericError& e) {
          ++counts.generation_failed;
          row.insert(row.end(), {Cell{}, Cell{}, Cell{}, Cell{}, Cell{}, std::string("generation_failed"),
                                 std::string(), std::string(), std::string(e.what())});
          rep.rows.push_back(std::move(row));
          continue;
        }
        const SupEstimate sup = measure(f, config);
        auto p = base;
        p.eta = std::abs(f[2]);
        p.delta = sup.delta();
        const auto r = evaluate_criterion(kind, p);
        std::string outcome;
        Verification v;
        if (!r.applicable) {
          ++counts.criterion_fail;
          ++counts.flagged;
          outcome = "inapplicable";
        } else if (!r.satisfied) {
          ++counts.criterion_fail;
          outcome = "criterion_fail";
        } else {
          v = run_verification(kind, f, p, r, config);
          if (v.passed) {
            ++counts.pass_pass;
            outcome = "pass_pass";
          } else {
            ++counts.counterexamples;
            any_counterexample = true;
            outcome = "counterexample";
          }
        }
        const bool dump = outcome == "counterexample";
        if (dump) {
          ordered_json cx;
          cx["kind"] = to_string(kind);
          cx["seed"] = seed;
          cx["eta"] = num(p.eta);
          cx["delta"] = num(p.delta);
          cx["lhs"] = r.lhs ? num(*r.lhs) : ordered_json(nullptr);
          cx["rhs"] = num(r.rhs);
          cx["coefficients"] = coeffs_json(f);
          ordered_json reps = ordered_json::array();
          for (const auto& g : v.reports) reps.push_back(report_json(g));
          cx["verifier"] = reps;
          if (!v.error.empty()) cx["verifier_error"] = v.error;
          counterexamples.push_back(std::move(cx));
        }
        row.insert(row.end(), {p.eta, p.delta, r.applicable, r.satisfied, v.ran ? Cell{v.passed} : Cell{},
                               outcome, verification_text(v), dump ? Cell{coeffs_json(f).dump()} : Cell{},
                               join(r.diagnostics)});
        rep.rows.push_back(std::move(row));
      }

      ordered_json k;
      k["kind"] = to_string(kind);
      if (kind == CriterionKind::p_gamma) k["p_gamma_mode"] = to_string(mode);
      k["eta_critical"] = num(eta_crit);
      k["pass_pass"] = counts.pass_pass;
      k["counterexamples"] = counts.counterexamples;
      k["criterion_fail"] = counts.criterion_fail;
      k["inapplicable"] = counts.flagged;
      k["generation_failed"] = counts.generation_failed;
      per_kind.push_back(std::move(k));
      if (counts_out) counts_out->push_back(counts);
    }
  }
  rep.summary["kinds"] = std::move(per_kind);
  rep.summary["counterexamples"] = std::move(counterexamples);
  rep.exit_code = any_counterexample ? 1 : 0;
  return rep;
}

Report cmd_example(const RunConfig& config) {
  config.validate();
  Report rep;
  rep.command = "example";
  rep.config = config.to_json();
  rep.columns = {"name", "spec", "quantity", "computed", "known", "abs_error", "note"};

  const auto add = [&](const std::string& name, const std::string& spec, const std::string& quantity,
                       double computed, std::optional<double> known, const std::string& note) {
    rep.rows.push_back({name, spec, quantity, computed, opt_cell(known),
                        known ? Cell{std::abs(computed - *known)} : Cell{}, note});
  };

  const FunctionSpec nehari = BuiltinSpec{"nehari", {}};
  const FunctionSpec moebius = BuiltinSpec{"moebius", {0.3, 0.0}};
  const FunctionSpec koebe = BuiltinSpec{"koebe", {}};
  for (const auto& [name, spec] : {std::pair{"nehari", nehari}, {"moebius", moebius}, {"koebe", koebe}}) {
    const PowerSeries f = materialize(spec, config.order);
    const SupEstimate sup = measure(f, config);
    std::optional<double> eta_known, sup_known;
    std::string note;
    if (std::string(name) == "nehari") {
      eta_known = kPi / 2.0;
      sup_known = kPi * kPi / 2.0;
      note = "(exp(i pi z) - 1)/(i pi); |S| = pi^2/2 everywhere; univalent";
    } else if (std::string(name) == "moebius") {
      eta_known = 0.3;
      sup_known = 0.0;
      note = "z/(1+cz); S = 0";
    } else {
      eta_known = 2.0;
      note = "z/(1-z)^2; S = -6/(1-z^2)^2 is unbounded; the truncated series is measured";
    }
    add(name, describe(spec), "eta", std::abs(f[2]), eta_known, note);
    add(name, describe(spec), "two_delta", sup.two_delta, sup_known,
        sup.truncation_warning ? "truncation warning at radius_cap" : "");
  }

  CriterionParams p;
  const auto conv = delta_threshold(CriterionKind::chiang_convexity, p, config.threshold_tol);
  add("constant", "", "delta_star(chiang_convexity, eta=0)", conv.delta_star.value_or(NAN), std::nullopt,
      "root of delta e^{delta/2} = 0.4");
  add("constant", "", "2 delta_star(chiang_convexity, eta=0)", 2.0 * conv.delta_star.value_or(NAN), 0.6712,
      "stated sufficient constant 2 delta <= 0.6712");
  const auto uni = delta_threshold(CriterionKind::univalence_beta0, p, config.threshold_tol);
  add("constant", "", "delta_star(univalence_beta0, alpha=1, eta=0)", uni.delta_star.value_or(NAN),
      std::nullopt, "");
  add("constant", "", "eta root of the st_conv_combo precondition, beta=1", eta_root_combo(1.0), 0.321336,
      "stated approximately 0.321336");
  rep.summary["rows"] = static_cast<std::int64_t>(rep.rows.size());
  return rep;
}

}  // namespace gft::cli
