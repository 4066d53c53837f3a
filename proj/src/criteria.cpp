#include "gft/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace gft {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAsinSlack = 1e-14;
constexpr double kDenominatorFloor = 1e-14;
constexpr int kBisectionIterations = 200;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Running sum of weighted arcsine terms; records why it became undefined.
class TermSum {
public:
  explicit TermSum(std::vector<std::string>& diags) : diags_(diags) {}

  void add(double value) { sum_ += value; }

  void add_asin(double weight, double arg, const std::string& label) {
    if (weight == 0.0) return;
    if (!std::isfinite(arg) || std::abs(arg) > 1.0 + kAsinSlack) {
      defined_ = false;
      diags_.push_back("asin domain: argument of " + label + " is " + fmt(arg) + ", outside [-1,1]");
      return;
    }
    sum_ += weight * std::asin(std::clamp(arg, -1.0, 1.0));
  }

  // num/den with den required positive.
  std::optional<double> ratio(double num, double den, const std::string& label) {
    if (!(den >= kDenominatorFloor)) {
      defined_ = false;
      diags_.push_back("denominator: " + label + " = " + fmt(den) + " is not positive");
      return std::nullopt;
    }
    return num / den;
  }

  void add_asin_ratio(double weight, double num, double den, const std::string& label) {
    if (weight == 0.0) return;
    if (auto r = ratio(num, den, label)) add_asin(weight, *r, "asin(" + label + " quotient)");
  }

  bool defined() const { return defined_; }
  double value() const { return sum_; }
  std::optional<double> result() const { return defined_ ? std::optional<double>(sum_) : std::nullopt; }

private:
  std::vector<std::string>& diags_;
  double sum_ = 0.0;
  bool defined_ = true;
};

// Quantities shared by most criteria.
struct Growth {
  double e;           // delta e^{delta/2}
  double half;        // delta e^{delta/2} / 2                    (bound on |u/z - 1|)
  double w_minus_1;   // eta + (1+eta) delta e^{delta/2} / 2      (bound on |cu+v-1|)
  double w_prime;     // eta + (1+eta) delta e^{delta/2}          (bound on |cu'+v'|)
  double den;         // 2 - 2 eta - (1+eta) delta e^{delta/2}    (2 x lower bound on |cu+v|)

  Growth(double eta, double delta)
      : e(delta * std::exp(delta / 2.0)),
        half(0.5 * e),
        w_minus_1(eta + 0.5 * (1.0 + eta) * e),
        w_prime(eta + (1.0 + eta) * e),
        den(2.0 - 2.0 * eta - (1.0 + eta) * e) {}
};

bool check_ranges(CriterionKind kind, const CriterionParams& p, std::vector<std::string>& diags) {
  const auto fail = [&](const std::string& msg) {
    diags.push_back("parameter range: " + msg);
    return false;
  };
  if (!(p.eta >= 0.0) || !std::isfinite(p.eta)) return fail("eta must be >= 0");
  if (!(p.delta >= 0.0) || !std::isfinite(p.delta)) return fail("delta must be >= 0");
  switch (kind) {
    case CriterionKind::chiang_sst:
    case CriterionKind::univalence_beta0:
      if (!(p.alpha > 0.0 && p.alpha <= 1.0)) return fail("need 0 < alpha <= 1");
      break;
    case CriterionKind::arg_fprime_beta:
      if (!(p.alpha > 0.0 && p.alpha <= 1.0)) return fail("need 0 < alpha <= 1");
      if (!(p.beta >= 0.0 && p.beta < 1.0)) return fail("need 0 <= beta < 1");
      break;
    case CriterionKind::bazilevic:
      if (!(p.alpha > 0.0)) return fail("need alpha > 0");
      if (!(p.beta > 0.0 && p.beta <= 1.0)) return fail("need 0 < beta <= 1");
      break;
    case CriterionKind::r_alpha:
      if (!(p.alpha >= 0.0)) return fail("need alpha >= 0");
      break;
    case CriterionKind::nonlinear_st_cv:
      if (!std::isfinite(p.alpha) || !std::isfinite(p.beta)) return fail("alpha and beta must be finite");
      break;
    case CriterionKind::st_conv_combo:
      if (!(p.beta >= 0.0)) return fail("need beta >= 0");
      break;
    case CriterionKind::p_gamma:
      if (!(p.gamma >= 0.0 && p.gamma < 1.0)) return fail("need 0 <= gamma < 1");
      break;
    case CriterionKind::nehari_univalence:
    case CriterionKind::chiang_convexity:
      break;
  }
  return true;
}

// Strict comparison lhs < rhs for a precondition built from TermSum.
bool strictly_below(const TermSum& t, double rhs, const std::string& what, std::vector<std::string>& diags) {
  if (!t.defined()) {
    diags.push_back("precondition fails: " + what + " is undefined");
    return false;
  }
  if (!(t.value() < rhs)) {
    diags.push_back("precondition fails: " + what + " = " + fmt(t.value()) + " >= " + fmt(rhs));
    return false;
  }
  return true;
}

std::string conclusion_for(CriterionKind kind, const CriterionParams& p) {
  switch (kind) {
    case CriterionKind::nehari_univalence: return "f in S (univalent)";
    case CriterionKind::chiang_sst:
      return "f in SST(" + fmt(p.alpha) + "): |arg(zf'/f)| <= alpha*pi/2; further |arg(f/z)| <= alpha*pi/2";
    case CriterionKind::chiang_convexity: return "f in CV(order)";
    case CriterionKind::arg_fprime_beta: return "|arg(f' - beta)| <= alpha*pi/2";
    case CriterionKind::univalence_beta0: return "|arg f'| <= alpha*pi/2; f in S";
    case CriterionKind::bazilevic: return "f strongly alpha-Bazilevic of order beta: |arg((z/f)^(1-alpha) f')| < beta*pi/2";
    case CriterionKind::r_alpha: return "f in R(alpha): Re(f' + alpha z f'') > 0";
    case CriterionKind::nonlinear_st_cv: return "Re((zf'/f)^alpha (1 + zf''/f')^beta) > 0";
    case CriterionKind::st_conv_combo: return "Re(zf'/f + beta z^2 f''/f) > 0";
    case CriterionKind::p_gamma: return "f in P(gamma): |arg((1-gamma) f/z + gamma f')| < pi/2";
  }
  return {};
}

}  // namespace

std::string_view to_string(CriterionKind kind) {
  switch (kind) {
    case CriterionKind::nehari_univalence: return "nehari_univalence";
    case CriterionKind::chiang_sst: return "chiang_sst";
    case CriterionKind::chiang_convexity: return "chiang_convexity";
    case CriterionKind::arg_fprime_beta: return "arg_fprime_beta";
    case CriterionKind::univalence_beta0: return "univalence_beta0";
    case CriterionKind::bazilevic: return "bazilevic";
    case CriterionKind::r_alpha: return "r_alpha";
    case CriterionKind::nonlinear_st_cv: return "nonlinear_st_cv";
    case CriterionKind::st_conv_combo: return "st_conv_combo";
    case CriterionKind::p_gamma: return "p_gamma";
  }
  return "unknown";
}

std::optional<CriterionKind> parse_criterion_kind(std::string_view name) {
  for (const auto kind : kAllCriterionKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(PGammaMode mode) {
  return mode == PGammaMode::literal ? "literal" : "repaired";
}

bool precondition_holds(CriterionKind kind, const CriterionParams& p, std::vector<std::string>* diagnostics) {
  std::vector<std::string> scratch;
  auto& diags = diagnostics ? *diagnostics : scratch;
  if (!check_ranges(kind, p, diags)) return false;

  const double eta = p.eta;
  TermSum t(diags);
  switch (kind) {
    case CriterionKind::nehari_univalence:
      return true;
    case CriterionKind::chiang_sst:
      if (eta < std::sin(p.alpha * kPi / 2.0)) return true;
      diags.push_back("precondition fails: eta >= sin(alpha*pi/2) = " + fmt(std::sin(p.alpha * kPi / 2.0)));
      return false;
    case CriterionKind::chiang_convexity:
      if (eta < 1.0 / 3.0) return true;
      diags.push_back("precondition fails: eta >= 1/3");
      return false;
    case CriterionKind::arg_fprime_beta:
      t.add_asin(1.0, p.beta * (1.0 + eta) * (1.0 + eta), "beta(1+eta)^2");
      t.add_asin(2.0, eta, "eta");
      return strictly_below(t, p.alpha * kPi / 2.0, "asin(beta(1+eta)^2) + 2 asin(eta)", diags);
    case CriterionKind::univalence_beta0:
      if (eta < std::sin(p.alpha * kPi / 4.0)) return true;
      diags.push_back("precondition fails: eta >= sin(alpha*pi/4) = " + fmt(std::sin(p.alpha * kPi / 4.0)));
      return false;
    case CriterionKind::bazilevic: {
      const double bound = std::sin(p.beta * kPi / (2.0 * (1.0 + p.alpha)));
      if (eta < bound) return true;
      diags.push_back("precondition fails: eta >= sin(beta*pi/(2(1+alpha))) = " + fmt(bound));
      return false;
    }
    case CriterionKind::r_alpha:
      t.add_asin(2.0, eta, "eta");
      t.add_asin_ratio(1.0, 2.0 * eta * p.alpha, 1.0 - eta, "2 eta alpha/(1-eta)");
      return strictly_below(t, kPi / 2.0, "2 asin(eta) + asin(2 eta alpha/(1-eta))", diags);
    case CriterionKind::nonlinear_st_cv:
      if (eta > 1.0 / 3.0) {
        diags.push_back("precondition fails: eta > 1/3");
        return false;
      }
      t.add_asin(std::abs(p.alpha), eta, "eta");
      t.add_asin_ratio(std::abs(p.beta), 2.0 * eta, 1.0 - eta, "2 eta/(1-eta)");
      return strictly_below(t, kPi / 2.0, "|alpha| asin(eta) + |beta| asin(2 eta/(1-eta))", diags);
    case CriterionKind::st_conv_combo:
      t.add_asin(1.0, eta, "eta");
      t.add_asin_ratio(1.0, 2.0 * p.beta * eta, 1.0 - eta, "2 beta eta/(1-eta)");
      return strictly_below(t, kPi / 2.0, "asin(eta) + asin(2 beta eta/(1-eta))", diags);
    case CriterionKind::p_gamma: {
      const double b = p.gamma / (1.0 - p.gamma);
      if (p.p_gamma_mode == PGammaMode::literal) {
        // Evaluated as displayed: the factor 1/(eta - 1) is negative on eta < 1.
        if (eta != 1.0) {
          const double arg = b / (eta - 1.0);
          if (arg < 0.0) {
            diags.push_back("literal: precondition asin argument gamma/((1-gamma)(eta-1)) = " + fmt(arg) +
                            " is negative");
          }
          t.add_asin(1.0, arg, "gamma/((1-gamma)(eta-1))");
        } else {
          t.add_asin(1.0, std::numeric_limits<double>::infinity(), "gamma/((1-gamma)(eta-1))");
        }
        t.add_asin(1.0, eta, "eta");
        return strictly_below(t, kPi / 2.0, "asin(gamma/((1-gamma)(eta-1))) + asin(eta)", diags);
      }
      t.add_asin_ratio(1.0, b, 1.0 - eta, "gamma/((1-gamma)(1-eta))");
      t.add_asin(1.0, eta, "eta");
      return strictly_below(t, kPi / 2.0, "asin(gamma/((1-gamma)(1-eta))) + asin(eta)", diags);
    }
  }
  return false;
}

CriterionResult evaluate_criterion(CriterionKind kind, const CriterionParams& p) {
  CriterionResult r;
  r.kind = kind;
  r.conclusion = conclusion_for(kind, p);
  auto& diags = r.diagnostics;

  if (!check_ranges(kind, p, diags)) return r;
  const bool pre = precondition_holds(kind, p, &diags);

  const Growth g(p.eta, p.delta);
  TermSum t(diags);
  switch (kind) {
    case CriterionKind::nehari_univalence:
      t.add(2.0 * p.delta);
      r.rhs = kPi * kPi / 2.0;
      break;
    case CriterionKind::chiang_sst:
      t.add_asin(1.0, g.half, "delta e^{delta/2}/2");
      t.add_asin(1.0, g.w_minus_1, "eta + (1+eta) delta e^{delta/2}/2");
      r.rhs = p.alpha * kPi / 2.0;
      break;
    case CriterionKind::chiang_convexity:
      t.add(6.0 * p.eta + 5.0 * (1.0 + p.eta) * g.e);
      r.rhs = 2.0;
      r.strict = true;
      if (auto order = convexity_order(p.eta, p.delta)) {
        r.convexity_order = order->order;
        for (auto& d : order->diagnostics) diags.push_back(d);
      }
      break;
    case CriterionKind::arg_fprime_beta:
      t.add_asin(1.0, p.beta * (1.0 + p.eta) * (1.0 + p.eta) * std::exp(p.delta), "beta(1+eta)^2 e^delta");
      t.add_asin(2.0, g.w_minus_1, "eta + (1+eta) delta e^{delta/2}/2");
      r.rhs = p.alpha * kPi / 2.0;
      break;
    case CriterionKind::univalence_beta0:
      t.add(g.w_minus_1);
      r.rhs = std::sin(p.alpha * kPi / 4.0);
      break;
    case CriterionKind::bazilevic:
      t.add_asin(std::abs(1.0 - p.alpha), g.half, "delta e^{delta/2}/2");
      t.add_asin(1.0 + p.alpha, g.w_minus_1, "eta + (1+eta) delta e^{delta/2}/2");
      r.rhs = p.beta * kPi / 2.0;
      break;
    case CriterionKind::r_alpha:
      t.add_asin(2.0, g.w_minus_1, "eta + (1+eta) delta e^{delta/2}/2");
      t.add_asin_ratio(1.0, 4.0 * p.alpha * g.w_prime, g.den, "2 - 2 eta - (1+eta) delta e^{delta/2}");
      r.rhs = kPi / 2.0;
      break;
    case CriterionKind::nonlinear_st_cv:
      t.add_asin(std::abs(p.alpha), g.half, "delta e^{delta/2}/2");
      t.add_asin(std::abs(p.alpha), g.w_minus_1, "eta + (1+eta) delta e^{delta/2}/2");
      t.add_asin_ratio(std::abs(p.beta), 4.0 * g.w_prime, g.den, "2 - 2 eta - (1+eta) delta e^{delta/2}");
      r.rhs = kPi / 2.0;
      break;
    case CriterionKind::st_conv_combo:
      t.add_asin(1.0, g.half, "delta e^{delta/2}/2");
      t.add_asin(1.0, g.w_minus_1, "eta + (1+eta) delta e^{delta/2}/2");
      t.add_asin_ratio(1.0, 4.0 * p.beta * g.w_prime, g.den, "2 - 2 eta - (1+eta) delta e^{delta/2}");
      r.rhs = kPi / 2.0;
      break;
    case CriterionKind::p_gamma: {
      const double b = p.gamma / (1.0 - p.gamma);
      t.add_asin(1.0, g.half, "delta e^{delta/2}/2");
      t.add_asin(1.0, g.w_minus_1, "eta + (1+eta) delta e^{delta/2}/2");
      r.rhs = kPi / 2.0;
      if (p.p_gamma_mode == PGammaMode::literal) {
        const double inner = 1.0 / (1.0 - 2.0 * std::exp(p.delta / 2.0));
        r.p_gamma_inner_factor = inner;
        diags.push_back("literal: inner factor 1/(1-2e^{delta/2}) = " + fmt(inner) +
                        " is negative; the |z/u| bound it encodes is inapplicable");
        if (auto q = t.ratio(2.0 * b, g.den, "2 - 2 eta - (1+eta) delta e^{delta/2}")) {
          t.add_asin(1.0, *q * inner, "literal third term");
        }
      } else {
        const double lower = 1.0 - g.half;  // lower bound on |u/z|
        if (auto inv = t.ratio(1.0, lower, "1 - delta e^{delta/2}/2")) {
          r.p_gamma_inner_factor = *inv;
          if (auto q = t.ratio(2.0 * b, g.den, "2 - 2 eta - (1+eta) delta e^{delta/2}")) {
            t.add_asin(1.0, *q * *inv, "repaired third term");
          }
        }
      }
      break;
    }
  }

  r.lhs = t.result();
  r.applicable = pre && t.defined();
  if (kind == CriterionKind::p_gamma && p.p_gamma_mode == PGammaMode::literal) r.applicable = false;
  if (r.applicable) {
    r.satisfied = r.strict ? (*r.lhs < r.rhs) : (*r.lhs <= r.rhs);
  }
  return r;
}

ThresholdResult delta_threshold(CriterionKind kind, const CriterionParams& p, double tol) {
  ThresholdResult out;
  if (kind == CriterionKind::p_gamma && p.p_gamma_mode == PGammaMode::literal) {
    out.diagnostics.push_back("threshold solving is only offered in repaired mode for p_gamma");
    return out;
  }
  CriterionParams q = p;
  const auto feasible = [&](double delta) {
    q.delta = delta;
    return evaluate_criterion(kind, q).satisfied;
  };

  q.delta = 0.0;
  const CriterionResult at_zero = evaluate_criterion(kind, q);
  if (!at_zero.satisfied) {
    out.diagnostics = at_zero.diagnostics;
    if (out.diagnostics.empty()) out.diagnostics.push_back("infeasible at delta = 0");
    return out;
  }
  if (feasible(kThresholdBracket)) {
    out.delta_star = kThresholdBracket;
    out.saturated = true;
    out.diagnostics.push_back("saturation: criterion still holds at delta = 8");
    return out;
  }
  double lo = 0.0;
  double hi = kThresholdBracket;
  for (int i = 0; i < kBisectionIterations && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (feasible(mid) ? lo : hi) = mid;
  }
  out.delta_star = lo;
  return out;
}

std::optional<double> combo_precondition_gap(double eta, double beta) {
  if (!(eta >= 0.0 && eta < 1.0)) return std::nullopt;
  const double x = 2.0 * beta * eta / (1.0 - eta);
  if (std::abs(x) > 1.0 || eta > 1.0) return std::nullopt;
  return std::asin(eta) + std::asin(x) - kPi / 2.0;
}

std::optional<double> combo_closed_form_gap(double eta, double beta) {
  const double radicand = (1.0 - eta) * (1.0 - eta) - 4.0 * beta * beta * eta * eta;
  if (radicand < 0.0 || eta > 1.0 || eta < 0.0) return std::nullopt;
  return eta * (1.0 + std::sqrt(radicand) + 2.0 * beta * std::sqrt(1.0 - eta * eta)) - 1.0;
}

double eta_root_combo(double beta, double tol) {
  if (beta <= 0.0) return 1.0;
  // The second arcsine argument reaches 1 at eta = 1/(1 + 2 beta), where the gap is asin(eta) > 0.
  double lo = 0.0;
  double hi = 1.0 / (1.0 + 2.0 * beta);
  for (int i = 0; i < kBisectionIterations && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const auto gap = combo_precondition_gap(mid, beta);
    if (gap && *gap < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<ConvexityOrder> convexity_order(double eta, double delta) {
  const double e = delta * std::exp(delta / 2.0);
  if (!(6.0 * eta + 5.0 * (1.0 + eta) * e < 2.0)) return std::nullopt;
  ConvexityOrder out;
  out.order = (2.0 - 6.0 * eta - 5.0 * (1.0 + eta) * e) / (2.0 - 2.0 * eta - (1.0 + eta) * e);
  if (out.order >= 1.0) {
    out.boundary = true;
    out.diagnostics.push_back("boundary: order must be < 1 (quotient = " + fmt(out.order) + ")");
  }
  return out;
}

}  // namespace gft
