#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gft {

/// One sufficient condition on (eta, delta) = (|a_2|, sup|S|/2).
enum class CriterionKind {
  nehari_univalence,
  chiang_sst,
  chiang_convexity,
  arg_fprime_beta,
  univalence_beta0,
  bazilevic,
  r_alpha,
  nonlinear_st_cv,
  st_conv_combo,
  p_gamma,
};

inline constexpr std::array<CriterionKind, 10> kAllCriterionKinds = {
    CriterionKind::nehari_univalence, CriterionKind::chiang_sst,      CriterionKind::chiang_convexity,
    CriterionKind::arg_fprime_beta,   CriterionKind::univalence_beta0, CriterionKind::bazilevic,
    CriterionKind::r_alpha,           CriterionKind::nonlinear_st_cv,  CriterionKind::st_conv_combo,
    CriterionKind::p_gamma,
};

std::string_view to_string(CriterionKind kind);
std::optional<CriterionKind> parse_criterion_kind(std::string_view name);

/// How the P(gamma) condition bounds |z/u|.
///   literal:  the displayed factor 1/(1 - 2 e^{delta/2}), negative for every delta >= 0.
///   repaired: 1/(1 - delta e^{delta/2} / 2), from |u/z - 1| < delta e^{delta/2} / 2.
enum class PGammaMode { literal, repaired };

std::string_view to_string(PGammaMode mode);

struct CriterionParams {
  double eta = 0.0;
  double delta = 0.0;
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
  PGammaMode p_gamma_mode = PGammaMode::repaired;
};

struct CriterionResult {
  CriterionKind kind = CriterionKind::nehari_univalence;
  bool applicable = false;
  std::optional<double> lhs;
  double rhs = 0.0;
  bool strict = false;
  bool satisfied = false;
  std::vector<std::string> diagnostics;
  std::string conclusion;
  // chiang_convexity only.
  std::optional<double> convexity_order;
  // p_gamma only: the inner factor multiplying the third arcsine argument.
  std::optional<double> p_gamma_inner_factor;
};

/// Evaluates the criterion at p. Never throws: out-of-range parameters,
/// failed preconditions, arcsine arguments outside [-1, 1] and nonpositive
/// denominators all produce applicable = false with a diagnostic.
CriterionResult evaluate_criterion(CriterionKind kind, const CriterionParams& p);

/// The strict eta-condition that guarantees some delta >= 0 is admissible.
/// Diagnostics are appended when it fails.
bool precondition_holds(CriterionKind kind, const CriterionParams& p, std::vector<std::string>* diagnostics = nullptr);

struct ThresholdResult {
  std::optional<double> delta_star;
  // The criterion still holds at the upper bracket end (delta = 8).
  bool saturated = false;
  std::vector<std::string> diagnostics;
};

inline constexpr double kThresholdBracket = 8.0;

/// Supremum of {delta >= 0 : criterion satisfied} by bisection on [0, 8];
/// p.delta is ignored. Empty when delta = 0 is already infeasible, and for
/// p_gamma in literal mode.
ThresholdResult delta_threshold(CriterionKind kind, const CriterionParams& p, double tol = 1e-12);

/// asin(eta) + asin(2 beta eta / (1 - eta)) - pi/2; undefined (nullopt) when
/// an arcsine argument leaves [-1, 1].
std::optional<double> combo_precondition_gap(double eta, double beta);

/// eta (1 + sqrt((1-eta)^2 - 4 beta^2 eta^2) + 2 beta sqrt(1 - eta^2)) - 1.
std::optional<double> combo_closed_form_gap(double eta, double beta);

/// The eta in (0,1) where combo_precondition_gap changes sign; 1 for beta = 0.
double eta_root_combo(double beta, double tol = 1e-15);

struct ConvexityOrder {
  double order = 0.0;
  // Degenerate eta = delta = 0, where the quotient equals 1.
  bool boundary = false;
  std::vector<std::string> diagnostics;
};

/// (2 - 6 eta - 5(1+eta) E) / (2 - 2 eta - (1+eta) E), E = delta e^{delta/2},
/// defined when 6 eta + 5(1+eta) E < 2.
std::optional<ConvexityOrder> convexity_order(double eta, double delta);

}  // namespace gft
