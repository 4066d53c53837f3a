#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>

#include "gft/criteria.hpp"
#include "gft/grid.hpp"
#include "gft/series.hpp"

namespace gft {

/// Target expressions of the geometric conclusions.
enum class ExprKind {
  f_prime_minus_beta,     // f' - beta
  bazilevic_expr,         // (z/f)^(1-alpha) f'
  r_alpha_expr,           // f' + alpha z f''
  nonlinear_expr,         // (zf'/f)^alpha (1 + zf''/f')^beta
  combo_expr,             // zf'/f + beta z^2 f''/f
  p_gamma_expr,           // (1-gamma) f/z + gamma f'
  zfprime_over_f,         // zf'/f
  one_plus_zfpp_over_fp,  // 1 + zf''/f'
  f_over_z,               // f/z
};

std::string_view to_string(ExprKind kind);

/// Evaluates ExprKind expressions of one function. Removable singularities at
/// the origin (z/f, f/z, zf'/f, z^2 f''/f) are taken from their series when
/// |z| < 0.05. Powers use the principal branch, w^a = exp(a Log w).
class ExprEvaluator {
public:
  explicit ExprEvaluator(const PowerSeries& f);

  /// Throws NearZeroDenominator when |f(z)| or |f'(z)| < 1e-12 away from 0.
  Complex operator()(ExprKind kind, const CriterionParams& params, Complex z) const;

private:
  PowerSeries f_;
  PowerSeries f1_;
  PowerSeries f2_;
  PowerSeries f_over_z_;
  PowerSeries z_over_f_;
  PowerSeries zf1_over_f_;
  PowerSeries z2f2_over_f_;
};

Complex eval_expr(const PowerSeries& f, ExprKind kind, const CriterionParams& params, Complex z);

struct GridReport {
  std::string quantity;
  double extremum = 0.0;
  Complex arg_extremum{};
  bool passed = false;
  double threshold = 0.0;
  // univalence_grid_check only: a pair z1 != z2 with f(z1) = f(z2).
  std::optional<std::pair<Complex, Complex>> witness;
  double witness_gap = 0.0;
};

inline constexpr double kVerifierSlack = 1e-9;

/// max over the grid of |Arg expr|; passed <=> max <= threshold + 1e-9.
GridReport max_abs_arg(const PowerSeries& f, ExprKind kind, const CriterionParams& params, const GridSpec& grid,
                       double threshold);

/// min over the grid of Re expr; passed <=> min > threshold - 1e-9.
GridReport min_real(const PowerSeries& f, ExprKind kind, const CriterionParams& params, const GridSpec& grid,
                    double threshold = 0.0);

/// Pairwise injectivity evidence on about n polar samples of |z| <= radius.
///
/// The sample pairs with the smallest difference quotients |f(zi)-f(zj)|/|zi-zj|
/// are refined by Newton's method on f(w) = f(zi); a converged w inside the
/// disk and distinct from zi is a collision witness and fails the check.
GridReport univalence_grid_check(const PowerSeries& f, double radius, int n);

/// Deterministic instance generator. Draws h = z + sum_{k=2}^{n_coeffs+1} c_k z^k
/// with |c_k| <= 0.5/k^2 and returns h(tz)/t with t chosen so that
/// sup_schwarzian <= two_delta_target (and within 1% of it unless the
/// |a_2| <= eta_max cap binds first). Throws GenerationFailed after 64 attempts.
PowerSeries random_budgeted_function(std::uint64_t seed, int n_coeffs, double two_delta_target, double eta_max,
                                     int order = kDefaultOrder);

/// Uniform double in [0,1) from a seeded stream; identical on every platform.
class UnitRandom {
public:
  explicit UnitRandom(std::uint64_t seed);
  double next();

private:
  std::mt19937_64 engine_;
};

}  // namespace gft
