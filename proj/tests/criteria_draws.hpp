#pragma once

#include "gft/criteria.hpp"
#include "gft/verifier.hpp"

namespace gft::testing {

/// Random parameters inside the stated range of each criterion; eta in [0, eta_max).
inline CriterionParams draw_params(CriterionKind kind, UnitRandom& rng, double eta_max = 0.6) {
  CriterionParams p;
  p.eta = eta_max * rng.next();
  p.delta = 0.0;
  const double u = rng.next();
  const double w = rng.next();
  switch (kind) {
    case CriterionKind::chiang_sst:
    case CriterionKind::univalence_beta0:
      p.alpha = 1.0 - u;  // (0, 1]
      break;
    case CriterionKind::arg_fprime_beta:
      p.alpha = 1.0 - u;
      p.beta = 0.5 * w;
      break;
    case CriterionKind::bazilevic:
      p.alpha = 0.05 + 2.95 * u;
      p.beta = 1.0 - w;
      break;
    case CriterionKind::r_alpha:
      p.alpha = 2.0 * u;
      break;
    case CriterionKind::nonlinear_st_cv:
      p.alpha = 4.0 * u - 2.0;
      p.beta = 4.0 * w - 2.0;
      break;
    case CriterionKind::st_conv_combo:
      p.beta = 2.0 * u;
      break;
    case CriterionKind::p_gamma:
      p.gamma = 0.9 * u;
      break;
    case CriterionKind::nehari_univalence:
    case CriterionKind::chiang_convexity:
      break;
  }
  return p;
}

}  // namespace gft::testing
