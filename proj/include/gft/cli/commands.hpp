#pragma once

#include <cstdint>
#include <vector>

#include "gft/cli/config.hpp"
#include "gft/cli/function_spec.hpp"
#include "gft/cli/report.hpp"
#include "gft/criteria.hpp"
#include "gft/verifier.hpp"

namespace gft::cli {

/// Verifiers for the geometric conclusion of `kind`, run on config.grid
/// (univalence on the disk of the same radius).
std::vector<GridReport> verify_conclusion(CriterionKind kind, const PowerSeries& f, const CriterionParams& p,
                                          const CriterionResult& result, const RunConfig& config);

/// Largest eta for which the strict delta = 0 precondition holds (0 if none).
double eta_critical(CriterionKind kind, const CriterionParams& p);

Report cmd_check(const FunctionSpec& spec, const std::vector<CriterionKind>& kinds, const ParamFlags& params,
                 const RunConfig& config);

Report cmd_threshold(const std::vector<CriterionKind>& kinds, const ParamFlags& params,
                     const std::vector<double>& etas, const RunConfig& config);

Report cmd_ode(const FunctionSpec& spec, const RunConfig& config);

struct SweepCounts {
  int pass_pass = 0;
  int counterexamples = 0;
  int criterion_fail = 0;
  int flagged = 0;  // inapplicable (p_gamma literal and other domain failures)
  int generation_failed = 0;
};

Report cmd_sweep(const std::vector<CriterionKind>& kinds, const ParamFlags& params, int seeds,
                 const RunConfig& config, std::vector<SweepCounts>* counts = nullptr);

Report cmd_example(const RunConfig& config);

}  // namespace gft::cli
