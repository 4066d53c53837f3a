#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gft/criteria.hpp"
#include "gft/grid.hpp"

namespace gft::cli {

inline constexpr std::string_view kToolName = "gft";
inline constexpr std::string_view kToolVersion = "1.0.0";

enum class OutputFormat { csv, json };

/// Which P(gamma) variants to evaluate; `both` reports the two side by side.
enum class PGammaSelection { literal, repaired, both };

struct RunConfig {
  int order = 64;
  double radius_cap = 0.999;
  int sup_grid_n = 1024;
  GridSpec grid{};           // verifier and Gronwall grid; --radius sets grid.radius
  int univalence_n = 1024;
  double threshold_tol = 1e-12;
  // Relative slack on the measured delta before a criterion is declared violated.
  double measure_tol = 1e-12;
  OutputFormat format = OutputFormat::csv;
  PGammaSelection p_gamma_mode = PGammaSelection::both;
  int n_coeffs = 8;          // sweep generator
  double budget = 0.9;       // sweep: two_delta budget as a fraction of 2 delta*

  /// Throws UsageError on out-of-range values.
  void validate() const;
  nlohmann::ordered_json to_json() const;
};

struct ParamFlags {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
};

std::string_view to_string(OutputFormat f);
std::string_view to_string(PGammaSelection s);
OutputFormat parse_format(std::string_view s);
PGammaSelection parse_p_gamma_selection(std::string_view s);

/// Comma-separated criterion names; "all" expands to every kind.
std::vector<CriterionKind> parse_kinds(std::string_view list);

/// "start:stop:step" (inclusive) or a single value.
std::vector<double> parse_eta_grid(std::string_view text);

/// The P(gamma) modes to run for `kind` under `s`; other kinds get {repaired}.
std::vector<PGammaMode> modes_for(CriterionKind kind, PGammaSelection s);

}  // namespace gft::cli
