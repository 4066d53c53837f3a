#include "gft/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "gft/cli/function_spec.hpp"
#include "gft/cli/report.hpp"

namespace gft::cli {

void RunConfig::validate() const {
  if (order < 4 || order > 8192) throw UsageError("--order must lie in [4, 8192]");
  if (!(radius_cap > 0.0 && radius_cap < 1.0)) throw UsageError("radius_cap must lie in (0, 1)");
  if (!(grid.radius > 0.0 && grid.radius < 1.0)) throw UsageError("--radius must lie in (0, 1)");
  if (grid.radial_steps < 8 || grid.angular_steps < 8) throw UsageError("grid step counts must be >= 8");
  if (sup_grid_n < 8) throw UsageError("sup grid must have >= 8 points");
  if (univalence_n < 16 || univalence_n > 4096) throw UsageError("univalence sample count must lie in [16, 4096]");
  if (!(threshold_tol > 0.0) || !(measure_tol > 0.0)) throw UsageError("tolerances must be > 0");
  if (n_coeffs < 1 || n_coeffs > 60) throw UsageError("--n-coeffs must lie in [1, 60]");
  if (!(budget >= 0.0) || !std::isfinite(budget)) throw UsageError("--budget must be >= 0");
}

nlohmann::ordered_json RunConfig::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = order;
  j["radius_cap"] = num(radius_cap);
  j["sup_grid_n"] = sup_grid_n;
  j["radius"] = num(grid.radius);
  j["radial_steps"] = grid.radial_steps;
  j["angular_steps"] = grid.angular_steps;
  j["univalence_n"] = univalence_n;
  j["threshold_tol"] = num(threshold_tol);
  j["measure_tol"] = num(measure_tol);
  j["p_gamma_mode"] = std::string(to_string(p_gamma_mode));
  j["n_coeffs"] = n_coeffs;
  j["budget"] = num(budget);
  return j;
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

std::string_view to_string(PGammaSelection s) {
  switch (s) {
    case PGammaSelection::literal: return "literal";
    case PGammaSelection::repaired: return "repaired";
    case PGammaSelection::both: return "both";
  }
  return "both";
}

OutputFormat parse_format(std::string_view s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  throw UsageError("--format must be csv or json");
}

PGammaSelection parse_p_gamma_selection(std::string_view s) {
  if (s == "literal") return PGammaSelection::literal;
  if (s == "repaired") return PGammaSelection::repaired;
  if (s == "both") return PGammaSelection::both;
  throw UsageError("--p-gamma-mode must be literal, repaired or both");
}

std::vector<CriterionKind> parse_kinds(std::string_view list) {
  std::vector<CriterionKind> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const auto comma = list.find(',', pos);
    const auto item = list.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (item == "all") {
      out.insert(out.end(), kAllCriterionKinds.begin(), kAllCriterionKinds.end());
    } else if (const auto k = parse_criterion_kind(item)) {
      out.push_back(*k);
    } else {
      throw UsageError("unknown criterion kind '" + std::string(item) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw UsageError("--kind is empty");
  return out;
}

namespace {

double parse_real(std::string_view s, const char* what) {
  double x = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, x);
  if (ec != std::errc() || ptr != end || !std::isfinite(x)) {
    throw UsageError(std::string(what) + ": '" + std::string(s) + "' is not a real number");
  }
  return x;
}

}  // namespace

std::vector<double> parse_eta_grid(std::string_view text) {
  const auto c1 = text.find(':');
  if (c1 == std::string_view::npos) return {parse_real(text, "--eta-grid")};
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw UsageError("--eta-grid expects start:stop:step");
  const double start = parse_real(text.substr(0, c1), "--eta-grid start");
  const double stop = parse_real(text.substr(c1 + 1, c2 - c1 - 1), "--eta-grid stop");
  const double step = parse_real(text.substr(c2 + 1), "--eta-grid step");
  if (!(step > 0.0)) throw UsageError("--eta-grid step must be > 0");
  if (stop < start) throw UsageError("--eta-grid stop must be >= start");
  const double span = (stop - start) / step;
  if (span > 1e6) throw UsageError("--eta-grid has too many points");
  const auto n = static_cast<long>(std::floor(span + 1e-9)) + 1;
  std::vector<double> etas;
  etas.reserve(n);
  for (long i = 0; i < n; ++i) etas.push_back(start + static_cast<double>(i) * step);
  return etas;
}

std::vector<PGammaMode> modes_for(CriterionKind kind, PGammaSelection s) {
  if (kind != CriterionKind::p_gamma) return {PGammaMode::repaired};
  switch (s) {
    case PGammaSelection::literal: return {PGammaMode::literal};
    case PGammaSelection::repaired: return {PGammaMode::repaired};
    case PGammaSelection::both: return {PGammaMode::literal, PGammaMode::repaired};
  }
  return {PGammaMode::repaired};
}

}  // namespace gft::cli
