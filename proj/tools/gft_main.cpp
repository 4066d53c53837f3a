#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "gft/cli/commands.hpp"
#include "gft/errors.hpp"

using namespace gft::cli;

int main(int argc, char** argv) {
  CLI::App app{"Schwarzian-derivative sufficiency criteria: checks, thresholds, ODE inspection, sweeps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string spec_text, kinds_text = "all", eta_grid = "0:0.5:0.05", format = "csv", mode = "both", out_path;
  ParamFlags params;
  RunConfig config;
  int seeds = 100;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--radius", config.grid.radius, "verifier and Gronwall grid radius")->capture_default_str();
    sub->add_option("--order", config.order, "series truncation order")->capture_default_str();
    sub->add_option("--format", format, "csv or json")->capture_default_str();
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->add_option("--p-gamma-mode", mode, "literal, repaired or both")->capture_default_str();
  };
  const auto add_params = [&](CLI::App* sub) {
    sub->add_option("--kind", kinds_text, "comma-separated criterion kinds, or all")->capture_default_str();
    sub->add_option("--alpha", params.alpha)->capture_default_str();
    sub->add_option("--beta", params.beta)->capture_default_str();
    sub->add_option("--gamma", params.gamma)->capture_default_str();
  };

  auto* check = app.add_subcommand("check", "measure eta and delta of a function and test each criterion");
  check->add_option("--spec", spec_text, "function spec: JSON file or inline JSON")->required();
  add_params(check);
  add_common(check);

  auto* threshold = app.add_subcommand("threshold", "delta*(eta) curve per criterion");
  add_params(threshold);
  threshold->add_option("--eta-grid", eta_grid, "start:stop:step or a single value")->capture_default_str();
  add_common(threshold);

  auto* ode = app.add_subcommand("ode", "fundamental solutions, Gronwall bounds, reconstruction");
  ode->add_option("--spec", spec_text, "function spec: JSON file or inline JSON")->required();
  add_common(ode);

  auto* sweep = app.add_subcommand("sweep", "falsification sweep over seeded random functions");
  add_params(sweep);
  sweep->add_option("--seeds", seeds, "number of seeds (<= 10000)")->capture_default_str();
  sweep->add_option("--budget", config.budget, "two_delta budget as a fraction of 2 delta*")->capture_default_str();
  sweep->add_option("--n-coeffs", config.n_coeffs, "random coefficients per function")->capture_default_str();
  add_common(sweep);

  auto* example = app.add_subcommand("example", "built-in fixtures and their known constants");
  add_common(example);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    config.format = parse_format(format);
    config.p_gamma_mode = parse_p_gamma_selection(mode);
    Report report;
    if (*check) {
      report = cmd_check(load_function_spec(spec_text), parse_kinds(kinds_text), params, config);
    } else if (*threshold) {
      report = cmd_threshold(parse_kinds(kinds_text), params, parse_eta_grid(eta_grid), config);
    } else if (*ode) {
      report = cmd_ode(load_function_spec(spec_text), config);
    } else if (*sweep) {
      report = cmd_sweep(parse_kinds(kinds_text), params, seeds, config);
    } else {
      report = cmd_example(config);
    }
    const std::string text = render(report, config.format);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
      }
      out << text;
    }
    return report.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gft::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 1;
  }
}
