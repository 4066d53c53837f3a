#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "gft/cli/config.hpp"

namespace gft::cli {

using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

/// A command result: a header block (config echo and summary) and a table.
struct Report {
  std::string command;
  nlohmann::ordered_json config;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  int exit_code = 0;
};

/// %.12g; non-finite values print as inf, -inf, nan.
std::string fmt12(double x);

/// A double rounded to 12 significant digits (null when not finite).
nlohmann::ordered_json num(double x);
nlohmann::ordered_json num(Complex z);

std::string render(const Report& r, OutputFormat format);
std::string render_csv(const Report& r);
std::string render_json(const Report& r);

}  // namespace gft::cli
