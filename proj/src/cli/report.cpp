#include "gft/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace gft::cli {

using nlohmann::ordered_json;

std::string fmt12(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

ordered_json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::stod(fmt12(x));
}

ordered_json num(Complex z) { return ordered_json::array({num(z.real()), num(z.imag())}); }

namespace {

ordered_json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          return num(v);
        } else {
          return v;
        }
      },
      c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string cell_csv(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, double>) {
          return fmt12(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else {
          return csv_escape(v);
        }
      },
      c);
}

}  // namespace

std::string render_csv(const Report& r) {
  std::ostringstream out;
  out << "# tool=" << kToolName << " version=" << kToolVersion << " command=" << r.command << "\n";
  out << "# config=" << r.config.dump() << "\n";
  out << "# summary=" << r.summary.dump() << "\n";
  for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << r.columns[i];
  out << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_csv(row[i]);
    out << "\n";
  }
  return out.str();
}

std::string render_json(const Report& r) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = r.command;
  j["config"] = r.config;
  j["summary"] = r.summary;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json o = ordered_json::object();
    for (std::size_t i = 0; i < r.columns.size() && i < row.size(); ++i) o[r.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  j["exit_code"] = r.exit_code;
  return j.dump(2) + "\n";
}

std::string render(const Report& r, OutputFormat format) {
  return format == OutputFormat::csv ? render_csv(r) : render_json(r);
}

}  // namespace gft::cli
