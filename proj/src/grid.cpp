#include "gft/grid.hpp"

#include <numbers>

#include "gft/errors.hpp"

namespace gft {

void GridSpec::validate() const {
  if (!(radius > 0.0 && radius < 1.0)) throw DomainError("grid radius must lie in (0,1)");
  if (radial_steps < 8 || angular_steps < 8) throw DomainError("grid steps must be at least 8");
}

std::vector<Complex> GridSpec::points() const {
  validate();
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(radial_steps) * angular_steps + 1);
  pts.emplace_back(0.0, 0.0);
  for (int i = 1; i <= radial_steps; ++i) {
    const double r = radius * i / radial_steps;
    for (int j = 0; j < angular_steps; ++j) {
      pts.push_back(std::polar(r, 2.0 * std::numbers::pi * j / angular_steps));
    }
  }
  return pts;
}

}  // namespace gft
