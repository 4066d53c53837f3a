#pragma once

#include <vector>

#include "gft/series.hpp"

namespace gft {

/// Polar sample of the closed disk |z| <= radius: the origin plus
/// radial_steps rings of angular_steps points each.
struct GridSpec {
  double radius = 0.99;
  int radial_steps = 16;
  int angular_steps = 128;

  /// Throws DomainError unless radius is in (0,1) and both step counts are >= 8.
  void validate() const;
  std::vector<Complex> points() const;
};

}  // namespace gft
