#include "gft/fixtures.hpp"

#include <algorithm>
#include <numbers>
#include <vector>

namespace gft::fixtures {

PowerSeries moebius(Complex c, int order) {
  std::vector<Complex> coeffs(order + 1);
  Complex p = 1.0;
  for (int k = 1; k <= order; ++k) {
    coeffs[k] = p;
    p *= -c;
  }
  return PowerSeries(std::move(coeffs));
}

PowerSeries nehari(int order) {
  const Complex a{0.0, std::numbers::pi};
  std::vector<Complex> coeffs(order + 1);
  // a^{k-1}/k!
  Complex term = 1.0;
  for (int k = 1; k <= order; ++k) {
    term /= static_cast<double>(k);
    coeffs[k] = term;
    term *= a;
  }
  return PowerSeries(std::move(coeffs));
}

PowerSeries koebe(int order) {
  std::vector<Complex> coeffs(order + 1);
  for (int k = 1; k <= order; ++k) coeffs[k] = static_cast<double>(k);
  return PowerSeries(std::move(coeffs));
}

PowerSeries quadratic(Complex a2, int order) {
  std::vector<Complex> coeffs(std::max(order, 2) + 1);
  coeffs[1] = 1.0;
  coeffs[2] = a2;
  return PowerSeries(std::move(coeffs));
}

}  // namespace gft::fixtures
