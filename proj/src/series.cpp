#include "gft/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gft/errors.hpp"

namespace gft {

namespace {

bool is_finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

int common_order(const PowerSeries& a, const PowerSeries& b) {
  return std::min(a.order(), b.order());
}

}  // namespace

PowerSeries::PowerSeries() : coeffs_(1, Complex{}) {}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw DomainError("power series needs at least one coefficient");
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!is_finite(coeffs_[k])) {
      throw DomainError("non-finite coefficient at index " + std::to_string(k));
    }
  }
}

PowerSeries PowerSeries::zero(int order) {
  return PowerSeries(std::vector<Complex>(static_cast<std::size_t>(std::max(order, 0)) + 1));
}

PowerSeries PowerSeries::constant(Complex value, int order) {
  std::vector<Complex> c(static_cast<std::size_t>(std::max(order, 0)) + 1);
  c[0] = value;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::identity(int order) {
  std::vector<Complex> c(static_cast<std::size_t>(std::max(order, 1)) + 1);
  c[1] = 1.0;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::truncated(int order) const {
  std::vector<Complex> c(static_cast<std::size_t>(std::max(order, 0)) + 1);
  std::copy_n(coeffs_.begin(), std::min(c.size(), coeffs_.size()), c.begin());
  return PowerSeries(std::move(c));
}

bool PowerSeries::is_normalized(double tol) const {
  return order() >= 1 && std::abs(coeffs_[0]) <= tol && std::abs(coeffs_[1] - 1.0) <= tol;
}

double PowerSeries::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int n = common_order(a, b);
  std::vector<Complex> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const int n = common_order(a, b);
  std::vector<Complex> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] - b[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a) { return Complex{-1.0} * a; }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = common_order(a, b);
  std::vector<Complex> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    Complex sum{};
    for (int j = 0; j <= k; ++j) sum += a[j] * b[k - j];
    c[k] = sum;
  }
  return PowerSeries(std::move(c));
}

PowerSeries operator*(Complex s, const PowerSeries& a) {
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= s;
  return PowerSeries(std::move(c));
}

PowerSeries operator+(const PowerSeries& a, Complex s) {
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  c[0] += s;
  return PowerSeries(std::move(c));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  if (std::abs(b[0]) < kDivisionFloor) {
    throw NearZeroConstantTerm("series division: |b_0| = " + std::to_string(std::abs(b[0])) +
                               " is below the division floor");
  }
  const int n = common_order(a, b);
  std::vector<Complex> q(n + 1);
  const Complex inv_b0 = 1.0 / b[0];
  for (int k = 0; k <= n; ++k) {
    Complex sum = a[k];
    for (int j = 0; j < k; ++j) sum -= q[j] * b[k - j];
    q[k] = sum * inv_b0;
  }
  return PowerSeries(std::move(q));
}

PowerSeries derive(const PowerSeries& a) {
  if (a.order() == 0) return PowerSeries::zero(0);
  std::vector<Complex> c(a.order());
  for (int k = 0; k < a.order(); ++k) c[k] = static_cast<double>(k + 1) * a[k + 1];
  return PowerSeries(std::move(c));
}

Complex eval(const PowerSeries& a, Complex z) {
  Complex acc{};
  for (int k = a.order(); k >= 0; --k) acc = acc * z + a[k];
  return acc;
}

std::array<Complex, 4> eval_derivatives(const PowerSeries& a, Complex z) {
  // Horner on the Taylor shift: d[j] accumulates a^{(j)}(z)/j!.
  std::array<Complex, 4> d{};
  for (int k = a.order(); k >= 0; --k) {
    d[3] = d[3] * z + d[2];
    d[2] = d[2] * z + d[1];
    d[1] = d[1] * z + d[0];
    d[0] = d[0] * z + a[k];
  }
  d[2] *= 2.0;
  d[3] *= 6.0;
  return d;
}

PowerSeries dilate(const PowerSeries& a, double t) {
  if (!(t > 0.0 && t <= 1.0)) {
    throw DomainError("dilate: t must lie in (0,1], got " + std::to_string(t));
  }
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  double scale = 1.0 / t;
  for (auto& x : c) {
    x *= scale;
    scale *= t;
  }
  return PowerSeries(std::move(c));
}

PowerSeries divide_by_z(const PowerSeries& a) {
  if (a.order() == 0) return PowerSeries::zero(0);
  return PowerSeries(std::vector<Complex>(a.coeffs().begin() + 1, a.coeffs().end()));
}

PowerSeries multiply_by_z(const PowerSeries& a) {
  std::vector<Complex> c(a.coeffs().size());
  for (int k = 1; k <= a.order(); ++k) c[k] = a[k - 1];
  return PowerSeries(std::move(c));
}

}  // namespace gft
