#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gft {

using Complex = std::complex<double>;

inline constexpr int kDefaultOrder = 64;
// |b_0| below this makes b non-invertible as a power series.
inline constexpr double kDivisionFloor = 1e-14;

/// Truncated Taylor expansion sum_{k=0}^{N} c_k z^k about the origin.
///
/// Always holds exactly order()+1 finite coefficients. Binary operations
/// truncate to the shorter operand.
class PowerSeries {
public:
  PowerSeries();
  explicit PowerSeries(std::vector<Complex> coeffs);

  static PowerSeries zero(int order);
  static PowerSeries constant(Complex value, int order);
  /// The identity map z.
  static PowerSeries identity(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t k) const { return coeffs_[k]; }

  PowerSeries truncated(int order) const;

  /// True when c_0 = 0 and c_1 = 1 to within tol (the class of normalized
  /// analytic functions z + a_2 z^2 + ...).
  bool is_normalized(double tol = 1e-12) const;

  /// Largest |c_k|.
  double max_abs_coeff() const;

private:
  std::vector<Complex> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(Complex s, const PowerSeries& a);
PowerSeries operator+(const PowerSeries& a, Complex s);

/// Quotient a/b. Throws NearZeroConstantTerm when |b_0| < kDivisionFloor.
PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

PowerSeries derive(const PowerSeries& a);

/// Horner evaluation.
Complex eval(const PowerSeries& a, Complex z);

/// Values a(z), a'(z), a''(z), a'''(z) in one Horner sweep.
std::array<Complex, 4> eval_derivatives(const PowerSeries& a, Complex z);

/// h(z) -> h(tz)/t, i.e. c_k -> c_k t^{k-1}. Requires t in (0,1].
PowerSeries dilate(const PowerSeries& a, double t);

/// a(z)/z for a series with a_0 = 0 (drops the constant term).
PowerSeries divide_by_z(const PowerSeries& a);

/// z * a(z), keeping the order.
PowerSeries multiply_by_z(const PowerSeries& a);

}  // namespace gft
