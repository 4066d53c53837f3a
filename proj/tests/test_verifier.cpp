#include "doctest.h"

#include <cmath>
#include <numbers>

#include "gft/errors.hpp"
#include "gft/fixtures.hpp"
#include "gft/schwarzian.hpp"
#include "gft/verifier.hpp"
#include "test_support.hpp"

using namespace gft;
using std::numbers::pi;

namespace {

PowerSeries koebe_like_moebius() {
  // z/(1-z); the geometric tail needs ~4000 terms to be negligible at |z| = 0.99.
  return fixtures::moebius(-1.0, 4096);
}

}  // namespace

TEST_CASE("expression evaluation on closed forms") {
  const auto id = PowerSeries::identity(kDefaultOrder);
  for (const Complex z : {Complex{0.0}, Complex{0.01, 0.02}, Complex{0.3, -0.5}}) {
    CHECK(std::abs(eval_expr(id, ExprKind::zfprime_over_f, {}, z) - 1.0) < 1e-15);
  }

  const auto g = fixtures::moebius(0.3);
  CriterionParams p;
  p.beta = 0.0;
  CHECK(std::abs(eval_expr(g, ExprKind::f_prime_minus_beta, p, 0.0) - 1.0) < 1e-15);
  CHECK(std::abs(eval_expr(g, ExprKind::one_plus_zfpp_over_fp, p, 0.5) - (1.0 - 0.3 / 1.15)) < 1e-12);
  CHECK(std::abs(eval_expr(g, ExprKind::one_plus_zfpp_over_fp, p, 0.5) - 0.739130434783) < 1e-11);
}

TEST_CASE("near-origin series branch agrees with direct evaluation") {
  UnitRandom rng(41);
  const auto f = gft::testing::random_normalized(rng, 8, 0.4);
  const ExprEvaluator ev(f);
  CriterionParams p;
  p.alpha = 0.7;
  p.beta = 0.4;
  p.gamma = 0.3;
  for (const auto kind : {ExprKind::bazilevic_expr, ExprKind::nonlinear_expr, ExprKind::combo_expr,
                          ExprKind::p_gamma_expr, ExprKind::zfprime_over_f, ExprKind::f_over_z}) {
    // Just inside and just outside the switch radius.
    const Complex inside = std::polar(0.0499999, 1.1);
    const Complex outside = std::polar(0.0500001, 1.1);
    CHECK(std::abs(ev(kind, p, inside) - ev(kind, p, outside)) < 1e-6);
  }
  const Complex z{0.01, 0.0};
  const Complex direct = z * eval(derive(f), z) / eval(f, z);
  CHECK(std::abs(ev(ExprKind::zfprime_over_f, p, z) - direct) < 1e-13);
}

TEST_CASE("vanishing derivative is reported") {
  const auto f = fixtures::quadratic(1.0);  // f'(-1/2) = 0
  CHECK_THROWS_AS(eval_expr(f, ExprKind::one_plus_zfpp_over_fp, {}, -0.5), NearZeroDenominator);
  CHECK_THROWS_AS(ExprEvaluator(PowerSeries(std::vector<Complex>{0.0, 2.0})), DomainError);
}

TEST_CASE("max |Arg| of g' for the Moebius example") {
  const double c = 0.3;
  const auto g = fixtures::moebius(c);
  CriterionParams p;
  p.beta = 0.0;
  const GridSpec grid{0.999, 16, 2048};
  const auto report = max_abs_arg(g, ExprKind::f_prime_minus_beta, p, grid, 2.0 * std::asin(c));
  // |Arg (1+cz)^{-2}| peaks on |z| = r at 2 asin(c r).
  CHECK(std::abs(report.extremum - 2.0 * std::asin(c * 0.999)) < 1e-5);
  CHECK(report.extremum <= 2.0 * std::asin(c));
  CHECK(report.passed);
  CHECK(std::abs(report.arg_extremum) == doctest::Approx(0.999));

  const auto id = PowerSeries::identity(kDefaultOrder);
  CriterionParams benign;
  benign.alpha = 0.5;
  benign.beta = 0.5;
  benign.gamma = 0.5;
  for (const auto kind : {ExprKind::f_prime_minus_beta, ExprKind::bazilevic_expr, ExprKind::zfprime_over_f,
                          ExprKind::f_over_z, ExprKind::p_gamma_expr}) {
    CriterionParams q = benign;
    if (kind == ExprKind::f_prime_minus_beta) q.beta = 0.0;
    CHECK(max_abs_arg(id, kind, q, GridSpec{0.99, 8, 16}, 0.0).extremum < 1e-15);
  }
}

TEST_CASE("max |Arg(zf'/f)| of the Nehari function matches its closed form") {
  const auto f = fixtures::nehari();
  const GridSpec grid{0.9, 16, 256};
  const auto report = max_abs_arg(f, ExprKind::zfprime_over_f, {}, grid, pi / 2.0);
  double oracle = 0.0;
  const Complex a{0.0, pi};
  for (const Complex z : grid.points()) {
    if (z == Complex{}) continue;
    const Complex value = a * z * std::exp(a * z) / (std::exp(a * z) - 1.0);
    oracle = std::max(oracle, std::abs(std::arg(value)));
  }
  CHECK(std::isfinite(report.extremum));
  CHECK(std::abs(report.extremum - oracle) < 1e-12);
}

TEST_CASE("min Re on closed forms") {
  CriterionParams p;
  p.alpha = 1.0;
  const auto id = min_real(PowerSeries::identity(kDefaultOrder), ExprKind::r_alpha_expr, p, GridSpec{0.99, 8, 16});
  CHECK(id.extremum == doctest::Approx(1.0));
  CHECK(id.passed);

  const auto starlike = min_real(koebe_like_moebius(), ExprKind::zfprime_over_f, {}, GridSpec{0.99, 16, 128});
  CHECK(std::abs(starlike.extremum - 1.0 / 1.99) < 1e-12);
  CHECK(starlike.passed);

  const auto not_convex = min_real(fixtures::quadratic(1.0), ExprKind::one_plus_zfpp_over_fp, {}, GridSpec{0.99, 16, 128});
  CHECK(not_convex.extremum < 0.0);
  CHECK_FALSE(not_convex.passed);
  CHECK(std::abs(not_convex.arg_extremum + 0.495) < 1e-12);
}

TEST_CASE("univalence grid check") {
  const auto identity = univalence_grid_check(PowerSeries::identity(kDefaultOrder), 0.99, 512);
  CHECK(identity.passed);
  CHECK(identity.extremum == doctest::Approx(1.0));

  const auto koebe = univalence_grid_check(fixtures::koebe(256), 0.9, 1024);
  CHECK(koebe.passed);
  CHECK_FALSE(koebe.witness.has_value());

  // The 64-term partial sum of the Koebe function is not univalent on |z| <= 0.9.
  const auto partial = fixtures::koebe(64);
  const auto truncated = univalence_grid_check(partial, 0.9, 1024);
  CHECK_FALSE(truncated.passed);
  REQUIRE(truncated.witness.has_value());
  CHECK(std::abs(eval(partial, truncated.witness->first) - eval(partial, truncated.witness->second)) < 1e-12);

  const auto fail = univalence_grid_check(fixtures::quadratic(1.0), 0.99, 2048);
  CHECK_FALSE(fail.passed);
  REQUIRE(fail.witness.has_value());
  const auto [z1, z2] = *fail.witness;
  const auto f = fixtures::quadratic(1.0);
  CHECK(std::abs(eval(f, z1) - eval(f, z2)) < 1e-9);
  CHECK(std::abs(z1 - z2) > 0.1);
  CHECK(std::abs(z1 + z2 + 1.0) < 1e-9);  // (z1 - z2)(1 + z1 + z2) = 0

  CHECK_THROWS_AS(univalence_grid_check(f, 0.99, 8192), DomainError);
}

TEST_CASE("budgeted random functions") {
  CHECK(gft::testing::coeff_distance(random_budgeted_function(1, 8, 0.0, 0.1), PowerSeries::identity(kDefaultOrder),
                                     kDefaultOrder) == 0.0);

  const auto f = random_budgeted_function(7, 8, 0.5, 0.1);
  CHECK(f.is_normalized());
  CHECK(f.order() == kDefaultOrder);
  CHECK(std::abs(f[2]) <= 0.1 + 1e-15);
  const double measured = sup_schwarzian(f).two_delta;
  CHECK(measured <= 0.5);

  const auto again = random_budgeted_function(7, 8, 0.5, 0.1);
  CHECK(gft::testing::coeff_distance(f, again, kDefaultOrder) == 0.0);
  const auto other = random_budgeted_function(8, 8, 0.5, 0.1);
  CHECK(gft::testing::coeff_distance(f, other, kDefaultOrder) > 0.0);

  // Without an eta cap the budget is met to within 1%.
  const auto tight = random_budgeted_function(9, 8, 0.05, 1.0);
  const double s = sup_schwarzian(tight).two_delta;
  CHECK(s <= 0.05);
  CHECK(s >= 0.99 * 0.05);
}

TEST_CASE("property: sup|S(dilate(h,t))| is nondecreasing in t") {
  UnitRandom rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = gft::testing::random_normalized(rng, 8, 0.5, 12);
    double previous = -1.0;
    for (int i = 1; i <= 10; ++i) {
      const double s = sup_schwarzian(dilate(h, 0.1 * i), 0.999, 256).two_delta;
      CHECK(s >= previous - 1e-12);
      previous = s;
    }
  }
}

TEST_CASE("property: grid refinement stability") {
  CriterionParams p;
  p.alpha = 0.5;
  p.beta = 0.5;
  for (const auto& f : {fixtures::moebius(0.3), fixtures::nehari(), fixtures::quadratic(0.2)}) {
    for (const auto kind : {ExprKind::zfprime_over_f, ExprKind::f_prime_minus_beta, ExprKind::nonlinear_expr}) {
      const double coarse = max_abs_arg(f, kind, p, GridSpec{0.95, 16, 256}, 0.0).extremum;
      const double fine = max_abs_arg(f, kind, p, GridSpec{0.95, 16, 512}, 0.0).extremum;
      CHECK(std::abs(coarse - fine) < 1e-3);
    }
  }
}

TEST_CASE("property: Arg of a product is bounded by the sum of factor Args") {
  UnitRandom rng(43);
  CriterionParams p;
  p.alpha = -0.8;
  p.beta = 0.6;
  for (const auto& f : {fixtures::moebius(0.2), fixtures::quadratic(Complex{0.1, 0.05})}) {
    const ExprEvaluator ev(f);
    for (int k = 0; k < 200; ++k) {
      const Complex z = std::polar(0.95 * rng.next(), 2.0 * pi * rng.next());
      const double whole = std::abs(std::arg(ev(ExprKind::nonlinear_expr, p, z)));
      const double parts = std::abs(p.alpha) * std::abs(std::arg(ev(ExprKind::zfprime_over_f, p, z))) +
                           std::abs(p.beta) * std::abs(std::arg(ev(ExprKind::one_plus_zfpp_over_fp, p, z)));
      CHECK(whole <= parts + 1e-12);
    }
  }
}
