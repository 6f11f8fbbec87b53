#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include "qsieve/analysis.hpp"
#include "qsieve/errors.hpp"

using namespace qsieve;
using G = GaussianInteger;
constexpr double pi = std::numbers::pi;

namespace {
// Polar route: W~(t) = 2 pi int W(r^2) r J0(2 pi t r) dr.
double w_tilde_polar(double t) {
  auto f = [t](double r) { return weight_W(r * r) * r * boost::math::cyl_bessel_j(0, 2 * pi * t * r); };
  double err = 0;
  const double a = std::sqrt(0.5), b = std::sqrt(2.5);
  double sum = 0;
  const int panels = 16;
  for (int k = 0; k < panels; ++k) {
    const double lo = a + (b - a) * k / panels, hi = a + (b - a) * (k + 1) / panels;
    sum += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, lo, hi, 12, 1e-14, &err);
  }
  return 2 * pi * sum;
}
}  // namespace

TEST_CASE("weight W") {
  CHECK(weight_W(1.0) == doctest::Approx(std::exp(-1.0 / 3.0)).epsilon(1e-15));
  CHECK(weight_W(1.5) == doctest::Approx(std::exp(-0.25)).epsilon(1e-15));
  CHECK(weight_W(0.5) == 0.0);
  CHECK(weight_W(2.5) == 0.0);
  CHECK(weight_W(-1.0) == 0.0);
  for (double x = 0.55; x < 2.45; x += 0.01) {
    CHECK(weight_W(x) > 0.0);
    CHECK(weight_W(x) <= 1.0);
  }
}

TEST_CASE("W~ against independent quadrature") {
  // scipy quad of the Bessel form, frozen.
  CHECK(std::abs(weight_W_tilde(0) - 3.897538395582e+00) < 1e-9);
  CHECK(std::abs(weight_W_tilde(0.5) - -1.252056148682e+00) < 1e-9);
  CHECK(std::abs(weight_W_tilde(1) - 3.548683897382e-01) < 1e-9);
  CHECK(std::abs(weight_W_tilde(2) - -4.073151212173e-02) < 1e-9);
  CHECK(std::abs(weight_W_tilde(5) - -1.227933466636e-03) < 1e-9);
  CHECK(std::abs(weight_W_tilde(10) - 1.602028895049e-03) < 1e-9);
  CHECK(std::abs(weight_W_tilde(50) - 2.194842849963e-05) < 1e-9);

  // W~(0) = pi int W.
  double err = 0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(weight_W, 0.5, 2.5, 15, 1e-14, &err);
  CHECK(std::abs(weight_W_tilde(0) - pi * integral) < 1e-9);

  for (double t : {0.0, 1.0, 5.0}) CHECK(std::abs(weight_W_tilde(t) - w_tilde_polar(t)) < 1e-8);
}

TEST_CASE("W~ decay") {
  // Smooth but not analytic: decay like exp(-c sqrt t), faster than any power
  // yet far slower than exponential. |W~(50)| is about 2.2e-5.
  CHECK(std::abs(weight_W_tilde(50)) < 1e-4);
  CHECK(std::abs(weight_W_tilde(50)) > 1e-6);
  CHECK(std::abs(w_tilde_polar(200)) < 1e-6);
}

TEST_CASE("W~ table agrees with quadrature") {
  const WTildeTable table(80.0);
  for (double t : {0.0, 0.3, 1.0, 2.7, 5.0, 13.1, 50.0, 79.5}) {
    CHECK(std::abs(table(t) - weight_W_tilde_quadrature(t, 1e-9).value) < 1e-10);
  }
}

TEST_CASE("theta sums") {
  const ThetaSum p = theta_sum(1.0, G(-1, 2), ThetaCharacter::parse("principal"));
  CHECK(p.value.real() == doctest::Approx(1.867442731730700e-03).epsilon(1e-12));
  CHECK(p.value.imag() == 0.0);
  CHECK(p.value.real() > std::exp(-2 * pi));

  const ThetaSum q = theta_sum(0.5, G(-1, 2), ThetaCharacter::parse("quartic"));
  CHECK(std::abs(q.value - ComplexValue(4.321391826377226e-02, 1.507012019886562e-07)) < 1e-14);
  const ThetaSum r = theta_sum(0.1, G(3, 2), ThetaCharacter::parse("quartic"));
  CHECK(std::abs(r.value - ComplexValue(5.732015700312847e-01, -4.345167783756758e-02)) < 1e-12);

  const ThetaSum c = theta_sum(0.1, G(3, 2), ThetaCharacter::parse("quartic3"));
  CHECK(std::abs(c.value - std::conj(r.value)) < 1e-15);

  for (double w : {1.0, 0.3, 0.05}) {
    const ThetaSum a = theta_sum(w, G(-7, 4), ThetaCharacter::parse("quartic"));
    const ThetaSum b = theta_sum(w, G(-7, 4), ThetaCharacter::parse("quartic"), 2 * a.truncation_norm);
    CHECK(std::abs(a.value - b.value) <= a.tail_bound);
    CHECK(std::abs(a.value - b.value) < 1e-10);
  }
  CHECK_THROWS_AS(theta_sum(0.0, G(-1, 2), {}), InvalidArgument);
  CHECK_THROWS_AS(theta_sum(0.5, G(1, 0), {}), InvalidArgument);
  CHECK_THROWS_AS(ThetaCharacter::parse("cubic"), InvalidArgument);
}

TEST_CASE("Poisson identity") {
  // Left sides frozen from a plain-Python lattice sum.
  const auto a = poisson_identity_check(G(1, 4), G(1, 0), 10);
  CHECK(std::abs(a.lhs - ComplexValue(2.717552039479688e+00, -2.565102520948974e-01)) < 1e-12);
  CHECK(a.rel_err < 1e-8);
  const auto b = poisson_identity_check(G(-1, 2), G(-1, -2), 4);
  CHECK(std::abs(b.lhs - ComplexValue(-5.124997730326195e+00, 2.866125242295157e+00)) < 1e-12);
  CHECK(b.rel_err < 1e-8);

  // chi(i) != 1 here, so the unit sum cancels and both sides vanish.
  const auto c = poisson_identity_check(G(-1, 2), G(3, 2), 10);
  CHECK(c.unit_sum == G(0, 0));
  CHECK(std::abs(c.lhs) < 1e-12);
  CHECK(c.rel_err < 1e-4);

  CHECK_THROWS_AS(poisson_identity_check(G(-1, 2), G(-1, 2), 4), InvalidArgument);
  CHECK_THROWS_AS(poisson_identity_check(G(1, 1), G(1, 0), 4), InvalidArgument);
  CHECK_THROWS_AS(poisson_identity_check(G(-1, 2), G(1, 0), -1), InvalidArgument);
}
