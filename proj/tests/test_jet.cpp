#include <doctest.h>

#include <cmath>

#include "curvhv/jet.hpp"

using namespace curvhv;

TEST_CASE("constant and variable jets") {
  const Jet c = Jet::constant(3.0, 4);
  CHECK(c.order() == 4);
  CHECK(c.value() == 3.0);
  CHECK(c[1] == 0.0);
  const Jet x = Jet::variable(2.0, 3);
  CHECK(x.value() == 2.0);
  CHECK(x[1] == 1.0);
  CHECK(x[2] == 0.0);
}

TEST_CASE("products match the Taylor coefficients of a polynomial") {
  const Jet x = Jet::variable(2.0, 5);
  const Jet p = x * x * x;  // (2 + t)^3 = 8 + 12 t + 6 t^2 + t^3
  CHECK(p[0] == 8.0);
  CHECK(p[1] == 12.0);
  CHECK(p[2] == 6.0);
  CHECK(p[3] == 1.0);
  CHECK(p[4] == 0.0);
  CHECK(p.derivative_value(2) == 12.0);
  CHECK(p.derivative_value(3) == 6.0);
}

TEST_CASE("division and square root") {
  const Jet x = Jet::variable(1.0, 6);
  const Jet inv = 1.0 / (1.0 - x + 1.0);  // 1/(1 - t)
  for (int k = 0; k <= 6; ++k) CHECK(inv[k] == doctest::Approx(1.0));

  const Jet s = sqrt(x);  // sqrt(1 + t)
  CHECK(s[1] == doctest::Approx(0.5));
  CHECK(s[2] == doctest::Approx(-0.125));
  CHECK(s[3] == doctest::Approx(0.0625));
  const Jet back = s * s;
  for (int k = 0; k <= 6; ++k) CHECK(back[k] == doctest::Approx(x[k]).epsilon(1e-14));
}

TEST_CASE("quotient of jets inverts the product") {
  const Jet a = Jet::from_coeffs({2.0, -1.0, 0.5, 0.25});
  const Jet b = Jet::from_coeffs({3.0, 1.0, -2.0, 4.0});
  const Jet q = (a * b) / b;
  for (int k = 0; k <= 3; ++k) CHECK(q[k] == doctest::Approx(a[k]).epsilon(1e-14));
}

TEST_CASE("mixed orders truncate to the smaller") {
  const Jet a = Jet::variable(1.0, 5);
  const Jet b = Jet::variable(1.0, 2);
  CHECK((a + b).order() == 2);
  CHECK((a * b).order() == 2);
  CHECK(a.truncated(3).order() == 3);
  CHECK(a.derivative().order() == 4);
  CHECK(a.derivative()[0] == 1.0);
}

TEST_CASE("zero tests and norms") {
  CHECK(Jet::constant(0.0, 3).is_zero());
  CHECK_FALSE(Jet::variable(0.0, 3).is_zero());
  CHECK(Jet::from_coeffs({1.0, -4.0, 2.0}).max_abs() == 4.0);
  CHECK((-Jet::variable(2.0, 1))[1] == -1.0);
}
