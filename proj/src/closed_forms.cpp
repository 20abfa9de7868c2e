#include "curvhv/closed_forms.hpp"

#include <cmath>
#include <cstdlib>

namespace curvhv::closed_form {

namespace {

double root(double alpha, double lambda) { return std::sqrt(lambda * lambda + 4.0 * alpha); }

double principal(int n, int m) { return n + std::abs(m) + 0.5; }

}  // namespace

namespace derived {

double oscillator_e0(double alpha, double lambda, int n) {
  return (n + 0.5) * (lambda + root(alpha, lambda)) / 2.0 + 0.5 * n * n * lambda;
}

double oscillator_q00(double alpha, double lambda, int n) { return 1.0 + (2.0 * n + 1.0) * lambda / root(alpha, lambda); }

double oscillator_q02(double alpha, double lambda, int n) {
  return (4.0 * oscillator_e0(alpha, lambda, n) + lambda) * oscillator_q00(alpha, lambda, n) /
         (4.0 * alpha - 3.0 * lambda * lambda);
}

double oscillator_e2(double alpha, double lambda, int n) {
  return -(oscillator_q00(alpha, lambda, n) + 3.0 * lambda * oscillator_q02(alpha, lambda, n)) / (2.0 * alpha);
}

double coulomb_e0(double kappa, double lambda, int n, int m) {
  const double nn = principal(n, m);
  return -kappa * kappa / (2.0 * nn * nn) + 0.5 * lambda * (nn * nn - 0.25);
}

double coulomb_e1_lm3(double kappa, double lambda, int n, int m) {
  const double nn = principal(n, m);
  const double am = std::abs(m);
  const double d = am * (4.0 * am * am - 1.0);
  return 4.0 * kappa * kappa * kappa / (d * nn * nn * nn) + 2.0 * kappa * lambda * (2.0 * n + 2.0 * am + 1.0) / d;
}

}  // namespace derived

namespace published {

double oscillator_q02(double alpha, double lambda, int n) {
  const double s = root(alpha, lambda);
  return ((2.0 * n + 1.0) * lambda + s) / ((4.0 * alpha - 3.0 * lambda * lambda) * s) *
         ((2.0 * n + 1.0) * s + (2.0 * n * n + 2.0 * n + 3.0) * lambda);
}

double oscillator_e2(double alpha, double lambda, int n) {
  const double s = root(alpha, lambda);
  const double first = -(s + (2.0 * n + 1.0) * lambda) / (2.0 * alpha * s);
  const double second = -3.0 * lambda * ((2.0 * n + 1.0) * lambda + s) /
                        (2.0 * alpha * (4.0 * alpha - 3.0 * lambda * lambda) * s) *
                        ((2.0 * n + 1.0) * s + (2.0 * n * n + 2.0 * n + 3.0) * lambda);
  return first + second;
}

double coulomb_e0(double kappa, double lambda, int n, int m) {
  const double am = std::abs(m);
  const double nn = principal(n, m);
  return -kappa * kappa / (2.0 * nn * nn) + 0.5 * lambda * (n + am) * (n + am + 0.5);
}

double coulomb_e1_lm3(double kappa, double lambda, int n, int m) {
  const double nn = principal(n, m);
  const double am = std::abs(m);
  const double d = am * (4.0 * am * am - 1.0);
  return 8.0 * kappa * kappa * kappa / (d * nn * nn * nn) + 2.0 * kappa * lambda * (4.0 * n + 4.0 * am + 1.0) / d;
}

}  // namespace published

}  // namespace curvhv::closed_form
