#include <doctest.h>

#include <cmath>
#include <vector>

#include "curvhv/closed_forms.hpp"
#include "curvhv/error.hpp"
#include "curvhv/hvhf.hpp"

using namespace curvhv;
namespace cf = curvhv::closed_form;

namespace {

OscillatorSpec oscillator(double alpha, double lambda, int n, int l = 1) {
  OscillatorSpec s;
  s.alpha = alpha;
  s.n = n;
  s.l = l;
  s.params = CurvedParams(lambda);
  return s;
}

CoulombSpec coulomb(double kappa, double lambda, int n, int m, int l = -3) {
  CoulombSpec s;
  s.kappa = kappa;
  s.n = n;
  s.m = m;
  s.l = l;
  s.params = CurvedParams(lambda);
  return s;
}

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST_CASE("zeroth order energies") {
  CHECK(zeroth_energy_oscillator(oscillator(1.0, 0.1, 0), 0).value() == doctest::Approx(0.525624609863).epsilon(1e-12));
  for (int n = 0; n <= 4; ++n)
    CHECK(zeroth_energy_oscillator(oscillator(2.0, 0.3, n), 0).value() ==
          doctest::Approx((n + 0.5) * (0.3 + std::sqrt(0.09 + 8.0)) / 2 + n * n * 0.15).epsilon(1e-14));
  // Seed derivative: dE0/dalpha = (n + 1/2) / sqrt(lambda^2 + 4 alpha).
  const Jet e = zeroth_energy_oscillator(oscillator(1.0, 0.1, 1), 2);
  CHECK(e[1] == doctest::Approx(1.5 / std::sqrt(4.01)).epsilon(1e-14));
}

TEST_CASE("oscillator series frozen values") {
  const SeriesResult res = perturbation_series(oscillator(1.0, 0.1, 0), 6);
  const std::vector<double> expected{0.525624609863, 0.0, -0.612342333516, 0.0, -0.172931345021, 0.0, -0.118598864217};
  REQUIRE(res.series.order() == 6);
  for (int j = 0; j <= 6; ++j) {
    INFO("j = " << j);
    if (expected[j] == 0.0)
      CHECK(std::abs(res.series[j]) <= 1e-13 * res.series[0]);
    else
      CHECK(res.series[j] == doctest::Approx(expected[j]).epsilon(1e-11));
  }
  CHECK(res.max_relation_residual <= 1e-10);
  CHECK(res.relations_checked > 0);
}

TEST_CASE("oscillator second order matches the derived closed form") {
  for (double alpha : {0.5, 1.0, 2.0})
    for (double lambda : {0.05, 0.1, 0.3})
      for (int n = 0; n <= 4; ++n) {
        const SeriesResult res = perturbation_series(oscillator(alpha, lambda, n), 3);
        INFO("alpha=" << alpha << " lambda=" << lambda << " n=" << n);
        CHECK(rel_close(res.series[2], cf::derived::oscillator_e2(alpha, lambda, n), 1e-10));
        CHECK(std::abs(res.series[1]) <= 1e-13 * res.series[0]);
        CHECK(std::abs(res.series[3]) <= 1e-13 * res.series[0]);
      }
}

TEST_CASE("flat limit of the oscillator series") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    const SeriesResult res = perturbation_series(oscillator(alpha, 1e-8, 0), 2);
    CHECK(res.series[2] == doctest::Approx(-1.0 / (2.0 * alpha)).epsilon(1e-6));
    // At lambda = 0 the linear term only shifts the minimum: E = E0 - beta^2 / (2 alpha).
    const SeriesResult flat = perturbation_series(oscillator(alpha, 0.0, 1), 6);
    CHECK(flat.series[2] == doctest::Approx(-1.0 / (2.0 * alpha)).epsilon(1e-14));
    for (int j : {1, 3, 4, 5, 6}) CHECK(std::abs(flat.series[j]) <= 1e-13);
  }
  // l = 2 at lambda = 0 is a shift alpha -> alpha + 2 beta of the exact spectrum.
  const double alpha = 1.3;
  const SeriesResult res = perturbation_series(oscillator(alpha, 0.0, 2, 2), 4);
  for (int j = 1; j <= 4; ++j) {
    // Taylor coefficients of (n + 1/2) sqrt(alpha + 2 beta).
    double c = 2.5 * std::sqrt(alpha), binom = 1.0;
    for (int i = 0; i < j; ++i) binom *= (0.5 - i) / (i + 1);
    c *= binom * std::pow(2.0 / alpha, j);
    INFO("j = " << j);
    CHECK(res.series[j] == doctest::Approx(c).epsilon(1e-12));
  }
}

TEST_CASE("coulomb first order frozen values") {
  CHECK(perturbation_series(coulomb(1.0, 0.1, 0, 1), 1).series[1] == doctest::Approx(0.595061728395).epsilon(1e-11));
  const SeriesResult m2 = perturbation_series(coulomb(1.0, 0.1, 0, 2), 3);
  CHECK(m2.series[1] == doctest::Approx(0.0418666666667).epsilon(1e-11));
  CHECK(m2.series[2] == doctest::Approx(-0.0160985185185).epsilon(1e-11));
  CHECK(m2.series[3] == doctest::Approx(0.0133585468313).epsilon(1e-10));
  CHECK(perturbation_series(coulomb(1.0, 0.1, 0, 3), 1).series[1] == doctest::Approx(0.0142218520061).epsilon(1e-11));
}

TEST_CASE("coulomb first order matches the derived closed form") {
  for (double lambda : {0.0, 0.05, 0.1})
    for (int n = 0; n <= 1; ++n)
      for (int m = 1; m <= 3; ++m) {
        INFO("lambda=" << lambda << " n=" << n << " m=" << m);
        const double e1 = perturbation_series(coulomb(1.0, lambda, n, m), 1).series[1];
        CHECK(rel_close(e1, cf::derived::coulomb_e1_lm3(1.0, lambda, n, m), 1e-10));
      }
}

TEST_CASE("coulomb l = -2 is a shift of the angular constant") {
  // beta r^-2 (1 + lambda r^2) = beta r^-2 + beta lambda, which is mu -> mu + 2 beta in the
  // effective potential (mu - 1/4)/(2 r^2) + (mu - 1/2) lambda / 2.
  for (double lambda : {0.0, 0.1})
    for (int m : {1, 2}) {
      const CoulombSpec spec = coulomb(1.0, lambda, 1, m, -2);
      const SeriesResult res = perturbation_series(spec, 4);
      const Jet e0 = zeroth_energy_coulomb(spec, 4);
      for (int j = 1; j <= 4; ++j) {
        const double expected = e0[j] * std::pow(2.0, j);
        INFO("lambda=" << lambda << " m=" << m << " j=" << j);
        CHECK(res.series[j] == doctest::Approx(expected).epsilon(1e-11));
      }
    }
}

TEST_CASE("series evaluation") {
  const SeriesResult res = perturbation_series(oscillator(1.0, 0.1, 0), 4);
  const double b = 0.01;
  double sum = 0.0;
  for (int j = 0; j <= 4; ++j) sum += res.series[j] * std::pow(b, j);
  CHECK(evaluate_series(res.series, b) == doctest::Approx(sum).epsilon(1e-15));
  CHECK(evaluate_series(res.series, b, 2) == doctest::Approx(res.series[0] + b * b * res.series[2]).epsilon(1e-15));
}

TEST_CASE("moment table entries") {
  const SeriesResult res = perturbation_series(oscillator(1.0, 0.1, 0), 2);
  CHECK(res.table.has(0, 0));
  CHECK(res.table.at(0, 0).value() == doctest::Approx(cf::derived::oscillator_q00(1.0, 0.1, 0)).epsilon(1e-12));
  CHECK(res.table.at(0, 2).value() == doctest::Approx(cf::derived::oscillator_q02(1.0, 0.1, 0)).epsilon(1e-12));
  CHECK_THROWS_AS(res.table.at(7, 0), UnreachableMomentError);
}

TEST_CASE("hellmann-feynman energies agree with the moments") {
  const SeriesResult res = perturbation_series(coulomb(1.0, 0.1, 0, 2), 3);
  for (int j = 1; j <= 3; ++j)
    CHECK(energy_from_hf(res.table, j, -3).value() == doctest::Approx(res.series[j]).epsilon(1e-13));
}

TEST_CASE("coulomb l = -1 needs a moment no relation provides") {
  CHECK_THROWS_AS(perturbation_series(coulomb(1.0, 0.1, 0, 1, -1), 2), UnreachableMomentError);
}

TEST_CASE("coulomb angular resonance") {
  // Relation k = 1 + 2|m| cannot be solved for its lowest moment.
  try {
    perturbation_series(coulomb(1.0, 0.1, 0, 1), 2);
    FAIL("expected an angular resonance");
  } catch (const AngularResonanceError& e) {
    CHECK(e.m() == 1);
  }
  CHECK_NOTHROW(perturbation_series(coulomb(1.0, 0.1, 0, 2), 3));
}

TEST_CASE("oscillator resonance") {
  // Relation k = 1 loses its leading coefficient at 4 alpha = 3 lambda^2.
  try {
    perturbation_series(oscillator(0.75, 1.0, 0), 4);
    FAIL("expected a resonance");
  } catch (const ResonanceError& e) {
    CHECK(e.k() == 1);
  }
  CHECK_NOTHROW(perturbation_series(oscillator(0.75, 0.9, 0), 4));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(perturbation_series(oscillator(-1.0, 0.1, 0), 2), ConfigError);
  CHECK_THROWS_AS(perturbation_series(oscillator(1.0, 0.1, -1), 2), ConfigError);
  CHECK_THROWS_AS(perturbation_series(oscillator(1.0, 0.1, 0, 0), 2), ConfigError);
  CHECK_THROWS_AS(perturbation_series(coulomb(1.0, 0.1, 0, 0), 2), ConfigError);
  CHECK_THROWS_AS(perturbation_series(coulomb(0.0, 0.1, 0, 1), 2), ConfigError);
  CHECK_THROWS_AS(perturbation_series(coulomb(1.0, 0.1, 0, 1, 1), 2), ConfigError);
}

TEST_CASE("plain relation at lambda = 0 is the flat hypervirial theorem") {
  // V = x^2/2 + 0.3 x^4, E = 0.9, k = 3.
  const PowerSeries v{{2, 0.5}, {4, 0.3}};
  const PowerSeries rel = hypervirial_relation(v, 0.9, 0.0, 3);
  // 2 k E <x^{k-1}> - sum_p c_p (2k + p) <x^{k+p-1}> + k (k-1)(k-2)/4 <x^{k-3}>.
  const PowerSeries flat{{2, 2 * 3 * 0.9}, {4, -0.5 * 8}, {6, -0.3 * 10}, {0, 1.5}};
  REQUIRE(rel.terms().size() == flat.terms().size());
  for (std::size_t i = 0; i < flat.terms().size(); ++i) {
    CHECK(rel.terms()[i].power == flat.terms()[i].power);
    CHECK(rel.terms()[i].coeff == doctest::Approx(flat.terms()[i].coeff).epsilon(1e-15));
  }
}
