#include <doctest.h>

#include <boost/multiprecision/float128.hpp>
#include <cmath>
#include <vector>

#include "curvhv/closed_forms.hpp"
#include "curvhv/error.hpp"
#include "curvhv/hvhf.hpp"
#include "curvhv/oracle.hpp"

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

CoulombSpec coulomb(double lambda, int n, int m) {
  CoulombSpec s;
  s.n = n;
  s.m = m;
  s.params = CurvedParams(lambda);
  return s;
}

double oscillator_level(const OscillatorSpec& spec, int intervals) {
  const auto h = build_oscillator_1d<double>(spec, 0.0, oscillator_grid(spec, intervals - 1));
  return eigenvalues_lowest(h, spec.n + 1)[static_cast<std::size_t>(spec.n)];
}

double coulomb_level(const CoulombSpec& spec, int intervals) {
  const auto h = build_coulomb_radial<double>(spec, 0.0, coulomb_grid(spec, intervals - 1));
  return eigenvalues_lowest(h, spec.n + 1)[static_cast<std::size_t>(spec.n)];
}

}  // namespace

TEST_CASE("tridiagonal eigenvalues of a known matrix") {
  // -1, 2, -1 on n points: 2 - 2 cos(k pi / (n + 1)).
  Tridiagonal<double> t;
  const int n = 100;
  t.diag.assign(n, 2.0);
  t.off.assign(n - 1, -1.0);
  DiscreteHamiltonian<double> h;
  h.matrix = t;
  const auto ev = eigenvalues_lowest(h, 5);
  for (int k = 1; k <= 5; ++k)
    CHECK(ev[static_cast<std::size_t>(k - 1)] ==
          doctest::Approx(2.0 - 2.0 * std::cos(k * M_PI / (n + 1))).epsilon(1e-13));
}

TEST_CASE("flat harmonic oscillator in a box") {
  const PowerSeries v{{2, 0.5}};
  const auto fine = build_flat_1d<double>(v, 10.0, 4095);
  const auto coarse = build_flat_1d<double>(v, 10.0, 2047);
  const auto ef = eigenvalues_lowest(fine, 3);
  const auto ec = eigenvalues_lowest(coarse, 3);
  for (int n = 0; n < 3; ++n) CHECK(std::abs(richardson(ef[n], ec[n]) - (n + 0.5)) <= 1e-8);
}

TEST_CASE("curved oscillator spectrum") {
  for (double alpha : {0.5, 2.0})
    for (double lambda : {0.05, 0.3})
      for (int n : {0, 3}) {
        const OscillatorSpec spec = oscillator(alpha, lambda, n);
        const double e = richardson(oscillator_level(spec, 2048), oscillator_level(spec, 1024));
        INFO("alpha=" << alpha << " lambda=" << lambda << " n=" << n);
        CHECK(std::abs(e - cf::derived::oscillator_e0(alpha, lambda, n)) <= 1e-6);
      }
}

TEST_CASE("discretization error is second order") {
  const OscillatorSpec spec = oscillator(1.0, 0.1, 1);
  const double exact = cf::derived::oscillator_e0(1.0, 0.1, 1);
  const double e1 = oscillator_level(spec, 512) - exact;
  const double e2 = oscillator_level(spec, 1024) - exact;
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.02));
}

TEST_CASE("curved coulomb spectrum") {
  for (int m : {1, 2})
    for (int n : {0, 1}) {
      const CoulombSpec spec = coulomb(0.1, n, m);
      const double e = richardson(coulomb_level(spec, 4096), coulomb_level(spec, 2048));
      INFO("n=" << n << " m=" << m);
      CHECK(std::abs(e - cf::derived::coulomb_e0(1.0, 0.1, n, m)) <= 1e-5);
    }
}

TEST_CASE("radial oscillator spectrum") {
  for (double lambda : {0.05, 0.1})
    for (int m : {1, 2}) {
      RadialOscillatorSpec spec;
      spec.m = m;
      spec.n = 1;
      spec.params = CurvedParams(lambda);
      auto level = [&](int g) {
        return eigenvalues_lowest(build_radial_oscillator<double>(spec, radial_oscillator_grid(spec, g - 1)), 2)[1];
      };
      INFO("lambda=" << lambda << " m=" << m);
      CHECK(std::abs(richardson(level(4096), level(2048)) - radial_oscillator_energy(spec)) <= 1e-5);
    }
}

TEST_CASE("eigenstates are normalized and solve the discrete problem") {
  const OscillatorSpec spec = oscillator(1.0, 0.1, 0);
  const auto states = eigen_lowest(build_oscillator_1d<double>(spec, 0.0, oscillator_grid(spec, 1023)), 2);
  REQUIRE(states.size() == 2);
  CHECK(states[0].energy < states[1].energy);
  CHECK(eigen_residual(states[0]) <= 1e-9);
  CHECK(expectation(states[0], PowerSeries{{0, 1.0}}) == doctest::Approx(1.0).epsilon(1e-12));
  // Parity: odd moments vanish for the even potential.
  CHECK(std::abs(moment_expectation(states[0], 1, false)) <= 1e-12);
}

TEST_CASE("moments agree with the recurrence") {
  const OscillatorSpec spec = oscillator(1.0, 0.1, 0);
  auto q02 = [&](int g) {
    const auto s = eigen_lowest(build_oscillator_1d<double>(spec, 0.0, oscillator_grid(spec, g - 1)), 1)[0];
    return moment_expectation(s, 2, true);
  };
  CHECK(std::abs(richardson(q02(2048), q02(1024)) - cf::derived::oscillator_q02(1.0, 0.1, 0)) <= 1e-7);
}

TEST_CASE("quantum virial and hypervirial residuals") {
  const OscillatorSpec spec = oscillator(1.0, 0.1, 0);
  std::vector<EigenState<double>> s;
  for (int g : {1024, 2048})
    s.push_back(eigen_lowest(build_oscillator_1d<double>(spec, 0.0, oscillator_grid(spec, g - 1)), 1)[0]);
  CHECK(std::abs(virial_residual_quantum(s[1])) <= 1e-5);
  CHECK(std::abs(virial_residual_quantum(s[0]) / virial_residual_quantum(s[1])) >= 3.5);
  for (int k = 1; k <= 6; ++k) {
    REQUIRE(hypervirial_admissible(s[1], k));
    const int order = hypervirial_order(s[1], k);
    const double r = richardson(hypervirial_residual_quantum(s[1], k), hypervirial_residual_quantum(s[0], k), order);
    INFO("k = " << k);
    CHECK(std::abs(r) <= 1e-6);
  }
}

TEST_CASE("coulomb moments that do not exist are rejected") {
  const CoulombSpec spec = coulomb(0.1, 0, 1);
  const auto s = eigen_lowest(build_coulomb_radial<double>(spec, 0.0, coulomb_grid(spec, 2047)), 1)[0];
  CHECK(hypervirial_admissible(s, 0));
  CHECK_FALSE(hypervirial_admissible(s, -1));
  CHECK_THROWS_AS(moment_expectation(s, -5, false), DivergentMomentError);
}

TEST_CASE("raw operator energy of the grid state") {
  // The untransformed operator on the reconstructed state is far more accurate than the grid eigenvalue.
  const OscillatorSpec spec = oscillator(1.0, 0.1, 1);
  const auto s = eigen_lowest(build_oscillator_1d<double>(spec, 0.0, oscillator_grid(spec, 2047)), 2)[1];
  const double exact = cf::derived::oscillator_e0(1.0, 0.1, 1);
  CHECK(std::abs(raw_operator_energy(s) - exact) <= 1e-9);
  CHECK(std::abs(s.energy - exact) <= 1e-5);
}

TEST_CASE("quadruple precision shift confirms the series to sixth order") {
  const OscillatorSpec spec = oscillator(1.0, 0.1, 0);
  const SeriesResult res = perturbation_series(spec, 6);
  const double b = 1e-2;
  const Extrapolated shift = oscillator_energy_shift(spec, b);
  double through4 = 0.0;
  for (int j = 1; j <= 4; ++j) through4 += std::pow(b, j) * res.series[j];
  const double e6 = std::pow(b, 6) * res.series[6];
  CHECK(shift.error <= 1e-3 * std::abs(e6));
  // The remainder after fourth order is the sixth-order term up to beta^8.
  CHECK((shift.value - through4) == doctest::Approx(e6).epsilon(0.01));
}

TEST_CASE("neville extrapolation removes even powers") {
  std::vector<double> hs{0.4, 0.2, 0.1, 0.05};
  std::vector<double> v;
  for (double h : hs) v.push_back(3.0 + 2.0 * h * h - 5.0 * h * h * h * h);
  const Extrapolated e = extrapolate_h2(hs, v);
  CHECK(e.value == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(richardson(4.0, 1.0) == 5.0);
  CHECK(richardson(4.0, 2.0, 1) == 6.0);
}

TEST_CASE("grid validation") {
  GridSpec g;
  g.npoints = 10;
  CHECK_THROWS_AS(g.validate(), ConfigError);
  g.npoints = 128;
  g.u_max = g.u_min;
  CHECK_THROWS_AS(g.validate(), ConfigError);
  RadialOscillatorSpec r;
  r.m = 0;
  CHECK_THROWS_AS(radial_oscillator_energy(r), ConfigError);
}
