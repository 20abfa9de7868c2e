#include <doctest.h>

#include <cmath>

#include "curvhv/classical.hpp"
#include "curvhv/error.hpp"

using namespace curvhv;

namespace {

const OrbitState kGeneric{1.0, 0.0, 0.3, 0.8};

ClassicalPotential potential_named(const std::string& name) {
  return name == "coulomb" ? ClassicalPotential::coulomb(1.0) : ClassicalPotential::oscillator(1.0);
}

}  // namespace

TEST_CASE("potential values") {
  const ClassicalPotential v = ClassicalPotential::perturbed_coulomb(2.0, 0.1);
  CHECK(v.value(2.0) == doctest::Approx(-1.0 + 0.2));
  CHECK(v.derivative(2.0) == doctest::Approx(0.5 + 0.1));
  CHECK(v.regular_value(2.0) == doctest::Approx(0.2));
  CHECK(v.singular());
  CHECK_FALSE(ClassicalPotential::oscillator(1.0).singular());
  CHECK(ClassicalPotential::oscillator(4.0).derivative(0.5) == doctest::Approx(2.0));
  CHECK_THROWS_AS(ClassicalPotential::oscillator(-1.0).validate(), ConfigError);
  CHECK_THROWS_AS(ClassicalPotential::coulomb(-1.0).validate(), ConfigError);
}

TEST_CASE("chart state from spherical angles") {
  const CurvedParams p(0.25);
  const OrbitState s = chart_state(0.5, 1.0, 0.2, 0.3, p);
  CHECK(s.r == doctest::Approx(2.0 * std::tan(0.5)));
  CHECK(s.rdot == doctest::Approx(2.0 * 0.2 / (std::cos(0.5) * std::cos(0.5))));
  CHECK(s.theta == 1.0);
  CHECK(s.thetadot == 0.3);
}

TEST_CASE("conservation along generic orbits") {
  for (const char* name : {"coulomb", "oscillator"})
    for (double lambda : {0.0, 0.05, 0.2}) {
      const SphericalOrbit o = integrate_sphere(potential_named(name), kGeneric, CurvedParams(lambda));
      INFO(name << " lambda=" << lambda);
      CHECK(o.mode == SphericalOrbit::Mode::Polar);
      CHECK(energy_drift(o) <= 1e-10);
      CHECK(angular_momentum_drift(o) <= 1e-10);
      CHECK(orbit_equation_residual(o) <= 1e-9);
      REQUIRE(o.period);
      CHECK(o.closed);
      CHECK(o.return_distance <= 1e-8);
    }
}

TEST_CASE("closure needs one radial period for coulomb and two for the oscillator") {
  const CurvedParams p(0.1);
  const SphericalOrbit c = integrate_sphere(ClassicalPotential::coulomb(1.0), kGeneric, p);
  const SphericalOrbit h = integrate_sphere(ClassicalPotential::oscillator(1.0), kGeneric, p);
  CHECK(c.returns_to_close == 1);
  CHECK(h.returns_to_close == 2);
  REQUIRE(c.radial_period);
  CHECK(*c.period == doctest::Approx(*c.radial_period).epsilon(1e-9));
}

TEST_CASE("flat kepler period") {
  // E = -1/(2a), T = 2 pi a^{3/2}.
  const SphericalOrbit o = integrate_sphere(ClassicalPotential::coulomb(1.0), kGeneric, CurvedParams(0.0));
  const double a = -1.0 / (2.0 * o.energy);
  REQUIRE(o.period);
  CHECK(*o.period == doctest::Approx(2.0 * M_PI * std::pow(a, 1.5)).epsilon(1e-9));
}

TEST_CASE("circular orbits keep their radius") {
  for (const char* name : {"coulomb", "oscillator"}) {
    const CurvedParams p(0.1);
    const ClassicalPotential v = potential_named(name);
    const SphericalOrbit o = integrate_sphere(v, circular_state(v, 1.5, p), p);
    INFO(name);
    CHECK(radius_variation(o) <= 1e-9);
    REQUIRE(o.period);
    CHECK(*o.period == doctest::Approx(2.0 * M_PI / o.initial.thetadot).epsilon(1e-9));
  }
}

TEST_CASE("radial orbits through the centre") {
  const CurvedParams p(0.1);
  const SphericalOrbit h = integrate_sphere(ClassicalPotential::oscillator(1.0), {1.0, 0.0, 0.0, 0.0}, p);
  CHECK(h.mode == SphericalOrbit::Mode::Radial);
  REQUIRE(h.period);
  CHECK(energy_drift(h) <= 1e-10);
  const VirialAverages av = virial_time_averages(h);
  CHECK(std::abs(av.residual_general) <= 1e-8);

  const SphericalOrbit c = integrate_sphere(ClassicalPotential::coulomb(1.0), {1.0, 0.0, 0.0, 0.0}, p);
  CHECK(c.mode == SphericalOrbit::Mode::Regularized);
  REQUIRE(c.period);
  CHECK(energy_drift(c) <= 1e-10);
  const VirialAverages ac = virial_time_averages(c);
  CHECK(std::abs(ac.residual_general) <= 1e-8);
  CHECK(std::abs(ac.residual_equivalent) <= 1e-8);
  CHECK_THROWS_AS(orbit_equation_residual(c), DomainError);
  CHECK_THROWS_AS(flat_correspondence(c), DomainError);
}

TEST_CASE("virial forms on generic orbits") {
  for (const char* name : {"coulomb", "oscillator"})
    for (double lambda : {0.0, 0.05, 0.2}) {
      const SphericalOrbit o = integrate_sphere(potential_named(name), kGeneric, CurvedParams(lambda));
      const VirialAverages av = virial_time_averages(o);
      INFO(name << " lambda=" << lambda);
      CHECK(std::abs(av.residual_general) <= 1e-9);
      CHECK(std::abs(av.residual_equivalent) <= 1e-9);
      CHECK(av.pointwise_identity <= 1e-10);
    }
}

TEST_CASE("precessing orbit does not close") {
  const SphericalOrbit o =
      integrate_sphere(ClassicalPotential::perturbed_coulomb(1.0, 0.05), kGeneric, CurvedParams(0.1));
  CHECK_FALSE(o.closed);
  CHECK(o.return_distance > 1e-3);
  CHECK(o.radial_period);
}

TEST_CASE("time reversal retraces the orbit") {
  const CurvedParams p(0.1);
  const ClassicalPotential v = ClassicalPotential::coulomb(1.0);
  IntegrationOptions opt;
  opt.samples = 257;
  const SphericalOrbit fwd = integrate_sphere(v, kGeneric, p, opt);
  const SphericalOrbit rev = integrate_sphere(v, {kGeneric.r, kGeneric.theta, -kGeneric.rdot, -kGeneric.thetadot}, p, opt);
  REQUIRE(fwd.samples.size() == rev.samples.size());
  const std::size_t n = fwd.samples.size();
  for (std::size_t i = 0; i < n; i += 16) CHECK(std::abs(fwd.samples[i].r - rev.samples[n - 1 - i].r) <= 1e-8);
}

TEST_CASE("flat correspondence") {
  for (const char* name : {"coulomb", "oscillator"})
    for (double lambda : {0.05, 0.2}) {
      const CurvedParams p(lambda);
      const SphericalOrbit o = integrate_sphere(potential_named(name), kGeneric, p);
      const CorrespondenceReport c = flat_correspondence(o);
      INFO(name << " lambda=" << lambda);
      CHECK(c.hausdorff <= 1e-8);
      CHECK(c.velocity_deviation <= 1e-8);
      CHECK(c.flat_energy_drift <= 1e-10);
      CHECK(c.flat.energy == doctest::Approx(o.energy - 0.5 * lambda * o.angular_momentum * o.angular_momentum));
    }
}

TEST_CASE("unbound orbits leave the chart") {
  // Energy above the equator value of the Coulomb potential.
  CHECK_THROWS_AS(integrate_sphere(ClassicalPotential::coulomb(1.0), {1.0, 0.0, 3.0, 0.5}, CurvedParams(0.1)),
                  ChartBoundaryError);
}

TEST_CASE("short integration finds no period") {
  IntegrationOptions opt;
  opt.tmax = 0.5;
  const SphericalOrbit o = integrate_sphere(ClassicalPotential::coulomb(1.0), kGeneric, CurvedParams(0.1), opt);
  CHECK_FALSE(o.period);
  CHECK_THROWS_AS(virial_time_averages(o), PeriodNotFoundError);
}
