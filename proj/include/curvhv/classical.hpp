#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvhv/core.hpp"

namespace curvhv {

// Central potential V(r) for classical orbits: -kappa/r + epsilon r + omega2 r^2 / 2.
struct ClassicalPotential {
  double kappa = 0.0;
  double epsilon = 0.0;
  double omega2 = 0.0;

  static ClassicalPotential coulomb(double kappa);
  static ClassicalPotential oscillator(double omega2);
  // Coulomb plus a linear term; orbits precess for epsilon != 0.
  static ClassicalPotential perturbed_coulomb(double kappa, double epsilon);

  double value(double r) const;
  double derivative(double r) const;
  // Parts without the 1/r term.
  double regular_value(double r) const;
  double regular_derivative(double r) const;
  bool singular() const { return kappa != 0.0; }
  void validate() const;
  std::string describe() const;
};

// Initial condition in projected polar coordinates. A negative r is allowed for
// radial orbits through a regular centre and means the opposite ray.
struct OrbitState {
  double r = 1.0;
  double theta = 0.0;
  double rdot = 0.0;
  double thetadot = 0.0;
};

OrbitState chart_state(double chi, double theta, double chidot, double thetadot, const CurvedParams& params);
// Uniform circular motion at radius r: thetadot from the centripetal balance.
OrbitState circular_state(const ClassicalPotential& v, double r, const CurvedParams& params);

struct OrbitSample {
  double t = 0.0;
  double chi = 0.0;  // zero when lambda = 0; r carries the position then
  double theta = 0.0;
  double chidot = 0.0;
  double thetadot = 0.0;
  double r = 0.0;
  double rdot = 0.0;
  double energy = 0.0;
  double angular_momentum = 0.0;
  // Regularized orbits only: u = z^2 with u = R chi the arc length, w = dz/ds, dt/ds = z^2.
  double z = 0.0;
  double w = 0.0;
  double dtds = 1.0;
};

struct IntegrationOptions {
  double tmax = 200.0;
  double tol = 1e-12;
  int samples = 4096;
  bool detect_period = true;
  int max_returns = 6;
  // A return closer than this to the initial phase point counts as closure.
  double closure_tol = 1e-6;
};

struct SphericalOrbit {
  enum class Mode {
    Polar,        // (chi, theta) in time
    Radial,       // theta fixed, chi signed through a regular centre
    Regularized,  // theta fixed, Levi-Civita time through the 1/r centre
  };
  Mode mode = Mode::Polar;
  CurvedParams params;
  ClassicalPotential potential;
  OrbitState initial;
  double energy = 0.0;            // E_s at t = 0
  double angular_momentum = 0.0;  // L_s at t = 0
  // Samples are uniform in the integration variable (t, or s when regularized)
  // and span exactly one period when one was detected, otherwise [0, tmax].
  std::vector<OrbitSample> samples;
  std::optional<double> period;
  std::optional<double> radial_period;
  bool closed = false;
  // Smallest phase-space distance to the initial state over the detected returns.
  double return_distance = 0.0;
  int returns_to_close = 0;
  double best_period_guess = 0.0;
};

SphericalOrbit integrate_sphere(const ClassicalPotential& v, const OrbitState& init, const CurvedParams& params,
                                const IntegrationOptions& options = {});

// max |E_s(t) - E_s(0)| / |E_s(0)|; for regularized orbits the regularized energy
// constraint 2w^2 - z^2 (E - V) is used, scaled by max 2w^2.
double energy_drift(const SphericalOrbit& orbit);
// max |L_s(t) - L_s(0)| / max(|L_s(0)|, 1).
double angular_momentum_drift(const SphericalOrbit& orbit);
// max |r(t) - r(0)|.
double radius_variation(const SphericalOrbit& orbit);

// max |L^2 (r^-4 (dr/dtheta)^2 + r^-2) / 2 + V(r) - (E - lambda L^2 / 2)| over the samples.
double orbit_equation_residual(const SphericalOrbit& orbit);

struct VirialAverages {
  double period = 0.0;
  double g_t_radial = 0.0;        // <(1 + lambda r^2) T_r>
  double t_angular = 0.0;         // <T_theta>
  double g_r_dv = 0.0;            // <(1 + lambda r^2) r V'(r)>
  double g_pi_squared = 0.0;      // <(1 + lambda r^2)(2T - lambda L^2)>
  double residual_general = 0.0;  // 2<g T_r> + 2<T_theta> - <g r V'>
  double residual_equivalent = 0.0;  // <g (2T - lambda L^2)> - <g r V'>
  double pointwise_identity = 0.0;   // max |g (2T - lambda L^2) - 2 g T_r - 2 T_theta|
};

// Trapezoid averages over the sampled period. Throws PeriodNotFoundError if none was detected.
VirialAverages virial_time_averages(const SphericalOrbit& orbit);

struct FlatSample {
  double t = 0.0;
  double r = 0.0;
  double theta = 0.0;
  double rdot = 0.0;
  double thetadot = 0.0;
  double energy = 0.0;
  double angular_momentum = 0.0;
};

struct FlatOrbit {
  ClassicalPotential potential;
  double energy = 0.0;
  double angular_momentum = 0.0;
  std::vector<FlatSample> samples;
};

struct CorrespondenceReport {
  FlatOrbit flat;
  // Sup over matched angles of |r_s - r_p|, which bounds the Hausdorff distance of the paths.
  double hausdorff = 0.0;
  // max |v_s - (1 + lambda r^2) v_p| with v = (rdot, r thetadot).
  double velocity_deviation = 0.0;
  double period_sphere = 0.0;
  double period_flat = 0.0;
  double period_ratio = 0.0;
  double flat_energy_drift = 0.0;
};

// Integrates H = p^2/2 + V with E_p = E_s - lambda L_s^2 / 2 and L_p = L_s from the
// orbit's initial point, sampled at the orbit's angles. Requires L_s != 0.
CorrespondenceReport flat_correspondence(const SphericalOrbit& orbit, double tol = 1e-12);

}  // namespace curvhv
