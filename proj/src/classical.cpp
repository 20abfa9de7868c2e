#include "curvhv/classical.hpp"

#include <algorithm>
#include <array>
#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "curvhv/error.hpp"

namespace curvhv {

namespace odeint = boost::numeric::odeint;

namespace {

using State = std::array<double, 5>;
using Stepper = odeint::runge_kutta_fehlberg78<State>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Geometry of the meridian in terms of the arc length u = R chi from the pole.
struct Meridian {
  double lambda = 0.0;
  double sl = 0.0;

  explicit Meridian(const CurvedParams& p) : lambda(p.lambda()), sl(p.inverse_radius()) {}

  double r(double u) const { return sl > 0.0 ? std::tan(sl * u) / sl : u; }
  double u(double r) const { return sl > 0.0 ? std::atan(sl * r) / sl : r; }
  double s(double u) const { return sl > 0.0 ? std::sin(sl * u) / sl : u; }
  double c(double u) const { return std::cos(sl * u); }
  double g(double u) const {
    const double cc = c(u);
    return 1.0 / (cc * cc);
  }
  double chi(double u) const { return sl * u; }
  // u / r, finite at the pole.
  double u_over_r(double u) const {
    const double a = sl * u;
    if (std::abs(a) < 1e-4) return 1.0 - a * a / 3.0;
    return a / std::tan(a);
  }
  // (r - u g) / r^2, the regular remainder of the 1/r force in Levi-Civita time.
  double coulomb_remainder(double u) const {
    const double a = sl * u;
    if (std::abs(a) < 1e-3) return -lambda * u * (2.0 / 3.0 + 4.0 / 45.0 * a * a);
    const double sn = std::sin(a);
    return sl * (sn * std::cos(a) - a) / (sn * sn);
  }
  void check(double u) const {
    if (sl > 0.0 && std::abs(sl * u) >= std::numbers::pi / 2 - 1e-9)
      throw ChartBoundaryError("orbit left the hemisphere covered by the gnomonic chart");
  }
};

struct Dynamics {
  SphericalOrbit::Mode mode;
  Meridian geo;
  ClassicalPotential v;
  double energy;

  // Polar and Radial: x = (u, theta, udot, thetadot, t) in time.
  // Regularized: x = (z, theta, w, 0, t) in s with u = z^2, dt/ds = z^2.
  void operator()(const State& x, State& dx, double) const {
    if (mode == SphericalOrbit::Mode::Regularized) {
      const double z = x[0], w = x[2];
      const double u = z * z;
      const double r = geo.r(u);
      const double g = geo.g(u);
      dx[0] = w;
      dx[1] = 0.0;
      dx[2] = 0.5 * (z * (energy - v.regular_value(r)) - z * u * v.regular_derivative(r) * g) +
              0.5 * v.kappa * z * geo.coulomb_remainder(u);
      dx[3] = 0.0;
      dx[4] = u;
      return;
    }
    const double u = x[0], ud = x[2], td = x[3];
    const double s = geo.s(u), c = geo.c(u);
    const double r = geo.r(u);
    dx[0] = ud;
    dx[1] = td;
    dx[2] = s * c * td * td - v.derivative(r) / (c * c);
    dx[3] = td == 0.0 ? 0.0 : -2.0 * (c / s) * ud * td;
    dx[4] = 1.0;
  }
};

OrbitSample make_sample(const Dynamics& d, const State& x) {
  const Meridian& geo = d.geo;
  OrbitSample out;
  out.t = x[4];
  out.theta = x[1];
  if (d.mode == SphericalOrbit::Mode::Regularized) {
    const double z = x[0], w = x[2];
    const double u = z * z;
    out.z = z;
    out.w = w;
    out.dtds = u;
    const double ud = 2.0 * w / z;
    out.r = geo.r(u);
    out.chi = geo.chi(u);
    out.chidot = geo.sl * ud;
    out.rdot = geo.g(u) * ud;
    out.thetadot = 0.0;
    out.angular_momentum = 0.0;
    // z^2 V with the 1/r part written regularly.
    const double z2v = -d.v.kappa * geo.u_over_r(u) + u * d.v.regular_value(out.r);
    out.energy = (2.0 * w * w + z2v) / u;
    return out;
  }
  const double u = x[0], ud = x[2], td = x[3];
  const double s = geo.s(u);
  out.r = geo.r(u);
  out.chi = geo.chi(u);
  out.chidot = geo.sl * ud;
  out.rdot = geo.g(u) * ud;
  out.thetadot = td;
  out.angular_momentum = s * s * td;
  out.energy = 0.5 * ud * ud + 0.5 * s * s * td * td + d.v.value(out.r);
  return out;
}

// Phase-plane coordinates used for returns: (u, udot) in time, (u, z w) when regularized.
std::array<double, 2> phase(const Dynamics& d, const State& x) {
  if (d.mode == SphericalOrbit::Mode::Regularized) return {x[0] * x[0], x[0] * x[2]};
  return {x[0], x[2]};
}

std::array<double, 2> phase_rate(const Dynamics& d, const State& x) {
  State dx{};
  d(x, dx, 0.0);
  if (d.mode == SphericalOrbit::Mode::Regularized) return {2.0 * x[0] * x[2], x[2] * x[2] + x[0] * dx[2]};
  return {dx[0], dx[2]};
}

double return_distance(const Dynamics& d, const State& x0, const State& x) {
  const auto p0 = phase(d, x0);
  const auto p = phase(d, x);
  double s = (p[0] - p0[0]) * (p[0] - p0[0]) + (p[1] - p0[1]) * (p[1] - p0[1]);
  if (d.mode == SphericalOrbit::Mode::Polar) {
    const double dth = std::remainder(x[1] - x0[1], kTwoPi);
    s += dth * dth + (x[3] - x0[3]) * (x[3] - x0[3]);
  }
  return std::sqrt(s);
}

auto make_stepper(double tol) { return odeint::make_controlled(tol, tol, Stepper()); }

// Advances x from sigma0 to sigma1 adaptively.
State advance(const Dynamics& d, State x, double sigma0, double sigma1, double tol, double dt) {
  if (sigma1 == sigma0) return x;
  auto stepper = make_stepper(tol);
  odeint::integrate_adaptive(stepper, d, x, sigma0, sigma1, std::copysign(std::min(dt, std::abs(sigma1 - sigma0)), sigma1 - sigma0));
  return x;
}

double refine_root(const std::function<double(double)>& f, double a, double b, double fa, double fb) {
  boost::math::tools::eps_tolerance<double> tol(52);
  std::uintmax_t iters = 200;
  const auto bracket = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
  return 0.5 * (bracket.first + bracket.second);
}

}  // namespace

ClassicalPotential ClassicalPotential::coulomb(double kappa) {
  ClassicalPotential p;
  p.kappa = kappa;
  return p;
}

ClassicalPotential ClassicalPotential::oscillator(double omega2) {
  ClassicalPotential p;
  p.omega2 = omega2;
  return p;
}

ClassicalPotential ClassicalPotential::perturbed_coulomb(double kappa, double epsilon) {
  ClassicalPotential p;
  p.kappa = kappa;
  p.epsilon = epsilon;
  return p;
}

double ClassicalPotential::value(double r) const { return (kappa != 0.0 ? -kappa / r : 0.0) + regular_value(r); }

double ClassicalPotential::derivative(double r) const {
  return (kappa != 0.0 ? kappa / (r * r) : 0.0) + regular_derivative(r);
}

double ClassicalPotential::regular_value(double r) const { return epsilon * r + 0.5 * omega2 * r * r; }

double ClassicalPotential::regular_derivative(double r) const { return epsilon + omega2 * r; }

void ClassicalPotential::validate() const {
  if (!std::isfinite(kappa) || !std::isfinite(epsilon) || !std::isfinite(omega2))
    throw ConfigError("potential coefficients must be finite");
  if (kappa < 0.0 || omega2 < 0.0) throw ConfigError("kappa and omega^2 must be non-negative");
  if (kappa == 0.0 && omega2 == 0.0 && epsilon == 0.0) throw ConfigError("potential is identically zero");
}

std::string ClassicalPotential::describe() const {
  std::ostringstream out;
  bool first = true;
  auto term = [&](double c, const char* text) {
    if (c == 0.0) return;
    if (!first) out << " + ";
    out << c << text;
    first = false;
  };
  out << "V(r) = ";
  term(-kappa, "/r");
  term(epsilon, " r");
  term(0.5 * omega2, " r^2");
  if (first) out << "0";
  return out.str();
}

OrbitState chart_state(double chi, double theta, double chidot, double thetadot, const CurvedParams& params) {
  if (params.flat()) throw DomainError("chart angles need lambda > 0");
  if (!(std::abs(chi) < std::numbers::pi / 2)) throw DomainError("initial point outside the open hemisphere");
  const double c = std::cos(chi);
  return {params.radius() * std::tan(chi), theta, params.radius() * chidot / (c * c), thetadot};
}

OrbitState circular_state(const ClassicalPotential& v, double r, const CurvedParams& params) {
  v.validate();
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("circular orbit radius must be positive and finite");
  const double g = 1.0 + params.lambda() * r * r;
  const double w2 = v.derivative(r) * g * g / r;
  if (!(w2 > 0.0)) throw DomainError("no circular orbit: the force is not attractive at this radius");
  return {r, 0.0, 0.0, std::sqrt(w2)};
}

SphericalOrbit integrate_sphere(const ClassicalPotential& v, const OrbitState& init, const CurvedParams& params,
                                const IntegrationOptions& options) {
  v.validate();
  if (!(options.tmax > 0.0) || !(options.tol > 0.0) || options.samples < 16 || options.max_returns < 1)
    throw ConfigError("integration options: tmax, tol > 0, samples >= 16, max_returns >= 1");
  if (!std::isfinite(init.r) || !std::isfinite(init.rdot) || !std::isfinite(init.thetadot) ||
      !std::isfinite(init.theta))
    throw DomainError("initial state must be finite");

  SphericalOrbit orbit;
  orbit.params = params;
  orbit.potential = v;
  orbit.initial = init;
  if (init.thetadot != 0.0)
    orbit.mode = SphericalOrbit::Mode::Polar;
  else if (v.singular())
    orbit.mode = SphericalOrbit::Mode::Regularized;
  else
    orbit.mode = SphericalOrbit::Mode::Radial;
  if (orbit.mode != SphericalOrbit::Mode::Radial && !(init.r > 0.0))
    throw DomainError("initial radius must be positive unless the orbit is radial through a regular centre");
  if (init.r == 0.0 && init.rdot == 0.0) throw DomainError("initial state is the equilibrium at the centre");

  Meridian geo(params);
  const double u0 = geo.u(init.r);
  geo.check(u0);
  const double ud0 = init.rdot / geo.g(u0);
  const double s0 = geo.s(u0);
  orbit.energy = 0.5 * ud0 * ud0 + 0.5 * s0 * s0 * init.thetadot * init.thetadot + v.value(init.r);
  orbit.angular_momentum = s0 * s0 * init.thetadot;

  const Dynamics dyn{orbit.mode, geo, v, orbit.energy};
  State x0{};
  if (orbit.mode == SphericalOrbit::Mode::Regularized) {
    const double z0 = std::sqrt(u0);
    x0 = {z0, init.theta, 0.5 * z0 * ud0, 0.0, 0.0};
  } else {
    x0 = {u0, init.theta, ud0, init.thetadot, 0.0};
  }
  auto chart_check = [&](const State& x) {
    geo.check(orbit.mode == SphericalOrbit::Mode::Regularized ? x[0] * x[0] : x[0]);
  };

  // Section through the initial point. For circular motion the radial phase point is
  // stationary and the section counts full turns of theta instead.
  const auto p0 = phase(dyn, x0);
  const auto rate0 = phase_rate(dyn, x0);
  const double rate_norm = std::hypot(rate0[0], rate0[1]);
  const bool circular = orbit.mode == SphericalOrbit::Mode::Polar &&
                        rate_norm <= 1e-10 * (std::abs(p0[0]) + 1.0) * (std::abs(init.thetadot) + 1.0);
  int returns = 0;
  auto section = [&](const State& x) {
    if (circular) return std::copysign(1.0, init.thetadot) * (x[1] - x0[1]) - kTwoPi * (returns + 1);
    const auto p = phase(dyn, x);
    return ((p[0] - p0[0]) * rate0[0] + (p[1] - p0[1]) * rate0[1]) / rate_norm;
  };

  // Step through the orbit, bracketing upward crossings of the section.
  auto stepper = make_stepper(options.tol);
  State x = x0;
  double sigma = 0.0;
  double dt = 1e-3;
  double sec_prev = 0.0;
  std::vector<std::pair<double, double>> crossings;  // (sigma, t)
  std::vector<double> distances;
  std::vector<std::pair<double, double>> track;  // (t, distance) for the best-guess period
  double sigma_end = -1.0;
  long steps = 0;
  bool done = false;
  while (!done) {
    const State x_prev = x;
    const double sigma_prev = sigma;
    if (stepper.try_step(dyn, x, sigma, dt) != odeint::success) {
      if (++steps > 20'000'000) throw ConvergenceError("orbit integration exceeded the step budget");
      continue;
    }
    if (++steps > 20'000'000) throw ConvergenceError("orbit integration exceeded the step budget");
    chart_check(x);
    if (x[4] >= options.tmax) {
      // Locate t = tmax inside the step.
      if (orbit.mode == SphericalOrbit::Mode::Regularized) {
        auto f = [&](double s) { return advance(dyn, x_prev, sigma_prev, s, options.tol, dt)[4] - options.tmax; };
        sigma_end = refine_root(f, sigma_prev, sigma, x_prev[4] - options.tmax, x[4] - options.tmax);
      } else {
        sigma_end = options.tmax;
      }
      done = true;
    }
    track.emplace_back(x[4], return_distance(dyn, x0, x));
    const double sec = section(x);
    if (options.detect_period && sec_prev < 0.0 && sec >= 0.0) {
      auto f = [&](double s) { return section(advance(dyn, x_prev, sigma_prev, s, options.tol, dt)); };
      const double sc = refine_root(f, sigma_prev, sigma, sec_prev, sec);
      if (!done || sc <= sigma_end) {
        const State xc = advance(dyn, x_prev, sigma_prev, sc, options.tol, dt);
        crossings.emplace_back(sc, xc[4]);
        distances.push_back(return_distance(dyn, x0, xc));
        ++returns;
        if (distances.back() < options.closure_tol || returns >= options.max_returns) done = true;
      }
    }
    sec_prev = circular ? section(x) : sec;
  }

  double sigma_period = -1.0;
  if (!crossings.empty()) {
    orbit.radial_period = crossings.front().second;
    const auto best = std::min_element(distances.begin(), distances.end());
    orbit.return_distance = *best;
    const auto k = static_cast<std::size_t>(best - distances.begin());
    orbit.closed = *best < options.closure_tol;
    orbit.returns_to_close = orbit.closed ? static_cast<int>(k) + 1 : 0;
    // Averages only need the radial phase to repeat, so an open orbit uses its first return.
    const auto& chosen = orbit.closed ? crossings[k] : crossings.front();
    sigma_period = chosen.first;
    orbit.period = chosen.second;
  } else if (!track.empty()) {
    // Best guess: the closest approach after the orbit has moved away from its start.
    double dmax = 0.0;
    for (const auto& e : track) dmax = std::max(dmax, e.second);
    std::size_t i = 0;
    while (i < track.size() && track[i].second < 0.5 * dmax) ++i;
    double best_t = track.back().first, best_d = track.back().second;
    for (; i < track.size(); ++i)
      if (track[i].second < best_d) {
        best_d = track[i].second;
        best_t = track[i].first;
      }
    orbit.best_period_guess = best_t;
    orbit.return_distance = best_d;
  }

  // Uniform samples over one period or the whole window.
  const double span = sigma_period > 0.0 ? sigma_period : sigma_end;
  const int m = options.samples;
  orbit.samples.reserve(static_cast<std::size_t>(m) + 1);
  State y = x0;
  orbit.samples.push_back(make_sample(dyn, y));
  double dt_sample = std::min(1e-3, span / m);
  for (int j = 1; j <= m; ++j) {
    const double a = span * (j - 1) / m, b = span * j / m;
    odeint::integrate_adaptive(stepper, dyn, y, a, b, dt_sample);
    chart_check(y);
    orbit.samples.push_back(make_sample(dyn, y));
  }
  if (orbit.period && orbit.samples.back().t != *orbit.period) orbit.period = orbit.samples.back().t;
  if (orbit.radial_period && !orbit.closed) orbit.radial_period = orbit.period;
  return orbit;
}

double energy_drift(const SphericalOrbit& orbit) {
  double worst = 0.0;
  if (orbit.mode == SphericalOrbit::Mode::Regularized) {
    const Meridian geo(orbit.params);
    double scale = 0.0;
    for (const auto& s : orbit.samples) {
      const double u = s.z * s.z;
      const double z2v = -orbit.potential.kappa * geo.u_over_r(u) + u * orbit.potential.regular_value(s.r);
      worst = std::max(worst, std::abs(2.0 * s.w * s.w + z2v - u * orbit.energy));
      scale = std::max(scale, 2.0 * s.w * s.w);
    }
    return scale > 0.0 ? worst / scale : worst;
  }
  for (const auto& s : orbit.samples) worst = std::max(worst, std::abs(s.energy - orbit.energy));
  return orbit.energy != 0.0 ? worst / std::abs(orbit.energy) : worst;
}

double angular_momentum_drift(const SphericalOrbit& orbit) {
  double worst = 0.0;
  for (const auto& s : orbit.samples) worst = std::max(worst, std::abs(s.angular_momentum - orbit.angular_momentum));
  return worst / std::max(std::abs(orbit.angular_momentum), 1.0);
}

double radius_variation(const SphericalOrbit& orbit) {
  double worst = 0.0;
  for (const auto& s : orbit.samples) worst = std::max(worst, std::abs(s.r - orbit.initial.r));
  return worst;
}

double orbit_equation_residual(const SphericalOrbit& orbit) {
  if (orbit.mode != SphericalOrbit::Mode::Polar || orbit.angular_momentum == 0.0)
    throw DomainError("orbit equation needs L != 0; check radial orbits with the virial averages");
  const double lam = orbit.params.lambda();
  const double l = orbit.angular_momentum;
  const double rhs = orbit.energy - 0.5 * lam * l * l;
  double worst = 0.0;
  for (const auto& s : orbit.samples) {
    const double drdtheta = s.rdot / s.thetadot;
    const double r2 = s.r * s.r;
    const double lhs = 0.5 * l * l * (drdtheta * drdtheta / (r2 * r2) + 1.0 / r2) + orbit.potential.value(s.r);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

VirialAverages virial_time_averages(const SphericalOrbit& orbit) {
  if (!orbit.period) {
    std::ostringstream msg;
    msg << "no period detected within the integration window; best guess " << orbit.best_period_guess;
    throw PeriodNotFoundError(msg.str(), orbit.best_period_guess);
  }
  const Meridian geo(orbit.params);
  const double lam = orbit.params.lambda();
  const auto& v = orbit.potential;
  const std::size_t n = orbit.samples.size();
  double wsum = 0.0, tr = 0.0, tth = 0.0, rdv = 0.0, pi2 = 0.0, pointwise = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = orbit.samples[i];
    const double wt = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    double f_tr, f_tth, f_rdv, f_pi2;
    if (orbit.mode == SphericalOrbit::Mode::Regularized) {
      // Integrands already carry the factor dt/ds.
      const double u = s.z * s.z;
      const double g = geo.g(u);
      f_tr = 2.0 * g * s.w * s.w;
      f_tth = 0.0;
      f_rdv = g * (v.kappa * geo.u_over_r(u) + u * s.r * v.regular_derivative(s.r));
      f_pi2 = 2.0 * f_tr;
      pointwise = std::max(pointwise, std::abs(f_pi2 - 2.0 * f_tr - 2.0 * f_tth) / std::max(s.dtds, 1e-300));
    } else {
      const double u = geo.u(s.r);
      const double g = 1.0 + lam * s.r * s.r;
      const double ud = s.rdot / g;
      const double sn = geo.s(u);
      const double t_r = 0.5 * ud * ud;
      const double t_th = 0.5 * sn * sn * s.thetadot * s.thetadot;
      const double l = s.angular_momentum;
      f_tr = g * t_r;
      f_tth = t_th;
      f_rdv = g * s.r * v.derivative(s.r);
      f_pi2 = g * (2.0 * (t_r + t_th) - lam * l * l);
      pointwise = std::max(pointwise, std::abs(f_pi2 - 2.0 * f_tr - 2.0 * f_tth));
    }
    const double weight = orbit.mode == SphericalOrbit::Mode::Regularized ? wt : wt * s.dtds;
    wsum += wt * s.dtds;
    tr += weight * f_tr;
    tth += weight * f_tth;
    rdv += weight * f_rdv;
    pi2 += weight * f_pi2;
  }
  VirialAverages out;
  out.period = *orbit.period;
  out.g_t_radial = tr / wsum;
  out.t_angular = tth / wsum;
  out.g_r_dv = rdv / wsum;
  out.g_pi_squared = pi2 / wsum;
  out.residual_general = 2.0 * out.g_t_radial + 2.0 * out.t_angular - out.g_r_dv;
  out.residual_equivalent = out.g_pi_squared - out.g_r_dv;
  out.pointwise_identity = pointwise;
  return out;
}

CorrespondenceReport flat_correspondence(const SphericalOrbit& orbit, double tol) {
  if (orbit.mode != SphericalOrbit::Mode::Polar || orbit.angular_momentum == 0.0)
    throw DomainError("flat correspondence needs an orbit with L != 0");
  if (!orbit.period) {
    std::ostringstream msg;
    msg << "flat correspondence needs a periodic orbit; best guess " << orbit.best_period_guess;
    throw PeriodNotFoundError(msg.str(), orbit.best_period_guess);
  }
  const double lam = orbit.params.lambda();
  const double l = orbit.angular_momentum;
  const double al = std::abs(l);
  const double dir = l > 0.0 ? 1.0 : -1.0;
  const auto& v = orbit.potential;

  CorrespondenceReport rep;
  rep.flat.potential = v;
  rep.flat.energy = orbit.energy - 0.5 * lam * l * l;
  rep.flat.angular_momentum = l;

  const double r0 = orbit.initial.r;
  const double rd2 = 2.0 * (rep.flat.energy - v.value(r0)) - l * l / (r0 * r0);
  const double rd0 = orbit.initial.rdot == 0.0 ? 0.0 : std::copysign(std::sqrt(std::max(rd2, 0.0)), orbit.initial.rdot);

  // Flat motion with the swept angle phi = |theta - theta0| as the independent variable: x = (r, rdot, t).
  using FlatState = std::array<double, 3>;
  auto rhs = [&](const FlatState& x, FlatState& dx, double) {
    const double r = x[0];
    const double dtdphi = r * r / al;
    dx[0] = x[1] * dtdphi;
    dx[1] = (l * l / (r * r * r) - v.derivative(r)) * dtdphi;
    dx[2] = dtdphi;
  };
  std::vector<double> phis;
  phis.reserve(orbit.samples.size());
  for (const auto& s : orbit.samples) phis.push_back(dir * (s.theta - orbit.initial.theta));
  std::vector<FlatState> states;
  states.reserve(phis.size());
  FlatState x{r0, rd0, 0.0};
  auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_fehlberg78<FlatState>());
  odeint::integrate_times(stepper, rhs, x, phis.begin(), phis.end(), 1e-3,
                          [&](const FlatState& st, double) { states.push_back(st); });

  double e_worst = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& sp = orbit.samples[i];
    const auto& st = states[i];
    FlatSample f;
    f.t = st[2];
    f.r = st[0];
    f.theta = sp.theta;
    f.rdot = st[1];
    f.thetadot = l / (st[0] * st[0]);
    f.angular_momentum = f.r * f.r * f.thetadot;
    f.energy = 0.5 * (f.rdot * f.rdot + f.r * f.r * f.thetadot * f.thetadot) + v.value(f.r);
    e_worst = std::max(e_worst, std::abs(f.energy - rep.flat.energy));
    rep.flat.samples.push_back(f);

    const double g = 1.0 + lam * sp.r * sp.r;
    rep.hausdorff = std::max(rep.hausdorff, std::abs(sp.r - f.r));
    const double dv_r = sp.rdot - g * f.rdot;
    const double dv_t = sp.r * sp.thetadot - g * f.r * f.thetadot;
    rep.velocity_deviation = std::max(rep.velocity_deviation, std::hypot(dv_r, dv_t));
  }
  rep.flat_energy_drift = rep.flat.energy != 0.0 ? e_worst / std::abs(rep.flat.energy) : e_worst;
  rep.period_sphere = orbit.samples.back().t - orbit.samples.front().t;
  rep.period_flat = rep.flat.samples.back().t - rep.flat.samples.front().t;
  rep.period_ratio = rep.period_sphere / rep.period_flat;
  return rep;
}

}  // namespace curvhv
