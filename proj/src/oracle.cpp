#include "curvhv/oracle.hpp"

#include <algorithm>
#include <boost/multiprecision/float128.hpp>
#include <cmath>
#include <numbers>
#include <sstream>

#include "curvhv/error.hpp"

namespace curvhv {

using boost::multiprecision::float128;

namespace {

constexpr double kPi = std::numbers::pi;
// phi^2 at a truncation point is below exp(-kDecay).
constexpr double kDecay = 100.0;

double chart_half_width(double lambda) { return kPi / (2.0 * std::sqrt(lambda)); }

// Exponent b with b(b-1) = c: behaviour cos(chi)^b of phi at a c/(2 cos^2 chi) barrier.
double barrier_exponent(double c) { return 0.5 + std::sqrt(0.25 + c); }

// Angle at which cos(chi)^(2b) times a polynomial allowance drops below exp(-kDecay).
double decay_angle(double b, int n) {
  const double t = kDecay + 8.0 * n;
  return std::acos(std::exp(-t / (2.0 * b)));
}

double u_of_r(double r, double lambda) { return lambda > 0.0 ? std::atan(std::sqrt(lambda) * r) / std::sqrt(lambda) : r; }

// Largest |x| at which |beta| (|x|^l + lambda |x|^(l+2)) stays below a quarter of the
// oscillator term alpha x^2 / 2.
double perturbation_cut(const OscillatorSpec& spec, double beta) {
  if (beta == 0.0) return std::numeric_limits<double>::infinity();
  auto excess = [&](double x) {
    const double p = std::abs(beta) * (std::pow(x, spec.l) + spec.params.lambda() * std::pow(x, spec.l + 2));
    return p - 0.125 * spec.alpha * x * x;
  };
  double hi = 1.0;
  while (excess(hi) < 0.0 && hi < 1e12) hi *= 2.0;
  if (hi >= 1e12) return std::numeric_limits<double>::infinity();
  double lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) < 0.0 ? lo : hi) = mid;
  }
  return lo;
}

template <class Real>
Real ipow_signed(Real r, Real rinv, int p) {
  return p >= 0 ? ipow(r, p) : ipow(rinv, -p);
}

double term_value(double r, double rinv, int p) { return ipow_signed(r, rinv, p); }

template <class Real>
DiscreteHamiltonian<Real> assemble(double lambda, const GridSpec& grid, const PowerSeries& effective) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  grid.validate();
  DiscreteHamiltonian<Real> h;
  h.grid = grid;
  h.lambda = lambda;
  h.effective = effective;
  const int n = grid.npoints;
  const Real span = Real(grid.u_max) - Real(grid.u_min);
  const Real hh = span / Real(n + 1);
  const Real kin = Real(1) / (hh * hh);
  const Real sl = sqrt(Real(lambda));
  h.matrix.diag.resize(n);
  h.matrix.off.assign(n - 1, -kin / 2);
  h.u.resize(n);
  h.r.resize(n);
  h.rinv.resize(n);
  for (int i = 0; i < n; ++i) {
    const Real u = Real(grid.u_min) + Real(i + 1) * hh;
    Real r, rinv;
    if (lambda > 0.0) {
      const Real chi = sl * u;
      const Real c = cos(chi), s = sin(chi);
      r = s / (c * sl);
      rinv = sl * c / s;
    } else {
      r = u;
      rinv = Real(1) / u;
    }
    h.u[i] = static_cast<double>(u);
    h.r[i] = static_cast<double>(r);
    h.rinv[i] = static_cast<double>(rinv);
    Real w(0);
    for (const auto& t : effective.terms()) w += Real(t.coeff) * ipow_signed(r, rinv, t.power);
    h.matrix.diag[i] = kin + w;
  }
  if (!grid.dirichlet_left) h.matrix.diag.front() -= kin / 2;
  if (!grid.dirichlet_right) h.matrix.diag.back() -= kin / 2;
  return h;
}

void check_resolution(const GridSpec& grid, int n) {
  if (grid.npoints < 32 * (n + 1)) {
    std::ostringstream msg;
    msg << "grid of " << grid.npoints << " points cannot resolve level n=" << n << " (need at least " << 32 * (n + 1)
        << ")";
    throw ConfigError(msg.str());
  }
}

bool reaches(double u_end, double chart_end) { return std::abs(u_end) >= chart_end * (1.0 - 1e-12); }

// Interval [0, r_cut] or up to the equator if the cut would sit within two grid spacings of it.
GridSpec hemisphere_or_cut(double lambda, double r_cut, int npoints) {
  GridSpec g;
  g.npoints = npoints;
  g.u_min = 0.0;
  if (lambda == 0.0) {
    g.u_max = r_cut;
    return g;
  }
  const double end = chart_half_width(lambda);
  const double u_cut = u_of_r(r_cut, lambda);
  g.u_max = (end - u_cut < 2.0 * u_cut / (npoints + 1)) ? end : u_cut;
  return g;
}

struct TermCheck {
  bool integrable = true;
  bool constant_at_origin = false;
  std::string reason;
};

template <class Real>
TermCheck check_power(const DiscreteHamiltonian<Real>& h, int p) {
  TermCheck c;
  if (h.left.kind == EndBehaviour::Kind::Origin) {
    const double q = p + 2.0 * h.left.exponent;
    if (q <= -1.0) {
      c.integrable = false;
      c.reason = "diverges at the origin";
    }
    if (std::abs(q) < 1e-9) c.constant_at_origin = true;
  }
  for (const auto* e : {&h.left, &h.right})
    if (e->kind == EndBehaviour::Kind::Barrier && 2.0 * e->exponent - p <= -1.0) {
      c.integrable = false;
      c.reason = "diverges at the equator";
    }
  if (h.crosses_equator && p >= 1) {
    c.integrable = false;
    c.reason = "diverges where the state crosses the equator";
  }
  if (h.dimension == 1 && p < 0 && h.grid.u_min < 0.0 && h.grid.u_max > 0.0) {
    c.integrable = false;
    c.reason = "diverges at x = 0";
  }
  return c;
}

double midpoint_kinetic(const EigenState<double>& state) {
  const auto& h = *state.hamiltonian;
  const int n = static_cast<int>(h.size());
  const double hh = h.grid.h();
  const double sl = std::sqrt(h.lambda);
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double left = j == 0 ? (h.grid.dirichlet_left ? 0.0 : state.phi[0]) : state.phi[j - 1];
    const double right = j == n ? (h.grid.dirichlet_right ? 0.0 : state.phi[n - 1]) : state.phi[j];
    const double u = h.grid.u_min + (j + 0.5) * hh;
    const double c = std::cos(sl * u);
    const double g = h.lambda > 0.0 ? 1.0 / (c * c) : 1.0;
    const double d = (right - left) / hh;
    sum += g * d * d * hh;
  }
  return sum;
}

}  // namespace

void GridSpec::validate() const {
  if (npoints < 64) throw ConfigError("grid needs at least 64 interior points");
  if (!(u_max > u_min)) throw ConfigError("grid interval is empty");
}

void RadialOscillatorSpec::validate() const {
  if (!(omega2 > 0.0)) throw ConfigError("omega^2 must be positive");
  if (n < 0) throw ConfigError("radial quantum number n must be >= 0");
  if (m == 0) throw ConfigError("angular quantum number m must be nonzero");
}

double radial_oscillator_energy(const RadialOscillatorSpec& spec) {
  spec.validate();
  const double lambda = spec.params.lambda();
  const double am = std::abs(spec.m);
  if (lambda == 0.0) return std::sqrt(spec.omega2) * (2.0 * spec.n + am + 1.0);
  const double b = barrier_exponent(spec.omega2 / (lambda * lambda));
  const double s = am + 0.5 + b + 2.0 * spec.n;
  return 0.5 * lambda * s * s - spec.omega2 / (2.0 * lambda) - lambda / 8.0;
}

GridSpec oscillator_grid(const OscillatorSpec& spec, int npoints, double beta) {
  spec.validate();
  const double lambda = spec.params.lambda();
  GridSpec g;
  g.npoints = npoints;
  double x_cut;
  if (lambda > 0.0) {
    const double b = barrier_exponent(spec.alpha / (lambda * lambda));
    x_cut = std::tan(decay_angle(b, spec.n)) / std::sqrt(lambda);
  } else {
    x_cut = std::sqrt((kDecay + 8.0 * spec.n) / std::sqrt(spec.alpha));
  }
  const GridSpec half = hemisphere_or_cut(lambda, x_cut, npoints);
  g.u_min = -half.u_max;
  g.u_max = half.u_max;
  const double x_pert = perturbation_cut(spec, beta);
  const double u_pert = u_of_r(x_pert, spec.params.lambda());
  if (u_pert < g.u_max) {
    g.u_min = -u_pert;
    g.u_max = u_pert;
  }
  return g;
}

GridSpec coulomb_grid(const CoulombSpec& spec, int npoints) {
  spec.validate();
  const double lambda = spec.params.lambda();
  const double nn = spec.n + std::abs(spec.m) + 0.5;
  const double r_cut = nn * (0.5 * kDecay + 2.0 * nn) / spec.kappa;
  GridSpec g;
  g.npoints = npoints;
  if (lambda == 0.0) {
    g.u_max = r_cut;
    return g;
  }
  const double end = chart_half_width(lambda);
  const double u_cut = u_of_r(r_cut, lambda);
  // The state reaches the equator: use the whole meridian from pole to pole.
  g.u_max = u_cut < 0.9 * end ? u_cut : 2.0 * end;
  return g;
}

GridSpec radial_oscillator_grid(const RadialOscillatorSpec& spec, int npoints) {
  spec.validate();
  const double lambda = spec.params.lambda();
  const int level = 2 * spec.n + std::abs(spec.m);
  double r_cut;
  if (lambda > 0.0) {
    const double b = barrier_exponent(spec.omega2 / (lambda * lambda));
    r_cut = std::tan(decay_angle(b, level)) / std::sqrt(lambda);
  } else {
    r_cut = std::sqrt((kDecay + 8.0 * level) / std::sqrt(spec.omega2));
  }
  return hemisphere_or_cut(lambda, r_cut, npoints);
}

template <class Real>
DiscreteHamiltonian<Real> build_oscillator_1d(const OscillatorSpec& spec, double beta, const GridSpec& grid) {
  spec.validate();
  const double lambda = spec.params.lambda();
  if (lambda <= 0.0) throw ConfigError("curved oscillator builder needs lambda > 0; use build_flat_1d");
  check_resolution(grid, spec.n);
  const double end = chart_half_width(lambda);
  if (grid.u_min < -end * (1.0 + 1e-12) || grid.u_max > end * (1.0 + 1e-12))
    throw DomainError("oscillator grid extends beyond the gnomonic chart");
  const PowerSeries v = oscillator_potential(spec, beta);
  auto h = assemble<Real>(lambda, grid, v);
  h.physical = v;
  h.dimension = 1;
  const double b = barrier_exponent(spec.alpha / (lambda * lambda));
  for (auto [e, u_end] : {std::pair{&h.left, grid.u_min}, std::pair{&h.right, grid.u_max}}) {
    if (!reaches(u_end, end)) continue;
    if (beta != 0.0) {
      const bool bounded = beta > 0.0 && (spec.l % 2 == 0);
      if (!bounded) throw DomainError("perturbed potential is unbounded below at the equator; use a truncated grid");
      e->kind = EndBehaviour::Kind::Barrier;
      e->exponent = 1e9;  // faster than any power
    } else {
      e->kind = EndBehaviour::Kind::Barrier;
      e->exponent = b;
    }
  }
  return h;
}

template <class Real>
DiscreteHamiltonian<Real> build_coulomb_radial(const CoulombSpec& spec, double beta, const GridSpec& grid) {
  spec.validate();
  const double lambda = spec.params.lambda();
  if (lambda <= 0.0) throw ConfigError("curved Coulomb builder needs lambda > 0");
  check_resolution(grid, spec.n);
  const double end = chart_half_width(lambda);
  if (grid.u_min != 0.0) throw DomainError("radial grid must start at the origin");
  if (grid.u_max > 2.0 * end * (1.0 + 1e-12)) throw DomainError("radial grid extends beyond the antipode");
  auto h = assemble<Real>(lambda, grid, coulomb_effective_potential(spec, beta));
  PowerSeries v{{-1, -spec.kappa}};
  v.add(spec.l, beta).add(spec.l + 2, beta * lambda);
  h.physical = v;
  h.angular = PowerSeries{{0, -lambda / 4.0}, {-2, 0.5 * (spec.mu() - 0.25)}};
  h.dimension = 2;
  h.m = spec.m;
  h.left = {EndBehaviour::Kind::Origin, std::abs(spec.m) + 0.5};
  h.crosses_equator = grid.u_max > end * (1.0 + 1e-12);
  if (reaches(grid.u_max, end) && !h.crosses_equator)
    h.right = {EndBehaviour::Kind::Cut, 0.0};  // Dirichlet imposed at the equator
  return h;
}

template <class Real>
DiscreteHamiltonian<Real> build_radial_oscillator(const RadialOscillatorSpec& spec, const GridSpec& grid) {
  spec.validate();
  const double lambda = spec.params.lambda();
  if (lambda <= 0.0) throw ConfigError("curved oscillator builder needs lambda > 0");
  check_resolution(grid, spec.n);
  const double end = chart_half_width(lambda);
  if (grid.u_min != 0.0) throw DomainError("radial grid must start at the origin");
  if (grid.u_max > end * (1.0 + 1e-12)) throw DomainError("radial oscillator grid extends beyond the hemisphere");
  const double mu = static_cast<double>(spec.m) * spec.m;
  PowerSeries w{{2, 0.5 * spec.omega2}, {0, 0.5 * (mu - 0.5) * lambda}, {-2, 0.5 * (mu - 0.25)}};
  auto h = assemble<Real>(lambda, grid, w);
  h.physical = PowerSeries{{2, 0.5 * spec.omega2}};
  h.angular = PowerSeries{{0, -lambda / 4.0}, {-2, 0.5 * (mu - 0.25)}};
  h.dimension = 2;
  h.m = spec.m;
  h.left = {EndBehaviour::Kind::Origin, std::abs(spec.m) + 0.5};
  if (reaches(grid.u_max, end)) h.right = {EndBehaviour::Kind::Barrier, barrier_exponent(spec.omega2 / (lambda * lambda))};
  return h;
}

template <class Real>
DiscreteHamiltonian<Real> build_flat_1d(const PowerSeries& potential, double x_max, int npoints) {
  GridSpec g;
  g.npoints = npoints;
  g.u_min = -x_max;
  g.u_max = x_max;
  auto h = assemble<Real>(0.0, g, potential);
  h.physical = potential;
  h.dimension = 1;
  return h;
}

template <class Real>
std::vector<Real> eigenvalues_lowest(const DiscreteHamiltonian<Real>& h, int count) {
  if (count < 1 || count > static_cast<int>(h.size()) / 4) {
    std::ostringstream msg;
    msg << "requested " << count << " eigenvalues from a grid of " << h.size() << " points (limit npoints/4)";
    throw ConfigError(msg.str());
  }
  return lowest_eigenvalues(h.matrix, static_cast<std::size_t>(count));
}

template <class Real>
std::vector<EigenState<Real>> eigen_lowest(const DiscreteHamiltonian<Real>& h, int count) {
  using std::sqrt;
  const std::vector<Real> evs = eigenvalues_lowest(h, std::min(count + 1, static_cast<int>(h.size()) / 4));
  auto shared = std::make_shared<const DiscreteHamiltonian<Real>>(h);
  const Real scale = sqrt(Real(h.grid.h()));
  std::vector<EigenState<Real>> out;
  for (int i = 0; i < count; ++i) {
    Real gap = std::numeric_limits<Real>::max();
    if (i > 0) gap = std::min(gap, Real(evs[i] - evs[i - 1]));
    if (i + 1 < static_cast<int>(evs.size())) gap = std::min(gap, Real(evs[i + 1] - evs[i]));
    EigenState<Real> s;
    s.energy = evs[i];
    s.index = i;
    s.phi = inverse_iteration(h.matrix, evs[i], gap);
    for (auto& v : s.phi) v /= scale;
    s.hamiltonian = shared;
    out.push_back(std::move(s));
  }
  return out;
}

double eigen_residual(const EigenState<double>& state) {
  const auto& m = state.hamiltonian->matrix;
  const std::vector<double> hv = m.apply(state.phi);
  double res = 0.0, nrm = 0.0;
  for (std::size_t i = 0; i < hv.size(); ++i) {
    res = std::max(res, std::abs(hv[i] - state.energy * state.phi[i]));
    nrm = std::max(nrm, std::abs(state.phi[i]));
  }
  return res / nrm;
}

double expectation(const EigenState<double>& state, const PowerSeries& f) {
  const auto& h = *state.hamiltonian;
  const double hh = h.grid.h();
  double total = 0.0;
  for (const auto& t : f.terms()) {
    const TermCheck c = check_power(h, t.power);
    if (!c.integrable) {
      std::ostringstream msg;
      msg << "expectation of r^" << t.power << " " << c.reason;
      throw DivergentMomentError(msg.str());
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i)
      sum += term_value(h.r[i], h.rinv[i], t.power) * state.phi[i] * state.phi[i];
    sum *= hh;
    if (c.constant_at_origin) {
      // Integrand tends to a nonzero constant at u = 0; add its trapezoid end weight.
      const double f1 = term_value(h.r[0], h.rinv[0], t.power) * state.phi[0] * state.phi[0];
      const double f2 = term_value(h.r[1], h.rinv[1], t.power) * state.phi[1] * state.phi[1];
      sum += 0.5 * hh * (2.0 * f1 - f2);
    }
    total += t.coeff * sum;
  }
  return total;
}

int expectation_order(const EigenState<double>& state, const PowerSeries& f) {
  for (const auto& t : f.terms())
    if (check_power(*state.hamiltonian, t.power).constant_at_origin) return 1;
  return 2;
}

double moment_expectation(const EigenState<double>& state, int k, bool weighted) {
  PowerSeries f{{k, 1.0}};
  if (weighted) {
    // Each moment separately must exist; merging could hide a divergence.
    const TermCheck c = check_power(*state.hamiltonian, k + 2);
    if (!c.integrable && state.hamiltonian->lambda > 0.0) {
      std::ostringstream msg;
      msg << "weighted moment k=" << k << " " << c.reason;
      throw DivergentMomentError(msg.str());
    }
    f = f * curvature_weight(CurvedParams(state.hamiltonian->lambda));
  }
  return expectation(state, f);
}

double virial_residual_quantum(const EigenState<double>& state) {
  const auto& h = *state.hamiltonian;
  if (h.crosses_equator)
    throw DivergentMomentError("virial identity needs a state confined to one hemisphere");
  const double lambda = h.lambda;
  const PowerSeries g = curvature_weight(CurvedParams(lambda));
  // -1/2 g_uu with g_uu = 2 lambda g (1 + 3 lambda r^2)
  PowerSeries f = (g * PowerSeries{{0, 1.0}, {2, 3.0 * lambda}}).scaled(-lambda);
  if (h.dimension == 1) {
    f.add((g * PowerSeries{{0, 1.0}, {2, 3.0 * lambda}}).scaled(0.5 * lambda));
  } else {
    f.add((g * h.angular).scaled(2.0));
    f.add((g * PowerSeries{{0, 2.0}, {2, 3.0 * lambda}}).scaled(0.5 * lambda));
  }
  f.add((g * h.physical.derivative().scaled(1.0, 1)).scaled(-1.0));
  return midpoint_kinetic(state) + expectation(state, f);
}

bool hypervirial_admissible(const EigenState<double>& state, int k) {
  const auto& h = *state.hamiltonian;
  if (h.left.kind == EndBehaviour::Kind::Origin && !(k + 2.0 * h.left.exponent - 2.0 > 0.0)) return false;
  for (const auto* e : {&h.left, &h.right})
    if (e->kind == EndBehaviour::Kind::Barrier && !(2.0 * e->exponent - k - 2.0 > 0.0)) return false;
  if (h.crosses_equator && k > 0) return false;
  if (h.dimension == 1 && k < 0) return false;
  const PowerSeries rel = hypervirial_relation(h.effective, 0.0, h.lambda, k);
  for (const auto& t : rel.terms()) {
    if (!check_power(h, t.power).integrable) return false;
    if (h.lambda > 0.0 && !check_power(h, t.power + 2).integrable) return false;
  }
  if (k != 0 && !check_power(h, k - 1).integrable) return false;
  if (h.lambda > 0.0 && k != 0 && !check_power(h, k + 1).integrable) return false;
  return true;
}

double hypervirial_residual_quantum(const EigenState<double>& state, int k) {
  const auto& h = *state.hamiltonian;
  if (!hypervirial_admissible(state, k)) {
    std::ostringstream msg;
    msg << "hypervirial relation k=" << k << " is not valid for this state (boundary terms or moments diverge)";
    throw DivergentMomentError(msg.str());
  }
  const PowerSeries rel = hypervirial_relation(h.effective, static_cast<double>(state.energy), h.lambda, k);
  double sum = 0.0;
  for (const auto& t : rel.terms()) sum += t.coeff * moment_expectation(state, t.power, true);
  return sum;
}

int hypervirial_order(const EigenState<double>& state, int k) {
  const auto& h = *state.hamiltonian;
  const PowerSeries rel = hypervirial_relation(h.effective, static_cast<double>(state.energy), h.lambda, k);
  const PowerSeries w = curvature_weight(CurvedParams(h.lambda));
  for (const auto& t : rel.terms())
    if (expectation_order(state, PowerSeries{{t.power, 1.0}} * w) == 1) return 1;
  return 2;
}

double raw_operator_energy(const EigenState<double>& state) {
  const auto& h = *state.hamiltonian;
  if (h.dimension != 1) throw ConfigError("raw operator check is implemented for the line only");
  const int n = static_cast<int>(h.size());
  const double hh = h.grid.h();
  const double lambda = h.lambda;
  std::vector<double> g(n), psi(n);
  for (int i = 0; i < n; ++i) {
    g[i] = 1.0 + lambda * h.r[i] * h.r[i];
    psi[i] = state.phi[i] / std::sqrt(g[i]);
  }
  // D f = df/du + lambda x f, which is i times the curved momentum.
  auto dmap = [&](const std::vector<double>& f) {
    std::vector<double> d(n);
    auto at = [&](int j) { return (j < 0 || j >= n) ? 0.0 : f[j]; };
    for (int i = 0; i < n; ++i) {
      const double df = (-at(i - 3) + 9.0 * at(i - 2) - 45.0 * at(i - 1) + 45.0 * at(i + 1) - 9.0 * at(i + 2) +
                         at(i + 3)) /
                        (60.0 * hh);
      d[i] = df + lambda * h.r[i] * f[i];
    }
    return d;
  };
  const std::vector<double> dd = dmap(dmap(psi));
  double num = 0.0, den = 0.0;
  for (int i = 0; i < n; ++i) {
    const double hpsi = -0.5 * dd[i] + h.physical(h.r[i]) * psi[i];
    num += psi[i] * hpsi * g[i];
    den += psi[i] * psi[i] * g[i];
  }
  return num / den;
}

double richardson(double fine, double coarse, int order) {
  const double f = std::pow(2.0, order);
  return (f * fine - coarse) / (f - 1.0);
}

template <class Real>
Extrapolated extrapolate_h2(const std::vector<double>& hs, const std::vector<Real>& values) {
  using std::abs;
  const std::size_t n = values.size();
  if (n == 0 || hs.size() != n) throw ConfigError("extrapolation needs matching nonempty h and value lists");
  std::vector<std::vector<Real>> t(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i].resize(i + 1);
    t[i][0] = values[i];
    for (std::size_t j = 1; j <= i; ++j) {
      const Real ratio = Real(hs[i - j]) / Real(hs[i]);
      t[i][j] = t[i][j - 1] + (t[i][j - 1] - t[i - 1][j - 1]) / (ratio * ratio - 1);
    }
  }
  Extrapolated e;
  e.value = static_cast<double>(t[n - 1][n - 1]);
  e.error = n > 1 ? static_cast<double>(abs(t[n - 1][n - 1] - t[n - 2][n - 2])) : 0.0;
  return e;
}

Extrapolated oscillator_energy_shift(const OscillatorSpec& spec, double beta, int base, int levels) {
  spec.validate();
  if (levels < 1 || base < 64) throw ConfigError("energy shift needs base >= 64 and at least one level");
  std::vector<double> hs;
  std::vector<float128> shifts;
  for (int i = 0; i < levels; ++i) {
    const int npoints = base * (1 << i) - 1;
    const GridSpec g = oscillator_grid(spec, npoints, beta);
    const auto h0 = build_oscillator_1d<float128>(spec, 0.0, g);
    const auto hb = build_oscillator_1d<float128>(spec, beta, g);
    const float128 e0 = eigenvalues_lowest(h0, spec.n + 1)[spec.n];
    const float128 eb = eigenvalues_lowest(hb, spec.n + 1)[spec.n];
    hs.push_back(g.h());
    shifts.push_back(eb - e0);
  }
  return extrapolate_h2(hs, shifts);
}

template DiscreteHamiltonian<double> build_oscillator_1d<double>(const OscillatorSpec&, double, const GridSpec&);
template DiscreteHamiltonian<float128> build_oscillator_1d<float128>(const OscillatorSpec&, double, const GridSpec&);
template DiscreteHamiltonian<double> build_coulomb_radial<double>(const CoulombSpec&, double, const GridSpec&);
template DiscreteHamiltonian<float128> build_coulomb_radial<float128>(const CoulombSpec&, double, const GridSpec&);
template DiscreteHamiltonian<double> build_radial_oscillator<double>(const RadialOscillatorSpec&, const GridSpec&);
template DiscreteHamiltonian<double> build_flat_1d<double>(const PowerSeries&, double, int);
template std::vector<double> eigenvalues_lowest<double>(const DiscreteHamiltonian<double>&, int);
template std::vector<float128> eigenvalues_lowest<float128>(const DiscreteHamiltonian<float128>&, int);
template std::vector<EigenState<double>> eigen_lowest<double>(const DiscreteHamiltonian<double>&, int);
template Extrapolated extrapolate_h2<double>(const std::vector<double>&, const std::vector<double>&);
template Extrapolated extrapolate_h2<float128>(const std::vector<double>&, const std::vector<float128>&);

}  // namespace curvhv
