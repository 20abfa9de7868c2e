#pragma once

#include <memory>
#include <vector>

#include "curvhv/core.hpp"
#include "curvhv/hvhf.hpp"
#include "curvhv/tridiagonal.hpp"

namespace curvhv {

// Uniform grid on an interval of the angle variable u = chi / sqrt(lambda)
// (or of x itself when lambda = 0). Only the npoints interior nodes are unknowns.
struct GridSpec {
  int npoints = 2048;
  double u_min = 0.0;
  double u_max = 1.0;
  bool dirichlet_left = true;
  bool dirichlet_right = true;

  double h() const { return (u_max - u_min) / (npoints + 1); }
  double node(int i) const { return u_min + (i + 1) * h(); }
  void validate() const;
};

// Behaviour of the transformed state phi at an end of the grid.
struct EndBehaviour {
  enum class Kind {
    Cut,      // artificial end where phi is negligible
    Origin,   // r = 0, phi ~ u^exponent
    Barrier,  // equator with a diverging potential, phi ~ dist^exponent
  };
  Kind kind = Kind::Cut;
  double exponent = 0.0;
};

// Radial problem of H = pi^2/2 + lambda L^2/2 + omega^2 r^2/2 + beta r^l (1 + lambda r^2)
// in the angular sector m. Closed-form spectrum is known (used for the 2D virial checks).
struct RadialOscillatorSpec {
  double omega2 = 1.0;
  int n = 0;
  int m = 1;
  CurvedParams params;

  void validate() const;
};

double radial_oscillator_energy(const RadialOscillatorSpec& spec);

// -1/2 d^2/du^2 + W(r(u)) on the grid, r(u) = tan(sqrt(lambda) u)/sqrt(lambda).
template <class Real>
struct DiscreteHamiltonian {
  Tridiagonal<Real> matrix;
  GridSpec grid;
  double lambda = 0.0;
  int dimension = 1;  // 1: line, 2: radial part in the plane
  int m = 0;
  // W, the potential of the transformed operator (V for the line, V_1 radially).
  PowerSeries effective;
  // V, the physical potential including the perturbation.
  PowerSeries physical;
  // pi^2/2 - pi_r^2/2 as a multiplicative operator (zero on the line).
  PowerSeries angular;
  EndBehaviour left, right;
  // The grid runs through the equator (r passes through infinity).
  bool crosses_equator = false;
  // Node coordinates; rinv is kept separately so that r = infinity is representable.
  std::vector<double> u, r, rinv;

  std::size_t size() const { return matrix.size(); }
};

template <class Real>
struct EigenState {
  Real energy{};
  std::vector<Real> phi;  // sum phi_i^2 h = 1
  int index = 0;
  std::shared_ptr<const DiscreteHamiltonian<Real>> hamiltonian;
};

// Grids. The *_grid helpers choose the chart interval; truncate the domain where
// the state is negligible so that near-flat curvatures stay resolvable.
// With beta != 0 the interval also stops where the perturbation stops being small
// against the oscillator term (it is unbounded below for odd l).
GridSpec oscillator_grid(const OscillatorSpec& spec, int npoints, double beta = 0.0);
GridSpec coulomb_grid(const CoulombSpec& spec, int npoints);
GridSpec radial_oscillator_grid(const RadialOscillatorSpec& spec, int npoints);

template <class Real>
DiscreteHamiltonian<Real> build_oscillator_1d(const OscillatorSpec& spec, double beta, const GridSpec& grid);
template <class Real>
DiscreteHamiltonian<Real> build_coulomb_radial(const CoulombSpec& spec, double beta, const GridSpec& grid);
template <class Real>
DiscreteHamiltonian<Real> build_radial_oscillator(const RadialOscillatorSpec& spec, const GridSpec& grid);
// Flat line, V given as a power series, box [-x_max, x_max].
template <class Real>
DiscreteHamiltonian<Real> build_flat_1d(const PowerSeries& potential, double x_max, int npoints);

template <class Real>
std::vector<Real> eigenvalues_lowest(const DiscreteHamiltonian<Real>& h, int count);
template <class Real>
std::vector<EigenState<Real>> eigen_lowest(const DiscreteHamiltonian<Real>& h, int count);

// max |H phi - E phi| relative to max |phi|.
double eigen_residual(const EigenState<double>& state);

// <f> = integral f(r(u)) phi^2 du, which equals <psi| f |psi> in the original measure.
double expectation(const EigenState<double>& state, const PowerSeries& f);
// <r^k> or <(1 + lambda r^2) r^k>. Throws DivergentMomentError if the integrand is not integrable.
double moment_expectation(const EigenState<double>& state, int k, bool weighted);
// Convergence order in h of expectation(state, f): 1 if an integrand tends to a nonzero
// constant at the origin, otherwise 2.
int expectation_order(const EigenState<double>& state, const PowerSeries& f);

// Left minus right side of the quantum virial identity.
double virial_residual_quantum(const EigenState<double>& state);
// Hypervirial relation k with the state's energy and quadrature moments.
double hypervirial_residual_quantum(const EigenState<double>& state, int k);
// Largest power of h in the error of hypervirial_residual_quantum (1 or 2).
int hypervirial_order(const EigenState<double>& state, int k);
// Checks the relation is derivable for this state: boundary terms of the
// commutator vanish and every moment exists.
bool hypervirial_admissible(const EigenState<double>& state, int k);

// <psi|H|psi> with H applied in its original (untransformed) form, using sixth-order
// differences for the curved momentum on the reconstructed psi. Line only.
double raw_operator_energy(const EigenState<double>& state);

// (2^p fine - coarse) / (2^p - 1) for grids with h_coarse = 2 h_fine.
double richardson(double fine, double coarse, int order = 2);

struct Extrapolated {
  double value = 0.0;
  double error = 0.0;  // difference between the last two diagonal entries
};

// Neville extrapolation to h = 0 of values with an even-power expansion in h.
template <class Real>
Extrapolated extrapolate_h2(const std::vector<double>& hs, const std::vector<Real>& values);

// E(beta) - E(0) for oscillator level spec.n, extrapolated in h^2 over grids with
// npoints + 1 = base * 2^i, i = 0..levels-1, in quadruple precision.
Extrapolated oscillator_energy_shift(const OscillatorSpec& spec, double beta, int base = 256, int levels = 6);

}  // namespace curvhv
