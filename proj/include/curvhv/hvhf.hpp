#pragma once

#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "curvhv/core.hpp"
#include "curvhv/jet.hpp"

namespace curvhv {

// H = pi^2/2 + alpha x^2/2 + beta x^l (1 + lambda x^2) on the circle, level n.
struct OscillatorSpec {
  double alpha = 1.0;
  int n = 0;
  int l = 1;
  CurvedParams params;

  void validate() const;
  std::string describe() const;
};

// Radial problem of H = pi^2/2 + lambda L^2/2 - kappa/r + beta r^l (1 + lambda r^2)
// in the angular sector m, radial level n.
struct CoulombSpec {
  double kappa = 1.0;
  int n = 0;
  int m = 1;
  int l = -3;
  CurvedParams params;

  void validate() const;
  std::string describe() const;
  double mu() const { return static_cast<double>(m) * m; }
};

using SystemSpec = std::variant<OscillatorSpec, CoulombSpec>;

struct MomentKey {
  int gamma = 0;
  int k = 0;
  auto operator<=>(const MomentKey&) const = default;
};

// Coefficients Q_gamma^k of beta^gamma in the weighted moment <(1 + lambda r^2) r^k>.
class MomentTable {
 public:
  bool has(int gamma, int k) const { return entries_.count({gamma, k}) != 0; }
  // Throws UnreachableMomentError when absent.
  const Jet& at(int gamma, int k) const;
  void set(int gamma, int k, Jet value) { entries_[{gamma, k}] = std::move(value); }
  const std::map<MomentKey, Jet>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Moments are weighted by (1 + lambda r^2); recorded for reports.
  static constexpr bool weighted = true;

 private:
  std::map<MomentKey, Jet> entries_;
};

// E^(0) .. E^(J) as jets in the seed parameter. E^(j) has order J - j.
struct EnergySeries {
  std::vector<Jet> coeffs;
  std::string spec;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  double operator[](int j) const { return coeffs.at(j).value(); }
  std::vector<double> values() const;
};

Jet zeroth_energy_oscillator(const OscillatorSpec& spec, int order);
Jet zeroth_energy_coulomb(const CoulombSpec& spec, int order);

// One term of a hypervirial relation: coefficient times Q_gamma^k.
struct RelationTerm {
  MomentKey key;
  Jet coeff;
};

// Sum over terms equals zero. Terms with an identically zero coefficient are omitted.
struct Relation {
  int gamma = 0;
  int k = 0;
  std::vector<RelationTerm> terms;
  // Coefficient of the moment solved for, or nullptr.
  const RelationTerm* find(int gamma, int k) const;
};

// Order-gamma relation for the hypervirial operator r^k pi + pi r^k.
// `energies` must hold E^(0) .. E^(gamma).
Relation relation_1d(const OscillatorSpec& spec, int k, int gamma, const std::vector<Jet>& energies, int order);
Relation relation_2d(const CoulombSpec& spec, int k, int gamma, const std::vector<Jet>& energies, int order);

// Plain relation for V = sum_p c_p r^p at energy E. Returned as a series in the
// moment index: sum_q coeff_q <r^q>_lambda = 0.
PowerSeries hypervirial_relation(const PowerSeries& potential, double energy, double lambda, int k);

// Solves relation k at order gamma for Q_gamma^{k+1}.
Jet recurrence_step_1d(const MomentTable& table, const EnergySeries& energy, int k, int gamma,
                       const OscillatorSpec& spec);
// Solves relation k at order gamma for Q_gamma^{k-3}.
Jet recurrence_step_2d(const MomentTable& table, const EnergySeries& energy, int k, int gamma,
                       const CoulombSpec& spec);

// Oscillator: Q_gamma^0. Coulomb: Q_gamma^{-2}. Consumes one jet order.
Jet bootstrap_moments(const EnergySeries& energy, const SystemSpec& spec, int gamma);

// E^(j) = Q_{j-1}^l / j.
Jet energy_from_hf(const MomentTable& table, int j, int l);

struct SeriesResult {
  EnergySeries series;
  MomentTable table;
  // Largest relative residual over every relation whose moments are all known.
  double max_relation_residual = 0.0;
  int relations_checked = 0;
};

SeriesResult perturbation_series(const SystemSpec& spec, int order);
SeriesResult perturbation_series(const OscillatorSpec& spec, int order);
SeriesResult perturbation_series(const CoulombSpec& spec, int order);

// Truncated sum of beta^j E^(j).
double evaluate_series(const EnergySeries& series, double beta);
double evaluate_series(const EnergySeries& series, double beta, int order);

// Potential (seed-independent part evaluated at the spec) as a plain series,
// with the perturbation beta r^l (1 + lambda r^2) added.
PowerSeries oscillator_potential(const OscillatorSpec& spec, double beta);
// Effective radial potential including the angular terms.
PowerSeries coulomb_effective_potential(const CoulombSpec& spec, double beta);

}  // namespace curvhv
