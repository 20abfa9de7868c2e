#include "curvhv/hvhf.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "curvhv/error.hpp"

namespace curvhv {

namespace {

using PotentialJets = std::vector<std::pair<int, Jet>>;

void add_term(std::map<MomentKey, Jet>& terms, MomentKey key, const Jet& c) {
  auto it = terms.find(key);
  if (it == terms.end())
    terms.emplace(key, c);
  else
    it->second += c;
}

// Terms at the order of the relation that involve only E^(0) and the potential.
// The kinetic part comes from the commutator of r^k pi + pi r^k with pi^2/2 in
// the curved momentum, which is the same for the line and for the radial problem.
void add_static_terms(std::map<MomentKey, Jet>& terms, const PotentialJets& pot, const Jet& e0, double lambda,
                      int k, int gamma, int order) {
  const double kd = k;
  if (k != 0) add_term(terms, {gamma, k - 1}, e0 * (2.0 * kd));
  for (const auto& [p, c] : pot) add_term(terms, {gamma, k + p - 1}, c * (-(2.0 * kd + p)));
  add_term(terms, {gamma, k + 1}, Jet(kd / 4.0 * (kd + 1) * (kd + 2) * lambda * lambda, order));
  add_term(terms, {gamma, k - 1}, Jet(kd * kd * kd / 2.0 * lambda, order));
  add_term(terms, {gamma, k - 3}, Jet(kd / 4.0 * (kd - 1) * (kd - 2), order));
}

Relation build_relation(const PotentialJets& pot, double lambda, int l, int k, int gamma,
                        const std::vector<Jet>& energies, int order) {
  if (static_cast<int>(energies.size()) <= gamma) {
    std::ostringstream msg;
    msg << "relation at order " << gamma << " needs E^(0.." << gamma << ")";
    throw NumericalError(msg.str());
  }
  std::map<MomentKey, Jet> terms;
  add_static_terms(terms, pot, energies[0], lambda, k, gamma, order);
  if (k != 0)
    for (int j = 1; j <= gamma; ++j) add_term(terms, {gamma - j, k - 1}, energies[j] * (2.0 * k));
  if (gamma >= 1) {
    add_term(terms, {gamma - 1, k + l - 1}, Jet(-(2.0 * k + l), order));
    add_term(terms, {gamma - 1, k + l + 1}, Jet(-lambda * (2.0 * k + l + 2), order));
  }
  Relation rel;
  rel.gamma = gamma;
  rel.k = k;
  for (auto& [key, c] : terms)
    if (!c.is_zero()) rel.terms.push_back({key, std::move(c)});
  return rel;
}

PotentialJets oscillator_jets(const OscillatorSpec& spec, int order) {
  return {{2, Jet::variable(spec.alpha, order) * 0.5}};
}

PotentialJets coulomb_jets(const CoulombSpec& spec, int order) {
  const Jet mu = Jet::variable(spec.mu(), order);
  const double lambda = spec.params.lambda();
  return {{-2, (mu - 0.25) * 0.5}, {-1, Jet(-spec.kappa, order)}, {0, (mu - 0.5) * (0.5 * lambda)}};
}

// Solved-for coefficient of relation r, with a magnitude scale for the resonance test.
struct Lead {
  double value;
  double scale;
};

Lead oscillator_lead(const OscillatorSpec& spec, int r) {
  const double lam2 = spec.params.lambda() * spec.params.lambda();
  const double a = (r + 1.0) * spec.alpha;
  const double b = r / 4.0 * (r + 1.0) * (r + 2.0) * lam2;
  return {a - b, std::abs(a) + std::abs(b)};
}

Lead coulomb_lead(const CoulombSpec& spec, int r) {
  const double a = (r - 1.0) * (r - 1.0);
  const double b = 4.0 * spec.mu();
  return {0.25 * (r - 1.0) * (a - b), 0.25 * std::abs(r - 1.0) * (a + b)};
}

constexpr double kResonanceTol = 1e-12;

void check_oscillator_lead(const OscillatorSpec& spec, int r, int gamma) {
  const Lead lead = oscillator_lead(spec, r);
  if (std::abs(lead.value) <= kResonanceTol * lead.scale) {
    std::ostringstream msg;
    msg << "resonant parameters: coefficient of Q^" << r + 1 << " vanishes in relation k=" << r << " at order "
        << gamma << " (alpha=" << spec.alpha << ", lambda=" << spec.params.lambda() << ")";
    throw ResonanceError(msg.str(), gamma, r);
  }
}

void check_coulomb_lead(const CoulombSpec& spec, int r, int gamma) {
  const Lead lead = coulomb_lead(spec, r);
  if (std::abs(lead.value) <= kResonanceTol * lead.scale || r == 1) {
    std::ostringstream msg;
    msg << "angular resonance: coefficient of <r^" << r - 3 << "> vanishes in relation k=" << r
        << " for m=" << spec.m << " at order " << gamma;
    throw AngularResonanceError(msg.str(), gamma, r, spec.m);
  }
}

Relation relation_for(const SystemSpec& spec, int k, int gamma, const std::vector<Jet>& energies, int order) {
  if (const auto* osc = std::get_if<OscillatorSpec>(&spec)) return relation_1d(*osc, k, gamma, energies, order);
  return relation_2d(std::get<CoulombSpec>(spec), k, gamma, energies, order);
}

Jet solve_relation(const Relation& rel, const MomentTable& table, MomentKey target) {
  const RelationTerm* lead = nullptr;
  Jet rest;
  bool have_rest = false;
  for (const auto& t : rel.terms) {
    if (t.key == target) {
      lead = &t;
      continue;
    }
    if (!table.has(t.key.gamma, t.key.k)) {
      std::ostringstream msg;
      msg << "relation k=" << rel.k << " at order " << rel.gamma << " needs Q_" << t.key.gamma << "^" << t.key.k
          << ", which has not been computed";
      throw UnreachableMomentError(msg.str(), t.key.gamma, t.key.k);
    }
    Jet term = t.coeff * table.at(t.key.gamma, t.key.k);
    if (have_rest)
      rest += term;
    else
      rest = std::move(term), have_rest = true;
  }
  if (lead == nullptr || lead->coeff.value() == 0.0) {
    std::ostringstream msg;
    msg << "relation k=" << rel.k << " at order " << rel.gamma << " does not determine Q_" << target.gamma << "^"
        << target.k;
    throw ResonanceError(msg.str(), rel.gamma, rel.k);
  }
  if (!have_rest) return Jet(0.0, lead->coeff.order());
  return -rest / lead->coeff;
}

std::vector<Jet> placeholder_energies(int gamma, int order) { return std::vector<Jet>(gamma + 1, Jet(1.0, order)); }

// Minimal set of moments needed for E^(1..J), found by walking the relations backward.
class Planner {
 public:
  Planner(const SystemSpec& spec, int order) : spec_(spec), order_(order) {
    osc_ = std::holds_alternative<OscillatorSpec>(spec);
    l_ = osc_ ? std::get<OscillatorSpec>(spec).l : std::get<CoulombSpec>(spec).l;
  }

  std::set<MomentKey> run() {
    for (int j = 1; j <= order_; ++j) need(j - 1, l_);
    return needed_;
  }

 private:
  void need(int gamma, int k) {
    if (gamma < 0) return;
    if (osc_ && k < 0) return;
    const MomentKey key{gamma, k};
    if (needed_.count(key)) return;
    if (visiting_.count(key)) throw NumericalError("cyclic dependency in the moment recurrences");
    visiting_.insert(key);
    const int seed = osc_ ? 0 : -2;
    if (k == seed) {
      if (gamma >= 1) need(gamma - 1, l_);
    } else if (osc_ || k <= -3) {
      const int r = osc_ ? k - 1 : k + 3;
      if (osc_)
        check_oscillator_lead(std::get<OscillatorSpec>(spec_), r, gamma);
      else
        check_coulomb_lead(std::get<CoulombSpec>(spec_), r, gamma);
      const Relation rel = relation_for(spec_, r, gamma, placeholder_energies(gamma, order_), order_);
      for (int j = 1; j <= gamma; ++j) need(j - 1, l_);
      for (const auto& t : rel.terms)
        if (!(t.key == key)) need(t.key.gamma, t.key.k);
    } else {
      std::ostringstream msg;
      msg << "Q_" << gamma << "^" << k << " cannot be reached: no seed or downward relation produces <r^" << k
          << ">_lambda (perturbation exponent l=" << l_ << ")";
      throw UnreachableMomentError(msg.str(), gamma, k);
    }
    visiting_.erase(key);
    needed_.insert(key);
  }

  const SystemSpec& spec_;
  int order_;
  bool osc_;
  int l_;
  std::set<MomentKey> needed_;
  std::set<MomentKey> visiting_;
};

double relation_residual(const Relation& rel, const MomentTable& table, bool& complete) {
  double sum = 0.0;
  double scale = 0.0;
  complete = true;
  for (const auto& t : rel.terms) {
    if (!table.has(t.key.gamma, t.key.k)) {
      complete = false;
      return 0.0;
    }
    const double v = t.coeff.value() * table.at(t.key.gamma, t.key.k).value();
    sum += v;
    scale += std::abs(v);
  }
  if (scale == 0.0) {
    complete = false;
    return 0.0;
  }
  return std::abs(sum) / scale;
}

}  // namespace

void OscillatorSpec::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ConfigError("oscillator alpha must be positive and finite");
  if (n < 0) throw ConfigError("quantum number n must be >= 0");
  if (l < 1) throw ConfigError("oscillator perturbation exponent l must be a positive integer");
}

std::string OscillatorSpec::describe() const {
  std::ostringstream os;
  os << "oscillator-1d alpha=" << alpha << " n=" << n << " l=" << l << " lambda=" << params.lambda();
  return os.str();
}

void CoulombSpec::validate() const {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) throw ConfigError("Coulomb kappa must be positive and finite");
  if (n < 0) throw ConfigError("radial quantum number n must be >= 0");
  if (m == 0) throw ConfigError("angular quantum number m must be nonzero");
  if (l > -1) throw ConfigError("Coulomb perturbation exponent l must be a negative integer");
}

std::string CoulombSpec::describe() const {
  std::ostringstream os;
  os << "coulomb-2d kappa=" << kappa << " n=" << n << " m=" << m << " l=" << l << " lambda=" << params.lambda();
  return os.str();
}

const Jet& MomentTable::at(int gamma, int k) const {
  auto it = entries_.find({gamma, k});
  if (it == entries_.end()) {
    std::ostringstream msg;
    msg << "moment Q_" << gamma << "^" << k << " is not in the table";
    throw UnreachableMomentError(msg.str(), gamma, k);
  }
  return it->second;
}

std::vector<double> EnergySeries::values() const {
  std::vector<double> v;
  for (const auto& c : coeffs) v.push_back(c.value());
  return v;
}

const RelationTerm* Relation::find(int g, int kk) const {
  for (const auto& t : terms)
    if (t.key.gamma == g && t.key.k == kk) return &t;
  return nullptr;
}

Jet zeroth_energy_oscillator(const OscillatorSpec& spec, int order) {
  spec.validate();
  const double lambda = spec.params.lambda();
  const Jet alpha = Jet::variable(spec.alpha, order);
  const Jet root = sqrt(alpha * 4.0 + lambda * lambda);
  return (root + lambda) * ((spec.n + 0.5) / 2.0) + 0.5 * spec.n * spec.n * lambda;
}

Jet zeroth_energy_coulomb(const CoulombSpec& spec, int order) {
  spec.validate();
  const double lambda = spec.params.lambda();
  const Jet nn = sqrt(Jet::variable(spec.mu(), order)) + (spec.n + 0.5);
  const Jet n2 = nn * nn;
  return -(spec.kappa * spec.kappa / 2.0) / n2 + (n2 - 0.25) * (lambda / 2.0);
}

Relation relation_1d(const OscillatorSpec& spec, int k, int gamma, const std::vector<Jet>& energies, int order) {
  Relation rel =
      build_relation(oscillator_jets(spec, order), spec.params.lambda(), spec.l, k, gamma, energies, order);
  // Negative moments of the even oscillator do not enter; their coefficients vanish for k >= 0.
  std::erase_if(rel.terms, [](const RelationTerm& t) { return t.key.k < 0; });
  return rel;
}

Relation relation_2d(const CoulombSpec& spec, int k, int gamma, const std::vector<Jet>& energies, int order) {
  return build_relation(coulomb_jets(spec, order), spec.params.lambda(), spec.l, k, gamma, energies, order);
}

PowerSeries hypervirial_relation(const PowerSeries& potential, double energy, double lambda, int k) {
  PotentialJets pot;
  for (const auto& t : potential.terms()) pot.push_back({t.power, Jet(t.coeff, 0)});
  std::map<MomentKey, Jet> terms;
  add_static_terms(terms, pot, Jet(energy, 0), lambda, k, 0, 0);
  PowerSeries rel;
  for (const auto& [key, c] : terms) rel.add(key.k, c.value());
  return rel;
}

Jet recurrence_step_1d(const MomentTable& table, const EnergySeries& energy, int k, int gamma,
                       const OscillatorSpec& spec) {
  spec.validate();
  check_oscillator_lead(spec, k, gamma);
  const int order = energy.coeffs.empty() ? 0 : energy.coeffs.front().order();
  const Relation rel = relation_1d(spec, k, gamma, energy.coeffs, order);
  return solve_relation(rel, table, {gamma, k + 1});
}

Jet recurrence_step_2d(const MomentTable& table, const EnergySeries& energy, int k, int gamma,
                       const CoulombSpec& spec) {
  spec.validate();
  check_coulomb_lead(spec, k, gamma);
  const int order = energy.coeffs.empty() ? 0 : energy.coeffs.front().order();
  const Relation rel = relation_2d(spec, k, gamma, energy.coeffs, order);
  return solve_relation(rel, table, {gamma, k - 3});
}

Jet bootstrap_moments(const EnergySeries& energy, const SystemSpec& spec, int gamma) {
  if (gamma < 0 || gamma > energy.order()) throw NumericalError("bootstrap needs E^(gamma)");
  const Jet& e = energy.coeffs[gamma];
  if (e.order() < 1) {
    std::ostringstream msg;
    msg << "E^(" << gamma << ") carries no derivative orders; allocate jets of higher order";
    throw TruncationError(msg.str());
  }
  if (const auto* osc = std::get_if<OscillatorSpec>(&spec)) {
    Jet q = e.derivative() * (2.0 * osc->params.lambda());
    if (gamma == 0) q += 1.0;
    return q;
  }
  return e.derivative() * 2.0;
}

Jet energy_from_hf(const MomentTable& table, int j, int l) {
  if (j < 1) throw ConfigError("Hellmann-Feynman update needs j >= 1");
  return table.at(j - 1, l) / static_cast<double>(j);
}

SeriesResult perturbation_series(const SystemSpec& spec, int order) {
  if (order < 1) throw ConfigError("series order J must be >= 1");
  const bool osc = std::holds_alternative<OscillatorSpec>(spec);
  std::visit([](const auto& s) { s.validate(); }, spec);
  const int l = osc ? std::get<OscillatorSpec>(spec).l : std::get<CoulombSpec>(spec).l;
  const int seed = osc ? 0 : -2;

  const std::set<MomentKey> needed = Planner(spec, order).run();

  SeriesResult out;
  out.series.spec = std::visit([](const auto& s) { return s.describe(); }, spec);
  auto& energies = out.series.coeffs;
  energies.push_back(osc ? zeroth_energy_oscillator(std::get<OscillatorSpec>(spec), order)
                         : zeroth_energy_coulomb(std::get<CoulombSpec>(spec), order));

  for (int gamma = 0; gamma < order; ++gamma) {
    if (gamma >= 1) energies.push_back(energy_from_hf(out.table, gamma, l));
    std::vector<int> ks;
    for (const auto& key : needed)
      if (key.gamma == gamma) ks.push_back(key.k);
    if (!osc) std::reverse(ks.begin(), ks.end());
    for (int k : ks) {
      if (k == seed) {
        out.table.set(gamma, k, bootstrap_moments(out.series, spec, gamma));
      } else if (osc) {
        out.table.set(gamma, k,
                      recurrence_step_1d(out.table, out.series, k - 1, gamma, std::get<OscillatorSpec>(spec)));
      } else {
        out.table.set(gamma, k,
                      recurrence_step_2d(out.table, out.series, k + 3, gamma, std::get<CoulombSpec>(spec)));
      }
    }
  }
  energies.push_back(energy_from_hf(out.table, order, l));

  // Every relation whose moments are all in the table, used or not.
  for (int gamma = 0; gamma < order; ++gamma) {
    int kmin = 0, kmax = 0;
    bool any = false;
    for (const auto& [key, v] : out.table.entries())
      if (key.gamma == gamma) {
        kmin = any ? std::min(kmin, key.k) : key.k;
        kmax = any ? std::max(kmax, key.k) : key.k;
        any = true;
      }
    if (!any) continue;
    const std::vector<Jet> e(energies.begin(), energies.begin() + gamma + 1);
    // Oscillator relations with k < 0 would involve the dropped negative moments.
    for (int r = osc ? std::max(0, kmin - 4) : kmin - 4; r <= kmax + 4; ++r) {
      const Relation rel = relation_for(spec, r, gamma, e, order);
      bool complete = false;
      const double res = relation_residual(rel, out.table, complete);
      if (!complete) continue;
      out.max_relation_residual = std::max(out.max_relation_residual, res);
      ++out.relations_checked;
    }
  }
  return out;
}

SeriesResult perturbation_series(const OscillatorSpec& spec, int order) {
  return perturbation_series(SystemSpec(spec), order);
}

SeriesResult perturbation_series(const CoulombSpec& spec, int order) {
  return perturbation_series(SystemSpec(spec), order);
}

double evaluate_series(const EnergySeries& series, double beta) {
  return evaluate_series(series, beta, series.order());
}

double evaluate_series(const EnergySeries& series, double beta, int order) {
  double sum = 0.0;
  double pw = 1.0;
  for (int j = 0; j <= std::min(order, series.order()); ++j) {
    sum += pw * series[j];
    pw *= beta;
  }
  return sum;
}

PowerSeries oscillator_potential(const OscillatorSpec& spec, double beta) {
  PowerSeries v{{2, 0.5 * spec.alpha}};
  v.add(spec.l, beta).add(spec.l + 2, beta * spec.params.lambda());
  return v;
}

PowerSeries coulomb_effective_potential(const CoulombSpec& spec, double beta) {
  const double mu = spec.mu();
  const double lambda = spec.params.lambda();
  PowerSeries v{{-1, -spec.kappa}, {0, 0.5 * (mu - 0.5) * lambda}, {-2, 0.5 * (mu - 0.25)}};
  v.add(spec.l, beta).add(spec.l + 2, beta * lambda);
  return v;
}

}  // namespace curvhv
