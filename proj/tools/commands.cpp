#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "curvhv/classical.hpp"
#include "curvhv/closed_forms.hpp"
#include "curvhv/error.hpp"
#include "curvhv/hvhf.hpp"
#include "curvhv/oracle.hpp"
#include "svg.hpp"

namespace curvhv::cli {

namespace {

// Check rows. Every numeric row records the tolerance it was compared against.
class Rows {
 public:
  void check(const std::string& name, double value, double tol, bool pass, const std::string& test) {
    add(name, value, tol, test, pass ? "pass" : "fail");
  }
  // |value| <= tol
  void bound(const std::string& name, double value, double tol) {
    check(name, value, tol, std::abs(value) <= tol, "abs <= tolerance");
  }
  void info(const std::string& name, double value) {
    Json row;
    row["check"] = name;
    row["value"] = value;
    row["tolerance"] = nullptr;
    row["status"] = "info";
    rows_.push_back(std::move(row));
  }
  void expected_fail(const std::string& name, double value, double tol, const std::string& test) {
    add(name, value, tol, test, "expected-fail");
  }
  void not_applicable(const std::string& name, const std::string& reason) {
    Json row;
    row["check"] = name;
    row["status"] = "not-applicable";
    row["reason"] = reason;
    rows_.push_back(std::move(row));
  }
  void error(const std::string& name, const std::exception& e) {
    Json row;
    row["check"] = name;
    row["status"] = "error";
    row["error"] = {{"type", error_type(e)}, {"message", e.what()}};
    rows_.push_back(std::move(row));
    worst_ = std::max(worst_, static_cast<int>(kNumericalError));
  }

  static std::string error_type(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e)) return "ConfigError";
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    if (dynamic_cast<const AngularResonanceError*>(&e)) return "AngularResonanceError";
    if (dynamic_cast<const ResonanceError*>(&e)) return "ResonanceError";
    if (dynamic_cast<const UnreachableMomentError*>(&e)) return "UnreachableMomentError";
    if (dynamic_cast<const TruncationError*>(&e)) return "TruncationError";
    if (dynamic_cast<const DivergentMomentError*>(&e)) return "DivergentMomentError";
    if (dynamic_cast<const ConvergenceError*>(&e)) return "ConvergenceError";
    if (dynamic_cast<const ChartBoundaryError*>(&e)) return "ChartBoundaryError";
    if (dynamic_cast<const PeriodNotFoundError*>(&e)) return "PeriodNotFoundError";
    if (dynamic_cast<const NumericalError*>(&e)) return "NumericalError";
    return "Error";
  }

  Json take() { return std::move(rows_); }
  int worst() const { return worst_; }

  Json summary() const {
    int counts[5] = {0, 0, 0, 0, 0};
    for (const auto& r : rows_) {
      const std::string s = r["status"];
      if (s == "pass") ++counts[0];
      if (s == "fail") ++counts[1];
      if (s == "expected-fail") ++counts[2];
      if (s == "error") ++counts[3];
      if (s == "info" || s == "not-applicable") ++counts[4];
    }
    return Json{{"pass", counts[0]}, {"fail", counts[1]}, {"expected_fail", counts[2]}, {"error", counts[3]},
                {"informational", counts[4]}, {"exit_status", worst_}};
  }

 private:
  void add(const std::string& name, double value, double tol, const std::string& test, const std::string& status) {
    Json row;
    row["check"] = name;
    row["value"] = std::isfinite(value) ? Json(value) : Json(nullptr);
    row["tolerance"] = tol;
    row["test"] = test;
    row["status"] = status;
    if (status == "fail") worst_ = std::max(worst_, static_cast<int>(kCheckFailure));
    rows_.push_back(std::move(row));
  }

  Json rows_ = Json::array();
  int worst_ = kPass;
};

std::string now_utc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream o;
  o << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return o.str();
}

Json header(const std::string& command, const RunConfig& config) {
  Json doc;
  doc["tool"] = "curvhv";
  doc["command"] = command;
  doc["timestamp"] = config.timestamp.empty() ? now_utc() : config.timestamp;
  doc["config"] = config.to_json();
  return doc;
}

void finish(Report& rep, Rows& rows) {
  rep.doc["summary"] = rows.summary();
  rep.doc["checks"] = rows.take();
  rep.exit_status = std::max(rep.exit_status, rows.worst());
}

std::string num(double v) {
  std::ostringstream o;
  o << std::setprecision(17) << v;
  return o.str();
}

std::string short_num(double v) {
  std::ostringstream o;
  o << std::setprecision(6) << v;
  return o.str();
}

std::string label_k(const std::string& base, int k) { return base + " k=" + std::to_string(k); }

OscillatorSpec oscillator_spec(const RunConfig& c) {
  return OscillatorSpec{c.alpha, c.n, c.perturbation_power(), CurvedParams(c.lambda)};
}

CoulombSpec coulomb_spec(const RunConfig& c) {
  return CoulombSpec{c.kappa, c.n, c.m, c.perturbation_power(), CurvedParams(c.lambda)};
}

bool is_oscillator(const RunConfig& c) { return c.system == "oscillator-1d"; }

// Least-squares slope of log|y| against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(std::abs(y[i]));
    sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

template <class Build>
void virial_rows(Rows& rows, const std::string& name, const std::vector<int>& grids, int level, Build build) {
  std::vector<double> res;
  for (int g : grids) {
    const auto h = build(g - 1);
    const auto states = eigen_lowest(h, level + 1);
    const double r = virial_residual_quantum(states[static_cast<std::size_t>(level)]);
    res.push_back(r);
    rows.bound(name + " residual grid=" + std::to_string(g), r, 1e-5);
  }
  for (std::size_t i = 1; i < res.size(); ++i) {
    const double ratio = std::abs(res[i - 1] / res[i]);
    rows.check(name + " convergence ratio grid=" + std::to_string(grids[i - 1]) + "/" + std::to_string(grids[i]), ratio,
               3.5, ratio >= 3.5, "value >= tolerance");
  }
}

template <class Build>
void hypervirial_rows(Rows& rows, const std::vector<int>& grids, int level, const std::vector<int>& ks, Build build) {
  std::vector<EigenState<double>> states;
  for (int g : grids) {
    const auto h = build(g - 1);
    states.push_back(eigen_lowest(h, level + 1)[static_cast<std::size_t>(level)]);
  }
  for (int k : ks) {
    const std::string name = label_k("hypervirial residual", k);
    try {
      if (!hypervirial_admissible(states.back(), k)) {
        rows.not_applicable(name, "boundary terms or moments of this relation do not exist for the state");
        continue;
      }
      const double fine = hypervirial_residual_quantum(states.back(), k);
      if (states.size() < 2) {
        rows.bound(name, fine, 1e-5);
        continue;
      }
      const double coarse = hypervirial_residual_quantum(states[states.size() - 2], k);
      const int order = hypervirial_order(states.back(), k);
      rows.bound(name + " (extrapolated)", richardson(fine, coarse, order), 1e-5);
      rows.info(name + " grid=" + std::to_string(grids.back()), fine);
    } catch (const Error& e) {
      rows.error(name, e);
    }
  }
}

}  // namespace

int RunConfig::perturbation_power() const {
  if (l) return *l;
  return system == "coulomb-2d" ? -3 : 1;
}

std::vector<int> RunConfig::hypervirial_ks() const {
  if (ks) return *ks;
  if (system == "coulomb-2d") return {-1, 0, 1, 2, 3};
  return {1, 2, 3, 4, 5, 6};
}

Json RunConfig::to_json() const {
  Json j;
  j["system"] = system;
  if (system == "oscillator-1d")
    j["alpha"] = alpha;
  else
    j["kappa"] = kappa;
  j["lambda"] = lambda;
  j["n"] = n;
  if (system == "coulomb-2d") j["m"] = m;
  j["l"] = perturbation_power();
  j["order"] = order;
  j["betas"] = betas;
  j["grids"] = grids;
  j["ks"] = hypervirial_ks();
  j["classical"] = {{"potential", classical.potential.empty() ? "system" : classical.potential},
                    {"orbits", classical.orbits},
                    {"r0", classical.r0},
                    {"rdot0", classical.rdot0},
                    {"thetadot0", classical.thetadot0},
                    {"epsilon", classical.epsilon},
                    {"tmax", classical.tmax},
                    {"samples", classical.samples}};
  return j;
}

void validate(const RunConfig& c) {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };
  if (c.system != "oscillator-1d" && c.system != "coulomb-2d")
    fail("system must be oscillator-1d or coulomb-2d, got '" + c.system + "'");
  if (!std::isfinite(c.lambda) || c.lambda < 0.0) fail("lambda must be finite and >= 0");
  if (c.order < 0 || c.order > 40) fail("order must be in [0, 40]");
  if (is_oscillator(c))
    oscillator_spec(c).validate();
  else
    coulomb_spec(c).validate();
  for (double b : c.betas)
    if (!std::isfinite(b) || b <= 0.0) fail("beta values must be finite and positive");
  if (c.grids.empty()) fail("at least one grid is required");
  for (std::size_t i = 0; i < c.grids.size(); ++i) {
    if (c.grids[i] < 64) fail("grids must have at least 64 intervals");
    if (i > 0 && c.grids[i] != 2 * c.grids[i - 1]) fail("each grid must double the previous one");
  }
  const auto& k = c.classical;
  if (!k.potential.empty() && k.potential != "coulomb" && k.potential != "oscillator")
    fail("classical potential must be coulomb or oscillator");
  for (const auto& o : k.orbits)
    if (o != "circular" && o != "radial" && o != "generic" && o != "precessing")
      fail("orbit presets are circular, radial, generic, precessing; got '" + o + "'");
  if (!(k.r0 > 0.0) || !std::isfinite(k.r0)) fail("classical r0 must be positive");
  if (!std::isfinite(k.rdot0) || !std::isfinite(k.thetadot0) || !std::isfinite(k.epsilon))
    fail("classical initial velocities and epsilon must be finite");
  if (!(k.tmax > 0.0)) fail("classical tmax must be positive");
  if (k.samples < 16) fail("classical samples must be >= 16");
}

Report cmd_series(const RunConfig& config) {
  Report rep;
  rep.doc = header("series", config);
  Rows rows;
  const int order = config.order;
  SeriesResult res = is_oscillator(config) ? perturbation_series(oscillator_spec(config), order)
                                           : perturbation_series(coulomb_spec(config), order);
  const auto values = res.series.values();
  const double e0 = values.at(0);
  const double zero_tol = 1e-13 * std::abs(e0);

  Json coeffs = Json::array();
  std::ostringstream csv;
  csv << "j,E_j,exact_zero\n";
  for (std::size_t j = 0; j < values.size(); ++j) {
    const bool exact = j > 0 && std::abs(values[j]) <= zero_tol;
    coeffs.push_back({{"j", j}, {"value", values[j]}, {"exact", exact}});
    csv << j << ',' << num(values[j]) << ',' << (exact ? 1 : 0) << '\n';
  }
  rep.doc["spec"] = res.series.spec;
  rep.doc["series"] = coeffs;

  Json moments = Json::array();
  std::ostringstream mcsv;
  mcsv << "gamma,k,Q\n";
  for (const auto& [key, jet] : res.table.entries()) {
    moments.push_back({{"gamma", key.gamma}, {"k", key.k}, {"value", jet.value()}});
    mcsv << key.gamma << ',' << key.k << ',' << num(jet.value()) << '\n';
  }
  rep.doc["moments"] = {{"weighted", MomentTable::weighted}, {"entries", moments}};

  rows.bound("relation residual over the moment table", res.max_relation_residual, 1e-9);
  const double lam = config.lambda;
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); };
  Json closed = Json::array();
  auto compare = [&](const std::string& what, double engine, double derived, std::optional<double> published) {
    Json entry{{"quantity", what}, {"engine", engine}, {"derived", derived}};
    rows.check(what + " vs derived closed form (relative)", rel(engine, derived), 1e-10, rel(engine, derived) <= 1e-10,
               "relative difference <= tolerance");
    if (published) {
      entry["published"] = *published;
      rows.info(what + " vs published closed form (relative)", rel(engine, *published));
    }
    closed.push_back(entry);
  };
  if (is_oscillator(config)) {
    const auto s = oscillator_spec(config);
    compare("E^(0)", e0, closed_form::derived::oscillator_e0(s.alpha, lam, s.n), std::nullopt);
    if (s.l % 2 != 0)
      for (int j = 1; j <= order; j += 2) rows.bound("E^(" + std::to_string(j) + ") exact zero", values[j], zero_tol);
    if (s.l == 1 && order >= 2)
      compare("E^(2)", values[2], closed_form::derived::oscillator_e2(s.alpha, lam, s.n),
              closed_form::published::oscillator_e2(s.alpha, lam, s.n));
  } else {
    const auto s = coulomb_spec(config);
    compare("E^(0)", e0, closed_form::derived::coulomb_e0(s.kappa, lam, s.n, s.m),
            closed_form::published::coulomb_e0(s.kappa, lam, s.n, s.m));
    if (s.l == -3 && order >= 1)
      compare("E^(1)", values[1], closed_form::derived::coulomb_e1_lm3(s.kappa, lam, s.n, s.m),
              closed_form::published::coulomb_e1_lm3(s.kappa, lam, s.n, s.m));
  }
  rep.doc["closed_form"] = closed;
  rep.files.emplace_back("series.csv", csv.str());
  rep.files.emplace_back("moments.csv", mcsv.str());
  finish(rep, rows);
  return rep;
}

Report cmd_verify(const RunConfig& config) {
  Report rep;
  rep.doc = header("verify", config);
  Rows rows;
  const auto& grids = config.grids;
  const int level = config.n;
  const double lam = config.lambda;
  const auto ks = config.hypervirial_ks();

  Json energies = Json::array();
  if (is_oscillator(config)) {
    const auto spec = oscillator_spec(config);
    auto build = [&](int npoints) { return build_oscillator_1d<double>(spec, 0.0, oscillator_grid(spec, npoints)); };
    try {
      std::vector<double> e;
      for (int g : grids) {
        e.push_back(eigenvalues_lowest(build(g - 1), level + 1)[static_cast<std::size_t>(level)]);
        rows.info("oracle E^(0) grid=" + std::to_string(g), e.back());
      }
      const double best = e.size() > 1 ? richardson(e.back(), e[e.size() - 2]) : e.back();
      const double closed = closed_form::derived::oscillator_e0(spec.alpha, lam, spec.n);
      rows.bound("oracle E^(0) - closed form", best - closed, 1e-6);
      energies.push_back({{"n", spec.n}, {"oracle", best}, {"closed_form", closed}});
    } catch (const Error& ex) {
      rows.error("oracle energy", ex);
    }
    try {
      virial_rows(rows, "virial", grids, level, build);
    } catch (const Error& ex) {
      rows.error("virial", ex);
    }
    if (!ks.empty()) {
      try {
        hypervirial_rows(rows, grids, level, ks, build);
      } catch (const Error& ex) {
        rows.error("hypervirial", ex);
      }
    }

    // Scaling of the truncation error in beta.
    try {
      if (config.betas.size() < 2) throw ConfigError("beta scaling needs at least two beta values");
      const int j_max = config.order;
      const SeriesResult res = perturbation_series(spec, j_max + 4);
      std::vector<double> diffs;
      std::ostringstream csv;
      csv << "beta,E_oracle,E_series,abs_difference\n";
      Json table = Json::array();
      const double e0 = res.series[0];
      for (double b : config.betas) {
        const Extrapolated shift = oscillator_energy_shift(spec, b);
        // Summed from j = 1 so that E^(0) does not swamp the comparison in double precision.
        double truncated = 0.0, power = 1.0;
        for (int j = 1; j <= j_max; ++j) {
          power *= b;
          truncated += power * res.series[j];
        }
        const double d = shift.value - truncated;
        diffs.push_back(d);
        csv << num(b) << ',' << num(e0 + shift.value) << ',' << num(e0 + truncated) << ',' << num(std::abs(d)) << '\n';
        table.push_back({{"beta", b},
                         {"shift_oracle", shift.value},
                         {"shift_oracle_error", shift.error},
                         {"shift_series", truncated},
                         {"difference", d}});
      }
      const double slope = loglog_slope(config.betas, diffs);
      const double expected = j_max + 1;
      rows.check("beta scaling slope, order " + std::to_string(j_max), slope, 0.3, std::abs(slope - expected) <= 0.3,
                 "|slope - (J+1)| <= tolerance");
      int next = j_max + 1;
      while (next <= res.series.order() && std::abs(res.series[next]) <= 1e-13 * std::abs(e0)) ++next;
      rows.info("first nonzero omitted order", next);
      rep.doc["scaling"] = {{"order", j_max}, {"expected_slope", expected}, {"slope", slope}, {"rows", table}};
      rep.files.emplace_back("scaling.csv", csv.str());

      SvgPlot plot;
      plot.title = "Truncation error of the perturbation series";
      plot.xlabel = "log10 beta";
      plot.ylabel = "log10 |E_oracle - E_series|";
      SvgSeries pts{"oracle - series (J=" + std::to_string(j_max) + ")", {}, {}, true};
      SvgSeries ref{"slope J+1", {}, {}, false};
      for (std::size_t i = 0; i < diffs.size(); ++i) {
        pts.x.push_back(std::log10(config.betas[i]));
        pts.y.push_back(std::log10(std::abs(diffs[i])));
      }
      for (std::size_t i : {std::size_t{0}, diffs.size() - 1}) {
        ref.x.push_back(pts.x[i]);
        ref.y.push_back(pts.y[0] + expected * (pts.x[i] - pts.x[0]));
      }
      plot.series = {pts, ref};
      rep.files.emplace_back("convergence.svg", render_svg(plot));
    } catch (const Error& ex) {
      rows.error("beta scaling", ex);
    }
  } else {
    const auto spec = coulomb_spec(config);
    auto build = [&](int npoints) { return build_coulomb_radial<double>(spec, 0.0, coulomb_grid(spec, npoints)); };
    try {
      std::vector<double> e;
      for (int g : grids) {
        e.push_back(eigenvalues_lowest(build(g - 1), level + 1)[static_cast<std::size_t>(level)]);
        rows.info("oracle E^(0) grid=" + std::to_string(g), e.back());
      }
      const double best = e.size() > 1 ? richardson(e.back(), e[e.size() - 2]) : e.back();
      const double derived = closed_form::derived::coulomb_e0(spec.kappa, lam, spec.n, spec.m);
      const double published = closed_form::published::coulomb_e0(spec.kappa, lam, spec.n, spec.m);
      rows.bound("oracle E^(0) - derived closed form", best - derived, 1e-5);
      rows.info("oracle E^(0) - published closed form", best - published);
      energies.push_back({{"n", spec.n}, {"m", spec.m}, {"oracle", best}, {"derived", derived}, {"published", published}});
    } catch (const Error& ex) {
      rows.error("oracle energy", ex);
    }
    rows.not_applicable("virial (Coulomb)",
                        "the weighted virial integrands diverge at the equator that the bound state reaches");
    try {
      const RadialOscillatorSpec ro{1.0, spec.n, spec.m, spec.params};
      auto build_ro = [&](int npoints) { return build_radial_oscillator<double>(ro, radial_oscillator_grid(ro, npoints)); };
      virial_rows(rows, "virial (radial oscillator, same m and lambda)", grids, level, build_ro);
    } catch (const Error& ex) {
      rows.error("virial (radial oscillator)", ex);
    }
    if (!ks.empty()) {
      try {
        hypervirial_rows(rows, grids, level, ks, build);
      } catch (const Error& ex) {
        rows.error("hypervirial", ex);
      }
    }
    rows.not_applicable("beta scaling", "the quadruple-precision energy shift is implemented for the oscillator");
  }
  rep.doc["energies"] = energies;
  finish(rep, rows);
  return rep;
}

Report cmd_classical(const RunConfig& config) {
  Report rep;
  rep.doc = header("classical", config);
  Rows rows;
  const auto& cc = config.classical;
  const CurvedParams params(config.lambda);
  const std::string kind = cc.potential.empty() ? (is_oscillator(config) ? "oscillator" : "coulomb") : cc.potential;
  const ClassicalPotential base =
      kind == "coulomb" ? ClassicalPotential::coulomb(config.kappa) : ClassicalPotential::oscillator(config.alpha);

  IntegrationOptions opts;
  opts.tmax = cc.tmax;
  opts.samples = cc.samples;

  Json orbits = Json::array();
  std::ostringstream csv;
  csv << "orbit,period,g_T_r,T_theta,g_r_dV,g_pi2,residual_general,residual_equivalent\n";
  SvgPlot plot;
  plot.title = "Projected orbits, " + kind + ", lambda = " + short_num(config.lambda);
  plot.xlabel = "x = r cos(theta)";
  plot.ylabel = "y = r sin(theta)";
  plot.equal_axes = true;

  for (const auto& name : cc.orbits) {
    const std::string p = name + ": ";
    try {
      ClassicalPotential v = base;
      OrbitState init{cc.r0, 0.0, cc.rdot0, cc.thetadot0};
      double vir_tol = 1e-6, eq_tol = 1e-7;
      if (name == "circular") {
        init = circular_state(v, cc.r0, params);
        vir_tol = 1e-8;
        eq_tol = 1e-9;
      } else if (name == "radial") {
        init = {cc.r0, 0.0, 0.0, 0.0};
        vir_tol = 1e-7;
      } else if (name == "precessing") {
        v.epsilon = cc.epsilon;
      }
      const SphericalOrbit orbit = integrate_sphere(v, init, params, opts);
      rows.bound(p + "energy drift (relative)", energy_drift(orbit), 1e-9);
      rows.bound(p + "angular momentum drift", angular_momentum_drift(orbit), 1e-9);
      if (name == "circular") rows.bound(p + "radius variation", radius_variation(orbit), 1e-8);
      if (name == "radial") rows.bound(p + "angular momentum", orbit.angular_momentum, 0.0);

      Json entry{{"orbit", name},
                 {"potential", v.describe()},
                 {"energy", orbit.energy},
                 {"angular_momentum", orbit.angular_momentum},
                 {"period", orbit.period ? Json(*orbit.period) : Json(nullptr)},
                 {"closed", orbit.closed},
                 {"return_distance", orbit.return_distance}};

      if (name == "precessing") {
        if (orbit.closed)
          rows.check(p + "closure return distance", orbit.return_distance, opts.closure_tol, false,
                     "negative control must not close");
        else
          rows.expected_fail(p + "closure return distance", orbit.return_distance, opts.closure_tol,
                             "abs <= tolerance");
      } else {
        rows.bound(p + "closure return distance", orbit.return_distance, opts.closure_tol);
      }

      const VirialAverages va = virial_time_averages(orbit);
      rows.bound(p + "virial residual, radial/rotational form", va.residual_general, vir_tol);
      rows.bound(p + "virial residual, curved-momentum form", va.residual_equivalent, vir_tol);
      rows.bound(p + "pointwise identity of the two forms", va.pointwise_identity, 1e-10);
      entry["averages"] = {{"g_T_r", va.g_t_radial},
                           {"T_theta", va.t_angular},
                           {"g_r_dV", va.g_r_dv},
                           {"g_pi2", va.g_pi_squared}};
      csv << name << ',' << num(va.period) << ',' << num(va.g_t_radial) << ',' << num(va.t_angular) << ','
          << num(va.g_r_dv) << ',' << num(va.g_pi_squared) << ',' << num(va.residual_general) << ','
          << num(va.residual_equivalent) << '\n';

      if (orbit.angular_momentum != 0.0) {
        rows.bound(p + "orbit equation residual", orbit_equation_residual(orbit), eq_tol);
        const CorrespondenceReport cr = flat_correspondence(orbit);
        rows.bound(p + "flat correspondence path distance", cr.hausdorff, 1e-6);
        rows.bound(p + "flat correspondence velocity deviation", cr.velocity_deviation, 1e-6);
        rows.info(p + "period ratio sphere/flat", cr.period_ratio);
        entry["correspondence"] = {{"flat_energy", cr.flat.energy},
                                   {"path_distance", cr.hausdorff},
                                   {"velocity_deviation", cr.velocity_deviation},
                                   {"period_ratio", cr.period_ratio}};
      } else {
        rows.not_applicable(p + "orbit equation", "L = 0; the radial virial form covers this orbit");
      }

      SvgSeries s{name, {}, {}, false};
      for (const auto& smp : orbit.samples) {
        s.x.push_back(smp.r * std::cos(smp.theta));
        s.y.push_back(smp.r * std::sin(smp.theta));
      }
      plot.series.push_back(std::move(s));
      orbits.push_back(entry);
    } catch (const Error& ex) {
      rows.error(p + "integration", ex);
    }
  }
  rep.doc["orbits"] = orbits;
  rep.files.emplace_back("virial_averages.csv", csv.str());
  rep.files.emplace_back("orbits.svg", render_svg(plot));
  finish(rep, rows);
  return rep;
}

Report run_command(const std::string& command, const RunConfig& config) {
  Report rep;
  try {
    validate(config);
  } catch (const Error& e) {
    rep.doc = header(command, config);
    rep.doc["error"] = {{"type", "ConfigError"}, {"status", "rejected-config"}, {"message", e.what()}};
    rep.exit_status = kInvalidConfig;
    return rep;
  }
  try {
    if (command == "series") return cmd_series(config);
    if (command == "verify") return cmd_verify(config);
    if (command == "classical") return cmd_classical(config);
    throw ConfigError("unknown command '" + command + "'");
  } catch (const ConfigError& e) {
    rep.doc = header(command, config);
    rep.doc["error"] = {{"type", "ConfigError"}, {"status", "rejected-config"}, {"message", e.what()}};
    rep.exit_status = kInvalidConfig;
  } catch (const Error& e) {
    rep.doc = header(command, config);
    rep.doc["error"] = {{"type", Rows::error_type(e)}, {"status", "numerical-error"}, {"message", e.what()}};
    rep.exit_status = kNumericalError;
  }
  return rep;
}

void write_report(const Report& report, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  {
    std::ofstream f(fs::path(out_dir) / "report.json");
    f << report.doc.dump(2) << '\n';
  }
  for (const auto& [name, contents] : report.files) {
    std::ofstream f(fs::path(out_dir) / name);
    f << contents;
  }
}

}  // namespace curvhv::cli
