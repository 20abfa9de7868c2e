#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace curvhv::cli;
  RunConfig config;
  CLI::App app{"Virial and hypervirial checks on spaces of constant positive curvature"};
  app.set_config("--config", "", "TOML or INI file with any of the options below");
  app.fallthrough();
  app.require_subcommand(1, 1);

  std::vector<int> ks;
  app.add_option("--system", config.system, "oscillator-1d or coulomb-2d")->capture_default_str();
  app.add_option("--alpha", config.alpha, "oscillator strength")->capture_default_str();
  app.add_option("--kappa", config.kappa, "Coulomb strength")->capture_default_str();
  app.add_option("--lambda", config.lambda, "curvature")->capture_default_str();
  app.add_option("--n", config.n, "level")->capture_default_str();
  app.add_option("--m", config.m, "angular quantum number (coulomb-2d)")->capture_default_str();
  app.add_option("--l", config.l, "perturbation power (default 1 or -3)");
  app.add_option("--order", config.order, "perturbation order J")->capture_default_str();
  app.add_option("--beta", config.betas, "beta values for the scaling fit (repeatable)")->capture_default_str();
  app.add_option("--grid", config.grids, "oracle grid interval counts, each doubling the previous (repeatable)")
      ->capture_default_str();
  auto* kopt = app.add_option("--k", ks, "hypervirial k values (repeatable)");
  app.add_flag("--no-k", "skip the hypervirial rows");
  app.add_option("--potential", config.classical.potential, "classical potential: coulomb or oscillator");
  app.add_option("--orbit", config.classical.orbits, "circular, radial, generic, precessing (repeatable)")
      ->capture_default_str();
  app.add_option("--r0", config.classical.r0, "initial projected radius")->capture_default_str();
  app.add_option("--rdot0", config.classical.rdot0, "initial radial velocity (generic orbits)")->capture_default_str();
  app.add_option("--thetadot0", config.classical.thetadot0, "initial angular velocity (generic orbits)")
      ->capture_default_str();
  app.add_option("--epsilon", config.classical.epsilon, "linear term of the precessing control")->capture_default_str();
  app.add_option("--tmax", config.classical.tmax, "integration window")->capture_default_str();
  app.add_option("--samples", config.classical.samples, "samples per period")->capture_default_str();
  app.add_option("--out", config.out, "output directory")->capture_default_str();
  app.add_option("--timestamp", config.timestamp, "fixed report timestamp");

  app.add_subcommand("series", "perturbation coefficients and moment table");
  app.add_subcommand("verify", "oracle energies, virial and hypervirial residuals, beta scaling");
  app.add_subcommand("classical", "orbit integration, virial averages, flat correspondence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidConfig;
  }
  if (kopt->count() > 0) config.ks = ks;
  if (app.get_option("--no-k")->count() > 0) config.ks = std::vector<int>{};

  const std::string command = app.get_subcommands().front()->get_name();
  const Report report = run_command(command, config);
  try {
    write_report(report, config.out);
  } catch (const std::exception& e) {
    std::cerr << "cannot write report: " << e.what() << '\n';
    return kNumericalError;
  }
  if (report.doc.contains("error")) {
    std::cerr << report.doc["error"].dump() << '\n';
  } else {
    const auto& s = report.doc["summary"];
    std::cout << command << ": " << s["pass"] << " pass, " << s["fail"] << " fail, " << s["expected_fail"]
              << " expected-fail, " << s["error"] << " error; report in " << config.out << "/report.json\n";
  }
  return report.exit_status;
}
