#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace curvhv::cli {

using Json = nlohmann::ordered_json;

enum ExitStatus { kPass = 0, kCheckFailure = 1, kInvalidConfig = 2, kNumericalError = 3 };

struct ClassicalConfig {
  // coulomb | oscillator; empty follows the system (coulomb-2d -> coulomb).
  std::string potential;
  // circular | radial | generic | precessing
  std::vector<std::string> orbits{"circular", "radial", "generic"};
  double r0 = 1.0;
  double rdot0 = 0.3;
  double thetadot0 = 0.8;
  double epsilon = 0.05;
  double tmax = 200.0;
  int samples = 4096;
};

struct RunConfig {
  std::string system = "oscillator-1d";  // oscillator-1d | coulomb-2d
  double alpha = 1.0;
  double kappa = 1.0;
  double lambda = 0.1;
  int n = 0;
  int m = 1;
  std::optional<int> l;  // default 1 (oscillator) or -3 (coulomb)
  int order = 4;
  std::vector<double> betas{1e-3, 3e-3, 1e-2};
  // Oracle grids given as interval counts; each must double the previous.
  std::vector<int> grids{2048, 4096};
  std::optional<std::vector<int>> ks;  // hypervirial k values; default per system
  ClassicalConfig classical;
  std::string out = "curvhv-out";
  // Fixed timestamp for reproducible reports; empty uses the current UTC time.
  std::string timestamp;

  int perturbation_power() const;
  std::vector<int> hypervirial_ks() const;
  Json to_json() const;
};

// Throws ConfigError on the first invalid field.
void validate(const RunConfig& config);

struct Report {
  Json doc;
  int exit_status = kPass;
  // Files to write next to the report: (relative name, contents).
  std::vector<std::pair<std::string, std::string>> files;
};

Report cmd_series(const RunConfig& config);
Report cmd_verify(const RunConfig& config);
Report cmd_classical(const RunConfig& config);

// Validates, runs the command, and converts errors into an error object and status.
Report run_command(const std::string& command, const RunConfig& config);

// Writes report.json and the extra files into config.out.
void write_report(const Report& report, const std::string& out_dir);

}  // namespace curvhv::cli
