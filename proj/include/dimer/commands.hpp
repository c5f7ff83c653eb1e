#pragma once

#include <iosfwd>

#include "dimer/config.hpp"

namespace dimer::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kConfigError = 2,
  kIoError = 3,
  kNoSolution = 4,
};

// Each command prints a short report to `out`, warnings to `err`, and writes
// its CSV files into cfg.output_dir (which must exist).

/// transform.csv: exciton frame, thermal occupation and decay rates.
void cmd_transform(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// sweep.csv (+ sweep.gp): 1/alpha against |eta| for each theta.
void cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// minima.csv: location and value of the 1/alpha minimum per theta.
void cmd_minimize(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// estimate.csv, estimate_roots.csv: |eta| and lambda2 reaching the target ratio.
void cmd_estimate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// analytic.csv, numeric.csv: density-matrix trajectories.
void cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// helix.csv: attenuation of a regular peptide chain.
void cmd_helix(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// renorm.csv: principal-value exciton frequency shifts from bath.modes.
void cmd_renorm(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dimer::cli
