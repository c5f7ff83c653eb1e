#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dimer/decay.hpp"
#include "dimer/dynamics.hpp"
#include "dimer/exciton.hpp"

namespace dimer {

struct InitialStateSpec {
  /// site1 | site2 | exciton1 | exciton2 | superposition | custom
  std::string preset = "site1";
  Basis custom_basis = Basis::site;
  Eigen::Matrix3cd custom = Eigen::Matrix3cd::Zero();
};

struct TimeGrid {
  double t_max = 2000.0;  // fs
  int n_points = 201;
  double dt = kDefaultStep;  // fs
};

struct SweepSpec {
  std::vector<double> thetas;
  double eta_min = 0.2;
  double eta_max = 5.0;
  int n_points = 200;
};

struct HelixSpec {
  double spacing = 4.5;   // angstrom
  double speed = 4000.0;  // m/s
  double J12 = 7.8;       // cm^-1
};

/// Everything a CLI run needs. Defaults reproduce the FMO pigment 1-2 dimer.
struct RunConfig {
  DimerParams dimer;
  BathSpec bath;
  std::filesystem::path modes_path;  // optional mode list for frequency shifts
  InitialStateSpec state;
  TimeGrid time;
  SweepSpec sweep;
  double target_ratio = 22.0;
  HelixSpec helix;
  bool renormalize = false;
  std::filesystem::path output_dir = ".";
  Basis output_basis = Basis::site;
  bool gnuplot = false;

  RunConfig();
};

/// Flat `section.key -> value` view of an INI file or command-line overrides.
using KeyValues = std::map<std::string, std::string>;

struct ConfigKey {
  std::string name;
  std::string help;
};

/// Every key the configuration understands, in documentation order.
const std::vector<ConfigKey>& config_keys();

/// Parses an INI file with [section] headers into section.key pairs.
/// Throws ConfigError on a missing or malformed file.
KeyValues read_ini(const std::filesystem::path& path);

/// Applies `values` over the defaults and validates the result. Throws
/// ConfigError naming the first offending key.
RunConfig build_config(const KeyValues& values);

/// Angle parser accepting plain numbers and multiples of pi ("pi", "3pi/4", "-pi/2").
double parse_angle(const std::string& text);

/// The configured initial state, expressed in its native basis.
OneExcitationState initial_state(const InitialStateSpec& spec);

}  // namespace dimer
