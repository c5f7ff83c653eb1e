#include "dimer/config.hpp"

#include <charconv>
#include <cmath>
#include <regex>

#include <boost/algorithm/string/split.hpp>
#include <boost/algorithm/string/trim.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "dimer/errors.hpp"
#include "dimer/units.hpp"

namespace dimer {

RunConfig::RunConfig() {
  dimer.omega1 = 120.0;
  dimer.omega2 = 0.0;
  dimer.J12 = -96.0;
  dimer.lambda1 = 35.0;
  dimer.eta_abs = 0.71;
  dimer.theta = 0.0;
  bath.temperature = 300.0;
  bath.gamma_d = 1.0 / 50.0;
  const double pi = units::kPi;
  sweep.thetas = {0.0, pi / 4.0, pi / 2.0, 3.0 * pi / 4.0, pi};
}

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys = {
      {"dimer.omega1", "site 1 (higher) energy, cm^-1"},
      {"dimer.omega2", "site 2 energy, cm^-1"},
      {"dimer.J12", "intersite coupling, cm^-1"},
      {"dimer.lambda1", "reorganization energy of site 1, cm^-1"},
      {"dimer.eta_abs", "|eta|, site asymmetry modulus"},
      {"dimer.theta", "arg(eta), rad (accepts pi multiples, folded onto [0, pi])"},
      {"dimer.eta_re", "Re(eta); with dimer.eta_im replaces eta_abs/theta"},
      {"dimer.eta_im", "Im(eta)"},
      {"bath.temperature", "bath temperature, K"},
      {"bath.gamma_d", "site dephasing rate, fs^-1"},
      {"bath.modes", "CSV mode list (omega_k_cm1,V2_k_cm2) for frequency shifts"},
      {"state.preset", "site1|site2|exciton1|exciton2|superposition|custom"},
      {"state.basis", "basis of the custom state: site|exciton"},
      {"state.custom_re", "custom rho real parts, 9 comma-separated values row-major"},
      {"state.custom_im", "custom rho imaginary parts, 9 values row-major"},
      {"time.t_max", "final time, fs"},
      {"time.n_points", "number of output times (>= 2)"},
      {"time.dt", "RK4 step, fs"},
      {"scan.thetas", "comma-separated theta values for sweep/minimize/estimate"},
      {"scan.eta_min", "smallest |eta| in the sweep grid"},
      {"scan.eta_max", "largest |eta| in the sweep grid"},
      {"scan.n_points", "sweep grid size (>= 2)"},
      {"estimate.target_ratio", "gamma_d / gamma to invert for |eta|"},
      {"helix.a", "peptide spacing, angstrom"},
      {"helix.v", "speed of sound, m/s"},
      {"helix.J12", "vibron coupling, cm^-1"},
      {"evolve.renormalize", "add the mode-list frequency shifts to w+ and w- (true|false)"},
      {"output.dir", "output directory"},
      {"output.basis", "basis of evolve trajectories: site|exciton"},
      {"output.gnuplot", "also write a gnuplot script for sweep (true|false)"},
  };
  return keys;
}

namespace {

// "120  ; note" -> "120"; a ';' or '#' counts only after whitespace
std::string strip_inline_comment(const std::string& raw) {
  static const std::regex comment(R"(\s+[;#].*$)");
  return std::regex_replace(raw, comment, "");
}

}  // namespace

KeyValues read_ini(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw IoError("config file " + path.string() + " does not exist");
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(path.string(), tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("config", e.what());
  }
  KeyValues kv;
  for (const auto& [section, body] : tree) {
    if (body.empty()) {
      kv[section] = strip_inline_comment(body.data());
      continue;
    }
    for (const auto& [key, value] : body) kv[section + "." + key] = strip_inline_comment(value.data());
  }
  return kv;
}

namespace {

std::string unquote(std::string s) {
  boost::algorithm::trim(s);
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front())
    s = s.substr(1, s.size() - 2);
  return s;
}

double parse_double(const std::string& key, const std::string& raw) {
  const std::string s = unquote(raw);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw ConfigError(key, "'" + s + "' is not a finite number");
  return v;
}

int parse_int(const std::string& key, const std::string& raw) {
  const std::string s = unquote(raw);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ConfigError(key, "'" + s + "' is not an integer");
  return v;
}

bool parse_bool(const std::string& key, const std::string& raw) {
  const std::string s = unquote(raw);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError(key, "'" + s + "' is not a boolean");
}

Basis parse_basis(const std::string& key, const std::string& raw) {
  const std::string s = unquote(raw);
  if (s == "site") return Basis::site;
  if (s == "exciton") return Basis::exciton;
  throw ConfigError(key, "basis must be 'site' or 'exciton'");
}

std::vector<std::string> split_list(const std::string& raw) {
  std::vector<std::string> parts;
  const std::string s = unquote(raw);
  boost::algorithm::split(parts, s, [](char c) { return c == ',' || c == ';'; });
  for (auto& p : parts) boost::algorithm::trim(p);
  return parts;
}

std::vector<double> parse_list(const std::string& key, const std::string& raw) {
  std::vector<double> out;
  for (const auto& p : split_list(raw)) out.push_back(parse_double(key, p));
  return out;
}

}  // namespace

double parse_angle(const std::string& text) {
  const std::string s = unquote(text);
  static const std::regex pi_form(R"(^([+-]?)\s*(\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d*\.?\d+))?$)");
  std::smatch m;
  if (std::regex_match(s, m, pi_form)) {
    double factor = m[2].length() ? std::stod(m[2].str()) : 1.0;
    if (m[3].matched) factor /= std::stod(m[3].str());
    if (m[1].str() == "-") factor = -factor;
    return factor * units::kPi;
  }
  return parse_double("angle", s);
}

RunConfig build_config(const KeyValues& values) {
  for (const auto& [key, value] : values) {
    bool known = false;
    for (const auto& k : config_keys()) known = known || k.name == key;
    if (!known) throw ConfigError(key, "unknown configuration key");
  }

  RunConfig c;
  const auto get = [&](const std::string& key) -> const std::string* {
    const auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
  };
  const auto num = [&](const std::string& key, double& target) {
    if (const auto* v = get(key)) target = parse_double(key, *v);
  };
  const auto integer = [&](const std::string& key, int& target) {
    if (const auto* v = get(key)) target = parse_int(key, *v);
  };
  const auto angle = [&](const std::string& key, double& target) {
    if (const auto* v = get(key)) {
      try {
        target = parse_angle(*v);
      } catch (const std::exception&) {
        throw ConfigError(key, "'" + unquote(*v) + "' is not an angle");
      }
    }
  };

  num("dimer.omega1", c.dimer.omega1);
  num("dimer.omega2", c.dimer.omega2);
  num("dimer.J12", c.dimer.J12);
  num("dimer.lambda1", c.dimer.lambda1);
  num("dimer.eta_abs", c.dimer.eta_abs);
  angle("dimer.theta", c.dimer.theta);
  c.dimer.theta = fold_theta(c.dimer.theta);
  if (get("dimer.eta_re") || get("dimer.eta_im")) {
    if (get("dimer.eta_abs") || get("dimer.theta"))
      throw ConfigError("dimer.eta_re", "give either eta_re/eta_im or eta_abs/theta, not both");
    double re = 0.0, im = 0.0;
    num("dimer.eta_re", re);
    num("dimer.eta_im", im);
    c.dimer = DimerParams::from_complex_eta(c.dimer.omega1, c.dimer.omega2, c.dimer.J12, c.dimer.lambda1, {re, im});
  }
  if (!(c.dimer.omega1 > c.dimer.omega2)) throw ConfigError("dimer.omega1", "must exceed dimer.omega2");
  if (c.dimer.lambda1 < 0.0) throw ConfigError("dimer.lambda1", "must be non-negative");
  if (c.dimer.eta_abs < 0.0) throw ConfigError("dimer.eta_abs", "must be non-negative");
  if (renormalized_gap(c.dimer) == 0.0 && c.dimer.J12 == 0.0)
    throw ConfigError("dimer.J12", "zero coupling with zero renormalized gap leaves the exciton frame undefined");

  num("bath.temperature", c.bath.temperature);
  num("bath.gamma_d", c.bath.gamma_d);
  if (!(c.bath.temperature > 0.0)) throw ConfigError("bath.temperature", "must be positive");
  if (c.bath.gamma_d < 0.0) throw ConfigError("bath.gamma_d", "must be non-negative");
  if (const auto* v = get("bath.modes")) {
    c.modes_path = unquote(*v);
  }

  if (const auto* v = get("state.preset")) c.state.preset = unquote(*v);
  if (const auto* v = get("state.basis")) c.state.custom_basis = parse_basis("state.basis", *v);
  static const std::vector<std::string> presets = {"site1", "site2", "exciton1", "exciton2", "superposition", "custom"};
  if (std::find(presets.begin(), presets.end(), c.state.preset) == presets.end())
    throw ConfigError("state.preset", "unknown preset '" + c.state.preset + "'");
  if (c.state.preset == "custom") {
    const auto* re = get("state.custom_re");
    if (!re) throw ConfigError("state.custom_re", "required for the custom preset");
    const std::vector<double> real = parse_list("state.custom_re", *re);
    std::vector<double> imag(9, 0.0);
    if (const auto* im = get("state.custom_im")) imag = parse_list("state.custom_im", *im);
    if (real.size() != 9) throw ConfigError("state.custom_re", "expected 9 values");
    if (imag.size() != 9) throw ConfigError("state.custom_im", "expected 9 values");
    for (int i = 0; i < 9; ++i) c.state.custom(i / 3, i % 3) = {real[static_cast<std::size_t>(i)], imag[static_cast<std::size_t>(i)]};
    if (!diagnose({c.state.custom_basis, c.state.custom}).physical(1e-10, 1e-10, 1e-10))
      throw ConfigError("state.custom_re", "custom state must be Hermitian, unit trace and positive semidefinite");
  }

  num("time.t_max", c.time.t_max);
  integer("time.n_points", c.time.n_points);
  num("time.dt", c.time.dt);
  if (!(c.time.t_max > 0.0)) throw ConfigError("time.t_max", "must be positive");
  if (c.time.n_points < 2) throw ConfigError("time.n_points", "must be at least 2");
  if (!(c.time.dt > 0.0)) throw ConfigError("time.dt", "must be positive");

  if (const auto* v = get("scan.thetas")) {
    c.sweep.thetas.clear();
    for (const auto& item : split_list(*v)) {
      try {
        c.sweep.thetas.push_back(parse_angle(item));
      } catch (const std::exception&) {
        throw ConfigError("scan.thetas", "'" + item + "' is not an angle");
      }
    }
  }
  num("scan.eta_min", c.sweep.eta_min);
  num("scan.eta_max", c.sweep.eta_max);
  integer("scan.n_points", c.sweep.n_points);
  if (c.sweep.thetas.empty()) throw ConfigError("scan.thetas", "needs at least one angle");
  if (!(c.sweep.eta_min > 0.0)) throw ConfigError("scan.eta_min", "must be positive");
  if (!(c.sweep.eta_max > c.sweep.eta_min)) throw ConfigError("scan.eta_max", "must exceed scan.eta_min");
  if (c.sweep.n_points < 2) throw ConfigError("scan.n_points", "must be at least 2");

  num("estimate.target_ratio", c.target_ratio);
  if (!(c.target_ratio > 0.0)) throw ConfigError("estimate.target_ratio", "must be positive");

  num("helix.a", c.helix.spacing);
  num("helix.v", c.helix.speed);
  num("helix.J12", c.helix.J12);
  if (!(c.helix.spacing > 0.0)) throw ConfigError("helix.a", "must be positive");
  if (!(c.helix.speed > 0.0)) throw ConfigError("helix.v", "must be positive");

  if (const auto* v = get("evolve.renormalize")) c.renormalize = parse_bool("evolve.renormalize", *v);
  if (c.renormalize && c.modes_path.empty()) throw ConfigError("bath.modes", "required when evolve.renormalize is set");

  if (const auto* v = get("output.dir")) c.output_dir = unquote(*v);
  if (const auto* v = get("output.basis")) c.output_basis = parse_basis("output.basis", *v);
  if (const auto* v = get("output.gnuplot")) c.gnuplot = parse_bool("output.gnuplot", *v);
  return c;
}

OneExcitationState initial_state(const InitialStateSpec& spec) {
  using V = Eigen::Vector3cd;
  if (spec.preset == "site1") return pure_state(Basis::site, V(0, 1, 0));
  if (spec.preset == "site2") return pure_state(Basis::site, V(0, 0, 1));
  if (spec.preset == "exciton1") return pure_state(Basis::exciton, V(0, 1, 0));
  if (spec.preset == "exciton2") return pure_state(Basis::exciton, V(0, 0, 1));
  if (spec.preset == "superposition") return pure_state(Basis::site, V(1, 1, 1));
  if (spec.preset == "custom") return {spec.custom_basis, spec.custom};
  throw ConfigError("state.preset", "unknown preset '" + spec.preset + "'");
}

}  // namespace dimer
