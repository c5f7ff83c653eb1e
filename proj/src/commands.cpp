#include "dimer/commands.hpp"

#include <functional>
#include <iomanip>
#include <ostream>
#include <utility>

#include <CLI11.hpp>

#include "dimer/analysis.hpp"
#include "dimer/errors.hpp"
#include "dimer/io.hpp"
#include "dimer/numerics.hpp"

namespace dimer::cli {

namespace {

using io::CsvTable;
using io::format_number;

const std::vector<std::string> kStateColumns = {
    "rho00_re", "rho00_im", "rho01_re", "rho01_im", "rho02_re", "rho02_im",
    "rho11_re", "rho11_im", "rho12_re", "rho12_im", "rho22_re", "rho22_im"};

std::vector<double> state_row(double t, const OneExcitationState& s) {
  std::vector<double> row{t};
  for (auto [i, j] : {std::pair{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}) {
    row.push_back(s.rho(i, j).real());
    row.push_back(s.rho(i, j).imag());
  }
  return row;
}

void print_table(std::ostream& out, const std::vector<std::pair<std::string, double>>& rows) {
  for (const auto& [key, value] : rows) out << std::left << std::setw(18) << key << format_number(value) << '\n';
}

std::vector<BathMode> load_modes(const RunConfig& cfg) {
  if (cfg.modes_path.empty()) throw ConfigError("bath.modes", "a mode list is required");
  try {
    return io::read_modes_csv(cfg.modes_path);
  } catch (const DomainError& e) {
    throw ConfigError("bath.modes", e.what());
  }
}

void warn_frame(const ExcitonFrame& f, std::ostream& err) {
  if (f.inverted)
    err << "warning: renormalized site 2 lies above site 1 (w'_1 < w'_2); exciton labels follow the principal branch\n";
}

EvolutionParams evolution_params(const RunConfig& cfg, const ExcitonFrame& frame, const RateSet& rates) {
  EvolutionParams p;
  p.gamma = rates.gamma;
  p.nbar0 = rates.nbar0;
  p.omega_plus = frame.omega_plus;
  p.omega_minus = frame.omega_minus;
  p.phi0 = frame.phi0;
  if (cfg.renormalize) {
    const std::vector<BathMode> modes = load_modes(cfg);
    const FrequencyShift shift = frequency_renormalization(modes, frame.omega0, cfg.bath.temperature);
    p.omega_plus -= shift.delta_plus;
    p.omega_minus -= shift.delta_minus;
  }
  return p;
}

std::vector<std::string> theta_header(const std::vector<double>& thetas) {
  std::vector<std::string> header{"quantity"};
  for (double th : thetas) header.push_back(format_number(fold_theta(th)));
  return header;
}

}  // namespace

void cmd_transform(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ExcitonFrame f = exciton_frame(cfg.dimer);
  const RateSet r = rate_set(cfg.dimer, cfg.bath);
  warn_frame(f, err);
  if (lambda2_from_eta(cfg.dimer.lambda1, cfg.dimer.eta_abs, cfg.dimer.theta).unphysical)
    err << "warning: lambda2 is negative for these |eta| and theta\n";

  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<std::pair<std::string, double>> rows = {
      {"phi0_rad", f.phi0},
      {"omega1p_cm1", f.omega1p},
      {"omega2p_cm1", f.omega2p},
      {"omega_plus_cm1", f.omega_plus},
      {"omega_minus_cm1", f.omega_minus},
      {"omega0_cm1", f.omega0},
      {"nbar0", r.nbar0},
      {"alpha", r.alpha},
      {"inverse_alpha", r.inverse_alpha},
      {"gamma_fs1", r.gamma},
      {"lifetime_fs", r.lifetime.value_or(inf)},
  };
  print_table(out, rows);

  std::vector<std::string> header;
  std::vector<double> values;
  for (const auto& [k, v] : rows) {
    header.push_back(k);
    values.push_back(v);
  }
  CsvTable table(header);
  table.add_row(values);
  table.write(cfg.output_dir / "transform.csv");
}

void cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const std::vector<double> grid = numerics::linspace(cfg.sweep.eta_min, cfg.sweep.eta_max, cfg.sweep.n_points);
  CsvTable table({"theta_rad", "eta_abs", "inverse_alpha"});
  std::vector<std::string> thetas;
  for (double th : cfg.sweep.thetas) {
    const SweepResult s = sweep_inverse_alpha(cfg.dimer, th, grid);
    for (const SweepPoint& pt : s.points) table.add_row(std::vector<double>{s.theta, pt.eta_abs, pt.inverse_alpha});
    out << "theta " << format_number(s.theta) << ": sampled minimum 1/alpha = " << format_number(s.minimum.inverse_alpha)
        << " at |eta| = " << format_number(s.minimum.eta_abs) << '\n';
    thetas.push_back(format_number(s.theta));
  }
  table.write(cfg.output_dir / "sweep.csv");

  if (cfg.gnuplot) {
    std::string script =
        "set datafile separator ','\n"
        "set xlabel '|eta|'\n"
        "set ylabel '1/alpha'\n"
        "plot";
    for (std::size_t i = 0; i < thetas.size(); ++i) {
      script += (i ? ", \\\n    " : " ");
      script += "'sweep.csv' every ::1 using 2:($1==" + thetas[i] + " ? $3 : 1/0) with lines title 'theta=" + thetas[i] + "'";
    }
    script += '\n';
    io::write_text(cfg.output_dir / "sweep.gp", script);
  }
}

void cmd_minimize(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  std::vector<std::string> eta_row{"eta_min"};
  std::vector<std::string> value_row{"inv_alpha_min"};
  for (double th : cfg.sweep.thetas) {
    const AlphaMinimum m = find_alpha_minimum(cfg.dimer, th);
    eta_row.push_back(format_number(m.eta_min));
    value_row.push_back(format_number(m.inv_alpha_min));
    out << "theta " << format_number(fold_theta(th)) << ": |eta|_min = " << format_number(m.eta_min)
        << ", (1/alpha)_min = " << format_number(m.inv_alpha_min) << '\n';
  }
  CsvTable table(theta_header(cfg.sweep.thetas));
  table.add_row(eta_row);
  table.add_row(value_row);
  table.write(cfg.output_dir / "minima.csv");
}

void cmd_estimate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<EtaEstimate> estimates;
  for (double th : cfg.sweep.thetas) estimates.push_back(estimate_eta(cfg.dimer, th, cfg.target_ratio));

  std::vector<std::string> eta_row{"eta_abs"};
  std::vector<std::string> lambda_row{"lambda2_cm1"};
  CsvTable roots({"theta_rad", "root_index", "eta_abs"});
  for (const EtaEstimate& e : estimates) {
    eta_row.push_back(format_number(e.eta_abs));
    lambda_row.push_back(format_number(e.lambda2));
    for (std::size_t i = 0; i < e.all_roots.size(); ++i)
      roots.add_row(std::vector<double>{e.theta, static_cast<double>(i), e.all_roots[i]});
    out << "theta " << format_number(e.theta) << ": |eta| = " << format_number(e.eta_abs)
        << ", lambda2 = " << format_number(e.lambda2) << " cm^-1\n";
    if (e.lambda2_unphysical) err << "warning: negative lambda2 at theta " << format_number(e.theta) << '\n';
  }
  CsvTable table(theta_header(cfg.sweep.thetas));
  table.add_row(eta_row);
  table.add_row(lambda_row);
  table.write(cfg.output_dir / "estimate.csv");
  roots.write(cfg.output_dir / "estimate_roots.csv");
}

void cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ExcitonFrame frame = exciton_frame(cfg.dimer);
  warn_frame(frame, err);
  const RateSet rates = rate_set(cfg.dimer, cfg.bath);
  const EvolutionParams p = evolution_params(cfg, frame, rates);

  const OneExcitationState rho0 = in_basis(initial_state(cfg.state), cfg.output_basis, p.phi0);
  const std::vector<double> times = numerics::linspace(0.0, cfg.time.t_max, cfg.time.n_points);

  std::vector<OneExcitationState> numeric;
  try {
    numeric = numeric_trajectory(rho0, times, cfg.time.dt, p);
  } catch (const StepSizeError& e) {
    throw ConfigError("time.dt", e.what());
  }
  const std::vector<OneExcitationState> analytic = analytic_trajectory(rho0, times, p);

  std::vector<std::string> header{"t_fs"};
  header.insert(header.end(), kStateColumns.begin(), kStateColumns.end());
  CsvTable analytic_table(header);
  header.push_back("sup_norm_diff");
  CsvTable numeric_table(header);

  double worst = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    analytic_table.add_row(state_row(times[i], analytic[i]));
    std::vector<double> row = state_row(times[i], numeric[i]);
    const double diff = sup_norm_distance(analytic[i], numeric[i]);
    worst = std::max(worst, diff);
    row.push_back(diff);
    numeric_table.add_row(row);
  }
  analytic_table.write(cfg.output_dir / "analytic.csv");
  numeric_table.write(cfg.output_dir / "numeric.csv");

  out << "basis " << to_string(cfg.output_basis) << ", " << times.size() << " points to "
      << format_number(cfg.time.t_max) << " fs\n"
      << "gamma = " << format_number(p.gamma) << " fs^-1, nbar0 = " << format_number(p.nbar0) << '\n'
      << "max |analytic - numeric| = " << format_number(worst) << '\n';
}

void cmd_helix(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const double alpha = helix_attenuation(cfg.helix.spacing, cfg.helix.speed, cfg.helix.J12);
  const double inf = std::numeric_limits<double>::infinity();
  const double gamma = decay_constant(alpha, cfg.bath.gamma_d);
  const std::vector<std::pair<std::string, double>> rows = {
      {"a_angstrom", cfg.helix.spacing},
      {"v_m_s", cfg.helix.speed},
      {"J12_cm1", cfg.helix.J12},
      {"alpha_hx", alpha},
      {"inverse_alpha_hx", alpha > 0.0 ? 1.0 / alpha : inf},
      {"gamma_fs1", gamma},
      {"lifetime_fs", gamma > 0.0 ? 1.0 / gamma : inf},
  };
  print_table(out, rows);
  std::vector<std::string> header;
  std::vector<double> values;
  for (const auto& [k, v] : rows) {
    header.push_back(k);
    values.push_back(v);
  }
  CsvTable table(header);
  table.add_row(values);
  table.write(cfg.output_dir / "helix.csv");
}

void cmd_renorm(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::vector<BathMode> modes = load_modes(cfg);
  const ExcitonFrame f = exciton_frame(cfg.dimer);
  warn_frame(f, err);
  FrequencyShift shift;
  try {
    shift = frequency_renormalization(modes, f.omega0, cfg.bath.temperature);
  } catch (const ResonantModeError& e) {
    throw ConfigError("bath.modes", e.what());
  }
  const std::vector<std::pair<std::string, double>> rows = {
      {"omega0_cm1", f.omega0},
      {"temperature_K", cfg.bath.temperature},
      {"n_modes", static_cast<double>(modes.size())},
      {"delta_plus_cm1", shift.delta_plus},
      {"delta_minus_cm1", shift.delta_minus},
      {"omega_plus_cm1", f.omega_plus},
      {"omega_minus_cm1", f.omega_minus},
      {"omega_plus_bar_cm1", f.omega_plus - shift.delta_plus},
      {"omega_minus_bar_cm1", f.omega_minus - shift.delta_minus},
  };
  print_table(out, rows);
  std::vector<std::string> header;
  std::vector<double> values;
  for (const auto& [k, v] : rows) {
    header.push_back(k);
    values.push_back(v);
  }
  CsvTable table(header);
  table.add_row(values);
  table.write(cfg.output_dir / "renorm.csv");
}

namespace {

constexpr const char* kFooter = R"(Output files (comma-separated, header row, LF, 9 significant digits):
  transform  transform.csv  phi0_rad,omega1p_cm1,omega2p_cm1,omega_plus_cm1,omega_minus_cm1,
                            omega0_cm1,nbar0,alpha,inverse_alpha,gamma_fs1,lifetime_fs
  sweep      sweep.csv      theta_rad,eta_abs,inverse_alpha   (sweep.gp with output.gnuplot)
  minimize   minima.csv     quantity,<one column per theta>; rows eta_min, inv_alpha_min
  estimate   estimate.csv   quantity,<one column per theta>; rows eta_abs, lambda2_cm1
             estimate_roots.csv  theta_rad,root_index,eta_abs
  evolve     analytic.csv   t_fs,rho00_re,rho00_im,rho01_re,rho01_im,rho02_re,rho02_im,
                            rho11_re,rho11_im,rho12_re,rho12_im,rho22_re,rho22_im
             numeric.csv    same columns plus sup_norm_diff
  helix      helix.csv      a_angstrom,v_m_s,J12_cm1,alpha_hx,inverse_alpha_hx,gamma_fs1,lifetime_fs
  renorm     renorm.csv     omega0_cm1,temperature_K,n_modes,delta_plus_cm1,delta_minus_cm1,
                            omega_plus_cm1,omega_minus_cm1,omega_plus_bar_cm1,omega_minus_bar_cm1
Exit codes: 0 ok, 2 configuration error, 3 I/O error, 4 no solution.)";

using Command = void (*)(const RunConfig&, std::ostream&, std::ostream&);

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimer exciton relaxation: exciton frame, attenuated decay rates and one-excitation dynamics"};
  app.footer(kFooter);
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("-c,--config", config_path, "INI file with [dimer], [bath], [state], [time], [scan], "
                                             "[estimate], [helix], [evolve] and [output] sections");

  std::vector<std::pair<std::string, std::string>> overrides;
  overrides.reserve(config_keys().size());
  std::vector<CLI::Option*> override_options;
  for (const ConfigKey& key : config_keys()) {
    overrides.emplace_back(key.name, std::string{});
    override_options.push_back(app.add_option("--" + key.name, overrides.back().second, key.help)
                                   ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast)
                                   ->group("Overrides"));
  }

  const std::vector<std::pair<std::string, Command>> commands = {
      {"transform", &cmd_transform}, {"sweep", &cmd_sweep},   {"minimize", &cmd_minimize},
      {"estimate", &cmd_estimate},   {"evolve", &cmd_evolve}, {"helix", &cmd_helix},
      {"renorm", &cmd_renorm},
  };
  const std::map<std::string, std::string> descriptions = {
      {"transform", "exciton frame, thermal occupation and decay constant"},
      {"sweep", "1/alpha against |eta| for each theta in scan.thetas"},
      {"minimize", "minimum of 1/alpha over |eta| for each theta"},
      {"estimate", "smallest |eta| with 1/alpha = estimate.target_ratio, and lambda2"},
      {"evolve", "analytic and RK4 density-matrix trajectories"},
      {"helix", "attenuation factor of a regular peptide chain"},
      {"renorm", "exciton frequency shifts from the bath.modes list"},
  };
  std::vector<CLI::App*> subcommands;
  for (const auto& [name, fn] : commands) subcommands.push_back(app.add_subcommand(name, descriptions.at(name)));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    KeyValues values;
    if (!config_path.empty()) values = read_ini(config_path);
    for (std::size_t i = 0; i < overrides.size(); ++i)
      if (override_options[i]->count() > 0) values[overrides[i].first] = overrides[i].second;
    const RunConfig cfg = build_config(values);

    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    if (ec) throw IoError("cannot create output directory " + cfg.output_dir.string() + ": " + ec.message());

    for (std::size_t i = 0; i < commands.size(); ++i)
      if (subcommands[i]->parsed()) commands[i].second(cfg, out, err);
    return kOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const NoSolutionError& e) {
    err << "no solution: " << e.what() << '\n';
    return kNoSolution;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace dimer::cli
