#include "gaugering/io/commands.hpp"

#include "gaugering/gaugering.hpp"
#include "gaugering/io/state_json.hpp"
#include "gaugering/io/table.hpp"
#include "gaugering/io/validation.hpp"

#include <filesystem>
#include <ostream>
#include <sstream>

namespace gaugering::io {

namespace {

std::string output_path(const RunConfig& config, const std::string& name) {
  return (std::filesystem::path(config.output.directory) / name).string();
}

Metadata base_metadata(const std::string& command, const RunConfig& config) {
  Metadata meta{{"format", "gaugering"}, {"version", std::to_string(kFormatVersion)}, {"command", command}};
  for (const auto& [k, v] : config_entries(config)) meta.emplace_back("config." + k, v);
  return meta;
}

/// Writes `stem`.csv or `stem`.json depending on output.format.
std::string write_table(const RunConfig& config, const std::string& stem, const Table& table) {
  std::ostringstream ss;
  const bool json = config.output.format == "json";
  if (json)
    write_table_json(ss, table);
  else
    write_csv(ss, table);
  const auto path = output_path(config, stem + (json ? ".json" : ".csv"));
  write_file(path, ss.str());
  return path;
}

void write_gnuplot(const RunConfig& config, const std::string& stem, const std::string& body) {
  write_file(output_path(config, stem + ".gp"),
             "# companion plot script for " + stem + ".csv\nset datafile separator ','\nset datafile commentschars '#'\n" +
                 body);
}

ScanOptions<double> scan_options(const RunConfig& config) {
  ScanOptions<double> o;
  o.p_min = config.p_min;
  o.p_max = config.p_max;
  o.sectors = config.sectors;
  o.basis_size = config.basis_size();
  return o;
}

double single_kappa(const RunConfig& config, const char* command) {
  if (config.kappa.count != 1)
    throw ConfigError(std::string(command) + " needs a single kappa (set kappa = <value>)");
  return config.kappa.start;
}

struct LoadedState {
  RelativeEigenstate<double> relative;
  bool inconclusive;
};

LoadedState load_or_solve(const RunConfig& config, const CommandOptions& options, const char* command) {
  if (options.state_path) return {relative_state_from_json(read_file(*options.state_path)), false};
  auto ground = find_ground_state<double>(config.q, single_kappa(config, command), scan_options(config));
  return {std::move(ground.relative), ground.inconclusive};
}

void append_state_metadata(Metadata& meta, const RelativeEigenstate<double>& s) {
  meta.emplace_back("state.q", std::to_string(s.shape().range_exponent()));
  meta.emplace_back("state.kappa", format_double(s.shape().kappa()));
  meta.emplace_back("state.p", std::to_string(s.sector().p));
  meta.emplace_back("state.energy", format_double(s.energy()));
}

}  // namespace

int cmd_spectrum(const RunConfig& config, const CommandOptions& options, std::ostream& out) {
  const auto scan = ground_state_scan<double>(config.q, config.kappa.values(), scan_options(config));
  Table table;
  table.metadata = base_metadata("spectrum", config);
  table.metadata.emplace_back("grid", "kappa rows, lowest eps per momentum sector");
  table.metadata.emplace_back("widenings", std::to_string(scan.widenings));
  table.metadata.emplace_back("inconclusive", scan.inconclusive ? "true" : "false");
  table.columns.push_back("kappa");
  for (int p : scan.momenta) table.columns.push_back("eps_p" + std::to_string(p));
  table.columns.push_back("ground_p");
  for (std::size_t i = 0; i < scan.kappas.size(); ++i) {
    std::vector<double> row{scan.kappas[i]};
    for (int p : scan.momenta) row.push_back(scan.energies.at(p)[i]);
    row.push_back(scan.ground_momentum[i]);
    table.rows.push_back(std::move(row));
  }
  const auto path = write_table(config, "spectrum", table);
  if (options.gnuplot) {
    std::string plot = "set xlabel 'kappa'\nset ylabel 'epsilon'\nplot ";
    for (std::size_t c = 1; c + 1 < table.columns.size(); ++c)
      plot += std::string(c > 1 ? ", " : "") + "'spectrum.csv' using 1:" + std::to_string(c + 1) +
              " with lines title '" + table.columns[c] + "'";
    write_gnuplot(config, "spectrum", plot + "\n");
  }
  out << "wrote " << path << '\n';
  return scan.inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_ground(const RunConfig& config, const CommandOptions& options, std::ostream& out) {
  const double kappa = single_kappa(config, "ground");
  const auto ground = find_ground_state<double>(config.q, kappa, scan_options(config));
  const TwoBodyState<double> state(ground.relative);
  const auto corr = classify_correlation(state);
  const auto wells = classify_wells(effective_potential(ground.relative.shape(), ground.relative.sector()), 1024);

  auto meta = base_metadata("ground", config);
  append_state_metadata(meta, ground.relative);
  write_file(output_path(config, "ground_state.json"), relative_state_to_json(ground.relative, meta));

  Table table;
  table.metadata = meta;
  table.metadata.emplace_back("grid", "x_j = -pi + 2 pi j / " + std::to_string(config.n_grid));
  table.columns = {"x", "density"};
  const auto profile = relative_density_profile(state, config.n_grid);
  for (Eigen::Index j = 0; j < profile.x.size(); ++j) table.rows.push_back({profile.x[j], profile.density[j]});
  write_table(config, "ground_profile", table);
  if (options.gnuplot)
    write_gnuplot(config, "ground_profile",
                  "set xlabel 'x'\nset ylabel '|phi(x)|^2'\nplot 'ground_profile.csv' using 1:2 with lines notitle\n");

  out << "q " << config.q << "  kappa " << format_double(kappa) << "  ground_p " << ground.p << "  epsilon "
      << format_double(ground.relative.energy()) << '\n';
  out << "minimizing momenta:";
  for (int p : ground.minimizers) out << ' ' << p;
  out << "\ncorrelation " << to_string(corr.label) << "  peak |x*| " << format_double(corr.peak_location)
      << "  peak/trough " << format_double(corr.peak_to_trough) << '\n';
  if (wells.flat)
    out << "potential flat\n";
  else
    out << "potential minima " << wells.count() << " (distinct up to reflection " << wells.distinct_count << ")\n";
  return ground.inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_density2d(const RunConfig& config, const CommandOptions& options, std::ostream& out) {
  const auto loaded = load_or_solve(config, options, "density2d");
  const TwoBodyState<double> state(loaded.relative);
  const Eigen::Index n = config.n_grid;
  const auto rho = density_grid(state, n);
  const auto theta = uniform_grid<double>(n);

  Table table;
  table.metadata = base_metadata("density2d", config);
  append_state_metadata(table.metadata, loaded.relative);
  table.metadata.emplace_back("grid", "row-major; rows theta1, columns theta2; theta_j = -pi + 2 pi j / " +
                                          std::to_string(n));
  table.columns.push_back("theta1");
  for (Eigen::Index j = 0; j < n; ++j) table.columns.push_back("theta2_" + std::to_string(j));
  for (Eigen::Index i = 0; i < n; ++i) {
    std::vector<double> row{theta[i]};
    for (Eigen::Index j = 0; j < n; ++j) row.push_back(rho(i, j));
    table.rows.push_back(std::move(row));
  }
  const auto path = write_table(config, "density2d", table);
  if (options.gnuplot)
    write_gnuplot(config, "density2d",
                  "set xlabel 'theta2 index'\nset ylabel 'theta1 index'\nplot 'density2d.csv' every ::1 matrix using "
                  "($1-1):2:3 with image notitle\n");
  out << "wrote " << path << '\n';
  return loaded.inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_measure(const RunConfig& config, const CommandOptions& options, std::ostream& out) {
  const auto loaded = load_or_solve(config, options, "measure");
  const TwoBodyState<double> state(loaded.relative);
  const auto outcome =
      config.measurement.n == 0
          ? measure_perfect(state, config.measurement.theta0, config.n_grid)
          : measure_imperfect(state, MeasurementKernel<double>(config.measurement.n, config.measurement.theta0),
                              config.n_grid);
  auto meta = base_metadata("measure", config);
  append_state_metadata(meta, loaded.relative);
  meta.emplace_back("detection_norm", format_double(outcome.detection_norm));
  const auto path = output_path(config, "measured.json");
  write_file(path, wavefunction_to_json(outcome.wavefunction, meta));
  const auto d = dispersion_diagnostics(outcome.wavefunction);
  out << "wrote " << path << "  detection norm " << format_double(outcome.detection_norm) << "  circular variance "
      << format_double(d.circular_variance) << "  <L> " << format_double(d.angular_momentum) << '\n';
  return loaded.inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_evolve(const RunConfig& config, const CommandOptions& options, std::ostream& out) {
  if (!options.input_path) throw MissingInputError("evolve needs --input <wavefunction.json>");
  const auto psi0 = wavefunction_from_json(read_file(*options.input_path));
  const auto frames = evolve_and_record(psi0, config.evolve.t_max, config.evolve.frames);

  Table density;
  density.metadata = base_metadata("evolve", config);
  density.metadata.emplace_back("input", *options.input_path);
  density.metadata.emplace_back("grid", "theta_j = -pi + 2 pi j / " + std::to_string(psi0.size()) +
                                            "; single-particle time unit m R^2 / hbar");
  density.columns.push_back("t");
  for (Eigen::Index j = 0; j < psi0.size(); ++j) density.columns.push_back("rho_" + std::to_string(j));
  Table diag;
  diag.metadata = density.metadata;
  diag.columns = {"t", "circular_mean", "circular_variance", "angular_momentum", "kinetic"};
  for (const auto& f : frames) {
    std::vector<double> row{f.t};
    row.insert(row.end(), f.density.begin(), f.density.end());
    density.rows.push_back(std::move(row));
    diag.rows.push_back({f.t, f.diagnostics.circular_mean.value_or(std::numeric_limits<double>::quiet_NaN()),
                         f.diagnostics.circular_variance, f.diagnostics.angular_momentum, f.diagnostics.kinetic});
  }
  const auto path = write_table(config, "evolve_frames", density);
  write_table(config, "evolve_diagnostics", diag);
  if (options.gnuplot)
    write_gnuplot(config, "evolve_frames",
                  "set xlabel 'theta index'\nset ylabel 'frame'\nplot 'evolve_frames.csv' every ::1 matrix using "
                  "($1-1):2:3 with image notitle\n");
  out << "wrote " << path << " (" << frames.size() << " frames)\n";
  return kExitOk;
}

int cmd_uncertainty(const RunConfig& config, const CommandOptions& options, std::ostream& out) {
  const RingPartition<double> partition(config.partition.n_bins);
  const auto scan = uncertainty_scan<double>(config.q, config.kappa.values(), partition, scan_options(config));
  Table table;
  table.metadata = base_metadata("uncertainty", config);
  table.metadata.emplace_back("grid", "kappa rows, refined to step 0.01 within 0.1 of pi and 2 pi; " +
                                          std::to_string(config.partition.n_bins) + " bins");
  table.metadata.emplace_back("inconclusive", scan.inconclusive ? "true" : "false");
  table.columns = {"kappa",         "ground_p",     "epsilon", "dQ1",      "dQ2",      "dQ1dQ2",
                   "cov_plain_abs", "cov_conj_abs", "rs_left", "rs_right", "rs_right_conj"};
  for (const auto& r : scan.records) {
    const auto& s = r.stats;
    const double dq1 = std::sqrt(std::max(0.0, s.variance1)), dq2 = std::sqrt(std::max(0.0, s.variance2));
    table.rows.push_back({r.kappa, double(r.ground_p), r.energy, dq1, dq2, dq1 * dq2, std::abs(s.covariance_plain),
                          std::abs(s.covariance_conj), s.rs_left, s.rs_right_plain, s.rs_right_conj});
  }
  const auto path = write_table(config, "uncertainty", table);
  if (options.gnuplot)
    write_gnuplot(config, "uncertainty",
                  "set xlabel 'kappa'\nplot 'uncertainty.csv' using 1:8 with lines title '|cov conj|', "
                  "'' using 1:2 axes x1y2 with steps title 'ground p'\n");
  out << "wrote " << path << '\n';
  return scan.inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_potential(const RunConfig& config, const CommandOptions& options, std::ostream& out) {
  const double kappa = single_kappa(config, "potential");
  const GaugeShape<double> shape(config.q, kappa);
  const auto pot = effective_potential(shape, MomentumSector{options.potential_p});
  const auto x = uniform_grid<double>(config.n_grid);
  Table table;
  table.metadata = base_metadata("potential", config);
  table.metadata.emplace_back("sector.p", std::to_string(options.potential_p));
  table.metadata.emplace_back("grid", "x_j = -pi + 2 pi j / " + std::to_string(config.n_grid));
  table.columns = {"x", "delta", "v_eff"};
  for (Eigen::Index j = 0; j < x.size(); ++j) table.rows.push_back({x[j], shape.delta(x[j]), pot(x[j])});
  const auto path = write_table(config, "potential", table);
  const auto wells = classify_wells(pot, std::max<Eigen::Index>(config.n_grid, 64));
  out << "wrote " << path << '\n';
  if (wells.flat) {
    out << "flat potential\n";
  } else {
    for (const auto& w : wells.minima)
      out << "minimum at x = " << format_double(w.location) << "  V = " << format_double(w.value) << "  barrier "
          << format_double(w.barrier) << '\n';
  }
  return kExitOk;
}

int cmd_validate(const RunConfig&, const CommandOptions& options, std::ostream& out) {
  const auto report = run_validation({options.hamiltonian_perturbation});
  print_report(out, report);
  return report.passed() ? kExitOk : kExitFailure;
}

int run_command(const std::string& name, const RunConfig& config, const CommandOptions& options, std::ostream& out,
                std::ostream& err) {
  try {
    validate_config(config);
    if (name == "spectrum") return cmd_spectrum(config, options, out);
    if (name == "ground") return cmd_ground(config, options, out);
    if (name == "density2d") return cmd_density2d(config, options, out);
    if (name == "measure") return cmd_measure(config, options, out);
    if (name == "evolve") return cmd_evolve(config, options, out);
    if (name == "uncertainty") return cmd_uncertainty(config, options, out);
    if (name == "potential") return cmd_potential(config, options, out);
    if (name == "validate") return cmd_validate(config, options, out);
    err << "unknown command '" << name << "'\n";
    return kExitInvalidConfig;
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::invalid_argument& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const MissingInputError& e) {
    err << "missing input: " << e.what() << '\n';
    return kExitMissingInput;
  } catch (const FormatVersionError& e) {
    err << "format version mismatch: " << e.what() << '\n';
    return kExitVersionMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace gaugering::io
