#include "aqt/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "aqt/adiabatic_frame.hpp"
#include "aqt/hamiltonian.hpp"
#include "aqt/io.hpp"
#include "aqt/model.hpp"
#include "aqt/propagator.hpp"
#include "aqt/scan.hpp"
#include "aqt/spectral.hpp"

namespace aqt {
namespace {

struct CommonArgs {
  std::string coupling_preset = "xx";
  std::optional<double> gamma;
  std::string schedule = "harmonic";
  std::string format;
  std::string out_path;
  int steps = 0;
};

struct AmplitudeArgs {
  double a_re = 1.0;
  double a_im = 0.0;
  double b_re = 0.0;
  double b_im = 0.0;
};

Coupling resolve_coupling(const CommonArgs& args) {
  if (args.gamma) return make_coupling(*args.gamma);
  if (args.coupling_preset == "xx") return Coupling::xx();
  if (args.coupling_preset == "heisenberg") return Coupling::heisenberg();
  throw std::invalid_argument("unknown coupling preset: " +
                              args.coupling_preset);
}

ScheduleKind resolve_schedule(const std::string& name) {
  const auto kind = schedule_from_name(name);
  if (!kind) throw std::invalid_argument("unknown schedule: " + name);
  return *kind;
}

// Normalize (a, b) exactly; warn about sub-1e-6 drift, reject anything
// larger as a usage error.
void normalize_amplitudes(AmplitudeArgs& amp, std::ostream& err) {
  std::complex<double> a(amp.a_re, amp.a_im);
  std::complex<double> b(amp.b_re, amp.b_im);
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  if (norm == 0.0 || std::abs(norm - 1.0) >= 1e-6) {
    throw std::invalid_argument(
        "amplitudes must satisfy |a|^2 + |b|^2 = 1 (within 1e-6)");
  }
  if (norm != 1.0) {
    a /= norm;
    b /= norm;
    if (std::abs(norm - 1.0) > 1e-15) {
      err << "warning: renormalized amplitudes (norm was "
          << format_double(norm) << ")\n";
    }
  }
  amp = {a.real(), a.imag(), b.real(), b.imag()};
}

void emit(const std::string& text, const std::string& path,
          std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    atomic_write_text(path, text);
  }
}

void add_common_flags(CLI::App* cmd, CommonArgs& args,
                      const std::string& default_format) {
  args.format = default_format;
  auto* preset = cmd->add_option("--coupling", args.coupling_preset,
                                 "Coupling preset: xx or heisenberg");
  auto* gamma = cmd->add_option("--gamma", args.gamma,
                                "Numeric exchange anisotropy (>= 0)");
  preset->excludes(gamma);
  gamma->excludes(preset);
  cmd->add_option("--schedule", args.schedule,
                  "Schedule: linear, harmonic, quad-a, quad-b");
  cmd->add_option("--format", args.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", args.out_path,
                  "Output path (stdout when omitted); written atomically");
  cmd->add_option("--steps", args.steps,
                  "Fixed RK4 step count (>= 16); default scales with x")
      ->check(CLI::Range(16, 1 << 30));
}

void add_amplitude_flags(CLI::App* cmd, AmplitudeArgs& amp) {
  cmd->add_option("--a-re", amp.a_re, "Re(a) of the teleported qubit state");
  cmd->add_option("--a-im", amp.a_im, "Im(a)");
  cmd->add_option("--b-re", amp.b_re, "Re(b)");
  cmd->add_option("--b-im", amp.b_im, "Im(b)");
}

int handle_simulate(const CommonArgs& common, const AmplitudeArgs& amp,
                    double x, std::optional<double> check_tol,
                    std::ostream& out) {
  SimulationConfig config;
  config.coupling = resolve_coupling(common);
  config.schedule = resolve_schedule(common.schedule);
  config.jt_over_pi = x;
  config.steps = common.steps;
  config.a = {amp.a_re, amp.a_im};
  config.b = {amp.b_re, amp.b_im};
  config.convergence_tol = check_tol;

  const Trajectory traj = evolve(config, StateSpace::full, 2);
  const double fid =
      fidelity(traj.final_state(), target_state_full(config.a, config.b));

  if (common.format == "csv") {
    std::string text = "x,infidelity,fidelity,norm_drift,sz_drift\n";
    text += format_double(x) + "," + format_double(1.0 - fid) + "," +
            format_double(fid) + "," + format_double(traj.norm_drift) + "," +
            format_double(traj.sz_drift) + "\n";
    emit(text, common.out_path, out);
  } else {
    nlohmann::json j;
    j["coupling"] = {{"name", coupling_name(config.coupling)},
                     {"gamma", config.coupling.gamma}};
    j["schedule"] = schedule_name(config.schedule);
    j["x"] = x;
    j["steps"] = traj.steps;
    j["a"] = {config.a.real(), config.a.imag()};
    j["b"] = {config.b.real(), config.b.imag()};
    j["fidelity"] = fid;
    j["infidelity"] = 1.0 - fid;
    j["norm_drift"] = traj.norm_drift;
    j["sz_drift"] = traj.sz_drift;
    if (exact_solution_available(config.coupling, config.schedule)) {
      j["analytic_fidelity"] = analytic_fidelity_x(x);
    }
    emit(j.dump(2) + "\n", common.out_path, out);
  }
  return 0;
}

int handle_scan(const CommonArgs& common, double x_min, double x_max,
                int points, int threads, std::ostream& out) {
  ScanOptions options;
  options.steps_override = common.steps;
  options.threads = threads;
  const ScanSeries series =
      run_scan(resolve_coupling(common), resolve_schedule(common.schedule),
               x_min, x_max, points, options);
  if (common.format == "csv") {
    emit(series_to_csv(series), common.out_path, out);
  } else {
    emit(series_to_json(series).dump(2) + "\n", common.out_path, out);
  }
  return 0;
}

int handle_resonances(const CommonArgs& common, double x_min, double x_max,
                      int points, int threads, double threshold,
                      double fit_x_min, std::ostream& out) {
  ScanOptions scan_options;
  scan_options.steps_override = common.steps;
  scan_options.threads = threads;
  const ScanSeries series =
      run_scan(resolve_coupling(common), resolve_schedule(common.schedule),
               x_min, x_max, points, scan_options);

  ResonanceOptions options;
  options.threshold = threshold;
  options.fit_x_min = fit_x_min;
  options.threads = threads;
  const ResonanceReport report = find_resonances(series, options);

  if (common.format == "csv") {
    emit(report_to_csv(report), common.out_path, out);
  } else {
    nlohmann::json j = report_to_json(report, series);
    j["scan"] = {{"x_min", x_min},
                 {"x_max", x_max},
                 {"points", points},
                 {"steps_override", common.steps}};
    emit(j.dump(2) + "\n", common.out_path, out);
  }
  return 0;
}

int handle_spectrum(const CommonArgs& common, int points, std::ostream& out) {
  if (points < 2) {
    throw std::invalid_argument("spectrum needs at least two points");
  }
  const Coupling coupling = resolve_coupling(common);
  const ScheduleKind kind = resolve_schedule(common.schedule);

  std::vector<double> svals(points);
  std::vector<Eigen::Vector3d> energies(points);
  std::vector<SwitchingPair> pairs(points);
  for (int i = 0; i < points; ++i) {
    const double s = static_cast<double>(i) / (points - 1);
    const auto fg = schedule_eval(kind, s);
    svals[i] = s;
    pairs[i] = fg;
    energies[i] = eig_numeric(build_block(coupling, fg.f, fg.g)).energies;
  }

  if (common.format == "csv") {
    std::string text = "s,f,g,e0,e1,e2\n";
    for (int i = 0; i < points; ++i) {
      text += format_double(svals[i]) + "," + format_double(pairs[i].f) +
              "," + format_double(pairs[i].g) + "," +
              format_double(energies[i](0)) + "," +
              format_double(energies[i](1)) + "," +
              format_double(energies[i](2)) + "\n";
    }
    emit(text, common.out_path, out);
  } else {
    nlohmann::json j;
    j["coupling"] = {{"name", coupling_name(coupling)},
                     {"gamma", coupling.gamma}};
    j["schedule"] = schedule_name(kind);
    j["s"] = svals;
    nlohmann::json levels = nlohmann::json::array();
    for (int i = 0; i < points; ++i) {
      levels.push_back({energies[i](0), energies[i](1), energies[i](2)});
    }
    j["energies"] = levels;
    emit(j.dump(2) + "\n", common.out_path, out);
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Non-adiabatic dynamics of three-qubit adiabatic quantum "
      "teleportation: exact propagation, fidelity scans, resonance "
      "detection, and closed-form cross-checks."};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand(
      "simulate", "Propagate one sweep and report final-state fidelity");
  CommonArgs sim_common;
  AmplitudeArgs sim_amp;
  double sim_x = 1.0;
  std::optional<double> sim_check;
  add_common_flags(sim, sim_common, "json");
  add_amplitude_flags(sim, sim_amp);
  sim->add_option("--x", sim_x, "Sweep duration x = J*T/(pi*hbar)")
      ->check(CLI::PositiveNumber);
  sim->add_option("--check-tol", sim_check,
                  "Fail (exit 1) unless a step-halved rerun agrees to this "
                  "distance");

  // scan
  auto* scan = app.add_subcommand(
      "scan", "Sweep-duration scan of teleportation infidelity");
  CommonArgs scan_common;
  double scan_x_min = 0.25, scan_x_max = 10.0;
  int scan_points = 400;
  int scan_threads = 0;
  add_common_flags(scan, scan_common, "csv");
  scan->add_option("--x-min", scan_x_min, "Grid start (> 0)");
  scan->add_option("--x-max", scan_x_max, "Grid end");
  scan->add_option("--points", scan_points, "Grid size")->check(CLI::Range(2, 1 << 24));
  scan->add_option("--threads", scan_threads,
                   "Worker threads for grid evaluation (0 = auto)");

  // resonances
  auto* res = app.add_subcommand(
      "resonances", "Locate and refine infidelity dips and envelope peaks");
  CommonArgs res_common;
  double res_x_min = 0.25, res_x_max = 10.0;
  int res_points = 400;
  int res_threads = 0;
  double res_threshold = 1e-6;
  double res_fit_x_min = 5.0;
  add_common_flags(res, res_common, "json");
  res->add_option("--x-min", res_x_min, "Grid start (> 0)");
  res->add_option("--x-max", res_x_max, "Grid end");
  res->add_option("--points", res_points, "Grid size")->check(CLI::Range(16, 1 << 24));
  res->add_option("--threads", res_threads, "Worker threads (0 = auto)");
  res->add_option("--threshold", res_threshold,
                  "Refined minima at or below this count as resonances");
  res->add_option("--fit-x-min", res_fit_x_min,
                  "Smallest envelope-peak x used for the power-law fit");

  // spectrum
  auto* spec = app.add_subcommand(
      "spectrum", "Instantaneous block eigenvalues along the schedule");
  CommonArgs spec_common;
  int spec_points = 201;
  add_common_flags(spec, spec_common, "csv");
  spec->add_option("--points", spec_points, "Samples of s in [0, 1]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (sim->parsed()) {
      normalize_amplitudes(sim_amp, err);
      return handle_simulate(sim_common, sim_amp, sim_x, sim_check, out);
    }
    if (scan->parsed()) {
      return handle_scan(scan_common, scan_x_min, scan_x_max, scan_points,
                         scan_threads, out);
    }
    if (res->parsed()) {
      return handle_resonances(res_common, res_x_min, res_x_max, res_points,
                               res_threads, res_threshold, res_fit_x_min,
                               out);
    }
    if (spec->parsed()) {
      return handle_spectrum(spec_common, spec_points, out);
    }
    err << "error: no subcommand selected\n";
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace aqt
