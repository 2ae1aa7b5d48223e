#include "aqt/scan.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "aqt/adiabatic_frame.hpp"
#include "aqt/propagator.hpp"

namespace aqt {
namespace {

// Raw 1 - F may stick out of [0, 1] by a rounding hair. Clamp inside a
// 1e-9 band and report; anything larger is a real defect.
constexpr double clamp_band = 1e-9;

double clamp_unit(double value, bool& clamped, double& excursion) {
  if (value >= 0.0 && value <= 1.0) return value;
  const double out = value < 0.0 ? -value : value - 1.0;
  if (out > clamp_band) {
    throw std::runtime_error("infidelity outside [0, 1] beyond roundoff");
  }
  clamped = true;
  excursion = std::max(excursion, out);
  return value < 0.0 ? 0.0 : 1.0;
}

double point_fidelity(const Coupling& coupling, ScheduleKind schedule,
                      double x, int steps_override) {
  SimulationConfig config;
  config.coupling = coupling;
  config.schedule = schedule;
  config.jt_over_pi = x;
  config.steps = steps_override;
  const Trajectory traj = evolve(config, StateSpace::block, 2);
  return fidelity(traj.final_state(), target_state_block());
}

void validate_grid(double x_min, double x_max, int points) {
  if (!(x_min > 0.0) || !(x_max > x_min)) {
    throw std::domain_error("scan range must satisfy 0 < x_min < x_max");
  }
  if (points < 2) {
    throw std::domain_error("scan needs at least two grid points");
  }
}

ScanSeries prepare_series(const Coupling& coupling, ScheduleKind schedule,
                          double x_min, double x_max, int points,
                          const ScanOptions& options) {
  ScanSeries series;
  series.coupling = coupling;
  series.schedule = schedule;
  series.steps_override = options.steps_override;
  series.x.resize(points);
  series.fidelity.resize(points);
  const double dx = (x_max - x_min) / (points - 1);
  for (int i = 0; i < points; ++i) {
    series.x[i] = (i == points - 1) ? x_max : x_min + i * dx;
  }
  return series;
}

// Infidelity, clamp bookkeeping, and the closed-form column; sequential so
// the counters never depend on thread interleaving.
void finalize_series(ScanSeries& series, const ScanOptions& options) {
  const int points = static_cast<int>(series.x.size());
  series.infidelity.resize(points);
  for (int i = 0; i < points; ++i) {
    bool clamped = false;
    series.fidelity[i] =
        clamp_unit(series.fidelity[i], clamped, series.max_clamp);
    series.infidelity[i] =
        clamp_unit(1.0 - series.fidelity[i], clamped, series.max_clamp);
    if (clamped) ++series.clamped_points;
  }
  if (options.record_analytic &&
      exact_solution_available(series.coupling, series.schedule)) {
    series.analytic_fidelity.resize(points);
    for (int i = 0; i < points; ++i) {
      series.analytic_fidelity[i] = analytic_fidelity_x(series.x[i]);
    }
  }
}

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
};

// Golden-section minimization over [a, b] down to bracket width x_tol.
// Returns the best probe seen. Robust to the noise floor at deep dips: the
// bracket still contracts around the dip even when values degenerate.
GoldenResult golden_minimize(const std::function<double(double)>& func,
                             double a, double b, double x_tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;  // 0.618...
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = func(c);
  double fd = func(d);
  GoldenResult best = fc <= fd ? GoldenResult{c, fc} : GoldenResult{d, fd};

  while (b - a > x_tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = func(c);
      if (fc < best.value) best = {c, fc};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = func(d);
      if (fd < best.value) best = {d, fd};
    }
  }
  return best;
}

// Vertex of the parabola through three points (Newton form); falls back to
// the middle point when the data is not locally concave.
RefinedExtremum parabolic_peak(double x0, double y0, double x1, double y1,
                               double x2, double y2) {
  const double d0 = (y1 - y0) / (x1 - x0);
  const double d1 = (y2 - y1) / (x2 - x1);
  const double c2 = (d1 - d0) / (x2 - x0);
  if (!(c2 < 0.0)) return {x1, y1};
  double xv = 0.5 * (x0 + x1) - d0 / (2.0 * c2);
  xv = std::clamp(xv, std::min(x0, x2), std::max(x0, x2));
  const double yv = y0 + d0 * (xv - x0) + c2 * (xv - x0) * (xv - x1);
  return {xv, std::max(yv, y1)};
}

}  // namespace

double scan_infidelity(const Coupling& coupling, ScheduleKind schedule,
                       double x, int steps_override) {
  bool clamped = false;
  double excursion = 0.0;
  const double fid =
      clamp_unit(point_fidelity(coupling, schedule, x, steps_override),
                 clamped, excursion);
  return clamp_unit(1.0 - fid, clamped, excursion);
}

ScanSeries run_scan_serial(const Coupling& coupling, ScheduleKind schedule,
                           double x_min, double x_max, int points,
                           const ScanOptions& options) {
  validate_grid(x_min, x_max, points);
  ScanSeries series =
      prepare_series(coupling, schedule, x_min, x_max, points, options);
  for (int i = 0; i < points; ++i) {
    series.fidelity[i] = point_fidelity(coupling, schedule, series.x[i],
                                        options.steps_override);
  }
  finalize_series(series, options);
  return series;
}

ScanSeries run_scan(const Coupling& coupling, ScheduleKind schedule,
                    double x_min, double x_max, int points,
                    const ScanOptions& options) {
  validate_grid(x_min, x_max, points);
  ScanSeries series =
      prepare_series(coupling, schedule, x_min, x_max, points, options);

#ifdef _OPENMP
  const int threads =
      options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < points; ++i) {
    series.fidelity[i] = point_fidelity(coupling, schedule, series.x[i],
                                        options.steps_override);
  }
#else
  for (int i = 0; i < points; ++i) {
    series.fidelity[i] = point_fidelity(coupling, schedule, series.x[i],
                                        options.steps_override);
  }
#endif

  finalize_series(series, options);
  return series;
}

ResonanceReport find_resonances(const ScanSeries& series,
                                const ResonanceOptions& options) {
  const int n = static_cast<int>(series.x.size());
  if (n < 16) {
    throw std::domain_error("resonance detection needs at least 16 points");
  }
  if (series.infidelity.size() != series.x.size()) {
    throw std::domain_error("series is missing its infidelity column");
  }

  ResonanceReport report;
  report.threshold = options.threshold;

  // Bracket local minima and maxima of the sampled curve. Strict on one
  // side so flat pairs are not double-counted.
  std::vector<int> min_idx;
  std::vector<int> max_idx;
  for (int i = 1; i + 1 < n; ++i) {
    const double y0 = series.infidelity[i - 1];
    const double y1 = series.infidelity[i];
    const double y2 = series.infidelity[i + 1];
    if (y1 < y0 && y1 <= y2) min_idx.push_back(i);
    if (y1 > y0 && y1 >= y2) max_idx.push_back(i);
  }

  report.minima.resize(min_idx.size());
  const int refine_count = static_cast<int>(min_idx.size());
#ifdef _OPENMP
  const int threads =
      options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (int k = 0; k < refine_count; ++k) {
    const int i = min_idx[k];
    const auto objective = [&series](double x) {
      return scan_infidelity(series.coupling, series.schedule, x,
                             series.steps_override);
    };
    GoldenResult r = golden_minimize(objective, series.x[i - 1],
                                     series.x[i + 1], options.x_tol);
    // The refinement may never do worse than the sampled bracket center.
    if (series.infidelity[i] < r.value) {
      r = {series.x[i], series.infidelity[i]};
    }
    report.minima[k] = {r.x, r.value};
  }

  for (const auto& m : report.minima) {
    if (m.infidelity <= options.threshold) report.resonances.push_back(m);
  }

  for (int i : max_idx) {
    report.envelope.push_back(parabolic_peak(
        series.x[i - 1], series.infidelity[i - 1], series.x[i],
        series.infidelity[i], series.x[i + 1], series.infidelity[i + 1]));
  }

  // Envelope decay law: least-squares slope of log(infidelity) against
  // log(x) over the selected peak window.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int m = 0;
  for (const auto& p : report.envelope) {
    if (p.x < options.fit_x_min || p.x > options.fit_x_max) continue;
    if (!(p.infidelity > 0.0)) continue;
    const double lx = std::log(p.x);
    const double ly = std::log(p.infidelity);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m >= 2) {
    const double denom = m * sxx - sx * sx;
    if (denom > 0.0) {
      report.power_law_exponent = (m * sxy - sx * sy) / denom;
    }
  }
  return report;
}

}  // namespace aqt
