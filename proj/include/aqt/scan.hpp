#ifndef AQT_SCAN_HPP
#define AQT_SCAN_HPP

#include <optional>
#include <vector>

#include "aqt/model.hpp"

namespace aqt {

struct ScanOptions {
  int steps_override = 0;  // 0 selects the reference step rule per point
  int threads = 0;         // 0 lets OpenMP pick; ignored without OpenMP
  bool record_analytic = true;  // fill the closed-form column when available
};

// Fidelity curve over a uniform grid in x = J*T/(pi*hbar). Grid points are
// independent block-space integrations, evaluated in parallel; results are
// bitwise independent of thread count and evaluation order.
struct ScanSeries {
  Coupling coupling;
  ScheduleKind schedule = ScheduleKind::Harmonic;
  std::vector<double> x;
  std::vector<double> fidelity;
  std::vector<double> infidelity;
  // Closed-form fidelity, only for XX + harmonic (empty otherwise).
  std::vector<double> analytic_fidelity;
  int steps_override = 0;
  // Raw 1 - F occasionally leaves [0, 1] by a rounding hair; such values are
  // clamped, counted, and the largest excursion kept. Excursions beyond
  // 1e-9 are a bug and raise std::runtime_error instead.
  int clamped_points = 0;
  double max_clamp = 0.0;
};

ScanSeries run_scan(const Coupling& coupling, ScheduleKind schedule,
                    double x_min, double x_max, int points,
                    const ScanOptions& options = {});

// Plain sequential loop, kept as the reference implementation the parallel
// path is tested (and benchmarked) against.
ScanSeries run_scan_serial(const Coupling& coupling, ScheduleKind schedule,
                           double x_min, double x_max, int points,
                           const ScanOptions& options = {});

// Single fresh grid-point evaluation, as used by scans and refinement.
double scan_infidelity(const Coupling& coupling, ScheduleKind schedule,
                       double x, int steps_override = 0);

struct RefinedExtremum {
  double x = 0.0;
  double infidelity = 0.0;
};

struct ResonanceOptions {
  double threshold = 1e-6;  // refined minima at or below count as resonances
  double x_tol = 1e-6;      // golden-section bracket width for minima
  double fit_x_min = 5.0;   // envelope peaks fitted for x in [fit_x_min,
  double fit_x_max = 1e300; //                                 fit_x_max]
  int threads = 0;
};

// Dips, envelope peaks, and the envelope decay law of a scan.
// Local minima of the sampled infidelity are refined by golden-section
// search on freshly computed infidelity (same steps rule as the series);
// envelope peaks get a three-point parabolic refinement. The power-law
// exponent is a log-log least-squares slope through the selected peaks,
// present when at least two qualify.
struct ResonanceReport {
  std::vector<RefinedExtremum> minima;      // ascending in x
  std::vector<RefinedExtremum> resonances;  // minima below threshold
  std::vector<RefinedExtremum> envelope;    // local maxima
  std::optional<double> power_law_exponent;
  double threshold = 0.0;
};

// Requires at least 16 grid points (throws std::domain_error otherwise).
ResonanceReport find_resonances(const ScanSeries& series,
                                const ResonanceOptions& options = {});

}  // namespace aqt

#endif
