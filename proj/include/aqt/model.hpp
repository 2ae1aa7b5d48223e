#ifndef AQT_MODEL_HPP
#define AQT_MODEL_HPP

#include <complex>
#include <optional>
#include <string>

namespace aqt {

// Units: hbar = J = 1 throughout. The sweep duration T enters all results
// through the dimensionless combination x = J*T/(pi*hbar), which is the
// coordinate used for scans and reporting.
inline constexpr double pi = 3.14159265358979323846;

// Exchange anisotropy. gamma = 0 is the XX coupling, gamma = 1 the isotropic
// Heisenberg coupling; intermediate values are allowed.
struct Coupling {
  double gamma = 0.0;

  static Coupling xx() { return {0.0}; }
  static Coupling heisenberg() { return {1.0}; }
  bool is_xx() const { return gamma == 0.0; }
  bool is_heisenberg() const { return gamma == 1.0; }
};

// Validated constructor: gamma must be finite and nonnegative.
Coupling make_coupling(double gamma);

std::string coupling_name(const Coupling& coupling);

// Interpolation schedules H(t) = f(s) H_initial + g(s) H_final, s = t/T.
// All satisfy f(0) = g(1) = 1 and f(1) = g(0) = 0 with f nonincreasing and
// g nondecreasing. QuadA crosses f = g away from the harmonic point; QuadB
// keeps f^2 + g^2 far from constant. The two quadratic pairs probe how the
// resonance structure depends on the path, not just the endpoints.
enum class ScheduleKind { Linear, Harmonic, QuadA, QuadB };

struct SwitchingPair {
  double f;
  double g;
};

// Evaluate the switching functions at normalized time s in [0, 1].
// Throws std::domain_error outside that interval.
SwitchingPair schedule_eval(ScheduleKind kind, double s);

// theta = atan2(g, f), the rotation angle of the instantaneous eigenbasis.
// Monotone from 0 to pi/2 along every schedule. Throws std::domain_error
// for f = g = 0 or negative inputs.
double mixing_angle(double f, double g);

std::string schedule_name(ScheduleKind kind);
std::optional<ScheduleKind> schedule_from_name(const std::string& name);

// Step count giving ~1e-9 accurate final states at fixed cost per unit time:
// max(1024, ceil(1024 * x)).
int reference_steps(double jt_over_pi);

struct SimulationConfig {
  Coupling coupling = Coupling::xx();
  ScheduleKind schedule = ScheduleKind::Harmonic;
  double jt_over_pi = 1.0;  // x = J*T/(pi*hbar), must be > 0
  int steps = 0;            // 0 selects reference_steps(x); otherwise >= 16
  std::complex<double> a{1.0, 0.0};  // teleported amplitudes, |a|^2+|b|^2 = 1
  std::complex<double> b{0.0, 0.0};
  // When set, the propagator repeats the run with halved step size and
  // requires the two final states to agree to this distance.
  std::optional<double> convergence_tol;

  double total_time() const { return pi * jt_over_pi; }
  int effective_steps() const;
  void validate() const;  // throws std::invalid_argument
};

}  // namespace aqt

#endif
