#include "aqt/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace aqt {

Coupling make_coupling(double gamma) {
  if (!std::isfinite(gamma) || gamma < 0.0) {
    throw std::invalid_argument("coupling anisotropy must be finite and >= 0");
  }
  return Coupling{gamma};
}

std::string coupling_name(const Coupling& coupling) {
  if (coupling.is_xx()) return "xx";
  if (coupling.is_heisenberg()) return "heisenberg";
  return "gamma=" + std::to_string(coupling.gamma);
}

SwitchingPair schedule_eval(ScheduleKind kind, double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::domain_error("schedule argument s must lie in [0, 1]");
  }
  switch (kind) {
    case ScheduleKind::Linear:
      return {1.0 - s, s};
    case ScheduleKind::Harmonic:
      return {std::cos(pi * s / 2.0), std::sin(pi * s / 2.0)};
    case ScheduleKind::QuadA:
      return {1.0 - s * s, s * (2.0 - s)};
    case ScheduleKind::QuadB:
      return {1.0 - s * s, s * s};
  }
  throw std::logic_error("unreachable schedule kind");
}

double mixing_angle(double f, double g) {
  if (f < 0.0 || g < 0.0) {
    throw std::domain_error("mixing angle needs nonnegative switching values");
  }
  if (f == 0.0 && g == 0.0) {
    throw std::domain_error("mixing angle undefined at f = g = 0");
  }
  return std::atan2(g, f);
}

std::string schedule_name(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::Linear:
      return "linear";
    case ScheduleKind::Harmonic:
      return "harmonic";
    case ScheduleKind::QuadA:
      return "quad-a";
    case ScheduleKind::QuadB:
      return "quad-b";
  }
  throw std::logic_error("unreachable schedule kind");
}

std::optional<ScheduleKind> schedule_from_name(const std::string& name) {
  if (name == "linear") return ScheduleKind::Linear;
  if (name == "harmonic") return ScheduleKind::Harmonic;
  if (name == "quad-a") return ScheduleKind::QuadA;
  if (name == "quad-b") return ScheduleKind::QuadB;
  return std::nullopt;
}

int reference_steps(double jt_over_pi) {
  const double raw = std::ceil(1024.0 * jt_over_pi);
  const double n = std::max(1024.0, raw);
  if (n >= static_cast<double>(std::numeric_limits<int>::max())) {
    throw std::invalid_argument("step count overflows for this duration");
  }
  return static_cast<int>(n);
}

int SimulationConfig::effective_steps() const {
  return steps > 0 ? steps : reference_steps(jt_over_pi);
}

void SimulationConfig::validate() const {
  if (!std::isfinite(coupling.gamma) || coupling.gamma < 0.0) {
    throw std::invalid_argument("coupling anisotropy must be finite and >= 0");
  }
  if (!std::isfinite(jt_over_pi) || jt_over_pi <= 0.0) {
    throw std::invalid_argument("sweep duration x must be finite and > 0");
  }
  if (steps != 0 && steps < 16) {
    throw std::invalid_argument("explicit step count must be at least 16");
  }
  const double norm2 = std::norm(a) + std::norm(b);
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw std::invalid_argument("amplitudes must satisfy |a|^2 + |b|^2 = 1");
  }
  if (convergence_tol && !(*convergence_tol > 0.0)) {
    throw std::invalid_argument("convergence tolerance must be positive");
  }
}

}  // namespace aqt
