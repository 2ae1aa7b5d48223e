#include "aqt/adiabatic_frame.hpp"

#include <cmath>
#include <stdexcept>

#include "aqt/hamiltonian.hpp"

namespace aqt {
namespace {

using cd = std::complex<double>;

void require_positive(double j, double t_total) {
  if (!(j > 0.0) || !(t_total > 0.0)) {
    throw std::domain_error("frame solution needs j > 0 and t_total > 0");
  }
}

Eigen::VectorXcd assemble_full_from_block(std::complex<double> a,
                                          std::complex<double> b,
                                          const Eigen::Vector3cd& block) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
  const auto up = sector_indices(Sector::up_half);
  const auto down = sector_indices(Sector::down_half);
  for (int i = 0; i < 3; ++i) {
    v(up[i]) = a * block(i);
    v(down[i]) = -b * block(i);
  }
  return v;
}

}  // namespace

Eigen::Matrix3d frame_matrix(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::Matrix3d a;
  a << s * inv_sqrt2, c, s * inv_sqrt2,  //
      -inv_sqrt2, 0.0, inv_sqrt2,        //
      c * inv_sqrt2, -s, c * inv_sqrt2;
  return a;
}

TransformedHamiltonian transformed_hamiltonian(double j, double t_total) {
  require_positive(j, t_total);
  TransformedHamiltonian h;
  h.j = j;
  h.t_total = t_total;
  h.omega0 = 2.0 * j;
  h.omega1 = pi / (2.0 * t_total);
  h.alpha = std::atan2(h.omega1, h.omega0);
  h.omega = std::hypot(h.omega0, h.omega1);

  const cd i(0.0, 1.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::Matrix3cd z = Eigen::Matrix3cd::Zero();
  z(0, 0) = -1.0;
  z(2, 2) = 1.0;
  Eigen::Matrix3cd y = Eigen::Matrix3cd::Zero();
  y(0, 1) = i * inv_sqrt2;
  y(1, 0) = -i * inv_sqrt2;
  y(1, 2) = -i * inv_sqrt2;
  y(2, 1) = i * inv_sqrt2;
  h.matrix = h.omega0 * z + h.omega1 * y;
  return h;
}

Eigen::Vector3cd frame_eigenvector_zero(double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::Vector3cd v;
  v << -s * inv_sqrt2, cd(0.0, 1.0) * c, s * inv_sqrt2;
  return v;
}

Eigen::Vector3cd frame_eigenvector_plus(double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  const double sqrt2 = std::sqrt(2.0);
  Eigen::Vector3cd v;
  v << 0.5 * (1.0 - c), cd(0.0, -1.0) * (sqrt2 * 0.5) * s, 0.5 * (1.0 + c);
  return v;
}

Eigen::Vector3cd frame_eigenvector_minus(double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  const double sqrt2 = std::sqrt(2.0);
  Eigen::Vector3cd v;
  v << 0.5 * (1.0 + c), cd(0.0, 1.0) * (sqrt2 * 0.5) * s, 0.5 * (1.0 - c);
  return v;
}

Eigen::Matrix3cd evolution_operator(const TransformedHamiltonian& h,
                                    double t) {
  const Eigen::Vector3cd e0 = frame_eigenvector_zero(h.alpha);
  const Eigen::Vector3cd ep = frame_eigenvector_plus(h.alpha);
  const Eigen::Vector3cd em = frame_eigenvector_minus(h.alpha);
  const cd phase_p = std::exp(cd(0.0, -h.omega * t));
  const cd phase_m = std::exp(cd(0.0, h.omega * t));
  return e0 * e0.adjoint() + phase_p * (ep * ep.adjoint()) +
         phase_m * (em * em.adjoint());
}

Eigen::Vector3cd exact_evolve_block(double j, double t_total) {
  require_positive(j, t_total);
  const TransformedHamiltonian h = transformed_hamiltonian(j, t_total);
  const Eigen::Matrix3d a0 = frame_matrix(0.0);
  const Eigen::Matrix3d a1 = frame_matrix(pi / 2.0);
  Eigen::Vector3cd psi0;
  psi0 << initial_state_block().amplitudes;
  return a1.cast<cd>() *
         (evolution_operator(h, t_total) *
          (a0.transpose().cast<cd>() * psi0));
}

StateVector exact_evolve(std::complex<double> a, std::complex<double> b,
                         double j, double t_total) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) {
    throw std::domain_error("amplitudes must satisfy |a|^2 + |b|^2 = 1");
  }
  const Eigen::Vector3cd block = exact_evolve_block(j, t_total);
  return StateVector{assemble_full_from_block(a, b, block), StateSpace::full};
}

double analytic_fidelity(double j, double t_total) {
  require_positive(j, t_total);
  const TransformedHamiltonian h = transformed_hamiltonian(j, t_total);
  const double phi = h.omega * t_total;
  const double c2 = std::cos(h.alpha) * std::cos(h.alpha);
  const double s2 = std::sin(h.alpha) * std::sin(h.alpha);
  const double cp = std::cos(phi);
  const double sp = std::sin(phi);
  return 0.25 * (cp * cp * (1.0 + c2) * (1.0 + c2) + 4.0 * sp * sp * c2 +
                 2.0 * cp * s2 * (1.0 + c2) + s2 * s2);
}

double analytic_fidelity_x(double x) { return analytic_fidelity(1.0, pi * x); }

bool exact_solution_available(const Coupling& coupling, ScheduleKind kind) {
  return coupling.is_xx() && kind == ScheduleKind::Harmonic;
}

double analytic_fidelity(const Coupling& coupling, ScheduleKind kind,
                         double x) {
  if (!exact_solution_available(coupling, kind)) {
    throw std::domain_error(
        "closed-form fidelity exists only for the XX coupling under the "
        "harmonic schedule");
  }
  return analytic_fidelity_x(x);
}

std::vector<double> resonance_times(int n_max) {
  if (n_max < 1) {
    throw std::domain_error("resonance index must be at least 1");
  }
  std::vector<double> xs;
  xs.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    xs.push_back(std::sqrt(static_cast<double>(n) * n - 1.0 / 16.0));
  }
  return xs;
}

double frame_residual(double j, double t_total, double t) {
  require_positive(j, t_total);
  if (!(t >= 0.0 && t <= t_total)) {
    throw std::domain_error("residual time must lie in [0, t_total]");
  }
  const TransformedHamiltonian h = transformed_hamiltonian(j, t_total);
  const double w1 = h.omega1;
  const double theta = w1 * t;

  // D - i hbar A^T dA/dt with dA/dt by central difference. The frame matrix
  // is entire in theta, so slightly overshooting [0, pi/2] is harmless.
  const double dt = 1e-6 * t_total;
  const Eigen::Matrix3d a = frame_matrix(theta);
  const Eigen::Matrix3d adot =
      (frame_matrix(w1 * (t + dt)) - frame_matrix(w1 * (t - dt))) /
      (2.0 * dt);

  const double f = std::cos(theta);
  const double g = std::sin(theta);
  const Eigen::Matrix3d h_block = j * build_block(Coupling::xx(), f, g);
  const Eigen::Matrix3d d = a.transpose() * h_block * a;

  const Eigen::Matrix3cd reconstructed =
      d.cast<cd>() - cd(0.0, 1.0) * (a.transpose() * adot).cast<cd>();
  return (reconstructed - h.matrix).cwiseAbs().maxCoeff();
}

}  // namespace aqt
