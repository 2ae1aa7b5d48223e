#ifndef AQT_ADIABATIC_FRAME_HPP
#define AQT_ADIABATIC_FRAME_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "aqt/model.hpp"
#include "aqt/propagator.hpp"

namespace aqt {

// Closed-form treatment of the XX block under the harmonic schedule
// (f = cos theta, g = sin theta, theta = pi t / (2T)). Rotating to the
// instantaneous eigenbasis maps the problem onto a three-level system in a
// static effective field, which integrates exactly.

// Orthogonal frame matrix with eigenvector columns (E-, E0, E+):
//   [ s/sqrt2   c   s/sqrt2 ]
//   [ -1/sqrt2  0   1/sqrt2 ]       c = cos theta, s = sin theta.
//   [ c/sqrt2  -s   c/sqrt2 ]
// Columns are continuous in theta (no rephasing), so A(theta)^T d/dt A(theta)
// is smooth along the sweep.
Eigen::Matrix3d frame_matrix(double theta);

// Frame Hamiltonian H_tr = hbar w0 Z + hbar w1 Y', constant in time:
//   w0 = 2J/hbar (level splitting), w1 = pi/(2T) (frame rotation rate),
//   Z = diag(-1, 0, 1), Y' = (1/sqrt2) [[0,i,0],[-i,0,-i],[0,i,0]].
// alpha = atan(w1/w0) tilts the effective field; omega = sqrt(w0^2 + w1^2)
// is the precession frequency. Requires j > 0 and t_total > 0.
struct TransformedHamiltonian {
  double j = 1.0;
  double t_total = 0.0;
  double omega0 = 0.0;
  double omega1 = 0.0;
  double alpha = 0.0;
  double omega = 0.0;  // sqrt(omega0^2 + omega1^2)
  Eigen::Matrix3cd matrix;
};

TransformedHamiltonian transformed_hamiltonian(double j, double t_total);

// Eigenvectors of H_tr (eigenvalues -hbar omega, 0, +hbar omega):
//   e0    = (-sin a, i sqrt2 cos a, sin a)/sqrt2
//   e(+-) = (1 -+ cos a, -+ i sqrt2 sin a, 1 +- cos a)/2
Eigen::Vector3cd frame_eigenvector_zero(double alpha);
Eigen::Vector3cd frame_eigenvector_plus(double alpha);
Eigen::Vector3cd frame_eigenvector_minus(double alpha);

// U_tr(t) = sum of spectral projectors with phases 1, exp(-+ i omega t).
Eigen::Matrix3cd evolution_operator(const TransformedHamiltonian& h, double t);

// Exact final block state psi(T) = A(pi/2) U_tr(T) A(0)^T psi(0) starting
// from (0, -1, 1)/sqrt2, including the physical global phase.
Eigen::Vector3cd exact_evolve_block(double j, double t_total);

// Exact final full-space state for amplitudes (a, b); same contract as
// initial_state_full.
StateVector exact_evolve(std::complex<double> a, std::complex<double> b,
                         double j, double t_total);

// Teleportation fidelity in closed form. With phi = omega T:
//   F = (1/4) [ cos^2 phi (1 + cos^2 a)^2 + 4 sin^2 phi cos^2 a
//             + 2 cos phi sin^2 a (1 + cos^2 a) + sin^4 a ].
double analytic_fidelity(double j, double t_total);

// Convenience overload in scan coordinates (j = 1, T = pi x).
double analytic_fidelity_x(double x);

// Whether the closed-form solution covers a configuration; the guarded
// overload throws std::domain_error outside XX + harmonic.
bool exact_solution_available(const Coupling& coupling, ScheduleKind kind);
double analytic_fidelity(const Coupling& coupling, ScheduleKind kind,
                         double x);

// Perfect-fidelity sweep durations: omega T = 2 pi n, i.e.
// x_n = sqrt(n^2 - 1/16) for n = 1..n_max.
std::vector<double> resonance_times(int n_max);

// Max-abs difference at time t between H_tr and the finite-difference
// reconstruction A^T H A - i hbar A^T dA/dt. Small values certify the
// frame transformation.
double frame_residual(double j, double t_total, double t);

}  // namespace aqt

#endif
