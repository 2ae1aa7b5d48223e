#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "aqt/adiabatic_frame.hpp"
#include "aqt/hamiltonian.hpp"
#include "aqt/model.hpp"
#include "aqt/propagator.hpp"
#include "aqt/spectral.hpp"

using namespace aqt;
using cd = std::complex<double>;

namespace {

double max_abs(const Eigen::Matrix3cd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("frame matrix endpoints and orthogonality") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  const Eigen::Matrix3d a0 = frame_matrix(0.0);
  Eigen::Matrix3d expected0;
  expected0 << 0.0, 1.0, 0.0,            //
      -inv_sqrt2, 0.0, inv_sqrt2,        //
      inv_sqrt2, 0.0, inv_sqrt2;
  CHECK((a0 - expected0).cwiseAbs().maxCoeff() <= 1e-15);

  const Eigen::Matrix3d a1 = frame_matrix(pi / 2.0);
  CHECK(a1(0, 0) == doctest::Approx(inv_sqrt2).epsilon(1e-14));
  CHECK(a1(1, 0) == doctest::Approx(-inv_sqrt2).epsilon(1e-14));
  CHECK(std::abs(a1(2, 0)) <= 1e-14);
  CHECK(a1(2, 1) == doctest::Approx(-1.0).epsilon(1e-14));

  for (int i = 0; i <= 20; ++i) {
    const double theta = pi / 2.0 * i / 20.0;
    const Eigen::Matrix3d a = frame_matrix(theta);
    CHECK((a.transpose() * a - Eigen::Matrix3d::Identity())
              .cwiseAbs()
              .maxCoeff() <= 1e-14);
  }
}

TEST_CASE("frame columns diagonalize the harmonic-path block") {
  for (int i = 0; i <= 16; ++i) {
    const double theta = pi / 2.0 * i / 16.0;
    const double f = std::cos(theta);
    const double g = std::sin(theta);
    const Eigen::Matrix3d h = build_block(Coupling::xx(), f, g);
    const Eigen::Matrix3d a = frame_matrix(theta);
    const Eigen::Matrix3d d = a.transpose() * h * a;
    Eigen::Matrix3d expected = Eigen::Vector3d(-2.0, 0.0, 2.0).asDiagonal();
    CHECK((d - expected).cwiseAbs().maxCoeff() <= 1e-13);
  }
}

TEST_CASE("transformed hamiltonian parameters") {
  const TransformedHamiltonian h = transformed_hamiltonian(1.0, pi);  // x = 1
  CHECK(h.omega0 == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(h.omega1 == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::tan(h.alpha) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(h.omega == doctest::Approx(std::sqrt(4.0 + 0.25)).epsilon(1e-15));
  CHECK(max_abs(h.matrix - h.matrix.adjoint()) <= 1e-15);

  CHECK_THROWS_AS(transformed_hamiltonian(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(transformed_hamiltonian(1.0, 0.0), std::domain_error);
}

TEST_CASE("transformed hamiltonian eigensystem") {
  const TransformedHamiltonian h = transformed_hamiltonian(1.0, 2.5 * pi);

  // Independent oracle: Eigen's self-adjoint solver.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(h.matrix);
  REQUIRE(solver.info() == Eigen::Success);
  CHECK(solver.eigenvalues()(0) == doctest::Approx(-h.omega).epsilon(1e-13));
  CHECK(std::abs(solver.eigenvalues()(1)) <= 1e-13);
  CHECK(solver.eigenvalues()(2) == doctest::Approx(h.omega).epsilon(1e-13));

  // Closed-form eigenvectors.
  const Eigen::Vector3cd e0 = frame_eigenvector_zero(h.alpha);
  const Eigen::Vector3cd ep = frame_eigenvector_plus(h.alpha);
  const Eigen::Vector3cd em = frame_eigenvector_minus(h.alpha);
  CHECK((h.matrix * e0).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((h.matrix * ep - h.omega * ep).cwiseAbs().maxCoeff() <= 1e-13);
  CHECK((h.matrix * em + h.omega * em).cwiseAbs().maxCoeff() <= 1e-13);
  CHECK(std::abs(e0.norm() - 1.0) <= 1e-14);
  CHECK(std::abs(ep.norm() - 1.0) <= 1e-14);
  CHECK(std::abs(em.norm() - 1.0) <= 1e-14);
  CHECK(std::abs(e0.dot(ep)) <= 1e-14);
  CHECK(std::abs(ep.dot(em)) <= 1e-14);
}

TEST_CASE("slow-sweep limit flattens the drive term") {
  const TransformedHamiltonian h = transformed_hamiltonian(1.0, pi * 1e6);
  CHECK(h.alpha <= 3e-7);
  Eigen::Matrix3cd z = Eigen::Matrix3cd::Zero();
  z(0, 0) = -2.0;
  z(2, 2) = 2.0;
  CHECK(max_abs(h.matrix - z) <= 1e-6);
}

TEST_CASE("evolution operator is unitary and periodic") {
  const TransformedHamiltonian h = transformed_hamiltonian(1.0, 1.7 * pi);
  const double period = 2.0 * pi / h.omega;
  for (double t : {0.0, 0.3, 1.2, period}) {
    const Eigen::Matrix3cd u = evolution_operator(h, t);
    CHECK(max_abs(u * u.adjoint() - Eigen::Matrix3cd::Identity()) <= 1e-14);
  }
  CHECK(max_abs(evolution_operator(h, 0.0) -
                Eigen::Matrix3cd::Identity()) <= 1e-14);
  CHECK(max_abs(evolution_operator(h, period) -
                Eigen::Matrix3cd::Identity()) <= 1e-13);
}

TEST_CASE("frame residual certifies the transformation") {
  for (double x : {0.5, 1.0, 3.0}) {
    const double t_total = pi * x;
    for (double frac : {0.2, 0.5, 0.8}) {
      CHECK(frame_residual(1.0, t_total, frac * t_total) <= 1e-8);
    }
  }
  CHECK_THROWS_AS(frame_residual(1.0, pi, -0.1), std::domain_error);
  CHECK_THROWS_AS(frame_residual(1.0, pi, 4.0), std::domain_error);
}

TEST_CASE("closed form matches the integrator state for state and phase") {
  for (double x : {0.5, 1.0, 2.3}) {
    SimulationConfig config;
    config.coupling = Coupling::xx();
    config.schedule = ScheduleKind::Harmonic;
    config.jt_over_pi = x;
    const Trajectory traj = evolve(config, StateSpace::block, 2);
    const Eigen::Vector3cd exact = exact_evolve_block(1.0, pi * x);
    CHECK((traj.states.back() - exact).norm() <= 1e-8);
  }
}

TEST_CASE("closed-form fidelity against the integrator on a grid") {
  for (int i = 0; i <= 40; ++i) {
    const double x = 0.25 + i * (10.0 - 0.25) / 40.0;
    SimulationConfig config;
    config.coupling = Coupling::xx();
    config.schedule = ScheduleKind::Harmonic;
    config.jt_over_pi = x;
    const Trajectory traj = evolve(config, StateSpace::block, 2);
    const double f_rk4 = fidelity(traj.final_state(), target_state_block());
    CHECK(std::abs(f_rk4 - analytic_fidelity_x(x)) <= 1e-7);
  }
}

TEST_CASE("known fidelity values") {
  // Fast sweep at x = 1/2: mostly diabatic.
  CHECK(analytic_fidelity_x(0.5) == doctest::Approx(0.6509).epsilon(2e-4));
  // Slow sweep: fidelity pinned to 1 by the vanishing tilt.
  CHECK(analytic_fidelity_x(1e6) >= 1.0 - 1e-10);
  // Guarded overload.
  CHECK(analytic_fidelity(Coupling::xx(), ScheduleKind::Harmonic, 2.0) ==
        doctest::Approx(analytic_fidelity_x(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(
      analytic_fidelity(Coupling::heisenberg(), ScheduleKind::Harmonic, 2.0),
      std::domain_error);
  CHECK_THROWS_AS(
      analytic_fidelity(Coupling::xx(), ScheduleKind::Linear, 2.0),
      std::domain_error);
  CHECK(exact_solution_available(Coupling::xx(), ScheduleKind::Harmonic));
  CHECK(!exact_solution_available(Coupling::xx(), ScheduleKind::QuadA));
}

TEST_CASE("exact propagation of both sectors") {
  const StateVector final_state = exact_evolve(0.6, 0.8, 1.0, pi * 2.0);
  CHECK(final_state.space == StateSpace::full);
  CHECK(std::abs(final_state.amplitudes.norm() - 1.0) <= 1e-13);
  const double f =
      fidelity(final_state, target_state_full(0.6, 0.8));
  CHECK(f == doctest::Approx(analytic_fidelity_x(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(exact_evolve(1.0, 1.0, 1.0, pi), std::domain_error);
}

TEST_CASE("resonance condition gives perfect fidelity") {
  const std::vector<double> xs = resonance_times(10);
  REQUIRE(xs.size() == 10);
  CHECK(xs[0] == doctest::Approx(std::sqrt(15.0) / 4.0).epsilon(1e-15));
  CHECK(xs[3] == doctest::Approx(std::sqrt(16.0 - 1.0 / 16.0)).epsilon(1e-15));
  for (std::size_t n = 0; n < xs.size(); ++n) {
    CHECK(xs[n] > (n == 0 ? 0.0 : xs[n - 1]));
    CHECK(1.0 - analytic_fidelity_x(xs[n]) <= 1e-12);
  }
  CHECK_THROWS_AS(resonance_times(0), std::domain_error);
}

TEST_CASE("between resonances the fidelity floor is cos^4(alpha)") {
  for (int n = 1; n <= 10; ++n) {
    // omega T = (2n+1) pi at x = sqrt(((2n+1)/2)^2 - 1/16).
    const double half = (2.0 * n + 1.0) / 2.0;
    const double x = std::sqrt(half * half - 1.0 / 16.0);
    const TransformedHamiltonian h = transformed_hamiltonian(1.0, pi * x);
    const double c = std::cos(h.alpha);
    CHECK(std::abs(analytic_fidelity_x(x) - c * c * c * c) <= 1e-12);
  }
}

TEST_CASE("envelope infidelity decays as x^-2") {
  auto envelope = [](double x) {
    const TransformedHamiltonian h = transformed_hamiltonian(1.0, pi * x);
    const double c2 = std::cos(h.alpha) * std::cos(h.alpha);
    return 1.0 - c2 * c2;
  };
  for (double x : {5.0, 10.0, 20.0}) {
    const double scaled_here = envelope(x) * x * x;
    const double scaled_there = envelope(2.0 * x) * 4.0 * x * x;
    CHECK(std::abs(scaled_here - scaled_there) / scaled_here <= 0.05);
  }
}
