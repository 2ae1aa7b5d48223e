#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "aqt/hamiltonian.hpp"

using namespace aqt;
using cd = std::complex<double>;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("sector basis indices") {
  CHECK(sector_indices(Sector::up_half) == std::array<int, 3>{4, 2, 1});
  CHECK(sector_indices(Sector::down_half) == std::array<int, 3>{3, 5, 6});
}

TEST_CASE("singlet on the coupled pair is an eigenstate of the initial term") {
  // |0>_1 (|01> - |10>)_{23} / sqrt2: eigenvalue -3J for Heisenberg
  // (gamma = 1), -2J for XX (gamma = 0).
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8);
  psi(1) = 1.0 / std::sqrt(2.0);   // |001>
  psi(2) = -1.0 / std::sqrt(2.0);  // |010>

  const Matrix8d h_heis = build_full(Coupling::heisenberg(), 1.0, 0.0);
  const Eigen::VectorXcd hpsi = h_heis.cast<cd>() * psi;
  CHECK((hpsi - (-3.0) * psi).cwiseAbs().maxCoeff() <= 1e-14);

  const Matrix8d h_xx = build_full(Coupling::xx(), 1.0, 0.0);
  const Eigen::VectorXcd hpsi_xx = h_xx.cast<cd>() * psi;
  CHECK((hpsi_xx - (-2.0) * psi).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("zero switching gives the zero matrix") {
  CHECK(max_abs(build_full(Coupling::heisenberg(), 0.0, 0.0)) == 0.0);
  CHECK(max_abs(build_block(Coupling::xx(), 0.0, 0.0)) == 0.0);
}

TEST_CASE("block matrix closed forms for the XX coupling") {
  Eigen::Matrix3d expected;
  expected << 0, 0, 0,  //
      0, 0, 2,          //
      0, 2, 0;
  CHECK(max_abs(build_block(Coupling::xx(), 1.0, 0.0) - expected) == 0.0);

  expected << 0, 2, 0,  //
      2, 0, 0,          //
      0, 0, 0;
  CHECK(max_abs(build_block(Coupling::xx(), 0.0, 1.0) - expected) == 0.0);

  expected << 0, 1, 0,  //
      1, 0, 1,          //
      0, 1, 0;
  CHECK(max_abs(build_block(Coupling::xx(), 0.5, 0.5) - expected) == 0.0);
}

TEST_CASE("heisenberg block picks up the diagonal") {
  Eigen::Matrix3d expected;
  expected << 1, 0, 0,  //
      0, -1, 2,         //
      0, 2, -1;
  CHECK(max_abs(build_block(Coupling::heisenberg(), 1.0, 0.0) - expected) ==
        0.0);
}

TEST_CASE("projected blocks equal the closed-form block") {
  std::mt19937 rng(20260817);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> gammas(0.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Coupling coupling = make_coupling(gammas(rng));
    const double f = unit(rng);
    const double g = unit(rng);
    const Matrix8d full = build_full(coupling, f, g);
    const Eigen::Matrix3d block = build_block(coupling, f, g);
    CHECK(max_abs(project_block(full, Sector::up_half) - block) <= 1e-14);
    CHECK(max_abs(project_block(full, Sector::down_half) - block) <= 1e-14);
  }
}

TEST_CASE("full hamiltonian is symmetric and conserves Sz") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Matrix8d sz = sz_operator();
  for (int trial = 0; trial < 50; ++trial) {
    const Coupling coupling = make_coupling(2.0 * unit(rng));
    const Matrix8d h = build_full(coupling, unit(rng), unit(rng));
    CHECK(max_abs(h - h.transpose()) <= 1e-14);
    CHECK(max_abs(h * sz - sz * h) <= 1e-14);
  }
}

TEST_CASE("hamiltonian is linear in the switching values") {
  const Coupling coupling = make_coupling(0.7);
  const Matrix8d hi = build_full(coupling, 1.0, 0.0);
  const Matrix8d hf = build_full(coupling, 0.0, 1.0);
  const double f = 0.3, g = 0.85;
  CHECK(max_abs(build_full(coupling, f, g) - (f * hi + g * hf)) <= 1e-15);
}

TEST_CASE("scalar blocks match the full matrix corners") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Coupling coupling = make_coupling(2.0 * unit(rng));
    const double f = unit(rng);
    const double g = unit(rng);
    const Matrix8d h = build_full(coupling, f, g);
    const double e = scalar_block_energy(coupling, f, g);
    CHECK(h(0, 0) == doctest::Approx(e).epsilon(1e-14));
    CHECK(h(7, 7) == doctest::Approx(e).epsilon(1e-14));
    // |000> and |111> couple to nothing else.
    for (int k = 1; k < 8; ++k) {
      CHECK(h(0, k) == 0.0);
      CHECK(h(7, k - 1) == 0.0);
    }
  }
}

TEST_CASE("sz operator diagonal") {
  const Matrix8d sz = sz_operator();
  CHECK(sz(0, 0) == 1.5);   // |000>
  CHECK(sz(7, 7) == -1.5);  // |111>
  for (int k : sector_indices(Sector::up_half)) CHECK(sz(k, k) == 0.5);
  for (int k : sector_indices(Sector::down_half)) CHECK(sz(k, k) == -0.5);
  CHECK(max_abs(sz - Eigen::MatrixXd(sz.diagonal().asDiagonal())) == 0.0);
}
