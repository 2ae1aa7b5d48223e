#include "aqt/hamiltonian.hpp"

#include <complex>
#include <stdexcept>

namespace aqt {
namespace {

using cd = std::complex<double>;
using Matrix8cd = Eigen::Matrix<cd, 8, 8>;

Eigen::Matrix2cd pauli(int axis) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (axis) {
    case 0:  // identity
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case 1:  // x
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 2:  // y
      m(0, 1) = cd(0.0, -1.0);
      m(1, 0) = cd(0.0, 1.0);
      break;
    case 3:  // z
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

Matrix8cd kron3(const Eigen::Matrix2cd& m1, const Eigen::Matrix2cd& m2,
                const Eigen::Matrix2cd& m3) {
  Matrix8cd out;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2)
          for (int r3 = 0; r3 < 2; ++r3)
            for (int c3 = 0; c3 < 2; ++c3)
              out(4 * r1 + 2 * r2 + r3, 4 * c1 + 2 * c2 + c3) =
                  m1(r1, c1) * m2(r2, c2) * m3(r3, c3);
  return out;
}

// x_a x_b + y_a y_b + gamma z_a z_b on qubits a, b (1-indexed).
Matrix8d pair_coupling(int a, int b, double gamma) {
  Matrix8cd acc = Matrix8cd::Zero();
  const double weight[] = {1.0, 1.0, gamma};
  for (int axis = 1; axis <= 3; ++axis) {
    Eigen::Matrix2cd site[4] = {pauli(0), pauli(0), pauli(0), pauli(0)};
    site[a] = pauli(axis);
    site[b] = pauli(axis);
    acc += weight[axis - 1] * kron3(site[1], site[2], site[3]);
  }
  if (acc.imag().cwiseAbs().maxCoeff() > 1e-15) {
    throw std::logic_error("pair coupling must be real");
  }
  return acc.real();
}

}  // namespace

std::array<int, 3> sector_indices(Sector sector) {
  if (sector == Sector::up_half) return {4, 2, 1};
  return {3, 5, 6};
}

Matrix8d build_full(const Coupling& coupling, double f, double g) {
  return f * pair_coupling(2, 3, coupling.gamma) +
         g * pair_coupling(1, 2, coupling.gamma);
}

Eigen::Matrix3d build_block(const Coupling& coupling, double f, double g) {
  const double gm = coupling.gamma;
  Eigen::Matrix3d h;
  h << (f - g) * gm, 2.0 * g, 0.0,           //
      2.0 * g, -(f + g) * gm, 2.0 * f,       //
      0.0, 2.0 * f, -(f - g) * gm;
  return h;
}

Eigen::Matrix3d project_block(const Matrix8d& full, Sector sector) {
  const auto idx = sector_indices(sector);
  Eigen::Matrix3d block;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) block(i, j) = full(idx[i], idx[j]);
  return block;
}

double scalar_block_energy(const Coupling& coupling, double f, double g) {
  return (f + g) * coupling.gamma;
}

Matrix8d sz_operator() {
  Matrix8d sz = Matrix8d::Zero();
  for (int k = 0; k < 8; ++k) {
    const int ones = ((k >> 2) & 1) + ((k >> 1) & 1) + (k & 1);
    sz(k, k) = (3.0 - 2.0 * ones) / 2.0;
  }
  return sz;
}

}  // namespace aqt
