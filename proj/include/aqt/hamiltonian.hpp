#ifndef AQT_HAMILTONIAN_HPP
#define AQT_HAMILTONIAN_HPP

#include <Eigen/Dense>
#include <array>

#include "aqt/model.hpp"

namespace aqt {

using Matrix8d = Eigen::Matrix<double, 8, 8>;

// Computational basis |q1 q2 q3> with qubit 1 most significant and |0> = up,
// so basis index k = 4*q1 + 2*q2 + q3.
//
// H(t)/J = f * H_i + g * H_f,
//   H_i = x2 x3 + y2 y3 + gamma z2 z3   (pair 2,3)
//   H_f = x1 x2 + y1 y2 + gamma z1 z2   (pair 1,2)
// Both terms conserve total Sz, so H block-diagonalizes into two 3x3 blocks
// (Sz = +-1/2) and two 1x1 blocks (|000>, |111>).
enum class Sector { up_half, down_half };

// Basis indices spanning a sector, in the order used by the 3x3 blocks:
// up:   |100>, |010>, |001>  ->  {4, 2, 1}
// down: |011>, |101>, |110>  ->  {3, 5, 6}
std::array<int, 3> sector_indices(Sector sector);

// Full 8x8 Hamiltonian in units of J. Real symmetric.
Matrix8d build_full(const Coupling& coupling, double f, double g);

// 3x3 block on either Sz = +-1/2 subspace (identical for the two sectors):
//   [ (f-g)*gamma   2g            0          ]
//   [ 2g           -(f+g)*gamma   2f         ]
//   [ 0             2f           -(f-g)*gamma ]
Eigen::Matrix3d build_block(const Coupling& coupling, double f, double g);

// Extract the 3x3 sector block of an 8x8 Hamiltonian. For matrices produced
// by build_full this reproduces build_block exactly.
Eigen::Matrix3d project_block(const Matrix8d& full, Sector sector);

// Energy of the one-dimensional blocks |000> and |111>: (f+g)*gamma*J.
double scalar_block_energy(const Coupling& coupling, double f, double g);

// Sz = (z1 + z2 + z3)/2, diagonal in the computational basis.
Matrix8d sz_operator();

}  // namespace aqt

#endif
