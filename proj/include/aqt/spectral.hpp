#ifndef AQT_SPECTRAL_HPP
#define AQT_SPECTRAL_HPP

#include <Eigen/Dense>

namespace aqt {

// Instantaneous eigensystem of a 3x3 sector block. energies are ascending;
// vectors holds the matching orthonormal eigenvectors as columns, each
// rephased so its first nonzero component is positive.
struct EigenSystem {
  Eigen::Vector3d energies;
  Eigen::Matrix3d vectors;
};

// Closed-form eigensystem for the XX block (gamma = 0). With
// theta = atan2(g, f) and r = sqrt(f^2 + g^2):
//   E = -2Jr, 0, +2Jr
//   v(-) = (sin t, -1, cos t)/sqrt2, v(0) = (cos t, 0, -sin t),
//   v(+) = (sin t, +1, cos t)/sqrt2.
// Throws std::domain_error for f = g = 0, negative f or g, or j <= 0.
EigenSystem eig_xx(double f, double g, double j = 1.0);

// Closed-form eigensystem for the Heisenberg block (gamma = 1):
//   E0 = (f+g) J with vector (1,1,1)/sqrt3,
//   E(+-) = [-(f+g) +- 2 sqrt(f^2 - fg + g^2)] J,
//   v(+-) ~ (sin t, -cos t +- sqrt q, cos t - sin t -+ sqrt q),
// q = 1 - cos t sin t, normalized per branch by sqrt(4q -+ 2(2cos t - sin t) sqrt q).
// The + branch degenerates with E0 at theta = 0; its vector is continued by
// the orthogonal-complement limit (2,-1,-1)/sqrt6. Ascending order is always
// (E-, E+, E0). Same error contract as eig_xx.
EigenSystem eig_heisenberg(double f, double g, double j = 1.0);

// Cyclic Jacobi diagonalization of a real symmetric 3x3 matrix, accurate to
// a few ulps. Throws std::domain_error when the input is not symmetric.
EigenSystem eig_numeric(const Eigen::Matrix3d& h);

}  // namespace aqt

#endif
