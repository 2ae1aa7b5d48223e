#include "aqt/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "aqt/model.hpp"

namespace aqt {
namespace {

// Flip eigenvector signs so the first nonzero component of each column is
// positive. Makes closed-form and numeric routes directly comparable away
// from degeneracies.
void fix_column_signs(Eigen::Matrix3d& v) {
  for (int c = 0; c < 3; ++c) {
    for (int r = 0; r < 3; ++r) {
      if (v(r, c) != 0.0) {
        if (v(r, c) < 0.0) v.col(c) = -v.col(c);
        break;
      }
    }
  }
}

void require_valid_point(double f, double g, double j) {
  if (f < 0.0 || g < 0.0) {
    throw std::domain_error("switching values must be nonnegative");
  }
  if (f == 0.0 && g == 0.0) {
    throw std::domain_error("eigensystem undefined at f = g = 0");
  }
  if (!(j > 0.0)) {
    throw std::domain_error("exchange energy j must be positive");
  }
}

}  // namespace

EigenSystem eig_xx(double f, double g, double j) {
  require_valid_point(f, g, j);
  const double theta = mixing_angle(f, g);
  const double r = std::hypot(f, g);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  EigenSystem sys;
  sys.energies << -2.0 * j * r, 0.0, 2.0 * j * r;
  sys.vectors.col(0) << s * inv_sqrt2, -inv_sqrt2, c * inv_sqrt2;
  sys.vectors.col(1) << c, 0.0, -s;
  sys.vectors.col(2) << s * inv_sqrt2, inv_sqrt2, c * inv_sqrt2;
  fix_column_signs(sys.vectors);
  return sys;
}

EigenSystem eig_heisenberg(double f, double g, double j) {
  require_valid_point(f, g, j);
  const double theta = mixing_angle(f, g);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double q = 1.0 - c * s;
  const double root = std::sqrt(q);
  const double disc = std::sqrt(f * f - f * g + g * g);  // = r sqrt(q)

  const double e_zero = (f + g) * j;
  const double e_minus = (-(f + g) - 2.0 * disc) * j;
  const double e_plus = (-(f + g) + 2.0 * disc) * j;

  Eigen::Vector3d v_zero(1.0, 1.0, 1.0);
  v_zero /= std::sqrt(3.0);

  Eigen::Vector3d v_minus(s, -c - root, c - s + root);
  v_minus /= std::sqrt(4.0 * q + 2.0 * (2.0 * c - s) * root);

  // The + branch closes onto the zero branch at theta = 0, where its raw
  // vector vanishes; continue it through the degeneracy as the orthogonal
  // complement of the other two (limit (2,-1,-1)/sqrt6).
  Eigen::Vector3d v_plus(s, -c + root, c - s - root);
  const double n_plus = 4.0 * q - 2.0 * (2.0 * c - s) * root;
  if (n_plus > 1e-12) {
    v_plus /= std::sqrt(n_plus);
  } else {
    v_plus = v_zero.cross(v_minus).normalized();
  }

  // Ascending always: e_minus < e_plus <= e_zero (tie only at fg = 0).
  EigenSystem sys;
  sys.energies << e_minus, e_plus, e_zero;
  sys.vectors.col(0) = v_minus;
  sys.vectors.col(1) = v_plus;
  sys.vectors.col(2) = v_zero;
  fix_column_signs(sys.vectors);
  return sys;
}

EigenSystem eig_numeric(const Eigen::Matrix3d& h) {
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::domain_error("eig_numeric requires a symmetric matrix");
  }

  // Cyclic Jacobi: sweep the three off-diagonal pivots with Givens rotations
  // until they vanish. Quadratic convergence; a handful of sweeps suffices.
  Eigen::Matrix3d a = 0.5 * (h + h.transpose());
  Eigen::Matrix3d v = Eigen::Matrix3d::Identity();
  constexpr std::array<std::array<int, 2>, 3> pivots{{{0, 1}, {0, 2}, {1, 2}}};

  for (int sweep = 0; sweep < 64; ++sweep) {
    const double off = std::abs(a(0, 1)) + std::abs(a(0, 2)) + std::abs(a(1, 2));
    if (off <= 1e-300 || off <= 1e-16 * scale) break;
    for (const auto& [p, q] : pivots) {
      const double apq = a(p, q);
      if (apq == 0.0) continue;
      const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
      const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                       (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;

      Eigen::Matrix3d rot = Eigen::Matrix3d::Identity();
      rot(p, p) = c;
      rot(q, q) = c;
      rot(p, q) = s;
      rot(q, p) = -s;
      a = rot.transpose() * a * rot;
      a(p, q) = 0.0;
      a(q, p) = 0.0;
      v = v * rot;
    }
  }

  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&a](int i, int j) { return a(i, i) < a(j, j); });

  EigenSystem sys;
  for (int k = 0; k < 3; ++k) {
    sys.energies(k) = a(order[k], order[k]);
    sys.vectors.col(k) = v.col(order[k]);
  }
  fix_column_signs(sys.vectors);
  return sys;
}

}  // namespace aqt
