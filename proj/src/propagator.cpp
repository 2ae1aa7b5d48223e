#include "aqt/propagator.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "aqt/hamiltonian.hpp"

namespace aqt {
namespace {

using cd = std::complex<double>;

constexpr double sudden_limit_x = 1e-6;

template <int N>
using MatC = Eigen::Matrix<cd, N, N>;
template <int N>
using VecC = Eigen::Matrix<cd, N, 1>;

// One classical RK4 step of i d|psi>/dt = H(t)|psi> across [s0, s1].
// H is sampled at the interval endpoints and midpoint.
template <int N>
void rk4_step(const MatC<N>& hi, const MatC<N>& hf, ScheduleKind kind,
              double s0, double sh, double s1, double h, VecC<N>& psi) {
  const cd mi(0.0, -1.0);
  const auto [f0, g0] = schedule_eval(kind, s0);
  const auto [fh, gh] = schedule_eval(kind, sh);
  const auto [f1, g1] = schedule_eval(kind, s1);

  const MatC<N> h0 = f0 * hi + g0 * hf;
  const MatC<N> hm = fh * hi + gh * hf;
  const MatC<N> h1m = f1 * hi + g1 * hf;

  const VecC<N> k1 = mi * (h0 * psi);
  const VecC<N> k2 = mi * (hm * (psi + (0.5 * h) * k1));
  const VecC<N> k3 = mi * (hm * (psi + (0.5 * h) * k2));
  const VecC<N> k4 = mi * (h1m * (psi + h * k3));
  psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Snapshot steps: about `record_points` evenly spaced step indices,
// always including 0 and `steps`.
std::vector<int> record_steps(int steps, int record_points) {
  const int wanted = std::max(2, std::min(record_points, steps + 1));
  std::vector<int> idx;
  idx.reserve(wanted);
  for (int j = 0; j < wanted; ++j) {
    const int k = static_cast<int>(
        std::llround(static_cast<double>(j) * steps / (wanted - 1)));
    if (idx.empty() || k > idx.back()) idx.push_back(k);
  }
  return idx;
}

template <int N>
VecC<N> final_state_only(const MatC<N>& hi, const MatC<N>& hf,
                         ScheduleKind kind, double t_total, int steps,
                         VecC<N> psi) {
  const double h = t_total / steps;
  for (int k = 0; k < steps; ++k) {
    const double inv = 1.0 / steps;
    rk4_step<N>(hi, hf, kind, k * inv, (k + 0.5) * inv, (k + 1) * inv, h, psi);
  }
  return psi;
}

template <int N>
Trajectory run_recorded(const MatC<N>& hi, const MatC<N>& hf,
                        const SimulationConfig& config, StateSpace space,
                        const VecC<N>& psi0, int record_points) {
  const double t_total = config.total_time();
  const int steps = config.effective_steps();
  const double h = t_total / steps;

  Trajectory traj;
  traj.space = space;
  traj.steps = steps;

  Eigen::Matrix<double, N, 1> sz_diag;
  double sz0 = 0.0;
  const bool track_sz = (space == StateSpace::full);
  if (track_sz) {
    const Matrix8d sz = sz_operator();
    for (int k = 0; k < N; ++k) sz_diag(k) = sz(k, k);
    sz0 = sz_diag.dot(psi0.cwiseAbs2());
  }

  const std::vector<int> snapshots = record_steps(steps, record_points);
  std::size_t next_snapshot = 0;
  auto maybe_record = [&](int k, const VecC<N>& psi) {
    if (next_snapshot < snapshots.size() && snapshots[next_snapshot] == k) {
      traj.times.push_back(k * h);
      traj.states.push_back(psi);
      ++next_snapshot;
    }
  };

  VecC<N> psi = psi0;
  maybe_record(0, psi);
  for (int k = 0; k < steps; ++k) {
    const double inv = 1.0 / steps;
    rk4_step<N>(hi, hf, config.schedule, k * inv, (k + 0.5) * inv,
                (k + 1) * inv, h, psi);
    traj.norm_drift =
        std::max(traj.norm_drift, std::abs(psi.norm() - 1.0));
    if (track_sz) {
      const double sz_t = sz_diag.dot(psi.cwiseAbs2());
      traj.sz_drift = std::max(traj.sz_drift, std::abs(sz_t - sz0));
    }
    maybe_record(k + 1, psi);
  }
  return traj;
}

template <int N>
void check_convergence(const MatC<N>& hi, const MatC<N>& hf,
                       const SimulationConfig& config, const VecC<N>& psi0,
                       const VecC<N>& coarse_final) {
  const VecC<N> fine = final_state_only<N>(hi, hf, config.schedule,
                                           config.total_time(),
                                           2 * config.effective_steps(), psi0);
  const double dist = (coarse_final - fine).norm();
  if (dist > *config.convergence_tol) {
    Eigen::VectorXcd coarse_x = coarse_final;
    Eigen::VectorXcd fine_x = fine;
    throw UnconvergedError(dist, *config.convergence_tol, std::move(coarse_x),
                           std::move(fine_x));
  }
}

Trajectory sudden_limit_trajectory(const SimulationConfig& config,
                                   StateSpace space,
                                   const Eigen::VectorXcd& psi0) {
  Trajectory traj;
  traj.space = space;
  traj.steps = 0;
  traj.times = {0.0, config.total_time()};
  traj.states = {psi0, psi0};
  return traj;
}

}  // namespace

StateVector make_state(Eigen::VectorXcd amplitudes, StateSpace space) {
  const int expected = (space == StateSpace::block) ? 3 : 8;
  if (amplitudes.size() != expected) {
    throw std::domain_error("state dimension does not match its space");
  }
  if (std::abs(amplitudes.norm() - 1.0) > 1e-12) {
    throw std::domain_error("state vector must be normalized");
  }
  return StateVector{std::move(amplitudes), space};
}

StateVector initial_state_block() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(3);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  v(1) = -inv_sqrt2;
  v(2) = inv_sqrt2;
  return StateVector{std::move(v), StateSpace::block};
}

StateVector target_state_block() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(3);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  v(0) = -inv_sqrt2;
  v(1) = inv_sqrt2;
  return StateVector{std::move(v), StateSpace::block};
}

namespace {

void require_unit_pair(std::complex<double> a, std::complex<double> b) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) {
    throw std::domain_error("amplitudes must satisfy |a|^2 + |b|^2 = 1");
  }
}

// Both sectors evolve under the same 3x3 block; the down-sector embedding
// carries a global minus so that the two sectors share identical block
// coordinates. Observables are unaffected.
Eigen::VectorXcd assemble_full(std::complex<double> a, std::complex<double> b,
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

StateVector initial_state_full(std::complex<double> a,
                               std::complex<double> b) {
  require_unit_pair(a, b);
  Eigen::Vector3cd block;
  block << initial_state_block().amplitudes;
  return StateVector{assemble_full(a, b, block), StateSpace::full};
}

StateVector target_state_full(std::complex<double> a, std::complex<double> b) {
  require_unit_pair(a, b);
  Eigen::Vector3cd block;
  block << target_state_block().amplitudes;
  return StateVector{assemble_full(a, b, block), StateSpace::full};
}

double fidelity(const StateVector& state, const StateVector& target) {
  if (state.space != target.space ||
      state.amplitudes.size() != target.amplitudes.size()) {
    throw std::domain_error("fidelity requires states in the same space");
  }
  return std::norm(target.amplitudes.dot(state.amplitudes));
}

double sz_expectation(const StateVector& state) {
  if (state.space != StateSpace::full || state.amplitudes.size() != 8) {
    throw std::domain_error("sz expectation requires a full-space state");
  }
  const Matrix8d sz = sz_operator();
  double acc = 0.0;
  for (int k = 0; k < 8; ++k) acc += sz(k, k) * std::norm(state.amplitudes(k));
  return acc;
}

StateVector Trajectory::final_state() const {
  if (states.empty()) {
    throw std::logic_error("trajectory holds no states");
  }
  return StateVector{states.back(), space};
}

UnconvergedError::UnconvergedError(double distance, double tolerance,
                                   Eigen::VectorXcd coarse,
                                   Eigen::VectorXcd fine)
    : std::runtime_error([&] {
        std::ostringstream msg;
        msg << "step-halving check failed: final states differ by " << distance
            << " (tolerance " << tolerance << ")";
        return msg.str();
      }()),
      distance_(distance),
      tolerance_(tolerance),
      coarse_(std::move(coarse)),
      fine_(std::move(fine)) {}

Trajectory evolve(const SimulationConfig& config, StateSpace space,
                  int record_points) {
  config.validate();

  if (space == StateSpace::block) {
    const Eigen::Matrix3cd hi =
        build_block(config.coupling, 1.0, 0.0).cast<cd>();
    const Eigen::Matrix3cd hf =
        build_block(config.coupling, 0.0, 1.0).cast<cd>();
    Eigen::Vector3cd psi0;
    psi0 << initial_state_block().amplitudes;

    if (config.jt_over_pi < sudden_limit_x) {
      return sudden_limit_trajectory(config, space, psi0);
    }
    Trajectory traj =
        run_recorded<3>(hi, hf, config, space, psi0, record_points);
    if (config.convergence_tol) {
      Eigen::Vector3cd last;
      last << traj.states.back();
      check_convergence<3>(hi, hf, config, psi0, last);
    }
    return traj;
  }

  const Eigen::Matrix<cd, 8, 8> hi =
      build_full(config.coupling, 1.0, 0.0).cast<cd>();
  const Eigen::Matrix<cd, 8, 8> hf =
      build_full(config.coupling, 0.0, 1.0).cast<cd>();
  Eigen::Matrix<cd, 8, 1> psi0;
  psi0 << initial_state_full(config.a, config.b).amplitudes;

  if (config.jt_over_pi < sudden_limit_x) {
    return sudden_limit_trajectory(config, space, psi0);
  }
  Trajectory traj = run_recorded<8>(hi, hf, config, space, psi0, record_points);
  if (config.convergence_tol) {
    Eigen::Matrix<cd, 8, 1> last;
    last << traj.states.back();
    check_convergence<8>(hi, hf, config, psi0, last);
  }
  return traj;
}

}  // namespace aqt
