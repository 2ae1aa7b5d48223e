#ifndef AQT_PROPAGATOR_HPP
#define AQT_PROPAGATOR_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

#include "aqt/model.hpp"

namespace aqt {

// Dynamics can run in the full 8-dimensional space or in one 3x3 Sz block.
// The protocol state never leaves the two 3x3 blocks, and both blocks evolve
// identically, so block runs carry the full physics at a quarter of the cost.
enum class StateSpace { block, full };

struct StateVector {
  Eigen::VectorXcd amplitudes;
  StateSpace space = StateSpace::block;
};

// Validated constructor: dimension must match the space (3 or 8) and the
// norm must be 1 within 1e-12. Throws std::domain_error.
StateVector make_state(Eigen::VectorXcd amplitudes, StateSpace space);

// Protocol states. The full-space initial state encodes (a, b) on qubit 1
// as singlets: a/sqrt2 |001> - a/sqrt2 |010> + b/sqrt2 |101> - b/sqrt2 |110>.
// The target has the same amplitudes teleported to qubit 3:
// a/sqrt2 |010> - a/sqrt2 |100> + b/sqrt2 |011> - b/sqrt2 |101>.
// In block coordinates both sectors reduce to the same pair of vectors:
// initial (0, -1, 1)/sqrt2 and target (-1, 1, 0)/sqrt2, so the block states
// carry no (a, b) dependence. Throws std::domain_error when |a|^2 + |b|^2
// differs from 1 by more than 1e-12.
StateVector initial_state_block();
StateVector target_state_block();
StateVector initial_state_full(std::complex<double> a, std::complex<double> b);
StateVector target_state_full(std::complex<double> a, std::complex<double> b);

// |<target|state>|^2. Throws std::domain_error on space or size mismatch.
double fidelity(const StateVector& state, const StateVector& target);

// <Sz> of a full-space state. Throws std::domain_error for block states.
double sz_expectation(const StateVector& state);

struct Trajectory {
  StateSpace space = StateSpace::block;
  std::vector<double> times;
  std::vector<Eigen::VectorXcd> states;
  int steps = 0;           // RK4 steps actually taken
  double norm_drift = 0.0; // max |norm - 1| along the run
  double sz_drift = 0.0;   // max |<Sz>(t) - <Sz>(0)|, full space only

  StateVector final_state() const;
};

// Raised when the step-halving check requested via
// SimulationConfig::convergence_tol fails. Carries both final states.
class UnconvergedError : public std::runtime_error {
 public:
  UnconvergedError(double distance, double tolerance,
                   Eigen::VectorXcd coarse, Eigen::VectorXcd fine);

  double distance() const { return distance_; }
  double tolerance() const { return tolerance_; }
  const Eigen::VectorXcd& coarse_state() const { return coarse_; }
  const Eigen::VectorXcd& fine_state() const { return fine_; }

 private:
  double distance_;
  double tolerance_;
  Eigen::VectorXcd coarse_;
  Eigen::VectorXcd fine_;
};

// Integrate i d|psi>/dt = H(t)|psi> from t = 0 to t = T with classical
// fixed-step RK4 and no renormalization; norm drift is reported as a
// diagnostic. Block runs start from initial_state_block(), full runs from
// initial_state_full(config.a, config.b). The trajectory keeps about
// record_points snapshots including both endpoints. Runs with x < 1e-6 are
// treated as the sudden limit: the state does not move.
Trajectory evolve(const SimulationConfig& config, StateSpace space,
                  int record_points = 33);

}  // namespace aqt

#endif
