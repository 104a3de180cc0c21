#pragma once

// Small dense quantum systems for checking the speed limit directly.
// Internally hbar = 1: energies and times are in reciprocal natural units and
// converted to SI only through to_si_seconds().

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "physlim/constants.hpp"

namespace physlim::qdyn {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

inline constexpr int kMaxDimension = 256;

/// Normalized state vector.
class StateVector {
 public:
  /// Throws DomainError unless the norm is 1 within 1e-10.
  explicit StateVector(Vector amplitudes);

  /// Rescales a nonzero vector to unit norm.
  static StateVector normalized(Vector amplitudes);
  static StateVector basis(int dimension, int index);

  const Vector& amplitudes() const { return amps_; }
  int dimension() const { return static_cast<int>(amps_.size()); }

 private:
  Vector amps_;
};

/// Hermitian matrix; max |H - H^dagger| <= 1e-12.
class HamiltonianMatrix {
 public:
  explicit HamiltonianMatrix(Matrix entries);
  const Matrix& entries() const { return h_; }
  int dimension() const { return static_cast<int>(h_.rows()); }

 private:
  Matrix h_;
};

/// Unitary matrix; max |U^dagger U - I| <= 1e-10.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix entries);
  const Matrix& entries() const { return u_; }
  int dimension() const { return static_cast<int>(u_.rows()); }
  StateVector apply(const StateVector& psi) const;

 private:
  Matrix u_;
};

/// |<a|b>|
double overlap(const StateVector& a, const StateVector& b);

/// exp(-iHt) psi via eigendecomposition.
StateVector evolve(const HamiltonianMatrix& h, const StateVector& psi, double t);

/// 2x2 Hamiltonian with |E0> = (|0>+|1>)/sqrt2 at 0 and |E1> = (|0>-|1>)/sqrt2
/// at e1. Starting from |0>, <H> = dE = e1/2 and |0> -> |1> at t = pi/e1.
HamiltonianMatrix not_hamiltonian(double e1);

/// 8x8 controlled-controlled-NOT. Basis index = 4X + 2Y + Z.
UnitaryMatrix toffoli_unitary();

struct BooleanEmbeddingReport {
  bool and_gate;  // (X, Y, 0) -> Z' = X AND Y
  bool not_gate;  // (1, 1, Z) -> Z' = NOT Z
  bool fanout;    // (X, 1, 0) -> X' = X, Z' = X
  bool all() const { return and_gate && not_gate && fanout; }
};

/// Exhaustive check of the AND, NOT and FANOUT embeddings of the Toffoli gate
/// on computational basis states.
BooleanEmbeddingReport boolean_embeddings_check(const UnitaryMatrix& toffoli = toffoli_unitary());

/// H = pi/(2 dt) (I - U) for a Hermitian involution U, so that
/// exp(-iH dt) = U. Spectrum {0, pi/dt}.
HamiltonianMatrix hamiltonian_for_involution(const UnitaryMatrix& u, double dt);

struct EnergyMoments {
  double mean;    // <H> above the ground eigenvalue
  double spread;  // sqrt(<H^2> - <H>^2)
};

EnergyMoments energy_moments(const HamiltonianMatrix& h, const StateVector& psi);

struct OrthogonalizationResult {
  bool found;
  double t_orth;  // valid iff found
  double ml_bound;  // pi / (2 <H>), ground-shifted
  double ab_bound;  // pi / (2 dH)
  double mean_energy;
  double energy_spread;
};

/// Scans |<psi|psi(t)>| on a grid of at least 1e4 points over [0, t_max],
/// then refines the first dip that falls to overlap_tol or below and reports
/// the time of its minimum. found = false if no such dip occurs by t_max.
OrthogonalizationResult orthogonalization_time(const HamiltonianMatrix& h, const StateVector& psi,
                                               double t_max, double overlap_tol);

/// Same with t_max = 50 x the larger finite bound.
OrthogonalizationResult orthogonalization_time(const HamiltonianMatrix& h, const StateVector& psi,
                                               double overlap_tol = 1e-6);

/// Converts natural time (hbar = 1, energies in units of energy_scale joules)
/// into seconds.
double to_si_seconds(double t_natural, double energy_scale, const PhysicalConstants& constants = {});

// Random ensemble --------------------------------------------------------

/// Seed for trial `index`: SplitMix64 of (seed, index), so trials can run in any
/// order and still reproduce.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// (A + A^dagger)/2 with A having independent standard normal real and
/// imaginary parts.
HamiltonianMatrix random_hamiltonian(int dimension, std::mt19937_64& rng);

/// Normalized vector of independent complex Gaussian amplitudes.
StateVector random_state(int dimension, std::mt19937_64& rng);

/// Gaussian states almost never reach exact orthogonality; the ensemble
/// accepts dips to this overlap.
inline constexpr double kEnsembleOverlapTol = 1e-3;

struct TrialOutcome {
  int dimension;
  OrthogonalizationResult gaussian;       // random Gaussian state
  OrthogonalizationResult two_level;      // equal superposition of two eigenstates
  bool violation;
};

/// One seeded trial. Besides the Gaussian state (which rarely becomes exactly
/// orthogonal) each trial also checks an equal-weight superposition of two
/// random eigenvectors, which always orthogonalizes and meets the spread bound.
TrialOutcome run_trial(std::uint64_t seed, std::uint64_t index, int max_dim);

struct EnsembleSummary {
  int trials = 0;
  int violations = 0;
  int gaussian_found = 0;
  int two_level_found = 0;
  double min_margin = 0.0;  // min over found results of t_orth / max(bounds)
};

/// Runs trials 0..n-1 with dimensions drawn uniformly from [2, max_dim].
EnsembleSummary run_speed_limit_ensemble(int trials, int max_dim, std::uint64_t seed);

/// A result violates the bound when t_orth < max(ml, ab) (1 - 1e-9).
bool violates_speed_limit(const OrthogonalizationResult& result);

}  // namespace physlim::qdyn
