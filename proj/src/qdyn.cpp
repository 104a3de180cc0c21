#include "physlim/qdyn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace physlim::qdyn {

using std::numbers::pi;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_dimension(Eigen::Index d) {
  if (d < 1 || d > kMaxDimension) throw DomainError("dimension must be in [1, 256]");
}

void require_square(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("matrix must be square");
  require_dimension(m.rows());
}

void require_same_dimension(int a, int b) {
  if (a != b) throw DomainError("dimension mismatch");
}

// Spectral data of H seen from a fixed state.
struct Spectrum {
  Eigen::VectorXd energies;  // ascending, ground-shifted to 0
  Eigen::VectorXd weights;   // |<E_k|psi>|^2
};

Spectrum project(const HamiltonianMatrix& h, const StateVector& psi) {
  require_same_dimension(h.dimension(), psi.dimension());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.entries());
  if (es.info() != Eigen::Success) throw DomainError("eigendecomposition failed");
  Spectrum s;
  s.energies = es.eigenvalues().array() - es.eigenvalues()(0);
  s.weights = (es.eigenvectors().adjoint() * psi.amplitudes()).cwiseAbs2();
  s.weights /= s.weights.sum();
  return s;
}

double survival(const Spectrum& s, double t) {
  Complex acc{0.0, 0.0};
  for (Eigen::Index k = 0; k < s.energies.size(); ++k) {
    acc += s.weights(k) * std::polar(1.0, -s.energies(k) * t);
  }
  return std::abs(acc);
}

// Golden-section search for the minimum of survival() on [a, b].
std::pair<double, double> refine_minimum(const Spectrum& s, double a, double b) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = survival(s, c);
  double fd = survival(s, d);
  for (int i = 0; i < 200 && (b - a) > 1e-15 * std::max(1.0, std::abs(b)); ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = survival(s, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = survival(s, d);
    }
  }
  const double t = 0.5 * (a + b);
  return {t, survival(s, t)};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

StateVector::StateVector(Vector amplitudes) : amps_(std::move(amplitudes)) {
  require_dimension(amps_.size());
  if (!(std::abs(amps_.squaredNorm() - 1.0) <= 1e-10)) {
    throw DomainError("state vector must be normalized");
  }
}

StateVector StateVector::normalized(Vector amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("cannot normalize a zero vector");
  return StateVector(amplitudes / n);
}

StateVector StateVector::basis(int dimension, int index) {
  require_dimension(dimension);
  if (index < 0 || index >= dimension) throw DomainError("basis index out of range");
  Vector v = Vector::Zero(dimension);
  v(index) = 1.0;
  return StateVector(std::move(v));
}

HamiltonianMatrix::HamiltonianMatrix(Matrix entries) : h_(std::move(entries)) {
  require_square(h_);
  if ((h_ - h_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError("Hamiltonian must be Hermitian");
  }
}

UnitaryMatrix::UnitaryMatrix(Matrix entries) : u_(std::move(entries)) {
  require_square(u_);
  const Matrix defect = u_.adjoint() * u_ - Matrix::Identity(u_.rows(), u_.cols());
  if (defect.cwiseAbs().maxCoeff() > 1e-10) throw DomainError("matrix must be unitary");
}

StateVector UnitaryMatrix::apply(const StateVector& psi) const {
  require_same_dimension(dimension(), psi.dimension());
  return StateVector::normalized(u_ * psi.amplitudes());
}

double overlap(const StateVector& a, const StateVector& b) {
  require_same_dimension(a.dimension(), b.dimension());
  return std::abs(a.amplitudes().dot(b.amplitudes()));
}

StateVector evolve(const HamiltonianMatrix& h, const StateVector& psi, double t) {
  require_same_dimension(h.dimension(), psi.dimension());
  if (!std::isfinite(t)) throw DomainError("evolution time must be finite");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.entries());
  if (es.info() != Eigen::Success) throw DomainError("eigendecomposition failed");
  const auto& v = es.eigenvectors();
  Vector coeffs = v.adjoint() * psi.amplitudes();
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs(k) *= std::polar(1.0, -es.eigenvalues()(k) * t);
  }
  return StateVector::normalized(v * coeffs);
}

HamiltonianMatrix not_hamiltonian(double e1) {
  detail::require_positive(e1, "E1");
  Vector excited(2);
  excited << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  Matrix h = e1 * excited * excited.adjoint();
  return HamiltonianMatrix(0.5 * (h + h.adjoint()));
}

UnitaryMatrix toffoli_unitary() {
  Matrix u = Matrix::Identity(8, 8);
  // |110> <-> |111>
  u(6, 6) = 0.0;
  u(7, 7) = 0.0;
  u(6, 7) = 1.0;
  u(7, 6) = 1.0;
  return UnitaryMatrix(std::move(u));
}

BooleanEmbeddingReport boolean_embeddings_check(const UnitaryMatrix& toffoli) {
  if (toffoli.dimension() != 8) throw DomainError("Toffoli check needs an 8x8 unitary");
  // Output bits of a basis input, or -1 if the image is not a basis state.
  auto image = [&](int x, int y, int z) {
    const auto out = toffoli.apply(StateVector::basis(8, 4 * x + 2 * y + z)).amplitudes();
    for (int i = 0; i < 8; ++i) {
      if (out(i) == Complex{1.0, 0.0}) return i;
    }
    return -1;
  };
  auto bit = [](int index, int which) { return (index >> (2 - which)) & 1; };

  BooleanEmbeddingReport rep{true, true, true};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const int out = image(x, y, 0);
      rep.and_gate = rep.and_gate && out >= 0 && bit(out, 0) == x && bit(out, 1) == y &&
                     bit(out, 2) == (x & y);
    }
  }
  for (int z = 0; z < 2; ++z) {
    const int out = image(1, 1, z);
    rep.not_gate = rep.not_gate && out >= 0 && bit(out, 2) == (1 - z);
  }
  for (int x = 0; x < 2; ++x) {
    const int out = image(x, 1, 0);
    rep.fanout = rep.fanout && out >= 0 && bit(out, 0) == x && bit(out, 2) == x;
  }
  return rep;
}

HamiltonianMatrix hamiltonian_for_involution(const UnitaryMatrix& u, double dt) {
  detail::require_positive(dt, "gate time dt");
  const Matrix& m = u.entries();
  const auto id = Matrix::Identity(m.rows(), m.cols());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10 || (m * m - id).cwiseAbs().maxCoeff() > 1e-10) {
    throw DomainError("unitary must be a Hermitian involution (U^2 = I)");
  }
  Matrix h = (pi / (2.0 * dt)) * (id - m);
  return HamiltonianMatrix(0.5 * (h + h.adjoint()));
}

EnergyMoments energy_moments(const HamiltonianMatrix& h, const StateVector& psi) {
  const auto s = project(h, psi);
  const double mean = s.weights.dot(s.energies);
  const double second = s.weights.dot(s.energies.cwiseAbs2());
  return {mean, std::sqrt(std::max(0.0, second - mean * mean))};
}

OrthogonalizationResult orthogonalization_time(const HamiltonianMatrix& h, const StateVector& psi,
                                               double t_max, double overlap_tol) {
  detail::require_positive(t_max, "t_max");
  if (!(overlap_tol > 0.0 && overlap_tol <= 1e-3)) {
    throw DomainError("overlap tolerance must lie in (0, 1e-3]");
  }
  const auto s = project(h, psi);

  OrthogonalizationResult res{};
  res.mean_energy = s.weights.dot(s.energies);
  res.energy_spread =
      std::sqrt(std::max(0.0, s.weights.dot(s.energies.cwiseAbs2()) - res.mean_energy * res.mean_energy));
  res.ml_bound = res.mean_energy > 0.0 ? pi / (2.0 * res.mean_energy) : kInf;
  res.ab_bound = res.energy_spread > 0.0 ? pi / (2.0 * res.energy_spread) : kInf;
  res.found = false;
  res.t_orth = 0.0;

  // |d survival/dt| <= E_range, so a step of 0.05/E_range moves the overlap by
  // at most 0.05 between samples.
  const double e_range = s.energies.maxCoeff();
  double n_points = 1e4;
  if (e_range > 0.0) n_points = std::max(n_points, std::ceil(t_max * e_range / 0.05));
  n_points = std::min(n_points, 5e6);
  const auto n = static_cast<long>(n_points);
  const double dt = t_max / static_cast<double>(n);
  const double slack = e_range * dt;

  std::vector<double> grid(static_cast<std::size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) grid[static_cast<std::size_t>(i)] = survival(s, dt * static_cast<double>(i));

  for (long i = 1; i <= n; ++i) {
    const double here = grid[static_cast<std::size_t>(i)];
    const bool last = i == n;
    const bool local_min = here <= grid[static_cast<std::size_t>(i - 1)] &&
                           (last || here <= grid[static_cast<std::size_t>(i + 1)]);
    if (!local_min || here > overlap_tol + slack) continue;
    const double a = dt * static_cast<double>(i - 1);
    const double b = last ? t_max : dt * static_cast<double>(i + 1);
    const auto [t, value] = refine_minimum(s, a, b);
    if (value <= overlap_tol) {
      res.found = true;
      res.t_orth = t;
      return res;
    }
  }
  return res;
}

OrthogonalizationResult orthogonalization_time(const HamiltonianMatrix& h, const StateVector& psi,
                                               double overlap_tol) {
  const auto m = energy_moments(h, psi);
  double bound = 0.0;
  if (m.mean > 0.0) bound = std::max(bound, pi / (2.0 * m.mean));
  if (m.spread > 0.0) bound = std::max(bound, pi / (2.0 * m.spread));
  if (bound == 0.0) {
    // Ground state with zero spread: stationary. Any positive window works.
    bound = 1.0;
  }
  return orthogonalization_time(h, psi, 50.0 * bound, overlap_tol);
}

double to_si_seconds(double t_natural, double energy_scale, const PhysicalConstants& k) {
  detail::require_positive(energy_scale, "energy scale");
  return t_natural * k.hbar / energy_scale;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL));
}

HamiltonianMatrix random_hamiltonian(int dimension, std::mt19937_64& rng) {
  require_dimension(dimension);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix a(dimension, dimension);
  for (int i = 0; i < dimension; ++i) {
    for (int j = 0; j < dimension; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      a(i, j) = Complex{re, im};
    }
  }
  return HamiltonianMatrix(0.5 * (a + a.adjoint()));
}

StateVector random_state(int dimension, std::mt19937_64& rng) {
  require_dimension(dimension);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(dimension);
  for (int i = 0; i < dimension; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex{re, im};
  }
  return StateVector::normalized(std::move(v));
}

bool violates_speed_limit(const OrthogonalizationResult& r) {
  return r.found && r.t_orth < std::max(r.ml_bound, r.ab_bound) * (1.0 - 1e-9);
}

TrialOutcome run_trial(std::uint64_t seed, std::uint64_t index, int max_dim) {
  if (max_dim < 2 || max_dim > kMaxDimension) throw DomainError("max_dim must be in [2, 256]");
  std::mt19937_64 rng(trial_seed(seed, index));
  const int d = std::uniform_int_distribution<int>(2, max_dim)(rng);
  const auto h = random_hamiltonian(d, rng);
  const auto psi = random_state(d, rng);

  TrialOutcome out{};
  out.dimension = d;
  out.gaussian = orthogonalization_time(h, psi, kEnsembleOverlapTol);

  Eigen::SelfAdjointEigenSolver<Matrix> es(h.entries());
  const int j = std::uniform_int_distribution<int>(0, d - 1)(rng);
  int k = std::uniform_int_distribution<int>(0, d - 2)(rng);
  if (k >= j) ++k;
  const double phase = std::uniform_real_distribution<double>(0.0, 2.0 * pi)(rng);
  Vector mix = es.eigenvectors().col(j) + std::polar(1.0, phase) * es.eigenvectors().col(k);
  out.two_level = orthogonalization_time(h, StateVector::normalized(std::move(mix)));

  out.violation = violates_speed_limit(out.gaussian) || violates_speed_limit(out.two_level);
  return out;
}

EnsembleSummary run_speed_limit_ensemble(int trials, int max_dim, std::uint64_t seed) {
  if (trials < 1) throw DomainError("trials must be at least 1");
  EnsembleSummary sum;
  sum.trials = trials;
  sum.min_margin = kInf;
  auto margin = [](const OrthogonalizationResult& r) {
    return r.t_orth / std::max(r.ml_bound, r.ab_bound);
  };
  for (int i = 0; i < trials; ++i) {
    const auto t = run_trial(seed, static_cast<std::uint64_t>(i), max_dim);
    if (t.violation) ++sum.violations;
    if (t.gaussian.found) {
      ++sum.gaussian_found;
      sum.min_margin = std::min(sum.min_margin, margin(t.gaussian));
    }
    if (t.two_level.found) {
      ++sum.two_level_found;
      sum.min_margin = std::min(sum.min_margin, margin(t.two_level));
    }
  }
  return sum;
}

}  // namespace physlim::qdyn
