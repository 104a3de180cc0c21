#include "physlim/radiation_memory.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

namespace physlim {

using std::numbers::ln2;
using std::numbers::pi;

namespace {

std::string join(const std::vector<std::string>& names) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
  os << '}';
  return os.str();
}

}  // namespace

void ParticleSpecies::validate() const {
  if (name.empty()) throw DomainError("species name must not be empty");
  if (!(mass >= 0.0) || !std::isfinite(mass)) {
    throw DomainError("species '" + name + "': mass must be nonnegative");
  }
  if (particle_antiparticle_count != 1 && particle_antiparticle_count != 2) {
    throw DomainError("species '" + name + "': particle/antiparticle count must be 1 or 2");
  }
  if (polarizations < 1) throw DomainError("species '" + name + "': polarizations must be >= 1");
}

double effective_dof(const ParticleSpecies& s) {
  const double stat = s.statistics == Statistics::fermion ? 7.0 / 8.0 : 1.0;
  return s.particle_antiparticle_count * s.polarizations * stat;
}

ParticleSpecies photon() { return {"photon", 0.0, 1, 2, Statistics::boson}; }

SpeciesTable::SpeciesTable() : species_{photon()} {}

SpeciesTable::SpeciesTable(std::vector<ParticleSpecies> species) : species_(std::move(species)) {
  if (species_.empty()) throw DomainError("species table must not be empty");
  std::set<std::string> names;
  bool has_photon = false;
  for (const auto& s : species_) {
    s.validate();
    if (!names.insert(s.name).second) throw DomainError("duplicate species name '" + s.name + "'");
    if (s.mass == 0.0 && s.statistics == Statistics::boson && s.particle_antiparticle_count == 1 &&
        s.polarizations == 2 && s.name == "photon") {
      has_photon = true;
    }
  }
  if (!has_photon) throw DomainError("species table must contain the photon (massless, r = 2)");
}

SpeciesInclusionError::SpeciesInclusionError(std::vector<std::string> a,
                                             std::vector<std::string> b)
    : std::runtime_error("species inclusion does not settle; candidate sets " + join(a) +
                         " and " + join(b)),
      first_(std::move(a)),
      second_(std::move(b)) {}

double radiation_temperature(double energy, double volume, double r, const PhysicalConstants& k) {
  detail::require_positive(energy, "energy");
  detail::require_positive(volume, "volume");
  detail::require_positive(r, "degrees of freedom r");
  const double hc = k.hbar * k.c;
  const double kT = std::pow(30.0 * hc * hc * hc * energy / (r * pi * pi * volume), 0.25);
  return kT / k.k_B;
}

ThermalState solve_thermal_state(double energy, double volume, const SpeciesTable& table,
                                 const PhysicalConstants& k) {
  detail::require_positive(energy, "energy");
  detail::require_positive(volume, "volume");

  const auto& all = table.species();
  auto select = [&](double temperature) {
    const double threshold = k.k_B * temperature / (2.0 * k.c * k.c);
    std::vector<bool> in(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) in[i] = all[i].mass == 0.0 || all[i].mass < threshold;
    return in;
  };
  auto weight = [&](const std::vector<bool>& in) {
    double r = 0.0;
    for (std::size_t i = 0; i < all.size(); ++i) if (in[i]) r += effective_dof(all[i]);
    return r;
  };
  auto names = [&](const std::vector<bool>& in) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < all.size(); ++i) if (in[i]) out.push_back(all[i].name);
    return out;
  };

  std::vector<bool> included(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) included[i] = all[i].mass == 0.0;

  std::vector<bool> previous;
  double temperature = 0.0;
  bool settled = false;
  for (std::size_t round = 0; round <= all.size(); ++round) {
    temperature = radiation_temperature(energy, volume, weight(included), k);
    auto next = select(temperature);
    if (next == included) {
      settled = true;
      break;
    }
    if (next == previous) throw SpeciesInclusionError(names(included), names(next));
    previous = std::move(included);
    included = std::move(next);
  }
  if (!settled) throw SpeciesInclusionError(names(previous), names(included));

  const double r = weight(included);
  const double entropy = 4.0 * energy / (3.0 * temperature);
  return ThermalState{
      temperature,
      energy,
      volume,
      entropy,
      entropy / (k.k_B * ln2),
      r,
      names(included),
      2.0 * pi * k.hbar * k.c / (k.k_B * temperature),
  };
}

double ops_per_bit_per_second(double energy, double entropy, const PhysicalConstants& k) {
  detail::require_positive(energy, "energy");
  detail::require_positive(entropy, "entropy");
  return 2.0 * ln2 * k.k_B * energy / (pi * k.hbar * entropy);
}

double bits_per_cubic_thermal_wavelength(double r) {
  detail::require_positive(r, "degrees of freedom r");
  return std::pow(2.0 * pi, 5) * r / (90.0 * ln2);
}

CanonicalEnsemble canonical_ensemble(std::span<const double> levels, double temperature,
                                     const PhysicalConstants& k) {
  if (levels.empty()) throw DomainError("energy level list must not be empty");
  for (double e : levels) {
    if (!std::isfinite(e)) throw DomainError("energy levels must be finite");
  }
  detail::require_positive(temperature, "temperature");

  const double kT = k.k_B * temperature;
  const double e_min = *std::min_element(levels.begin(), levels.end());
  // Boltzmann weights relative to the lowest level; never overflow.
  std::vector<double> weights(levels.size());
  double z_shifted = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    weights[i] = std::exp(-(levels[i] - e_min) / kT);
    z_shifted += weights[i];
  }
  const double log_z_shifted = std::log(z_shifted);

  CanonicalEnsemble out{};
  out.log_partition = log_z_shifted - e_min / kT;
  out.partition_function = std::exp(out.log_partition);
  out.probabilities.resize(levels.size());
  double energy = 0.0;
  double excess = 0.0;  // <E> - e_min
  double gibbs = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double p = weights[i] / z_shifted;
    out.probabilities[i] = p;
    energy += p * levels[i];
    excess += p * (levels[i] - e_min);
    if (p > 0.0) gibbs -= p * (-(levels[i] - e_min) / kT - log_z_shifted);
  }
  out.energy = energy;
  out.entropy = k.k_B * gibbs;
  // E/T + k ln Z with the e_min/T terms cancelled analytically.
  out.entropy_thermodynamic = excess / temperature + k.k_B * log_z_shifted;
  return out;
}

double solve_temperature_for_energy(std::span<const double> levels, double target,
                                    const PhysicalConstants& k) {
  if (levels.empty()) throw DomainError("energy level list must not be empty");
  const auto [lo_it, hi_it] = std::minmax_element(levels.begin(), levels.end());
  const double e_min = *lo_it;
  const double e_max = *hi_it;
  double mean = 0.0;
  for (double e : levels) mean += e;
  mean /= static_cast<double>(levels.size());

  if (!(target > e_min && target < mean)) {
    std::ostringstream os;
    os.precision(17);
    os << "target energy " << target << " J is outside the achievable interval (" << e_min << ", "
       << mean << ") J";
    throw DomainError(os.str());
  }

  auto energy_at = [&](double t) { return canonical_ensemble(levels, t, k).energy; };

  const double scale = (e_max - e_min) / k.k_B;
  double t_lo = scale;
  double t_hi = scale;
  for (int i = 0; energy_at(t_lo) >= target; ++i) {
    if (i > 2000) throw DomainError("failed to bracket temperature from below");
    t_lo *= 0.5;
  }
  for (int i = 0; energy_at(t_hi) <= target; ++i) {
    if (i > 2000 || !std::isfinite(t_hi)) throw DomainError("failed to bracket temperature from above");
    t_hi *= 2.0;
  }

  for (int i = 0; i < 400 && t_hi / t_lo - 1.0 > 4.0 * std::numeric_limits<double>::epsilon(); ++i) {
    const double mid = std::sqrt(t_lo * t_hi);
    if (mid <= t_lo || mid >= t_hi) break;
    (energy_at(mid) < target ? t_lo : t_hi) = mid;
  }
  return std::abs(energy_at(t_lo) - target) <= std::abs(energy_at(t_hi) - target) ? t_lo : t_hi;
}

ModeSum mode_sum_entropy(double box_side, double temperature, int n_max,
                         const PhysicalConstants& k, unsigned threads) {
  detail::require_positive(box_side, "box side");
  detail::require_positive(temperature, "temperature");
  if (n_max < 1) throw DomainError("n_max must be at least 1");

  const double kT = k.k_B * temperature;
  // x = hbar omega / kT = step * |n|
  const double step = pi * k.hbar * k.c / (box_side * kT);

  // Modes are enumerated with a <= b <= c and weighted by the number of
  // distinct permutations. Shell a accumulates its own partial sums.
  struct Partial {
    double energy = 0.0;   // in units of kT
    double entropy = 0.0;  // in units of k_B
  };
  const int n = n_max;
  std::vector<Partial> shells(static_cast<std::size_t>(n));

  auto run_shell = [&](int a) {
    Partial p;
    const double a2 = static_cast<double>(a) * a;
    for (int b = a; b <= n; ++b) {
      const double ab2 = a2 + static_cast<double>(b) * b;
      for (int c = b; c <= n; ++c) {
        const double x = step * std::sqrt(ab2 + static_cast<double>(c) * c);
        const double q = std::exp(-x);
        const double mult = (a == b && b == c) ? 1.0 : (a == b || b == c) ? 3.0 : 6.0;
        const double occ = q / (1.0 - q);
        p.energy += mult * x * occ;
        p.entropy += mult * (x * occ - std::log1p(-q));
      }
    }
    shells[static_cast<std::size_t>(a - 1)] = p;
  };

  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
  if (workers <= 1) {
    for (int a = 1; a <= n; ++a) run_shell(a);
  } else {
    std::atomic<int> next{1};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int a = next++; a <= n; a = next++) run_shell(a);
      });
    }
  }

  ModeSum total{0.0, 0.0};
  for (const auto& s : shells) {
    total.energy += s.energy;
    total.entropy += s.entropy;
  }
  total.energy *= 2.0 * kT;
  total.entropy *= 2.0 * k.k_B;
  return total;
}

}  // namespace physlim
