#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "physlim/constants.hpp"

namespace physlim {

enum class Statistics { boson, fermion };

struct ParticleSpecies {
  std::string name;
  double mass = 0.0;                    // kg
  int particle_antiparticle_count = 1;  // 1 or 2
  int polarizations = 1;
  Statistics statistics = Statistics::boson;

  void validate() const;
  bool operator==(const ParticleSpecies&) const = default;
};

/// Species weight r_l = count * polarizations * (1 boson, 7/8 fermion).
double effective_dof(const ParticleSpecies& species);

ParticleSpecies photon();

/// Validated, nonempty list of species that always contains the photon.
class SpeciesTable {
 public:
  /// Photon-only table (r = 2).
  SpeciesTable();
  explicit SpeciesTable(std::vector<ParticleSpecies> species);

  const std::vector<ParticleSpecies>& species() const { return species_; }
  std::size_t size() const { return species_.size(); }

 private:
  std::vector<ParticleSpecies> species_;
};

/// Radiation-dominated state of energy E in volume V at the self-consistent
/// temperature. Included species are treated as massless.
struct ThermalState {
  double temperature;         // K
  double energy;              // J
  double volume;              // m^3
  double entropy;             // J/K
  double bits;                // S / (k_B ln 2)
  double r_effective;         // sum of r_l over included species
  std::vector<std::string> included_species;
  double thermal_wavelength;  // 2 pi hbar c / (k_B T), m
};

/// Raised when species inclusion cycles instead of settling. Carries the last
/// two candidate sets.
class SpeciesInclusionError : public std::runtime_error {
 public:
  SpeciesInclusionError(std::vector<std::string> a, std::vector<std::string> b);
  const std::vector<std::string>& first() const { return first_; }
  const std::vector<std::string>& second() const { return second_; }

 private:
  std::vector<std::string> first_;
  std::vector<std::string> second_;
};

/// Temperature for energy E of massless radiation with weight r in volume V.
double radiation_temperature(double energy, double volume, double r,
                             const PhysicalConstants& constants = {});

/// Solves for the thermal state, iterating the species-inclusion rule
/// m < k_B T / (2 c^2) from the massless subset to a fixed point.
ThermalState solve_thermal_state(double energy, double volume,
                                 const SpeciesTable& table = {},
                                 const PhysicalConstants& constants = {});

/// 2 ln2 k_B E / (pi hbar S).
double ops_per_bit_per_second(double energy, double entropy,
                              const PhysicalConstants& constants = {});

/// (2 pi)^5 r / (90 ln 2).
double bits_per_cubic_thermal_wavelength(double r);

struct CanonicalEnsemble {
  double partition_function;      // may overflow to inf; see log_partition
  double log_partition;           // ln Z
  std::vector<double> probabilities;
  double energy;                  // J
  double entropy;                 // -k_B sum p ln p
  double entropy_thermodynamic;   // E/T + k_B ln Z
};

CanonicalEnsemble canonical_ensemble(std::span<const double> levels, double temperature,
                                     const PhysicalConstants& constants = {});

/// Inverts T -> E(T) by bracketing and bisection. The target must lie strictly
/// between min(levels) and the infinite-temperature mean.
double solve_temperature_for_energy(std::span<const double> levels, double target_energy,
                                    const PhysicalConstants& constants = {});

struct ModeSum {
  double energy;   // J
  double entropy;  // J/K
};

/// Direct sum over photon modes of a cubic box with side L, modes
/// n = (nx, ny, nz), 1 <= n_i <= n_max, omega = pi c |n| / L, two
/// polarizations. Shells are evaluated on worker threads and reduced in
/// index order, so the result does not depend on the thread count.
ModeSum mode_sum_entropy(double box_side, double temperature, int n_max,
                         const PhysicalConstants& constants = {},
                         unsigned threads = 0);

}  // namespace physlim
