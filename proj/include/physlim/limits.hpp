#pragma once

#include "physlim/constants.hpp"
#include "physlim/parallelism_errors.hpp"
#include "physlim/radiation_memory.hpp"

namespace physlim {

/// Input to every limit computation: a mass in a volume, with all rest energy
/// available and the species that may carry it.
struct ComputerSpec {
  double mass;    // kg
  double volume;  // m^3
  SpeciesTable species;
  /// Environment temperature for the Landauer cost, K.
  double environment_temperature = 300.0;
};

struct LimitsReport {
  ComputerSpec spec;
  GeometrySpec geometry;
  double energy;          // m c^2
  double ops_per_second = 0.0;
  ThermalState memory{};
  double ops_per_bit_per_second = 0.0;
  ParallelismReport parallelism{};
  ErrorBudget errors{};
  double bit_flux_quoted = 0.0;  // kQuotedBitFluxFactor x errors.bit_flux_per_area
  double schwarzschild_radius = 0.0;
  bool black_hole_regime = false;  // geometry.half_size <= R_S
};

LimitsReport compute_limits(const ComputerSpec& spec, const PhysicalConstants& constants = {});

}  // namespace physlim
