#include "physlim/limits.hpp"

#include "physlim/blackhole.hpp"
#include "physlim/speed_limits.hpp"

namespace physlim {

LimitsReport compute_limits(const ComputerSpec& spec, const PhysicalConstants& k) {
  k.validate();
  detail::require_positive(spec.mass, "mass");
  detail::require_positive(spec.volume, "volume");

  LimitsReport rep{spec, cube_geometry(spec.volume), spec.mass * k.c * k.c};
  rep.ops_per_second = max_ops_per_second({rep.energy}, k);
  rep.memory = solve_thermal_state(rep.energy, spec.volume, spec.species, k);
  rep.ops_per_bit_per_second = ops_per_bit_per_second(rep.energy, rep.memory.entropy, k);
  rep.parallelism = parallelism_report(rep.geometry.half_size, rep.energy, rep.memory.entropy, k);
  rep.errors = error_budget(rep.memory, rep.geometry, spec.environment_temperature, k);
  rep.bit_flux_quoted = kQuotedBitFluxFactor * rep.errors.bit_flux_per_area;
  rep.schwarzschild_radius = schwarzschild_radius(spec.mass, k);
  rep.black_hole_regime = rep.parallelism.is_black_hole_regime;
  return rep;
}

}  // namespace physlim
