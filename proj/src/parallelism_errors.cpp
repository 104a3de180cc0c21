#include "physlim/parallelism_errors.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "physlim/blackhole.hpp"

namespace physlim {

using std::numbers::ln2;
using std::numbers::pi;

GeometrySpec cube_geometry(double volume) {
  detail::require_positive(volume, "volume");
  const double side = std::cbrt(volume);
  return {side / 2.0, 6.0 * side * side, volume};
}

GeometrySpec cube_geometry_from_half_size(double half_size) {
  detail::require_positive(half_size, "half size R");
  const double side = 2.0 * half_size;
  return {half_size, 6.0 * side * side, side * side * side};
}

double t_com(double half_size, const PhysicalConstants& k) {
  detail::require_positive(half_size, "half size R");
  return 2.0 * half_size / k.c;
}

double t_flip(double energy, double entropy, const PhysicalConstants& k) {
  detail::require_positive(energy, "energy");
  detail::require_positive(entropy, "entropy");
  return pi * k.hbar * entropy / (k.k_B * 2.0 * ln2 * energy);
}

double parallelization_ratio(double half_size, double energy, double entropy,
                             const PhysicalConstants& k) {
  detail::require_positive(half_size, "half size R");
  detail::require_positive(energy, "energy");
  detail::require_positive(entropy, "entropy");
  return k.k_B * 4.0 * ln2 * half_size * energy / (pi * k.hbar * k.c * entropy);
}

double bekenstein_ratio(double half_size, double energy, double entropy, const PhysicalConstants& k) {
  detail::require_positive(half_size, "half size R");
  detail::require_positive(energy, "energy");
  detail::require_positive(entropy, "entropy");
  return k.k_B * half_size * energy / (k.hbar * k.c * entropy);
}

double blackbody_bit_flux(double temperature, const PhysicalConstants& k) {
  detail::require_positive(temperature, "temperature");
  const double kT = k.k_B * temperature;
  return pi * pi * kT * kT * kT / (60.0 * ln2 * std::pow(k.hbar, 3) * k.c * k.c);
}

double stefan_boltzmann_constant(const PhysicalConstants& k) {
  return pi * pi * std::pow(k.k_B, 4) / (60.0 * std::pow(k.hbar, 3) * k.c * k.c);
}

double energy_throughput(double temperature, double area, const PhysicalConstants& k) {
  detail::require_positive(temperature, "temperature");
  detail::require_positive(area, "area");
  return stefan_boltzmann_constant(k) * std::pow(temperature, 4) * area;
}

double max_error_rate(double energy, double entropy, double half_size, const PhysicalConstants& k) {
  return 2.0 * t_flip(energy, entropy, k) / t_com(half_size, k);
}

double landauer_cost(double environment_temperature, const PhysicalConstants& k) {
  detail::require_positive(environment_temperature, "environment temperature");
  return k.k_B * environment_temperature * ln2;
}

ParallelismReport parallelism_report(double half_size, double energy, double entropy,
                                     const PhysicalConstants& k) {
  ParallelismReport rep{};
  rep.t_com = t_com(half_size, k);
  rep.t_flip = t_flip(energy, entropy, k);
  rep.ratio = rep.t_com / rep.t_flip;
  rep.bekenstein_ratio = bekenstein_ratio(half_size, energy, entropy, k);
  rep.is_black_hole_regime = half_size <= schwarzschild_radius(energy / (k.c * k.c), k);
  return rep;
}

ErrorBudget error_budget(const ThermalState& state, const GeometrySpec& geometry,
                         double environment_temperature, const PhysicalConstants& k) {
  return ErrorBudget{
      blackbody_bit_flux(state.temperature, k),
      energy_throughput(state.temperature, geometry.surface_area, k),
      max_error_rate(state.energy, state.entropy, geometry.half_size, k),
      landauer_cost(environment_temperature, k),
  };
}

std::vector<SweepRow> compression_sweep(double mass, double r_start, double r_end, int points,
                                        const SpeciesTable& table, const PhysicalConstants& k) {
  detail::require_positive(mass, "mass");
  detail::require_positive(r_end, "R_end");
  if (!(r_start > r_end) || !std::isfinite(r_start)) {
    throw DomainError("sweep requires R_start > R_end > 0");
  }
  if (points < 2) throw DomainError("sweep requires at least 2 points");

  const double energy = mass * k.c * k.c;
  const double r_s = schwarzschild_radius(mass, k);
  const double log_start = std::log(r_start);
  const double log_step = (std::log(r_end) - log_start) / (points - 1);

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    double R = std::exp(log_start + log_step * i);
    if (i == 0) R = r_start;
    if (i == points - 1) R = r_end;
    const auto geom = cube_geometry_from_half_size(R);
    const auto state = solve_thermal_state(energy, geom.volume, table, k);
    rows.push_back(SweepRow{
        R,
        state.temperature,
        state.entropy,
        state.bits,
        ops_per_bit_per_second(energy, state.entropy, k),
        parallelization_ratio(R, energy, state.entropy, k),
        bekenstein_ratio(R, energy, state.entropy, k),
        R <= r_s,
    });
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  char buf[512];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.12e,%.12e,%.12e,%.12e,%.12e,%.12e,%.12e,%d\n", r.R, r.T, r.S,
                  r.bits, r.ops_per_bit_s, r.ratio, r.bekenstein, r.black_hole ? 1 : 0);
    out << buf;
  }
}

}  // namespace physlim
