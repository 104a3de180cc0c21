#pragma once

#include <iosfwd>
#include <vector>

#include "physlim/constants.hpp"
#include "physlim/radiation_memory.hpp"

namespace physlim {

/// Size of the computer. R is half the side of a cube of the given volume.
struct GeometrySpec {
  double half_size;     // m
  double surface_area;  // m^2
  double volume;        // m^3
};

/// Cube convention: side V^(1/3), R = side/2, area = 6 V^(2/3).
GeometrySpec cube_geometry(double volume);
GeometrySpec cube_geometry_from_half_size(double half_size);

struct ParallelismReport {
  double t_com;
  double t_flip;
  double ratio;
  double bekenstein_ratio;
  bool is_black_hole_regime;
};

struct ErrorBudget {
  double bit_flux_per_area;      // bits / (m^2 s), printed-formula value
  double throughput;             // W
  double max_error_rate;         // errors per operation
  double landauer_cost_per_bit;  // J
};

/// Ratio between the black-body bit flux figure quoted for the ultimate
/// laptop and the value of the formula it is quoted next to. Both numbers are
/// reported; nothing is reconciled.
inline constexpr double kQuotedBitFluxFactor = 6.0;

double t_com(double half_size, const PhysicalConstants& constants = {});
double t_flip(double energy, double entropy, const PhysicalConstants& constants = {});
double parallelization_ratio(double half_size, double energy, double entropy,
                             const PhysicalConstants& constants = {});
double bekenstein_ratio(double half_size, double energy, double entropy,
                        const PhysicalConstants& constants = {});

/// pi^2 k_B^3 T^3 / (60 ln2 hbar^3 c^2).
double blackbody_bit_flux(double temperature, const PhysicalConstants& constants = {});
double stefan_boltzmann_constant(const PhysicalConstants& constants = {});
double energy_throughput(double temperature, double area, const PhysicalConstants& constants = {});

/// 2 t_flip / t_com, the inverse of the degree of parallelization (times 2).
double max_error_rate(double energy, double entropy, double half_size,
                      const PhysicalConstants& constants = {});
double landauer_cost(double environment_temperature, const PhysicalConstants& constants = {});

/// Parallelism quantities for a machine of the given size, energy and
/// entropy; flags the black-hole regime when R <= 2Gm/c^2 with m = E/c^2.
ParallelismReport parallelism_report(double half_size, double energy, double entropy,
                                     const PhysicalConstants& constants = {});

ErrorBudget error_budget(const ThermalState& state, const GeometrySpec& geometry,
                         double environment_temperature,
                         const PhysicalConstants& constants = {});

struct SweepRow {
  double R;
  double T;
  double S;
  double bits;
  double ops_per_bit_s;
  double ratio;
  double bekenstein;
  bool black_hole;
};

/// Log-spaced radii from r_start down to r_end (both included), mass held
/// fixed. Rows are ordered by decreasing radius.
std::vector<SweepRow> compression_sweep(double mass, double r_start, double r_end, int points,
                                        const SpeciesTable& table = {},
                                        const PhysicalConstants& constants = {});

inline constexpr const char* kSweepCsvHeader =
    "R_m,T_K,S_JperK,bits,ops_per_bit_s,ratio,bekenstein,black_hole";

/// Header line plus one line per row; numbers in %.12e, flag as 0/1.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace physlim
