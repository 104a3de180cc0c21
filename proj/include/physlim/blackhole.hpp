#pragma once

#include "physlim/constants.hpp"

namespace physlim {

/// Accepted range for the Page evaporation constant C.
inline constexpr double kPageCMin = 1e-4;
inline constexpr double kPageCMax = 1.0;
inline constexpr double kDefaultPageC = 1e-2;

/// A mass compressed to its Schwarzschild radius. t_com is the time to go
/// half way round the horizon; the report echoes the Page constant used.
struct BlackHoleReport {
  double mass;                  // kg
  double schwarzschild_radius;  // m
  double hawking_temperature;   // K
  double entropy;               // J/K
  double bits;
  double energy_per_bit;        // J
  double ops_per_second;
  double t_flip;                // s
  double t_com;                 // s
  double ratio;                 // t_com / t_flip = ln2/pi
  double bekenstein_ratio;      // 1/(2 pi)
  double lifetime;              // s
  double lifetime_ops;
  double page_C;
};

double schwarzschild_radius(double mass, const PhysicalConstants& constants = {});

/// 4 pi G m^2 / (ln2 hbar c): horizon area over 4 l_P^2, in bits.
double bh_bits(double mass, const PhysicalConstants& constants = {});

double bh_entropy(double mass, const PhysicalConstants& constants = {});

/// hbar c / (4 pi k_B R_S). Satisfies T S = m c^2 / 2.
double hawking_temperature(double mass, const PhysicalConstants& constants = {});

struct BlackHoleTimescales {
  double t_flip;  // pi^2 R_S / (c ln2)
  double t_com;   // pi R_S / c
  double ratio;
};

BlackHoleTimescales bh_timescales(double mass, const PhysicalConstants& constants = {});

/// G^2 m^3 / (3 C hbar c^4) at fixed initial mass; C in [1e-4, 1].
double page_lifetime(double mass, double page_c = kDefaultPageC,
                     const PhysicalConstants& constants = {});

/// Operations performed over the Page lifetime at the rate 2mc^2/(pi hbar).
double lifetime_ops(double mass, double page_c = kDefaultPageC,
                    const PhysicalConstants& constants = {});

BlackHoleReport blackhole_report(double mass, double page_c = kDefaultPageC,
                                 const PhysicalConstants& constants = {});

}  // namespace physlim
