#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "physlim/blackhole.hpp"
#include "physlim/parallelism_errors.hpp"
#include "physlim/radiation_memory.hpp"

using namespace physlim;
using std::numbers::ln2;
using std::numbers::pi;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
const PhysicalConstants k{};
const double kE = k.c * k.c;

ThermalState laptop() { return solve_thermal_state(kE, 1e-3, {}, k); }
}  // namespace

TEST_CASE("cube geometry") {
  const auto g = cube_geometry(1e-3);
  CHECK(rel(g.half_size, 0.05) < 1e-12);
  CHECK(rel(g.surface_area, 0.06) < 1e-12);
  const auto h = cube_geometry_from_half_size(0.05);
  CHECK(rel(h.volume, 1e-3) < 1e-12);
  CHECK_THROWS_AS(cube_geometry(0.0), DomainError);
  CHECK_THROWS_AS(cube_geometry_from_half_size(-1.0), DomainError);
}

TEST_CASE("laptop timescales") {
  const auto s = laptop();
  CHECK(rel(t_com(0.05, k), 1e-1 / k.c) < 1e-15);
  CHECK(rel(t_com(0.05, k), 3.33567e-10) < 1e-5);
  CHECK(rel(t_flip(kE, s.entropy, k), 3.9312e-20) < 1e-4);
  const double ratio = parallelization_ratio(0.05, kE, s.entropy, k);
  CHECK(rel(ratio, 8.4851e9) < 1e-4);
  CHECK(rel(ratio, t_com(0.05, k) / t_flip(kE, s.entropy, k)) < 1e-12);
  // The ratio equals t_com times the per-bit operation rate.
  CHECK(rel(ratio, t_com(0.05, k) * ops_per_bit_per_second(kE, s.entropy, k)) < 1e-12);
  CHECK(std::log10(ratio) == doctest::Approx(10.0).epsilon(0.1));
  CHECK(rel(bekenstein_ratio(0.05, kE, s.entropy, k), 9.614e9) < 1e-3);
}

TEST_CASE("ratio over Bekenstein ratio is 4 ln2 / pi") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 100; ++i) {
    const double r = std::pow(10.0, u(rng));
    const double e = std::pow(10.0, u(rng) + 15.0);
    const double s = std::pow(10.0, u(rng));
    CHECK(rel(parallelization_ratio(r, e, s, k) / bekenstein_ratio(r, e, s, k), 4.0 * ln2 / pi) < 1e-12);
    CHECK(rel(max_error_rate(e, s, r, k) * parallelization_ratio(r, e, s, k), 2.0) < 1e-12);
  }
}

TEST_CASE("Bekenstein ratio scaling in a compression") {
  // At fixed E, S ~ R^(3/4) so the ratio goes as R^(1/4).
  const double b1 = bekenstein_ratio(0.05, kE, laptop().entropy, k);
  const auto s2 = solve_thermal_state(kE, 1e-3 / 4096.0, {}, k);
  const double b2 = bekenstein_ratio(0.05 / 16.0, kE, s2.entropy, k);
  CHECK(rel(b1 / b2, 2.0) < 1e-9);
}

TEST_CASE("black-body flux and throughput") {
  const double sigma = stefan_boltzmann_constant(k);
  CHECK(rel(sigma, 5.66918e-8) < 1e-5);
  CHECK(rel(sigma, 5.67e-8) < 1e-3);
  const double t = laptop().temperature;
  CHECK(rel(blackbody_bit_flux(2.0 * t, k), 8.0 * blackbody_bit_flux(t, k)) < 1e-12);
  CHECK(rel(blackbody_bit_flux(t, k), 1.198979e42) < 1e-5);
  CHECK(rel(kQuotedBitFluxFactor * blackbody_bit_flux(t, k), 7.195e42) < 1e-2);
  // Bit flux times k T ln2 is the radiated power per area.
  CHECK(rel(blackbody_bit_flux(t, k) * k.k_B * ln2 * t, sigma * std::pow(t, 4)) < 1e-12);
  CHECK(rel(energy_throughput(t, 0.06, k), 4.04e26) < 1e-2);
  CHECK(rel(energy_throughput(t, 0.06, k), 4.0415e26) < 1e-4);
  CHECK_THROWS_AS(blackbody_bit_flux(0.0, k), DomainError);
  CHECK_THROWS_AS(energy_throughput(1.0, 0.0, k), DomainError);
}

TEST_CASE("error budget") {
  const auto s = laptop();
  const auto b = error_budget(s, cube_geometry(1e-3), 300.0, k);
  CHECK(rel(b.max_error_rate, 2.357e-10) < 1e-3);
  CHECK(std::log10(b.max_error_rate) == doctest::Approx(-10.0).epsilon(0.1));
  CHECK(rel(b.landauer_cost_per_bit, 2.8707e-21) < 1e-4);
  CHECK(rel(landauer_cost(300.0, k), k.k_B * 300.0 * ln2) < 1e-15);
  CHECK_THROWS_AS(landauer_cost(0.0, k), DomainError);
}

TEST_CASE("parallelism report flags the black-hole regime") {
  const double r_s = schwarzschild_radius(1.0, k);
  const auto s = laptop();
  CHECK_FALSE(parallelism_report(0.05, kE, s.entropy, k).is_black_hole_regime);
  CHECK(parallelism_report(r_s, kE, s.entropy, k).is_black_hole_regime);
  CHECK_FALSE(parallelism_report(r_s * (1 + 1e-9), kE, s.entropy, k).is_black_hole_regime);
}

TEST_CASE("compression sweep") {
  const double r_s = schwarzschild_radius(1.0, k);
  const auto rows = compression_sweep(1.0, 0.05, r_s, 50, {}, k);
  REQUIRE(rows.size() == 50);
  CHECK(rows.front().R == 0.05);
  CHECK(rows.back().R == r_s);
  CHECK(rows.back().black_hole);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    CHECK_FALSE(rows[i].black_hole);
    CHECK(rows[i + 1].R < rows[i].R);
    CHECK(rows[i + 1].ratio < rows[i].ratio);
    CHECK(rows[i + 1].bekenstein < rows[i].bekenstein);
    const double dlr = std::log(rows[i + 1].R / rows[i].R);
    // S ~ V^(1/4) ~ R^(3/4); ratio ~ R/S ~ R^(1/4).
    CHECK(std::log(rows[i + 1].S / rows[i].S) / dlr == doctest::Approx(0.75).epsilon(1e-6));
    CHECK(std::log(rows[i + 1].ratio / rows[i].ratio) / dlr == doctest::Approx(0.25).epsilon(1e-6));
  }
  // A radiation gas squeezed to R_S still respects the Bekenstein bound.
  CHECK(rows.back().bekenstein >= 1.0 / (2.0 * pi));

  const auto two = compression_sweep(1.0, 1.0, 0.5, 2, {}, k);
  CHECK(two.size() == 2);
  CHECK_THROWS_AS(compression_sweep(1.0, 0.5, 1.0, 10, {}, k), DomainError);
  CHECK_THROWS_AS(compression_sweep(1.0, 1.0, 0.5, 1, {}, k), DomainError);
  CHECK_THROWS_AS(compression_sweep(0.0, 1.0, 0.5, 2, {}, k), DomainError);
  CHECK_THROWS_AS(compression_sweep(1.0, 1.0, 0.0, 2, {}, k), DomainError);
}

TEST_CASE("sweep csv") {
  const auto rows = compression_sweep(1.0, 0.05, 0.01, 3, {}, k);
  std::ostringstream os;
  write_sweep_csv(os, rows);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == kSweepCsvHeader);
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    CHECK(std::count(line.begin(), line.end(), ',') == 7);
    CHECK(line.back() == '0');
  }
  CHECK(n == 3);
}
