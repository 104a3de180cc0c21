#include <doctest.h>

#include <cmath>
#include <numbers>

#include "physlim/blackhole.hpp"
#include "physlim/parallelism_errors.hpp"
#include "physlim/speed_limits.hpp"

using namespace physlim;
using std::numbers::ln2;
using std::numbers::pi;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
const PhysicalConstants k{};
}  // namespace

TEST_CASE("one-kilogram black hole") {
  const auto r = blackhole_report(1.0, kDefaultPageC, k);
  CHECK(rel(r.schwarzschild_radius, 1.485e-27) < 5e-3);
  CHECK(rel(r.schwarzschild_radius, 1.484967e-27) < 1e-6);
  CHECK(rel(r.bits, 3.827e16) < 5e-3);
  CHECK(rel(r.bits, 3.82685e16) < 1e-5);
  CHECK(rel(r.ratio, ln2 / pi) < 1e-12);
  CHECK(rel(r.bekenstein_ratio, 1.0 / (2.0 * pi)) < 1e-12);
  CHECK(rel(r.hawking_temperature, 1.2272e23) < 1e-4);
  CHECK(rel(r.t_flip, 7.053e-35) < 1e-3);
  CHECK(rel(r.lifetime, 1.74263e-19) < 1e-5);
  CHECK(std::log10(r.lifetime) == doctest::Approx(-19.0).epsilon(0.06));
  CHECK(rel(r.lifetime_ops, 9.455e31) < 1e-3);
  CHECK(r.page_C == kDefaultPageC);
  // Same energy, same rate as the ordinary laptop.
  CHECK(rel(r.ops_per_second, max_ops_per_second({k.c * k.c}, k)) < 1e-15);
  CHECK(rel(r.bits / r.t_flip, r.ops_per_second) < 1e-12);
}

TEST_CASE("Planck-mass identities") {
  const auto p = planck_scales(k);
  CHECK(rel(schwarzschild_radius(p.mass, k), 2.0 * p.length) < 1e-12);
  for (double m : {1e-5, 1.0, 1e30}) {
    CHECK(rel(bh_bits(m, k), 4.0 * pi * m * m / (ln2 * p.mass * p.mass)) < 1e-12);
  }
}

TEST_CASE("thermodynamic consistency across masses") {
  for (double lm = -6.0; lm <= 36.0; lm += 1.5) {
    const double m = std::pow(10.0, lm);
    const double t = hawking_temperature(m, k);
    const double s = bh_entropy(m, k);
    // Integrating dE = T dS with T ~ 1/m and S ~ m^2 gives T S = E/2.
    CHECK(rel(t * s, m * k.c * k.c / 2.0) < 1e-12);
    const auto r = blackhole_report(m, kDefaultPageC, k);
    CHECK(rel(r.energy_per_bit, 2.0 * ln2 * k.k_B * t) < 1e-12);
    CHECK(rel(r.bekenstein_ratio, 1.0 / (2.0 * pi)) < 1e-12);
    CHECK(rel(r.ratio, ln2 / pi) < 1e-12);
    CHECK(rel(r.t_com, pi * r.schwarzschild_radius / k.c) < 1e-12);
    // 1/T = dS/dE by central difference in mass.
    const double h = m * 1e-5;
    const double ds = (bh_entropy(m + h, k) - bh_entropy(m - h, k)) / (2.0 * h * k.c * k.c);
    CHECK(rel(1.0 / ds, t) < 1e-8);
  }
}

TEST_CASE("timescales") {
  const auto ts = bh_timescales(2.0, k);
  const double r_s = schwarzschild_radius(2.0, k);
  CHECK(rel(ts.t_flip, pi * pi * r_s / (k.c * ln2)) < 1e-15);
  CHECK(rel(ts.t_com, pi * r_s / k.c) < 1e-15);
  // Same t_flip as the radiation-gas formula evaluated with the horizon entropy.
  CHECK(rel(ts.t_flip, t_flip(2.0 * k.c * k.c, bh_entropy(2.0, k), k)) < 1e-12);
}

TEST_CASE("Page lifetime") {
  CHECK(rel(page_lifetime(2.0, kDefaultPageC, k), 8.0 * page_lifetime(1.0, kDefaultPageC, k)) < 1e-12);
  CHECK(rel(page_lifetime(1.0, 1e-3, k), 10.0 * page_lifetime(1.0, 1e-2, k)) < 1e-12);
  CHECK(rel(lifetime_ops(1.0, 1e-3, k), 9.455e32) < 1e-3);
  CHECK_NOTHROW(page_lifetime(1.0, kPageCMin, k));
  CHECK_NOTHROW(page_lifetime(1.0, kPageCMax, k));
  CHECK_THROWS_AS(page_lifetime(1.0, 0.5 * kPageCMin, k), DomainError);
  CHECK_THROWS_AS(page_lifetime(1.0, 2.0, k), DomainError);
  CHECK_THROWS_AS(blackhole_report(1.0, 0.0, k), DomainError);
  CHECK_THROWS_AS(blackhole_report(-1.0, kDefaultPageC, k), DomainError);
}
