#include <doctest.h>

#include <cmath>

#include "physlim/constants.hpp"

using namespace physlim;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("default constants are the quoted values") {
  const auto k = default_constants();
  CHECK(k.c == 2.9979e8);
  CHECK(k.hbar == 1.0545e-34);
  CHECK(k.G == 6.673e-11);
  CHECK(k.k_B == 1.3805e-23);
  CHECK(rel(k.alpha * 137.036, 1.0) < 1e-6);
  CHECK_NOTHROW(k.validate());
}

TEST_CASE("planck scales") {
  const auto k = default_constants();
  const auto p = planck_scales(k);
  CHECK(rel(p.length, 1.616e-35) < 1e-3);
  CHECK(rel(p.time, 5.391e-44) < 1e-3);
  CHECK(rel(p.mass, 2.177e-8) < 1e-3);

  // l_P / t_P = c and m_P c^2 t_P = hbar
  CHECK(rel(p.length / p.time, k.c) < 1e-12);
  CHECK(rel(p.mass * k.c * k.c * p.time, k.hbar) < 1e-12);
}

TEST_CASE("planck scales follow injected constants") {
  PhysicalConstants k;
  k.c = 1.0;
  k.hbar = 1.0;
  k.G = 1.0;
  const auto p = planck_scales(k);
  CHECK(p.length == doctest::Approx(1.0));
  CHECK(p.time == doctest::Approx(1.0));
  CHECK(p.mass == doctest::Approx(1.0));
}

TEST_CASE("invalid constants are rejected") {
  PhysicalConstants k;
  k.G = 0.0;
  CHECK_THROWS_AS(k.validate(), DomainError);
  k = {};
  k.alpha = -1.0;
  CHECK_THROWS_AS(k.validate(), DomainError);
}
