#include "physlim/blackhole.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "physlim/parallelism_errors.hpp"
#include "physlim/speed_limits.hpp"

namespace physlim {

using std::numbers::ln2;
using std::numbers::pi;

namespace {

void require_page_c(double page_c) {
  if (!(page_c >= kPageCMin && page_c <= kPageCMax)) {
    std::ostringstream os;
    os << "Page constant C = " << page_c << " outside accepted range [" << kPageCMin << ", "
       << kPageCMax << "]";
    throw DomainError(os.str());
  }
}

}  // namespace

double schwarzschild_radius(double mass, const PhysicalConstants& k) {
  detail::require_positive(mass, "mass");
  return 2.0 * k.G * mass / (k.c * k.c);
}

double bh_bits(double mass, const PhysicalConstants& k) {
  detail::require_positive(mass, "mass");
  return 4.0 * pi * k.G * mass * mass / (ln2 * k.hbar * k.c);
}

double bh_entropy(double mass, const PhysicalConstants& k) {
  return k.k_B * ln2 * bh_bits(mass, k);
}

double hawking_temperature(double mass, const PhysicalConstants& k) {
  return k.hbar * k.c / (4.0 * pi * k.k_B * schwarzschild_radius(mass, k));
}

BlackHoleTimescales bh_timescales(double mass, const PhysicalConstants& k) {
  const double r_s = schwarzschild_radius(mass, k);
  const double flip = pi * pi * r_s / (k.c * ln2);
  const double com = pi * r_s / k.c;
  return {flip, com, com / flip};
}

double page_lifetime(double mass, double page_c, const PhysicalConstants& k) {
  detail::require_positive(mass, "mass");
  require_page_c(page_c);
  return k.G * k.G * mass * mass * mass / (3.0 * page_c * k.hbar * std::pow(k.c, 4));
}

double lifetime_ops(double mass, double page_c, const PhysicalConstants& k) {
  return max_ops_per_second({mass * k.c * k.c}, k) * page_lifetime(mass, page_c, k);
}

BlackHoleReport blackhole_report(double mass, double page_c, const PhysicalConstants& k) {
  detail::require_positive(mass, "mass");
  require_page_c(page_c);
  const double energy = mass * k.c * k.c;
  const auto times = bh_timescales(mass, k);

  BlackHoleReport rep{};
  rep.mass = mass;
  rep.schwarzschild_radius = schwarzschild_radius(mass, k);
  rep.hawking_temperature = hawking_temperature(mass, k);
  rep.bits = bh_bits(mass, k);
  rep.entropy = bh_entropy(mass, k);
  rep.energy_per_bit = energy / rep.bits;
  rep.ops_per_second = max_ops_per_second({energy}, k);
  rep.t_flip = times.t_flip;
  rep.t_com = times.t_com;
  rep.ratio = times.ratio;
  rep.bekenstein_ratio = bekenstein_ratio(rep.schwarzschild_radius, energy, rep.entropy, k);
  rep.lifetime = page_lifetime(mass, page_c, k);
  rep.lifetime_ops = lifetime_ops(mass, page_c, k);
  rep.page_C = page_c;
  return rep;
}

}  // namespace physlim
