#include "physlim/constants.hpp"

#include <cmath>

namespace physlim {

namespace detail {

void require_positive(double value, const std::string& what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(what + " must be positive and finite");
  }
}

}  // namespace detail

void PhysicalConstants::validate() const {
  detail::require_positive(c, "constant c");
  detail::require_positive(hbar, "constant hbar");
  detail::require_positive(G, "constant G");
  detail::require_positive(k_B, "constant k_B");
  detail::require_positive(alpha, "constant alpha");
}

PhysicalConstants default_constants() { return PhysicalConstants{}; }

PlanckScales planck_scales(const PhysicalConstants& k) {
  return PlanckScales{
      std::sqrt(k.hbar * k.G / (k.c * k.c * k.c)),
      std::sqrt(k.hbar * k.G / std::pow(k.c, 5)),
      std::sqrt(k.hbar * k.c / k.G),
  };
}

}  // namespace physlim
