#pragma once

#include <stdexcept>
#include <string>

namespace physlim {

/// Raised when an argument lies outside the domain of a physical formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Physical constants in SI units. Every computation takes these by value so
/// that callers can swap the default set for another (e.g. CODATA) one.
struct PhysicalConstants {
  double c = 2.9979e8;           // m/s
  double hbar = 1.0545e-34;      // J s
  double G = 6.673e-11;          // m^3 / (kg s^2)
  double k_B = 1.3805e-23;       // J/K
  double alpha = 1.0 / 137.036;  // fine structure constant

  /// Throws DomainError naming the first field that is not strictly positive
  /// and finite.
  void validate() const;

  friend bool operator==(const PhysicalConstants&, const PhysicalConstants&) = default;
};

struct PlanckScales {
  double length;  // m
  double time;    // s
  double mass;    // kg
};

PhysicalConstants default_constants();

PlanckScales planck_scales(const PhysicalConstants& constants);

// Input unit conversions. Everything past the parsing layer is SI.
namespace units {
inline constexpr double kLiter = 1e-3;                   // m^3
inline constexpr double kElectronVolt = 1.602176634e-19; // J (exact SI)
inline constexpr double kGeV = 1e9 * kElectronVolt;      // J
inline constexpr double kFermi = 1e-15;                  // m
inline constexpr double kJulianYear = 365.25 * 86400.0;  // s
}  // namespace units

namespace detail {
// Shared precondition helper: throws DomainError("<what> must be positive")
// unless value > 0 and finite.
void require_positive(double value, const std::string& what);
}  // namespace detail

}  // namespace physlim
