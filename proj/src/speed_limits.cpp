#include "physlim/speed_limits.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace physlim {

using std::numbers::pi;

double max_ops_per_second(const EnergyBudget& budget, const PhysicalConstants& k) {
  if (!(budget.total_energy >= 0.0) || !std::isfinite(budget.total_energy)) {
    throw DomainError("energy budget must be nonnegative and finite");
  }
  return 2.0 * budget.total_energy / (pi * k.hbar);
}

double min_op_time(double energy, const PhysicalConstants& k) {
  detail::require_positive(energy, "average energy");
  return pi * k.hbar / (2.0 * energy);
}

GateAllocation allocate(const EnergyBudget& budget, int n_gates,
                        std::span<const double> weights) {
  if (n_gates < 1) throw DomainError("n_gates must be at least 1");
  if (weights.size() != static_cast<std::size_t>(n_gates)) {
    throw DomainError("weights must have one entry per gate");
  }
  if (!(budget.total_energy >= 0.0)) throw DomainError("energy budget must be nonnegative");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("weights must be nonnegative");
    sum += w;
  }
  if (!(sum > 0.0)) throw DomainError("weights must not all be zero");

  GateAllocation alloc;
  alloc.gate_energies.reserve(weights.size());
  for (double w : weights) alloc.gate_energies.push_back(budget.total_energy * (w / sum));
  alloc.gate_spreads = alloc.gate_energies;
  return alloc;
}

std::vector<double> gate_rates(const GateAllocation& alloc, const PhysicalConstants& k) {
  std::vector<double> rates;
  rates.reserve(alloc.gate_energies.size());
  for (double e : alloc.gate_energies) rates.push_back(max_ops_per_second({e}, k));
  return rates;
}

double total_rate(const GateAllocation& alloc, const PhysicalConstants& k) {
  const auto rates = gate_rates(alloc, k);
  return std::accumulate(rates.begin(), rates.end(), 0.0);
}

SpreadSummary total_spread(const GateAllocation& alloc) {
  if (alloc.gate_energies.size() != alloc.gate_spreads.size()) {
    throw DomainError("gate energy and spread lists differ in length");
  }
  double sq = 0.0;
  for (double s : alloc.gate_spreads) sq += s * s;
  return {std::sqrt(sq),
          std::accumulate(alloc.gate_energies.begin(), alloc.gate_energies.end(), 0.0)};
}

}  // namespace physlim
