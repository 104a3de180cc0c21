#pragma once

#include <span>
#include <vector>

#include "physlim/constants.hpp"

namespace physlim {

/// Average energy above the ground state available to a computer, in joules.
struct EnergyBudget {
  double total_energy = 0.0;
};

/// Energy (E_l) and energy spread (dE_l) assigned to each logic gate.
struct GateAllocation {
  std::vector<double> gate_energies;
  std::vector<double> gate_spreads;
};

/// Margolus-Levitin rate 2E/(pi hbar) for binary operations. A zero budget
/// gives zero rate. Operations that cycle through more than two states run at
/// half this rate; that case is not modelled.
double max_ops_per_second(const EnergyBudget& budget,
                          const PhysicalConstants& constants = {});

/// Minimal time pi hbar/(2E) to reach an orthogonal state. E must be > 0.
double min_op_time(double energy, const PhysicalConstants& constants = {});

/// Splits the budget over n_gates in proportion to weights. Each gate is
/// assigned a spread equal to its energy (the two-level gate construction,
/// where dE = E with the ground state at zero).
GateAllocation allocate(const EnergyBudget& budget, int n_gates,
                        std::span<const double> weights);

/// Per-gate rates 2E_l/(pi hbar).
std::vector<double> gate_rates(const GateAllocation& alloc,
                               const PhysicalConstants& constants = {});

/// Sum of gate_rates(alloc).
double total_rate(const GateAllocation& alloc,
                  const PhysicalConstants& constants = {});

struct SpreadSummary {
  double delta_E;  // sqrt(sum dE_l^2)
  double E;        // sum E_l
};

SpreadSummary total_spread(const GateAllocation& alloc);

}  // namespace physlim
