#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "physlim/blackhole.hpp"
#include "physlim/limits.hpp"
#include "physlim/parallelism_errors.hpp"
#include "physlim/qdyn.hpp"
#include "physlim/scenarios.hpp"

namespace physlim::cli {

/// Serializes a JSON tree with every floating-point number written as
/// %.12e (13 significant digits). Non-finite numbers become null.
std::string dump_scientific(const nlohmann::ordered_json& doc, int indent = 2);

/// %.{precision}g
std::string format_number(double value, int precision);

struct QVerifySummary {
  int trials;
  int max_dim;
  std::uint64_t seed;
  qdyn::EnsembleSummary ensemble;
  // NOT gate built from a two-level Hamiltonian with E1 = 1 (hbar = 1).
  qdyn::OrthogonalizationResult not_gate;
  double not_relative_error;  // |t_orth - pi/E1| / (pi/E1)
  bool not_attains_bound;
  qdyn::BooleanEmbeddingReport toffoli;
  bool toffoli_hamiltonian_ok;  // exp(-iH dt) reproduces Toffoli on all basis states

  bool passed() const;
};

QVerifySummary run_qverify(int trials, int max_dim, std::uint64_t seed);

nlohmann::ordered_json limits_json(const LimitsReport& report, const PhysicalConstants& constants);
nlohmann::ordered_json blackhole_json(const BlackHoleReport& report);
nlohmann::ordered_json scenario_json(const scenarios::ScenarioReport& report,
                             const scenarios::ComparisonSummary& summary);
nlohmann::ordered_json constants_json(const PhysicalConstants& constants);
nlohmann::ordered_json qverify_json(const QVerifySummary& summary);

void render_limits(std::ostream& out, const LimitsReport& report, const PhysicalConstants& constants,
                   OutputFormat format, int precision);
void render_blackhole(std::ostream& out, const BlackHoleReport& report, OutputFormat format,
                      int precision);
void render_sweep(std::ostream& out, const std::vector<SweepRow>& rows, OutputFormat format);
void render_scenario(std::ostream& out, const scenarios::ScenarioReport& report,
                     const scenarios::ComparisonSummary& summary, OutputFormat format, int precision);
void render_constants(std::ostream& out, const PhysicalConstants& constants, OutputFormat format,
                      int precision);
void render_qverify(std::ostream& out, const QVerifySummary& summary, OutputFormat format,
                    int precision);

}  // namespace physlim::cli
