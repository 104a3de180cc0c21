#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "physlim/constants.hpp"

namespace physlim::scenarios {

/// How a derived value is judged against a quoted one.
enum class ToleranceKind {
  exact_constants,     // 0.5 % relative; values computed from exact constants
  three_sig_fig,       // 1 % relative
  order_of_magnitude,  // within a factor of 10 either way
  range,               // lo <= value <= hi
  absolute,            // |value - quoted| <= tolerance
};

struct PaperValue {
  double value = 0.0;
  ToleranceKind kind = ToleranceKind::three_sig_fig;
  double lo = 0.0;         // range only
  double hi = 0.0;         // range only
  double tolerance = 0.0;  // absolute only
};

enum class Verdict { match, mismatch };

using ParameterMap = std::map<std::string, double>;

struct ScenarioReport {
  std::string name;
  ParameterMap parameters;  // effective parameters after overrides
  std::map<std::string, double> derived;
  std::map<std::string, PaperValue> paper_values;
  std::map<std::string, Verdict> verdicts;
  std::vector<std::string> notes;
};

struct ComparisonSummary {
  std::map<std::string, Verdict> verdicts;
  bool pass = false;
};

struct ScenarioDefinition {
  std::string name;
  std::string description;
  ParameterMap defaults;
  std::map<std::string, std::string> units;
  std::function<ScenarioReport(const ParameterMap&, const PhysicalConstants&)> compute;
};

class UnknownScenarioError : public std::out_of_range {
 public:
  explicit UnknownScenarioError(const std::string& name);
};

const std::vector<ScenarioDefinition>& registry();
std::vector<std::string> scenario_names();
const ScenarioDefinition& find(const std::string& name);

/// Runs a registered scenario with parameter overrides and attaches verdicts.
/// Unknown names raise UnknownScenarioError; unknown or nonpositive parameters
/// raise DomainError.
ScenarioReport run(const std::string& name, const ParameterMap& overrides = {},
                   const PhysicalConstants& constants = {});

bool matches(double derived, const PaperValue& quoted);

ComparisonSummary compare_to_paper(const ScenarioReport& report);

std::string to_string(ToleranceKind kind);
std::string to_string(Verdict verdict);

}  // namespace physlim::scenarios
