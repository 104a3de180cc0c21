#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "physlim/constants.hpp"
#include "physlim/radiation_memory.hpp"

namespace physlim::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(const std::string& name);
std::string to_string(OutputFormat format);

struct ConstantsOverrides {
  std::optional<double> c;
  std::optional<double> hbar;
  std::optional<double> G;
  std::optional<double> k_B;
  std::optional<double> alpha;

  PhysicalConstants apply(PhysicalConstants base = default_constants()) const;
  bool operator==(const ConstantsOverrides&) const = default;
};

/// Settings shared by every subcommand. Loaded from a JSON document:
///
///   {
///     "constants": {"c": 2.9979e8, "hbar": ..., "G": ..., "k_B": ..., "alpha": ...},
///     "species": [{"name": "photon", "mass_kg": 0, "particle_antiparticle_count": 1,
///                  "polarizations": 2, "statistics": "boson"}, ...],
///     "species_file": "species.json",
///     "format": "text" | "json" | "csv",
///     "precision": 6,
///     "seed": 0
///   }
///
/// All keys are optional. "species" and "species_file" are mutually exclusive;
/// a species file holds either the array or an object with a "species" key.
struct CliConfig {
  ConstantsOverrides constants;
  std::optional<SpeciesTable> species;
  std::optional<std::string> species_file;
  OutputFormat format = OutputFormat::text;
  std::uint64_t seed = 0;
  int precision = 6;

  PhysicalConstants physical_constants() const { return constants.apply(); }
  SpeciesTable species_table() const { return species.value_or(SpeciesTable{}); }
};

/// base_dir resolves a relative species_file.
CliConfig parse_config(const nlohmann::json& doc,
                       const std::filesystem::path& base_dir = std::filesystem::current_path());
CliConfig load_config(const std::filesystem::path& path);
SpeciesTable load_species_file(const std::filesystem::path& path);

SpeciesTable parse_species(const nlohmann::json& doc);
nlohmann::json to_json(const ParticleSpecies& species);
nlohmann::json to_json(const CliConfig& config);

}  // namespace physlim::cli
