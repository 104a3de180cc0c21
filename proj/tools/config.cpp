#include "config.hpp"

#include <fstream>
#include <set>

namespace physlim::cli {

using nlohmann::json;

namespace {

const std::set<std::string> kTopLevelKeys = {"constants", "species", "species_file",
                                              "format", "precision", "seed"};
const std::set<std::string> kConstantKeys = {"c", "hbar", "G", "k_B", "alpha"};
const std::set<std::string> kSpeciesKeys = {"name", "mass_kg", "particle_antiparticle_count",
                                            "polarizations", "statistics"};

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

double positive_number(const json& v, const std::string& what) {
  if (!v.is_number()) throw ConfigError(what + " must be a number");
  const double x = v.get<double>();
  if (!(x > 0.0) || !std::isfinite(x)) throw ConfigError(what + " must be positive");
  return x;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("'" + path.string() + "': " + e.what());
  }
}

ParticleSpecies parse_one_species(const json& s) {
  if (!s.is_object()) throw ConfigError("species entries must be objects");
  reject_unknown(s, kSpeciesKeys, "species entry");
  ParticleSpecies out;
  try {
    out.name = s.at("name").get<std::string>();
    out.mass = s.value("mass_kg", 0.0);
    out.particle_antiparticle_count = s.value("particle_antiparticle_count", 1);
    out.polarizations = s.value("polarizations", 1);
    const auto stats = s.value("statistics", std::string{"boson"});
    if (stats == "boson") {
      out.statistics = Statistics::boson;
    } else if (stats == "fermion") {
      out.statistics = Statistics::fermion;
    } else {
      throw ConfigError("species '" + out.name + "': statistics must be boson or fermion");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed species entry: ") + e.what());
  }
  return out;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw ConfigError("format must be text, json or csv (got '" + name + "')");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  return "text";
}

PhysicalConstants ConstantsOverrides::apply(PhysicalConstants base) const {
  if (c) base.c = *c;
  if (hbar) base.hbar = *hbar;
  if (G) base.G = *G;
  if (k_B) base.k_B = *k_B;
  if (alpha) base.alpha = *alpha;
  base.validate();
  return base;
}

SpeciesTable parse_species(const json& doc) {
  const json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("species")) throw ConfigError("species document needs a 'species' array");
    list = &doc.at("species");
  }
  if (!list->is_array()) throw ConfigError("species must be an array");
  std::vector<ParticleSpecies> species;
  for (const auto& s : *list) species.push_back(parse_one_species(s));
  try {
    return SpeciesTable(std::move(species));
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

SpeciesTable load_species_file(const std::filesystem::path& path) {
  return parse_species(read_json(path));
}

CliConfig parse_config(const json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  reject_unknown(doc, kTopLevelKeys, "config");

  CliConfig cfg;
  if (doc.contains("constants")) {
    const auto& k = doc.at("constants");
    if (!k.is_object()) throw ConfigError("'constants' must be an object");
    reject_unknown(k, kConstantKeys, "constants");
    auto field = [&](const char* key, std::optional<double>& slot) {
      if (k.contains(key)) slot = positive_number(k.at(key), std::string("constants.") + key);
    };
    field("c", cfg.constants.c);
    field("hbar", cfg.constants.hbar);
    field("G", cfg.constants.G);
    field("k_B", cfg.constants.k_B);
    field("alpha", cfg.constants.alpha);
  }
  if (doc.contains("species") && doc.contains("species_file")) {
    throw ConfigError("give either 'species' or 'species_file', not both");
  }
  if (doc.contains("species")) cfg.species = parse_species(doc.at("species"));
  if (doc.contains("species_file")) {
    const auto& f = doc.at("species_file");
    if (!f.is_string()) throw ConfigError("'species_file' must be a string");
    cfg.species_file = f.get<std::string>();
    std::filesystem::path p(*cfg.species_file);
    cfg.species = load_species_file(p.is_absolute() ? p : base_dir / p);
  }
  if (doc.contains("format")) {
    if (!doc.at("format").is_string()) throw ConfigError("'format' must be a string");
    cfg.format = parse_format(doc.at("format").get<std::string>());
  }
  if (doc.contains("precision")) {
    const auto& p = doc.at("precision");
    if (!p.is_number_integer() || p.get<int>() < 1 || p.get<int>() > 17) {
      throw ConfigError("'precision' must be an integer in [1, 17]");
    }
    cfg.precision = p.get<int>();
  }
  if (doc.contains("seed")) {
    const auto& s = doc.at("seed");
    if (!s.is_number_unsigned()) throw ConfigError("'seed' must be a nonnegative integer");
    cfg.seed = s.get<std::uint64_t>();
  }
  return cfg;
}

CliConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_json(path), path.parent_path());
}

json to_json(const ParticleSpecies& s) {
  return {{"name", s.name},
          {"mass_kg", s.mass},
          {"particle_antiparticle_count", s.particle_antiparticle_count},
          {"polarizations", s.polarizations},
          {"statistics", s.statistics == Statistics::fermion ? "fermion" : "boson"}};
}

json to_json(const CliConfig& cfg) {
  json doc = json::object();
  json k = json::object();
  if (cfg.constants.c) k["c"] = *cfg.constants.c;
  if (cfg.constants.hbar) k["hbar"] = *cfg.constants.hbar;
  if (cfg.constants.G) k["G"] = *cfg.constants.G;
  if (cfg.constants.k_B) k["k_B"] = *cfg.constants.k_B;
  if (cfg.constants.alpha) k["alpha"] = *cfg.constants.alpha;
  if (!k.empty()) doc["constants"] = k;
  if (cfg.species) {
    json list = json::array();
    for (const auto& s : cfg.species->species()) list.push_back(to_json(s));
    doc["species"] = list;
  }
  doc["format"] = to_string(cfg.format);
  doc["precision"] = cfg.precision;
  doc["seed"] = cfg.seed;
  return doc;
}

}  // namespace physlim::cli
