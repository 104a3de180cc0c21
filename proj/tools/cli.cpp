#include "cli.hpp"

#include <cmath>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "config.hpp"
#include "physlim/blackhole.hpp"
#include "physlim/limits.hpp"
#include "physlim/parallelism_errors.hpp"
#include "physlim/scenarios.hpp"
#include "render.hpp"

namespace physlim::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_positive(double v, const std::string& flag) {
  if (!(v > 0.0) || !std::isfinite(v)) throw UsageError(flag + " must be positive");
}

double parse_radius(const std::string& text, double mass, const PhysicalConstants& k) {
  if (text == "rs" || text == "schwarzschild") return schwarzschild_radius(mass, k);
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw UsageError("bad radius '" + text + "'");
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("bad radius '" + text + "' (number or 'rs')");
  }
}

scenarios::ParameterMap parse_overrides(const std::vector<std::string>& sets) {
  scenarios::ParameterMap out;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--set expects key=value, got '" + s + "'");
    const std::string key = s.substr(0, eq);
    const std::string val = s.substr(eq + 1);
    try {
      std::size_t used = 0;
      out[key] = std::stod(val, &used);
      if (used != val.size()) throw UsageError("--set " + key + ": not a number");
    } catch (const std::logic_error&) {
      throw UsageError("--set " + key + ": not a number");
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Physical limits of computation: speed, memory, parallelism and black-hole bounds",
               "physlim"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "physlim 0.1.0");

  std::string config_path;
  std::optional<std::string> format_flag;
  std::optional<int> precision_flag;
  std::string species_path;
  app.add_option("--config", config_path, "JSON config (constants, species, defaults)");
  app.add_option("--format", format_flag, "Output format: text, json or csv");
  app.add_option("--precision", precision_flag, "Significant digits in text output")
      ->check(CLI::Range(1, 17));
  app.add_option("--species", species_path, "JSON species table (overrides the config)");

  double mass = 0.0;
  double volume_l = 0.0;
  double env_t = 300.0;
  auto* limits = app.add_subcommand("limits", "Speed, memory and parallelism limits of a mass in a volume");
  limits->add_option("--mass-kg", mass, "Mass in kg")->required();
  limits->add_option("--volume-l", volume_l, "Volume in liters")->required();
  limits->add_option("--env-temperature-k", env_t, "Environment temperature for the Landauer cost")
      ->capture_default_str();

  double page_c = kDefaultPageC;
  auto* bh = app.add_subcommand("blackhole", "The same mass compressed to its Schwarzschild radius");
  bh->add_option("--mass-kg", mass, "Mass in kg")->required();
  bh->add_option("--page-c", page_c, "Page evaporation constant C in [1e-4, 1]")->capture_default_str();

  std::string r_start = "0.05";
  std::string r_end = "rs";
  int points = 50;
  auto* sweep = app.add_subcommand("sweep", "Compression sweep at fixed mass, CSV rows");
  sweep->add_option("--mass-kg", mass, "Mass in kg")->required();
  sweep->add_option("--r-start", r_start, "Initial half size R in m")->capture_default_str();
  sweep->add_option("--r-end", r_end, "Final half size in m, or 'rs' for the Schwarzschild radius")
      ->capture_default_str();
  sweep->add_option("--points", points, "Number of log-spaced radii")->capture_default_str();

  int trials = 500;
  int max_dim = 8;
  std::optional<std::uint64_t> seed_flag;
  auto* qv = app.add_subcommand("qverify", "Check the quantum speed limit on random small systems");
  qv->add_option("--trials", trials, "Number of random trials")->capture_default_str();
  qv->add_option("--max-dim", max_dim, "Largest Hilbert-space dimension (2..8)")->capture_default_str();
  qv->add_option("--seed", seed_flag, "Ensemble seed (default from config, else 0)");

  std::string scenario_name;
  std::vector<std::string> sets;
  auto* sc = app.add_subcommand("scenario", "Reproduce a worked example and compare with quoted values");
  sc->add_option("name", scenario_name, "Scenario name")->required();
  sc->add_option("--set", sets, "Parameter override key=value (repeatable)");

  auto* consts = app.add_subcommand("constants", "Print the active constants and Planck scales");

  for (auto* sub : {limits, bh, sweep, qv, sc, consts}) sub->fallthrough();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("physlim");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    CliConfig cfg = config_path.empty() ? CliConfig{} : load_config(config_path);
    if (format_flag) cfg.format = parse_format(*format_flag);
    if (precision_flag) cfg.precision = *precision_flag;
    if (!species_path.empty()) cfg.species = load_species_file(species_path);
    if (seed_flag) cfg.seed = *seed_flag;
    const auto k = cfg.physical_constants();

    if (*limits) {
      require_positive(mass, "--mass-kg");
      require_positive(volume_l, "--volume-l");
      require_positive(env_t, "--env-temperature-k");
      ComputerSpec spec{mass, volume_l * units::kLiter, cfg.species_table(), env_t};
      render_limits(out, compute_limits(spec, k), k, cfg.format, cfg.precision);
      return kExitOk;
    }
    if (*bh) {
      require_positive(mass, "--mass-kg");
      render_blackhole(out, blackhole_report(mass, page_c, k), cfg.format, cfg.precision);
      return kExitOk;
    }
    if (*sweep) {
      require_positive(mass, "--mass-kg");
      const auto rows = compression_sweep(mass, parse_radius(r_start, mass, k),
                                          parse_radius(r_end, mass, k), points, cfg.species_table(), k);
      render_sweep(out, rows, cfg.format);
      return kExitOk;
    }
    if (*qv) {
      if (trials < 1) throw UsageError("--trials must be at least 1");
      if (max_dim < 2 || max_dim > 8) throw UsageError("--max-dim must be in [2, 8]");
      const auto summary = run_qverify(trials, max_dim, cfg.seed);
      render_qverify(out, summary, cfg.format, cfg.precision);
      return summary.passed() ? kExitOk : kExitFailure;
    }
    if (*sc) {
      const auto report = scenarios::run(scenario_name, parse_overrides(sets), k);
      const auto summary = scenarios::compare_to_paper(report);
      render_scenario(out, report, summary, cfg.format, cfg.precision);
      return summary.pass ? kExitOk : kExitFailure;
    }
    if (*consts) {
      render_constants(out, k, cfg.format, cfg.precision);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const scenarios::UnknownScenarioError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SpeciesInclusionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace physlim::cli
