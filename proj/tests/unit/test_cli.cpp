#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "config.hpp"

using physlim::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "physlim_cli_test";
  std::filesystem::create_directories(dir);
  const auto p = dir / name;
  std::ofstream(p) << content;
  return p;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("limits as json") {
  const auto r = call({"--format", "json", "limits", "--mass-kg", "1", "--volume-l", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  const auto doc = json::parse(r.out);
  for (const char* section : {"input", "speed", "memory", "parallelism", "flags"}) CHECK(doc.contains(section));
  CHECK(rel(doc["speed"]["ops_per_second"].get<double>(), 5.4258e50) < 5e-3);
  CHECK(rel(doc["memory"]["temperature_K"].get<double>(), 5.87e8) < 1e-2);
  CHECK(rel(doc["memory"]["bits"].get<double>(), 2.13e31) < 1e-2);
  CHECK(rel(doc["parallelism"]["bit_flux_paper"].get<double>(),
            6.0 * doc["parallelism"]["bit_flux_formula"].get<double>()) < 1e-12);
  CHECK(doc["flags"]["black_hole_regime"] == false);
  CHECK(r.out.find("e+50") != std::string::npos);
}

TEST_CASE("limits text and csv") {
  const auto text = call({"limits", "--mass-kg", "1", "--volume-l", "1"});
  CHECK(text.code == 0);
  CHECK(text.out.find("speed.ops_per_second") != std::string::npos);
  const auto csv = call({"--format", "csv", "limits", "--mass-kg", "1", "--volume-l", "1"});
  CHECK(csv.code == 0);
  CHECK(lines(csv.out).front() == "quantity,value");
}

TEST_CASE("usage errors exit 2 with diagnostics on stderr") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"limits", "--mass-kg", "-1", "--volume-l", "1"},
           {"limits", "--mass-kg", "1"},
           {"limits", "--mass-kg", "abc", "--volume-l", "1"},
           {},
           {"frobnicate"},
           {"--format", "xml", "constants"},
           {"blackhole", "--mass-kg", "1", "--page-c", "5"},
           {"sweep", "--mass-kg", "1", "--r-end", "bogus"},
           {"sweep", "--mass-kg", "1", "--points", "1"},
           {"qverify", "--max-dim", "9"},
           {"scenario", "nosuch"},
           {"scenario", "heavy_ion", "--set", "nosuch=1"},
           {"scenario", "heavy_ion", "--set", "gamma"},
           {"--config", "/nonexistent/physlim.json", "constants"},
       }) {
    CAPTURE(args.empty() ? std::string("<none>") : args.front());
    const auto r = call(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
  CHECK(call({"scenario", "nosuch"}).err.find("ultimate_laptop") != std::string::npos);
}

TEST_CASE("help and version exit 0") {
  const auto h = call({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("qverify") != std::string::npos);
  CHECK(call({"--version"}).code == 0);
}

TEST_CASE("blackhole") {
  const auto a = json::parse(call({"--format", "json", "blackhole", "--mass-kg", "1"}).out);
  const auto b = json::parse(call({"--format", "json", "blackhole", "--mass-kg", "1", "--page-c", "1e-3"}).out);
  CHECK(rel(a["schwarzschild_radius_m"].get<double>(), 1.485e-27) < 5e-3);
  CHECK(rel(b["lifetime_s"].get<double>(), 10.0 * a["lifetime_s"].get<double>()) < 1e-12);
}

TEST_CASE("sweep") {
  const auto r = call({"sweep", "--mass-kg", "1", "--points", "2"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "R_m,T_K,S_JperK,bits,ops_per_bit_s,ratio,bekenstein,black_hole");
  CHECK(rows[1].back() == '0');
  CHECK(rows[2].back() == '1');

  const auto doc = json::parse(call({"--format", "json", "sweep", "--mass-kg", "1", "--points", "20"}).out);
  REQUIRE(doc.size() == 20);
  for (std::size_t i = 1; i < doc.size(); ++i) {
    CHECK(doc[i]["ratio"].get<double>() < doc[i - 1]["ratio"].get<double>());
  }
  CHECK(doc.back()["black_hole"] == true);
  // A numeric end just above R_S is not flagged.
  const auto above = lines(call({"sweep", "--mass-kg", "1", "--points", "2", "--r-end", "1.485e-27"}).out);
  CHECK(above.back().back() == '0');
}

TEST_CASE("qverify is deterministic") {
  const auto a = call({"--format", "json", "qverify", "--trials", "40", "--seed", "7"});
  const auto b = call({"--format", "json", "qverify", "--trials", "40", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = json::parse(a.out);
  CHECK(doc["violations"] == 0);
  CHECK(doc["pass"] == true);
  CHECK(doc["toffoli"]["hamiltonian"] == true);
}

TEST_CASE("scenario") {
  const auto def = call({"--format", "json", "scenario", "heavy_ion"});
  const auto set = call({"--format", "json", "scenario", "heavy_ion", "--set", "gamma=100"});
  CHECK(def.code == 0);
  CHECK(def.out == set.out);
  CHECK(json::parse(def.out)["pass"] == true);
  const auto bad = call({"scenario", "ultimate_laptop", "--set", "mass_kg=2"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("mismatch") != std::string::npos);
}

TEST_CASE("config file") {
  const auto species = write_temp("species.json", R"({"species": [
      {"name": "photon", "mass_kg": 0, "particle_antiparticle_count": 1, "polarizations": 2, "statistics": "boson"},
      {"name": "light", "mass_kg": 1e-40, "particle_antiparticle_count": 2, "polarizations": 2, "statistics": "fermion"}]})");
  const auto cfg = write_temp("config.json", R"({"format": "json", "species_file": "species.json",
                                                  "constants": {"G": 6.674e-11}, "seed": 3})");
  const auto r = call({"--config", cfg.string(), "limits", "--mass-kg", "1", "--volume-l", "1"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["memory"]["r_effective"].get<double>() == 5.5);
  CHECK(doc["input"]["constants"]["G"].get<double>() == 6.674e-11);

  // The flag wins over the config.
  CHECK(lines(call({"--config", cfg.string(), "--format", "csv", "constants"}).out).front() == "quantity,value");

  const auto unknown = write_temp("bad.json", R"({"colour": "red"})");
  CHECK(call({"--config", unknown.string(), "constants"}).code == 2);
  const auto negative = write_temp("neg.json", R"({"constants": {"c": -1}})");
  CHECK(call({"--config", negative.string(), "constants"}).code == 2);
  const auto malformed = write_temp("mal.json", "{not json");
  CHECK(call({"--config", malformed.string(), "constants"}).code == 2);
  const auto no_photon = write_temp("np.json", R"([{"name": "x", "mass_kg": 1e-30}])");
  CHECK(call({"--species", no_photon.string(), "limits", "--mass-kg", "1", "--volume-l", "1"}).code == 2);
}

TEST_CASE("config round trip") {
  using namespace physlim::cli;
  CliConfig c;
  c.constants.hbar = 1.05e-34;
  c.species = physlim::SpeciesTable({physlim::photon(), {"e", 9.1e-31, 2, 2, physlim::Statistics::fermion}});
  c.format = OutputFormat::csv;
  c.seed = 12;
  c.precision = 9;
  const auto back = parse_config(to_json(c));
  CHECK(back.constants == c.constants);
  CHECK(back.format == c.format);
  CHECK(back.seed == 12);
  CHECK(back.precision == 9);
  REQUIRE(back.species);
  CHECK(back.species->size() == 2);
  CHECK(to_json(back) == to_json(c));
}
