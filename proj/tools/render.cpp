#include "render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace physlim::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

void dump_into(std::string& out, const Json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad + Json(key).dump() + (indent > 0 ? ": " : ":");
        dump_into(out, value, indent, depth + 1);
      }
      out += nl + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) {
          out += ",";
          out += nl;
        }
        out += pad;
        dump_into(out, j[i], indent, depth + 1);
      }
      out += nl + close_pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? sci(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

// Flattens nested objects into dotted keys; arrays are joined with ';'.
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, Json>>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else {
    out.emplace_back(prefix, j);
  }
}

std::string scalar_text(const Json& v, int precision, bool full) {
  if (v.is_number_float()) return full ? sci(v.get<double>()) : format_number(v.get<double>(), precision);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + scalar_text(v[i], precision, full);
    return s;
  }
  return v.dump();
}

void render_flat(std::ostream& out, const Json& doc, OutputFormat format, int precision) {
  if (format == OutputFormat::json) {
    out << dump_scientific(doc) << '\n';
    return;
  }
  std::vector<std::pair<std::string, Json>> rows;
  flatten(doc, "", rows);
  if (format == OutputFormat::csv) {
    out << "quantity,value\n";
    for (const auto& [key, value] : rows) out << key << ',' << scalar_text(value, precision, true) << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, value] : rows) width = std::max(width, key.size());
  for (const auto& [key, value] : rows) {
    out << key << std::string(width - key.size() + 2, ' ') << scalar_text(value, precision, false) << '\n';
  }
}

Json orthogonalization_json(const qdyn::OrthogonalizationResult& r) {
  Json j{{"found", r.found}};
  j["t_orth"] = r.found ? Json(r.t_orth) : Json(nullptr);
  j["ml_bound"] = r.ml_bound;
  j["ab_bound"] = r.ab_bound;
  j["mean_energy"] = r.mean_energy;
  j["energy_spread"] = r.energy_spread;
  return j;
}

}  // namespace

std::string dump_scientific(const Json& doc, int indent) {
  std::string out;
  dump_into(out, doc, indent, 0);
  return out;
}

std::string format_number(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, value);
  return buf;
}

bool QVerifySummary::passed() const {
  return ensemble.violations == 0 && not_attains_bound && toffoli.all() && toffoli_hamiltonian_ok;
}

QVerifySummary run_qverify(int trials, int max_dim, std::uint64_t seed) {
  QVerifySummary s{};
  s.trials = trials;
  s.max_dim = max_dim;
  s.seed = seed;
  s.ensemble = qdyn::run_speed_limit_ensemble(trials, max_dim, seed);

  constexpr double e1 = 1.0;
  const auto h = qdyn::not_hamiltonian(e1);
  s.not_gate = qdyn::orthogonalization_time(h, qdyn::StateVector::basis(2, 0));
  const double expected = std::numbers::pi / e1;
  s.not_relative_error = s.not_gate.found ? std::abs(s.not_gate.t_orth - expected) / expected : 1.0;
  s.not_attains_bound = s.not_gate.found && s.not_relative_error <= 1e-6 &&
                        std::abs(s.not_gate.ml_bound - expected) <= 1e-6 * expected &&
                        std::abs(s.not_gate.ab_bound - expected) <= 1e-6 * expected;

  const auto toffoli = qdyn::toffoli_unitary();
  s.toffoli = qdyn::boolean_embeddings_check(toffoli);
  const auto ht = qdyn::hamiltonian_for_involution(toffoli, 1.0);
  s.toffoli_hamiltonian_ok = true;
  for (int i = 0; i < 8; ++i) {
    const auto in = qdyn::StateVector::basis(8, i);
    const double o = qdyn::overlap(qdyn::evolve(ht, in, 1.0), toffoli.apply(in));
    s.toffoli_hamiltonian_ok = s.toffoli_hamiltonian_ok && o >= 1.0 - 1e-10;
  }
  return s;
}

Json constants_json(const PhysicalConstants& k) {
  const auto p = planck_scales(k);
  return Json{{"c", k.c},
              {"hbar", k.hbar},
              {"G", k.G},
              {"k_B", k.k_B},
              {"alpha", k.alpha},
              {"planck_length_m", p.length},
              {"planck_time_s", p.time},
              {"planck_mass_kg", p.mass}};
}

Json limits_json(const LimitsReport& r, const PhysicalConstants& k) {
  Json species = Json::array();
  for (const auto& name : r.memory.included_species) species.push_back(name);
  Json doc;
  doc["input"] = Json{{"mass_kg", r.spec.mass},
                      {"volume_m3", r.spec.volume},
                      {"half_size_m", r.geometry.half_size},
                      {"surface_area_m2", r.geometry.surface_area},
                      {"energy_J", r.energy},
                      {"environment_temperature_K", r.spec.environment_temperature},
                      {"schwarzschild_radius_m", r.schwarzschild_radius},
                      {"constants", constants_json(k)}};
  doc["speed"] = Json{{"ops_per_second", r.ops_per_second}};
  doc["memory"] = Json{{"temperature_K", r.memory.temperature},
                       {"entropy_J_per_K", r.memory.entropy},
                       {"bits", r.memory.bits},
                       {"ops_per_bit_per_second", r.ops_per_bit_per_second},
                       {"thermal_wavelength_m", r.memory.thermal_wavelength},
                       {"included_species", species},
                       {"r_effective", r.memory.r_effective}};
  doc["parallelism"] = Json{{"t_com_s", r.parallelism.t_com},
                            {"t_flip_s", r.parallelism.t_flip},
                            {"ratio", r.parallelism.ratio},
                            {"bekenstein_ratio", r.parallelism.bekenstein_ratio},
                            {"max_error_rate", r.errors.max_error_rate},
                            {"bit_flux_formula", r.errors.bit_flux_per_area},
                            {"bit_flux_paper", r.bit_flux_quoted},
                            {"throughput_W", r.errors.throughput},
                            {"landauer_cost_J_per_bit", r.errors.landauer_cost_per_bit}};
  doc["flags"] = Json{{"black_hole_regime", r.black_hole_regime}};
  return doc;
}

Json blackhole_json(const BlackHoleReport& r) {
  return Json{{"mass_kg", r.mass},
              {"schwarzschild_radius_m", r.schwarzschild_radius},
              {"hawking_temperature_K", r.hawking_temperature},
              {"entropy_J_per_K", r.entropy},
              {"bits", r.bits},
              {"energy_per_bit_J", r.energy_per_bit},
              {"ops_per_second", r.ops_per_second},
              {"t_flip_s", r.t_flip},
              {"t_com_s", r.t_com},
              {"ratio", r.ratio},
              {"bekenstein_ratio", r.bekenstein_ratio},
              {"lifetime_s", r.lifetime},
              {"lifetime_ops", r.lifetime_ops},
              {"page_C", r.page_C}};
}

Json scenario_json(const scenarios::ScenarioReport& r, const scenarios::ComparisonSummary& sum) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  Json derived = Json::object();
  for (const auto& [k, v] : r.derived) derived[k] = v;
  Json quoted = Json::object();
  for (const auto& [k, q] : r.paper_values) {
    Json e{{"value", q.value}, {"tolerance", scenarios::to_string(q.kind)}};
    if (q.kind == scenarios::ToleranceKind::range) {
      e["lo"] = q.lo;
      e["hi"] = q.hi;
    }
    if (q.kind == scenarios::ToleranceKind::absolute) e["tolerance_abs"] = q.tolerance;
    quoted[k] = e;
  }
  Json verdicts = Json::object();
  for (const auto& [k, v] : sum.verdicts) verdicts[k] = scenarios::to_string(v);
  Json notes = Json::array();
  for (const auto& n : r.notes) notes.push_back(n);
  return Json{{"scenario", r.name}, {"parameters", params}, {"derived", derived},
              {"paper_values", quoted}, {"verdicts", verdicts}, {"pass", sum.pass},
              {"notes", notes}};
}

Json qverify_json(const QVerifySummary& s) {
  return Json{{"trials", s.trials},
              {"max_dim", s.max_dim},
              {"seed", s.seed},
              {"violations", s.ensemble.violations},
              {"gaussian_found", s.ensemble.gaussian_found},
              {"two_level_found", s.ensemble.two_level_found},
              {"min_margin", s.ensemble.min_margin},
              {"not_gate", orthogonalization_json(s.not_gate)},
              {"not_relative_error", s.not_relative_error},
              {"not_attains_bound", s.not_attains_bound},
              {"toffoli", Json{{"and", s.toffoli.and_gate},
                               {"not", s.toffoli.not_gate},
                               {"fanout", s.toffoli.fanout},
                               {"hamiltonian", s.toffoli_hamiltonian_ok}}},
              {"pass", s.passed()}};
}

void render_limits(std::ostream& out, const LimitsReport& r, const PhysicalConstants& k,
                   OutputFormat format, int precision) {
  render_flat(out, limits_json(r, k), format, precision);
}

void render_blackhole(std::ostream& out, const BlackHoleReport& r, OutputFormat format, int precision) {
  render_flat(out, blackhole_json(r), format, precision);
}

void render_constants(std::ostream& out, const PhysicalConstants& k, OutputFormat format, int precision) {
  render_flat(out, constants_json(k), format, precision);
}

void render_sweep(std::ostream& out, const std::vector<SweepRow>& rows, OutputFormat format) {
  if (format != OutputFormat::json) {
    write_sweep_csv(out, rows);
    return;
  }
  Json list = Json::array();
  for (const auto& r : rows) {
    list.push_back(Json{{"R_m", r.R}, {"T_K", r.T}, {"S_JperK", r.S}, {"bits", r.bits},
                        {"ops_per_bit_s", r.ops_per_bit_s}, {"ratio", r.ratio},
                        {"bekenstein", r.bekenstein}, {"black_hole", r.black_hole}});
  }
  out << dump_scientific(list) << '\n';
}

void render_scenario(std::ostream& out, const scenarios::ScenarioReport& r,
                     const scenarios::ComparisonSummary& sum, OutputFormat format, int precision) {
  if (format != OutputFormat::text) {
    render_flat(out, scenario_json(r, sum), format, precision);
    return;
  }
  out << "scenario " << r.name << '\n';
  for (const auto& [k, v] : r.parameters) out << "  param    " << k << " = " << format_number(v, precision) << '\n';
  std::size_t width = 0;
  for (const auto& [k, v] : r.derived) width = std::max(width, k.size());
  for (const auto& [k, v] : r.derived) {
    out << "  " << k << std::string(width - k.size() + 2, ' ') << format_number(v, precision);
    if (const auto q = r.paper_values.find(k); q != r.paper_values.end()) {
      out << "  quoted ";
      if (q->second.kind == scenarios::ToleranceKind::range) {
        out << '[' << format_number(q->second.lo, precision) << ", "
            << format_number(q->second.hi, precision) << ']';
      } else {
        out << format_number(q->second.value, precision);
      }
      out << " (" << scenarios::to_string(q->second.kind) << ") "
          << scenarios::to_string(sum.verdicts.at(k));
    }
    out << '\n';
  }
  for (const auto& n : r.notes) out << "  note: " << n << '\n';
  out << (sum.pass ? "PASS" : "FAIL") << '\n';
}

void render_qverify(std::ostream& out, const QVerifySummary& s, OutputFormat format, int precision) {
  if (format != OutputFormat::text) {
    render_flat(out, qverify_json(s), format, precision);
    return;
  }
  auto yes = [](bool b) { return b ? "pass" : "FAIL"; };
  out << "speed-limit ensemble: " << s.trials << " trials, dims 2.." << s.max_dim << ", seed " << s.seed << '\n';
  out << "  violations of t_orth >= max(pi/2E, pi/2dE): " << s.ensemble.violations << '\n';
  out << "  orthogonalized: gaussian " << s.ensemble.gaussian_found << ", two-level "
      << s.ensemble.two_level_found << '\n';
  out << "  min t_orth / bound: " << format_number(s.ensemble.min_margin, precision) << '\n';
  out << "NOT gate (E1 = 1): t_orth " << format_number(s.not_gate.t_orth, 12) << ", ML bound "
      << format_number(s.not_gate.ml_bound, 12) << ", spread bound " << format_number(s.not_gate.ab_bound, 12)
      << ", rel. error " << format_number(s.not_relative_error, 3) << ": " << yes(s.not_attains_bound) << '\n';
  out << "Toffoli AND: " << yes(s.toffoli.and_gate) << ", NOT: " << yes(s.toffoli.not_gate)
      << ", FANOUT: " << yes(s.toffoli.fanout) << ", Hamiltonian: " << yes(s.toffoli_hamiltonian_ok) << '\n';
  out << (s.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace physlim::cli
