#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "physlim/physlim.hpp"

namespace py = pybind11;
using namespace physlim;

namespace {

py::dict thermal_dict(const ThermalState& s) {
  py::dict d;
  d["temperature_K"] = s.temperature;
  d["energy_J"] = s.energy;
  d["volume_m3"] = s.volume;
  d["entropy_J_per_K"] = s.entropy;
  d["bits"] = s.bits;
  d["r_effective"] = s.r_effective;
  d["included_species"] = s.included_species;
  d["thermal_wavelength_m"] = s.thermal_wavelength;
  return d;
}

SpeciesTable species_from(const std::vector<ParticleSpecies>& list) {
  return list.empty() ? SpeciesTable{} : SpeciesTable(list);
}

py::dict limits_dict(const LimitsReport& r) {
  py::dict d;
  d["mass_kg"] = r.spec.mass;
  d["volume_m3"] = r.spec.volume;
  d["half_size_m"] = r.geometry.half_size;
  d["surface_area_m2"] = r.geometry.surface_area;
  d["energy_J"] = r.energy;
  d["ops_per_second"] = r.ops_per_second;
  d["memory"] = thermal_dict(r.memory);
  d["ops_per_bit_per_second"] = r.ops_per_bit_per_second;
  d["t_com_s"] = r.parallelism.t_com;
  d["t_flip_s"] = r.parallelism.t_flip;
  d["ratio"] = r.parallelism.ratio;
  d["bekenstein_ratio"] = r.parallelism.bekenstein_ratio;
  d["bit_flux_formula"] = r.errors.bit_flux_per_area;
  d["bit_flux_paper"] = r.bit_flux_quoted;
  d["throughput_W"] = r.errors.throughput;
  d["max_error_rate"] = r.errors.max_error_rate;
  d["landauer_cost_J"] = r.errors.landauer_cost_per_bit;
  d["schwarzschild_radius_m"] = r.schwarzschild_radius;
  d["black_hole_regime"] = r.black_hole_regime;
  return d;
}

py::dict blackhole_dict(const BlackHoleReport& r) {
  py::dict d;
  d["mass_kg"] = r.mass;
  d["schwarzschild_radius_m"] = r.schwarzschild_radius;
  d["hawking_temperature_K"] = r.hawking_temperature;
  d["entropy_J_per_K"] = r.entropy;
  d["bits"] = r.bits;
  d["energy_per_bit_J"] = r.energy_per_bit;
  d["ops_per_second"] = r.ops_per_second;
  d["t_flip_s"] = r.t_flip;
  d["t_com_s"] = r.t_com;
  d["ratio"] = r.ratio;
  d["bekenstein_ratio"] = r.bekenstein_ratio;
  d["lifetime_s"] = r.lifetime;
  d["lifetime_ops"] = r.lifetime_ops;
  d["page_C"] = r.page_C;
  return d;
}

py::dict scenario_dict(const scenarios::ScenarioReport& r) {
  const auto summary = scenarios::compare_to_paper(r);
  py::dict quoted;
  for (const auto& [key, q] : r.paper_values) {
    py::dict e;
    e["value"] = q.value;
    e["tolerance"] = scenarios::to_string(q.kind);
    if (q.kind == scenarios::ToleranceKind::range) {
      e["lo"] = q.lo;
      e["hi"] = q.hi;
    }
    quoted[py::str(key)] = e;
  }
  py::dict verdicts;
  for (const auto& [key, v] : summary.verdicts) verdicts[py::str(key)] = scenarios::to_string(v);
  py::dict d;
  d["scenario"] = r.name;
  d["parameters"] = r.parameters;
  d["derived"] = r.derived;
  d["paper_values"] = quoted;
  d["verdicts"] = verdicts;
  d["pass"] = summary.pass;
  d["notes"] = r.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Physical limits of computation";

  static py::exception<SpeciesInclusionError> inclusion_error(m, "SpeciesInclusionError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const scenarios::UnknownScenarioError& e) {
      PyErr_SetString(PyExc_KeyError, e.what());
    }
  });

  py::class_<PhysicalConstants>(m, "PhysicalConstants")
      .def(py::init<>())
      .def(py::init([](double c, double hbar, double G, double k_B, double alpha) {
             PhysicalConstants k{c, hbar, G, k_B, alpha};
             k.validate();
             return k;
           }),
           py::arg("c"), py::arg("hbar"), py::arg("G"), py::arg("k_B"), py::arg("alpha"))
      .def_readwrite("c", &PhysicalConstants::c)
      .def_readwrite("hbar", &PhysicalConstants::hbar)
      .def_readwrite("G", &PhysicalConstants::G)
      .def_readwrite("k_B", &PhysicalConstants::k_B)
      .def_readwrite("alpha", &PhysicalConstants::alpha)
      .def("__repr__", [](const PhysicalConstants& k) {
        return py::str("PhysicalConstants(c={!r}, hbar={!r}, G={!r}, k_B={!r}, alpha={!r})")
            .format(k.c, k.hbar, k.G, k.k_B, k.alpha);
      });

  py::enum_<Statistics>(m, "Statistics")
      .value("boson", Statistics::boson)
      .value("fermion", Statistics::fermion);

  py::class_<ParticleSpecies>(m, "ParticleSpecies")
      .def(py::init([](std::string name, double mass, int count, int polarizations, Statistics stats) {
             ParticleSpecies s{std::move(name), mass, count, polarizations, stats};
             s.validate();
             return s;
           }),
           py::arg("name"), py::arg("mass_kg"), py::arg("particle_antiparticle_count") = 1,
           py::arg("polarizations") = 1, py::arg("statistics") = Statistics::boson)
      .def_readonly("name", &ParticleSpecies::name)
      .def_readonly("mass_kg", &ParticleSpecies::mass)
      .def_readonly("particle_antiparticle_count", &ParticleSpecies::particle_antiparticle_count)
      .def_readonly("polarizations", &ParticleSpecies::polarizations)
      .def_readonly("statistics", &ParticleSpecies::statistics)
      .def_property_readonly("effective_dof", [](const ParticleSpecies& s) { return effective_dof(s); });

  m.def("photon", &photon);

  m.def("planck_scales", [](const PhysicalConstants& k) {
    const auto p = planck_scales(k);
    return py::dict(py::arg("length_m") = p.length, py::arg("time_s") = p.time, py::arg("mass_kg") = p.mass);
  }, py::arg("constants") = PhysicalConstants{});

  m.def("max_ops_per_second",
        [](double energy, const PhysicalConstants& k) { return max_ops_per_second({energy}, k); },
        py::arg("energy_J"), py::arg("constants") = PhysicalConstants{});
  m.def("min_op_time", &min_op_time, py::arg("energy_J"), py::arg("constants") = PhysicalConstants{});

  m.def("solve_thermal_state",
        [](double energy, double volume, const std::vector<ParticleSpecies>& species, const PhysicalConstants& k) {
          return thermal_dict(solve_thermal_state(energy, volume, species_from(species), k));
        },
        py::arg("energy_J"), py::arg("volume_m3"), py::arg("species") = std::vector<ParticleSpecies>{},
        py::arg("constants") = PhysicalConstants{});

  m.def("compute_limits",
        [](double mass, double volume_l, double env_t, const std::vector<ParticleSpecies>& species,
           const PhysicalConstants& k) {
          return limits_dict(
              compute_limits({mass, volume_l * units::kLiter, species_from(species), env_t}, k));
        },
        py::arg("mass_kg"), py::arg("volume_l"), py::arg("environment_temperature_K") = 300.0,
        py::arg("species") = std::vector<ParticleSpecies>{}, py::arg("constants") = PhysicalConstants{});

  m.def("blackhole_report",
        [](double mass, double page_c, const PhysicalConstants& k) {
          return blackhole_dict(blackhole_report(mass, page_c, k));
        },
        py::arg("mass_kg"), py::arg("page_c") = kDefaultPageC, py::arg("constants") = PhysicalConstants{});

  m.def("compression_sweep",
        [](double mass, double r_start, std::optional<double> r_end, int points, const PhysicalConstants& k) {
          const double end = r_end.value_or(schwarzschild_radius(mass, k));
          py::list rows;
          for (const auto& r : compression_sweep(mass, r_start, end, points, {}, k)) {
            py::dict d;
            d["R_m"] = r.R;
            d["T_K"] = r.T;
            d["S_JperK"] = r.S;
            d["bits"] = r.bits;
            d["ops_per_bit_s"] = r.ops_per_bit_s;
            d["ratio"] = r.ratio;
            d["bekenstein"] = r.bekenstein;
            d["black_hole"] = r.black_hole;
            rows.append(d);
          }
          return rows;
        },
        py::arg("mass_kg"), py::arg("r_start") = 0.05, py::arg("r_end") = py::none(), py::arg("points") = 50,
        py::arg("constants") = PhysicalConstants{},
        "Log-spaced compression sweep; r_end defaults to the Schwarzschild radius.");

  m.def("canonical_ensemble",
        [](const std::vector<double>& levels, double t, const PhysicalConstants& k) {
          const auto c = canonical_ensemble(levels, t, k);
          py::dict d;
          d["log_partition"] = c.log_partition;
          d["probabilities"] = c.probabilities;
          d["energy_J"] = c.energy;
          d["entropy_J_per_K"] = c.entropy;
          d["entropy_thermodynamic_J_per_K"] = c.entropy_thermodynamic;
          return d;
        },
        py::arg("levels_J"), py::arg("temperature_K"), py::arg("constants") = PhysicalConstants{});

  m.def("solve_temperature_for_energy",
        [](const std::vector<double>& levels, double e, const PhysicalConstants& k) {
          return solve_temperature_for_energy(levels, e, k);
        },
        py::arg("levels_J"), py::arg("target_energy_J"), py::arg("constants") = PhysicalConstants{});

  m.def("mode_sum_entropy",
        [](double side, double t, int n_max, unsigned threads, const PhysicalConstants& k) {
          ModeSum s;
          {
            py::gil_scoped_release release;
            s = mode_sum_entropy(side, t, n_max, k, threads);
          }
          return py::dict(py::arg("energy_J") = s.energy, py::arg("entropy_J_per_K") = s.entropy);
        },
        py::arg("box_side_m"), py::arg("temperature_K"), py::arg("n_max"), py::arg("threads") = 0u,
        py::arg("constants") = PhysicalConstants{});

  m.def("scenario_names", &scenarios::scenario_names);
  m.def("run_scenario",
        [](const std::string& name, const scenarios::ParameterMap& overrides, const PhysicalConstants& k) {
          return scenario_dict(scenarios::run(name, overrides, k));
        },
        py::arg("name"), py::arg("overrides") = scenarios::ParameterMap{},
        py::arg("constants") = PhysicalConstants{});

  m.def("run_speed_limit_ensemble",
        [](int trials, int max_dim, std::uint64_t seed) {
          qdyn::EnsembleSummary s;
          {
            py::gil_scoped_release release;
            s = qdyn::run_speed_limit_ensemble(trials, max_dim, seed);
          }
          py::dict d;
          d["trials"] = s.trials;
          d["violations"] = s.violations;
          d["gaussian_found"] = s.gaussian_found;
          d["two_level_found"] = s.two_level_found;
          d["min_margin"] = s.min_margin;
          return d;
        },
        py::arg("trials") = 500, py::arg("max_dim") = 8, py::arg("seed") = 0);

  m.def("not_gate_orthogonalization",
        [](double e1) {
          const auto r = qdyn::orthogonalization_time(qdyn::not_hamiltonian(e1), qdyn::StateVector::basis(2, 0));
          py::dict d;
          d["found"] = r.found;
          d["t_orth"] = r.t_orth;
          d["ml_bound"] = r.ml_bound;
          d["ab_bound"] = r.ab_bound;
          return d;
        },
        py::arg("e1") = 1.0, "Orthogonalization of |0> under the NOT Hamiltonian (hbar = 1).");

  m.def("toffoli_embeddings", [] {
    const auto r = qdyn::boolean_embeddings_check();
    return py::dict(py::arg("and") = r.and_gate, py::arg("not") = r.not_gate, py::arg("fanout") = r.fanout);
  });
}
