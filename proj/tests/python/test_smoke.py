import math

import pytest

import physlim


def rel(a, b):
    return abs(a - b) / abs(b)


def test_laptop_limits():
    r = physlim.compute_limits(1.0, 1.0)
    assert rel(r["ops_per_second"], 5.4258e50) < 5e-4
    assert rel(r["memory"]["temperature_K"], 5.87e8) < 1e-2
    assert rel(r["memory"]["bits"], 2.13e31) < 1e-2
    assert r["memory"]["included_species"] == ["photon"]
    assert r["black_hole_regime"] is False
    assert rel(r["bit_flux_paper"], 6 * r["bit_flux_formula"]) < 1e-12


def test_rate_matches_min_op_time():
    e = 1e-10
    assert rel(physlim.max_ops_per_second(e) * physlim.min_op_time(e), 1.0) < 1e-12


def test_blackhole():
    r = physlim.blackhole_report(1.0)
    assert rel(r["schwarzschild_radius_m"], 1.485e-27) < 1e-3
    assert rel(r["ratio"], math.log(2) / math.pi) < 1e-12
    assert rel(physlim.blackhole_report(1.0, page_c=1e-3)["lifetime_s"], 10 * r["lifetime_s"]) < 1e-12


def test_sweep_ends_on_horizon():
    rows = physlim.compression_sweep(1.0, points=5)
    assert len(rows) == 5
    assert rows[-1]["black_hole"] and not rows[0]["black_hole"]


def test_species_and_constants():
    light = physlim.ParticleSpecies("light", 1e-40, 2, 2, physlim.Statistics.fermion)
    assert light.effective_dof == 3.5
    s = physlim.solve_thermal_state(9e16, 1e-3, [physlim.photon(), light])
    assert s["r_effective"] == 5.5
    k = physlim.PhysicalConstants()
    k.G = 6.674e-11
    assert "6.674e-11" in repr(k)
    p = physlim.planck_scales(k)
    assert rel(p["length_m"] / p["time_s"], k.c) < 1e-12


def test_canonical_ensemble():
    levels = [0.0, 1e-21, 3e-21]
    c = physlim.canonical_ensemble(levels, 100.0)
    assert abs(sum(c["probabilities"]) - 1) < 1e-12
    assert rel(c["entropy_thermodynamic_J_per_K"], c["entropy_J_per_K"]) < 1e-9
    t = physlim.solve_temperature_for_energy(levels, c["energy_J"])
    assert rel(t, 100.0) < 1e-8


def test_scenarios():
    names = physlim.scenario_names()
    assert len(names) == 6
    for name in names:
        assert physlim.run_scenario(name)["pass"], name
    assert not physlim.run_scenario("ultimate_laptop", {"mass_kg": 2.0})["pass"]


def test_quantum_checks():
    ens = physlim.run_speed_limit_ensemble(trials=50, seed=1)
    assert ens["violations"] == 0
    r = physlim.not_gate_orthogonalization(2.0)
    assert r["found"] and rel(r["t_orth"], math.pi / 2.0) < 1e-6
    assert all(physlim.toffoli_embeddings().values())


def test_mode_sum_runs():
    s = physlim.mode_sum_entropy(1e-4, 1000.0, 20, threads=1)
    assert s["energy_J"] > 0 and s["entropy_J_per_K"] > 0


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        physlim.compute_limits(-1.0, 1.0)
    with pytest.raises(ValueError):
        physlim.blackhole_report(1.0, page_c=5.0)
    with pytest.raises(KeyError):
        physlim.run_scenario("nosuch")
    with pytest.raises(ValueError):
        physlim.ParticleSpecies("bad", -1.0)
