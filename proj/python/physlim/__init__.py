"""Physical limits of computation: speed, memory, parallelism and black-hole bounds."""

from ._core import (
    ParticleSpecies,
    PhysicalConstants,
    SpeciesInclusionError,
    Statistics,
    blackhole_report,
    canonical_ensemble,
    compression_sweep,
    compute_limits,
    max_ops_per_second,
    min_op_time,
    mode_sum_entropy,
    not_gate_orthogonalization,
    photon,
    planck_scales,
    run_scenario,
    run_speed_limit_ensemble,
    scenario_names,
    solve_temperature_for_energy,
    solve_thermal_state,
    toffoli_embeddings,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
