"""Take-off assessment for rigid-wing airborne wind energy systems."""

from ._core import (
    Aircraft,
    ConfigError,
    DomainError,
    Environment,
    Error,
    InfeasibleError,
    NonConvergenceError,
    PropellerBank,
    assess,
    compare,
    dump_scenario,
    linear_assess,
    load_scenario,
    optimal_arm,
    paper_preset,
    parse_scenario,
    peak_crosswind_power,
    simulate,
    vertical_assess,
)

__all__ = [
    "Aircraft",
    "ConfigError",
    "DomainError",
    "Environment",
    "Error",
    "InfeasibleError",
    "NonConvergenceError",
    "PropellerBank",
    "assess",
    "compare",
    "dump_scenario",
    "linear_assess",
    "load_scenario",
    "optimal_arm",
    "paper_preset",
    "parse_scenario",
    "peak_crosswind_power",
    "simulate",
    "vertical_assess",
]
