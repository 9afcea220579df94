"""Seeded Monte-Carlo experiments with machine-readable reports.

Each experiment takes its statistical knobs (trial counts, horizons,
thresholds) explicitly; ``run_experiment`` fills them in from the packaged
configuration (see ``defaults.toml``), optionally overridden by a TOML file,
so published numbers always trace back to a named config and seed.
"""

from __future__ import annotations

from typing import Callable

from .config import CONFIG_ENV_VAR, load_config, load_defaults
from .growth import thoma_frequencies
from .markov import expected_up_probability, transition_stats
from .merging import de_finetti_merge, transposition_coupling
from .report import ExperimentReport, verdict_of
from .runner import run_trials
from .separation import decoder_determination, separation_time
from .source import BernoulliSource, check_probabilities, derive_rng
from .vanishing import coupled_walk_domination, first_row_vanishing

__all__ = [
    "BernoulliSource",
    "ExperimentReport",
    "REGISTRY",
    "CONFIG_ENV_VAR",
    "check_probabilities",
    "coupled_walk_domination",
    "de_finetti_merge",
    "decoder_determination",
    "derive_rng",
    "expected_up_probability",
    "first_row_vanishing",
    "load_config",
    "load_defaults",
    "run_experiment",
    "run_trials",
    "separation_time",
    "thoma_frequencies",
    "transition_stats",
    "transposition_coupling",
    "verdict_of",
]

REGISTRY: dict[str, Callable[..., ExperimentReport]] = {
    "transition_stats": transition_stats,
    "thoma_frequencies": thoma_frequencies,
    "separation_time": separation_time,
    "decoder_determination": decoder_determination,
    "first_row_vanishing": first_row_vanishing,
    "first_row_vanishing_drift": first_row_vanishing,
    "coupled_walk_domination": coupled_walk_domination,
    "transposition_coupling": transposition_coupling,
    "de_finetti_merge": de_finetti_merge,
}


def run_experiment(
    name: str,
    *,
    seed: int,
    parallelism: int = 1,
    config_path: str | None = None,
    **overrides,
) -> ExperimentReport:
    """Run a named experiment with config-supplied parameters.

    Explicit keyword overrides (with non-None values) win over the config
    section of the same name.
    """
    if name not in REGISTRY:
        known = ", ".join(sorted(REGISTRY))
        raise ValueError(f"unknown experiment {name!r} (known: {known})")
    config = load_config(config_path)
    params = dict(config.get(name, {}))
    params.update({k: v for k, v in overrides.items() if v is not None})
    return REGISTRY[name](seed=seed, parallelism=parallelism, **params)
