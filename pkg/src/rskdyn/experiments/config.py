"""Experiment configuration: packaged defaults plus optional TOML overrides.

Horizons, trial counts, and acceptance thresholds are data, not code; the
packaged ``defaults.toml`` holds the pilot-calibrated values, and a file
named by ``RSKDYN_CONFIG`` (or an explicit path) is merged over it section
by section.
"""

from __future__ import annotations

import os
import sys
from importlib import resources

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

__all__ = ["load_defaults", "load_config", "CONFIG_ENV_VAR"]

CONFIG_ENV_VAR = "RSKDYN_CONFIG"


def load_defaults() -> dict:
    text = resources.files("rskdyn.experiments").joinpath("defaults.toml").read_text()
    return tomllib.loads(text)


def load_config(path: str | None = None) -> dict:
    """Packaged defaults, overlaid with the TOML file at ``path`` if given
    (falling back to the RSKDYN_CONFIG environment variable)."""
    config = load_defaults()
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR)
    if path:
        with open(path, "rb") as handle:
            override = tomllib.load(handle)
        for section, values in override.items():
            if isinstance(values, dict) and isinstance(config.get(section), dict):
                config[section].update(values)
            else:
                config[section] = values
    return config
