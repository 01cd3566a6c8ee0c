"""
Configuration constants and the optional YAML suite configuration loader.
"""

import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

from .errors import InvalidInputError

# --- Configuration Constants ---
VERSION = "1.0.0"
DEFAULT_MAX_DEGREE = 12
DEFAULT_JOBS = 1
CACHE_ENV_VAR = "QTKNOTS_CACHE"
DEFAULT_CACHE_DIR = Path.home() / ".cache" / "qtknots"
CACHE_HEADER = "QTKNOTS-CACHE v1"
SUPPORTED_FORMATS = ["text", "json"]
SUPERPOLY_FORMATS = ["monomial", "schur"]

# Per-suite defaults; any key can be overridden from a --config YAML file.
SUITE_DEFAULTS: Dict[str, Dict[str, Any]] = {
    "plethysm-rules": {"max_degree": 5, "samples": 12, "seed": 7},
    "hook-evaluation": {"max_size": 6},
    "macdonald-symmetry": {"max_size": 6},
    "macdonald-specializations": {"max_size": 5},
    "star-orthogonality": {"max_n": 4},
    "d0-eigen": {"max_size": 5},
    "commutator-identities": {"max_degree": 4, "samples": 3, "seed": 11},
    "nabla-conjugation": {"max_seed_degree": 3},
    "pi-expansion": {"max_degree": 5},
    "t0-evaluation": {"rays": [[3, 2], [5, 2], [7, 2], [4, 3], [5, 4]]},
    "straightening": {},
    "a-candidates": {},
    "kostka4": {},
    "small-macH": {},
    "nabla-en": {"max_n": 4},
    "nabla-shat": {"max_size": 4},
    "superpolys": {"rays": [[3, 2], [4, 3], [5, 4], [6, 5]]},
    "families": {"max_r": 4},
    "table1": {"max_size": 6},
    "table5": {"max_size": 8},
    "crosscheck-n5": {"max_n": 5},
    "schur-positivity": {"rays": [[3, 2], [4, 3], [5, 2], [5, 3], [5, 4]]},
    "hook-agreement": {"rays": [[3, 2], [4, 3], [5, 4]]},
    "skew-positivity": {"rays": [[3, 2], [4, 3], [5, 4]]},
    "identity-dnl": {"max_n": 4},
    "dk-relation": {"max_k": 4},
}


def resolve_cache_dir(cli_value: Optional[str] = None) -> Path:
    """Cache root: the --cache-dir flag, then $QTKNOTS_CACHE, then the default."""
    if cli_value:
        return Path(cli_value).expanduser()
    env_value = os.environ.get(CACHE_ENV_VAR)
    if env_value:
        return Path(env_value).expanduser()
    return DEFAULT_CACHE_DIR


def load_suite_config(path: Optional[str]) -> Dict[str, Dict[str, Any]]:
    """
    Merge a YAML suite configuration over SUITE_DEFAULTS.

    The file holds a top-level mapping of suite name to a mapping of options.
    Unknown suite names are rejected so typos do not silently do nothing.
    """
    merged = {name: dict(options) for name, options in SUITE_DEFAULTS.items()}
    if not path:
        return merged

    try:
        with open(path, "r", encoding="utf-8") as f:
            loaded = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as e:
        raise InvalidInputError(f"cannot read suite config {path}: {e}") from e

    if not isinstance(loaded, dict):
        raise InvalidInputError(f"suite config {path} must be a mapping of suite name to options")

    for name, options in loaded.items():
        if name not in merged:
            raise InvalidInputError(f"suite config {path} names unknown suite '{name}'")
        if not isinstance(options, dict):
            raise InvalidInputError(f"options for suite '{name}' must be a mapping")
        merged[name].update(options)
    return merged
