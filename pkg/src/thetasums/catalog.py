"""Locations of the shipped data files.

``THETASUMS_DATA`` overrides the directory holding ``identities.json`` and
``dickson_rules.json``.
"""

from __future__ import annotations

import os
from pathlib import Path

ENV_VAR = "THETASUMS_DATA"
_PACKAGED = Path(__file__).resolve().parent / "data"


def data_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    return Path(override) if override else _PACKAGED


def identities_path() -> Path:
    return data_dir() / "identities.json"


def rules_path() -> Path:
    return data_dir() / "dickson_rules.json"
