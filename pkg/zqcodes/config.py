"""
State budgets and sampler defaults.

Every engine takes an explicit ``limit=`` argument defaulting to the
constants below. ``Budgets.from_env()`` layers environment overrides on
top.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass

from loguru import logger

DEFAULT_ENUM_LIMIT = 2**24
DEFAULT_DUAL_LIMIT = 2**28
DEFAULT_EXHAUSTIVE_LIMIT = 2**26
DEFAULT_BFS_LIMIT = 2**28
DEFAULT_PAIR_LIMIT = 2**24
DEFAULT_COLUMN_LIMIT = 2**20
DEFAULT_SAMPLES = 100_000
DEFAULT_SEED = 1
DEFAULT_WORKERS = 4

_POWER = re.compile(r"^\s*(\d+)\s*\^\s*(\d+)\s*$")


def parse_limit(text: str) -> int:
    """
    Parse a budget given as a plain integer or as ``B^E``.

    Raises:
        ValueError: If the text is neither form or the value is not positive.
    """
    match = _POWER.match(text)
    if match:
        value = int(match.group(1)) ** int(match.group(2))
    else:
        value = int(text.strip())
    if value < 1:
        raise ValueError(f"budget must be positive, got {text!r}")
    return value


@dataclass(frozen=True)
class Budgets:
    enumerate: int = DEFAULT_ENUM_LIMIT
    dual: int = DEFAULT_DUAL_LIMIT
    exhaustive: int = DEFAULT_EXHAUSTIVE_LIMIT
    bfs: int = DEFAULT_BFS_LIMIT
    pairs: int = DEFAULT_PAIR_LIMIT
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    workers: int = DEFAULT_WORKERS

    @classmethod
    def from_env(cls) -> "Budgets":
        """Read ``ZQCODES_*`` overrides; unset variables keep the defaults."""
        fields = {
            "enumerate": "ZQCODES_ENUM_LIMIT",
            "dual": "ZQCODES_DUAL_LIMIT",
            "exhaustive": "ZQCODES_EXHAUSTIVE_LIMIT",
            "bfs": "ZQCODES_BFS_LIMIT",
            "pairs": "ZQCODES_PAIR_LIMIT",
            "samples": "ZQCODES_SAMPLES",
            "seed": "ZQCODES_SEED",
            "workers": "ZQCODES_WORKERS",
        }
        overrides: dict[str, int] = {}
        for name, var in fields.items():
            raw = os.getenv(var)
            if raw is None:
                continue
            overrides[name] = int(raw) if name == "seed" else parse_limit(raw)
            logger.debug("Budget override {}={}", var, overrides[name])
        return cls(**overrides)
