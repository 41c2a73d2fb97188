"""Runtime limits, layered defaults < config file < environment < flags.

The enumeration ceilings keep exhaustive searches desk-sized; raising
them is a deliberate act done through any of the override layers.
"""

import dataclasses
import json
import os
import pathlib

ENV_PREFIX = "LUNEFREE_"
CONFIG_FILE = "lunefree.json"


@dataclasses.dataclass(frozen=True)
class Config:
    ceiling_simple: int = 13   # max v for simple-universe enumeration
    ceiling_general: int = 10  # max v when lunes and loops are allowed
    ceiling_edges: int = 12    # max e for plane-graph enumeration
    threads: int = 1

    def __post_init__(self):
        for f in dataclasses.fields(self):
            if getattr(self, f.name) < 1:
                raise ValueError("%s must be positive" % f.name)


def load_config(path=None, overrides=None) -> Config:
    """Build a Config from the layered sources.

    path: explicit config file; otherwise $LUNEFREE_CONFIG or a
    ./lunefree.json if present.  overrides: final word, e.g. parsed
    CLI flags (None entries are ignored).
    """
    values = {}
    path = path or os.environ.get(ENV_PREFIX + "CONFIG")
    candidate = pathlib.Path(path) if path else pathlib.Path(CONFIG_FILE)
    if candidate.is_file():
        loaded = json.loads(candidate.read_text())
        for f in dataclasses.fields(Config):
            if f.name in loaded:
                values[f.name] = int(loaded[f.name])
    for f in dataclasses.fields(Config):
        env = os.environ.get(ENV_PREFIX + f.name.upper())
        if env is not None:
            values[f.name] = int(env)
    for key, val in (overrides or {}).items():
        if val is not None:
            values[key] = int(val)
    return Config(**values)
