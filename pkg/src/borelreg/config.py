from __future__ import annotations
from dataclasses import dataclass, fields, replace
from pathlib import Path
import sys
from typing import Any
from .errors import ConfigError
from .logging import log, warn_unknown_settings
from .util import int_guard, list_str_guard

if sys.version_info[:2] >= (3, 11):
    from tomllib import load as toml_load
else:
    from tomli import load as toml_load

#: The composition operations `fuzz_borel()` may apply
OPERATIONS = ("intersect", "sum", "product")

#: Largest supported composition depth
MAX_DEPTH = 3

SEED_LIMIT = 2**64


@dataclass(frozen=True)
class FuzzConfig:
    """Parsed settings for the Borel-type ideal fuzzer and property runner"""

    #: Seed of the SplitMix64 generator
    seed: int = 1

    #: Number of samples to draw
    count: int = 500

    #: Largest number of variables
    n_max: int = 4

    #: Largest exponent in a leaf ``m^b``
    exp_max: int = 5

    #: Operations used to combine leaves
    ops: tuple[str, ...] = ("intersect", "sum")

    #: Depth of the composition tree; 0 yields single irreducible ideals
    depth: int = 2

    #: Number of ideal pairs drawn for the two-ideal properties
    pair_count: int = 200

    def __post_init__(self) -> None:
        int_guard(self.seed, "seed", minimum=0)
        if self.seed >= SEED_LIMIT:
            raise ConfigError("borel's seed must be less than 2^64")
        int_guard(self.count, "count", minimum=0)
        int_guard(self.n_max, "n-max", minimum=1)
        int_guard(self.exp_max, "exp-max", minimum=1)
        int_guard(self.depth, "depth", minimum=0)
        if self.depth > MAX_DEPTH:
            raise ConfigError(f"borel's depth must be at most {MAX_DEPTH}")
        int_guard(self.pair_count, "pair-count", minimum=0)
        if not self.ops:
            raise ConfigError("borel's ops must name at least one operation")
        for op in self.ops:
            if op not in OPERATIONS:
                raise ConfigError(
                    f"Unknown operation {op!r} in borel's ops; valid operations:"
                    f" {', '.join(OPERATIONS)}"
                )
        object.__setattr__(self, "ops", tuple(dict.fromkeys(self.ops)))

    @classmethod
    def parse_toml_file(cls, filepath: str | Path) -> FuzzConfig:
        """
        Parse the given TOML file and extract the settings from the
        ``[tool.borel.fuzz]`` table if present, else from a ``[fuzz]`` table,
        else from the top level of the document

        :raises ConfigError:
            if the file cannot be parsed or any setting is not of the correct
            type
        """
        try:
            with open(filepath, "rb") as fp:
                data = toml_load(fp)
        except OSError as e:
            raise ConfigError(f"Could not read {filepath}: {e}")
        except ValueError as e:
            raise ConfigError(f"Invalid TOML in {filepath}: {e}")
        try:
            table = data["tool"]["borel"]["fuzz"]
        except (LookupError, TypeError):
            if "fuzz" in data:
                table = data["fuzz"]
            else:
                table = {k: v for k, v in data.items() if k != "tool"}
        else:
            log.debug("Using [tool.borel.fuzz] table of %s", filepath)
        return cls.parse_obj(table)

    @classmethod
    def parse_obj(cls, obj: Any) -> FuzzConfig:
        """
        Parse a raw Python configuration structure.  Keys are the field names
        with underscores replaced by hyphens; unknown keys are ignored with a
        warning.

        :raises ConfigError:
            - if ``obj`` is not a `dict`
            - if any setting is not of the correct type or out of range
        """
        if not isinstance(obj, dict):
            raise ConfigError("borel fuzz config must be a table")
        obj = dict(obj)
        kwargs: dict[str, Any] = {}
        for f in fields(cls):
            key = attr2key(f.name)
            if key in obj:
                value = obj.pop(key)
                if f.name == "ops":
                    value = tuple(list_str_guard(value, key))
                else:
                    value = int_guard(value, key)
                kwargs[f.name] = value
        warn_unknown_settings(obj, "fuzz", [attr2key(f.name) for f in fields(cls)])
        return cls(**kwargs)

    def with_overrides(self, **kwargs: Any) -> FuzzConfig:
        """Return a copy with every non-`None` keyword argument applied"""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})

    def for_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {}
        for f in fields(self):
            value = getattr(self, f.name)
            data[attr2key(f.name)] = list(value) if f.name == "ops" else value
        return data


def attr2key(name: str) -> str:
    return name.replace("_", "-")

