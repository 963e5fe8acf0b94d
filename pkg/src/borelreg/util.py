from __future__ import annotations
from dataclasses import dataclass
import json
import os
from typing import Any, Optional
from .errors import ConfigError


def int_guard(v: Any, fieldname: str, minimum: Optional[int] = None) -> int:
    """
    If ``v`` is an `int` (and not a `bool`) no less than ``minimum``, return
    it; otherwise, raise a `ConfigError`.  ``fieldname`` is an identifier for
    ``v`` to include in the error message.
    """
    if isinstance(v, int) and not isinstance(v, bool):
        if minimum is not None and v < minimum:
            raise ConfigError(f"borel's {fieldname} must be at least {minimum}")
        return v
    else:
        raise ConfigError(f"borel's {fieldname} must be set to an integer")


def list_str_guard(v: Any, fieldname: str) -> list[str]:
    """
    If ``v`` is a `list` of `str`\\s, return it; otherwise, raise a
    `ConfigError`.  ``fieldname`` is an identifier for ``v`` to include in the
    error message.
    """
    if isinstance(v, list) and all(isinstance(e, str) for e in v):
        return v
    else:
        raise ConfigError(f"borel's {fieldname} must be a list of strings")


@dataclass(frozen=True)
class ScaleGuard:
    """Size limits on the ideals the Betti-number oracle will accept"""

    #: Maximum number of variables, or `None` for no limit
    max_vars: Optional[int] = 5

    #: Maximum generator exponent, or `None` for no limit
    max_exponent: Optional[int] = 8

    @classmethod
    def parse(cls, value: str) -> ScaleGuard:
        """
        Parse a :envvar:`BOREL_SCALE_GUARD` value: ``off`` or
        ``VARS,EXPONENT``

        :raises ConfigError: if the value is malformed
        """
        v = value.strip()
        if v.lower() == "off":
            return cls(None, None)
        try:
            vars_s, exp_s = v.split(",")
            max_vars = int(vars_s)
            max_exponent = int(exp_s)
        except ValueError:
            raise ConfigError(
                f"Invalid BOREL_SCALE_GUARD value {value!r}; expected 'off' or"
                " 'VARS,EXPONENT'"
            )
        if max_vars < 1 or max_exponent < 1:
            raise ConfigError(
                f"Invalid BOREL_SCALE_GUARD value {value!r}; limits must be positive"
            )
        return cls(max_vars, max_exponent)

    @classmethod
    def from_env(cls) -> ScaleGuard:
        """
        Return the guard configured by :envvar:`BOREL_SCALE_GUARD`, or the
        default guard if the variable is unset or empty
        """
        value = os.environ.get("BOREL_SCALE_GUARD", "")
        if not value.strip():
            return cls()
        return cls.parse(value)


def dump_json(obj: Any) -> str:
    """
    Serialize ``obj`` the way every ``borel`` subcommand writes its output:
    indented, keys in insertion order, non-ASCII preserved
    """
    return json.dumps(obj, indent=4, ensure_ascii=False)
