from __future__ import annotations
from difflib import get_close_matches
import logging
import os
from typing import Any, Iterable, Optional

log = logging.getLogger("borelreg")

#: Environment variable read by `get_env_loglevel()`
LOG_LEVEL_ENVVAR = "BOREL_LOG_LEVEL"

LOG_FORMAT = "[%(levelname)-8s] %(name)s: %(message)s"


def get_env_loglevel() -> Optional[int]:
    """
    Return the logging level set by :envvar:`BOREL_LOG_LEVEL`, or `None` if
    it is unset or not a level
    """
    try:
        return parse_log_level(os.environ[LOG_LEVEL_ENVVAR])
    except (KeyError, ValueError):
        return None


def cli_log_level(verbosity: int) -> int:
    """
    Return the level for the ``borel`` command given the number of ``-v``
    options.  Without ``-v`` the environment level applies, defaulting to
    ``WARNING``; with ``-v`` the more verbose of the two wins.
    """
    env_level = get_env_loglevel()
    if verbosity == 0:
        return logging.WARNING if env_level is None else env_level
    level = logging.INFO if verbosity == 1 else logging.DEBUG
    if env_level is not None:
        level = min(level, env_level)
    return level


def configure_logging(verbosity: int) -> None:
    logging.basicConfig(format=LOG_FORMAT, level=cli_log_level(verbosity))


def parse_log_level(level: str) -> int:
    """
    Convert a log level name (case-insensitive) or number to its numeric value
    """
    try:
        return int(level)
    except ValueError:
        levelup = level.strip().upper()
        if levelup in {"CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG", "NOTSET"}:
            ll = getattr(logging, levelup)
            assert isinstance(ll, int)
            return ll
        else:
            raise ValueError(f"Invalid log level: {level!r}")


def warn_unknown_settings(
    settings: dict[str, Any], table: Optional[str], valid: Iterable[str] = ()
) -> None:
    """
    Log a warning for each key of ``settings``, which the caller has already
    stripped of every recognized setting.  ``table`` names the TOML table the
    settings came from, or is `None` for the top level of the file.  A key
    close to one of ``valid`` gets a "Did you mean?" suffix.
    """
    if table is None:
        where = "borel configuration"
    else:
        where = f"borel's {table} table"
    valid = list(valid)
    for key in settings:
        log.warning(
            "Ignoring unknown setting %r in %s%s", key, where, didyoumean(key, valid)
        )


def didyoumean(mistake: str, valid: Iterable[str]) -> str:
    """
    Return ``" (Did you mean: a? b?)"`` listing the elements of ``valid``
    close to ``mistake``, or ``""`` if there are none
    """
    candidates = get_close_matches(mistake, valid)
    if candidates:
        return " (Did you mean:" + "".join(f" {c}?" for c in candidates) + ")"
    else:
        return ""
