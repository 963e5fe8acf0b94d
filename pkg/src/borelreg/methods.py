from __future__ import annotations
from abc import ABC, abstractmethod
from collections.abc import Callable
from dataclasses import dataclass
import sys
from typing import Union, cast
from .errors import RouteError
from .logging import didyoumean, log

if sys.version_info[:2] >= (3, 10):
    from importlib.metadata import entry_points
else:
    from importlib_metadata import entry_points

#: The entry point group in which invariant routes are registered
ROUTE_GROUP = "borelreg.routes"

# Call `entry_points()` only once and save the results for a speedup.
ENTRY_POINTS = entry_points()


class RouteSpec(ABC):
    """
    An abstract base class for specifications of routes computing an
    `~borelreg.invariants.InvariantReport` from a
    `~borelreg.monomial.MonomialIdeal`
    """

    @abstractmethod
    def load(self) -> Callable:
        """Load & return the callable specified by the `RouteSpec`"""
        ...


@dataclass
class EntryPointSpec(RouteSpec):
    """A route specification identifying a Python packaging entry point"""

    #: The name of the entry point
    name: str

    #: The name of the group in which to look up the entry point
    group: str = ROUTE_GROUP

    def load(self) -> Callable:
        """
        Loads & returns the entry point

        :raises RouteError: if no such entry point exists or the loaded entry
            point is not a callable
        """
        log.debug("Loading entry point %r in group %s", self.name, self.group)
        eps = list(ENTRY_POINTS.select(group=self.group, name=self.name))
        if len(eps) == 0:
            raise RouteError(
                f"Unknown route {self.name!r}"
                f"{didyoumean(self.name, available_routes(self.group))}"
            )
        elif len(eps) > 1:
            raise RouteError(
                "Packaging conflict!  Multiple entry points named"
                f" {self.name!r} registered in group {self.group}"
            )
        else:
            ep = eps[0]
        c = ep.load()
        if not callable(c):
            raise RouteError(
                f"{self.group} entry point {self.name!r} did not resolve to a"
                " callable object"
            )
        return cast(Callable, c)


@dataclass
class CallableSpec(RouteSpec):
    """A route specification identifying a callable by the callable itself"""

    #: The callable
    func: Callable

    def load(self) -> Callable:
        """Return the callable"""
        return self.func


def route_spec(route: Union[str, Callable]) -> RouteSpec:
    """Convert a route name or callable to a `RouteSpec`"""
    if callable(route):
        return CallableSpec(route)
    elif isinstance(route, str):
        return EntryPointSpec(route)
    else:
        raise RouteError(f"Invalid route specification: {route!r}")


def available_routes(group: str = ROUTE_GROUP) -> list[str]:
    """Return the names of all registered routes, sorted"""
    return sorted({ep.name for ep in ENTRY_POINTS.select(group=group)})
