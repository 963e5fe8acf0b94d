from __future__ import annotations
from dataclasses import dataclass
from functools import total_ordering
from typing import Any, Iterable, Optional, Union

#: The JSON spelling of −∞; it is never serialized as a number
JSON_MINUS_INFINITY = "-inf"

#: The spelling of −∞ in human-readable tables
TEXT_MINUS_INFINITY = "−∞"


@total_ordering
@dataclass(frozen=True)
class ExtendedDegree:
    """
    An integer degree or −∞.

    −∞ is the value of an empty maximum and of the top degree of a zero
    module.  It is the bottom element of the ordering and absorbs addition:
    ``MINUS_INFINITY + k == MINUS_INFINITY`` for every integer ``k``.
    A finite degree compares and hashes equal to the integer it wraps.
    """

    #: The finite value, or `None` for −∞
    value: Optional[int] = None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __int__(self) -> int:
        if self.value is None:
            raise ValueError("−∞ has no integer value")
        return self.value

    def __add__(self, other: int) -> ExtendedDegree:
        if not isinstance(other, int):
            return NotImplemented
        if self.value is None:
            return self
        return ExtendedDegree(self.value + other)

    __radd__ = __add__

    def __sub__(self, other: int) -> ExtendedDegree:
        if not isinstance(other, int):
            return NotImplemented
        return self + (-other)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, int):
            return self.value == other
        if not isinstance(other, ExtendedDegree):
            return NotImplemented
        return self.value == other.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __lt__(self, other: Any) -> bool:
        if isinstance(other, int):
            other = ExtendedDegree(other)
        if not isinstance(other, ExtendedDegree):
            return NotImplemented
        if self.value is None:
            return other.value is not None
        elif other.value is None:
            return False
        else:
            return self.value < other.value

    def __str__(self) -> str:
        return TEXT_MINUS_INFINITY if self.value is None else str(self.value)

    def __repr__(self) -> str:
        return "MINUS_INFINITY" if self.value is None else f"finite({self.value})"

    def to_json(self) -> Union[int, str]:
        return JSON_MINUS_INFINITY if self.value is None else self.value

    @classmethod
    def from_json(cls, obj: Any) -> ExtendedDegree:
        if obj == JSON_MINUS_INFINITY:
            return MINUS_INFINITY
        elif isinstance(obj, int) and not isinstance(obj, bool):
            return cls(obj)
        else:
            raise ValueError(f"Invalid extended degree: {obj!r}")


MINUS_INFINITY = ExtendedDegree(None)


def finite(k: int) -> ExtendedDegree:
    """Wrap an integer as an `ExtendedDegree`"""
    return ExtendedDegree(k)


def emax(values: Iterable[Union[ExtendedDegree, int]]) -> ExtendedDegree:
    """
    Return the maximum of ``values`` as an `ExtendedDegree`; the maximum of
    nothing is −∞
    """
    best = MINUS_INFINITY
    for v in values:
        if isinstance(v, int):
            v = ExtendedDegree(v)
        if best < v:
            best = v
    return best


def running_max(values: Iterable[ExtendedDegree]) -> list[ExtendedDegree]:
    """Return the prefix maxima of ``values``"""
    out: list[ExtendedDegree] = []
    best = MINUS_INFINITY
    for v in values:
        best = max(best, v)
        out.append(best)
    return out


def degrees_to_json(values: Iterable[ExtendedDegree]) -> list[Union[int, str]]:
    return [v.to_json() for v in values]
