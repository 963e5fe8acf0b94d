"""
Borel-type and stability predicates, the sequential chain, and satiety
"""

from __future__ import annotations
from dataclasses import dataclass
from typing import Any, Optional
from .degrees import MINUS_INFINITY, ExtendedDegree, finite
from .errors import InconsistencyError, NotBorelTypeError, PreconditionError
from .logging import log
from .monomial import (
    Monomial,
    MonomialIdeal,
    bounded_monomials_of_degree,
    colon_prefix,
    colon_prefix_saturate,
    colon_var,
    colon_var_saturate,
    m_ideal,
    m_index,
    member,
    pure_power_bound,
    require_proper_nonzero,
    saturation,
    truncate,
)


def borel_failure_index(I: MonomialIdeal) -> Optional[int]:
    """
    Return the least ``i`` with ``I:(x_1, …, x_i)^∞ ≠ I:x_i^∞``, or `None` if
    ``I`` is of Borel type

    :raises DegenerateIdealError: if ``I`` is zero or the unit ideal
    """
    require_proper_nonzero(I, "Borel type")
    for i in range(1, I.n + 1):
        if colon_prefix_saturate(I, i) != colon_var_saturate(I, i):
            log.debug("Borel-type identity fails at i=%d", i)
            return i
    return None


def is_borel_type(I: MonomialIdeal) -> bool:
    """
    Test whether ``I:(x_1, …, x_i)^∞ = I:x_i^∞`` for every ``i = 1, …, n``

    :raises DegenerateIdealError: if ``I`` is zero or the unit ideal
    """
    return borel_failure_index(I) is None


def require_borel_type(I: MonomialIdeal, what: str) -> None:
    """
    :raises NotBorelTypeError: if ``I`` is not of Borel type
    """
    i = borel_failure_index(I)
    if i is not None:
        raise NotBorelTypeError(
            f"{what} requires an ideal of Borel type, but"
            f" I:(x_1,...,x_{i})^inf != I:x_{i}^inf",
            failing_index=i,
        )


def is_stable(I: MonomialIdeal) -> bool:
    """
    Test whether ``x_i·u/x_{m(u)} ∈ I`` for every ``u ∈ G(I)`` and every
    ``i < m(u)``
    """
    require_proper_nonzero(I, "Stability")
    for u in I.gens:
        m = m_index(u)
        lowered = u.with_exponent(m, u.exps[m - 1] - 1)
        for i in range(1, m):
            v = lowered.with_exponent(i, lowered.exps[i - 1] + 1)
            if not member(v, I):
                return False
    return True


def is_strongly_stable_colon(I: MonomialIdeal) -> bool:
    """Test whether ``I:(x_1, …, x_i) = I:x_i`` for every ``i``"""
    require_proper_nonzero(I, "Strong stability")
    return all(colon_prefix(I, i) == colon_var(I, i) for i in range(1, I.n + 1))


def first_stable_truncation(I: MonomialIdeal, start: int, stop: int) -> Optional[int]:
    """
    Return the least ``e`` in ``start..stop`` (inclusive) for which ``I_{≥e}``
    is stable, or `None` if there is none
    """
    for e in range(start, stop + 1):
        if is_stable(truncate(I, e)):
            return e
    return None


@dataclass(frozen=True)
class SequentialChain:
    """
    The sequential chain ``I = I_0 ⊊ I_1 ⊊ ⋯ ⊊ I_r = S`` of an ideal of Borel
    type, with ``I_{l+1} = I_l : x_{n_l}^∞`` and ``n_l = m(I_l)``
    """

    #: ``I_0, …, I_r``
    ideals: tuple[MonomialIdeal, ...]

    #: ``n_0 > n_1 > ⋯ > n_{r-1}``
    indices: tuple[int, ...]

    #: ``J_0, …, J_{r-1}``; ``J_l`` is ``G(I_l)`` read in ``k[x_1, …, x_{n_l}]``
    restricted: tuple[MonomialIdeal, ...]

    @property
    def length(self) -> int:
        return len(self.indices)

    def for_json(self) -> dict[str, Any]:
        return {
            "ideals": [I.exponent_rows() for I in self.ideals],
            "indices": list(self.indices),
            "restricted": [
                {"n": J.n, "gens": J.exponent_rows()} for J in self.restricted
            ],
        }


def sequential_chain(I: MonomialIdeal) -> SequentialChain:
    """
    Build the sequential chain of ``I``

    :raises NotBorelTypeError: if ``I`` is not of Borel type
    """
    require_borel_type(I, "The sequential chain")
    ideals = [I]
    indices: list[int] = []
    restricted: list[MonomialIdeal] = []
    current = I
    while not current.is_unit:
        nl = m_ideal(current)
        indices.append(nl)
        restricted.append(current.restrict(nl))
        current = colon_var_saturate(current, nl)
        log.debug("Sequential chain step: n_%d = %d", len(indices) - 1, nl)
        ideals.append(current)
    return SequentialChain(tuple(ideals), tuple(indices), tuple(restricted))


def satiety_witness(I: MonomialIdeal) -> Optional[Monomial]:
    """
    Return a monomial of largest degree in ``I^sat ∖ I``, or `None` if ``I``
    is saturated.

    Every such monomial lies outside some full-support component ``m^b`` of
    ``I``, so its exponent of ``x_i`` is below the largest exponent of
    ``x_i`` among the generators; the search walks that box from the top
    degree down.

    :raises DegenerateIdealError: if ``I`` is the unit ideal
    """
    Isat = saturation(I)
    if Isat == I:
        return None
    bounds = tuple(max(e - 1, 0) for e in I.max_exponents())
    for d in range(pure_power_bound(I), -1, -1):
        for u in bounded_monomials_of_degree(bounds, d):
            if member(u, Isat) and not member(u, I):
                return u
    raise InconsistencyError(
        "I^sat differs from I but no monomial of I^sat/I lies within the"
        " generator exponent bounds"
    )


def satiety_quotient(I: MonomialIdeal) -> ExtendedDegree:
    """
    Return ``s(I^sat/I)``, the largest degree ``d`` with
    ``(I^sat)_d ≠ I_d``, or −∞ if ``I`` is saturated

    :raises DegenerateIdealError: if ``I`` is the unit ideal
    """
    u = satiety_witness(I)
    if u is None:
        return MINUS_INFINITY
    return finite(u.degree)


def satiety_bg_shortcut(I: MonomialIdeal, verify: bool = False) -> ExtendedDegree:
    """
    Return ``s(I^sat/I)`` as one less than the largest degree of a minimal
    generator involving ``x_n``.  This is only valid when
    ``I:(x_1, …, x_n) = I:x_n``.

    :param verify: also compute `satiety_quotient()` and compare
    :raises PreconditionError: if ``I:(x_1, …, x_n) ≠ I:x_n``
    :raises InconsistencyError: if ``verify`` is true and the values differ
    """
    require_proper_nonzero(I, "The satiety shortcut")
    if colon_prefix(I, I.n) != colon_var(I, I.n):
        raise PreconditionError(
            f"The satiety shortcut requires I:(x_1,...,x_{I.n}) = I:x_{I.n}"
        )
    degrees = [u.degree for u in I.gens if m_index(u) == I.n]
    value = finite(max(degrees) - 1) if degrees else MINUS_INFINITY
    if verify:
        expected = satiety_quotient(I)
        if value != expected:
            raise InconsistencyError(
                f"Satiety shortcut gave {value} but the graded comparison"
                f" gave {expected}"
            )
    return value
