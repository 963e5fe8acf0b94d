"""
Irredundant irreducible decompositions of monomial ideals.

Every proper nonzero monomial ideal ``I`` is uniquely an irredundant
intersection ``I = m^{b_1} ∩ ⋯ ∩ m^{b_r}`` of irreducible ideals
``m^b = (x_i^{b_i} : b_i ≥ 1)``.  The components are found by recursive
splitting: a generator ``u = v·w`` with ``v`` and ``w`` coprime non-units
gives ``I = (G(I)∖{u} ∪ {v}) ∩ (G(I)∖{u} ∪ {w})``, and an ideal generated by
pure powers is itself irreducible.
"""

from __future__ import annotations
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache
from typing import Any
from .errors import DimensionMismatchError
from .logging import log
from .monomial import (
    Monomial,
    MonomialIdeal,
    intersect_all,
    require_proper_nonzero,
)


@dataclass(frozen=True, order=True)
class IrreducibleComponent:
    """The irreducible monomial ideal ``m^b``"""

    #: The exponent vector ``b``; ``b_i = 0`` means ``x_i`` does not occur
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        b = tuple(self.b)
        if any(not isinstance(e, int) or e < 0 for e in b):
            raise ValueError(f"Component exponents must be non-negative: {b}")
        if not any(b):
            raise ValueError("The unit ideal is not an irreducible component")
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return len(self.b)

    @property
    def supp(self) -> frozenset[int]:
        """The 1-based indices ``i`` with ``b_i ≥ 1``"""
        return frozenset(i for i, e in enumerate(self.b, start=1) if e > 0)

    @property
    def total(self) -> int:
        """``|b| = b_1 + ⋯ + b_n``"""
        return sum(self.b)

    def has_initial_support(self) -> bool:
        """Test whether ``supp(b) = {1, …, k}`` for some ``k``"""
        k = len(self.supp)
        return self.supp == frozenset(range(1, k + 1))

    def ideal(self, var_names: tuple[str, ...] = ()) -> MonomialIdeal:
        return MonomialIdeal(
            self.n,
            tuple(
                Monomial.variable(self.n, i, e)
                for i, e in enumerate(self.b, start=1)
                if e > 0
            ),
            var_names,
        )

    def __contains__(self, u: object) -> bool:
        if not isinstance(u, Monomial):
            return False
        return any(0 < c <= e for c, e in zip(self.b, u.exps))

    def is_subset_of(self, other: IrreducibleComponent) -> bool:
        """Test whether ``m^self.b ⊆ m^other.b``"""
        return all(
            other.b[i - 1] > 0 and other.b[i - 1] <= self.b[i - 1]
            for i in self.supp
        )

    def contains_ideal(self, J: MonomialIdeal) -> bool:
        return all(g in self for g in J.gens)


@dataclass(frozen=True)
class Decomposition:
    """An irredundant irreducible decomposition of ``source``"""

    #: The components, sorted lexicographically by exponent vector
    components: tuple[IrreducibleComponent, ...]

    #: The decomposed ideal
    source: MonomialIdeal

    def exponent_rows(self) -> list[list[int]]:
        return [list(q.b) for q in self.components]

    def for_json(self) -> dict[str, Any]:
        return {"components": self.exponent_rows()}


def decompose(I: MonomialIdeal) -> Decomposition:
    """
    Compute the irredundant irreducible decomposition of ``I``.

    The lex-first generator that is not a pure power is split off its
    lex-first pure-power factor; sub-ideals are memoized by canonical form.

    :raises DegenerateIdealError: if ``I`` is zero or the unit ideal
    """
    require_proper_nonzero(I, "Irreducible decomposition")
    raw = _split(I)
    components = prune_redundant(IrreducibleComponent(b) for b in raw)
    log.debug(
        "Decomposed ideal with %d generators into %d components (%d before pruning)",
        len(I.gens),
        len(components),
        len(raw),
    )
    return Decomposition(components, I)


@lru_cache(maxsize=8192)
def _split(I: MonomialIdeal) -> frozenset[tuple[int, ...]]:
    for u in I.gens:
        supp = u.support()
        if len(supp) > 1:
            i = supp[0]
            v = Monomial.variable(I.n, i, u.exps[i - 1])
            w = u.with_exponent(i, 0)
            rest = tuple(g for g in I.gens if g != u)
            return _split(I.derive(rest + (v,))) | _split(I.derive(rest + (w,)))
    b = [0] * I.n
    for g in I.gens:
        (i,) = g.support()
        b[i - 1] = g.exps[i - 1]
    return frozenset([tuple(b)])


def prune_redundant(
    components: Iterable[IrreducibleComponent],
) -> tuple[IrreducibleComponent, ...]:
    """
    Deduplicate ``components`` and discard every component containing the
    intersection of the others
    """
    cs = sorted(set(components))
    kept = [
        q for q in cs if not any(p != q and p.is_subset_of(q) for p in cs)
    ]
    changed = True
    while changed and len(kept) > 1:
        changed = False
        for q in kept:
            others = [p for p in kept if p is not q]
            if q.contains_ideal(_intersection(others)):
                kept.remove(q)
                changed = True
                break
    return tuple(kept)


def _intersection(components: list[IrreducibleComponent]) -> MonomialIdeal:
    n = components[0].n
    return intersect_all((q.ideal() for q in components), n)


def recompose(D: Decomposition) -> MonomialIdeal:
    """Intersect the components of ``D``; the result equals ``D.source``"""
    if not D.components:
        raise ValueError("Cannot recompose an empty decomposition")
    J = _intersection(list(D.components))
    return D.source.derive(J.gens)


def is_irredundant(
    components: Iterable[IrreducibleComponent], I: MonomialIdeal
) -> bool:
    """
    Test whether ``components`` intersect to ``I`` and no proper subset of
    them does
    """
    cs = list(components)
    if not cs:
        return False
    for q in cs:
        if q.n != I.n:
            raise DimensionMismatchError(
                f"Component {q.b} does not have {I.n} exponents"
            )
    if _intersection(cs) != I:
        return False
    if len(cs) == 1:
        return True
    # Some proper subset intersects to I iff dropping a single component does.
    for q in cs:
        others = [p for p in cs if p is not q]
        if _intersection(others) == I:
            return False
    return True

