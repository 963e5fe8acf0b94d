"""
Exact arithmetic on monomials and monomial ideals.

Monomials are exponent vectors over a fixed number ``n`` of variables
``x_1, …, x_n``; variable indices are 1-based throughout the public API to
match the usual ``x_1, …, x_n`` notation.  Every `MonomialIdeal` is kept in
canonical form: its generators are the minimal generating set ``G(I)``
sorted in graded lexicographic order, so two ideals are equal iff their
`MonomialIdeal` values compare equal.
"""

from __future__ import annotations
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import groupby
from typing import Optional
from .errors import DegenerateIdealError, DimensionMismatchError, VariableIndexError
from .logging import log


@dataclass(frozen=True)
class Monomial:
    """A monomial ``x_1^{e_1} ⋯ x_n^{e_n}``, stored as its exponent vector"""

    #: The exponents; position ``i-1`` holds the exponent of ``x_i``
    exps: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(self.exps)
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError(f"Monomial exponents must be integers, got {e!r}")
            if e < 0:
                raise ValueError(f"Monomial exponents must be non-negative, got {e}")
        object.__setattr__(self, "exps", exps)

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, i: int, power: int = 1) -> Monomial:
        """Return ``x_i^power`` in ``n`` variables"""
        check_index(n, i)
        exps = [0] * n
        exps[i - 1] = power
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def is_one(self) -> bool:
        return not any(self.exps)

    def support(self) -> tuple[int, ...]:
        """The 1-based indices of the variables dividing the monomial"""
        return tuple(i for i, e in enumerate(self.exps, start=1) if e > 0)

    def is_pure_power(self) -> bool:
        return len(self.support()) == 1

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __mul__(self, other: Monomial) -> Monomial:
        check_same_n(self.n, other.n)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def lcm(self, other: Monomial) -> Monomial:
        check_same_n(self.n, other.n)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def quotient(self, other: Monomial) -> Monomial:
        """Return ``self / other``; ``other`` must divide ``self``"""
        if not other.divides(self):
            raise ValueError(f"{other.exps} does not divide {self.exps}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def with_exponent(self, i: int, e: int) -> Monomial:
        """Return a copy with the exponent of ``x_i`` replaced by ``e``"""
        exps = list(self.exps)
        exps[i - 1] = e
        return Monomial(tuple(exps))

    def grlex_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.degree, tuple(-e for e in self.exps))


def check_same_n(*ns: int) -> None:
    if len(set(ns)) > 1:
        raise DimensionMismatchError(
            "Ambient variable counts differ: " + ", ".join(map(str, ns))
        )


def check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise VariableIndexError(f"Variable index {i} outside of 1..{n}")


def default_var_names(n: int) -> tuple[str, ...]:
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i}" for i in range(1, n + 1))


def minimal_antichain(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """
    Return the monomials among ``gens`` not divisible by any other element of
    ``gens``, in graded lexicographic order
    """
    kept: list[Monomial] = []
    for _, group in groupby(sorted(set(gens), key=Monomial.grlex_key), key=_degree):
        # Monomials of equal degree never properly divide one another, so
        # only the strictly lower degrees already in `kept` are consulted.
        lower = len(kept)
        for g in group:
            if not any(h.divides(g) for h in kept[:lower]):
                kept.append(g)
    return tuple(kept)


def _degree(u: Monomial) -> int:
    return u.degree


@dataclass(frozen=True)
class MonomialIdeal:
    """
    A monomial ideal of ``S = k[x_1, …, x_n]``, represented by its minimal
    generating set.  The generators are minimalized and sorted on
    construction, so the zero ideal has no generators and the unit ideal has
    the single generator ``1``.
    """

    #: The number of variables of the ambient polynomial ring
    n: int

    #: The minimal generators in graded lexicographic order
    gens: tuple[Monomial, ...]

    #: Display names of the variables; not part of the ideal's identity
    var_names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"Variable count must be a positive integer: {self.n!r}")
        gens = tuple(self.gens)
        for g in gens:
            if g.n != self.n:
                raise DimensionMismatchError(
                    f"Generator {g.exps} does not have {self.n} exponents"
                )
        object.__setattr__(self, "gens", minimal_antichain(gens))
        names = tuple(self.var_names) or default_var_names(self.n)
        if len(names) != self.n:
            raise DimensionMismatchError(
                f"{len(names)} variable names given for {self.n} variables"
            )
        if len(set(names)) != len(names):
            raise ValueError(f"Duplicate variable names: {', '.join(names)}")
        object.__setattr__(self, "var_names", names)

    @classmethod
    def zero(cls, n: int, var_names: tuple[str, ...] = ()) -> MonomialIdeal:
        return cls(n, (), var_names)

    @classmethod
    def unit(cls, n: int, var_names: tuple[str, ...] = ()) -> MonomialIdeal:
        return cls(n, (Monomial.one(n),), var_names)

    @classmethod
    def maximal(cls, n: int, var_names: tuple[str, ...] = ()) -> MonomialIdeal:
        """The homogeneous maximal ideal ``(x_1, …, x_n)``"""
        return cls(
            n, tuple(Monomial.variable(n, i) for i in range(1, n + 1)), var_names
        )

    @classmethod
    def from_exponents(
        cls, rows: Iterable[Iterable[int]], n: int, var_names: tuple[str, ...] = ()
    ) -> MonomialIdeal:
        return cls(n, tuple(Monomial(tuple(r)) for r in rows), var_names)

    def derive(self, gens: Iterable[Monomial]) -> MonomialIdeal:
        """Build an ideal in the same ring (and with the same names)"""
        return MonomialIdeal(self.n, tuple(gens), self.var_names)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    @property
    def is_proper_nonzero(self) -> bool:
        return not self.is_zero and not self.is_unit

    @cached_property
    def _gen_set(self) -> frozenset[Monomial]:
        return frozenset(self.gens)

    def __contains__(self, u: object) -> bool:
        if not isinstance(u, Monomial):
            return False
        return member(u, self)

    def exponent_rows(self) -> list[list[int]]:
        return [list(g.exps) for g in self.gens]

    def max_exponents(self) -> tuple[int, ...]:
        """The componentwise maximum of the generators' exponent vectors"""
        if not self.gens:
            return (0,) * self.n
        return tuple(max(col) for col in zip(*(g.exps for g in self.gens)))

    def restrict(self, k: int) -> MonomialIdeal:
        """
        Read the generators of the ideal in the subring ``k[x_1, …, x_k]``.
        No generator may involve a variable past ``x_k``.
        """
        check_index(self.n, k)
        gens = []
        for g in self.gens:
            if any(g.exps[k:]):
                raise DimensionMismatchError(
                    f"Generator {g.exps} involves variables past x_{k}"
                )
            gens.append(Monomial(g.exps[:k]))
        return MonomialIdeal(k, tuple(gens), self.var_names[:k])


def require_proper_nonzero(I: MonomialIdeal, what: str) -> None:
    if I.is_zero:
        raise DegenerateIdealError(f"{what} is undefined for the zero ideal")
    if I.is_unit:
        raise DegenerateIdealError(f"{what} is undefined for the unit ideal")


def minimalize(
    gens: Iterable[Monomial], n: int, var_names: tuple[str, ...] = ()
) -> MonomialIdeal:
    """
    Return the monomial ideal generated by ``gens``, whose generating set is
    the unique divisibility antichain generating the same ideal

    :raises DimensionMismatchError: if some monomial does not have ``n``
        exponents
    """
    return MonomialIdeal(n, tuple(gens), var_names)


def member(u: Monomial, I: MonomialIdeal) -> bool:
    """Test whether some minimal generator of ``I`` divides ``u``"""
    check_same_n(u.n, I.n)
    if u in I._gen_set:
        return True
    d = u.degree
    for g in I.gens:
        if g.degree >= d:
            # Sorted by degree; a generator of degree ≥ deg(u) divides u only
            # if it equals u.
            break
        if g.divides(u):
            return True
    return False


def is_subideal(J: MonomialIdeal, I: MonomialIdeal) -> bool:
    """Test whether ``J ⊆ I``"""
    check_same_n(J.n, I.n)
    return all(member(g, I) for g in J.gens)


def intersect(K: MonomialIdeal, L: MonomialIdeal) -> MonomialIdeal:
    """Return ``K ∩ L``, generated by the pairwise lcms of the generators"""
    check_same_n(K.n, L.n)
    return K.derive(g.lcm(h) for g in K.gens for h in L.gens)


def intersect_all(ideals: Iterable[MonomialIdeal], n: int) -> MonomialIdeal:
    """Intersect the given ideals; the empty intersection is ``S``"""
    result: Optional[MonomialIdeal] = None
    for J in ideals:
        result = J if result is None else intersect(result, J)
    return MonomialIdeal.unit(n) if result is None else result


def ideal_sum(K: MonomialIdeal, L: MonomialIdeal) -> MonomialIdeal:
    """Return ``K + L``"""
    check_same_n(K.n, L.n)
    return K.derive(K.gens + L.gens)


def product(K: MonomialIdeal, L: MonomialIdeal) -> MonomialIdeal:
    """Return ``K·L``"""
    check_same_n(K.n, L.n)
    return K.derive(g * h for g in K.gens for h in L.gens)


def colon_var(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """Return ``I : x_i``"""
    check_index(I.n, i)
    return I.derive(g.with_exponent(i, max(g.exps[i - 1] - 1, 0)) for g in I.gens)


def colon_var_saturate(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """
    Return ``I : x_i^∞``, obtained by setting the exponent of ``x_i`` in every
    generator to zero
    """
    check_index(I.n, i)
    return I.derive(g.with_exponent(i, 0) for g in I.gens)


def colon_prefix(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """Return ``I : (x_1, …, x_i) = ⋂_{j ≤ i} (I : x_j)``"""
    check_index(I.n, i)
    return intersect_all((colon_var(I, j) for j in range(1, i + 1)), I.n)


def colon_prefix_saturate(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """
    Return ``I : (x_1, …, x_i)^∞``, the stable value of iterating
    ``J ↦ J : (x_1, …, x_i)`` starting from ``I``.

    It is computed in one step as ``⋂_{j ≤ i} (I : x_j^∞)``: if ``u·x_j^k ∈ I``
    for every ``j ≤ i`` then ``u·(x_1, …, x_i)^{ik} ⊆ I``, and conversely.
    """
    check_index(I.n, i)
    return intersect_all((colon_var_saturate(I, j) for j in range(1, i + 1)), I.n)


def iterate_colon_prefix(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """Compute ``I : (x_1, …, x_i)^∞`` by iterating single colons to a fixed point"""
    check_index(I.n, i)
    current = I
    while True:
        nxt = colon_prefix(current, i)
        if nxt == current:
            return current
        current = nxt


def saturation(I: MonomialIdeal) -> MonomialIdeal:
    """
    Return ``I^sat = I : (x_1, …, x_n)^∞``

    :raises DegenerateIdealError: if ``I`` is the unit ideal
    """
    if I.is_unit:
        raise DegenerateIdealError("Saturation is undefined for the unit ideal")
    return colon_prefix_saturate(I, I.n)


def monomials_of_degree(n: int, d: int) -> Iterator[Monomial]:
    """Yield every monomial of degree ``d`` in ``n`` variables"""
    for exps in _compositions(n, d):
        yield Monomial(exps)


@lru_cache(maxsize=1024)
def _compositions(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((d,),)
    out: list[tuple[int, ...]] = []
    for first in range(d, -1, -1):
        for rest in _compositions(n - 1, d - first):
            out.append((first,) + rest)
    return tuple(out)


def bounded_monomials_of_degree(bounds: tuple[int, ...], d: int) -> Iterator[Monomial]:
    """
    Yield every monomial of degree ``d`` whose exponent of ``x_i`` is at most
    ``bounds[i-1]``
    """

    def rec(pos: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if pos == len(bounds) - 1:
            if remaining <= bounds[pos]:
                yield (remaining,)
            return
        room = sum(bounds[pos + 1 :])
        for e in range(min(bounds[pos], remaining), max(remaining - room, 0) - 1, -1):
            for rest in rec(pos + 1, remaining - e):
                yield (e,) + rest

    if not bounds or d < 0 or d > sum(bounds):
        return
    for exps in rec(0, d):
        yield Monomial(exps)


def truncate(I: MonomialIdeal, e: int) -> MonomialIdeal:
    """
    Return ``I_{≥e}``, the ideal generated by the monomials of degree ``≥ e``
    in ``I``.  Its minimal generators are the generators of ``I`` of degree
    ``≥ e`` that are not multiples of a degree-``e`` monomial of ``I``,
    together with every degree-``e`` monomial of ``I``.
    """
    if e < 0:
        raise ValueError(f"Truncation degree must be non-negative, got {e}")
    if I.is_zero or e <= min(g.degree for g in I.gens):
        return I
    level = [u for u in monomials_of_degree(I.n, e) if member(u, I)]
    return I.derive(level + [g for g in I.gens if g.degree > e])


@lru_cache(maxsize=4096)
def hilbert_count(I: MonomialIdeal, d: int) -> int:
    """Return the number of monomials of degree ``d`` lying in ``I``"""
    if d < 0:
        raise ValueError(f"Degree must be non-negative, got {d}")
    return sum(1 for u in monomials_of_degree(I.n, d) if member(u, I))


def m_index(u: Monomial) -> int:
    """
    Return ``m(u)``, the largest index of a variable dividing ``u``

    :raises DegenerateIdealError: if ``u = 1``
    """
    supp = u.support()
    if not supp:
        raise DegenerateIdealError("m(u) is undefined for u = 1")
    return supp[-1]


def m_ideal(I: MonomialIdeal) -> int:
    """Return ``m(I) = max{m(u) : u ∈ G(I)}``"""
    require_proper_nonzero(I, "m(I)")
    return max(m_index(u) for u in I.gens)


def ideal_degree(I: MonomialIdeal) -> int:
    """Return ``deg(I)``, the largest degree of a minimal generator"""
    require_proper_nonzero(I, "deg(I)")
    return max(g.degree for g in I.gens)


def pure_power_bound(I: MonomialIdeal) -> int:
    """
    Return ``Σ_i max-exponent(x_i) − n``, an upper bound on the degree of any
    monomial in ``I^sat ∖ I``
    """
    bound = sum(I.max_exponents()) - I.n
    log.debug("Degree bound for I^sat/I search: %d", bound)
    return bound
