"""
Graded Betti numbers of ``S/I`` from upper Koszul simplicial complexes.

For a multidegree ``b`` in the lcm lattice of ``G(I)``, the upper Koszul
complex is ``K^b(I) = {τ ⊆ supp(b) squarefree : x^{b−τ} ∈ I}`` and
``β_{i,b}(I) = dim H̃_{i−1}(K^b(I))``.  Betti multidegrees of ``I`` are lcms
of generator subsets, so the lattice is all that has to be visited.  Ranks of
the boundary maps are computed exactly with sympy over ``QQ`` or a prime
field.
"""

from __future__ import annotations
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Optional
from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix
from .borel import satiety_quotient
from .degrees import (
    ExtendedDegree,
    degrees_to_json,
    emax,
)
from .errors import InconsistencyError, ScaleGuardError
from .logging import log
from .monomial import Monomial, MonomialIdeal, member, require_proper_nonzero
from .util import ScaleGuard

#: The prime used for the field-independence spot check
DEFAULT_PRIME = 32003

Face = frozenset[int]


@dataclass(frozen=True)
class BettiTable:
    """The graded Betti numbers ``β_{i,j}(S/I)`` of a quotient ``S/I``"""

    #: Number of variables of ``S``
    n: int

    #: Nonzero ``β_{i,j}(S/I)``, keyed by ``(i, j)``
    entries: dict[tuple[int, int], int] = field(hash=False)

    #: Characteristic of the coefficient field (0 for the rationals)
    characteristic: int = 0

    def beta(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def b(self, i: int) -> ExtendedDegree:
        """``b_i(S/I)``, the largest degree of a generator of ``F_i``"""
        return emax(j for (k, j), v in self.entries.items() if k == i and v)

    def b_vector(self) -> tuple[ExtendedDegree, ...]:
        return tuple(self.b(i) for i in range(self.n + 1))

    def ideal_b_vector(self) -> tuple[ExtendedDegree, ...]:
        """``b_i(I) = b_{i+1}(S/I)`` for ``i = 0, …, n``"""
        return tuple(self.b(i + 1) for i in range(self.n + 1))

    @property
    def projective_dimension(self) -> int:
        return max(i for (i, _) in self.entries)

    def for_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "characteristic": self.characteristic,
            "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items())],
            "b": degrees_to_json(self.b_vector()),
        }

    def render(self) -> str:
        """
        Render the table with a column per homological degree ``i`` and a row
        per ``j − i``, dots standing for zeros
        """
        pd = self.projective_dimension
        shifts = sorted({j - i for (i, j) in self.entries})
        header = ["", *map(str, range(pd + 1))]
        rows = [header, ["total:", *(str(self._total(i)) for i in range(pd + 1))]]
        for s in shifts:
            rows.append(
                [f"{s}:"]
                + [str(self.beta(i, i + s) or ".") for i in range(pd + 1)]
            )
        widths = [max(len(r[c]) for r in rows) for c in range(len(header))]
        lines = [
            " ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip()
            for r in rows
        ]
        b = ", ".join(str(v) for v in self.b_vector())
        lines.append(f"b = ({b})")
        return "\n".join(lines)

    def _total(self, i: int) -> int:
        return sum(v for (k, _), v in self.entries.items() if k == i)


def check_scale(I: MonomialIdeal, guard: Optional[ScaleGuard] = None) -> None:
    """
    :raises ScaleGuardError: if ``I`` exceeds the oracle's size limits
    """
    if guard is None:
        guard = ScaleGuard.from_env()
    if guard.max_vars is not None and I.n > guard.max_vars:
        raise ScaleGuardError(
            f"Betti oracle limited to {guard.max_vars} variables, got {I.n};"
            " raise the limit with BOREL_SCALE_GUARD"
        )
    if guard.max_exponent is not None:
        top = max(I.max_exponents())
        if top > guard.max_exponent:
            raise ScaleGuardError(
                f"Betti oracle limited to exponents <= {guard.max_exponent},"
                f" got {top}; raise the limit with BOREL_SCALE_GUARD"
            )


def lcm_lattice(gens: Iterable[Monomial]) -> set[Monomial]:
    """Return the lcms of all nonempty subsets of ``gens``"""
    lattice: set[Monomial] = set()
    for g in gens:
        lattice |= {g.lcm(h) for h in lattice}
        lattice.add(g)
    return lattice


def upper_koszul_complex(I: MonomialIdeal, b: Monomial) -> set[Face]:
    supp = b.support()
    faces: set[Face] = set()
    for k in range(len(supp) + 1):
        for tau in combinations(supp, k):
            exps = list(b.exps)
            for i in tau:
                exps[i - 1] -= 1
            if member(Monomial(tuple(exps)), I):
                faces.add(frozenset(tau))
    return faces


def is_cone(faces: set[Face], vertices: Iterable[int]) -> bool:
    """Test whether some vertex is joined to every face"""
    return any(all(f | {v} in faces for f in faces) for v in vertices)


def _domain(characteristic: int) -> Any:
    return QQ if characteristic == 0 else GF(characteristic)


def boundary_matrix(
    rows: list[Face], cols: list[Face], characteristic: int = 0
) -> DomainMatrix:
    """
    Return the simplicial boundary map from the faces ``cols`` to the faces
    ``rows`` (one dimension lower), in the orders given
    """
    K = _domain(characteristic)
    index = {f: r for r, f in enumerate(rows)}
    matrix = [[K(0)] * len(cols) for _ in rows]
    for c, f in enumerate(cols):
        for pos, v in enumerate(sorted(f)):
            matrix[index[f - {v}]][c] = K(_sign(pos))
    return DomainMatrix(matrix, (len(rows), len(cols)), K)


def _rank(m: DomainMatrix) -> int:
    rows, cols = m.shape
    if not rows or not cols:
        return 0
    rank = m.rank()
    if rank > min(rows, cols):
        raise InconsistencyError(f"Boundary matrix rank {rank} exceeds its shape")
    return int(rank)


def boundary_rank(
    rows: list[Face], cols: list[Face], characteristic: int = 0
) -> int:
    """
    Return the rank of the simplicial boundary map from the faces ``cols``
    to the faces ``rows`` (one dimension lower)
    """
    if not rows or not cols:
        return 0
    return _rank(boundary_matrix(rows, cols, characteristic))


def _sign(d: int) -> int:
    return -1 if d % 2 else 1


def reduced_homology(faces: set[Face], characteristic: int = 0) -> dict[int, int]:
    """
    Return the nonzero ranks ``dim H̃_d`` of the simplicial complex
    ``faces`` (which includes the empty face unless the complex is void)

    Each ``H̃_d`` is the kernel dimension of the boundary map out of
    dimension ``d`` less the rank of the map into it.  Kernels and ranks are
    computed separately, so comparing the Euler characteristic of the faces
    with that of the homology checks the two against each other.

    :raises InconsistencyError: if two consecutive boundary maps do not
        compose to zero, a homology rank comes out negative, or the Euler
        characteristics differ
    """
    by_dim: dict[int, list[Face]] = defaultdict(list)
    for f in faces:
        by_dim[len(f) - 1].append(f)
    for fs in by_dim.values():
        fs.sort(key=sorted)
    top = max(by_dim, default=-2)
    maps = {
        d: boundary_matrix(by_dim[d - 1], by_dim[d], characteristic)
        for d in range(0, top + 1)
        if by_dim.get(d - 1) and by_dim.get(d)
    }
    for d in maps:
        if d + 1 in maps and not (maps[d] * maps[d + 1]).to_Matrix().is_zero_matrix:
            raise InconsistencyError(
                f"Boundary maps out of dimensions {d + 1} and {d} do not compose"
                " to zero"
            )
    ranks = {d: _rank(m) for d, m in maps.items()}
    homology: dict[int, int] = {}
    for d in range(-1, top + 1):
        if d in maps:
            cycles = maps[d].nullspace().shape[0]
        else:
            cycles = len(by_dim.get(d, []))
        h = cycles - ranks.get(d + 1, 0)
        if h < 0:
            raise InconsistencyError(f"Negative homology rank {h} in dimension {d}")
        if h:
            homology[d] = h
    euler_faces = sum(_sign(d) * len(fs) for d, fs in by_dim.items())
    euler_homology = sum(_sign(d) * h for d, h in homology.items())
    if euler_faces != euler_homology:
        raise InconsistencyError(
            f"Euler characteristic mismatch: faces give {euler_faces},"
            f" homology gives {euler_homology}"
        )
    return homology


def multigraded_betti(
    I: MonomialIdeal, characteristic: int = 0
) -> dict[tuple[int, Monomial], int]:
    """Return the nonzero ``β_{i,b}(I)``, keyed by ``(i, b)``"""
    out: dict[tuple[int, Monomial], int] = {}
    lattice = sorted(lcm_lattice(I.gens), key=Monomial.grlex_key)
    log.debug("Betti oracle: %d multidegrees in the lcm lattice", len(lattice))
    for b in lattice:
        faces = upper_koszul_complex(I, b)
        if is_cone(faces, b.support()):
            continue
        for d, h in reduced_homology(faces, characteristic).items():
            out[(d + 1, b)] = h
    return out


def betti_table(
    I: MonomialIdeal,
    characteristic: int = 0,
    guard: Optional[ScaleGuard] = None,
) -> BettiTable:
    """
    Compute the graded Betti numbers of ``S/I``, using
    ``β_{i+1,b}(S/I) = β_{i,b}(I)`` and ``β_{0,0}(S/I) = 1``

    :param characteristic: 0 for the rationals or a prime ``p`` for ``GF(p)``
    :param guard: size limits; defaults to the :envvar:`BOREL_SCALE_GUARD`
        setting
    :raises DegenerateIdealError: if ``I`` is zero or the unit ideal
    :raises ScaleGuardError: if ``I`` exceeds the size limits
    :raises InconsistencyError: if a homology self-check fails
    """
    require_proper_nonzero(I, "The Betti oracle")
    if characteristic != 0 and not isprime(characteristic):
        raise ValueError(f"Field characteristic must be 0 or a prime: {characteristic}")
    check_scale(I, guard)
    entries: dict[tuple[int, int], int] = defaultdict(int)
    entries[(0, 0)] = 1
    for (i, b), v in multigraded_betti(I, characteristic).items():
        if i + 1 > I.n:
            raise InconsistencyError(
                f"Nonzero Betti number in homological degree {i + 1} > n = {I.n}"
            )
        entries[(i + 1, b.degree)] += v
    table = BettiTable(I.n, dict(entries), characteristic)
    for i, bi in enumerate(table.b_vector()):
        if bi.is_finite and int(bi) < i:
            raise InconsistencyError(f"b_{i} = {bi} is less than {i}")
    return table


def trung_invariants(
    B: BettiTable, ideal: bool = False
) -> tuple[tuple[ExtendedDegree, ...], tuple[ExtendedDegree, ...]]:
    """
    Return ``(reg_t, a*_t)`` for ``t = 0, …, n`` from the resolution degrees:
    ``reg_t = max{b_i − i : i ≥ n−t}`` and ``a*_t = max{b_i : i ≥ n−t} − n``.

    :param ideal: compute the values for ``I`` (using ``b_i(I)``) instead of
        ``S/I``
    """
    n = B.n
    bs = B.ideal_b_vector() if ideal else B.b_vector()
    reg_t = tuple(emax(bs[i] - i for i in range(n - t, n + 1)) for t in range(n + 1))
    astar_t = tuple(emax(bs[n - t :]) - n for t in range(n + 1))
    return reg_t, astar_t


def a0_direct(I: MonomialIdeal) -> ExtendedDegree:
    """
    Return ``a_0(S/I)``, the top degree of ``H^0_m(S/I) = I^sat/I``

    :raises DegenerateIdealError: if ``I`` is the unit ideal
    """
    return satiety_quotient(I)
