"""
Local-cohomology degrees and partial regularities of ``S/I`` and ``I``.

For an ideal ``I`` of Borel type, ``a_k(S/I)`` is read off the irredundant
irreducible decomposition (the components with support ``{1, …, n−k}``) or
computed along the sequential chain; both routes, the Betti-number oracle,
the strongly stable fast path and the stable-truncation characterization of
``reg(I)`` can be compared with `compare_routes()`.
"""

from __future__ import annotations
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import Any, Optional, Union
from .borel import (
    first_stable_truncation,
    is_strongly_stable_colon,
    require_borel_type,
    satiety_bg_shortcut,
    satiety_quotient,
    sequential_chain,
)
from .decomposition import Decomposition, IrreducibleComponent, decompose
from .degrees import (
    MINUS_INFINITY,
    ExtendedDegree,
    degrees_to_json,
    emax,
    finite,
    running_max,
)
from .errors import (
    Error,
    InconsistencyError,
    PreconditionError,
    RouteError,
    ScaleGuardError,
)
from .logging import log
from .methods import route_spec
from .monomial import MonomialIdeal, ideal_degree, m_index, require_proper_nonzero
from .oracle import a0_direct, betti_table, trung_invariants
from .parser import format_ideal

Vector = tuple[ExtendedDegree, ...]

#: The routes shipped with ``borelreg``
BUILTIN_ROUTES = ("decomposition", "chain", "oracle")


def ideal_a_vector(a_module: Sequence[ExtendedDegree]) -> Vector:
    """
    Convert ``(a_0(S/I), …, a_n(S/I))`` to ``(a_0(I), …, a_n(I))``:
    ``a_0(I) = −∞``, ``a_i(I) = a_{i−1}(S/I)`` for ``1 ≤ i ≤ n−1``, and
    ``a_n(I) = max{a_{n−1}(S/I), −n}``
    """
    n = len(a_module) - 1
    out = [MINUS_INFINITY]
    out.extend(a_module[i - 1] for i in range(1, n))
    out.append(max(a_module[n - 1], finite(-n)))
    return tuple(out)


def partial_regularities(a: Sequence[ExtendedDegree]) -> Vector:
    """``reg_t = max{a_i + i : i ≤ t}`` for every ``t``"""
    return tuple(running_max(ai + i for i, ai in enumerate(a)))


def partial_astars(a: Sequence[ExtendedDegree]) -> Vector:
    """``a*_t = max{a_i : i ≤ t}`` for every ``t``"""
    return tuple(running_max(a))


@dataclass(frozen=True)
class InvariantReport:
    """The invariants of ``S/I`` and ``I`` as computed by one route"""

    #: Number of variables
    n: int

    #: Name of the route that produced the report
    route: str

    #: ``(a_0(S/I), …, a_n(S/I))``, or `None` if the route cannot produce it
    a_module: Optional[Vector]

    #: ``(a_0(I), …, a_n(I))``, or `None` if the route cannot produce it
    a_ideal: Optional[Vector]

    #: ``reg_t(S/I)`` for ``t = 0, …, n``
    reg_t_module: Vector

    #: ``a*_t(S/I)`` for ``t = 0, …, n``
    astar_t_module: Vector

    #: ``reg_t(I)`` for ``t = 0, …, n``
    reg_t_ideal: Vector

    #: ``a*_t(I)`` for ``t = 0, …, n``
    astar_t_ideal: Vector

    #: ``sat(I) = a_0(S/I)``
    sat: ExtendedDegree

    @classmethod
    def from_a_vector(
        cls, n: int, a_module: Sequence[ExtendedDegree], route: str
    ) -> InvariantReport:
        a = tuple(a_module)
        if len(a) != n + 1:
            raise ValueError(f"a-vector has {len(a)} entries; expected {n + 1}")
        ai = ideal_a_vector(a)
        return cls(
            n=n,
            route=route,
            a_module=a,
            a_ideal=ai,
            reg_t_module=partial_regularities(a),
            astar_t_module=partial_astars(a),
            reg_t_ideal=partial_regularities(ai),
            astar_t_ideal=partial_astars(ai),
            sat=a[0],
        )

    @property
    def reg(self) -> ExtendedDegree:
        """``reg(S/I)``"""
        return self.reg_t_module[self.n]

    @property
    def astar(self) -> ExtendedDegree:
        """``a*(S/I)``"""
        return self.astar_t_module[self.n]

    @property
    def reg_ideal(self) -> ExtendedDegree:
        """``reg(I)``, which equals ``reg(S/I) + 1``"""
        return self.reg_t_ideal[self.n]

    @property
    def astar_ideal(self) -> ExtendedDegree:
        return self.astar_t_ideal[self.n]

    def for_json(self) -> dict[str, Any]:
        return {
            "route": self.route,
            "n": self.n,
            "a_module": _opt_json(self.a_module),
            "a_ideal": _opt_json(self.a_ideal),
            "reg_t_module": degrees_to_json(self.reg_t_module),
            "astar_t_module": degrees_to_json(self.astar_t_module),
            "reg_t_ideal": degrees_to_json(self.reg_t_ideal),
            "astar_t_ideal": degrees_to_json(self.astar_t_ideal),
            "reg": self.reg.to_json(),
            "astar": self.astar.to_json(),
            "sat": self.sat.to_json(),
            "reg_ideal": self.reg_ideal.to_json(),
            "astar_ideal": self.astar_ideal.to_json(),
        }

    def render(self) -> str:
        """Render the report as an aligned text table"""
        headers = [
            "i/t",
            "a_i(S/I)",
            "reg_t(S/I)",
            "a*_t(S/I)",
            "a_i(I)",
            "reg_t(I)",
            "a*_t(I)",
        ]
        rows = [headers]
        for t in range(self.n + 1):
            rows.append(
                [
                    str(t),
                    _cell(self.a_module, t),
                    str(self.reg_t_module[t]),
                    str(self.astar_t_module[t]),
                    _cell(self.a_ideal, t),
                    str(self.reg_t_ideal[t]),
                    str(self.astar_t_ideal[t]),
                ]
            )
        widths = [max(len(r[c]) for r in rows) for c in range(len(headers))]
        lines = [f"route: {self.route}"]
        lines.extend(
            "  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in rows
        )
        lines.append(
            f"reg(S/I) = {self.reg}   a*(S/I) = {self.astar}   sat(I) = {self.sat}"
            f"   reg(I) = {self.reg_ideal}"
        )
        return "\n".join(lines)


def _opt_json(v: Optional[Vector]) -> Optional[list[Union[int, str]]]:
    return None if v is None else degrees_to_json(v)


def _cell(v: Optional[Vector], i: int) -> str:
    return "n/a" if v is None else str(v[i])


def a_vector_from_components(
    components: Sequence[IrreducibleComponent], n: int
) -> Vector:
    """
    ``a_k(S/I) = max{|b| − n : supp(b) = {1, …, n−k}}`` over the components
    ``m^b`` of an ideal of Borel type

    :raises InconsistencyError: if a component's support is not an initial
        segment
    """
    a = [MINUS_INFINITY] * (n + 1)
    for q in components:
        if not q.has_initial_support():
            raise InconsistencyError(
                f"Component {list(q.b)} of an ideal of Borel type does not have"
                " initial-segment support"
            )
        k = n - len(q.supp)
        a[k] = max(a[k], finite(q.total - n))
    return tuple(a)


def a_vector_decomposition(
    I: MonomialIdeal,
    decomposer: Optional[Callable[[MonomialIdeal], Decomposition]] = None,
) -> Vector:
    """
    Compute ``(a_0(S/I), …, a_n(S/I))`` from the irreducible decomposition

    :raises NotBorelTypeError: if ``I`` is not of Borel type
    :raises InconsistencyError: if a component does not have initial-segment
        support
    """
    require_borel_type(I, "The decomposition route")
    D = (decomposer or decompose)(I)
    return a_vector_from_components(D.components, I.n)


def a_vector_chain(I: MonomialIdeal) -> Vector:
    """
    Compute ``(a_0(S/I), …, a_n(S/I))`` along the sequential chain:
    ``a_{n−n_l}(S/I) = s(J_l^sat/J_l) − n + n_l``, and ``−∞`` at every index
    not of that form

    :raises NotBorelTypeError: if ``I`` is not of Borel type
    """
    chain = sequential_chain(I)
    n = I.n
    a = [MINUS_INFINITY] * (n + 1)
    for nl, J in zip(chain.indices, chain.restricted):
        a[n - nl] = satiety_quotient(J) - n + nl
    return tuple(a)


def a_vector_of_component(q: IrreducibleComponent) -> Vector:
    """
    The a-vector of ``S/m^b``: ``|b| − n`` at index ``n − |supp(b)|``, ``−∞``
    elsewhere
    """
    a = [MINUS_INFINITY] * (q.n + 1)
    a[q.n - len(q.supp)] = finite(q.total - q.n)
    return tuple(a)


def per_component_a_vectors(
    I: MonomialIdeal,
) -> list[tuple[IrreducibleComponent, Vector]]:
    """Pair each irreducible component of ``I`` with the a-vector of ``S/q``"""
    return [(q, a_vector_of_component(q)) for q in decompose(I).components]


def decomposition_route(I: MonomialIdeal) -> InvariantReport:
    a = a_vector_decomposition(I)
    return InvariantReport.from_a_vector(I.n, a, "decomposition")


def chain_route(I: MonomialIdeal) -> InvariantReport:
    return InvariantReport.from_a_vector(I.n, a_vector_chain(I), "chain")


def oracle_route(I: MonomialIdeal) -> InvariantReport:
    """
    Compute the partial regularities from Betti numbers.  Individual
    ``a_k`` are not recoverable this way, so ``a_module`` and ``a_ideal`` are
    `None`; ``sat`` is computed directly.
    """
    B = betti_table(I)
    reg_t_module, astar_t_module = trung_invariants(B)
    reg_t_ideal, astar_t_ideal = trung_invariants(B, ideal=True)
    return InvariantReport(
        n=I.n,
        route="oracle",
        a_module=None,
        a_ideal=None,
        reg_t_module=reg_t_module,
        astar_t_module=astar_t_module,
        reg_t_ideal=reg_t_ideal,
        astar_t_ideal=astar_t_ideal,
        sat=a0_direct(I),
    )


def report(
    I: MonomialIdeal, route: Union[str, Callable] = "decomposition"
) -> InvariantReport:
    """
    Compute the full `InvariantReport` of ``I`` by the given route, either the
    name of a route registered in the ``borelreg.routes`` entry point group or
    a callable

    :raises RouteError: if the route is unknown or does not return an
        `InvariantReport`
    """
    require_proper_nonzero(I, "An invariant report")
    func = route_spec(route).load()
    r = func(I)
    if not isinstance(r, InvariantReport):
        raise RouteError(
            f"Route {route!r} returned {type(r).__name__}, not a report"
        )
    log.info("Route %s: reg(S/I) = %s, a*(S/I) = %s", r.route, r.reg, r.astar)
    return r


def strongly_stable_fast(I: MonomialIdeal) -> tuple[Vector, Vector]:
    """
    Return ``(reg_t(I), a*_t(I))`` for ``t = 0, …, n`` of a strongly stable
    ideal straight from its generators:
    ``reg_t(I) = max{deg u : m(u) > n−t}`` and
    ``a*_t(I) = max{deg u + m(u) − n − 1 : m(u) > n−t}``

    :raises PreconditionError: if ``I:(x_1, …, x_i) ≠ I:x_i`` for some ``i``
    """
    if not is_strongly_stable_colon(I):
        raise PreconditionError("The fast path requires a strongly stable ideal")
    n = I.n
    gens = [(u.degree, m_index(u)) for u in I.gens]
    reg_t = tuple(emax(d for d, m in gens if m > n - t) for t in range(n + 1))
    astar_t = tuple(
        emax(d + m - n - 1 for d, m in gens if m > n - t) for t in range(n + 1)
    )
    return reg_t, astar_t


def reg_via_stable_truncation(I: MonomialIdeal) -> ExtendedDegree:
    """
    Return ``reg(I) = min{e ≥ deg(I) : I_{≥e} is stable}``

    :raises NotBorelTypeError: if ``I`` is not of Borel type
    :raises InconsistencyError: if no stable truncation is found below
        ``deg(I) + Σ_i max-exponent(x_i)``
    """
    require_borel_type(I, "The stable-truncation route")
    start = ideal_degree(I)
    cap = start + sum(I.max_exponents())
    e = first_stable_truncation(I, start, cap)
    if e is None:
        raise InconsistencyError(
            f"No stable truncation found for e in {start}..{cap}"
        )
    log.debug("First stable truncation at e = %d (deg(I) = %d)", e, start)
    return finite(e)


@dataclass(frozen=True)
class QuantityCheck:
    """The values of one invariant as computed by each route"""

    name: str
    values: dict[str, Any] = field(hash=False)

    @property
    def equal(self) -> bool:
        return len(set(self.values.values())) <= 1

    def for_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "equal": self.equal,
            "values": {k: _value_json(v) for k, v in self.values.items()},
        }


def _value_json(v: Any) -> Any:
    if isinstance(v, ExtendedDegree):
        return v.to_json()
    return degrees_to_json(v)


@dataclass(frozen=True)
class RouteComparison:
    """
    The outcome of `compare_routes()`.  Disagreements and route failures are
    recorded here rather than raised.
    """

    ideal: MonomialIdeal
    components: Optional[list[list[int]]]
    checks: tuple[QuantityCheck, ...]
    #: Route failures, as ``"ErrorClass: message"``
    errors: dict[str, str] = field(hash=False)
    #: Routes not run because of the oracle's scale guard
    skipped: dict[str, str] = field(hash=False)
    #: The full report of every route that ran
    reports: dict[str, InvariantReport] = field(hash=False, default_factory=dict)

    @property
    def agree(self) -> bool:
        return not self.errors and all(c.equal for c in self.checks)

    def disagreements(self) -> list[str]:
        return [c.name for c in self.checks if not c.equal]

    def for_json(self) -> dict[str, Any]:
        return {
            "ideal": format_ideal(self.ideal),
            "agree": self.agree,
            "components": self.components,
            "quantities": [c.for_json() for c in self.checks],
            "errors": self.errors,
            "skipped": self.skipped,
        }


def compare_routes(
    I: MonomialIdeal,
    decomposer: Optional[Callable[[MonomialIdeal], Decomposition]] = None,
    oracle: bool = True,
) -> RouteComparison:
    """
    Compute every quantity of the invariant report by every applicable route
    and record whether the routes agree.

    :param decomposer: the decomposition function used by the decomposition
        route; defaults to `decompose()`
    :param oracle: whether to include the Betti-number oracle
    :raises NotBorelTypeError: if ``I`` is not of Borel type
    """
    require_borel_type(I, "Route comparison")
    errors: dict[str, str] = {}
    skipped: dict[str, str] = {}

    def attempt(name: str, func: Callable[[], Any]) -> Any:
        try:
            return func()
        except ScaleGuardError as e:
            skipped[name] = str(e)
        except PreconditionError as e:
            log.debug("Skipping %s: %s", name, e)
        except Error as e:
            log.warning("Route %s failed: %s: %s", name, type(e).__name__, e)
            errors[name] = f"{type(e).__name__}: {e}"
        return None

    reports: dict[str, InvariantReport] = {}
    D: Optional[Decomposition] = attempt(
        "decomposition", lambda: (decomposer or decompose)(I)
    )
    if D is not None:
        components = D.components
        a = attempt(
            "decomposition", lambda: a_vector_from_components(components, I.n)
        )
        if a is not None:
            reports["decomposition"] = InvariantReport.from_a_vector(
                I.n, a, "decomposition"
            )
    chain = attempt("chain", lambda: chain_route(I))
    if chain is not None:
        reports["chain"] = chain
    if oracle:
        o = attempt("oracle", lambda: oracle_route(I))
        if o is not None:
            reports["oracle"] = o

    def collect(attr: str) -> dict[str, Any]:
        return {
            name: getattr(r, attr)
            for name, r in reports.items()
            if getattr(r, attr) is not None
        }

    checks = [QuantityCheck("a_module", collect("a_module"))]
    for attr in ("reg_t_module", "astar_t_module"):
        checks.append(QuantityCheck(attr, collect(attr)))
    fast = attempt("strongly_stable", lambda: strongly_stable_fast(I))
    for pos, attr in enumerate(("reg_t_ideal", "astar_t_ideal")):
        values = collect(attr)
        if fast is not None:
            values["strongly_stable"] = fast[pos]
        checks.append(QuantityCheck(attr, values))
    sat = collect("sat")
    sat["satiety"] = satiety_quotient(I)
    shortcut = attempt("satiety_shortcut", lambda: satiety_bg_shortcut(I))
    if shortcut is not None:
        sat["satiety_shortcut"] = shortcut
    checks.append(QuantityCheck("sat", sat))
    reg_ideal = collect("reg_ideal")
    truncation = attempt("stable_truncation", lambda: reg_via_stable_truncation(I))
    if truncation is not None:
        reg_ideal["stable_truncation"] = truncation
    checks.append(QuantityCheck("reg_ideal", reg_ideal))
    result = RouteComparison(
        ideal=I,
        components=D.exponent_rows() if D is not None else None,
        checks=tuple(checks),
        errors=errors,
        skipped=skipped,
        reports=reports,
    )
    if result.agree:
        log.info("All routes agree on %s", format_ideal(I))
    else:
        log.warning(
            "Routes disagree on %s: %s",
            format_ideal(I),
            ", ".join(result.disagreements() + sorted(errors)),
        )
    return result