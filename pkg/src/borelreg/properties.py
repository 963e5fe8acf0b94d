"""
The property runner: every algebraic law ``borelreg`` relies on, checked on
a deterministic stream of random ideals of Borel type plus a few fixed
families.  Failures are reported, never raised.
"""

from __future__ import annotations
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from functools import partial
from itertools import product as cartesian
from math import comb
from typing import Any, Optional
from .borel import (
    first_stable_truncation,
    is_borel_type,
    is_stable,
    is_strongly_stable_colon,
    satiety_bg_shortcut,
    satiety_quotient,
    sequential_chain,
)
from .config import FuzzConfig
from .decomposition import (
    Decomposition,
    IrreducibleComponent,
    decompose,
    is_irredundant,
    recompose,
)
from .degrees import MINUS_INFINITY, ExtendedDegree, emax
from .errors import Error, PreconditionError, ScaleGuardError
from .fuzz import FuzzStats, SplitMix64, fuzz_borel, fuzz_pairs
from .invariants import (
    a_vector_decomposition,
    compare_routes,
    per_component_a_vectors,
    report,
)
from .logging import log
from .monomial import (
    Monomial,
    MonomialIdeal,
    colon_prefix_saturate,
    colon_var_saturate,
    hilbert_count,
    ideal_degree,
    ideal_sum,
    intersect,
    iterate_colon_prefix,
    member,
    minimalize,
    product,
    truncate,
)
from .oracle import DEFAULT_PRIME, betti_table
from .parser import format_ideal, ideal_to_json, parse_ideal

#: Ideals that are not of Borel type, searched for stable truncations
NON_BOREL_CURATED = (
    "vars x,y; y",
    "vars x,y; y^2",
    "vars x,y; x*y",
    "vars x,y; x^2*y",
    "vars x,y,z; x*z, y",
    "vars x,y,z; z",
    "vars x,y,z; y, z",
    "vars x,y,z; x, z",
    "vars x,y,z; x^2, z^3",
    "vars x,y,z; y^2, z",
    "vars x,y,z; x*y*z",
    "vars x,y,z; x*z",
    "vars x,y,z; y*z",
    "vars x,y,z; x^2, x*y, y*z",
    "vars x,y,z; x^3, y^2*z",
    "vars x,y,z; y^3, z^2",
    "vars x,y,z,w; w",
    "vars x,y,z,w; x, y, w",
    "vars x,y,z,w; x*w, y*w, z*w",
    "vars x,y; x^2*y^3, x^3*y^2",
)

#: The field-independence check runs on every this-many-th sample
FIELD_CHECK_STRIDE = 10

#: How many degrees past a truncation degree the truncation contract is
#: checked
TRUNCATION_HORIZON = 3

#: Bounds of the irreducible satiety sweep: every full-support exponent
#: vector with at most this many variables and entries at most this large
SWEEP_MAX_VARS = 5
SWEEP_MAX_EXP = 6


@dataclass
class PropertyResult:
    """Tally for one property"""

    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    #: The first failing case, serialized
    counterexample: Optional[dict[str, Any]] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def for_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "counterexample": self.counterexample,
        }


@dataclass
class PropertyReport:
    config: FuzzConfig
    results: dict[str, PropertyResult] = field(default_factory=dict)
    sample_stats: FuzzStats = field(default_factory=FuzzStats)
    pair_stats: FuzzStats = field(default_factory=FuzzStats)
    #: Cases of the ``a*`` sum inequality that hold with equality
    astar_sum_equal: int = 0
    astar_sum_total: int = 0

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results.values())

    def result(self, name: str) -> PropertyResult:
        try:
            return self.results[name]
        except KeyError:
            r = self.results[name] = PropertyResult(name)
            return r

    def record(
        self, name: str, ok: bool, counterexample: Callable[[], dict[str, Any]]
    ) -> None:
        r = self.result(name)
        if ok:
            r.passed += 1
        else:
            r.failed += 1
            if r.counterexample is None:
                r.counterexample = counterexample()
                log.warning("Property %s failed: %s", name, r.counterexample)

    def skip(self, name: str) -> None:
        self.result(name).skipped += 1

    def for_json(self) -> dict[str, Any]:
        rate: Optional[float]
        if self.astar_sum_total:
            rate = self.astar_sum_equal / self.astar_sum_total
        else:
            rate = None
        return {
            "ok": self.ok,
            "config": self.config.for_json(),
            "properties": [r.for_json() for r in self.results.values()],
            "astar_sum_equality": {
                "equal": self.astar_sum_equal,
                "total": self.astar_sum_total,
                "rate": rate,
            },
            "samples": self.sample_stats.for_json(),
            "pairs": self.pair_stats.for_json(),
        }


def _bundle(I: MonomialIdeal, **extra: Any) -> dict[str, Any]:
    data: dict[str, Any] = {"ideal": format_ideal(I), "json": ideal_to_json(I)}
    for k, v in extra.items():
        data[k] = _jsonable(v)
    return data


def _jsonable(v: Any) -> Any:
    if isinstance(v, ExtendedDegree):
        return v.to_json()
    elif isinstance(v, MonomialIdeal):
        return format_ideal(v)
    elif isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    elif isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    else:
        return v


def _monomials_up_to(
    rng: SplitMix64, n: int, bound: int, count: int
) -> Iterator[Monomial]:
    for _ in range(count):
        yield Monomial(tuple(rng.randint(0, bound) for _ in range(n)))


def check_sample(
    rep: PropertyReport,
    index: int,
    I: MonomialIdeal,
    decomposer: Optional[Callable[[MonomialIdeal], Decomposition]] = None,
) -> None:
    """Run every single-ideal property on ``I``"""
    n = I.n
    rng = SplitMix64(rep.config.seed + index)

    # Ideal arithmetic
    rep.record(
        "round_trip",
        parse_ideal(format_ideal(I)) == I,
        lambda: _bundle(I, printed=format_ideal(I)),
    )
    rep.record(
        "lattice_laws",
        intersect(I, I) == I
        and ideal_sum(I, MonomialIdeal.zero(n)) == I
        and minimalize(I.gens, n) == I,
        lambda: _bundle(I),
    )
    rep.record(
        "saturate_fixed_point",
        all(
            colon_var_saturate(colon_var_saturate(I, i), i) == colon_var_saturate(I, i)
            for i in range(1, n + 1)
        ),
        lambda: _bundle(I),
    )
    rep.record(
        "prefix_saturation_iterates",
        all(
            colon_prefix_saturate(I, i) == iterate_colon_prefix(I, i)
            for i in range(1, n + 1)
        ),
        lambda: _bundle(I),
    )
    e = rng.randint(0, ideal_degree(I) + 2)
    T = truncate(I, e)
    rep.record(
        "truncation_contract",
        all(g.degree >= e for g in T.gens)
        and all(
            hilbert_count(T, d) == hilbert_count(I, d)
            for d in range(e, e + TRUNCATION_HORIZON + 1)
        ),
        lambda: _bundle(I, e=e, truncation=T),
    )

    # Decomposition
    try:
        D = (decomposer or decompose)(I)
    except Error as exc:
        rep.record("recomposition", False, lambda: _bundle(I, error=str(exc)))
        return
    rep.record(
        "recomposition",
        recompose(D) == I and is_irredundant(D.components, I),
        lambda: _bundle(I, components=D.exponent_rows()),
    )
    rep.record(
        "components_contain_ideal",
        all(q.contains_ideal(I) for q in D.components),
        lambda: _bundle(I, components=D.exponent_rows()),
    )
    exps = {e for g in I.gens for e in g.exps}
    rep.record(
        "component_exponents_from_generators",
        all(b in exps for q in D.components for b in q.b if b > 0),
        lambda: _bundle(I, components=D.exponent_rows()),
    )

    # Routes and the invariants they share
    verdict = compare_routes(I, decomposer=decomposer)
    rep.record("route_agreement", verdict.agree, verdict.for_json)
    try:
        r = report(I, "chain")
    except Error as exc:
        rep.record("report", False, lambda: _bundle(I, error=str(exc)))
        return
    a = r.a_module
    assert a is not None
    rep.record(
        "monotone_tails",
        all(
            v[t] <= v[t + 1]
            for v in (r.reg_t_module, r.astar_t_module)
            for t in range(n)
        ),
        lambda: _bundle(I, reg_t=r.reg_t_module, astar_t=r.astar_t_module),
    )
    chain = sequential_chain(I)
    rep.record(
        "chain_indices",
        set(chain.indices)
        == {n - k for k, ak in enumerate(a) if ak != MINUS_INFINITY},
        lambda: _bundle(I, indices=list(chain.indices), a=a),
    )
    per_component = per_component_a_vectors(I)
    combined = tuple(
        emax(vec[k] for _, vec in per_component) for k in range(n + 1)
    )
    rep.record(
        "component_max",
        combined == a,
        lambda: _bundle(I, a=a, combined=combined),
    )
    sat = satiety_quotient(I)
    rep.record(
        "satiety_component_max",
        sat == emax(satiety_quotient(q.ideal()) for q in D.components),
        lambda: _bundle(I, sat=sat),
    )
    try:
        shortcut = satiety_bg_shortcut(I)
    except PreconditionError:
        rep.skip("satiety_shortcut")
    else:
        rep.record(
            "satiety_shortcut",
            shortcut == sat,
            lambda: _bundle(I, shortcut=shortcut, sat=sat),
        )
    rep.record(
        "strongly_stable_is_borel",
        not is_strongly_stable_colon(I) or is_borel_type(I),
        lambda: _bundle(I),
    )
    reg_ideal = int(r.reg_ideal)
    rep.record(
        "stable_at_regularity",
        all(is_stable(truncate(I, reg_ideal + k)) for k in range(3)),
        lambda: _bundle(I, reg_ideal=reg_ideal),
    )

    # Oracle over a prime field
    if index % FIELD_CHECK_STRIDE == 0:
        try:
            rational = betti_table(I)
            modular = betti_table(I, characteristic=DEFAULT_PRIME)
        except Error as exc:
            log.debug("Skipping field independence: %s", exc)
            rep.skip("field_independence")
        else:
            rep.record(
                "field_independence",
                rational.entries == modular.entries,
                lambda: _bundle(
                    I,
                    rational=rational.for_json(),
                    modular=modular.for_json(),
                ),
            )

    # Membership against divisibility by the generators
    for u in _monomials_up_to(rng, n, max(I.max_exponents()), 5):
        rep.record(
            "membership_coherence",
            member(u, I) == any(g.divides(u) for g in I.gens),
            partial(_bundle, I, u=list(u.exps)),
        )


def check_pair(
    rep: PropertyReport, index: int, K: MonomialIdeal, L: MonomialIdeal
) -> None:
    """Run every two-ideal property on ``(K, L)``"""
    n = K.n
    meet = intersect(K, L)
    join = ideal_sum(K, L)
    prod = product(K, L)
    rng = SplitMix64(rep.config.seed + index)
    bound = max(K.max_exponents() + L.max_exponents())
    for u in _monomials_up_to(rng, n, bound, 5):
        rep.record(
            "membership_coherence",
            (member(u, meet) == (member(u, K) and member(u, L)))
            and (member(u, join) == (member(u, K) or member(u, L))),
            partial(_bundle, K, other=L, u=list(u.exps)),
        )
    rep.record(
        "lattice_laws",
        intersect(intersect(K, L), meet) == meet
        and intersect(K, intersect(L, K)) == intersect(intersect(K, L), K)
        and product(K, L) == product(L, K),
        lambda: _bundle(K, other=L),
    )
    rep.record(
        "closure",
        is_borel_type(meet) and is_borel_type(join) and is_borel_type(prod),
        lambda: _bundle(K, other=L),
    )
    aK = a_vector_decomposition(K)
    aL = a_vector_decomposition(L)
    aM = a_vector_decomposition(meet)
    rep.record(
        "intersection_bound",
        all(aM[i] <= max(aK[i], aL[i]) for i in range(n + 1)),
        lambda: _bundle(K, other=L, a_meet=aM, a_K=aK, a_L=aL),
    )
    rK = report(K)
    rL = report(L)
    rJ = report(join)
    for t in range(n + 1):
        u = min(t + 1, n)
        reg_bound = max(
            rK.reg_t_module[t],
            rL.reg_t_module[t],
            rK.reg_t_module[u] - 1,
            rL.reg_t_module[u] - 1,
        )
        rep.record(
            "sum_reg_bound",
            rJ.reg_t_module[t] <= reg_bound,
            partial(_bundle, K, other=L, t=t, reg_t_sum=rJ.reg_t_module[t]),
        )
        astar_bound = max(rK.astar_t_module[u], rL.astar_t_module[u])
        holds = rJ.astar_t_module[t] <= astar_bound
        rep.record(
            "sum_astar_bound",
            holds,
            partial(_bundle, K, other=L, t=t, astar_t_sum=rJ.astar_t_module[t]),
        )
        rep.astar_sum_total += 1
        if rJ.astar_t_module[t] == astar_bound:
            rep.astar_sum_equal += 1


def check_fixed_families(rep: PropertyReport) -> None:
    """Properties on fixed ideals that do not depend on the fuzzer"""
    for text in NON_BOREL_CURATED:
        I = parse_ideal(text)
        horizon = 2 * ideal_degree(I) + I.n
        e = first_stable_truncation(I, 1, horizon)
        rep.record(
            "non_borel_unstable",
            not is_borel_type(I) and e is None,
            partial(_bundle, I, horizon=horizon, stable_at=e),
        )
    K = parse_ideal("vars x,y,z; x^2, y^2, z^10")
    L = parse_ideal("vars x,y,z; x^4, y^4")
    aK = a_vector_decomposition(K)
    aM = a_vector_decomposition(intersect(K, L))
    rep.record(
        "intersection_witness",
        aK[0] == ExtendedDegree(11) and aM[0] == MINUS_INFINITY,
        lambda: _bundle(K, other=L, a_K=aK, a_meet=aM),
    )
    for n, exps in irreducible_sweep_cases(SWEEP_MAX_VARS, SWEEP_MAX_EXP):
        q = IrreducibleComponent(exps)
        rep.record(
            "irreducible_satiety",
            satiety_quotient(q.ideal()) == ExtendedDegree(q.total - n),
            partial(dict, b=list(exps)),
        )
    for k in range(1, SWEEP_MAX_VARS + 1):
        I = MonomialIdeal(
            k, tuple(Monomial.variable(k, i, i + 1) for i in range(1, k + 1))
        )
        try:
            B = betti_table(I)
        except ScaleGuardError as exc:
            log.debug("Skipping Koszul check: %s", exc)
            rep.skip("koszul_binomials")
            continue
        totals = [
            sum(v for (i, _), v in B.entries.items() if i == h) for h in range(k + 1)
        ]
        rep.record(
            "koszul_binomials",
            totals == [comb(k, h) for h in range(k + 1)],
            partial(_bundle, I, betti=B.for_json(), totals=totals),
        )


def irreducible_sweep_cases(
    max_vars: int, max_exp: int
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield every full-support exponent vector with the given bounds"""
    for n in range(1, max_vars + 1):
        for exps in cartesian(range(1, max_exp + 1), repeat=n):
            yield n, exps


def run_properties(
    cfg: FuzzConfig,
    decomposer: Optional[Callable[[MonomialIdeal], Decomposition]] = None,
) -> PropertyReport:
    """
    Run every property on ``cfg.count`` fuzzed ideals, ``cfg.pair_count``
    fuzzed pairs, and the fixed families

    :param decomposer: replacement decomposition function, used to confirm
        that a broken route is caught
    """
    rep = PropertyReport(cfg)
    if cfg.count == 0 and cfg.pair_count == 0:
        log.warning("No samples requested; the fuzzed properties pass vacuously")
    for index, I in enumerate(fuzz_borel(cfg, rep.sample_stats)):
        log.debug("Sample %d: %s", index, format_ideal(I))
        check_sample(rep, index, I, decomposer)
    for index, (K, L) in enumerate(fuzz_pairs(cfg, rep.pair_stats)):
        check_pair(rep, index, K, L)
    check_fixed_families(rep)
    rep.record(
        "closure_under_fuzzing",
        not rep.sample_stats.suspected and not rep.pair_stats.suspected,
        lambda: {
            "suspected": rep.sample_stats.suspected + rep.pair_stats.suspected
        },
    )
    return rep

