from __future__ import annotations
from operator import attrgetter
from pathlib import Path
from typing import List, Optional, Union
from pydantic import BaseModel
import pytest
from borelreg.decomposition import Decomposition, IrreducibleComponent, decompose
from borelreg.degrees import MINUS_INFINITY, ExtendedDegree, finite
from borelreg.errors import (
    InconsistencyError,
    NotBorelTypeError,
    PreconditionError,
    RouteError,
)
from borelreg.invariants import (
    InvariantReport,
    a_vector_chain,
    a_vector_decomposition,
    a_vector_from_components,
    a_vector_of_component,
    compare_routes,
    ideal_a_vector,
    partial_astars,
    partial_regularities,
    per_component_a_vectors,
    reg_via_stable_truncation,
    report,
    strongly_stable_fast,
)
from borelreg.monomial import MonomialIdeal
from borelreg.parser import parse_ideal

DATA_DIR = Path(__file__).with_name("data")

EX27 = "vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3"

Degree = Union[int, str]


class ReferenceCase(BaseModel):
    ideal: str
    components: List[List[int]]
    a_module: List[Degree]
    a_ideal: List[Degree]
    reg_t_module: List[Degree]
    astar_t_module: List[Degree]
    reg_t_ideal: List[Degree]
    astar_t_ideal: List[Degree]
    sat: Degree
    reg_ideal: Degree
    betti: Optional[List[List[int]]] = None


def load_cases() -> list[ReferenceCase]:
    return [
        ReferenceCase.model_validate_json(p.read_text(encoding="utf-8"))
        for p in CASE_PATHS
    ]


CASE_PATHS = sorted((DATA_DIR / "ideals").glob("*.json"))
CASES = load_cases()
CASE_IDS = list(map(attrgetter("stem"), CASE_PATHS))


def vec(values: list[Degree]) -> tuple[ExtendedDegree, ...]:
    return tuple(ExtendedDegree.from_json(v) for v in values)


@pytest.mark.parametrize("case", CASES, ids=CASE_IDS)
def test_decomposition_route(case: ReferenceCase) -> None:
    I = parse_ideal(case.ideal)
    assert decompose(I).exponent_rows() == case.components
    assert a_vector_decomposition(I) == vec(case.a_module)
    r = report(I)
    assert r.route == "decomposition"
    assert r.a_module == vec(case.a_module)
    assert r.a_ideal == vec(case.a_ideal)
    assert r.reg_t_module == vec(case.reg_t_module)
    assert r.astar_t_module == vec(case.astar_t_module)
    assert r.reg_t_ideal == vec(case.reg_t_ideal)
    assert r.astar_t_ideal == vec(case.astar_t_ideal)
    assert r.sat == ExtendedDegree.from_json(case.sat)
    assert r.reg_ideal == ExtendedDegree.from_json(case.reg_ideal)
    assert r.reg == r.reg_t_module[-1]
    assert r.reg_ideal == r.reg + 1


@pytest.mark.parametrize("case", CASES, ids=CASE_IDS)
def test_chain_route(case: ReferenceCase) -> None:
    I = parse_ideal(case.ideal)
    assert a_vector_chain(I) == vec(case.a_module)
    assert report(I, "chain") == InvariantReport.from_a_vector(
        I.n, vec(case.a_module), "chain"
    )


@pytest.mark.parametrize("case", CASES, ids=CASE_IDS)
def test_stable_truncation_route(case: ReferenceCase) -> None:
    I = parse_ideal(case.ideal)
    assert reg_via_stable_truncation(I) == ExtendedDegree.from_json(case.reg_ideal)


def test_example_report_json() -> None:
    r = report(parse_ideal(EX27))
    assert r.for_json() == {
        "route": "decomposition",
        "n": 3,
        "a_module": [8, 2, "-inf", "-inf"],
        "a_ideal": ["-inf", 8, 2, -3],
        "reg_t_module": [8, 8, 8, 8],
        "astar_t_module": [8, 8, 8, 8],
        "reg_t_ideal": ["-inf", 9, 9, 9],
        "astar_t_ideal": ["-inf", 8, 8, 8],
        "reg": 8,
        "astar": 8,
        "sat": 8,
        "reg_ideal": 9,
        "astar_ideal": 8,
    }


def test_example_report_table() -> None:
    table = report(parse_ideal(EX27)).render()
    lines = table.splitlines()
    assert lines[0] == "route: decomposition"
    assert lines[1].split() == [
        "i/t",
        "a_i(S/I)",
        "reg_t(S/I)",
        "a*_t(S/I)",
        "a_i(I)",
        "reg_t(I)",
        "a*_t(I)",
    ]
    assert lines[2].split() == ["0", "8", "8", "8", "−∞", "−∞", "−∞"]
    assert lines[4].split() == ["2", "−∞", "8", "8", "2", "9", "8"]
    assert lines[-1] == (
        "reg(S/I) = 8   a*(S/I) = 8   sat(I) = 8   reg(I) = 9"
    )
    assert "-inf" not in table


def test_ideal_a_vector() -> None:
    assert ideal_a_vector(vec([8, 2, "-inf", "-inf"])) == vec(["-inf", 8, 2, -3])
    assert ideal_a_vector(vec(["-inf", 1, "-inf"])) == vec(["-inf", "-inf", 1])
    assert ideal_a_vector(vec([0, "-inf", 5])) == vec(["-inf", 0, -2])


def test_partial_invariants() -> None:
    a = vec(["-inf", 5, 1, "-inf"])
    assert partial_regularities(a) == vec(["-inf", 6, 6, 6])
    assert partial_astars(a) == vec(["-inf", 5, 5, 5])


def test_from_a_vector_wrong_length() -> None:
    with pytest.raises(ValueError):
        InvariantReport.from_a_vector(3, vec([1, 2]), "decomposition")


def test_a_vector_from_components_non_initial() -> None:
    with pytest.raises(InconsistencyError):
        a_vector_from_components([IrreducibleComponent((2, 0, 1))], 3)


def test_not_borel() -> None:
    I = parse_ideal("vars x,y,z; x*z, y")
    for func in (a_vector_decomposition, a_vector_chain, reg_via_stable_truncation):
        with pytest.raises(NotBorelTypeError) as excinfo:
            func(I)
        assert excinfo.value.failing_index == 2


def test_per_component_a_vectors() -> None:
    pairs = per_component_a_vectors(parse_ideal(EX27))
    assert [(list(q.b), a) for q, a in pairs] == [
        ([2, 3, 0], vec(["-inf", 2, "-inf", "-inf"])),
        ([4, 4, 3], vec([8, "-inf", "-inf", "-inf"])),
    ]
    assert a_vector_of_component(IrreducibleComponent((2, 2, 10))) == vec(
        [11, "-inf", "-inf", "-inf"]
    )


@pytest.mark.parametrize(
    "text",
    [
        "vars x,y,z; x^2, x*y, y^3",
        "vars x,y; x, y",
        "vars x,y; x^2, x*y, y^2",
        "vars x,y,z; x, y^2, y*z, z^3",
        "vars x,y,z; x^2, x*y, x*z, y^2, y*z, z^2",
    ],
)
def test_strongly_stable_fast(text: str) -> None:
    I = parse_ideal(text)
    reg_t, astar_t = strongly_stable_fast(I)
    r = report(I)
    assert reg_t == r.reg_t_ideal
    assert astar_t == r.astar_t_ideal


def test_strongly_stable_fast_example() -> None:
    reg_t, astar_t = strongly_stable_fast(parse_ideal("vars x,y,z; x^2, x*y, y^3"))
    assert reg_t == vec(["-inf", "-inf", 3, 3])
    assert astar_t == vec(["-inf", "-inf", 1, 1])


def test_strongly_stable_fast_precondition() -> None:
    with pytest.raises(PreconditionError):
        strongly_stable_fast(parse_ideal(EX27))


def test_report_custom_route() -> None:
    I = parse_ideal(EX27)

    def doubled(J: MonomialIdeal) -> InvariantReport:
        a = a_vector_decomposition(J)
        return InvariantReport.from_a_vector(J.n, a, "custom")

    r = report(I, doubled)
    assert r.route == "custom"
    assert r.reg == finite(8)


def test_report_bad_route_return() -> None:
    with pytest.raises(RouteError) as excinfo:
        report(parse_ideal(EX27), lambda _: 42)
    assert str(excinfo.value).endswith("returned int, not a report")


def test_report_unknown_route() -> None:
    with pytest.raises(RouteError) as excinfo:
        report(parse_ideal(EX27), "chian")
    assert str(excinfo.value) == "Unknown route 'chian' (Did you mean: chain?)"


def test_compare_routes_example() -> None:
    verdict = compare_routes(parse_ideal(EX27))
    assert verdict.agree
    assert verdict.errors == {}
    assert verdict.skipped == {}
    assert verdict.disagreements() == []
    assert verdict.components == [[2, 3, 0], [4, 4, 3]]
    assert set(verdict.reports) == {"decomposition", "chain", "oracle"}
    checks = {c.name: c for c in verdict.checks}
    assert set(checks) == {
        "a_module",
        "reg_t_module",
        "astar_t_module",
        "reg_t_ideal",
        "astar_t_ideal",
        "sat",
        "reg_ideal",
    }
    assert checks["sat"].values == {
        "decomposition": finite(8),
        "chain": finite(8),
        "oracle": finite(8),
        "satiety": finite(8),
    }
    assert checks["reg_ideal"].values["stable_truncation"] == finite(9)
    assert set(checks["a_module"].values) == {"decomposition", "chain"}
    data = verdict.for_json()
    assert data["agree"] is True
    assert data["ideal"] == "vars x,y,z; x^4, y^4, x^2*z^3, y^3*z^3"


def test_compare_routes_strongly_stable() -> None:
    verdict = compare_routes(parse_ideal("vars x,y,z; x^2, x*y, y^3"))
    assert verdict.agree
    checks = {c.name: c for c in verdict.checks}
    assert checks["reg_t_ideal"].values["strongly_stable"] == vec(
        ["-inf", "-inf", 3, 3]
    )
    assert checks["sat"].values["satiety_shortcut"] == MINUS_INFINITY


def test_compare_routes_scale_guard(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("BOREL_SCALE_GUARD", "3,3")
    verdict = compare_routes(parse_ideal(EX27))
    assert verdict.agree
    assert list(verdict.skipped) == ["oracle"]
    assert "oracle" not in verdict.reports


def test_compare_routes_without_oracle() -> None:
    verdict = compare_routes(parse_ideal(EX27), oracle=False)
    assert verdict.agree
    assert set(verdict.reports) == {"decomposition", "chain"}


def corrupted(I: MonomialIdeal) -> Decomposition:
    D = decompose(I)
    return Decomposition(
        tuple(
            IrreducibleComponent(tuple(e + 1 if e else 0 for e in q.b))
            for q in D.components
        ),
        I,
    )


def test_compare_routes_corrupted_decomposition() -> None:
    verdict = compare_routes(parse_ideal(EX27), decomposer=corrupted)
    assert not verdict.agree
    assert "a_module" in verdict.disagreements()
    checks = {c.name: c for c in verdict.checks}
    assert checks["a_module"].values["decomposition"] == vec([11, 4, "-inf", "-inf"])
    assert checks["a_module"].values["chain"] == vec([8, 2, "-inf", "-inf"])
    assert verdict.for_json()["agree"] is False


def test_compare_routes_route_error() -> None:
    def non_initial(I: MonomialIdeal) -> Decomposition:
        return Decomposition((IrreducibleComponent((2, 0, 1)),), I)

    verdict = compare_routes(parse_ideal(EX27), decomposer=non_initial)
    assert not verdict.agree
    assert list(verdict.errors) == ["decomposition"]
    assert verdict.errors["decomposition"].startswith("InconsistencyError: ")


def test_compare_routes_not_borel() -> None:
    with pytest.raises(NotBorelTypeError):
        compare_routes(parse_ideal("vars x,y; y"))
