from __future__ import annotations
from itertools import product
from typing import Optional
import pytest
from borelreg.borel import (
    borel_failure_index,
    first_stable_truncation,
    is_borel_type,
    is_stable,
    is_strongly_stable_colon,
    require_borel_type,
    satiety_bg_shortcut,
    satiety_quotient,
    satiety_witness,
    sequential_chain,
)
from borelreg.decomposition import IrreducibleComponent
from borelreg.degrees import MINUS_INFINITY, finite
from borelreg.errors import (
    DegenerateIdealError,
    NotBorelTypeError,
    PreconditionError,
)
from borelreg.monomial import Monomial, MonomialIdeal
from borelreg.parser import parse_ideal

EX27 = "vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3"


@pytest.mark.parametrize(
    "text,failing_index",
    [
        (EX27, None),
        ("vars x,y,z; x^2, x*y, y^3", None),
        ("vars x,y; x, y", None),
        ("vars x,y; x^3", None),
        ("vars x,y,z; x^4, y^4, z^3", None),
        ("vars x,y; y", 2),
        ("vars x,y; x*y", 2),
        ("vars x,y,z; x*z, y", 2),
        ("vars x,y,z; x, z", 3),
        ("vars x,y,z; x^2, y*z", 3),
    ],
)
def test_borel_type(text: str, failing_index: Optional[int]) -> None:
    I = parse_ideal(text)
    assert borel_failure_index(I) == failing_index
    assert is_borel_type(I) is (failing_index is None)


def test_require_borel_type() -> None:
    with pytest.raises(NotBorelTypeError) as excinfo:
        require_borel_type(parse_ideal("vars x,y; y"), "Testing")
    assert excinfo.value.failing_index == 2
    assert str(excinfo.value) == (
        "Testing requires an ideal of Borel type, but"
        " I:(x_1,...,x_2)^inf != I:x_2^inf"
    )
    require_borel_type(parse_ideal(EX27), "Testing")


@pytest.mark.parametrize(
    "I", [MonomialIdeal.zero(2), MonomialIdeal.unit(2)], ids=["zero", "unit"]
)
def test_borel_type_degenerate(I: MonomialIdeal) -> None:
    with pytest.raises(DegenerateIdealError):
        is_borel_type(I)


@pytest.mark.parametrize(
    "text,stable,strongly",
    [
        ("vars x,y,z; x^2, x*y, y^3", True, True),
        ("vars x,y; x, y", True, True),
        ("vars x,y; x^2, x*y, y^2", True, True),
        (EX27, False, False),
        ("vars x,y; y", False, False),
        ("vars x,y,z; x^4, y^4, z^3", False, False),
    ],
)
def test_stability(text: str, stable: bool, strongly: bool) -> None:
    I = parse_ideal(text)
    assert is_stable(I) is stable
    assert is_strongly_stable_colon(I) is strongly
    if strongly:
        assert is_borel_type(I)


def test_first_stable_truncation() -> None:
    I = parse_ideal("vars x,y,z; x^2, x*y, y^3")
    assert first_stable_truncation(I, 1, 5) == 1
    assert first_stable_truncation(parse_ideal("vars x,y; y"), 1, 8) is None
    assert first_stable_truncation(parse_ideal(EX27), 6, 20) == 9


def test_sequential_chain_example() -> None:
    chain = sequential_chain(parse_ideal(EX27))
    assert chain.indices == (3, 2)
    assert chain.length == 2
    assert chain.ideals[1] == parse_ideal("vars x,y,z; x^2, y^3")
    assert chain.ideals[2].is_unit
    assert chain.restricted[0] == parse_ideal(EX27)
    assert chain.restricted[1] == parse_ideal("vars x,y; x^2, y^3")
    assert satiety_quotient(chain.restricted[1]) == finite(3)
    assert chain.for_json() == {
        "ideals": [
            [[4, 0, 0], [0, 4, 0], [2, 0, 3], [0, 3, 3]],
            [[2, 0, 0], [0, 3, 0]],
            [[0, 0, 0]],
        ],
        "indices": [3, 2],
        "restricted": [
            {"n": 3, "gens": [[4, 0, 0], [0, 4, 0], [2, 0, 3], [0, 3, 3]]},
            {"n": 2, "gens": [[2, 0], [0, 3]]},
        ],
    }


def test_sequential_chain_strictly_increasing() -> None:
    chain = sequential_chain(parse_ideal("vars x,y,z; x^3, x^2*y, x*y^2*z, y^4"))
    assert list(chain.indices) == sorted(chain.indices, reverse=True)
    for lower, upper in zip(chain.ideals, chain.ideals[1:]):
        assert lower != upper
        assert all(g in upper for g in lower.gens)


def test_sequential_chain_not_borel() -> None:
    with pytest.raises(NotBorelTypeError) as excinfo:
        sequential_chain(parse_ideal("vars x,y,z; x*z, y"))
    assert excinfo.value.failing_index == 2


def test_satiety_example() -> None:
    I = parse_ideal(EX27)
    assert satiety_witness(I) == Monomial((3, 3, 2))
    assert satiety_quotient(I) == finite(8)


def test_satiety_saturated() -> None:
    I = parse_ideal("vars x,y,z; x^2, x*y, y^3")
    assert satiety_witness(I) is None
    assert satiety_quotient(I) == MINUS_INFINITY


def test_satiety_not_borel() -> None:
    I = parse_ideal("vars x,y; x*y, y^2")
    assert not is_borel_type(I)
    assert satiety_witness(I) == Monomial((0, 1))
    assert satiety_quotient(I) == finite(1)
    assert satiety_quotient(parse_ideal("vars x,y; y")) == MINUS_INFINITY


def test_satiety_unit() -> None:
    with pytest.raises(DegenerateIdealError):
        satiety_quotient(MonomialIdeal.unit(2))


@pytest.mark.parametrize(
    "b", [b for n in range(1, 4) for b in product(range(1, 5), repeat=n)]
)
def test_satiety_irreducible(b: tuple[int, ...]) -> None:
    q = IrreducibleComponent(b)
    assert satiety_quotient(q.ideal()) == finite(sum(b) - len(b))
    assert satiety_witness(q.ideal()) == Monomial(tuple(e - 1 for e in b))


@pytest.mark.parametrize(
    "text,value",
    [
        ("vars x,y; x, y^2", finite(1)),
        ("vars x,y; x^2, x*y, y^2", finite(1)),
        ("vars x,y,z; x^2, x*y, y^3", MINUS_INFINITY),
        ("vars x,y,z; x, y, z^5", finite(4)),
    ],
)
def test_satiety_bg_shortcut(text: str, value: object) -> None:
    I = parse_ideal(text)
    assert satiety_bg_shortcut(I) == value
    assert satiety_bg_shortcut(I, verify=True) == satiety_quotient(I)


@pytest.mark.parametrize("text", [EX27, "vars x,y,z; x^4, y^4, z^3"])
def test_satiety_bg_shortcut_precondition(text: str) -> None:
    with pytest.raises(PreconditionError):
        satiety_bg_shortcut(parse_ideal(text))
