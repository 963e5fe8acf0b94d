from __future__ import annotations
import pytest
from borelreg.decomposition import (
    Decomposition,
    IrreducibleComponent,
    decompose,
    is_irredundant,
    prune_redundant,
    recompose,
)
from borelreg.errors import DegenerateIdealError, DimensionMismatchError
from borelreg.monomial import Monomial, MonomialIdeal
from borelreg.parser import parse_ideal

EX27 = "vars x,y,z; x^4, x^2*z^3, y^4, y^3*z^3"


@pytest.mark.parametrize(
    "text,components",
    [
        (EX27, [[2, 3, 0], [4, 4, 3]]),
        ("vars x,y,z; x^2, x*y, y^3", [[1, 3, 0], [2, 1, 0]]),
        ("vars x,y; x, y", [[1, 1]]),
        ("vars x,y; x^3", [[3, 0]]),
        ("vars x,y,z; x^4, y^4, z^3", [[4, 4, 3]]),
        ("vars x,y; x*y", [[0, 1], [1, 0]]),
        ("vars x,y,z; x*y*z", [[0, 0, 1], [0, 1, 0], [1, 0, 0]]),
        ("vars x,y; x^2, x*y^2, y^3", [[1, 3], [2, 2]]),
        ("vars x,y,z; x^2, y^2, z^10", [[2, 2, 10]]),
        (
            "vars x,y,z; x^2, y^2, x*y*z",
            [[1, 2, 0], [2, 1, 0], [2, 2, 1]],
        ),
    ],
)
def test_decompose(text: str, components: list[list[int]]) -> None:
    I = parse_ideal(text)
    D = decompose(I)
    assert D.exponent_rows() == components
    assert D.for_json() == {"components": components}
    assert D.source == I
    assert recompose(D) == I
    assert is_irredundant(D.components, I)


@pytest.mark.parametrize(
    "I",
    [MonomialIdeal.zero(2), MonomialIdeal.unit(2)],
    ids=["zero", "unit"],
)
def test_decompose_degenerate(I: MonomialIdeal) -> None:
    with pytest.raises(DegenerateIdealError):
        decompose(I)


def test_component_properties() -> None:
    q = IrreducibleComponent((2, 3, 0))
    assert q.n == 3
    assert q.supp == frozenset({1, 2})
    assert q.total == 5
    assert q.has_initial_support()
    assert not IrreducibleComponent((2, 0, 1)).has_initial_support()
    assert q.ideal() == parse_ideal("vars x,y,z; x^2, y^3")
    assert q.ideal(("a", "b", "c")).var_names == ("a", "b", "c")
    assert Monomial((2, 0, 7)) in q
    assert Monomial((1, 2, 9)) not in q
    assert "x^2" not in q


def test_component_validation() -> None:
    with pytest.raises(ValueError):
        IrreducibleComponent((0, 0))
    with pytest.raises(ValueError):
        IrreducibleComponent((1, -1))


def test_component_containment() -> None:
    small = IrreducibleComponent((4, 4, 3))
    big = IrreducibleComponent((2, 3, 0))
    assert small.is_subset_of(big) is False
    assert IrreducibleComponent((4, 4, 0)).is_subset_of(big)
    assert not big.is_subset_of(IrreducibleComponent((4, 4, 0)))
    assert big.contains_ideal(parse_ideal(EX27))
    assert small.contains_ideal(parse_ideal(EX27))
    assert not big.contains_ideal(parse_ideal("vars x,y,z; x, y^3"))


def test_components_sorted() -> None:
    assert sorted([IrreducibleComponent((2, 1)), IrreducibleComponent((1, 3))]) == [
        IrreducibleComponent((1, 3)),
        IrreducibleComponent((2, 1)),
    ]


def test_prune_redundant() -> None:
    cs = [
        IrreducibleComponent((2, 3, 0)),
        IrreducibleComponent((4, 4, 3)),
        IrreducibleComponent((2, 4, 3)),
        IrreducibleComponent((2, 3, 0)),
    ]
    assert prune_redundant(cs) == (
        IrreducibleComponent((2, 3, 0)),
        IrreducibleComponent((4, 4, 3)),
    )


def test_is_irredundant() -> None:
    I = parse_ideal(EX27)
    good = [IrreducibleComponent((2, 3, 0)), IrreducibleComponent((4, 4, 3))]
    assert is_irredundant(good, I)
    assert not is_irredundant(good + [IrreducibleComponent((2, 4, 3))], I)
    assert not is_irredundant(good[:1], I)
    assert not is_irredundant([], I)
    with pytest.raises(DimensionMismatchError):
        is_irredundant([IrreducibleComponent((2, 3))], I)


def test_recompose_empty() -> None:
    with pytest.raises(ValueError):
        recompose(Decomposition((), parse_ideal(EX27)))


def test_decompose_logs(caplog: pytest.LogCaptureFixture) -> None:
    decompose(parse_ideal("vars x,y,z; x^3, x^2*y^2, y^3*z"))
    assert any(
        r.name == "borelreg" and r.getMessage().startswith("Decomposed ideal")
        for r in caplog.records
    )
