from __future__ import annotations
import logging
import pytest
from pytest_mock import MockerFixture
from borelreg.borel import is_borel_type
from borelreg.config import FuzzConfig
from borelreg.fuzz import (
    FuzzStats,
    SplitMix64,
    fuzz_borel,
    fuzz_pairs,
    random_leaf,
)
from borelreg.parser import format_ideal


def test_splitmix64_reference_stream() -> None:
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_splitmix64_seed_masked() -> None:
    a = SplitMix64(2**64 + 5)
    b = SplitMix64(5)
    assert [a.next_u64() for _ in range(4)] == [b.next_u64() for _ in range(4)]


def test_below() -> None:
    rng = SplitMix64(1)
    values = [rng.below(7) for _ in range(500)]
    assert set(values) == set(range(7))
    assert all(SplitMix64(s).below(1) == 0 for s in range(20))


@pytest.mark.parametrize("k", [0, -3])
def test_below_nonpositive(k: int) -> None:
    with pytest.raises(ValueError) as excinfo:
        SplitMix64(1).below(k)
    assert str(excinfo.value) == f"Upper bound must be positive, got {k}"


def test_randint_and_choice() -> None:
    rng = SplitMix64(99)
    values = {rng.randint(3, 5) for _ in range(200)}
    assert values == {3, 4, 5}
    assert {rng.choice("ab") for _ in range(100)} == {"a", "b"}


def test_random_leaf() -> None:
    rng = SplitMix64(4)
    for _ in range(50):
        I = random_leaf(rng, 4, 3)
        k = len(I.gens)
        assert 1 <= k <= 4
        supports = sorted(g.support() for g in I.gens)
        assert supports == [(i,) for i in range(1, k + 1)]
        assert max(I.max_exponents()) <= 3


def test_fuzz_deterministic() -> None:
    cfg = FuzzConfig(seed=2024, count=25)
    first = [format_ideal(I) for I in fuzz_borel(cfg)]
    second = [format_ideal(I) for I in fuzz_borel(cfg)]
    assert first == second
    assert len(first) == 25
    other = [format_ideal(I) for I in fuzz_borel(FuzzConfig(seed=2025, count=25))]
    assert other != first


@pytest.mark.parametrize("ops", [("intersect", "sum"), ("product",)])
def test_fuzz_samples_are_borel(ops: tuple[str, ...]) -> None:
    cfg = FuzzConfig(seed=7, count=30, ops=ops, n_max=3, exp_max=4)
    stats = FuzzStats()
    samples = list(fuzz_borel(cfg, stats))
    assert len(samples) == 30
    for I in samples:
        assert 1 <= I.n <= 3
        assert is_borel_type(I)
        if "product" not in ops:
            assert max(I.max_exponents()) <= 4
    assert stats.accepted == 30
    assert stats.drawn == stats.accepted + stats.not_borel
    assert stats.suspected == []


def test_fuzz_depth_zero() -> None:
    cfg = FuzzConfig(seed=3, count=40, depth=0)
    stats = FuzzStats()
    for I in fuzz_borel(cfg, stats):
        assert all(g.is_pure_power() for g in I.gens)
        indices = sorted(g.support()[0] for g in I.gens)
        assert indices == list(range(1, len(I.gens) + 1))
    assert stats.drawn == stats.accepted == 40
    assert stats.not_borel == 0


def test_fuzz_zero_count() -> None:
    stats = FuzzStats()
    assert list(fuzz_borel(FuzzConfig(count=0), stats)) == []
    assert stats.drawn == 0


def test_fuzz_products_exceed_leaf_bound() -> None:
    cfg = FuzzConfig(seed=1, count=30, ops=("product",), depth=2)
    stats = FuzzStats()
    samples = list(fuzz_borel(cfg, stats))
    assert len(samples) == 30
    assert stats.drawn == 30
    assert any(max(I.max_exponents()) > cfg.exp_max for I in samples)
    for I in samples:
        assert is_borel_type(I)
        assert max(I.max_exponents()) <= cfg.exp_max * 4


def test_fuzz_exhausted(
    caplog: pytest.LogCaptureFixture, mocker: MockerFixture
) -> None:
    mocker.patch("borelreg.fuzz.is_borel_type", return_value=False)
    cfg = FuzzConfig(seed=5, count=2, ops=("product",), depth=1)
    stats = FuzzStats()
    assert list(fuzz_borel(cfg, stats)) == []
    assert stats.drawn == 100
    assert stats.not_borel == 100
    assert stats.suspected == []
    assert (
        "borelreg",
        logging.WARNING,
        "Only 0 of 2 samples accepted after 100 draws",
    ) in caplog.record_tuples


def test_fuzz_pairs() -> None:
    cfg = FuzzConfig(seed=11, pair_count=15, n_max=3)
    stats = FuzzStats()
    pairs = list(fuzz_pairs(cfg, stats))
    assert len(pairs) == 15
    for K, L in pairs:
        assert K.n == L.n
        assert is_borel_type(K) and is_borel_type(L)
    assert stats.drawn == stats.accepted + stats.not_borel
    assert [(format_ideal(K), format_ideal(L)) for K, L in pairs] == [
        (format_ideal(K), format_ideal(L)) for K, L in fuzz_pairs(cfg)
    ]


def test_fuzz_stats_for_json() -> None:
    stats = FuzzStats(drawn=5, accepted=3, not_borel=2)
    assert stats.for_json() == {
        "drawn": 5,
        "accepted": 3,
        "not_borel": 2,
        "suspected_bugs": [],
    }
