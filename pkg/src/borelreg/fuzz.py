"""
Deterministic generation of random ideals of Borel type.

Randomness comes from SplitMix64 (Steele, Lea & Flood's 64-bit mixing
generator): the state advances by ``0x9E3779B97F4A7C15`` and each output is
the state passed through two xor-shift-multiply rounds.  Bounded integers
are drawn as ``(x · k) >> 64``, so a seed fixes the sample stream on every
platform.

A sample is a random expression tree whose leaves are irreducible ideals
``m^b`` with ``supp(b) = {1, …, k}`` and whose inner nodes apply the
configured operations.  Intersections and sums of ideals of Borel type are
of Borel type, so a rejected ∩/+ sample is logged as a suspected bug.
"""

from __future__ import annotations
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from typing import Any, Optional, TypeVar
from .borel import is_borel_type
from .config import FuzzConfig
from .logging import log
from .monomial import Monomial, MonomialIdeal, ideal_sum, intersect, product
from .parser import format_ideal

T = TypeVar("T")

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

#: Number of draws allowed per requested sample before giving up
ATTEMPTS_PER_SAMPLE = 50


class SplitMix64:
    """The SplitMix64 pseudorandom generator"""

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Return an integer in ``0..k-1``"""
        if k < 1:
            raise ValueError(f"Upper bound must be positive, got {k}")
        return (self.next_u64() * k) >> 64

    def randint(self, lo: int, hi: int) -> int:
        """Return an integer in ``lo..hi`` inclusive"""
        return lo + self.below(hi - lo + 1)

    def choice(self, seq: Sequence[T]) -> T:
        return seq[self.below(len(seq))]


@dataclass
class FuzzStats:
    """Counts of drawn and accepted samples and of rejected ones"""

    drawn: int = 0
    accepted: int = 0
    #: Samples rejected by the Borel-type check
    not_borel: int = 0
    #: Texts of rejected samples built only from ∩ and +
    suspected: list[str] = field(default_factory=list)

    def for_json(self) -> dict[str, Any]:
        return {
            "drawn": self.drawn,
            "accepted": self.accepted,
            "not_borel": self.not_borel,
            "suspected_bugs": self.suspected,
        }


def random_leaf(rng: SplitMix64, n: int, exp_max: int) -> MonomialIdeal:
    """Draw ``m^b`` with ``supp(b) = {1, …, k}`` for a random ``k ≥ 1``"""
    k = rng.randint(1, n)
    return MonomialIdeal(
        n,
        tuple(
            Monomial.variable(n, i, rng.randint(1, exp_max)) for i in range(1, k + 1)
        ),
    )


def random_tree(
    rng: SplitMix64, n: int, cfg: FuzzConfig, depth: int
) -> tuple[MonomialIdeal, frozenset[str]]:
    """
    Draw an expression tree of the given depth and return its value along
    with the set of operations used
    """
    if depth == 0:
        return random_leaf(rng, n, cfg.exp_max), frozenset()
    op = rng.choice(cfg.ops)
    left, lops = random_tree(rng, n, cfg, depth - 1)
    right, rops = random_tree(rng, n, cfg, depth - 1)
    if op == "intersect":
        value = intersect(left, right)
    elif op == "sum":
        value = ideal_sum(left, right)
    else:
        value = product(left, right)
    return value, lops | rops | {op}


def _draw(
    rng: SplitMix64, cfg: FuzzConfig, n: int, stats: FuzzStats
) -> Optional[MonomialIdeal]:
    stats.drawn += 1
    I, ops = random_tree(rng, n, cfg, cfg.depth)
    if not is_borel_type(I):
        stats.not_borel += 1
        if "product" not in ops:
            log.warning(
                "Suspected bug: %s is built from intersections and sums of"
                " ideals of Borel type but is not of Borel type",
                format_ideal(I),
            )
            stats.suspected.append(format_ideal(I))
        return None
    stats.accepted += 1
    return I


def fuzz_borel(
    cfg: FuzzConfig, stats: FuzzStats | None = None
) -> Iterator[MonomialIdeal]:
    """
    Yield ``cfg.count`` random ideals of Borel type.  ``cfg.exp_max`` bounds
    the exponents of the leaves only, so products may exceed it.  Samples
    that fail the Borel check are discarded and counted in ``stats``.
    """
    if stats is None:
        stats = FuzzStats()
    rng = SplitMix64(cfg.seed)
    limit = ATTEMPTS_PER_SAMPLE * max(cfg.count, 1)
    while stats.accepted < cfg.count and stats.drawn < limit:
        n = rng.randint(1, cfg.n_max)
        I = _draw(rng, cfg, n, stats)
        if I is not None:
            yield I
    if stats.accepted < cfg.count:
        log.warning(
            "Only %d of %d samples accepted after %d draws",
            stats.accepted,
            cfg.count,
            stats.drawn,
        )


def fuzz_pairs(
    cfg: FuzzConfig, stats: FuzzStats | None = None
) -> Iterator[tuple[MonomialIdeal, MonomialIdeal]]:
    """
    Yield ``cfg.pair_count`` pairs of random ideals of Borel type in the same
    ring, drawn from a stream independent of `fuzz_borel()`'s
    """
    if stats is None:
        stats = FuzzStats()
    rng = SplitMix64(cfg.seed ^ GOLDEN_GAMMA)
    limit = ATTEMPTS_PER_SAMPLE * max(cfg.pair_count, 1)
    pairs = 0
    while pairs < cfg.pair_count and stats.drawn < limit:
        n = rng.randint(1, cfg.n_max)
        K = _draw(rng, cfg, n, stats)
        L = _draw(rng, cfg, n, stats)
        if K is not None and L is not None:
            pairs += 1
            yield K, L
