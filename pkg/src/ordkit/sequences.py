"""Lexicographic comparison of infinite sequences over a finite structure.

An infinite sequence is represented as a finite prefix plus a constant tail,
which makes pointwise equality and lexicographic comparison exactly
decidable: two such sequences agree everywhere beyond the longer prefix, so
a bounded scan settles every question. Arbitrary generator functions are
supported only through the fuel-bounded comparator, which may honestly
answer "unknown": equality of streams is a universal statement no finite
scan can affirm.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Callable

from .setoid import StrictRel

__all__ = [
    "SeqOutcome",
    "SeqVerdict",
    "EvConstSeq",
    "seq_normalize",
    "seq_compare",
    "seq_compare_bounded",
    "seq_universe",
]


class SeqOutcome(Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"
    UNKNOWN_AFTER = "unknown-after"


@dataclass(frozen=True)
class SeqVerdict:
    """Result of comparing two sequences.

    ``witness_index`` is the first position where the sequences differ,
    present for every outcome except EQUAL and UNKNOWN_AFTER. ``fuel`` is
    set only by the bounded comparator.
    """

    outcome: SeqOutcome
    witness_index: int | None = None
    fuel: int | None = None


@dataclass(frozen=True)
class EvConstSeq:
    """Eventually constant sequence: ``prefix`` then ``tail`` forever."""

    base: StrictRel
    prefix: tuple[int, ...]
    tail: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "prefix", tuple(self.prefix))
        n = self.base.size
        for e in self.prefix:
            if not 0 <= e < n:
                raise ValueError(f"prefix entry {e} out of range")
        if not 0 <= self.tail < n:
            raise ValueError(f"tail {self.tail} out of range")

    def value_at(self, k: int) -> int:
        return self.prefix[k] if k < len(self.prefix) else self.tail


def seq_normalize(s: EvConstSeq) -> EvConstSeq:
    """Trim prefix entries equal to the tail from the end; the result is
    pointwise equal to the input."""
    prefix = list(s.prefix)
    while prefix and s.base.base.eq(prefix[-1], s.tail):
        prefix.pop()
    return EvConstSeq(s.base, tuple(prefix), s.tail)


def seq_compare(f: EvConstSeq, g: EvConstSeq) -> SeqVerdict:
    """Exact lexicographic comparison.

    Scans for the first position where the values are unequal; beyond both
    prefixes the sequences are constant, so scanning one position past the
    longer prefix decides everything.
    """
    if f.base != g.base:
        raise ValueError("sequences must share the same base structure")
    eq = f.base.base.eq
    for k in range(max(len(f.prefix), len(g.prefix)) + 1):
        a, b = f.value_at(k), g.value_at(k)
        if eq(a, b):
            continue
        if f.base.has(a, b):
            return SeqVerdict(SeqOutcome.LESS, k)
        if f.base.has(b, a):
            return SeqVerdict(SeqOutcome.GREATER, k)
        return SeqVerdict(SeqOutcome.INCOMPARABLE, k)
    return SeqVerdict(SeqOutcome.EQUAL)


def seq_compare_bounded(
    base: StrictRel,
    f: Callable[[int], int],
    g: Callable[[int], int],
    fuel: int,
) -> SeqVerdict:
    """Same scan as :func:`seq_compare` over generator functions, truncated
    at ``fuel`` positions. When every inspected position is equal the honest
    answer is UNKNOWN_AFTER: the sequences might differ later."""
    if fuel < 0:
        raise ValueError("fuel must be nonnegative")
    eq = base.base.eq
    n = base.size
    for k in range(fuel):
        a, b = f(k), g(k)
        for value in (a, b):
            if not 0 <= value < n:
                raise ValueError(f"generator produced out-of-range element {value}")
        if eq(a, b):
            continue
        if base.has(a, b):
            return SeqVerdict(SeqOutcome.LESS, k, fuel)
        if base.has(b, a):
            return SeqVerdict(SeqOutcome.GREATER, k, fuel)
        return SeqVerdict(SeqOutcome.INCOMPARABLE, k, fuel)
    return SeqVerdict(SeqOutcome.UNKNOWN_AFTER, None, fuel)


def seq_universe(base: StrictRel, max_prefix_len: int) -> tuple[EvConstSeq, ...]:
    """All normalized sequences with prefix length up to the bound,
    deduplicated under pointwise equality, in deterministic order."""
    if max_prefix_len < 0:
        raise ValueError("max_prefix_len must be nonnegative")
    reps = base.base.reps
    seen: set[tuple[tuple[int, ...], int]] = set()
    out: list[EvConstSeq] = []
    for length in range(max_prefix_len + 1):
        for tail in range(base.size):
            for prefix in product(range(base.size), repeat=length):
                s = seq_normalize(EvConstSeq(base, prefix, tail))
                key = (tuple(reps[e] for e in s.prefix), reps[s.tail])
                if key not in seen:
                    seen.add(key)
                    out.append(s)
    return tuple(out)
