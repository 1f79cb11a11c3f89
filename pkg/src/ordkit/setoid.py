"""Finite carriers with user-defined equality, and binary relations over them.

Elements are dense integer indices ``0..n-1``; string labels exist only for
I/O. Equality is stored as a representative map (the canonical result of a
union-find pass), so equality tests are O(1) and equal setoids compare equal
structurally. Relation matrices are stored as one integer bitmask per row,
which keeps both single-pair lookups and whole-row subset tests O(1).

Everything here is immutable after construction and safe to share across
threads.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Verdict",
    "Setoid",
    "StrictRel",
    "PosetRel",
    "bits",
    "make_setoid",
    "identity_setoid",
    "make_strict_rel",
    "make_poset_rel",
    "check_well_defined",
    "well_defined_violation",
    "poset_violation",
    "dual",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Verdict:
    """Outcome of a universally quantified check.

    A witness is present exactly when the check fails, and replaying the
    witness against the inputs must reproduce the violation.
    """

    holds: bool
    witness: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.holds and self.witness is not None:
            raise ValueError("passing verdict cannot carry a witness")
        if not self.holds and self.witness is None:
            raise ValueError("failing verdict must carry a witness")

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class Setoid:
    """A finite carrier with an equivalence relation as its equality.

    ``reps[i]`` is the canonical representative of ``i``: the smallest index
    in its equivalence class. Two elements are equal iff they share a
    representative.
    """

    labels: tuple[str, ...]
    reps: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "reps", tuple(self.reps))
        seen: set[str] = set()
        for label in self.labels:
            if label in seen:
                raise ValueError(f"duplicate label {label!r}")
            seen.add(label)
        n = len(self.labels)
        if len(self.reps) != n:
            raise ValueError("reps length must match labels length")
        for i, r in enumerate(self.reps):
            if not 0 <= r < n:
                raise ValueError(f"representative {r} out of range")
            if self.reps[r] != r:
                raise ValueError("representative map must be idempotent")
            if r > i:
                raise ValueError("representative must be the smallest index of its class")

    @property
    def size(self) -> int:
        return len(self.labels)

    def eq(self, i: int, j: int) -> bool:
        """Setoid equality: same canonical representative."""
        return self.reps[i] == self.reps[j]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown label {label!r}") from None

    def class_mask(self, i: int) -> int:
        """Bitmask of all elements equal to ``i``."""
        rep = self.reps[i]
        mask = 0
        for j, r in enumerate(self.reps):
            if r == rep:
                mask |= 1 << j
        return mask

    def class_members(self, i: int) -> tuple[int, ...]:
        rep = self.reps[i]
        return tuple(j for j, r in enumerate(self.reps) if r == rep)

    def classes(self) -> tuple[tuple[int, ...], ...]:
        """All equivalence classes, ordered by representative."""
        out: dict[int, list[int]] = {}
        for i, r in enumerate(self.reps):
            out.setdefault(r, []).append(i)
        return tuple(tuple(out[r]) for r in sorted(out))

    @property
    def is_identity(self) -> bool:
        return all(r == i for i, r in enumerate(self.reps))


def make_setoid(labels: Sequence[str], equal_pairs: Iterable[tuple[str, str]] = ()) -> Setoid:
    """Build a setoid whose equality is the equivalence closure of
    identity plus ``equal_pairs``.

    Raises on duplicate labels and on pairs that mention unknown labels.
    Listing a pair twice, in either orientation, is harmless.
    """
    labels = tuple(labels)
    index = {}
    for i, label in enumerate(labels):
        if label in index:
            raise ValueError(f"duplicate label {label!r}")
        index[label] = i

    parent = list(range(len(labels)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a, b in equal_pairs:
        for label in (a, b):
            if label not in index:
                raise ValueError(f"unknown label {label!r} in equal pairs")
        ra, rb = find(index[a]), find(index[b])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    roots = [find(i) for i in range(len(labels))]
    smallest: dict[int, int] = {}
    for i, r in enumerate(roots):
        smallest.setdefault(r, i)
    return Setoid(labels, tuple(smallest[r] for r in roots))


def identity_setoid(n: int) -> Setoid:
    """Setoid of ``n`` distinct elements labelled a, b, c, ..."""
    if n <= len(string.ascii_lowercase):
        labels = tuple(string.ascii_lowercase[:n])
    else:
        labels = tuple(f"e{i}" for i in range(n))
    return Setoid(labels, tuple(range(n)))


@dataclass(frozen=True)
class StrictRel:
    """A binary relation matrix over a setoid; ``rows[i]`` bit ``j`` means
    element ``i`` is below element ``j``.

    Construction does not require the matrix to respect setoid equality:
    raw matrices loaded from files are represented as-is and validated with
    :func:`check_well_defined`. The constructors in this module only produce
    well-defined matrices.
    """

    base: Setoid
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        n = self.base.size
        if len(self.rows) != n:
            raise ValueError("row count must match carrier size")
        limit = 1 << n
        for row in self.rows:
            if not 0 <= row < limit:
                raise ValueError("row mask out of range")

    @property
    def size(self) -> int:
        return self.base.size

    def has(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for x, row in enumerate(self.rows):
            for y in bits(row):
                yield x, y

    def columns(self) -> tuple[int, ...]:
        """Column masks: bit ``z`` of ``columns()[x]`` means ``z`` is below ``x``."""
        n = self.base.size
        cols = [0] * n
        for x, row in enumerate(self.rows):
            for y in bits(row):
                cols[y] |= 1 << x
        return tuple(cols)


@dataclass(frozen=True)
class PosetRel:
    """A reflexive, transitive, antisymmetric, well-defined relation.

    Unlike :class:`StrictRel`, invariants are enforced at construction;
    loaders that consume untrusted matrices should call
    :func:`poset_violation` first to report violations gracefully.
    """

    base: Setoid
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        violation = poset_violation(self.base, self.rows)
        if violation is not None:
            law, witness = violation
            names = tuple(self.base.labels[i] for i in witness)
            raise ValueError(f"not a partial order: {law} fails at {names}")

    @property
    def size(self) -> int:
        return self.base.size

    def has(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def pairs(self) -> Iterator[tuple[int, int]]:
        for x, row in enumerate(self.rows):
            for y in bits(row):
                yield x, y


def make_strict_rel(base: Setoid, less_pairs: Iterable[tuple[str, str]] = ()) -> StrictRel:
    """Build a strict relation from label pairs, saturated under equality.

    If a pair is related, every pair of equal elements is related too, so
    the result is well-defined by construction.
    """
    rows = [0] * base.size
    for a, b in less_pairs:
        x, y = base.index(a), base.index(b)
        target = base.class_mask(y)
        for xp in base.class_members(x):
            rows[xp] |= target
    return StrictRel(base, tuple(rows))


def make_poset_rel(base: Setoid, sim_pairs: Iterable[tuple[str, str]] = ()) -> PosetRel:
    """Build a partial order from label pairs: the diagonal is added and the
    matrix is saturated under equality. Transitivity and antisymmetry are
    not repaired; violations raise."""
    rows = [base.class_mask(i) for i in range(base.size)]
    for a, b in sim_pairs:
        x, y = base.index(a), base.index(b)
        target = base.class_mask(y)
        for xp in base.class_members(x):
            rows[xp] |= target
    return PosetRel(base, tuple(rows))


def well_defined_violation(base: Setoid, rows: Sequence[int]) -> tuple[int, int, int, int] | None:
    """First quadruple ``(x, x', y, y')`` with ``x = x'``, ``y = y'``,
    ``x`` below ``y`` but ``x'`` not below ``y'``; scanned in ascending
    quadruple order. ``None`` when the matrix respects equality."""
    if base.is_identity:
        return None
    n = base.size
    for x in range(n):
        for xp in base.class_members(x):
            for y in range(n):
                if not rows[x] >> y & 1:
                    continue
                for yp in base.class_members(y):
                    if not rows[xp] >> yp & 1:
                        return (x, xp, y, yp)
    return None


def check_well_defined(r: StrictRel) -> Verdict:
    """Does the relation respect setoid equality in both arguments?"""
    witness = well_defined_violation(r.base, r.rows)
    return Verdict(True) if witness is None else Verdict(False, witness)


def poset_violation(base: Setoid, rows: Sequence[int]) -> tuple[str, tuple[int, ...]] | None:
    """First failed partial-order law among reflexivity, transitivity,
    antisymmetry, and well-definedness, with a witness."""
    n = base.size
    for i in range(n):
        if not rows[i] >> i & 1:
            return ("reflexivity", (i,))
    for x in range(n):
        for y in bits(rows[x]):
            extra = rows[y] & ~rows[x]
            if extra:
                z = next(bits(extra))
                return ("transitivity", (x, y, z))
    for x in range(n):
        for y in bits(rows[x]):
            if rows[y] >> x & 1 and not base.eq(x, y):
                return ("antisymmetry", (x, y))
    witness = well_defined_violation(base, rows)
    if witness is not None:
        return ("well-definedness", witness)
    return None


def dual(r: StrictRel) -> StrictRel:
    """Same carrier, transposed relation."""
    return StrictRel(r.base, r.columns())
