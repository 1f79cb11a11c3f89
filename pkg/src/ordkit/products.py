"""Constructions that build new ordered structures from old ones.

Product carriers always materialize all ``|A|·|B|`` pairs, flattened
row-major (``index = left·|B| + right``); when a coarse equality collapses
pairs, the collapse lives in the setoid, so the natural map from the plain
product into a coarse product is the identity on indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .derived import leq_pos_rows
from .setoid import PosetRel, Setoid, StrictRel, Verdict, make_setoid

__all__ = [
    "pair_index",
    "pair_split",
    "unit_structure",
    "lex_product",
    "lex_product_n",
    "weak_lex_product",
    "coarse_product",
    "poset_to_strict",
    "check_star_condition",
    "EmbeddingMap",
    "identity_embedding",
    "check_embedding",
    "check_isomorphism",
]


def pair_index(x: int, y: int, size_b: int) -> int:
    return x * size_b + y


def pair_split(i: int, size_b: int) -> tuple[int, int]:
    return divmod(i, size_b)


def _pair_setoid(a: Setoid, b: Setoid, eq_left: bool, eq_right: bool) -> Setoid:
    labels = tuple(f"({la},{lb})" for la in a.labels for lb in b.labels)
    reps = []
    for x in range(a.size):
        for y in range(b.size):
            rx = a.reps[x] if eq_left else 0
            ry = b.reps[y] if eq_right else 0
            reps.append(pair_index(rx, ry, b.size))
    return Setoid(labels, tuple(reps))


def unit_structure() -> StrictRel:
    """The one-element structure whose single element is the empty tuple."""
    return StrictRel(make_setoid(["()"]), (0,))


def lex_product(a: StrictRel, b: StrictRel) -> StrictRel:
    """Lexicographic order on pairs: below on the left, or equal on the left
    and below on the right. Pair equality is componentwise."""
    base = _pair_setoid(a.base, b.base, True, True)
    rows = []
    for x in range(a.size):
        for y in range(b.size):
            row = 0
            for xp in range(a.size):
                for yp in range(b.size):
                    if a.has(x, xp) or (a.base.eq(x, xp) and b.has(y, yp)):
                        row |= 1 << pair_index(xp, yp, b.size)
            rows.append(row)
    return StrictRel(base, tuple(rows))


def lex_product_n(parts: Sequence[StrictRel]) -> StrictRel:
    """N-ary lexicographic product as a right fold of the binary one.

    The empty product is the one-element structure. Flattened indices agree
    with row-major tuple numbering, so the fold coincides elementwise with
    the direct first-difference definition on tuples.
    """
    return reduce(lambda acc, part: lex_product(part, acc), reversed(parts), unit_structure())


def weak_lex_product(a: StrictRel, b: StrictRel) -> StrictRel:
    """Weak lexicographic order on pairs.

    A pair is below another iff the left components are in the positive weak
    order of ``a``, equal left components force the right components to be
    related in ``b``, and unequal left components force the left components
    to be related in ``a``. Implications are evaluated materially over the
    finite carrier.
    """
    pos = leq_pos_rows(a)
    base = _pair_setoid(a.base, b.base, True, True)
    rows = []
    for x in range(a.size):
        for y in range(b.size):
            row = 0
            for xp in range(a.size):
                if not pos[x] >> xp & 1:
                    continue
                same = a.base.eq(x, xp)
                if not same and not a.has(x, xp):
                    continue
                for yp in range(b.size):
                    if same and not b.has(y, yp):
                        continue
                    row |= 1 << pair_index(xp, yp, b.size)
            rows.append(row)
    return StrictRel(base, tuple(rows))


def coarse_product(a: StrictRel, b: StrictRel, side: str = "left") -> StrictRel:
    """Product whose equality and order compare only one coordinate."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    left = side == "left"
    base = _pair_setoid(a.base, b.base, left, not left)
    rows = []
    for x in range(a.size):
        for y in range(b.size):
            row = 0
            for xp in range(a.size):
                for yp in range(b.size):
                    related = a.has(x, xp) if left else b.has(y, yp)
                    if related:
                        row |= 1 << pair_index(xp, yp, b.size)
            rows.append(row)
    return StrictRel(base, tuple(rows))


def poset_to_strict(p: PosetRel) -> StrictRel:
    """Strict relation carved out of a partial order: related and unequal.

    The result is always asymmetric and transitive; positive antisymmetry is
    not guaranteed (see :func:`check_star_condition`).
    """
    rows = tuple(p.rows[i] & ~p.base.class_mask(i) for i in range(p.size))
    return StrictRel(p.base, rows)


def check_star_condition(p: PosetRel) -> Verdict:
    """With ``<`` the induced strict relation: whenever ``y`` is not
    strictly below ``x``, ``x`` must be related to ``y``. Partial orders
    satisfying this yield positively antisymmetric strict relations."""
    strict = poset_to_strict(p)
    for x in range(p.size):
        for y in range(p.size):
            if not strict.has(y, x) and not p.has(x, y):
                return Verdict(False, (x, y))
    return Verdict(True)


@dataclass(frozen=True)
class EmbeddingMap:
    """A total map between the carriers of two strict relations."""

    source: StrictRel
    target: StrictRel
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mapping", tuple(self.mapping))
        if len(self.mapping) != self.source.size:
            raise ValueError("mapping must be total on the source carrier")
        for i in self.mapping:
            if not 0 <= i < self.target.size:
                raise ValueError(f"mapping value {i} out of target range")


def identity_embedding(source: StrictRel, target: StrictRel) -> EmbeddingMap:
    if source.size != target.size:
        raise ValueError("identity map needs carriers of equal size")
    return EmbeddingMap(source, target, tuple(range(source.size)))


def check_embedding(e: EmbeddingMap) -> Verdict:
    """Order-embedding: the map reflects and preserves the relation, and
    sends equal elements to equal elements. Witness is a source pair."""
    m = e.mapping
    for x in range(e.source.size):
        for y in range(e.source.size):
            if e.source.has(x, y) != e.target.has(m[x], m[y]):
                return Verdict(False, (x, y))
            if e.source.base.eq(x, y) and not e.target.base.eq(m[x], m[y]):
                return Verdict(False, (x, y))
    return Verdict(True)


def check_isomorphism(e: EmbeddingMap) -> Verdict:
    """Embedding that is onto up to target equality. Witness is either a
    failing source pair or a single uncovered target element."""
    embedding = check_embedding(e)
    if not embedding:
        return embedding
    hit = {e.target.base.reps[i] for i in e.mapping}
    for t in range(e.target.size):
        if e.target.base.reps[t] not in hit:
            return Verdict(False, (t,))
    return Verdict(True)
