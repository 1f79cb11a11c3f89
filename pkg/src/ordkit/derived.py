"""The two weak orders derived from a strict relation.

Every strict relation ``<`` induces two reflexive relations:

* the negative weak order: ``x`` is weakly below ``y`` iff ``y`` is not
  below ``x``;
* the positive weak order: ``x`` is weakly below ``y`` iff everything below
  ``x`` is below ``y`` and everything above ``y`` is above ``x``.

The positive weak order is reflexive and transitive for any relation
whatsoever, which is what makes it the bridge from generalized ordered sets
to partial orders.
"""

from __future__ import annotations

from dataclasses import dataclass

from .setoid import PosetRel, StrictRel, Verdict

__all__ = [
    "DerivedOrder",
    "WeakOrderComparison",
    "leq_neg_rows",
    "leq_pos_rows",
    "derive",
    "compare_weak_orders",
    "gord_to_poset",
]


def leq_neg_rows(r: StrictRel) -> tuple[int, ...]:
    """Row masks of the negative weak order: bit ``y`` of row ``x`` iff
    ``y`` is not below ``x``."""
    full = (1 << r.size) - 1
    below = r.columns()
    return tuple(full & ~below[x] for x in range(r.size))


def leq_pos_rows(r: StrictRel) -> tuple[int, ...]:
    """Row masks of the positive weak order.

    ``x`` weakly below ``y`` iff the set below ``x`` is contained in the set
    below ``y`` and the set above ``y`` is contained in the set above ``x``.
    """
    n = r.size
    below = r.columns()
    rows = []
    for x in range(n):
        row = 0
        for y in range(n):
            if below[x] & ~below[y]:
                continue
            if r.rows[y] & ~r.rows[x]:
                continue
            row |= 1 << y
        rows.append(row)
    return tuple(rows)


@dataclass(frozen=True)
class DerivedOrder:
    """Both derived weak orders of a strict relation, as row masks."""

    base: StrictRel
    leq_neg: tuple[int, ...]
    leq_pos: tuple[int, ...]

    def neg(self, x: int, y: int) -> bool:
        return bool(self.leq_neg[x] >> y & 1)

    def pos(self, x: int, y: int) -> bool:
        return bool(self.leq_pos[x] >> y & 1)


def derive(r: StrictRel) -> DerivedOrder:
    return DerivedOrder(r, leq_neg_rows(r), leq_pos_rows(r))


@dataclass(frozen=True)
class WeakOrderComparison:
    """Elementwise comparison of the two weak orders, with first-difference
    witnesses in row-major scan order."""

    neg_subset_of_pos: Verdict
    pos_subset_of_neg: Verdict
    equal: Verdict


def _subset_witness(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, int] | None:
    for x, (ra, rb) in enumerate(zip(a, b)):
        extra = ra & ~rb
        if extra:
            return (x, (extra & -extra).bit_length() - 1)
    return None


def compare_weak_orders(r: StrictRel) -> WeakOrderComparison:
    neg, pos = leq_neg_rows(r), leq_pos_rows(r)
    np_witness = _subset_witness(neg, pos)
    pn_witness = _subset_witness(pos, neg)
    equal_witness = np_witness if np_witness is not None else pn_witness
    return WeakOrderComparison(
        neg_subset_of_pos=Verdict(np_witness is None, np_witness),
        pos_subset_of_neg=Verdict(pn_witness is None, pn_witness),
        equal=Verdict(equal_witness is None, equal_witness),
    )


def gord_to_poset(r: StrictRel) -> PosetRel:
    """Partial order induced by a generalized ordered set: the positive weak
    order. Rejects relations that fail the generalized-order axioms, naming
    the first failed axiom."""
    from .axioms import classify

    profile = classify(r)
    for name, verdict in (
        ("asymmetry", profile.asymmetric),
        ("transitivity", profile.transitive),
        ("positive antisymmetry", profile.pos_antisymmetric),
    ):
        if not verdict:
            labels = tuple(r.base.labels[i] for i in verdict.witness)
            raise ValueError(f"not a generalized ordered set: {name} fails at {labels}")
    return PosetRel(r.base, leq_pos_rows(r))
