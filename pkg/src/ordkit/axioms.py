"""Order-axiom checkers for strict relations and partial orders.

Each checker decides one universally quantified axiom over the whole finite
carrier and, on failure, returns the first counterexample in ascending scan
order. Witnesses are always replayable: feeding them back into the relation
reproduces the violation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .derived import leq_pos_rows
from .setoid import PosetRel, Setoid, StrictRel, Verdict, bits

__all__ = [
    "AxiomProfile",
    "check_asymmetry",
    "check_transitivity",
    "check_cotransitivity",
    "check_negative_antisymmetry",
    "check_positive_antisymmetry",
    "check_discreteness",
    "classify",
    "check_total",
    "check_decidable_eq",
]


def check_asymmetry(r: StrictRel) -> Verdict:
    """No pair is related both ways; taking x = y, irreflexivity follows."""
    for x in range(r.size):
        for y in bits(r.rows[x]):
            if r.rows[y] >> x & 1:
                return Verdict(False, (x, y))
    return Verdict(True)


def check_transitivity(r: StrictRel) -> Verdict:
    for x in range(r.size):
        for y in bits(r.rows[x]):
            missing = r.rows[y] & ~r.rows[x]
            if missing:
                z = next(bits(missing))
                return Verdict(False, (x, y, z))
    return Verdict(True)


def check_cotransitivity(r: StrictRel) -> Verdict:
    """Whenever x is below y, every z is either above x or below y."""
    full = (1 << r.size) - 1
    below = r.columns()
    for x in range(r.size):
        for y in bits(r.rows[x]):
            missing = full & ~(r.rows[x] | below[y])
            if missing:
                z = next(bits(missing))
                return Verdict(False, (x, y, z))
    return Verdict(True)


def check_negative_antisymmetry(r: StrictRel) -> Verdict:
    """Unrelated either way forces equality."""
    full = (1 << r.size) - 1
    below = r.columns()
    for x in range(r.size):
        bad = full & ~r.rows[x] & ~below[x] & ~r.base.class_mask(x)
        if bad:
            y = next(bits(bad))
            return Verdict(False, (x, y))
    return Verdict(True)


def check_positive_antisymmetry(r: StrictRel) -> Verdict:
    """Mutual positive-weak-order membership forces equality.

    The positive weak order is recomputed on each call; checkers stay
    stateless.
    """
    pos = leq_pos_rows(r)
    for x in range(r.size):
        for y in bits(pos[x]):
            if pos[y] >> x & 1 and not r.base.eq(x, y):
                return Verdict(False, (x, y))
    return Verdict(True)


def check_discreteness(r: StrictRel) -> Verdict:
    """Every pair is related one way, the other way, or equal.

    On a finite classical carrier this coincides with negative antisymmetry;
    both are kept because they answer differently phrased questions.
    """
    full = (1 << r.size) - 1
    below = r.columns()
    for x in range(r.size):
        bad = full & ~r.rows[x] & ~below[x] & ~r.base.class_mask(x)
        if bad:
            y = next(bits(bad))
            return Verdict(False, (x, y))
    return Verdict(True)


@dataclass(frozen=True)
class AxiomProfile:
    """Verdicts for all six axioms of one strict relation."""

    asymmetric: Verdict
    transitive: Verdict
    cotransitive: Verdict
    neg_antisymmetric: Verdict
    pos_antisymmetric: Verdict
    discrete: Verdict

    @property
    def is_generalized_ordered(self) -> bool:
        """Asymmetric, transitive, and positively antisymmetric."""
        return bool(self.asymmetric and self.transitive and self.pos_antisymmetric)

    @property
    def is_ordered_set(self) -> bool:
        """Asymmetric, cotransitive, and negatively antisymmetric."""
        return bool(self.asymmetric and self.cotransitive and self.neg_antisymmetric)

    def verdicts(self) -> tuple[tuple[str, Verdict], ...]:
        return (
            ("asymmetric", self.asymmetric),
            ("transitive", self.transitive),
            ("cotransitive", self.cotransitive),
            ("neg-antisymmetric", self.neg_antisymmetric),
            ("pos-antisymmetric", self.pos_antisymmetric),
            ("discrete", self.discrete),
        )


def classify(r: StrictRel) -> AxiomProfile:
    return AxiomProfile(
        asymmetric=check_asymmetry(r),
        transitive=check_transitivity(r),
        cotransitive=check_cotransitivity(r),
        neg_antisymmetric=check_negative_antisymmetry(r),
        pos_antisymmetric=check_positive_antisymmetry(r),
        discrete=check_discreteness(r),
    )


def check_total(p: PosetRel) -> Verdict:
    """Every pair is related at least one way round."""
    for x in range(p.size):
        for y in range(p.size):
            if not (p.rows[x] >> y & 1 or p.rows[y] >> x & 1):
                return Verdict(False, (x, y))
    return Verdict(True)


def check_decidable_eq(s: Setoid) -> Verdict:
    """Equality decidability, which a finite carrier with a representative
    map settles affirmatively by construction. Kept so totality-style
    results have their full interface; it never fails here."""
    return Verdict(True)
