"""Exhaustive verification over all small structures.

The enumerator iterates every relation matrix on every supported carrier,
classifies each against the six axioms, and replays the whole battery of
positive laws on every instance that satisfies the relevant hypotheses. Any
violation is a build-breaking defect and lands in ``theorem_violations``.
Alongside the law checks it runs honest counterexample searches whose
outcomes are recorded in the inventory, never presumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .axioms import AxiomProfile, check_total, classify
from .derived import leq_neg_rows, leq_pos_rows
from .products import (
    check_isomorphism,
    check_star_condition,
    coarse_product,
    identity_embedding,
    lex_product,
    poset_to_strict,
    weak_lex_product,
)
from .relfile import strict_to_dict
from .setoid import (
    PosetRel,
    Setoid,
    StrictRel,
    dual,
    identity_setoid,
    poset_violation,
    well_defined_violation,
)

__all__ = [
    "EnumerationSummary",
    "DEFAULT_BOUNDS",
    "EQUALITY_MODES",
    "partition_setoids",
    "iter_relation_rows",
    "matrix_bitstring",
    "leq_reflexive_closure_rows",
    "profile_key",
    "enumerate_structures",
]

EQUALITY_MODES = ("identity", "all-partitions")
DEFAULT_BOUNDS = {"identity": 4, "all-partitions": 3}

_PROFILE_TOKENS = ("asym", "trans", "cotrans", "neganti", "posanti", "discrete")


def profile_key(profile: AxiomProfile) -> str:
    """Canonical axiom-subset key, e.g. ``asym+trans+posanti``."""
    flags = (
        profile.asymmetric,
        profile.transitive,
        profile.cotransitive,
        profile.neg_antisymmetric,
        profile.pos_antisymmetric,
        profile.discrete,
    )
    present = [token for token, flag in zip(_PROFILE_TOKENS, flags) if flag]
    return "+".join(present) if present else "none"


def partition_setoids(n: int) -> tuple[Setoid, ...]:
    """All setoids on ``n`` elements, one per set partition, in restricted
    growth string order; the first is the single-class setoid, the last the
    identity."""
    labels = identity_setoid(n).labels

    def grow(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        top = max(prefix, default=-1)
        for block in range(top + 2):
            prefix.append(block)
            yield from grow(prefix)
            prefix.pop()

    out = []
    for rgs in grow([]):
        first: dict[int, int] = {}
        for i, block in enumerate(rgs):
            first.setdefault(block, i)
        out.append(Setoid(labels, tuple(first[block] for block in rgs)))
    return tuple(out)


def iter_relation_rows(n: int) -> Iterator[tuple[int, ...]]:
    """All ``2^(n*n)`` relation matrices, as row masks, in ascending order of
    the packed matrix integer (bit ``i*n + j`` encodes row ``i``, column ``j``)."""
    full = (1 << n) - 1
    for m in range(1 << (n * n)):
        yield tuple((m >> (i * n)) & full for i in range(n))


def matrix_bitstring(r: StrictRel) -> str:
    """Row-major 0/1 rendering; the canonical tie-break key for minima."""
    n = r.size
    return "".join("1" if r.has(i, j) else "0" for i in range(n) for j in range(n))


def leq_reflexive_closure_rows(r: StrictRel) -> tuple[int, ...]:
    """The third candidate weak order: below or equal. Kept as a lab helper
    only; it is the defective one on non-discrete structures."""
    return tuple(r.rows[i] | r.base.class_mask(i) for i in range(r.size))


@dataclass(frozen=True)
class EnumerationSummary:
    carrier_size: int
    equality_mode: str
    total_relations: int
    well_defined_count: int
    poset_count: int
    gord_count: int
    ordered_count: int
    profile_counts: tuple[tuple[str, int], ...]
    theorem_violations: tuple[str, ...]
    inventory: tuple[tuple[str, object], ...]

    def to_dict(self) -> dict:
        return {
            "carrier_size": self.carrier_size,
            "equality_mode": self.equality_mode,
            "total_relations": self.total_relations,
            "well_defined_count": self.well_defined_count,
            "poset_count": self.poset_count,
            "gord_count": self.gord_count,
            "ordered_count": self.ordered_count,
            "profile_counts": {key: count for key, count in self.profile_counts},
            "theorem_violations": list(self.theorem_violations),
            "inventory": {key: value for key, value in self.inventory},
        }


def _tag(setoid_idx: int, r: StrictRel) -> str:
    return f"setoid#{setoid_idx}:{matrix_bitstring(r)}"


def _relation_battery(r: StrictRel, profile: AxiomProfile, tag: str, violations: list[str]) -> None:
    n = r.size
    neg, pos = leq_neg_rows(r), leq_pos_rows(r)

    if profile.cotransitive and any(neg[x] & ~pos[x] for x in range(n)):
        violations.append(f"cotransitive relation whose neg weak order escapes the pos one: {tag}")
    if profile.asymmetric and any(pos[x] & ~neg[x] for x in range(n)):
        violations.append(f"asymmetric relation whose pos weak order escapes the neg one: {tag}")
    if profile.is_ordered_set:
        if neg != pos:
            violations.append(f"ordered set whose weak orders differ: {tag}")
        if not profile.is_generalized_ordered:
            violations.append(f"ordered set failing the generalized-order battery: {tag}")

    if any(not pos[x] >> x & 1 for x in range(n)):
        violations.append(f"pos weak order not reflexive: {tag}")
    if any(pos[y] & ~pos[x] for x in range(n) for y in range(n) if pos[x] >> y & 1):
        violations.append(f"pos weak order not transitive: {tag}")
    if profile.transitive and any(r.rows[x] & ~pos[x] for x in range(n)):
        violations.append(f"transitive relation not below its pos weak order: {tag}")

    if profile.asymmetric and profile.discrete:
        for x in range(n):
            if pos[x] & ~r.base.class_mask(x) & ~r.rows[x]:
                violations.append(f"discrete relation where weakly-below unequal pair is not strict: {tag}")
                break
    if profile.transitive and profile.discrete and not profile.cotransitive:
        violations.append(f"transitive discrete relation that is not cotransitive: {tag}")

    flipped = leq_pos_rows(dual(r))
    for x in range(n):
        for y in range(n):
            if bool(pos[x] >> y & 1) != bool(flipped[y] >> x & 1):
                violations.append(f"pos weak order of the dual is not the transpose: {tag}")
                break
        else:
            continue
        break

    if not r.base.is_identity:
        for name, rows in (("neg", neg), ("pos", pos)):
            if well_defined_violation(r.base, rows) is not None:
                violations.append(f"{name} weak order not well-defined: {tag}")


def _poset_battery(p: PosetRel, tag: str, violations: list[str]) -> None:
    strict = poset_to_strict(p)
    profile = classify(strict)
    if not profile.asymmetric:
        violations.append(f"poset bridge not asymmetric: {tag}")
    if not profile.transitive:
        violations.append(f"poset bridge not transitive: {tag}")
    star = check_star_condition(p)
    if star:
        if not profile.pos_antisymmetric:
            violations.append(f"star-condition poset bridge not positively antisymmetric: {tag}")
        pos = leq_pos_rows(strict)
        if any(pos[x] & ~p.rows[x] for x in range(p.size)):
            violations.append(f"star-condition poset where weakly-below escapes the order: {tag}")
    if check_total(p) and not star:
        violations.append(f"total poset failing the star condition: {tag}")


def _pair_dict(a: StrictRel, b: StrictRel) -> dict:
    return {"left": strict_to_dict(a), "right": strict_to_dict(b)}


class _MinTracker:
    """Keeps the smallest instance under the canonical tie-break key."""

    def __init__(self) -> None:
        self.key: tuple | None = None
        self.value: object = None

    def offer(self, key: tuple, value: object) -> None:
        if self.key is None or key < self.key:
            self.key = key
            self.value = value


def _product_battery(
    collected: Sequence[tuple[int, StrictRel, AxiomProfile]],
    violations: list[str],
) -> tuple[object, object, object]:
    """Same-size pair battery. Returns the three search outcomes:
    a non-cotransitive lexicographic product of ordered sets, a weak-lex
    positive-antisymmetry failure with a non-transitive left factor, and a
    weak-lex transitivity failure with a non-discrete generalized-ordered
    left factor (each ``None`` when the exhaustive search finds nothing)."""
    gords = [(i, r, bool(pf.discrete)) for i, r, pf in collected if pf.is_generalized_ordered]
    ordereds = [(i, r) for i, r, pf in collected if pf.is_ordered_set]
    asym_posanti = [
        (i, r, bool(pf.transitive))
        for i, r, pf in collected
        if pf.asymmetric and pf.pos_antisymmetric
    ]

    for ia, a, _ in gords:
        for ib, b, _ in gords:
            if not classify(lex_product(a, b)).is_generalized_ordered:
                violations.append(
                    f"lex product of generalized ordered sets not generalized ordered: {_tag(ia, a)} x {_tag(ib, b)}"
                )

    lex_cotrans_failure = _MinTracker()
    for ia, a in ordereds:
        for ib, b in ordereds:
            prod = lex_product(a, b)
            if not classify(prod).cotransitive:
                lex_cotrans_failure.offer(
                    (ia, matrix_bitstring(a), ib, matrix_bitstring(b)), _pair_dict(a, b)
                )

    posanti_failure = _MinTracker()
    translex_failure = _MinTracker()
    for ia, a, a_trans in asym_posanti:
        for ib, b, _ in asym_posanti:
            w = weak_lex_product(a, b)
            wp = classify(w)
            if not wp.asymmetric:
                violations.append(
                    f"weak lex product of asym+posanti factors not asymmetric: {_tag(ia, a)} x {_tag(ib, b)}"
                )
            if a_trans:
                if not wp.pos_antisymmetric:
                    violations.append(
                        "weak lex product with transitive asym+posanti left factor "
                        f"not positively antisymmetric: {_tag(ia, a)} x {_tag(ib, b)}"
                    )
            elif not wp.pos_antisymmetric:
                posanti_failure.offer(
                    (ia, matrix_bitstring(a), ib, matrix_bitstring(b)), _pair_dict(a, b)
                )

    for ia, a, a_discrete in gords:
        for ib, b, _ in gords:
            w = weak_lex_product(a, b)
            if a_discrete:
                if not classify(w).is_generalized_ordered:
                    violations.append(
                        f"weak lex product with discrete left factor not generalized ordered: {_tag(ia, a)} x {_tag(ib, b)}"
                    )
                lex = lex_product(a, b)
                if w.rows != lex.rows:
                    violations.append(
                        f"weak lex and lex orders differ for discrete left factor: {_tag(ia, a)} x {_tag(ib, b)}"
                    )
                if not check_isomorphism(identity_embedding(lex, w)):
                    violations.append(
                        f"identity map not an isomorphism between lex and weak lex: {_tag(ia, a)} x {_tag(ib, b)}"
                    )
            elif not classify(w).transitive:
                translex_failure.offer(
                    (ia, matrix_bitstring(a), ib, matrix_bitstring(b)), _pair_dict(a, b)
                )

    for ia, a in ordereds:
        # the coarse product ignores the unchosen side's relation and
        # equality entirely, so one arbitrary second factor covers them all
        blank = StrictRel(a.base, (0,) * a.size)
        left = coarse_product(a, blank, "left")
        if not classify(left).is_ordered_set:
            violations.append(f"left coarse product of an ordered set not ordered: {_tag(ia, a)}")
        right = coarse_product(blank, a, "right")
        if not classify(right).is_ordered_set:
            violations.append(f"right coarse product of an ordered set not ordered: {_tag(ia, a)}")

    return lex_cotrans_failure.value, posanti_failure.value, translex_failure.value


def enumerate_structures(
    size: int,
    equality: str = "identity",
    max_size: int | None = None,
) -> EnumerationSummary:
    """Classify every well-defined relation on the requested carriers and
    run the full theorem battery; see the module docstring.

    The carrier bound defaults to 4 for identity equality and 3 when all
    partitions are enumerated; larger requests raise.
    """
    if equality not in EQUALITY_MODES:
        raise ValueError(f"equality must be one of {EQUALITY_MODES}, got {equality!r}")
    bound = DEFAULT_BOUNDS[equality] if max_size is None else max_size
    if size < 0:
        raise ValueError("carrier size must be nonnegative")
    if size > bound:
        raise ValueError(f"carrier size {size} exceeds the enumeration bound {bound}")

    setoids = (
        (identity_setoid(size),) if equality == "identity" else partition_setoids(size)
    )

    total = 0
    well_defined = 0
    poset_count = 0
    profile_counts: dict[str, int] = {}
    violations: list[str] = []
    collected: list[tuple[int, StrictRel, AxiomProfile]] = []
    run_products = size * size <= 9
    gord_not_ordered = _MinTracker()
    gord_count = 0
    ordered_count = 0

    for setoid_idx, setoid in enumerate(setoids):
        for rows in iter_relation_rows(size):
            total += 1
            if well_defined_violation(setoid, rows) is not None:
                continue
            well_defined += 1
            r = StrictRel(setoid, rows)
            profile = classify(r)
            key = profile_key(profile)
            profile_counts[key] = profile_counts.get(key, 0) + 1
            tag = _tag(setoid_idx, r)
            _relation_battery(r, profile, tag, violations)

            if profile.is_generalized_ordered:
                gord_count += 1
                if not profile.is_ordered_set:
                    gord_not_ordered.offer((setoid_idx, matrix_bitstring(r)), strict_to_dict(r))
            if profile.is_ordered_set:
                ordered_count += 1

            if poset_violation(setoid, rows) is None:
                poset_count += 1
                _poset_battery(PosetRel(setoid, rows), tag, violations)

            if run_products:
                collected.append((setoid_idx, r, profile))

    inventory: list[tuple[str, object]] = [
        ("gord-not-ordered-minimal", gord_not_ordered.value),
    ]
    if run_products:
        lex_failure, posanti_failure, translex_failure = _product_battery(collected, violations)
        inventory.extend(
            [
                ("ordered-pair-lex-cotransitivity-failure", lex_failure),
                ("weak-lex-posanti-failure-nontransitive-left", posanti_failure),
                ("weak-lex-transitivity-failure-nondiscrete-left", translex_failure),
            ]
        )

    return EnumerationSummary(
        carrier_size=size,
        equality_mode=equality,
        total_relations=total,
        well_defined_count=well_defined,
        poset_count=poset_count,
        gord_count=gord_count,
        ordered_count=ordered_count,
        profile_counts=tuple(sorted(profile_counts.items())),
        theorem_violations=tuple(violations),
        inventory=tuple(inventory),
    )
