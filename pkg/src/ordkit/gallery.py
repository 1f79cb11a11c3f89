"""Executable counterexample instances and oracle-extraction demos.

Several classical facts about these structures are interesting precisely
because the general statement carries decision content: a procedure that
decides the conclusion for a cleverly built instance reveals the truth value
of an arbitrary proposition. Each parameterized gallery builds that instance
family for both values of a Boolean oracle and demonstrates that the
promised decision procedure recovers the oracle. The fixed galleries exhibit
the standing counterexamples.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .axioms import AxiomProfile, check_positive_antisymmetry, classify
from .derived import leq_neg_rows, leq_pos_rows
from .products import check_star_condition, lex_product, pair_index, poset_to_strict
from .setoid import PosetRel, StrictRel, make_poset_rel, make_setoid, make_strict_rel

__all__ = [
    "ExtractionReport",
    "BridgeFailureReport",
    "GalleryOutcome",
    "GALLERY_NAMES",
    "gallery_non_cotransitive",
    "gallery_weak_lem_from_cotransitivity",
    "gallery_lem_from_lex_cotransitivity",
    "gallery_double_negation_from_strengthening",
    "gallery_weak_lem_from_totality",
    "gallery_bridge_antisymmetry_failure",
    "gallery_sierpinski",
    "run_gallery",
    "run_all_galleries",
]


@dataclass(frozen=True)
class ExtractionReport:
    """One run of a parameterized instance.

    ``revealed`` is the disjunct the decision procedure selected;
    ``consistent`` says it matches the oracle value the instance was built
    from. ``checks`` are instance-level facts the construction promises,
    verified on the concrete structure.
    """

    instance: str
    oracle: bool
    revealed: str
    consistent: bool
    checks: tuple[tuple[str, bool], ...] = ()
    relation: StrictRel | None = None
    poset: PosetRel | None = None

    @property
    def passed(self) -> bool:
        return self.consistent and all(ok for _, ok in self.checks)


@dataclass(frozen=True)
class BridgeFailureReport:
    """The standing failure of positive antisymmetry for the strict relation
    carved out of a bare partial order."""

    poset: PosetRel
    strict: StrictRel
    pos_a_below_b: bool
    pos_b_below_a: bool
    witness: tuple[int, int] | None

    @property
    def passed(self) -> bool:
        return self.pos_a_below_b and self.pos_b_below_a and self.witness == (0, 1)


def gallery_non_cotransitive() -> tuple[StrictRel, AxiomProfile]:
    """Three points with a single arrow: a generalized ordered set whose
    relation is not cotransitive (the third point breaks the disjunction)."""
    base = make_setoid(["a", "b", "c"])
    rel = make_strict_rel(base, [("a", "b")])
    return rel, classify(rel)


def gallery_weak_lem_from_cotransitivity(oracle: bool) -> ExtractionReport:
    """Three-point family in which deciding the cotransitivity disjunction
    for the fixed pair reveals the oracle.

    The instance always has a below b; a sits below c exactly when the
    oracle is true, and c below b exactly when it is false. Either way the
    negative weak order is contained in the positive one, so the instance
    satisfies the hypothesis under which the two weak orders allegedly
    force cotransitivity; resolving "a below c, or c below b" then reads
    the oracle back out.
    """
    base = make_setoid(["a", "b", "c"])
    pairs = [("a", "b")]
    if oracle:
        pairs.append(("a", "c"))
    else:
        pairs.append(("c", "b"))
    rel = make_strict_rel(base, pairs)

    neg, pos = leq_neg_rows(rel), leq_pos_rows(rel)
    hypothesis = all(neg[x] & ~pos[x] == 0 for x in range(3))

    a, b, c = 0, 1, 2
    if rel.has(a, c):
        revealed = "a<c"
    elif rel.has(c, b):
        revealed = "c<b"
    else:
        revealed = "stuck"
    consistent = revealed == ("a<c" if oracle else "c<b")
    return ExtractionReport(
        instance="weak-lem-cotransitivity",
        oracle=oracle,
        revealed=revealed,
        consistent=consistent,
        checks=(
            ("neg weak order within pos weak order", hypothesis),
            ("a below b", rel.has(a, b)),
            ("disjunction resolved", revealed != "stuck"),
        ),
        relation=rel,
    )


def gallery_lem_from_lex_cotransitivity(oracle: bool) -> ExtractionReport:
    """Two-factor family in which cotransitivity of the lexicographic
    product of two ordered sets decides the oracle.

    The left factor is a two-point set ordered one way or the other by the
    oracle; the right factor is the fixed two-point chain. The marked
    element sits at 1 when the oracle is true and at 0 otherwise, and the
    case analysis of the cotransitivity disjunction for ((0,0),(0,1))
    against (marked, q) recovers the oracle for every q.
    """
    x_base = make_setoid(["0", "1"])
    x_rel = make_strict_rel(x_base, [("0", "1")] if oracle else [("1", "0")])
    y_rel = make_strict_rel(make_setoid(["0", "1"]), [("0", "1")])
    prod = lex_product(x_rel, y_rel)

    marked = 1 if oracle else 0
    bottom = pair_index(0, 0, 2)
    top = pair_index(0, 1, 2)

    revealed = "stuck"
    agreed = True
    for q in range(2):
        candidate = pair_index(marked, q, 2)
        if prod.has(bottom, candidate):
            # below the candidate: either 0 < marked (so the oracle holds)
            # or 0 = marked, putting 0 in the marked set (so it fails)
            verdict = "P" if x_rel.has(0, marked) else "not P"
        elif prod.has(candidate, top):
            verdict = "not P"
        else:
            verdict = "stuck"
        if revealed == "stuck":
            revealed = verdict
        agreed = agreed and verdict == revealed

    consistent = revealed == ("P" if oracle else "not P")
    return ExtractionReport(
        instance="lem-lex-product",
        oracle=oracle,
        revealed=revealed,
        consistent=consistent and agreed,
        checks=(
            ("left factor is an ordered set", classify(x_rel).is_ordered_set),
            ("right factor is an ordered set", classify(y_rel).is_ordered_set),
            ("(0,0) below (0,1) in the product", prod.has(bottom, top)),
        ),
        relation=prod,
    )


def gallery_double_negation_from_strengthening(oracle: bool) -> ExtractionReport:
    """Two-point family in which strengthening "unequal and weakly below"
    to "strictly below" decides the oracle.

    When the oracle is true the points are distinct with a below b; when
    false the points are equal and the relation empty. In both cases a is
    weakly below b in the positive order, so a procedure producing a strict
    arrow from "unequal and weakly below" reveals the oracle.
    """
    if oracle:
        base = make_setoid(["a", "b"])
        rel = make_strict_rel(base, [("a", "b")])
    else:
        base = make_setoid(["a", "b"], [("a", "b")])
        rel = make_strict_rel(base, [])

    pos = leq_pos_rows(rel)
    weakly_below = bool(pos[0] >> 1 & 1)

    if not base.eq(0, 1):
        revealed = "a<b" if rel.has(0, 1) else "stuck"
    else:
        revealed = "none"
    consistent = revealed == ("a<b" if oracle else "none")
    return ExtractionReport(
        instance="double-negation",
        oracle=oracle,
        revealed=revealed,
        consistent=consistent,
        checks=(("a weakly below b", weakly_below),),
        relation=rel,
    )


def gallery_weak_lem_from_totality(oracle: bool) -> ExtractionReport:
    """Two-point partial-order family in which deciding totality reveals
    the oracle.

    The order relates a to b exactly when the oracle fails and b to a
    exactly when it holds. The instance always satisfies the condition that
    "not strictly below" forces relatedness, so a totality decision for the
    pair (a, b) picks the disjunct that encodes the oracle.
    """
    base = make_setoid(["a", "b"])
    pairs = [("b", "a")] if oracle else [("a", "b")]
    poset = make_poset_rel(base, pairs)

    star = check_star_condition(poset)

    if poset.has(0, 1):
        revealed = "a~b"
    elif poset.has(1, 0):
        revealed = "b~a"
    else:
        revealed = "stuck"
    consistent = revealed == ("b~a" if oracle else "a~b")
    return ExtractionReport(
        instance="weak-lem-totality",
        oracle=oracle,
        revealed=revealed,
        consistent=consistent,
        checks=(("star condition holds", bool(star)),),
        poset=poset,
    )


def gallery_bridge_antisymmetry_failure() -> BridgeFailureReport:
    """Discrete two-point partial order: the induced strict relation is
    empty, both points are mutually weakly below in the positive order,
    yet they are unequal."""
    base = make_setoid(["a", "b"])
    poset = make_poset_rel(base, [])
    strict = poset_to_strict(poset)
    pos = leq_pos_rows(strict)
    verdict = check_positive_antisymmetry(strict)
    return BridgeFailureReport(
        poset=poset,
        strict=strict,
        pos_a_below_b=bool(pos[0] >> 1 & 1),
        pos_b_below_a=bool(pos[1] >> 0 & 1),
        witness=verdict.witness,
    )


def gallery_sierpinski() -> tuple[StrictRel, AxiomProfile]:
    """The two-point model of the order on truth values, with exactly
    0 below 1. Classically this collapse is even cotransitive; the decision
    content lost in the collapse is carried by the extraction demos."""
    base = make_setoid(["0", "1"])
    rel = make_strict_rel(base, [("0", "1")])
    return rel, classify(rel)


@dataclass(frozen=True)
class GalleryOutcome:
    name: str
    passed: bool
    lines: tuple[str, ...] = field(default=())


def _extraction_lines(report: ExtractionReport) -> tuple[str, ...]:
    lines = [
        f"oracle={report.oracle}: revealed {report.revealed!r}"
        f" ({'consistent' if report.consistent else 'INCONSISTENT'})"
    ]
    for name, ok in report.checks:
        lines.append(f"  check {name}: {'ok' if ok else 'FAILED'}")
    return tuple(lines)


def _run_both(name: str, fn) -> GalleryOutcome:
    reports = [fn(True), fn(False)]
    lines: list[str] = []
    for report in reports:
        lines.extend(_extraction_lines(report))
    return GalleryOutcome(name, all(r.passed for r in reports), tuple(lines))


def _run_non_cotransitive() -> GalleryOutcome:
    rel, profile = gallery_non_cotransitive()
    neg, pos = leq_neg_rows(rel), leq_pos_rows(rel)
    neg_not_in_pos = bool(neg[1] >> 2 & 1) and not pos[1] >> 2 & 1
    ok = (
        profile.is_generalized_ordered
        and not profile.is_ordered_set
        and not profile.cotransitive
        and profile.cotransitive.witness == (0, 1, 2)
        and neg_not_in_pos
    )
    lines = (
        f"generalized ordered: {profile.is_generalized_ordered}",
        f"cotransitive: {bool(profile.cotransitive)} witness {profile.cotransitive.witness}",
        f"neg weak order escapes pos weak order at (b,c): {neg_not_in_pos}",
    )
    return GalleryOutcome("non-cotransitive", ok, lines)


def _run_bridge_failure() -> GalleryOutcome:
    report = gallery_bridge_antisymmetry_failure()
    lines = (
        f"a weakly below b: {report.pos_a_below_b}",
        f"b weakly below a: {report.pos_b_below_a}",
        f"positive antisymmetry witness: {report.witness}",
    )
    return GalleryOutcome("bridge-failure", report.passed, lines)


def _run_sierpinski() -> GalleryOutcome:
    rel, profile = gallery_sierpinski()
    ok = profile.is_generalized_ordered and bool(profile.cotransitive) and rel.has(0, 1)
    lines = (
        f"generalized ordered: {profile.is_generalized_ordered}",
        f"0 below 1: {rel.has(0, 1)}",
        f"cotransitive in the two-point collapse: {bool(profile.cotransitive)}",
    )
    return GalleryOutcome("sierpinski", ok, lines)


_RUNNERS = {
    "non-cotransitive": _run_non_cotransitive,
    "weak-lem-cotransitivity": lambda: _run_both(
        "weak-lem-cotransitivity", gallery_weak_lem_from_cotransitivity
    ),
    "lem-lex-product": lambda: _run_both("lem-lex-product", gallery_lem_from_lex_cotransitivity),
    "double-negation": lambda: _run_both(
        "double-negation", gallery_double_negation_from_strengthening
    ),
    "weak-lem-totality": lambda: _run_both("weak-lem-totality", gallery_weak_lem_from_totality),
    "bridge-failure": _run_bridge_failure,
    "sierpinski": _run_sierpinski,
}

GALLERY_NAMES = tuple(_RUNNERS)


def run_gallery(name: str) -> GalleryOutcome:
    try:
        runner = _RUNNERS[name]
    except KeyError:
        raise KeyError(f"unknown gallery {name!r}; valid names: {', '.join(GALLERY_NAMES)}") from None
    return runner()


def run_all_galleries() -> tuple[GalleryOutcome, ...]:
    return tuple(run_gallery(name) for name in GALLERY_NAMES)
