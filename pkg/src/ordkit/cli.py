"""Command-line front-end.

Exit codes are the failure channel: 0 for success, 1 for unreadable or
malformed input (including usage errors), 2 for structurally valid files
whose relation violates a semantic law (well-definedness for strict
relations, the partial-order laws for ``sim`` files). Nothing is printed to
stdout on a nonzero exit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .axioms import AxiomProfile, check_decidable_eq, check_total, classify
from .derived import leq_neg_rows, leq_pos_rows
from .enumeration import EQUALITY_MODES, EnumerationSummary, enumerate_structures
from .gallery import GALLERY_NAMES, GalleryOutcome, run_all_galleries, run_gallery
from .products import check_star_condition, coarse_product, lex_product, poset_to_strict, weak_lex_product
from .relfile import (
    InvalidStructureError,
    ParseError,
    dumps_structure,
    load_structure,
    parse_seq_compare,
)
from .sequences import seq_compare
from .setoid import PosetRel, StrictRel, Verdict, check_well_defined, dual

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2

_PRODUCT_KINDS = ("lex", "weaklex", "coarse-left", "coarse-right")


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        self.message = message
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for semantic
    # violations here, so usage problems are remapped to 1
    def error(self, message: str):
        raise _Failure(EXIT_PARSE, f"{self.prog}: error: {message}")


def _load_strict(path: str) -> StrictRel:
    structure = load_structure(path)
    if not isinstance(structure, StrictRel):
        raise _Failure(EXIT_PARSE, f'{path}: expected a strict relation file (key "less")')
    verdict = check_well_defined(structure)
    if not verdict:
        labels = tuple(structure.base.labels[i] for i in verdict.witness)
        raise _Failure(EXIT_INVALID, f"{path}: well-definedness fails at {labels}")
    return structure


def _verdict_text(name: str, verdict: Verdict, labels: Sequence[str]) -> str:
    if verdict:
        return f"{name}: yes"
    witness = ", ".join(labels[i] for i in verdict.witness)
    return f"{name}: no  (witness {witness})"


def _verdict_json(verdict: Verdict, labels: Sequence[str]) -> dict:
    return {
        "holds": bool(verdict),
        "witness": None if verdict.witness is None else [labels[i] for i in verdict.witness],
    }


def _matrix_lines(title: str, rows: Sequence[int], labels: Sequence[str]) -> list[str]:
    width = max((len(label) for label in labels), default=1)
    lines = [f"{title}:"]
    header = " " * (width + 2) + " ".join(label.rjust(width) for label in labels)
    lines.append(header)
    for x, label in enumerate(labels):
        cells = " ".join(("1" if rows[x] >> y & 1 else "0").rjust(width) for y in range(len(labels)))
        lines.append(f"  {label.rjust(width)} {cells}")
    return lines


def _profile_lines(profile: AxiomProfile, labels: Sequence[str]) -> list[str]:
    lines = [_verdict_text(name, verdict, labels) for name, verdict in profile.verdicts()]
    lines.append(f"generalized ordered: {'yes' if profile.is_generalized_ordered else 'no'}")
    lines.append(f"ordered set: {'yes' if profile.is_ordered_set else 'no'}")
    return lines


def _profile_dict(profile: AxiomProfile, labels: Sequence[str]) -> dict:
    out = {name: _verdict_json(verdict, labels) for name, verdict in profile.verdicts()}
    out["generalized_ordered"] = profile.is_generalized_ordered
    out["ordered_set"] = profile.is_ordered_set
    return out


def _matrix_json(rows: Sequence[int], n: int) -> list[list[int]]:
    return [[rows[x] >> y & 1 for y in range(n)] for x in range(n)]


def _cmd_check(args) -> str:
    structure = load_structure(args.path)
    labels = structure.base.labels
    if isinstance(structure, StrictRel):
        verdict = check_well_defined(structure)
        if not verdict:
            witness = tuple(labels[i] for i in verdict.witness)
            raise _Failure(EXIT_INVALID, f"{args.path}: well-definedness fails at {witness}")
        profile = classify(structure)
        neg, pos = leq_neg_rows(structure), leq_pos_rows(structure)
        if args.format == "json":
            return json.dumps(
                {
                    "kind": "strict",
                    "elements": list(labels),
                    "classes": [[labels[i] for i in cls] for cls in structure.base.classes()],
                    "profile": _profile_dict(profile, labels),
                    "leq_neg": _matrix_json(neg, structure.size),
                    "leq_pos": _matrix_json(pos, structure.size),
                },
                indent=2,
            )
        lines = [f"elements: {' '.join(labels)}" if labels else "elements: (empty)"]
        classes = " ".join("{" + ",".join(labels[i] for i in cls) + "}" for cls in structure.base.classes())
        lines.append(f"classes: {classes}" if classes else "classes: (none)")
        lines.extend(_profile_lines(profile, labels))
        lines.extend(_matrix_lines("leq_neg", neg, labels))
        lines.extend(_matrix_lines("leq_pos", pos, labels))
        return "\n".join(lines)

    poset: PosetRel = structure
    total = check_total(poset)
    star = check_star_condition(poset)
    decidable = check_decidable_eq(poset.base)
    bridge = poset_to_strict(poset)
    bridge_profile = classify(bridge)
    if args.format == "json":
        return json.dumps(
            {
                "kind": "poset",
                "elements": list(labels),
                "classes": [[labels[i] for i in cls] for cls in poset.base.classes()],
                "total": _verdict_json(total, labels),
                "star_condition": _verdict_json(star, labels),
                "decidable_equality": _verdict_json(decidable, labels),
                "bridge_profile": _profile_dict(bridge_profile, labels),
            },
            indent=2,
        )
    lines = [f"elements: {' '.join(labels)}" if labels else "elements: (empty)"]
    lines.append("kind: partial order")
    lines.append(_verdict_text("total", total, labels))
    lines.append(_verdict_text("star condition", star, labels))
    lines.append(_verdict_text("decidable equality", decidable, labels))
    lines.append("induced strict relation:")
    lines.extend("  " + line for line in _profile_lines(bridge_profile, labels))
    return "\n".join(lines)


def _cmd_derive(args) -> str:
    structure = _load_strict(args.path)
    rows = leq_neg_rows(structure) if args.order == "np" else leq_pos_rows(structure)
    title = "leq_neg" if args.order == "np" else "leq_pos"
    if args.format == "json":
        return json.dumps(
            {
                "order": title,
                "elements": list(structure.base.labels),
                "matrix": _matrix_json(rows, structure.size),
            },
            indent=2,
        )
    return "\n".join(_matrix_lines(title, rows, structure.base.labels))


def _emit(args, structure: StrictRel) -> str:
    text = dumps_structure(structure)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
        return f"wrote {args.output}"
    return text.rstrip("\n")


def _cmd_product(args) -> str:
    a = _load_strict(args.left)
    b = _load_strict(args.right)
    if args.kind == "lex":
        result = lex_product(a, b)
    elif args.kind == "weaklex":
        result = weak_lex_product(a, b)
    elif args.kind == "coarse-left":
        result = coarse_product(a, b, "left")
    else:
        result = coarse_product(a, b, "right")
    return _emit(args, result)


def _cmd_dual(args) -> str:
    return _emit(args, dual(_load_strict(args.path)))


def _summary_text(summary: EnumerationSummary) -> str:
    lines = [
        f"carrier size {summary.carrier_size}, {summary.equality_mode} equality",
        f"relations: {summary.total_relations} total, {summary.well_defined_count} well-defined",
        f"posets: {summary.poset_count}",
        f"{summary.gord_count} generalized ordered, {summary.ordered_count} ordered, "
        f"{len(summary.theorem_violations)} violations",
        "profile counts:",
    ]
    for key, count in summary.profile_counts:
        lines.append(f"  {key}: {count}")
    for violation in summary.theorem_violations:
        lines.append(f"VIOLATION: {violation}")
    lines.append("inventory:")
    for key, value in summary.inventory:
        lines.append(f"  {key}: {'none found' if value is None else json.dumps(value)}")
    return "\n".join(lines)


def _cmd_enumerate(args) -> str:
    max_size = None
    override = os.environ.get("ORDKIT_MAX_ENUM")
    if override is not None:
        try:
            max_size = int(override)
        except ValueError:
            raise _Failure(EXIT_PARSE, f"ORDKIT_MAX_ENUM must be an integer, got {override!r}")
    try:
        summary = enumerate_structures(args.size, args.equality, max_size=max_size)
    except ValueError as exc:
        raise _Failure(EXIT_PARSE, str(exc))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            json.dump(summary.to_dict(), handle, indent=2)
            handle.write("\n")
    if args.format == "json":
        return json.dumps(summary.to_dict(), indent=2)
    return _summary_text(summary)


def _outcome_text(outcome: GalleryOutcome) -> str:
    status = "PASS" if outcome.passed else "FAIL"
    lines = [f"[{status}] {outcome.name}"]
    lines.extend(f"  {line}" for line in outcome.lines)
    return "\n".join(lines)


def _cmd_gallery(args) -> str:
    if args.name is not None:
        try:
            outcomes = (run_gallery(args.name),)
        except KeyError as exc:
            raise _Failure(EXIT_PARSE, str(exc.args[0]))
    else:
        outcomes = run_all_galleries()
    if not all(outcome.passed for outcome in outcomes):
        raise _Failure(EXIT_PARSE, "gallery failure: " + ", ".join(o.name for o in outcomes if not o.passed))
    if args.format == "json":
        return json.dumps(
            [
                {"name": o.name, "passed": o.passed, "lines": list(o.lines)}
                for o in outcomes
            ],
            indent=2,
        )
    return "\n".join(_outcome_text(outcome) for outcome in outcomes)


def _cmd_seq_compare(args) -> str:
    try:
        text = open(args.path, encoding="utf-8").read()
    except OSError as exc:
        raise _Failure(EXIT_PARSE, f"cannot read {args.path}: {exc}")
    base, f, g = parse_seq_compare(text)
    verdict = check_well_defined(base)
    if not verdict:
        labels = tuple(base.base.labels[i] for i in verdict.witness)
        raise _Failure(EXIT_INVALID, f"{args.path}: base well-definedness fails at {labels}")
    result = seq_compare(f, g)
    if args.format == "json":
        return json.dumps(
            {"outcome": result.outcome.value, "witness_index": result.witness_index},
            indent=2,
        )
    if result.witness_index is None:
        return result.outcome.value
    return f"{result.outcome.value} (witness index {result.witness_index})"


def _build_parser() -> _Parser:
    parser = _Parser(prog="ordkit", description="Finite order structures toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="classify a relation file")
    check.add_argument("path")
    check.add_argument("--format", choices=("text", "json"), default="text")
    check.set_defaults(fn=_cmd_check)

    derive = sub.add_parser("derive", help="print a derived weak order")
    derive.add_argument("path")
    derive.add_argument("--order", choices=("np", "pp"), required=True)
    derive.add_argument("--format", choices=("text", "json"), default="text")
    derive.set_defaults(fn=_cmd_derive)

    product = sub.add_parser("product", help="emit a product relation file")
    product.add_argument("left")
    product.add_argument("right")
    product.add_argument("--kind", choices=_PRODUCT_KINDS, required=True)
    product.add_argument("--output")
    product.set_defaults(fn=_cmd_product)

    dual_cmd = sub.add_parser("dual", help="emit the transposed relation file")
    dual_cmd.add_argument("path")
    dual_cmd.add_argument("--output")
    dual_cmd.set_defaults(fn=_cmd_dual)

    enum = sub.add_parser("enumerate", help="exhaustively verify all small relations")
    enum.add_argument("--size", type=int, required=True)
    enum.add_argument("--equality", choices=EQUALITY_MODES, default="identity")
    enum.add_argument("--format", choices=("text", "json"), default="text")
    enum.add_argument("--output", help="also write a machine-readable report file")
    enum.set_defaults(fn=_cmd_enumerate)

    gallery = sub.add_parser("gallery", help="run counterexample and extraction demos")
    gallery.add_argument("name", nargs="?", default=None)
    gallery.add_argument("--format", choices=("text", "json"), default="text")
    gallery.set_defaults(fn=_cmd_gallery)

    seq = sub.add_parser("seq-compare", help="compare two eventually constant sequences")
    seq.add_argument("path")
    seq.add_argument("--format", choices=("text", "json"), default="text")
    seq.set_defaults(fn=_cmd_seq_compare)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        output = args.fn(args)
    except _Failure as failure:
        print(failure.message, file=sys.stderr)
        return failure.code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidStructureError as exc:
        print(f"invalid structure: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
