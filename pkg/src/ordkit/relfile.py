"""JSON file format for relations.

A strict-relation file looks like::

    { "elements": ["a","b","c"], "equal": [["a","b"]], "less": [["a","b"]] }

``equal`` is optional and defaults to identity; duplicate pairs are
idempotent. Partial-order files use the key ``sim`` in place of ``less``.
Matrices are loaded exactly as listed, without saturation, so files can
carry ill-defined relations; callers validate and report.
"""

from __future__ import annotations

import json
from pathlib import Path

from .sequences import EvConstSeq
from .setoid import PosetRel, Setoid, StrictRel, make_setoid, poset_violation

__all__ = [
    "ParseError",
    "InvalidStructureError",
    "parse_structure",
    "load_structure",
    "strict_to_dict",
    "poset_to_dict",
    "structure_to_dict",
    "dumps_structure",
    "parse_seq_compare",
]


class ParseError(Exception):
    """Malformed file: bad JSON or a violated schema; the message names the
    offending line or field."""


class InvalidStructureError(Exception):
    """Structurally valid file whose relation violates a semantic law."""

    def __init__(self, law: str, witness: tuple[str, ...]):
        self.law = law
        self.witness = witness
        super().__init__(f"{law} fails at {witness}")


def _string_pairs(value: object, key: str, labels: set[str]) -> list[tuple[str, str]]:
    if not isinstance(value, list):
        raise ParseError(f'"{key}" must be a list of label pairs')
    out = []
    for i, pair in enumerate(value):
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, str) for x in pair)):
            raise ParseError(f'"{key}" entry #{i} must be a pair of labels')
        for label in pair:
            if label not in labels:
                raise ParseError(f'"{key}" entry #{i} references unknown label {label!r}')
        out.append((pair[0], pair[1]))
    return out


def parse_structure(text: str) -> StrictRel | PosetRel:
    """Parse a relation file; the ``less`` / ``sim`` key selects the kind.

    Strict relations are returned raw (possibly ill-defined); partial
    orders are validated and raise :class:`InvalidStructureError` when a
    law fails.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ParseError("top-level value must be an object")
    if "elements" not in data:
        raise ParseError('missing "elements" field')
    elements = data["elements"]
    if not (isinstance(elements, list) and all(isinstance(x, str) for x in elements)):
        raise ParseError('"elements" must be a list of strings')

    labels = set(elements)
    if len(labels) != len(elements):
        raise ParseError('"elements" must be pairwise distinct')

    equal = _string_pairs(data.get("equal", []), "equal", labels)
    try:
        base = make_setoid(elements, equal)
    except ValueError as exc:
        raise ParseError(str(exc)) from None

    has_less, has_sim = "less" in data, "sim" in data
    if has_less == has_sim:
        raise ParseError('exactly one of "less" or "sim" is required')
    key = "less" if has_less else "sim"
    rows = [0] * base.size
    for a, b in _string_pairs(data[key], key, labels):
        rows[base.index(a)] |= 1 << base.index(b)

    if has_less:
        return StrictRel(base, tuple(rows))
    violation = poset_violation(base, rows)
    if violation is not None:
        law, witness = violation
        raise InvalidStructureError(law, tuple(base.labels[i] for i in witness))
    return PosetRel(base, tuple(rows))


def load_structure(path: str | Path) -> StrictRel | PosetRel:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_structure(text)


def _equal_pairs(base: Setoid) -> list[list[str]]:
    pairs = []
    for members in base.classes():
        rep = members[0]
        for other in members[1:]:
            pairs.append([base.labels[rep], base.labels[other]])
    return pairs


def strict_to_dict(r: StrictRel) -> dict:
    return {
        "elements": list(r.base.labels),
        "equal": _equal_pairs(r.base),
        "less": [[r.base.labels[x], r.base.labels[y]] for x, y in r.pairs()],
    }


def poset_to_dict(p: PosetRel) -> dict:
    return {
        "elements": list(p.base.labels),
        "equal": _equal_pairs(p.base),
        "sim": [[p.base.labels[x], p.base.labels[y]] for x, y in p.pairs()],
    }


def structure_to_dict(value: StrictRel | PosetRel) -> dict:
    if isinstance(value, StrictRel):
        return strict_to_dict(value)
    return poset_to_dict(value)


def dumps_structure(value: StrictRel | PosetRel) -> str:
    return json.dumps(structure_to_dict(value), indent=2) + "\n"


def _parse_seq(data: object, key: str, base: StrictRel) -> EvConstSeq:
    if not (isinstance(data, dict) and "prefix" in data and "tail" in data):
        raise ParseError(f'"{key}" must be an object with "prefix" and "tail"')
    prefix_labels = data["prefix"]
    if not (isinstance(prefix_labels, list) and all(isinstance(x, str) for x in prefix_labels)):
        raise ParseError(f'"{key}.prefix" must be a list of labels')
    if not isinstance(data["tail"], str):
        raise ParseError(f'"{key}.tail" must be a label')
    try:
        prefix = tuple(base.base.index(x) for x in prefix_labels)
        tail = base.base.index(data["tail"])
    except KeyError as exc:
        raise ParseError(f'"{key}" references {exc.args[0]}') from None
    return EvConstSeq(base, prefix, tail)


def parse_seq_compare(text: str) -> tuple[StrictRel, EvConstSeq, EvConstSeq]:
    """Parse a sequence-comparison file: an inline base relation plus two
    eventually constant sequences given by label prefixes and tails."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ParseError("top-level value must be an object")
    for key in ("base", "f", "g"):
        if key not in data:
            raise ParseError(f'missing "{key}" field')
    base = parse_structure(json.dumps(data["base"]))
    if not isinstance(base, StrictRel):
        raise ParseError('"base" must be a strict relation (key "less")')
    return base, _parse_seq(data["f"], "f", base), _parse_seq(data["g"], "g", base)
