from __future__ import annotations

import pytest
from hypothesis import given

from ordkit import (
    PosetRel,
    Setoid,
    StrictRel,
    check_well_defined,
    dual,
    make_poset_rel,
    make_setoid,
    make_strict_rel,
)
from conftest import strict_rels
from naive import naive_well_defined


class TestMakeSetoid:
    def test_identity_classes(self):
        s = make_setoid(["a", "b", "c"])
        assert s.reps == (0, 1, 2)
        assert s.classes() == ((0,), (1,), (2,))

    def test_single_pair_merges(self):
        s = make_setoid(["a", "b"], [("a", "b")])
        assert s.reps == (0, 0)
        assert s.eq(0, 1)

    def test_transitive_closure(self):
        s = make_setoid(["a", "b", "c"], [("a", "b"), ("b", "c")])
        assert s.reps == (0, 0, 0)

    def test_pair_order_is_irrelevant(self):
        forward = make_setoid(["a", "b", "c", "d"], [("a", "b"), ("c", "d"), ("b", "c")])
        backward = make_setoid(["a", "b", "c", "d"], [("b", "c"), ("c", "d"), ("a", "b")])
        assert forward == backward

    def test_duplicate_label_rejected(self):
        with pytest.raises(ValueError, match="duplicate label"):
            make_setoid(["a", "a"])

    def test_unknown_label_rejected(self):
        with pytest.raises(ValueError, match="unknown label"):
            make_setoid(["a"], [("a", "z")])

    def test_empty_carrier_is_legal(self):
        s = make_setoid([])
        assert s.size == 0
        assert s.classes() == ()

    def test_self_pairs_and_duplicates_are_idempotent(self):
        s = make_setoid(["a", "b"], [("a", "a"), ("a", "b"), ("b", "a")])
        assert s.reps == (0, 0)


class TestSetoidValidation:
    def test_non_idempotent_reps_rejected(self):
        with pytest.raises(ValueError, match="idempotent"):
            Setoid(("a", "b", "c"), (1, 2, 2))

    def test_non_minimal_representative_rejected(self):
        with pytest.raises(ValueError, match="smallest"):
            Setoid(("a", "b"), (1, 1))

    def test_rep_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            Setoid(("a",), (3,))


class TestMakeStrictRel:
    def test_single_arrow(self, sec3_example):
        assert sec3_example.rows == (0b010, 0, 0)

    def test_saturation_under_equality(self):
        base = make_setoid(["a", "b"], [("a", "b")])
        r = make_strict_rel(base, [("a", "b")])
        assert r.rows == (0b11, 0b11)

    def test_chain(self):
        base = make_setoid(["0", "1", "2"])
        r = make_strict_rel(base, [("0", "1"), ("1", "2"), ("0", "2")])
        assert r.rows == (0b110, 0b100, 0)

    def test_unknown_label_rejected(self):
        with pytest.raises(KeyError, match="unknown label"):
            make_strict_rel(make_setoid(["a"]), [("a", "b")])

    @given(strict_rels())
    def test_constructor_output_is_well_defined(self, r):
        assert check_well_defined(r)
        assert naive_well_defined(r)


class TestCheckWellDefined:
    def test_identity_setoid_is_vacuous(self, sec3_example):
        assert check_well_defined(sec3_example)

    def test_raw_matrix_violation(self):
        base = make_setoid(["a", "b"], [("a", "b")])
        raw = StrictRel(base, (0b10, 0))
        verdict = check_well_defined(raw)
        assert not verdict
        assert verdict.witness == (0, 0, 1, 0)
        x, xp, y, yp = verdict.witness
        assert base.eq(x, xp) and base.eq(y, yp)
        assert raw.has(x, y) and not raw.has(xp, yp)

    def test_empty_relation_vacuous(self):
        base = make_setoid(["a", "b"], [("a", "b")])
        assert check_well_defined(StrictRel(base, (0, 0)))

    @given(strict_rels())
    def test_agrees_with_naive_oracle(self, r):
        raw = StrictRel(r.base, tuple(row & ~1 for row in r.rows))
        assert bool(check_well_defined(raw)) == naive_well_defined(raw)


class TestDual:
    def test_transposes_chain(self, chain3):
        d = dual(chain3)
        assert d.rows == (0, 0b001, 0b011)

    def test_transposes_single_arrow(self, sec3_example):
        assert dual(sec3_example).rows == (0, 0b001, 0)

    @given(strict_rels())
    def test_involution(self, r):
        assert dual(dual(r)) == r


class TestPosetRel:
    def test_make_poset_adds_diagonal(self):
        base = make_setoid(["a", "b"])
        p = make_poset_rel(base, [("a", "b")])
        assert p.rows == (0b11, 0b10)

    def test_missing_reflexivity_rejected(self):
        base = make_setoid(["a", "b"])
        with pytest.raises(ValueError, match="reflexivity"):
            PosetRel(base, (0b00, 0b10))

    def test_intransitive_rejected(self):
        base = make_setoid(["a", "b", "c"])
        with pytest.raises(ValueError, match="transitivity"):
            PosetRel(base, (0b011, 0b110, 0b100))

    def test_mutual_unequal_pair_rejected(self):
        base = make_setoid(["a", "b"])
        with pytest.raises(ValueError, match="antisymmetry"):
            PosetRel(base, (0b11, 0b11))

    def test_mutual_equal_pair_allowed(self):
        base = make_setoid(["a", "b"], [("a", "b")])
        p = make_poset_rel(base, [])
        assert p.rows == (0b11, 0b11)

    def test_ill_defined_poset_rejected(self):
        base = make_setoid(["a", "b", "c"], [("b", "c")])
        with pytest.raises(ValueError, match="well-definedness"):
            PosetRel(base, (0b011, 0b110, 0b100))
