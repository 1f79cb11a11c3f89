from __future__ import annotations

import hypothesis.strategies as st
import pytest

from ordkit import StrictRel, identity_setoid, make_setoid, make_strict_rel


@st.composite
def setoids(draw, max_size: int = 4):
    n = draw(st.integers(min_value=0, max_value=max_size))
    labels = [f"x{i}" for i in range(n)]
    if n == 0:
        return make_setoid(labels)
    pairs = draw(
        st.lists(
            st.tuples(st.sampled_from(labels), st.sampled_from(labels)),
            max_size=n,
        )
    )
    return make_setoid(labels, pairs)


@st.composite
def strict_rels(draw, max_size: int = 4):
    """Well-defined relations: built through the saturating constructor."""
    base = draw(setoids(max_size=max_size))
    if base.size == 0:
        return make_strict_rel(base)
    labels = list(base.labels)
    pairs = draw(
        st.lists(
            st.tuples(st.sampled_from(labels), st.sampled_from(labels)),
            max_size=2 * base.size,
        )
    )
    return make_strict_rel(base, pairs)


@st.composite
def raw_rels(draw, max_size: int = 4):
    """Arbitrary matrices, not necessarily well-defined."""
    base = draw(setoids(max_size=max_size))
    rows = tuple(
        draw(st.integers(min_value=0, max_value=(1 << base.size) - 1))
        for _ in range(base.size)
    )
    return StrictRel(base, rows)


@pytest.fixture
def sec3_example() -> StrictRel:
    """Three points with the single arrow a below b."""
    return make_strict_rel(make_setoid(["a", "b", "c"]), [("a", "b")])


@pytest.fixture
def chain3() -> StrictRel:
    return make_strict_rel(
        identity_setoid(3), [("a", "b"), ("b", "c"), ("a", "c")]
    )


@pytest.fixture
def chain2() -> StrictRel:
    return make_strict_rel(make_setoid(["0", "1"]), [("0", "1")])
