from itertools import product

import pytest
from hypothesis import given, strategies as st

from quadrics.posets import NotAPartialOrder, Poset


@st.composite
def dags(draw):
    """Random relation on range(n) pointing only upward in index."""
    n = draw(st.integers(1, 9))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=20))
    return n, [(a, b) for a, b in pairs if a < b]


def closure_oracle(n, pairs):
    rel = {(i, i) for i in range(n)} | set(pairs)
    while True:
        extra = {(a, d) for (a, b), (c, d) in product(rel, rel) if b == c} - rel
        if not extra:
            return rel
        rel |= extra


@given(dags())
def test_relation_is_transitive_closure(d):
    n, pairs = d
    p = Poset.from_relation(range(n), pairs)
    assert set(p.relation()) == closure_oracle(n, pairs)


@given(dags())
def test_covers_generate_the_order(d):
    n, pairs = d
    p = Poset.from_relation(range(n), pairs)
    covers = p.covers()
    assert Poset.from_relation(range(n), covers).same_order(p)
    rel = p.relation()
    for a, b in covers:
        assert a != b
        assert not any((a, c) in rel and (c, b) in rel for c in range(n) if c not in (a, b))


@given(dags())
def test_opposite_and_restrict(d):
    n, pairs = d
    p = Poset.from_relation(range(n), pairs)
    assert p.opposite().opposite().same_order(p)
    assert all(p.opposite().leq(b, a) for a, b in p.relation())
    evens = [x for x in range(n) if x % 2 == 0]
    r = p.restrict(x for x in evens)
    assert set(r.relation()) == {(a, b) for a, b in p.relation() if a in evens and b in evens}


@given(dags())
def test_rank_respects_covers(d):
    n, pairs = d
    p = Poset.from_relation(range(n), pairs)
    rank = p.rank()
    assert all(rank[a] < rank[b] for a, b in p.covers())
    graded, bad = p.is_graded()
    assert graded == (p.failing_intervals() == [])
    if not graded:
        assert bad in p.failing_intervals()


def test_cycle_rejected():
    with pytest.raises(NotAPartialOrder):
        Poset.from_relation("ab", [("a", "b"), ("b", "a")])


def test_ungraded_pentagon():
    p = Poset.from_relation("0abc1", [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")])
    assert p.is_graded() == (False, ("0", "1"))
    assert p.minimum() == "0" and p.maximum() == "1"
