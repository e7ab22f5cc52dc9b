import pytest

from quadrics.bbcells import weyl_act
from quadrics.degeninv import enumerate_barred, refinement_covers, special_compositions, special_element
from quadrics.gkm import (
    OpenProblemError, curve_other_fixed_points, i_of, is_special, reduce_to_special,
    simple_root, tangent_weights, weyl_act_weight,
)
from quadrics.io import parse_degenerate_involution as P
from quadrics.permgroup import longest_parabolic_element, reduced_words


def test_i_of():
    assert i_of(P("1|2|3")) == set()
    assert i_of(P("1|32")) == {2}
    assert i_of(P("21|43")) == {1, 3}


def test_is_special():
    assert is_special(P("21|3"))
    assert not is_special(P("31|2"))
    for n in range(1, 6):
        for mu in special_compositions(n):
            assert is_special(special_element(mu))


def test_weights_all_singletons():
    t = tangent_weights(P("1|2|3"))
    assert sorted(t.horizontal) == sorted([(-1, 1, 0), (-1, 0, 1), (0, -1, 1)])
    assert t.vertical == ()
    assert sorted(t.normal) == sorted([(-2, 2, 0), (0, -2, 2)])
    assert len(t) == 5


def test_weights_one_two():
    t = tangent_weights(P("1|32"))
    assert len(t.horizontal) == 2
    assert set(t.vertical) == {(0, 1, -1), (0, -1, 1)}
    assert t.normal == ((-2, 1, 1),)


def test_weights_two_one():
    t = tangent_weights(P("21|3"))
    # -(alpha_1 + 2 alpha_2)
    assert t.normal == ((-1, -1, 2),)


def test_weights_need_special():
    with pytest.raises(ValueError):
        tangent_weights(P("31|2"))


def _simple_coords(v):
    """Coefficients of v in the simple roots."""
    out, acc = [], 0
    for x in v[:-1]:
        acc += x
        out.append(acc)
    return out


@pytest.mark.parametrize("n", range(1, 6))
def test_weight_count_and_shape(n):
    for mu in special_compositions(n):
        g = special_element(mu)
        t = tangent_weights(g)
        I = i_of(g)
        assert len(t.horizontal) + 2 * len(I) + (n - 1 - len(I)) == n * (n + 1) // 2 - 1
        assert len(t) == n * (n + 1) // 2 - 1
        assert len(t.vertical) == 2 * len(I)
        for v in t.horizontal + t.vertical + t.normal:
            assert sum(v) == 0
        for v in t.normal:
            assert all(c <= 0 for c in _simple_coords(v)) and any(_simple_coords(v))
        # w_I from any reduced word
        wI = longest_parabolic_element(I, n)
        for word in reduced_words(wI):
            e = list(range(1, n + 1))
            for i in word:
                e[i - 1], e[i] = e[i], e[i - 1]
            assert tuple(e) == wI


def test_reduce_to_special():
    g = P("21|3")
    assert reduce_to_special(g) == (g, (1, 2, 3))
    special, w = reduce_to_special(P("31|2"))
    assert special == P("21|3")
    assert {w[0], w[1]} == {1, 3}
    for n in range(1, 6):
        for g in enumerate_barred(n):
            s, w = reduce_to_special(g)
            assert is_special(s) and weyl_act(w, s) == g


def test_weyl_act_weight():
    assert weyl_act_weight((2, 1, 3), simple_root(1, 3)) == (-1, 1, 0)


def test_curves_p2():
    g = P("21")
    ends = curve_other_fixed_points(g, simple_root(1, 2))
    assert ends == {P("2|1"), P("1|2")}
    assert ends | {g} == set(enumerate_barred(2))


def test_curves_horizontal():
    assert curve_other_fixed_points(P("1|2|3"), (-1, 1, 0)) == {P("2|1|3")}


def test_curves_normal_open():
    g = P("21|3")
    with pytest.raises(OpenProblemError):
        curve_other_fixed_points(g, tangent_weights(g).normal[0])
    with pytest.raises(ValueError):
        curve_other_fixed_points(g, (3, -3, 0))


@pytest.mark.parametrize("n", range(1, 5))
def test_curve_endpoints_strata(n):
    for mu in special_compositions(n):
        g = special_element(mu)
        t = tangent_weights(g)
        for d in t.horizontal:
            for e in curve_other_fixed_points(g, d):
                assert e.mu == mu and e != g
        for d in t.vertical:
            for e in curve_other_fixed_points(g, d):
                assert refinement_covers(e.mu, mu)
