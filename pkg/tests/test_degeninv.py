import pytest
from hypothesis import given, strategies as st

from oracles import barred_count_direct, degenerate_count_direct, involutions_bruteforce
from quadrics.degeninv import (
    MuInvolution, compositions, count_barred, enumerate_barred, enumerate_barred_mu,
    enumerate_degenerate_involutions, enumerate_mu_involutions, involution_of_quadric,
    inv_length, is_barred, mu_length, mu_max, mu_min, quadric_of, refinement_leq,
    sorted_word, special_compositions, special_element, subset_of, validate_mu_involution,
)
from quadrics.permgroup import Permutation, exceedance, length


@pytest.mark.parametrize("mu, expected", [
    ((1, 1, 1), set()), ((4,), {1, 2, 3}), ((2, 4, 1, 2), {1, 3, 4, 5, 8}),
])
def test_subset_of(mu, expected):
    assert subset_of(mu) == expected


def test_refinement():
    assert refinement_leq((1, 1, 1), (3,))
    assert not refinement_leq((2, 1), (1, 2)) and not refinement_leq((1, 2), (2, 1))
    assert refinement_leq((1, 3), (4,))
    with pytest.raises(ValueError):
        refinement_leq((1, 1), (3,))


def test_validate_examples():
    pi = validate_mu_involution((2, 6, 8, 3, 5, 1, 7, 9, 4), (2, 4, 1, 2))
    assert pi.mu == (2, 4, 1, 2)
    assert not is_barred(validate_mu_involution((1, 2, 3), (1, 2)))
    with pytest.raises(ValueError, match="block 1"):
        validate_mu_involution((2, 3, 1, 4), (3, 1))
    with pytest.raises(ValueError):
        validate_mu_involution((1, 1, 2), (3,))


@pytest.mark.parametrize("mu, count", [((1, 1), 2), ((3,), 4), ((3, 1), 16)])
def test_enumerate_counts(mu, count):
    got = enumerate_mu_involutions(mu)
    assert len(got) == len(set(got)) == count
    assert got == sorted(got, key=MuInvolution.sort_key)


@pytest.mark.parametrize("n", range(1, 6))
def test_degenerate_totals(n):
    assert len(enumerate_degenerate_involutions(n)) == degenerate_count_direct(n)


def test_degenerate_totals_known():
    assert len(enumerate_degenerate_involutions(3)) == 22
    assert len(enumerate_degenerate_involutions(4)) == 162


def test_bound():
    with pytest.raises(ValueError):
        enumerate_mu_involutions((10,))
    with pytest.raises(ValueError):
        enumerate_degenerate_involutions(4, max_n=3)


@pytest.mark.parametrize("word, expected", [((1, 2, 3), 0), ((2, 1), 1), ((8, 3, 5, 1), 3)])
def test_inv_length(word, expected):
    assert inv_length(Permutation(word)) == expected


def test_inv_length_rejects_non_involution():
    with pytest.raises(ValueError):
        inv_length(Permutation((2, 3, 1)))


@pytest.mark.parametrize("n", range(1, 7))
def test_length_plus_exceedance_even(n):
    for w in involutions_bruteforce(n):
        assert (length(w) + exceedance(w)) % 2 == 0


def test_mu_length_examples(P):
    pi = P("5326|41")
    assert sorted_word(pi) == (2, 3, 5, 6, 1, 4)
    assert length(sorted_word(pi)) == 6
    assert mu_length(pi) == 9
    assert mu_length(P("3|21")) == 3
    for mu in compositions(4):
        assert mu_length(mu_max(mu)) == 0
        assert mu_min(mu).word == (4, 3, 2, 1)


def test_barred_examples(P):
    assert is_barred(P("1|32"))
    assert not is_barred(P("1|23"))
    assert is_barred(P("86|4|52|9|31|7"))
    assert [str(x) for x in enumerate_barred(2)] == ["1|2", "2|1", "21"]
    assert enumerate_barred_mu((2,)) == [P("21")]
    with pytest.raises(ValueError):
        enumerate_barred_mu((3,))


def test_counts_fixed():
    assert count_barred(0) == (1, 1)
    assert count_barred(1) == (1, 1)
    assert count_barred(3) == (12, 12)
    assert count_barred(4) == (66, 66)


@pytest.mark.parametrize("n", range(0, 9))
def test_counts_three_ways(n):
    rec, closed = count_barred(n)
    enum = len(enumerate_barred(n)) if n else 1
    assert rec == closed == enum == barred_count_direct(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_barred_by_composition(n):
    from math import factorial

    total = 0
    for mu in special_compositions(n):
        b = enumerate_barred_mu(mu)
        assert len(b) == factorial(n) // 2 ** mu.count(2)
        assert special_element(mu) in b
        total += len(b)
    assert total == count_barred(n)[0]


def test_quadric_example(P):
    q = quadric_of(P("26|8351|7|94"))
    assert q.flag_labels() == ["V_26", "V_123568", "V_1235678", "V_123456789"]
    assert q.polynomials() == ["x_2^2 + x_6^2", "x_1x_8 + x_3^2 + x_5^2", "x_7^2", "x_4x_9"]
    ident = quadric_of(P("1234"))
    assert ident.polynomials() == ["x_1^2 + x_2^2 + x_3^2 + x_4^2"]


@pytest.mark.parametrize("n", range(1, 6))
def test_quadric_round_trip(n):
    for pi in enumerate_degenerate_involutions(n):
        assert involution_of_quadric(quadric_of(pi)) == pi


@given(st.integers(1, 5).flatmap(lambda n: st.sampled_from(enumerate_degenerate_involutions(n))))
def test_sorted_word_is_increasing_per_block(pi):
    w = sorted_word(pi)
    k = 0
    for b in pi.blocks:
        assert list(w[k:k + len(b)]) == sorted(b)
        k += len(b)
    assert mu_length(pi) >= length(w)
