"""
Compositions, mu-involutions (degenerate involutions), barred permutations,
their counts and length statistics, and distinguished quadrics.

A mu-involution is stored as a tuple of blocks; block j is a tuple of
``mu[j]`` letters which, read against its own sorted alphabet, is the
one-line notation of an involution.

>>> pi = MuInvolution(((2, 6), (8, 3, 5, 1), (7,), (9, 4)))
>>> pi.mu, str(pi)
((2, 4, 1, 2), '26|8351|7|94')
>>> mu_length(MuInvolution(((5, 3, 2, 6), (4, 1))))
9
"""

from __future__ import annotations

import gc
from contextlib import contextmanager
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterator, Sequence

from .permgroup import Permutation, exceedance, is_involution, length

__all__ = [
    "Composition", "MuInvolution", "DistinguishedQuadric", "DEFAULT_MAX_N",
    "compositions", "special_compositions", "is_special_composition",
    "subset_of", "composition_of", "refinement_leq", "refinement_covers",
    "validate_mu_involution", "enumerate_mu_involutions",
    "enumerate_degenerate_involutions", "involutions_of",
    "inv_length", "mu_length", "sorted_word", "mu_min", "mu_max",
    "is_barred", "barred", "enumerate_barred", "enumerate_barred_mu",
    "special_element", "count_barred", "count_barred_recurrence",
    "count_barred_closed_form", "quadric_of", "involution_of_quadric",
]

DEFAULT_MAX_N = 9

Composition = tuple  # tuple[int, ...] of positive parts


def _check_composition(mu: Sequence[int]) -> tuple[int, ...]:
    mu = tuple(int(m) for m in mu)
    if not mu or any(m < 1 for m in mu):
        raise ValueError(f"not a composition: {mu}")
    return mu


def compositions(n: int) -> list[tuple[int, ...]]:
    """All compositions of n, in lexicographic order."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        out.extend((first,) + rest for rest in compositions(n - first))
    return sorted(out)


def is_special_composition(mu: Sequence[int]) -> bool:
    return all(m <= 2 for m in mu)


def special_compositions(n: int) -> list[tuple[int, ...]]:
    return [mu for mu in compositions(n) if is_special_composition(mu)]


def subset_of(mu: Sequence[int]) -> frozenset[int]:
    """``{1..n-1}`` minus the proper partial sums of mu."""
    mu = _check_composition(mu)
    n = sum(mu)
    partial, cuts = 0, set()
    for m in mu[:-1]:
        partial += m
        cuts.add(partial)
    return frozenset(range(1, n)) - cuts


def composition_of(I, n: int) -> tuple[int, ...]:
    """Inverse of :func:`subset_of`."""
    cuts = [k for k in range(1, n) if k not in I] + [n]
    out, prev = [], 0
    for c in cuts:
        out.append(c - prev)
        prev = c
    return tuple(out)


def refinement_leq(mu, nu) -> bool:
    if sum(mu) != sum(nu):
        raise ValueError(f"{mu} and {nu} are compositions of different integers")
    return subset_of(mu) <= subset_of(nu)


def refinement_covers(mu, nu) -> bool:
    """True iff nu covers mu: I(mu) is I(nu) minus one element."""
    return refinement_leq(mu, nu) and len(subset_of(nu)) == len(subset_of(mu)) + 1


@dataclass(frozen=True)
class MuInvolution:
    """Degenerate involution ``[pi_1 | ... | pi_k]``."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def _trusted(cls, blocks: tuple[tuple[int, ...], ...]) -> "MuInvolution":
        """Skip validation; for enumerators that build valid blocks by design."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "blocks", blocks)
        return obj

    def __post_init__(self):
        blocks = tuple(tuple(int(x) for x in b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks or any(not b for b in blocks):
            raise ValueError("empty block")
        word = self.word
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"{word} is not a permutation of 1..{len(word)}")
        for j, b in enumerate(blocks):
            if not is_involution(Permutation(b)):
                raise ValueError(
                    f"block {j + 1} ({''.join(map(str, b))}) is not an involution of its alphabet")

    @property
    def mu(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(x for b in self.blocks for x in b)

    def block_permutations(self) -> tuple[Permutation, ...]:
        return tuple(Permutation(b) for b in self.blocks)

    def block_cycles(self) -> list[list[tuple[int, ...]]]:
        """Per block, the cycles ``(a,)`` or ``(a, b)`` with ``a < b``."""
        return [Permutation(b).cycles() for b in self.blocks]

    def sort_key(self):
        return (self.word, self.mu)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        sep = "," if self.n > 9 else ""
        return "|".join(sep.join(map(str, b)) for b in self.blocks)

    def __repr__(self):
        return f"MuInvolution('{self}')"


def validate_mu_involution(word: Sequence[int], mu: Sequence[int]) -> MuInvolution:
    """Cut ``word`` into blocks of sizes ``mu`` and validate."""
    mu = _check_composition(mu)
    word = tuple(word)
    if sum(mu) != len(word):
        raise ValueError(f"composition {mu} does not match word length {len(word)}")
    blocks, k = [], 0
    for m in mu:
        blocks.append(word[k:k + m])
        k += m
    return MuInvolution(tuple(blocks))


def _block_word(alphabet: Sequence[int], cycles) -> tuple[int, ...]:
    partner = {}
    for c in cycles:
        if len(c) == 1:
            partner[c[0]] = c[0]
        else:
            a, b = c
            partner[a], partner[b] = b, a
    return tuple(partner[a] for a in sorted(alphabet))


@lru_cache(maxsize=None)
def involutions_of(alphabet: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All involutions of a sorted alphabet, as one-line words, sorted."""
    alphabet = tuple(sorted(alphabet))
    if not alphabet:
        return ((),)
    out = []

    def matchings(rest):
        if not rest:
            yield []
            return
        a, tail = rest[0], rest[1:]
        for m in matchings(tail):
            yield [(a,)] + m
        for k, b in enumerate(tail):
            for m in matchings(tail[:k] + tail[k + 1:]):
                yield [(a, b)] + m

    for cycles in matchings(alphabet):
        out.append(_block_word(alphabet, cycles))
    return tuple(sorted(out))


def _check_bound(n: int, max_n: int | None):
    bound = DEFAULT_MAX_N if max_n is None else max_n
    if n > bound:
        raise ValueError(f"n={n} exceeds the enumeration bound {bound}")


@lru_cache(maxsize=None)
def _enumerate_mu(mu: tuple[int, ...]) -> tuple[MuInvolution, ...]:
    n = sum(mu)
    out = []

    def rec(remaining: tuple[int, ...], j: int, acc: list):
        if j == len(mu):
            out.append(MuInvolution(tuple(acc)))
            return
        for alpha in combinations(remaining, mu[j]):
            rest = tuple(x for x in remaining if x not in alpha)
            for b in involutions_of(alpha):
                rec(rest, j + 1, acc + [b])

    rec(tuple(range(1, n + 1)), 0, [])
    return tuple(sorted(out, key=MuInvolution.sort_key))


def enumerate_mu_involutions(mu: Sequence[int], max_n: int | None = None) -> list[MuInvolution]:
    """All mu-involutions, sorted lexicographically by word."""
    mu = _check_composition(mu)
    _check_bound(sum(mu), max_n)
    return list(_enumerate_mu(mu))


def enumerate_degenerate_involutions(n: int, max_n: int | None = None) -> list[MuInvolution]:
    """All degenerate involutions of length n, sorted by (word, mu)."""
    _check_bound(n, max_n)
    out = [pi for mu in compositions(n) for pi in _enumerate_mu(mu)]
    return sorted(out)


def inv_length(pi) -> int:
    """Incitti's rank ``(l(pi) + exc(pi)) / 2`` of an involution of its alphabet."""
    if not isinstance(pi, Permutation):
        pi = Permutation(tuple(pi))
    if not is_involution(pi):
        raise ValueError(f"{pi} is not an involution of its alphabet")
    total = length(pi) + exceedance(pi)
    assert total % 2 == 0
    return total // 2


def sorted_word(pi: MuInvolution) -> tuple[int, ...]:
    """w(pi): each block sorted increasingly, concatenated."""
    return tuple(x for b in pi.blocks for x in sorted(b))


@lru_cache(maxsize=None)
def mu_length(pi: MuInvolution) -> int:
    """``l(w(pi)) + sum of inv_length over the blocks``."""
    return length(sorted_word(pi)) + sum(inv_length(Permutation(b)) for b in pi.blocks)


def mu_min(mu: Sequence[int]) -> MuInvolution:
    """The string ``n ... 2 1`` cut by mu."""
    mu = _check_composition(mu)
    return validate_mu_involution(tuple(range(sum(mu), 0, -1)), mu)


def mu_max(mu: Sequence[int]) -> MuInvolution:
    """The string ``1 2 ... n`` cut by mu."""
    mu = _check_composition(mu)
    return validate_mu_involution(tuple(range(1, sum(mu) + 1)), mu)


# -- barred permutations ---------------------------------------------------

def is_barred(pi: MuInvolution) -> bool:
    return all(len(b) == 1 or (len(b) == 2 and b[0] > b[1]) for b in pi.blocks)


def barred(pi: MuInvolution) -> MuInvolution:
    """Return pi unchanged, or raise if it is not a barred permutation."""
    if not is_barred(pi):
        raise ValueError(f"[{pi}] is not a barred permutation")
    return pi


@contextmanager
def _gc_paused():
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


@lru_cache(maxsize=None)
def _barred_mu_keyed(mu: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], MuInvolution], ...]:
    """``(word, gamma)`` pairs sorted by word."""
    n = sum(mu)
    cuts, k = [], 0
    for m in mu:
        cuts.append((k, k + m))
        k += m
    pairs = [a for a, b in cuts if b - a == 2]
    slices = [slice(a, b) for a, b in cuts]
    new = MuInvolution._trusted
    out = []
    # bulk allocation of acyclic tuples; collector passes only cost time here
    with _gc_paused():
        # permutations() yields words in lexicographic order
        for w in permutations(range(1, n + 1)):
            for a in pairs:
                if w[a] < w[a + 1]:
                    break
            else:
                out.append((w, new(tuple(map(w.__getitem__, slices)))))
    return tuple(out)


def enumerate_barred_mu(mu: Sequence[int], max_n: int | None = None) -> list[MuInvolution]:
    mu = _check_composition(mu)
    if not is_special_composition(mu):
        raise ValueError(f"{mu} is not a special composition")
    _check_bound(sum(mu), max_n)
    return [g for _, g in _barred_mu_keyed(mu)]


def enumerate_barred(n: int, max_n: int | None = None) -> list[MuInvolution]:
    _check_bound(n, max_n)
    if n == 0:
        return []
    with _gc_paused():
        keyed = [(w, mu, g) for mu in special_compositions(n) for w, g in _barred_mu_keyed(mu)]
        keyed.sort(key=lambda t: (t[0], t[1]))
        return [g for _, _, g in keyed]


def special_element(mu: Sequence[int]) -> MuInvolution:
    """The barred permutation of type mu built on ``1 2 ... n``."""
    mu = _check_composition(mu)
    if not is_special_composition(mu):
        raise ValueError(f"{mu} is not a special composition")
    blocks, k = [], 1
    for m in mu:
        blocks.append(tuple(range(k + m - 1, k - 1, -1)))
        k += m
    return MuInvolution(tuple(blocks))


def count_barred_recurrence(n: int) -> int:
    """``b_{m+1} = C(m+1, 2) b_{m-1} + (m+1) b_m`` with ``b_0 = b_1 = 1``."""
    b = [1, 1]
    for m in range(1, n):
        b.append(comb(m + 1, 2) * b[m - 1] + (m + 1) * b[m])
    return b[n]


def count_barred_closed_form(n: int) -> int:
    """``n!/2^n * sum_i C(n+1, 2i+1) 3^i``, in exact integer arithmetic."""
    total = factorial(n) * sum(comb(n + 1, 2 * i + 1) * 3 ** i for i in range(n // 2 + 1))
    q, r = divmod(total, 2 ** n)
    assert r == 0
    return q


def count_barred(n: int) -> tuple[int, int]:
    """Number of barred permutations of [n], by recurrence and closed form."""
    return count_barred_recurrence(n), count_barred_closed_form(n)


# -- distinguished quadrics ------------------------------------------------

@dataclass(frozen=True)
class DistinguishedQuadric:
    """Flag of coordinate subspaces plus one quadric per successive quotient.

    ``block_quadrics[j]`` lists pairs ``(a, b)`` with ``a <= b``: ``a == b`` is
    the term ``x_a^2`` and ``a < b`` the term ``x_a x_b``.
    """

    flag: tuple[frozenset[int], ...]
    block_quadrics: tuple[tuple[tuple[int, int], ...], ...]

    def polynomials(self) -> list[str]:
        out = []
        for terms in self.block_quadrics:
            out.append(" + ".join(f"x_{a}^2" if a == b else f"x_{a}x_{b}" for a, b in terms))
        return out

    def flag_labels(self) -> list[str]:
        return ["V_" + "".join(map(str, sorted(V))) for V in self.flag]


def quadric_of(pi: MuInvolution) -> DistinguishedQuadric:
    flag, acc, quadrics = [], set(), []
    for b in pi.blocks:
        acc |= set(b)
        flag.append(frozenset(acc))
        terms = []
        for c in Permutation(b).cycles():
            terms.append((c[0], c[0]) if len(c) == 1 else (c[0], c[1]))
        quadrics.append(tuple(sorted(terms)))
    return DistinguishedQuadric(tuple(flag), tuple(quadrics))


def involution_of_quadric(q: DistinguishedQuadric) -> MuInvolution:
    """Read the mu-involution back off a distinguished quadric."""
    blocks, prev = [], frozenset()
    for V, terms in zip(q.flag, q.block_quadrics):
        if not prev < V:
            raise ValueError("flag is not strictly increasing")
        alphabet = V - prev
        cycles = [(a,) if a == b else (a, b) for a, b in terms]
        if sorted(x for c in cycles for x in c) != sorted(alphabet):
            raise ValueError("block quadric does not cover its quotient")
        blocks.append(_block_word(alphabet, cycles))
        prev = V
    return MuInvolution(tuple(blocks))


def iter_blocks_from_cycles(cycle_blocks) -> Iterator[tuple[int, ...]]:
    for cycles in cycle_blocks:
        alphabet = [x for c in cycles for x in c]
        yield _block_word(alphabet, [tuple(sorted(c)) for c in cycles])
