"""
Symmetric-group machinery: one-line permutations over explicit alphabets,
inversion length, exceedance, reduced words, the Bruhat-Chevalley order and
longest elements of parabolic subgroups.

Products follow function composition, ``compose(u, v)(i) == u(v(i))``, so a
word ``(i1, ..., ik)`` stands for ``s_i1 * ... * s_ik`` with ``s_ik`` applied
first.

>>> w = Permutation((2, 3, 5, 6, 1, 4))
>>> length(w), exceedance(w)
(6, 4)
>>> sorted(reduced_words(Permutation((3, 2, 1))))
[(1, 2, 1), (2, 1, 2)]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, NewType

__all__ = [
    "SimpleReflection", "RootSubset", "Permutation",
    "identity", "simple_reflection", "longest_element", "transposition",
    "compose", "inverse", "length", "exceedance", "is_involution",
    "sn_bruhat_leq", "reduced_words", "reduced_word",
    "longest_parabolic_element", "all_permutations",
]

# index i of s_i = (i, i+1), 1 <= i <= n-1
SimpleReflection = NewType("SimpleReflection", int)

# subset of {1, ..., n-1}
RootSubset = frozenset


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of a finite alphabet of positive integers, in one-line
    notation relative to the sorted alphabet.

    ``word[k]`` is the image of the k-th smallest letter, so ``[284]`` on
    ``{2, 4, 8}`` is the same permutation shape as ``[132]`` on ``{1, 2, 3}``.
    """

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        if len(set(word)) != len(word):
            raise ValueError(f"repeated letter in {word}")
        object.__setattr__(self, "word", word)

    @property
    def alphabet(self) -> tuple[int, ...]:
        return tuple(sorted(self.word))

    @property
    def n(self) -> int:
        return len(self.word)

    def relative(self) -> tuple[int, ...]:
        """One-line notation on {1..n} with the same relative order."""
        rank = {a: k + 1 for k, a in enumerate(self.alphabet)}
        return tuple(rank[x] for x in self.word)

    def __call__(self, x: int) -> int:
        return self.word[self.alphabet.index(x)]

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition including one-cycles, each cycle starting at
        its smallest letter, cycles ordered by that letter."""
        image = dict(zip(self.alphabet, self.word))
        seen = set()
        out = []
        for a in self.alphabet:
            if a in seen:
                continue
            cyc = [a]
            seen.add(a)
            b = image[a]
            while b != a:
                cyc.append(b)
                seen.add(b)
                b = image[b]
            out.append(tuple(cyc))
        return out

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __str__(self):
        if max(self.word, default=0) > 9:
            return ",".join(map(str, self.word))
        return "".join(map(str, self.word))


def _as_tuple(w) -> tuple[int, ...]:
    return w.relative() if isinstance(w, Permutation) else tuple(w)


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def simple_reflection(i: int, n: int) -> tuple[int, ...]:
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} is not a simple reflection of S_{n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def transposition(i: int, j: int, n: int) -> tuple[int, ...]:
    w = list(range(1, n + 1))
    w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
    return tuple(w)


def longest_element(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def compose(u, v) -> tuple[int, ...]:
    """``u * v``: apply v, then u."""
    u, v = _as_tuple(u), _as_tuple(v)
    return tuple(u[x - 1] for x in v)


def inverse(w) -> tuple[int, ...]:
    w = _as_tuple(w)
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def length(w) -> int:
    """Number of inversions, counted in the alphabet's order."""
    w = tuple(w.word if isinstance(w, Permutation) else w)
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def exceedance(w) -> int:
    """``#{i : w(i) > i}`` with positions taken in the alphabet's order."""
    w = _as_tuple(w)
    return sum(1 for i, x in enumerate(w, start=1) if x > i)


def is_involution(w) -> bool:
    w = _as_tuple(w)
    return all(w[x - 1] == i for i, x in enumerate(w, start=1))


def sn_bruhat_leq(u, v) -> bool:
    """Bruhat-Chevalley order via the tableau criterion: for every k the
    sorted prefix of length k of u is entrywise below that of v."""
    if isinstance(u, Permutation) and isinstance(v, Permutation):
        if u.alphabet != v.alphabet:
            raise ValueError("permutations on different alphabets")
    u, v = _as_tuple(u), _as_tuple(v)
    if sorted(u) != sorted(v):
        raise ValueError("permutations on different alphabets")
    for k in range(1, len(u)):
        if any(a > b for a, b in zip(sorted(u[:k]), sorted(v[:k]))):
            return False
    return True


@lru_cache(maxsize=None)
def _reduced_words(w: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    out = set()
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            ws = list(w)
            ws[i - 1], ws[i] = ws[i], ws[i - 1]
            out.update(r + (i,) for r in _reduced_words(tuple(ws)))
    return frozenset(out) if out else frozenset({()})


def reduced_words(w) -> frozenset[tuple[int, ...]]:
    """All reduced words ``(i1, ..., ik)`` with ``w = s_i1 ... s_ik``."""
    return _reduced_words(_as_tuple(w))


@lru_cache(maxsize=None)
def reduced_word(w: tuple[int, ...]) -> tuple[int, ...]:
    """One reduced word, peeling the leftmost right descent."""
    w = _as_tuple(w)
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            ws = list(w)
            ws[i - 1], ws[i] = ws[i], ws[i - 1]
            return reduced_word(tuple(ws)) + (i,)
    return ()


def longest_parabolic_element(I: Iterable[int], n: int) -> tuple[int, ...]:
    """Longest element of the parabolic subgroup generated by ``s_i, i in I``.

    Each maximal run ``a, a+1, ..., b`` of I reverses positions ``a..b+1``.
    """
    I = sorted(set(I))
    if any(not 1 <= i <= n - 1 for i in I):
        raise ValueError(f"{I} is not a subset of 1..{n - 1}")
    w = list(range(1, n + 1))
    k = 0
    while k < len(I):
        a = b = I[k]
        while k + 1 < len(I) and I[k + 1] == b + 1:
            k += 1
            b = I[k]
        w[a - 1:b + 1] = reversed(w[a - 1:b + 1])
        k += 1
    return tuple(w)


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(permutations(range(1, n + 1)))
