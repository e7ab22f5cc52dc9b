"""
Richardson-Springer monoid action on mu-involutions, its opposite (star)
action, the weak order and W-sets.

Every non-trivial step ``s_i . pi`` lowers ``mu_length`` by exactly one; the
weak order runs from ``mu_min`` (the string ``n ... 1``) up to ``mu_max``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from .degeninv import MuInvolution, enumerate_mu_involutions, mu_length, mu_max, mu_min
from .permgroup import all_permutations, identity, length, reduced_word

__all__ = [
    "act_simple", "act_word", "star_act", "star_word", "preimages",
    "WeakOrderPoset", "weak_order", "wset", "wset_to_max", "rev_wset",
    "wset_bruteforce",
]


def _rs_involution(i: int, pi: tuple[int, ...]) -> tuple[int, ...]:
    """RS action of s_i on an involution of {1..m} in one-line notation."""
    conj = list(pi)
    # s pi s: swap positions i, i+1 and values i, i+1
    conj[i - 1], conj[i] = conj[i], conj[i - 1]
    swap = {i: i + 1, i + 1: i}
    conj = tuple(swap.get(x, x) for x in conj)
    l = length(pi)
    if length(conj) == l - 2:
        return conj
    if conj == pi:
        left = tuple(swap.get(x, x) for x in pi)
        if length(left) == l - 1:
            return left
    return pi


@lru_cache(maxsize=None)
def act_simple(i: int, pi: MuInvolution) -> MuInvolution:
    """``s_i . pi``."""
    n = pi.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} is not a simple reflection of S_{n}")
    for r, b in enumerate(pi.blocks):
        if i in b and i + 1 in b:
            # letters i, i+1 are adjacent in the sorted alphabet of this block
            alphabet = sorted(b)
            p = alphabet.index(i) + 1
            rank = {a: k + 1 for k, a in enumerate(alphabet)}
            rel = tuple(rank[x] for x in b)
            new = _rs_involution(p, rel)
            if new == rel:
                return pi
            blocks = list(pi.blocks)
            blocks[r] = tuple(alphabet[x - 1] for x in new)
            return MuInvolution(tuple(blocks))
    word = pi.word
    if word.index(i + 1) < word.index(i):
        swap = {i: i + 1, i + 1: i}
        return MuInvolution(tuple(tuple(swap.get(x, x) for x in b) for b in pi.blocks))
    return pi


def act_word(w, pi: MuInvolution) -> MuInvolution:
    """``w . pi`` through a reduced word of w, rightmost letter first."""
    for i in reversed(reduced_word(tuple(w))):
        pi = act_simple(i, pi)
    return pi


@lru_cache(maxsize=None)
def preimages(i: int, rho: MuInvolution) -> tuple[MuInvolution, ...]:
    """All ``pi != rho`` with ``s_i . pi == rho``."""
    candidates = set()
    swap = {i: i + 1, i + 1: i}
    try:
        candidates.add(MuInvolution(tuple(tuple(swap.get(x, x) for x in b) for b in rho.blocks)))
    except ValueError:
        pass
    for r, b in enumerate(rho.blocks):
        if i in b and i + 1 in b:
            alphabet = sorted(b)
            p = alphabet.index(i)
            conj = list(b)
            conj[p], conj[p + 1] = conj[p + 1], conj[p]
            for cand in (tuple(swap.get(x, x) for x in conj), tuple(swap.get(x, x) for x in b)):
                blocks = list(rho.blocks)
                blocks[r] = cand
                try:
                    candidates.add(MuInvolution(tuple(blocks)))
                except ValueError:
                    pass
    return tuple(sorted(c for c in candidates if c != rho and act_simple(i, c) == rho))


def star_act(i: int, rho: MuInvolution) -> MuInvolution:
    """``s_i * rho``: the preimage of rho under ``s_i .`` if one exists, else rho."""
    pre = preimages(i, rho)
    if len(pre) > 1:
        raise AssertionError(f"s_{i} is not cancellative at {rho}: {pre}")
    return pre[0] if pre else rho


def star_word(w, rho: MuInvolution) -> MuInvolution | None:
    """``w * rho`` along a reduced word, or None when some step is trivial
    (so that ``mu_length`` would not grow by exactly ``l(w)``)."""
    for i in reduced_word(tuple(w)):
        pre = star_act(i, rho)
        if pre == rho:
            return None
        rho = pre
    return rho


@dataclass(frozen=True)
class WeakOrderPoset:
    mu: tuple[int, ...]
    elements: tuple[MuInvolution, ...]
    # (lower, upper, i) with upper == s_i . lower
    covers: frozenset = field(default_factory=frozenset)

    @property
    def minimum(self) -> MuInvolution:
        return mu_min(self.mu)

    @property
    def maximum(self) -> MuInvolution:
        return mu_max(self.mu)

    def leq(self, a: MuInvolution, b: MuInvolution) -> bool:
        return bool(wset(a, b))


def weak_order(mu) -> WeakOrderPoset:
    mu = tuple(mu)
    elems = tuple(enumerate_mu_involutions(mu))
    n = sum(mu)
    covers = set()
    for pi in elems:
        for i in range(1, n):
            up = act_simple(i, pi)
            if up != pi:
                covers.add((pi, up, i))
    return WeakOrderPoset(mu, elems, frozenset(covers))


def _right_mult_simple(w: tuple[int, ...], i: int) -> tuple[int, ...]:
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


@lru_cache(maxsize=None)
def _wset(pi: MuInvolution, rho: MuInvolution) -> frozenset[tuple[int, ...]]:
    if pi == rho:
        return frozenset({identity(pi.n)})
    if mu_length(pi) <= mu_length(rho):
        return frozenset()
    out = set()
    for i in range(1, pi.n):
        nxt = act_simple(i, pi)
        if nxt == pi:
            continue
        for w in _wset(nxt, rho):
            # w * s_i must be length-additive
            if w[i - 1] < w[i]:
                out.add(_right_mult_simple(w, i))
    return frozenset(out)


def wset(pi: MuInvolution, rho: MuInvolution) -> frozenset[tuple[int, ...]]:
    """``{w : w . pi == rho and l(w) == L(pi) - L(rho)}``."""
    if pi.mu != rho.mu:
        raise ValueError(f"[{pi}] and [{rho}] have different compositions")
    return _wset(pi, rho)


def wset_to_max(pi: MuInvolution) -> frozenset[tuple[int, ...]]:
    """``W(pi) = W(pi, max)``."""
    return _wset(pi, mu_max(pi.mu))


def rev_wset(pi: MuInvolution) -> frozenset[tuple[int, ...]]:
    """Reverse W-set ``W(min, pi)``."""
    return _wset(mu_min(pi.mu), pi)


def wset_bruteforce(pi: MuInvolution, rho: MuInvolution) -> frozenset[tuple[int, ...]]:
    """Search all w of the right length; independent of the recursion above."""
    gap = mu_length(pi) - mu_length(rho)
    return frozenset(
        w for w in all_permutations(pi.n)
        if length(w) == gap and act_word(w, pi) == rho
    )
