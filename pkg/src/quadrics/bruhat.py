"""
Geometric Bruhat order on degenerate involutions.

Inside one composition the order is the least transitive relation that
contains the diagonal and, for each pair ``a <= b`` and each s with
``s.b != b``, also ``a <= s.b`` and ``s.a <= s.b`` (Timashev's recursion). Across
compositions ``nu < mu``, ``gamma <= pi`` whenever ``W(gamma)`` is contained in
``W(pi)``; the full order is the transitive closure of both.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .degeninv import (
    MuInvolution, compositions, enumerate_degenerate_involutions,
    enumerate_mu_involutions, mu_length, mu_min, refinement_covers, refinement_leq,
)
from .permgroup import all_permutations, compose, length, sn_bruhat_leq
from .posets import Poset, _bits, transitive_closure
from .rsmonoid import act_simple, act_word, preimages, rev_wset, star_act, star_word, wset_to_max

__all__ = [
    "bruhat_poset", "reverse_bruhat_poset", "induced_order", "full_poset",
    "cross_leq", "covers_by_theorem", "CoverReport", "compare_covers",
    "cor_w1_witnesses", "cor_w1_verify", "is_graded", "timashev_covers",
]


def is_graded(poset: Poset):
    return poset.is_graded()


@lru_cache(maxsize=None)
def bruhat_poset(mu) -> Poset:
    """Bruhat order on mu-involutions; ``mu_min`` is the bottom."""
    mu = tuple(mu)
    elems = enumerate_mu_involutions(mu)
    n = sum(mu)
    index = {x: i for i, x in enumerate(elems)}
    act = [[index[act_simple(s, x)] for x in elems] for s in range(1, n)]
    # pairs are processed in increasing rank of the upper element
    by_rank = sorted(range(len(elems)), key=lambda j: -mu_length(elems[j]))
    up = [1 << i for i in range(len(elems))]
    changed = True
    while changed:
        changed = False
        for i in by_rank:
            for j in list(_bits(up[i])):
                for table in act:
                    b = table[j]
                    if b == j:
                        continue
                    # both pi* and s.pi* lie below s.rho*
                    for a in (i, table[i]):
                        if not up[a] >> b & 1:
                            up[a] |= 1 << b
                            changed = True
        up = transitive_closure(up)
    return Poset.from_bitsets(elems, up)


@lru_cache(maxsize=None)
def reverse_bruhat_poset(mu) -> Poset:
    """Reverse Bruhat order, built downward from weak covers by the star action.

    Seeds are pairs ``(a, s.a)`` with ``s.a != a``; a pair ``(a, b)`` spawns
    ``(s*a, s*b)`` when both star steps are non-trivial. The result orders
    ``b <=_r a`` for every generated pair and is then closed transitively.
    """
    mu = tuple(mu)
    elems = enumerate_mu_involutions(mu)
    n = sum(mu)
    seeds = set()
    for a in elems:
        for s in range(1, n):
            b = act_simple(s, a)
            if b != a:
                seeds.add((a, b))
    pairs, frontier = set(seeds), list(seeds)
    while frontier:
        new = []
        for a, b in frontier:
            for s in range(1, n):
                a2, b2 = star_act(s, a), star_act(s, b)
                if a2 != a and b2 != b and (a2, b2) not in pairs:
                    pairs.add((a2, b2))
                    new.append((a2, b2))
        frontier = new
    return Poset.from_relation(elems, ((b, a) for a, b in pairs))


@lru_cache(maxsize=None)
def timashev_covers(mu) -> frozenset[tuple[MuInvolution, MuInvolution]]:
    """Pairs ``(w.a, w.(s.a))`` with a weak cover ``a -> s.a`` pushed up by a
    length-exact w; each is a Bruhat cover."""
    mu = tuple(mu)
    elems = enumerate_mu_involutions(mu)
    n = sum(mu)
    out = set()
    for a in elems:
        for s in range(1, n):
            b = act_simple(s, a)
            if b == a:
                continue
            la, lb = mu_length(a), mu_length(b)
            for w in all_permutations(n):
                x, y = act_word(w, a), act_word(w, b)
                if mu_length(x) == la - length(w) and mu_length(y) == lb - length(w):
                    out.add((x, y))
    return frozenset(out)


@lru_cache(maxsize=None)
def induced_order(mu) -> Poset:
    """Bruhat-Chevalley order of S_n restricted to the concatenated words."""
    elems = enumerate_mu_involutions(tuple(mu))
    pairs = [(a, b) for a in elems for b in elems if sn_bruhat_leq(a.word, b.word)]
    return Poset.from_relation(elems, pairs)


def cross_leq(rho: MuInvolution, pi: MuInvolution) -> bool:
    """``rho <= pi`` for rho of a strictly finer composition than pi.

    True iff some gamma of rho's composition has ``W(gamma)`` inside ``W(pi)``
    and ``rho <= gamma``. Incomparable compositions give False; equal ones
    defer to :func:`bruhat_poset`.
    """
    nu, mu = rho.mu, pi.mu
    if rho.n != pi.n or not refinement_leq(nu, mu):
        return False
    if nu == mu:
        return bruhat_poset(mu).leq(rho, pi)
    target = wset_to_max(pi)
    poset = bruhat_poset(nu)
    return any(wset_to_max(g) <= target and poset.leq(rho, g) for g in poset.upset(rho))


@lru_cache(maxsize=None)
def full_poset(n: int) -> Poset:
    """Bruhat order on all degenerate involutions of length n."""
    elems = enumerate_degenerate_involutions(n)
    index = {x: i for i, x in enumerate(elems)}
    up = [1 << i for i in range(len(elems))]
    comps = compositions(n)
    for mu in comps:
        p = bruhat_poset(mu)
        for a, b in p.relation():
            up[index[a]] |= 1 << index[b]
    wsets = {x: wset_to_max(x) for x in elems}
    by_mu: dict[tuple, list] = {}
    for x in elems:
        by_mu.setdefault(x.mu, []).append(x)
    for nu in comps:
        for mu in comps:
            if nu == mu or not refinement_leq(nu, mu):
                continue
            for g in by_mu[nu]:
                for p in by_mu[mu]:
                    if wsets[g] <= wsets[p]:
                        up[index[g]] |= 1 << index[p]
    return Poset.from_bitsets(elems, transitive_closure(up))


def covers_by_theorem(pi: MuInvolution) -> set[MuInvolution]:
    """Elements covered by pi, read off the W-set characterization.

    (i) finer compositions covered by ``pi.mu`` contribute every rho with
    ``W(rho) <= W(pi)``. (ii) inside ``pi.mu``: rho such that for some
    ``varpi`` and simple ``s``, ``rho* = varpi * rho`` and ``pi* = varpi * pi``
    are length-exact star pushes, ``s . rho* == pi*`` is a weak cover, and
    ``s W^{-1}(rho*)`` meets ``W^{-1}(pi*)``.
    """
    n = pi.n
    out = set()
    target = wset_to_max(pi)
    for nu in compositions(n):
        if refinement_covers(nu, pi.mu):
            out.update(r for r in enumerate_mu_involutions(nu) if wset_to_max(r) <= target)
    for varpi in all_permutations(n):
        top = star_word(varpi, pi)
        if top is None:
            continue
        lv = length(varpi)
        for s in range(1, n):
            for bottom in preimages(s, top):
                rho = act_word(varpi, bottom)
                if mu_length(rho) != mu_length(bottom) - lv:
                    continue
                shifted = {compose(_simple(s, n), w) for w in rev_wset(bottom)}
                if shifted & rev_wset(top):
                    out.add(rho)
    return out


def _simple(i: int, n: int) -> tuple[int, ...]:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


@dataclass
class CoverReport:
    """Theorem covers against the transitive reduction of :func:`full_poset`."""
    n: int
    within_missing: list
    within_extra: list
    cross_missing: list
    cross_extra: list

    @property
    def within_ok(self) -> bool:
        return not (self.within_missing or self.within_extra)

    @property
    def cross_ok(self) -> bool:
        return not (self.cross_missing or self.cross_extra)

    @property
    def ok(self) -> bool:
        return self.within_ok and self.cross_ok

    def lines(self) -> list[str]:
        out = []
        for name in ("within_missing", "within_extra", "cross_missing", "cross_extra"):
            for lo, hi in getattr(self, name):
                out.append(f"{name}: [{lo}] < [{hi}]")
        return out


def compare_covers(n: int) -> CoverReport:
    poset = full_poset(n)
    truth = set(poset.covers())
    theory = {(lo, hi) for hi in poset.elements for lo in covers_by_theorem(hi)}

    def split(pairs):
        within = sorted((p for p in pairs if p[0].mu == p[1].mu), key=_pair_key)
        cross = sorted((p for p in pairs if p[0].mu != p[1].mu), key=_pair_key)
        return within, cross

    wm, cm = split(truth - theory)
    we, ce = split(theory - truth)
    return CoverReport(n, wm, we, cm, ce)


def _pair_key(p):
    return (p[0].sort_key(), p[1].sort_key())


def cor_w1_witnesses(pi: MuInvolution, rho: MuInvolution, reflections: str = "simple"):
    """For each ``varpi`` in ``W^{-1}(pi)``, every ``(w1, s, w2)`` with
    ``varpi = w1 w2`` length-additive and ``w1 s w2`` in ``W^{-1}(rho)``.

    ``reflections="all"`` lets s range over every transposition instead of the
    simple ones.
    """
    if pi.mu != rho.mu:
        raise ValueError("cover candidates must share a composition")
    n = pi.n
    if reflections == "simple":
        refl = [_simple(i, n) for i in range(1, n)]
    elif reflections == "all":
        refl = []
        for i, j in combinations(range(1, n + 1), 2):
            w = list(range(1, n + 1))
            w[i - 1], w[j - 1] = j, i
            refl.append(tuple(w))
    else:
        raise ValueError(f"unknown reflection set {reflections!r}")
    target = rev_wset(rho)
    out = {}
    for varpi in sorted(rev_wset(pi)):
        lv = length(varpi)
        found = []
        for w2 in all_permutations(n):
            l2 = length(w2)
            if l2 > lv:
                continue
            # w1 = varpi * w2^{-1}
            w1 = compose(varpi, _inverse(w2))
            if length(w1) + l2 != lv:
                continue
            for s in refl:
                if compose(compose(w1, s), w2) in target:
                    found.append((w1, s, w2))
        out[varpi] = found
    return out


def _inverse(w):
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def cor_w1_verify(pi: MuInvolution, rho: MuInvolution, reflections: str = "simple",
                  quantifier: str = "every"):
    """``(ok, {varpi: witness or None})`` for the candidate cover ``pi < rho``.

    With ``quantifier="every"`` ok needs a factorization for each varpi; with
    ``"some"`` one varpi suffices. Only the second agrees with the covers of
    :func:`bruhat_poset` in general: for ``[3|124] < [1|324]`` the element
    ``4123`` of ``W^{-1}([3|124])`` has no factorization.
    """
    wit = cor_w1_witnesses(pi, rho, reflections)
    if quantifier == "every":
        ok = bool(wit) and all(wit.values())
    elif quantifier == "some":
        ok = any(wit.values())
    else:
        raise ValueError(f"unknown quantifier {quantifier!r}")
    return ok, {v: (f[0] if f else None) for v, f in wit.items()}
