"""
Exhaustive invariant checks up to a size bound, grouped into suites.

Each check yields ``Check(suite, name, n, ok, detail)``; ``run`` collects them
into a report that the command line prints as JSON.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Callable, Iterator

from . import bbcells, bruhat, degeninv, gkm, rsmonoid
from .degeninv import compositions, enumerate_barred, enumerate_degenerate_involutions
from .permgroup import all_permutations, reduced_words

__all__ = ["Check", "SUITES", "run", "report_ok"]


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    n: int
    ok: bool
    detail: str = ""


def _counts(max_n: int) -> Iterator[Check]:
    for n in range(0, max_n + 1):
        rec, closed = degeninv.count_barred(n)
        enum = len(enumerate_barred(n)) if n else 1
        yield Check("counts", "recurrence=closed=enumeration", n, rec == closed == enum,
                    f"b_{n}: {rec}, {closed}, {enum}")


def _weak(max_n: int) -> Iterator[Check]:
    for n in range(1, min(max_n, 5) + 1):
        for mu in compositions(n):
            wo = rsmonoid.weak_order(mu)
            drops = all(degeninv.mu_length(lo) - degeninv.mu_length(hi) == 1
                        for lo, hi, _ in wo.covers)
            yield Check("weak", f"covers drop length by one {mu}", n, drops)
            bad = []
            for s in range(1, n):
                seen = {}
                for pi in wo.elements:
                    img = rsmonoid.act_simple(s, pi)
                    if img != pi:
                        if img in seen:
                            bad.append((s, str(seen[img]), str(pi)))
                        seen[img] = pi
            yield Check("weak", f"cancellative {mu}", n, not bad, repr(bad[:3]))
            if n <= 4:
                bad = [(w, str(pi)) for w in all_permutations(n) for pi in wo.elements
                       if len({_apply(word, pi) for word in reduced_words(w)}) != 1]
                yield Check("weak", f"reduced-word independent {mu}", n, not bad, repr(bad[:3]))


def _apply(word, pi):
    for i in reversed(word):
        pi = rsmonoid.act_simple(i, pi)
    return pi


def _wsets(max_n: int) -> Iterator[Check]:
    for n in range(1, min(max_n, 4) + 1):
        for mu in compositions(n):
            elems = degeninv.enumerate_mu_involutions(mu)
            bad = [(str(a), str(b)) for a in elems for b in elems
                   if rsmonoid.wset(a, b) != rsmonoid.wset_bruteforce(a, b)]
            yield Check("wsets", f"dp = brute force {mu}", n, not bad, repr(bad[:3]))


def _bruhat(max_n: int) -> Iterator[Check]:
    for n in range(1, min(max_n, 4) + 1):
        full = bruhat.full_poset(n)
        graded, bad = full.is_graded()
        yield Check("bruhat", "full poset graded", n, graded, repr(bad))
        for mu in compositions(n):
            p = bruhat.bruhat_poset(mu)
            yield Check("bruhat", f"full restricts to fixed order {mu}", n,
                        full.restrict(p.elements).same_order(p))
            lo = degeninv.mu_length(degeninv.mu_min(mu))
            rank = p.rank()
            yield Check("bruhat", f"rank = L(min) - L {mu}", n,
                        all(rank[x] == lo - degeninv.mu_length(x) for x in p.elements))


def _reverse(max_n: int) -> Iterator[Check]:
    for n in range(1, min(max_n, 4) + 1):
        for mu in compositions(n):
            ok = bruhat.reverse_bruhat_poset(mu).same_order(bruhat.bruhat_poset(mu).opposite())
            yield Check("reverse", f"reverse = opposite {mu}", n, ok)


def _covers(max_n: int) -> Iterator[Check]:
    for n in range(1, min(max_n, 4) + 1):
        rep = bruhat.compare_covers(n)
        yield Check("covers", "within compositions", n, rep.within_ok,
                    "; ".join(l for l in rep.lines() if l.startswith("within")))
        yield Check("covers", "across compositions", n, rep.cross_ok,
                    "; ".join(l for l in rep.lines() if l.startswith("cross")))
        bad = []
        for mu in compositions(n):
            p = bruhat.bruhat_poset(mu)
            covers = set(p.covers())
            for a, b in combinations(p.elements, 2):
                for lo, hi in ((a, b), (b, a)):
                    if degeninv.mu_length(lo) - degeninv.mu_length(hi) == 1:
                        ok = bruhat.cor_w1_verify(lo, hi, quantifier="some")[0]
                        if ok != ((lo, hi) in covers):
                            bad.append((str(lo), str(hi)))
        yield Check("covers", "factorization criterion (some varpi) at rank gap one", n, not bad, repr(bad[:3]))


def _cells(max_n: int) -> Iterator[Check]:
    for n in range(1, min(max_n, 5) + 1):
        a = bbcells.default_admissible(n)
        yield Check("cells", "default sequence admissible", n, bbcells.is_admissible(a))
        bad = [str(p) for p in enumerate_degenerate_involutions(n)
               if bbcells.tau(p) != bbcells.flow_oracle(p, a)]
        yield Check("cells", "tau = flow", n, not bad, repr(bad[:3]))
        bad = [str(g) for g in enumerate_barred(n) if bbcells.tau(bbcells.sigma(g)) != g]
        yield Check("cells", "tau sigma = id", n, not bad, repr(bad[:3]))
        bad = [str(g) for g in enumerate_barred(n)
               if bbcells.cell_dimension(g) != bbcells.orbit_dimension(bbcells.sigma(g))]
        yield Check("cells", "cell dimension = dense orbit dimension", n, not bad, repr(bad[:3]))
        bad = []
        for c in bbcells.cells(n):
            dims = [bbcells.orbit_dimension(m) for m in c.members]
            top = bbcells.orbit_dimension(c.dense)
            if c.dense not in c.members or max(dims) != top or dims.count(top) != 1:
                bad.append(str(c.fixed_point))
        yield Check("cells", "dense orbit is the unique maximizer", n, not bad, repr(bad[:3]))
        total = sum(len(c.members) for c in bbcells.cells(n))
        yield Check("cells", "cells partition the orbits", n,
                    total == len(enumerate_degenerate_involutions(n)))


def _gkm(max_n: int) -> Iterator[Check]:
    for n in range(1, min(max_n, 5) + 1):
        bad = []
        for g in enumerate_barred(n):
            special, w = gkm.reduce_to_special(g)
            if bbcells.weyl_act(w, special) != g:
                bad.append(str(g))
            if gkm.is_special(g):
                t = gkm.tangent_weights(g)
                I = gkm.i_of(g)
                if len(t.horizontal) + 2 * len(I) + (n - 1 - len(I)) != n * (n + 1) // 2 - 1:
                    bad.append(str(g))
        yield Check("gkm", "weight count and reduction", n, not bad, repr(bad[:3]))


def _conjecture(max_n: int) -> Iterator[Check]:
    for n in range(1, min(max_n, 4) + 1):
        rep = bbcells.bcell_conjecture_check(n)
        yield Check("conjecture", "dense orbits graded with max and min", n, rep.ok,
                    repr(rep.failing_interval))


SUITES: dict[str, Callable[[int], Iterator[Check]]] = {
    "counts": _counts, "weak": _weak, "wsets": _wsets, "bruhat": _bruhat,
    "reverse": _reverse, "covers": _covers, "cells": _cells, "gkm": _gkm,
    "conjecture": _conjecture,
}


def run(suite: str, max_n: int) -> list[Check]:
    if suite == "all":
        return [c for name in SUITES for c in SUITES[name](max_n)]
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    return list(SUITES[suite](max_n))


def report_ok(checks: list[Check]) -> bool:
    return all(c.ok for c in checks)


def as_json(checks: list[Check]) -> list[dict]:
    return [asdict(c) for c in checks]
