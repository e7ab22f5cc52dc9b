"""
Bialynicki-Birula cells of the complete quadrics.

A generic one-parameter subgroup with weights ``a_1 < ... < a_n`` flows every
Borel orbit to a torus fixed point. ``tau`` is that limit, read per block by
sorting the cycles; ``sigma`` picks the dense orbit of a cell by erasing the
bars at the ascents of the block maxima.

>>> from quadrics.io import parse_degenerate_involution as P
>>> str(tau(P("(68)|(25)(4)(9)|(13)(7)")))
'86|4|52|9|31|7'
>>> d_sequence(P("86|9|52|4|7|31"))
(8, 9, 5, 4, 7, 3)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Sequence

from .bruhat import bruhat_poset, full_poset
from .degeninv import (
    MuInvolution, _block_word, barred, compositions, enumerate_barred, mu_length,
    subset_of,
)
from .permgroup import length, longest_element, longest_parabolic_element
from .posets import Poset

__all__ = [
    "default_admissible", "is_admissible", "tau", "flow_oracle", "FlowTieError",
    "d_sequence", "ascents", "descents", "sigma", "weyl_act", "subdivide",
    "cell_dimension", "orbit_dimension", "orbit_dimension_of_composition",
    "CellRecord", "cells", "bb_order", "stratification_witnesses",
    "stratification_witness", "StratificationWitness", "ConjectureReport",
    "bcell_conjecture_check",
]


class FlowTieError(ValueError):
    """Two cycles of one block have the same weight under the given sequence."""


def default_admissible(n: int) -> tuple[int, ...]:
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(n + 2 ** i - 2 ** n for i in range(n))


def is_admissible(a: Sequence[int]) -> bool:
    """Strict increase, and every pairwise-sum comparison the flow needs is strict.

    Indices may repeat: ``a_i + a_j < a_k + a_l`` whenever ``i, j, k < l`` and
    ``2 a_i < a_j + a_k`` whenever ``i, j < k``.
    """
    a = tuple(a)
    n = len(a)
    if any(x >= y for x, y in zip(a, a[1:])):
        return False
    for l in range(n):
        below = range(l)
        for i, j in combinations_with_replacement(below, 2):
            for k in below:
                if not a[i] + a[j] < a[k] + a[l]:
                    return False
        for i in below:
            for j in below:
                if not 2 * a[i] < a[j] + a[l]:
                    return False
    return True


def _cycle_blocks(cycles) -> list[tuple[int, ...]]:
    return [c if len(c) == 1 else (c[1], c[0]) for c in cycles]


def tau(pi: MuInvolution) -> MuInvolution:
    """Limit fixed point of the Borel orbit of pi."""
    blocks = []
    for cycles in pi.block_cycles():
        blocks.extend(_cycle_blocks(sorted(cycles, key=max)))
    return MuInvolution(tuple(blocks))


def flow_oracle(pi: MuInvolution, a: Sequence[int]) -> MuInvolution:
    """Limit read off the exponents: cycle ``(i, j)`` has weight ``a_i + a_j``."""
    a = tuple(a)
    if len(a) != pi.n:
        raise ValueError(f"need {pi.n} weights, got {len(a)}")
    blocks = []
    for cycles in pi.block_cycles():
        keyed = sorted((a[c[0] - 1] + a[c[-1] - 1], c) for c in cycles)
        for (k1, c1), (k2, c2) in zip(keyed, keyed[1:]):
            if k1 == k2:
                raise FlowTieError(f"cycles {c1} and {c2} both have weight {k1}")
        blocks.extend(_cycle_blocks(c for _, c in keyed))
    return MuInvolution(tuple(blocks))


def d_sequence(gamma: MuInvolution) -> tuple[int, ...]:
    return tuple(max(b) for b in barred(gamma).blocks)


def ascents(gamma: MuInvolution) -> list[int]:
    d = d_sequence(gamma)
    return [j for j in range(1, len(d)) if d[j - 1] < d[j]]


def descents(gamma: MuInvolution) -> list[int]:
    d = d_sequence(gamma)
    return [j for j in range(1, len(d)) if d[j - 1] > d[j]]


def sigma(gamma: MuInvolution) -> MuInvolution:
    """Dense orbit of the cell of gamma: merge blocks across every ascent."""
    asc = set(ascents(gamma))
    groups = [[gamma.blocks[0]]]
    for j, b in enumerate(gamma.blocks[1:], start=1):
        if j in asc:
            groups[-1].append(b)
        else:
            groups.append([b])
    out = []
    for g in groups:
        cycles = [tuple(sorted(b)) for b in g]
        out.append(_block_word([x for b in g for x in b], cycles))
    return MuInvolution(tuple(out))


def weyl_act(w: Sequence[int], gamma: MuInvolution) -> MuInvolution:
    """Relabel each letter x as w(x); 2-blocks are rewritten descending."""
    w = tuple(w)
    barred(gamma)
    if sorted(w) != list(range(1, gamma.n + 1)):
        raise ValueError(f"{w} is not a permutation of 1..{gamma.n}")
    blocks = []
    for b in gamma.blocks:
        blocks.append(tuple(sorted((w[x - 1] for x in b), reverse=True)))
    return MuInvolution(tuple(blocks))


def subdivide(j: int, i: int, gamma: MuInvolution) -> MuInvolution:
    """Split the block ``ji`` into ``j|i``; any other gamma is returned as is."""
    if not i < j:
        raise ValueError("subdivision needs i < j")
    blocks = []
    for b in gamma.blocks:
        blocks.extend([(j,), (i,)] if b == (j, i) else [b])
    return MuInvolution(tuple(blocks))


def cell_dimension(gamma: MuInvolution) -> int:
    barred(gamma)
    n = gamma.n
    two_blocks = sum(1 for b in gamma.blocks if len(b) == 2)
    return length(longest_element(n)) - length(gamma.word) + two_blocks + len(ascents(gamma))


def orbit_dimension_of_composition(mu: Sequence[int]) -> int:
    """Dimension of the G-orbit of type mu: flag part plus the smooth quadrics."""
    mu = tuple(mu)
    n = sum(mu)
    flag = length(longest_element(n)) - length(longest_parabolic_element(subset_of(mu), n))
    return flag + sum(m * (m + 1) // 2 - 1 for m in mu)


def orbit_dimension(pi: MuInvolution) -> int:
    return orbit_dimension_of_composition(pi.mu) - mu_length(pi)


@dataclass(frozen=True)
class CellRecord:
    fixed_point: MuInvolution
    members: tuple[MuInvolution, ...]
    dense: MuInvolution
    dimension: int


@lru_cache(maxsize=None)
def cells(n: int) -> tuple[CellRecord, ...]:
    """All BB-cells of X_n, ordered by fixed point."""
    groups: dict[MuInvolution, list] = {}
    for pi in full_poset(n).elements:
        groups.setdefault(tau(pi), []).append(pi)
    out = []
    for gamma in enumerate_barred(n):
        dense = sigma(gamma)
        out.append(CellRecord(gamma, tuple(sorted(groups.get(gamma, ()))), dense,
                              orbit_dimension(dense)))
    return tuple(out)


def _closure_bits(poset: Poset, members) -> int:
    """Bitset of every orbit lying in the closure of the given orbits."""
    mask = 0
    for pi in members:
        i = poset.index[pi]
        for j in range(len(poset)):
            if poset.up_bits(j) >> i & 1:
                mask |= 1 << j
    return mask


@lru_cache(maxsize=None)
def bb_order(n: int) -> Poset:
    """Cell gamma' is below gamma when every orbit of gamma' lies in the
    closure of some orbit of gamma."""
    poset = full_poset(n)
    cs = cells(n)
    closure = [_closure_bits(poset, c.members) for c in cs]
    pairs = []
    for lo in cs:
        lo_bits = sum(1 << poset.index[p] for p in lo.members)
        for k, hi in enumerate(cs):
            if lo_bits & ~closure[k] == 0:
                pairs.append((lo.fixed_point, hi.fixed_point))
    return Poset.from_relation([c.fixed_point for c in cs], pairs)


@dataclass(frozen=True)
class StratificationWitness:
    """The closure of ``cell_a`` meets ``cell_b`` in some but not all orbits."""
    cell_a: MuInvolution
    cell_b: MuInvolution
    intersection: tuple[MuInvolution, ...]
    missing: tuple[MuInvolution, ...]


def stratification_witnesses(n: int) -> list[StratificationWitness]:
    poset = full_poset(n)
    out = []
    for a in cells(n):
        closure = _closure_bits(poset, a.members)
        for b in cells(n):
            if b is a:
                continue
            inside = tuple(p for p in b.members if closure >> poset.index[p] & 1)
            if inside and len(inside) < len(b.members):
                missing = tuple(p for p in b.members if p not in inside)
                out.append(StratificationWitness(a.fixed_point, b.fixed_point, inside, missing))
    return out


def stratification_witness(n: int) -> StratificationWitness | None:
    """The first witness in enumeration order, or None if the cells form a
    stratification."""
    ws = stratification_witnesses(n)
    return ws[0] if ws else None


@dataclass
class ConjectureReport:
    n: int
    mu: tuple[int, ...] | None
    poset: Poset
    graded: bool
    failing_interval: tuple | None
    minimum: MuInvolution | None
    maximum: MuInvolution | None

    @property
    def ok(self) -> bool:
        return self.graded and self.minimum is not None and self.maximum is not None


def bcell_conjecture_check(n: int, mu: Sequence[int] | None = None) -> ConjectureReport:
    """Restrict the Bruhat order to the dense orbits of the BB-cells.

    With ``mu`` given, only the dense orbits of that composition are kept and
    ordered inside ``bruhat_poset(mu)``.
    """
    dense = {c.dense for c in cells(n)}
    if mu is None:
        poset = full_poset(n).restrict(dense)
    else:
        mu = tuple(mu)
        if mu not in compositions(n):
            raise ValueError(f"{mu} is not a composition of {n}")
        poset = bruhat_poset(mu).restrict(d for d in dense if d.mu == mu)
    graded, bad = poset.is_graded()
    return ConjectureReport(n, mu, poset, graded, bad, poset.minimum(), poset.maximum())
