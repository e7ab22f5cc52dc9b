"""
Tangent weights at torus fixed points and the fixed points joined to them by
torus-invariant curves.

Weights are integer vectors in the basis ``e_1, ..., e_n``; the simple root
``alpha_i`` is ``e_i - e_{i+1}``.

>>> from quadrics.io import parse_degenerate_involution as P
>>> t = tangent_weights(P("1|32"))
>>> t.vertical
((0, -1, 1), (0, 1, -1))
>>> t.normal
((-2, 1, 1),)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bbcells import subdivide, weyl_act
from .degeninv import MuInvolution, barred, special_element, subset_of
from .permgroup import longest_parabolic_element, simple_reflection, transposition

__all__ = [
    "Weight", "OpenProblemError", "simple_root", "i_of", "is_special",
    "TangentData", "tangent_weights", "reduce_to_special", "weyl_act_weight",
    "curve_other_fixed_points",
]

Weight = tuple  # tuple[int, ...] with coordinate sum 0


class OpenProblemError(NotImplementedError):
    """Curve endpoints in a normal direction are not known."""


def simple_root(i: int, n: int) -> Weight:
    v = [0] * n
    v[i - 1], v[i] = 1, -1
    return tuple(v)


def _neg(v: Weight) -> Weight:
    return tuple(-x for x in v)


def weyl_act_weight(w: Sequence[int], v: Weight) -> Weight:
    """``w`` sends ``e_i`` to ``e_{w(i)}``."""
    out = [0] * len(v)
    for i, x in enumerate(v):
        out[w[i] - 1] += x
    return tuple(out)


def i_of(gamma: MuInvolution) -> frozenset[int]:
    return subset_of(barred(gamma).mu)


def is_special(gamma: MuInvolution) -> bool:
    """Block alphabets are the consecutive intervals of 1..n, in order."""
    barred(gamma)
    k = 1
    for b in gamma.blocks:
        if sorted(b) != list(range(k, k + len(b))):
            return False
        k += len(b)
    return True


@dataclass(frozen=True)
class TangentData:
    horizontal: tuple[Weight, ...]
    vertical: tuple[Weight, ...]
    normal: tuple[Weight, ...]

    def __len__(self):
        return len(self.horizontal) + len(self.vertical) + len(self.normal)


def tangent_weights(gamma: MuInvolution) -> TangentData:
    if not is_special(gamma):
        raise ValueError(f"[{gamma}] is not special; translate it with reduce_to_special")
    n = gamma.n
    I = i_of(gamma)
    block_of = {x: k for k, b in enumerate(gamma.blocks) for x in b}
    horizontal = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if block_of[i] != block_of[j]:
                v = [0] * n
                v[j - 1], v[i - 1] = 1, -1
                horizontal.append(tuple(v))
    vertical = []
    for i in sorted(I):
        a = simple_root(i, n)
        vertical.extend([_neg(a), a])
    wI = longest_parabolic_element(I, n)
    normal = []
    for i in range(1, n):
        if i in I:
            continue
        a = simple_root(i, n)
        normal.append(_neg(tuple(x + y for x, y in zip(a, weyl_act_weight(wI, a)))))
    return TangentData(tuple(sorted(horizontal)), tuple(vertical), tuple(normal))


def reduce_to_special(gamma: MuInvolution) -> tuple[MuInvolution, tuple[int, ...]]:
    """``(gamma', w)`` with gamma' special and ``weyl_act(w, gamma') == gamma``.

    w sends the k-th interval increasingly onto the k-th block alphabet, which
    makes it the shortest element of its coset.
    """
    barred(gamma)
    w = tuple(x for b in gamma.blocks for x in sorted(b))
    return special_element(gamma.mu), w


def curve_other_fixed_points(gamma: MuInvolution, delta: Weight) -> set[MuInvolution]:
    """Other fixed points on the invariant curves through gamma in direction delta."""
    t = tangent_weights(gamma)
    delta = tuple(delta)
    n = gamma.n
    if delta in t.horizontal or _neg(delta) in t.horizontal:
        i = next(k for k, x in enumerate(delta, start=1) if x != 0)
        j = next(k for k, x in enumerate(delta, start=1) if x != 0 and k != i)
        return {weyl_act(transposition(i, j, n), gamma)}
    if delta in t.vertical:
        i = next(k for k in sorted(i_of(gamma)) if delta in (simple_root(k, n), _neg(simple_root(k, n))))
        sd = subdivide(i + 1, i, gamma)
        return {sd, weyl_act(simple_reflection(i, n), sd)}
    if delta in t.normal or _neg(delta) in t.normal:
        raise OpenProblemError("curve endpoints in normal directions are not known")
    raise ValueError(f"{delta} is not a tangent weight at [{gamma}]")
