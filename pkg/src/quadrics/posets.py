"""
Finite posets stored as up-set bitsets over an element list.

``up[i]`` has bit j set iff ``elements[i] <= elements[j]``. Python integers
serve as bitsets, which keeps closure and reduction short at desk scale.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

__all__ = ["Poset", "NotAPartialOrder"]


class NotAPartialOrder(ValueError):
    """Raised when a generated relation has a cycle."""


def _bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def transitive_closure(up: list[int]) -> list[int]:
    up = list(up)
    for k in range(len(up)):
        bk = 1 << k
        uk = up[k]
        for i in range(len(up)):
            if up[i] & bk:
                up[i] |= uk
    return up


class Poset:
    """Immutable finite poset.

    Build with :meth:`from_relation`, which closes a generating relation
    reflexively and transitively and rejects cycles.
    """

    def __init__(self, elements: Sequence[Hashable], up: Sequence[int]):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self._up = tuple(up)
        self._covers: tuple[tuple[int, int], ...] | None = None
        self._order: tuple[int, ...] | None = None

    @classmethod
    def from_relation(cls, elements, pairs: Iterable[tuple[Hashable, Hashable]]) -> "Poset":
        elements = tuple(elements)
        index = {x: i for i, x in enumerate(elements)}
        up = [1 << i for i in range(len(elements))]
        for a, b in pairs:
            up[index[a]] |= 1 << index[b]
        return cls.from_bitsets(elements, transitive_closure(up))

    @classmethod
    def from_bitsets(cls, elements, up: Sequence[int]) -> "Poset":
        for i, u in enumerate(up):
            for j in _bits(u & ~(1 << i)):
                if up[j] >> i & 1:
                    raise NotAPartialOrder(f"{elements[i]} and {elements[j]} are mutually below")
        return cls(elements, up)

    # -- queries -----------------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.index

    def leq(self, a, b) -> bool:
        return bool(self._up[self.index[a]] >> self.index[b] & 1)

    def up_bits(self, i: int) -> int:
        return self._up[i]

    def upset(self, x) -> list:
        return [self.elements[j] for j in _bits(self._up[self.index[x]])]

    def downset(self, x) -> list:
        i = self.index[x]
        return [y for j, y in enumerate(self.elements) if self._up[j] >> i & 1]

    def relation(self) -> frozenset[tuple]:
        """All pairs ``(a, b)`` with ``a <= b``."""
        return frozenset((self.elements[i], self.elements[j])
                         for i, u in enumerate(self._up) for j in _bits(u))

    def topological_order(self) -> tuple[int, ...]:
        # a < b implies upset(b) is a proper subset of upset(a)
        if self._order is None:
            self._order = tuple(sorted(range(len(self)), key=lambda i: -self._up[i].bit_count()))
        return self._order

    def cover_indices(self) -> tuple[tuple[int, int], ...]:
        if self._covers is None:
            out = []
            for i, u in enumerate(self._up):
                strict = u & ~(1 << i)
                above = 0
                for j in _bits(strict):
                    above |= self._up[j] & ~(1 << j)
                out.extend((i, j) for j in _bits(strict & ~above))
            self._covers = tuple(sorted(out))
        return self._covers

    def covers(self) -> list[tuple]:
        """Transitive reduction as ``(lower, upper)`` pairs."""
        return [(self.elements[i], self.elements[j]) for i, j in self.cover_indices()]

    def minimal(self) -> list:
        return [x for x in self.elements if len(self.downset(x)) == 1]

    def maximal(self) -> list:
        return [x for i, x in enumerate(self.elements) if self._up[i].bit_count() == 1]

    def minimum(self):
        m = self.minimal()
        return m[0] if len(m) == 1 else None

    def maximum(self):
        m = self.maximal()
        return m[0] if len(m) == 1 else None

    def _chain_lengths(self, i: int) -> tuple[dict[int, int], dict[int, int]]:
        """Shortest and longest saturated-chain lengths from i to each j above."""
        succ: dict[int, list[int]] = {}
        for a, b in self.cover_indices():
            succ.setdefault(a, []).append(b)
        lo, hi = {i: 0}, {i: 0}
        for a in self.topological_order():
            if a not in lo:
                continue
            for b in succ.get(a, ()):
                lo[b] = min(lo.get(b, 1 << 30), lo[a] + 1)
                hi[b] = max(hi.get(b, -1), hi[a] + 1)
        return lo, hi

    def rank(self) -> dict:
        """Length of the longest chain from a minimal element."""
        depth = {}
        preds: dict[int, list[int]] = {}
        for a, b in self.cover_indices():
            preds.setdefault(b, []).append(a)
        for b in self.topological_order():
            depth[b] = max((depth[a] + 1 for a in preds.get(b, ())), default=0)
        return {self.elements[i]: d for i, d in depth.items()}

    def failing_intervals(self) -> list[tuple]:
        """All intervals ``[a, b]`` holding saturated chains of different lengths."""
        out = []
        for i in range(len(self)):
            lo, hi = self._chain_lengths(i)
            for j in lo:
                if lo[j] != hi[j]:
                    out.append((self.elements[i], self.elements[j]))
        return out

    def interval(self, a, b) -> list:
        ia, ib = self.index[a], self.index[b]
        return [x for j, x in enumerate(self.elements)
                if self._up[ia] >> j & 1 and self._up[j] >> ib & 1]

    def is_graded(self):
        """``(True, None)`` or ``(False, (a, b))`` with ``[a, b]`` a smallest
        failing interval. Every interval is checked, not only the whole poset."""
        bad = self.failing_intervals()
        if not bad:
            return True, None
        bad.sort(key=lambda ab: (len(self.interval(*ab)), self.index[ab[0]], self.index[ab[1]]))
        return False, bad[0]

    # -- derived posets ----------------------------------------------------

    def opposite(self) -> "Poset":
        n = len(self)
        down = [0] * n
        for i, u in enumerate(self._up):
            for j in _bits(u):
                down[j] |= 1 << i
        return Poset(self.elements, down)

    def restrict(self, subset: Iterable) -> "Poset":
        subset = set(subset)
        keep = [x for x in self.elements if x in subset]
        idx = [self.index[x] for x in keep]
        up = []
        for i in idx:
            u = self._up[i]
            up.append(sum(1 << k for k, j in enumerate(idx) if u >> j & 1))
        return Poset(keep, up)

    def same_order(self, other: "Poset") -> bool:
        return set(self.elements) == set(other.elements) and self.relation() == other.relation()

    def __repr__(self):
        return f"<Poset with {len(self)} elements, {len(self.cover_indices())} covers>"
