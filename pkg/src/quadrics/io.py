"""
Text syntax for degenerate involutions, poset documents and their DOT/JSON
exports, and an optional on-disk cache.

Grammar: blocks are separated by ``|``; a block is either a one-line word
(single digits, or comma-separated integers when n > 9) or a product of
cycles such as ``(25)(4)(9)``. Surrounding brackets and whitespace are
ignored.

>>> str(parse_degenerate_involution("[26|8351|7|94]"))
'26|8351|7|94'
>>> parse_degenerate_involution("2,6|8,3,5,1|7|9,4") == parse_degenerate_involution("26|8351|7|94")
True
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Sequence

from .degeninv import MuInvolution, _block_word
from .posets import Poset

__all__ = [
    "ParseError", "parse_degenerate_involution", "render", "PosetDocument",
    "poset_document", "export_poset", "cache_dir", "cached_document",
]

KINDS = ("weak", "bruhat", "reverse", "induced", "bb", "bcell")


class ParseError(ValueError):
    pass


_CYCLE = re.compile(r"\(([^()]*)\)")


def _letters(text: str, comma: bool) -> list[int]:
    if comma:
        parts = text.split(",")
    else:
        parts = list(text)
    try:
        out = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"bad letters in {text!r}") from None
    if any(x < 1 for x in out):
        raise ParseError(f"letters must be positive in {text!r}")
    return out


def parse_degenerate_involution(text: str) -> MuInvolution:
    s = re.sub(r"\s+", "", text)
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    if not s:
        raise ParseError("empty input")
    comma = "," in s
    blocks = []
    for k, raw in enumerate(s.split("|"), start=1):
        if not raw:
            raise ParseError(f"block {k} is empty")
        if raw.startswith("("):
            if _CYCLE.sub("", raw):
                raise ParseError(f"block {k} mixes cycles and letters: {raw!r}")
            cycles = [tuple(sorted(_letters(c, comma))) for c in _CYCLE.findall(raw)]
            if any(len(c) not in (1, 2) for c in cycles):
                raise ParseError(f"block {k} has a cycle of length > 2")
            letters = [x for c in cycles for x in c]
            if len(set(letters)) != len(letters):
                raise ParseError(f"block {k} repeats a letter")
            blocks.append(_block_word(letters, cycles))
        else:
            blocks.append(tuple(_letters(raw, comma)))
    try:
        return MuInvolution(tuple(blocks))
    except ValueError as e:
        raise ParseError(str(e)) from None


def render(pi: MuInvolution, brackets: bool = False) -> str:
    return f"[{pi}]" if brackets else str(pi)


@dataclass(frozen=True)
class PosetDocument:
    kind: str
    n: int
    mu: tuple[int, ...] | None
    elements: tuple[str, ...]
    covers: tuple[tuple[int, int], ...]
    ranks: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown poset kind {self.kind!r}")
        m = len(self.elements)
        if any(not (0 <= a < m and 0 <= b < m) for a, b in self.covers):
            raise ValueError("cover index out of range")

    def to_json(self) -> dict:
        d = asdict(self)
        d["mu"] = list(self.mu) if self.mu is not None else None
        d["elements"] = list(self.elements)
        d["covers"] = [list(c) for c in self.covers]
        d["ranks"] = list(self.ranks)
        return d

    @classmethod
    def from_json(cls, d: dict) -> "PosetDocument":
        return cls(d["kind"], d["n"], tuple(d["mu"]) if d["mu"] is not None else None,
                   tuple(d["elements"]), tuple(tuple(c) for c in d["covers"]),
                   tuple(d["ranks"]))


def poset_document(kind: str, n: int, mu: Sequence[int] | None, poset: Poset) -> PosetDocument:
    """Canonicalize a poset: elements sorted by (rank, word), covers as index pairs."""
    rank = poset.rank()
    order = sorted(poset.elements, key=lambda x: (rank[x], x.sort_key()))
    pos = {x: k for k, x in enumerate(order)}
    covers = sorted((pos[a], pos[b]) for a, b in poset.covers())
    return PosetDocument(kind, n, tuple(mu) if mu is not None else None,
                         tuple(str(x) for x in order), tuple(covers),
                         tuple(rank[x] for x in order))


def _dot(doc: PosetDocument) -> str:
    name = f"{doc.kind}_n{doc.n}" + ("_mu" + "_".join(map(str, doc.mu)) if doc.mu else "")
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for k, label in enumerate(doc.elements):
        lines.append(f'  n{k} [label="[{label}]"];')
    for r in sorted(set(doc.ranks)):
        members = " ".join(f"n{k};" for k, x in enumerate(doc.ranks) if x == r)
        lines.append(f"  {{ rank=same; {members} }}")
    for a, b in doc.covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_poset(doc: PosetDocument, fmt: str = "dot") -> bytes:
    if fmt == "dot":
        return _dot(doc).encode()
    if fmt == "json":
        return (json.dumps(doc.to_json(), sort_keys=True, indent=1) + "\n").encode()
    raise ValueError(f"unknown format {fmt!r}")


def cache_dir() -> Path | None:
    d = os.environ.get("QUADRICS_CACHE")
    return Path(d) if d else None


def _atomic_write(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(data)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def cached_document(kind: str, n: int, mu, build) -> PosetDocument:
    """Load ``(kind, n, mu)`` from the cache, or call ``build()`` and store it."""
    root = cache_dir()
    key = f"{kind}-n{n}" + ("-mu" + "_".join(map(str, mu)) if mu else "") + ".json"
    if root is not None:
        path = root / key
        if path.exists():
            return PosetDocument.from_json(json.loads(path.read_text()))
    doc = build()
    if root is not None:
        _atomic_write(root / key, export_poset(doc, "json"))
    return doc
