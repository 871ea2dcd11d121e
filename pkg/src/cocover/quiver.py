"""Quivers: data model, text format and path enumeration.

Text format (UTF-8, line oriented)::

    # comment
    vertices: a b
    arrows:
      x: a -> b

An arrow may also follow ``arrows:`` on the same line.  Vertex and arrow
order is file order and fixes every downstream basis order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import CyclicQuiver, CyclicWithoutBound, DanglingEndpoint, DuplicateLabel, ParseError

_LABEL = re.compile(r"[^\s:#]+")
_ARROW = re.compile(r"^\s*([^\s:#]+)\s*:\s*([^\s:#]+)\s*->\s*([^\s:#]+)\s*$")


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, int, int], ...]  # (label, source index, target index)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise DuplicateLabel("duplicate vertex label")
        labels = [a[0] for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise DuplicateLabel("duplicate arrow label")
        n = len(self.vertices)
        for lab, s, t in self.arrows:
            if not (0 <= s < n and 0 <= t < n):
                raise DanglingEndpoint(f"arrow {lab} has an endpoint out of range")

    @classmethod
    def from_edges(cls, vertices, edges) -> "Quiver":
        """Build from vertex labels and (label, source label, target label) triples."""
        vertices = tuple(vertices)
        idx = {v: i for i, v in enumerate(vertices)}
        arrows = []
        for lab, s, t in edges:
            if s not in idx or t not in idx:
                raise DanglingEndpoint(f"arrow {lab}: unknown endpoint")
            arrows.append((lab, idx[s], idx[t]))
        return cls(vertices, tuple(arrows))

    def source(self, arrow: int) -> int:
        return self.arrows[arrow][1]

    def target(self, arrow: int) -> int:
        return self.arrows[arrow][2]

    def has_cycle(self) -> bool:
        indeg = [0] * len(self.vertices)
        for _, _, t in self.arrows:
            indeg[t] += 1
        out = [[] for _ in self.vertices]
        for _, s, t in self.arrows:
            out[s].append(t)
        stack = [v for v, d in enumerate(indeg) if d == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
        return seen < len(self.vertices)

    def sinks(self) -> list[int]:
        starts = {s for _, s, _ in self.arrows}
        return [i for i in range(len(self.vertices)) if i not in starts]


@dataclass(frozen=True)
class Path:
    start: int
    end: int
    arrows: tuple[int, ...] = ()

    def __len__(self):
        return len(self.arrows)

    def label(self, q: Quiver) -> str:
        if not self.arrows:
            return "v_" + q.vertices[self.start]
        return "*".join(q.arrows[a][0] for a in self.arrows)

    def concat(self, other: "Path") -> Optional["Path"]:
        """``self`` followed by ``other``, or None when they do not compose."""
        if self.end != other.start:
            return None
        return Path(self.start, other.end, self.arrows + other.arrows)


def parse_quiver(text: str) -> Quiver:
    vertices: list[str] | None = None
    edges: list[tuple[str, str, str]] = []
    in_arrows = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.strip()
        col = len(line) - len(line.lstrip()) + 1
        if stripped.startswith("vertices:"):
            if vertices is not None:
                raise ParseError("repeated 'vertices:' section", lineno, col)
            vertices = []
            rest = stripped[len("vertices:"):]
            for m in re.finditer(r"\S+", rest):
                tok = m.group(0)
                if not _LABEL.fullmatch(tok) or tok == "->":
                    raise ParseError(f"bad vertex label {tok!r}", lineno,
                                     col + len("vertices:") + m.start())
                if tok in vertices:
                    raise DuplicateLabel(f"line {lineno}: duplicate vertex {tok!r}")
                vertices.append(tok)
            continue
        if stripped.startswith("arrows:"):
            if vertices is None:
                raise ParseError("'arrows:' before 'vertices:'", lineno, col)
            if in_arrows:
                raise ParseError("repeated 'arrows:' section", lineno, col)
            in_arrows = True
            stripped = stripped[len("arrows:"):]
            col += len("arrows:")
            if not stripped.strip():
                continue
        if not in_arrows:
            raise ParseError(f"unexpected text {stripped!r}", lineno, col)
        m = _ARROW.match(stripped)
        if not m:
            raise ParseError(f"expected '<label>: <src> -> <tgt>', got {stripped.strip()!r}",
                             lineno, col)
        lab, s, t = m.groups()
        if any(e[0] == lab for e in edges):
            raise DuplicateLabel(f"line {lineno}: duplicate arrow {lab!r}")
        for end in (s, t):
            if end not in vertices:
                raise DanglingEndpoint(f"line {lineno}: arrow {lab!r} uses unknown vertex {end!r}")
        edges.append((lab, s, t))
    if vertices is None:
        raise ParseError("missing 'vertices:' line", 1, 1)
    return Quiver.from_edges(vertices, edges)


def serialize_quiver(q: Quiver) -> str:
    lines = ["vertices: " + " ".join(q.vertices), "arrows:"]
    for lab, s, t in q.arrows:
        lines.append(f"  {lab}: {q.vertices[s]} -> {q.vertices[t]}")
    return "\n".join(lines) + "\n"


def enumerate_paths(q: Quiver, max_len: int | None = None) -> list[Path]:
    """All paths of length <= max_len, ordered by (length, arrow sequence).

    Without a bound the quiver must be acyclic.
    """
    if max_len is None and q.has_cycle():
        raise CyclicWithoutBound("quiver has a directed cycle; supply max_len")
    out_arrows = [[] for _ in q.vertices]
    for i, (_, s, _) in enumerate(q.arrows):
        out_arrows[s].append(i)
    layer = [Path(v, v) for v in range(len(q.vertices))]
    paths = list(layer)
    # length-1 paths in arrow order, then extend lexicographically
    layer = [Path(q.source(a), q.target(a), (a,)) for a in range(len(q.arrows))]
    length = 1
    while layer and (max_len is None or length <= max_len):
        paths.extend(layer)
        nxt = []
        for p in layer:
            for a in out_arrows[p.end]:
                nxt.append(Path(p.start, q.target(a), p.arrows + (a,)))
        nxt.sort(key=lambda p: p.arrows)
        layer = nxt
        length += 1
    return paths


def sinks_and_path_counts(q: Quiver) -> dict[str, int]:
    """For every sink, the number of paths (trivial one included) ending there."""
    if q.has_cycle():
        raise CyclicQuiver("sink path counts need an acyclic quiver")
    counts = {}
    paths = enumerate_paths(q)
    for s in q.sinks():
        counts[q.vertices[s]] = sum(1 for p in paths if p.end == s)
    return counts


def loop_quiver(vertex: str = "1", arrow: str = "x") -> Quiver:
    return Quiver((vertex,), ((arrow, 0, 0),))
