"""Named graph families and the binary products (union, join, corona, strong).

Every constructor fixes its vertex numbering so that witness sets computed on
the result are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .graph import Graph, GraphError, iter_bits

_MINIMUM = {
    "path": 1,
    "cycle": 3,
    "complete": 1,
    "star": 1,
    "wheel": 4,
    "fan": 3,
    "null": 1,
}


def path(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def null(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_bipartite(r: int, s: int) -> Graph:
    return Graph.from_edge_list(r + s, [(i, r + j) for i in range(r) for j in range(s)])


def star(r: int) -> Graph:
    return complete_bipartite(1, r)


def wheel(n: int) -> Graph:
    return join(complete(1), cycle(n - 1))


def fan(n: int) -> Graph:
    return join(complete(1), path(n - 1))


_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "null": null,
    "star": star,
    "wheel": wheel,
    "fan": fan,
}


def family(kind: str, *params: int) -> Graph:
    """Build a named family member; ``complete_bipartite`` takes ``(r, s)``."""
    if kind == "complete_bipartite":
        if len(params) != 2:
            raise GraphError("complete_bipartite takes two parameters r, s")
        r, s = params
        if r < 1 or s < 1:
            raise GraphError(f"complete_bipartite needs r, s >= 1, got {r}, {s}")
        return complete_bipartite(r, s)
    if kind not in _BUILDERS:
        raise GraphError(f"unknown family {kind!r}")
    if len(params) != 1:
        raise GraphError(f"{kind} takes exactly one parameter")
    (n,) = params
    if n < _MINIMUM[kind]:
        raise GraphError(f"{kind} needs parameter >= {_MINIMUM[kind]}, got {n}")
    return _BUILDERS[kind](n)


def _shifted_rows(g: Graph, offset: int) -> list:
    return [row << offset for row in g.rows]


def union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; vertices of ``h`` are shifted by ``g.n``."""
    return Graph(g.n + h.n, list(g.rows) + _shifted_rows(h, g.n))


def join(g: Graph, h: Graph) -> Graph:
    h_mask = ((1 << h.n) - 1) << g.n
    g_mask = (1 << g.n) - 1
    rows = [row | h_mask for row in g.rows] + [row | g_mask for row in _shifted_rows(h, g.n)]
    return Graph(g.n + h.n, rows)


@dataclass(frozen=True)
class CoronaRoles:
    """Vertex roles in G ⊙ H: anchors ``0..n-1``, then copy ``i`` of H as a block."""

    n: int
    copy_order: int

    def is_anchor(self, v: int) -> bool:
        return v < self.n

    def anchor_of(self, v: int) -> int:
        return v if v < self.n else (v - self.n) // self.copy_order

    def copy_vertex(self, i: int, x: int) -> int:
        return self.n + i * self.copy_order + x

    def copy_block(self, i: int) -> range:
        start = self.n + i * self.copy_order
        return range(start, start + self.copy_order)

    def original(self, v: int) -> int:
        """Index of ``v`` inside its source graph (G for anchors, H for copies)."""
        return v if v < self.n else (v - self.n) % self.copy_order

    def role(self, v: int) -> dict:
        if v < self.n:
            return {"role": "anchor", "vertex": v}
        return {"role": "copy", "copy": self.anchor_of(v), "vertex": self.original(v)}


def corona(g: Graph, h: Graph) -> tuple:
    """Return ``(G ⊙ H, roles)``; the order is ``n * (1 + n')``."""
    n, k = g.n, h.n
    total = n * (1 + k)
    rows = list(g.rows) + [0] * (n * k)
    for i in range(n):
        offset = n + i * k
        block = ((1 << k) - 1) << offset
        rows[i] |= block
        for x, row in enumerate(h.rows):
            rows[offset + x] = (row << offset) | (1 << i)
    return Graph(total, rows), CoronaRoles(n, k)


def strong(g: Graph, h: Graph) -> Graph:
    """Strong product; vertex ``(a, b)`` is numbered ``a * h.n + b``."""
    k = h.n
    closed_h = [row | (1 << b) for b, row in enumerate(h.rows)]
    rows = []
    for a in range(g.n):
        closed_g = g.rows[a] | (1 << a)
        for b in range(k):
            row = 0
            for a2 in iter_bits(closed_g):
                row |= closed_h[b] << (a2 * k)
            rows.append(row & ~(1 << (a * k + b)))
    return Graph(g.n * k, rows)


def strong_power(graphs: Sequence[Graph]) -> Graph:
    if not graphs:
        raise GraphError("strong_power needs at least one graph")
    return reduce(strong, graphs)
