"""Immutable simple graphs on vertices ``0..n-1`` with bit-row adjacency."""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np


class GraphError(ValueError):
    """Malformed graph input (bad vertex index, self-loop, bad file)."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Simple undirected graph. Row ``v`` of :attr:`rows` is the bitmask of N(v).

    Instances are immutable and hashable; equality is edge-set equality on the
    same vertex count.
    """

    __slots__ = ("_n", "_rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0 or len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex outside 0..{n - 1}")
            if (row >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not (rows[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self._n = n
        self._rows = tuple(rows)
        self._hash = None

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = [0] * n
        for edge in edges:
            u, v = (int(x) for x in edge)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise GraphError(f"self-loop ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def from_adjacency_matrix(cls, matrix) -> "Graph":
        a = np.asarray(matrix)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError(f"adjacency matrix must be square, got shape {a.shape}")
        if not np.array_equal(a, a.T):
            raise GraphError("adjacency matrix is not symmetric")
        if np.any(np.diag(a)):
            raise GraphError("adjacency matrix has a non-zero diagonal")
        n = a.shape[0]
        return cls.from_edge_list(n, zip(*np.nonzero(np.triu(a != 0))))

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self._rows) // 2

    def __len__(self) -> int:
        return self._n

    def _check(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range for order {self._n}")

    def open_neighborhood(self, v: int) -> frozenset:
        self._check(v)
        return frozenset(iter_bits(self._rows[v]))

    def closed_neighborhood(self, v: int) -> frozenset:
        self._check(v)
        return frozenset(iter_bits(self._rows[v] | (1 << v)))

    def degree(self, v: int) -> int:
        self._check(v)
        return self._rows[v].bit_count()

    def degrees(self) -> list:
        return [row.bit_count() for row in self._rows]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool((self._rows[u] >> v) & 1)

    def edges(self) -> list:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self._n) for v in iter_bits(self._rows[u] >> (u + 1) << (u + 1))]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"

    def to_edge_list_text(self) -> str:
        lines = [f"{self._n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    def to_dot(self) -> str:
        body = "".join(f"  {v};\n" for v in range(self._n))
        body += "".join(f"  {u} -- {v};\n" for u, v in self.edges())
        return "graph G {\n" + body + "}\n"

    def digest(self) -> str:
        """Stable short hash of the canonical edge-list text."""
        return hashlib.sha256(self.to_edge_list_text().encode()).hexdigest()[:16]


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` then ``m`` lines of ``u v``; lines starting with ``#`` are comments."""
    lines = [ln.split() for ln in text.splitlines()]
    lines = [tok for tok in lines if tok and not tok[0].startswith("#")]
    if not lines:
        raise GraphError("empty edge-list input")
    try:
        header = [int(x) for x in lines[0]]
        if len(header) != 2:
            raise ValueError
        n, m = header
        edges = []
        for tok in lines[1:]:
            if len(tok) != 2:
                raise ValueError
            edges.append((int(tok[0]), int(tok[1])))
    except ValueError:
        raise GraphError("edge-list lines must hold exactly two integers") from None
    if n < 0 or m != len(edges):
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return Graph.from_edge_list(n, edges)


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())


def write_edge_list(graph: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(graph.to_edge_list_text())


@dataclass(frozen=True)
class MetricMatrix:
    """Distance table under d_G or the truncation min(d_G, k).

    Unreachable pairs hold :attr:`inf`, which equals the order and is never
    truncated.
    """

    order: int
    truncation: Optional[int]
    d: np.ndarray

    @property
    def inf(self) -> int:
        return max(self.order, 1)

    def __getitem__(self, key):
        return self.d[key]

    def is_finite(self, i: int, j: int) -> bool:
        return int(self.d[i, j]) < self.inf


def bfs_layers(graph: Graph, source: int) -> list:
    """Distance from ``source`` to each vertex, ``None`` where unreachable."""
    dist = [None] * graph.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    level = 0
    rows = graph.rows
    while frontier:
        level += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        nxt &= ~seen
        for v in iter_bits(nxt):
            dist[v] = level
        seen |= nxt
        frontier = nxt
    return dist


def all_pairs_distances(graph: Graph, truncation: Optional[int] = None) -> MetricMatrix:
    if truncation is not None and truncation < 1:
        raise GraphError(f"truncation must be a positive integer, got {truncation}")
    n = graph.n
    inf = max(n, 1)
    d = np.full((n, n), inf, dtype=np.int64)
    for s in range(n):
        for t, dist in enumerate(bfs_layers(graph, s)):
            if dist is not None:
                d[s, t] = dist if truncation is None else min(dist, truncation)
    d.setflags(write=False)
    return MetricMatrix(order=n, truncation=truncation, d=d)


def eccentricity(graph: Graph, v: int) -> float:
    """Largest distance from ``v``; ``math.inf`` when the graph is disconnected."""
    graph._check(v)
    dist = bfs_layers(graph, v)
    if any(x is None for x in dist):
        return math.inf
    return max(dist)


def diameter(graph: Graph) -> float:
    return max((eccentricity(graph, v) for v in range(graph.n)), default=0)


def radius(graph: Graph) -> float:
    return min((eccentricity(graph, v) for v in range(graph.n)), default=0)


def connected_components(graph: Graph) -> list:
    """Components as sorted vertex lists, ordered by smallest member."""
    remaining = (1 << graph.n) - 1
    comps = []
    while remaining:
        start = remaining & -remaining
        seen = frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= graph.rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(list(iter_bits(seen)))
        remaining &= ~seen
    return comps


def is_connected(graph: Graph) -> bool:
    return len(connected_components(graph)) <= 1


def complement(graph: Graph) -> Graph:
    full = (1 << graph.n) - 1
    return Graph(graph.n, [full & ~row & ~(1 << v) for v, row in enumerate(graph.rows)])


def delete_vertex(graph: Graph, v: int) -> Graph:
    """Remove ``v``; the remaining vertices keep their relative order."""
    graph._check(v)
    low = (1 << v) - 1

    def squeeze(row):
        return (row & low) | ((row >> (v + 1)) << v)

    return Graph(graph.n - 1, [squeeze(row) for u, row in enumerate(graph.rows) if u != v])


def induced_subgraph(graph: Graph, vertices: Sequence[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[w]) for u, w in graph.edges() if u in index and w in index]
    return Graph.from_edge_list(len(vertices), edges)


SINGLETON = "singleton"
TRUE_TWIN = "true-twin"
FALSE_TWIN = "false-twin"


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple
    tags: tuple

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def classes_tagged(self, tag: str) -> list:
        return [c for c, t in zip(self.classes, self.tags) if t == tag]

    def class_of(self, v: int) -> tuple:
        for c in self.classes:
            if v in c:
                return c
        raise GraphError(f"vertex {v} not in partition")


def twin_partition(graph: Graph) -> TwinPartition:
    """Classes of the relation N[x] = N[y] or N(x) = N(y).

    The two equalities can never hold together for distinct vertices, so every
    non-singleton class is either all true twins or all false twins.
    """
    by_key: dict = {}
    for v, row in enumerate(graph.rows):
        by_key.setdefault(("open", row), []).append(v)
        by_key.setdefault(("closed", row | (1 << v)), []).append(v)
    seen = set()
    classes, tags = [], []
    for v in range(graph.n):
        if v in seen:
            continue
        open_cls = by_key[("open", graph.rows[v])]
        closed_cls = by_key[("closed", graph.rows[v] | (1 << v))]
        if len(closed_cls) > 1:
            members, tag = closed_cls, TRUE_TWIN
        elif len(open_cls) > 1:
            members, tag = open_cls, FALSE_TWIN
        else:
            members, tag = [v], SINGLETON
        seen.update(members)
        classes.append(tuple(members))
        tags.append(tag)
    return TwinPartition(tuple(classes), tuple(tags))
