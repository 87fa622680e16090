"""Distinguishing predicates and the pair-coverage masks built from them."""

from __future__ import annotations

import numpy as np

from .graph import Graph, GraphError, MetricMatrix


def distinguishes(metric: MetricMatrix, s: int, x: int, y: int) -> bool:
    n = metric.order
    for v in (s, x, y):
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} out of range for order {n}")
    return bool(metric.d[s, x] != metric.d[s, y])


def adjacency_distinguishes(graph: Graph, s: int, x: int, y: int) -> bool:
    """True iff exactly one of ``x``, ``y`` lies in N(s)."""
    for v in (s, x, y):
        graph._check(v)
    row = graph.rows[s]
    return ((row >> x) & 1) != ((row >> y) & 1)


def vertex_pairs(n: int) -> list:
    return [(x, y) for x in range(n) for y in range(x + 1, n)]


def adjacency_coverers(graph: Graph, pairs) -> list:
    """For each pair, the mask of vertices that are in it or separate it by adjacency."""
    rows = graph.rows
    return [(rows[x] ^ rows[y]) | (1 << x) | (1 << y) for x, y in pairs]


def metric_coverers(metric: MetricMatrix, pairs) -> list:
    """For each pair, the mask of vertices whose distances to its ends differ."""
    n = metric.order
    weights = [1 << s for s in range(n)]
    out = []
    for x, y in pairs:
        differ = np.nonzero(metric.d[:, x] != metric.d[:, y])[0]
        mask = 0
        for s in differ:
            mask |= weights[s]
        out.append(mask)
    return out
