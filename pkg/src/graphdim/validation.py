"""Input coercion shared by the estimator, the CLI and library callers."""

from __future__ import annotations

import os
from numbers import Integral
from typing import Optional

import numpy as np

from .dimension import DimensionVariant
from .graph import Graph, GraphError


def check_graph(obj) -> Graph:
    """Return ``obj`` as a :class:`Graph`.

    Accepts a Graph, a square symmetric 0/1 adjacency matrix (nested lists or
    array), or any object exposing ``nodes`` and ``edges`` in the networkx
    style, whose nodes are relabelled in sorted order.
    """
    if isinstance(obj, Graph):
        return obj
    if hasattr(obj, "nodes") and hasattr(obj, "edges"):
        nodes = sorted(obj.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return Graph.from_edge_list(len(nodes), [(index[u], index[v]) for u, v in obj.edges()])
    try:
        arr = np.asarray(obj)
    except Exception as exc:  # pragma: no cover - numpy accepts nearly anything
        raise GraphError(f"cannot interpret {type(obj).__name__} as a graph") from exc
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise GraphError(f"adjacency matrix must be square, got shape {arr.shape}")
    if arr.dtype == object or not np.isin(arr, (0, 1)).all():
        raise GraphError("adjacency matrix entries must be 0 or 1")
    return Graph.from_adjacency_matrix(arr.astype(int).tolist())


def check_variant(variant) -> DimensionVariant:
    try:
        return DimensionVariant.parse(variant)
    except ValueError as exc:
        raise GraphError(str(exc)) from None


def check_budget(max_nodes) -> Optional[int]:
    """``None`` means unlimited; otherwise a positive integer node cap."""
    if max_nodes is None:
        return None
    if isinstance(max_nodes, bool) or not isinstance(max_nodes, Integral) or max_nodes < 1:
        raise ValueError(f"budget must be a positive integer or None, got {max_nodes!r}")
    return int(max_nodes)


def check_n_jobs(n_jobs) -> int:
    """Resolve ``None``/``-1``/positive counts to a concrete worker count."""
    cores = os.cpu_count() or 1
    if n_jobs is None or n_jobs == -1:
        return cores
    if isinstance(n_jobs, bool) or not isinstance(n_jobs, Integral) or n_jobs == 0 or n_jobs < -1:
        raise ValueError(f"n_jobs must be a positive integer, -1 or None, got {n_jobs!r}")
    return int(n_jobs)
