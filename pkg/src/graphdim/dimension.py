"""Exact metric, adjacency, local and truncated-metric dimensions."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import Iterable, Optional

from ._cover import CoverProblem
from .graph import (
    SINGLETON,
    TRUE_TWIN,
    Graph,
    GraphError,
    all_pairs_distances,
    is_connected,
    iter_bits,
    mask_of,
    twin_partition,
)
from .metric import adjacency_coverers, metric_coverers, vertex_pairs


class DisconnectedGraphError(GraphError):
    """A metric-based parameter was requested on a disconnected graph."""


_KINDS = ("metric", "adjacency", "local_metric", "local_adjacency", "truncated")
_ALIASES = {
    "dim": "metric",
    "adim": "adjacency",
    "ldim": "local_metric",
    "ladim": "local_adjacency",
    "trunc": "truncated",
}


@dataclass(frozen=True)
class DimensionVariant:
    kind: str
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown dimension kind {self.kind!r}")
        if self.kind == "truncated":
            if self.k is None or self.k < 1:
                raise ValueError("truncated variant needs k >= 1")
        elif self.k is not None:
            raise ValueError(f"{self.kind} takes no truncation level")

    @classmethod
    def parse(cls, text) -> "DimensionVariant":
        """Accept ``metric``, ``adim``, ``truncated:3``, ``trunc:3`` and so on."""
        if isinstance(text, DimensionVariant):
            return text
        name, _, level = str(text).strip().partition(":")
        kind = _ALIASES.get(name, name)
        if kind == "truncated":
            try:
                return cls("truncated", int(level))
            except ValueError:
                raise ValueError(f"malformed truncation level in {text!r}") from None
        if level:
            raise ValueError(f"unexpected parameter in variant {text!r}")
        return cls(kind)

    @property
    def local(self) -> bool:
        return self.kind.startswith("local")

    @property
    def needs_connected(self) -> bool:
        return self.kind in ("metric", "local_metric", "truncated")

    def __str__(self) -> str:
        return f"truncated:{self.k}" if self.kind == "truncated" else self.kind


METRIC = DimensionVariant("metric")
ADJACENCY = DimensionVariant("adjacency")
LOCAL_METRIC = DimensionVariant("local_metric")
LOCAL_ADJACENCY = DimensionVariant("local_adjacency")


def truncated(k: int) -> DimensionVariant:
    return DimensionVariant("truncated", k)


@dataclass(frozen=True)
class BasisCertificate:
    """Optimal value of a minimisation parameter with its lexicographically least witness."""

    variant: str
    value: int
    witness: tuple
    exhaustive: bool
    graph_hash: str

    def to_dict(self) -> dict:
        out = asdict(self)
        out["witness"] = list(self.witness)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _pairs_for(graph: Graph, variant: DimensionVariant) -> list:
    return graph.edges() if variant.local else vertex_pairs(graph.n)


def _check_input(graph: Graph, variant: DimensionVariant) -> None:
    if variant.needs_connected and not is_connected(graph):
        raise DisconnectedGraphError(f"{variant} dimension is undefined on a disconnected graph")


def _coverers(graph: Graph, variant: DimensionVariant) -> list:
    pairs = _pairs_for(graph, variant)
    if variant.kind in ("adjacency", "local_adjacency"):
        return adjacency_coverers(graph, pairs)
    level = variant.k if variant.kind == "truncated" else None
    return metric_coverers(all_pairs_distances(graph, level), pairs)


def twin_forced_mask(graph: Graph, local: bool = False) -> int:
    """All but the largest member of each twin class that every generator must meet.

    Swapping two twins is an automorphism, so some minimum generator (and the
    lexicographically least one) contains the smallest ``|U| - 1`` members.
    For local variants only true-twin classes, whose members are adjacent, count.
    """
    part = twin_partition(graph)
    forced = 0
    for cls, tag in zip(part.classes, part.tags):
        if tag == SINGLETON or (local and tag != TRUE_TWIN):
            continue
        forced |= mask_of(sorted(cls)[:-1])
    return forced


def is_generator(graph: Graph, vertices: Iterable[int], variant) -> bool:
    """Check the generator definition directly from the distinguishing predicates."""
    variant = DimensionVariant.parse(variant)
    _check_input(graph, variant)
    s = set(vertices)
    for v in s:
        graph._check(v)
    rows = graph.rows
    if variant.kind in ("adjacency", "local_adjacency"):

        def separated(x, y):
            return any(((rows[t] >> x) & 1) != ((rows[t] >> y) & 1) for t in s)

    else:
        level = variant.k if variant.kind == "truncated" else None
        d = all_pairs_distances(graph, level).d

        def separated(x, y):
            return any(d[t, x] != d[t, y] for t in s)

    outside = [v for v in range(graph.n) if v not in s]
    for x, y in combinations(outside, 2):
        if variant.local and not (rows[x] >> y) & 1:
            continue
        if not separated(x, y):
            return False
    return True


def _problem(graph: Graph, variant: DimensionVariant, max_nodes) -> CoverProblem:
    _check_input(graph, variant)
    return CoverProblem(graph.n, _coverers(graph, variant), max_nodes=max_nodes)


def dimension(graph: Graph, variant="metric", max_nodes: Optional[int] = None) -> BasisCertificate:
    """Exact minimum generator size and the lexicographically least minimum generator.

    Raises :class:`DisconnectedGraphError` for metric kinds on disconnected
    input and :class:`~graphdim.BudgetExceeded` when the node cap is hit.
    """
    variant = DimensionVariant.parse(variant)
    problem = _problem(graph, variant, max_nodes)
    forced = twin_forced_mask(graph, local=variant.local)
    value = problem.minimum(forced)
    witness = problem.lex_least(value, forced)
    return BasisCertificate(
        variant=str(variant),
        value=value,
        witness=tuple(iter_bits(witness)),
        exhaustive=True,
        graph_hash=graph.digest(),
    )


def enumerate_min_bases(graph: Graph, variant="metric", max_nodes: Optional[int] = None) -> list:
    """All minimum generators as sorted tuples, in lexicographic order."""
    variant = DimensionVariant.parse(variant)
    problem = _problem(graph, variant, max_nodes)
    value = problem.minimum(twin_forced_mask(graph, local=variant.local))
    return [tuple(iter_bits(m)) for m in problem.all_minimum(value)]


def twin_lower_bound(graph: Graph) -> int:
    return graph.n - twin_partition(graph).class_count
