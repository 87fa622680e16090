"""Domination, vertex cover, independence and 1-locating domination, solved exactly."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ._cover import CoverProblem
from .dimension import BasisCertificate, twin_forced_mask
from .graph import Graph, GraphError, delete_vertex, iter_bits
from .metric import adjacency_coverers, vertex_pairs


def _certify(name: str, graph: Graph, problem: CoverProblem, forced: int = 0) -> BasisCertificate:
    value = problem.minimum(forced)
    witness = problem.lex_least(value, forced)
    return BasisCertificate(name, value, tuple(iter_bits(witness)), True, graph.digest())


def domination_number(graph: Graph, max_nodes: Optional[int] = None) -> BasisCertificate:
    closed = [row | (1 << v) for v, row in enumerate(graph.rows)]
    return _certify("domination", graph, CoverProblem(graph.n, closed, max_nodes))


def is_dominating(graph: Graph, vertices) -> bool:
    reach = 0
    for v in vertices:
        reach |= graph.rows[v] | (1 << v)
    return reach == (1 << graph.n) - 1


@dataclass(frozen=True)
class GammaPrime:
    """min over v of γ(G - v), with the deleted vertex and a dominating set of G - v.

    ``witness`` uses the labels of the original graph.
    """

    value: int
    deleted: int
    witness: tuple


def gamma_prime(graph: Graph, max_nodes: Optional[int] = None) -> GammaPrime:
    if graph.n < 2:
        raise GraphError("gamma_prime needs at least two vertices")
    best = None
    for v in range(graph.n):
        cert = domination_number(delete_vertex(graph, v), max_nodes)
        if best is None or cert.value < best.value:
            relabeled = tuple(u if u < v else u + 1 for u in cert.witness)
            best = GammaPrime(cert.value, v, relabeled)
    return best


def vertex_cover_number(graph: Graph, max_nodes: Optional[int] = None) -> BasisCertificate:
    edges = graph.edges()
    coverers = [(1 << u) | (1 << v) for u, v in edges]
    return _certify("vertex_cover", graph, CoverProblem(graph.n, coverers, max_nodes))


def independence_number(graph: Graph, max_nodes: Optional[int] = None) -> BasisCertificate:
    """α = n - β; the witness is the complement of the minimum vertex cover witness."""
    cover = vertex_cover_number(graph, max_nodes)
    taken = set(cover.witness)
    witness = tuple(v for v in range(graph.n) if v not in taken)
    return BasisCertificate("independence", graph.n - cover.value, witness, True, cover.graph_hash)


def is_locating_dominating(graph: Graph, vertices) -> bool:
    d = set(vertices)
    if not is_dominating(graph, d):
        return False
    traces = [graph.open_neighborhood(v) & d for v in range(graph.n) if v not in d]
    return len(traces) == len(set(traces))


def min_locating_dominating(graph: Graph, max_nodes: Optional[int] = None) -> BasisCertificate:
    """Minimum dominating set D whose traces N(u) ∩ D differ for all u ≠ v outside D."""
    # A pair is resolved by the same vertices that separate it by adjacency.
    coverers = adjacency_coverers(graph, vertex_pairs(graph.n))
    coverers += [row | (1 << v) for v, row in enumerate(graph.rows)]
    problem = CoverProblem(graph.n, coverers, max_nodes)
    return _certify("locating_dominating", graph, problem, twin_forced_mask(graph))
