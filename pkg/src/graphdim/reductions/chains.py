"""Reduction chains from 3-SAT to vertex cover, domination, 1-locating domination
and the four dimension parameters.

Each constructor returns a :class:`ReductionInstance` carrying the target graph,
the decision budget, a role for every vertex and the list of steps applied.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from ..auxiliary import domination_number, min_locating_dominating, vertex_cover_number
from ..dimension import dimension
from ..construct import complete, corona
from ..graph import Graph, GraphError, is_connected
from .cnf import CnfFormula, sat_bruteforce
from .gadget import GADGET_EDGES
from .gadget import ORDER as GADGET_ORDER


@dataclass(frozen=True)
class ReductionInstance:
    graph: Graph
    budget: int
    roles: tuple
    provenance: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if len(self.roles) != self.graph.n:
            raise GraphError(f"{len(self.roles)} roles for {self.graph.n} vertices")

    def sidecar(self) -> dict:
        return {
            "budget": self.budget,
            "order": self.graph.n,
            "size": self.graph.m,
            "roles": [dict(r) for r in self.roles],
            "provenance": list(self.provenance),
        }


Source = Union[Graph, ReductionInstance]


def _unpack(source: Source, k: Optional[int]):
    if isinstance(source, ReductionInstance):
        return source.graph, source.budget if k is None else k, source.roles, source.provenance
    if k is None:
        raise ValueError("a budget k is required when reducing from a bare graph")
    return source, k, tuple({"role": "vertex", "vertex": v} for v in range(source.n)), ("graph",)


def _literal_ok(formula: CnfFormula) -> None:
    formula.require_both_polarities()


def vc_from_3sat(formula: CnfFormula) -> ReductionInstance:
    """Textbook construction: an edge per variable, a triangle per clause, and
    an edge from each clause position to the matching literal vertex."""
    _literal_ok(formula)
    n, m = formula.n_vars, formula.m
    roles = []
    for x in range(1, n + 1):
        roles.append({"role": "literal-vertex", "gadget": "variable", "variable": x, "positive": True})
        roles.append({"role": "literal-vertex", "gadget": "variable", "variable": x, "positive": False})
    edges = [(2 * i, 2 * i + 1) for i in range(n)]
    for j, clause in enumerate(formula.clauses):
        base = 2 * n + 3 * j
        edges += [(base, base + 1), (base + 1, base + 2), (base, base + 2)]
        for t, lit in enumerate(clause):
            literal = 2 * (abs(lit) - 1) + (0 if lit > 0 else 1)
            edges.append((base + t, literal))
            roles.append({"role": "literal-vertex", "gadget": "clause", "clause": j + 1, "literal": lit})
    graph = Graph.from_edge_list(2 * n + 3 * m, edges)
    return ReductionInstance(graph, n + 2 * m, tuple(roles), ("3sat", "vc"))


def triangle_construction(source: Source, k: Optional[int] = None) -> ReductionInstance:
    """Add an apex adjacent to both ends of every edge; γ(result) ≤ k iff β(source) ≤ k."""
    graph, k, roles, provenance = _unpack(source, k)
    edges = graph.edges()
    rows = list(graph.rows) + [0] * len(edges)
    new_roles = list(roles)
    for idx, (u, v) in enumerate(edges):
        apex = graph.n + idx
        rows[apex] = (1 << u) | (1 << v)
        rows[u] |= 1 << apex
        rows[v] |= 1 << apex
        gadgets = {roles[u].get("gadget"), roles[v].get("gadget")}
        tag = "interconnect" if gadgets == {"variable", "clause"} else "triangle-added"
        new_roles.append({"role": tag, "edge": [u, v]})
    return ReductionInstance(
        Graph(graph.n + len(edges), rows), k, tuple(new_roles), tuple(provenance) + ("triangle",)
    )


def locdom_from_3sat(formula: CnfFormula) -> ReductionInstance:
    return triangle_construction(vc_from_3sat(formula))


def adjdim_from_locdom(source: Source, k: Optional[int] = None) -> ReductionInstance:
    """Add one isolated vertex; the budget is unchanged."""
    graph, k, roles, provenance = _unpack(source, k)
    grown = Graph(graph.n + 1, list(graph.rows) + [0])
    new_roles = tuple(roles) + ({"role": "isolated"},)
    return ReductionInstance(grown, k, new_roles, tuple(provenance) + ("isolated",))


def _corona_roles(g_roles, h_roles, corona_roles) -> tuple:
    out = []
    for v in range(corona_roles.n * (1 + corona_roles.copy_order)):
        role = corona_roles.role(v)
        source = g_roles[v] if role["role"] == "anchor" else h_roles[role["vertex"]]
        out.append({**role, "source": dict(source)})
    return tuple(out)


def dim_from_adjdim(source: Source, k: Optional[int] = None) -> ReductionInstance:
    """(H, k) becomes (K_2 ⊙ H, 2k): dim(K_2 ⊙ H) = 2 dim_A(H)."""
    h, k, roles, provenance = _unpack(source, k)
    if h.n < 2:
        raise GraphError("the corona reduction needs a non-trivial graph")
    g = complete(2)
    graph, cr = corona(g, h)
    g_roles = ({"role": "vertex", "vertex": 0}, {"role": "vertex", "vertex": 1})
    return ReductionInstance(graph, 2 * k, _corona_roles(g_roles, roles, cr), tuple(provenance) + ("corona-K2",))


def locadjdim_from_dom(source: Source, k: Optional[int] = None) -> ReductionInstance:
    """(G, k) becomes (G ⊙ K_2, n + k): dim_{A,l}(G ⊙ K_2) = n + γ(G)."""
    g, k, roles, provenance = _unpack(source, k)
    if g.n < 2 or not is_connected(g):
        raise GraphError("the corona reduction needs a connected graph of order at least 2")
    graph, cr = corona(g, complete(2))
    k2_roles = ({"role": "vertex", "vertex": 0}, {"role": "vertex", "vertex": 1})
    return ReductionInstance(graph, g.n + k, _corona_roles(roles, k2_roles, cr), tuple(provenance) + ("corona-by-K2",))


def locadjdim_from_3sat(formula: CnfFormula) -> ReductionInstance:
    """An induced P_4 per variable (middle vertices are the literals) and a
    9-vertex gadget per clause whose outer vertex ``i`` meets the literal of the
    clause's ``i``-th variable in ascending order."""
    _literal_ok(formula)
    n, m = formula.n_vars, formula.m
    roles = []
    edges = []
    for x in range(1, n + 1):
        b = 4 * (x - 1)
        edges += [(b, b + 1), (b + 1, b + 2), (b + 2, b + 3)]
        roles += [
            {"role": "path-end", "variable": x},
            {"role": "literal-vertex", "variable": x, "positive": True},
            {"role": "literal-vertex", "variable": x, "positive": False},
            {"role": "path-end", "variable": x},
        ]
    for j, clause in enumerate(formula.clauses):
        base = 4 * n + GADGET_ORDER * j
        edges += [(base + u, base + v) for u, v in GADGET_EDGES]
        for t in range(GADGET_ORDER):
            roles.append({"role": "clause-gadget", "clause": j + 1, "vertex": t, "outer": t < 3})
        for t, lit in enumerate(sorted(clause, key=abs)):
            literal = 4 * (abs(lit) - 1) + (1 if lit > 0 else 2)
            edges.append((base + t, literal))
    graph = Graph.from_edge_list(4 * n + GADGET_ORDER * m, edges)
    return ReductionInstance(graph, n + 2 * m, tuple(roles), ("3sat", "ladim-gadget"))


def _target_graph_chain(chain: str):
    return {
        "vc": vc_from_3sat,
        "dom": lambda f: triangle_construction(vc_from_3sat(f)),
        "locdom": locdom_from_3sat,
        "adjdim": lambda f: adjdim_from_locdom(locdom_from_3sat(f)),
        "dim-corona": lambda f: dim_from_adjdim(adjdim_from_locdom(locdom_from_3sat(f))),
        "ladim-gadget": locadjdim_from_3sat,
        "ladim-corona": lambda f: locadjdim_from_dom(triangle_construction(vc_from_3sat(f))),
    }[chain]


CHAINS = ("vc", "dom", "locdom", "adjdim", "dim-corona", "ladim-gadget", "ladim-corona")


def reduce_3sat(formula: CnfFormula, chain: str) -> ReductionInstance:
    if chain not in CHAINS:
        raise ValueError(f"unknown chain {chain!r}; expected one of {', '.join(CHAINS)}")
    return _target_graph_chain(chain)(formula)


def expected_counts(chain: str, n: int, m: int) -> tuple:
    """Closed-form (order, size, budget) of the chain's instance for n variables, m clauses."""
    k = n + 2 * m
    dom_order, dom_size = 3 * n + 9 * m, 3 * n + 18 * m
    if chain == "vc":
        return 2 * n + 3 * m, n + 6 * m, k
    if chain in ("dom", "locdom"):
        return dom_order, dom_size, k
    if chain == "adjdim":
        return dom_order + 1, dom_size, k
    if chain == "dim-corona":
        h_order = dom_order + 1
        return 2 * (1 + h_order), 1 + 2 * (dom_size + h_order), 2 * k
    if chain == "ladim-gadget":
        return 4 * n + 9 * m, 3 * n + 18 * m, k
    if chain == "ladim-corona":
        return 3 * dom_order, dom_size + 3 * dom_order, dom_order + k
    raise ValueError(f"unknown chain {chain!r}")


# Each chain's target parameter; values are exact minimum sizes.
TARGETS = {
    "vc": lambda g, cap: vertex_cover_number(g, cap).value,
    "dom": lambda g, cap: domination_number(g, cap).value,
    "locdom": lambda g, cap: min_locating_dominating(g, cap).value,
    "adjdim": lambda g, cap: dimension(g, "adjacency", cap).value,
    "dim-corona": lambda g, cap: dimension(g, "metric", cap).value,
    "ladim-gadget": lambda g, cap: dimension(g, "local_adjacency", cap).value,
    "ladim-corona": lambda g, cap: dimension(g, "local_adjacency", cap).value,
}

# Parameter each graph-input chain reduces from; used by the check mode.
SOURCES = {
    "dom": lambda g, cap: vertex_cover_number(g, cap).value,
    "adjdim": lambda g, cap: min_locating_dominating(g, cap).value,
    "dim-corona": lambda g, cap: dimension(g, "adjacency", cap).value,
    "ladim-corona": lambda g, cap: domination_number(g, cap).value,
}

GRAPH_STEPS = {
    "dom": triangle_construction,
    "adjdim": adjdim_from_locdom,
    "dim-corona": dim_from_adjdim,
    "ladim-corona": locadjdim_from_dom,
}


def check_3sat_chain(formula: CnfFormula, chain: str, max_nodes: Optional[int] = None) -> dict:
    """Compare SAT(F) with the exact decision ``target(instance) <= budget``."""
    inst = reduce_3sat(formula, chain)
    sat = sat_bruteforce(formula)
    value = TARGETS[chain](inst.graph, max_nodes)
    decision = value <= inst.budget
    return {
        "chain": chain,
        "satisfiable": sat,
        "value": value,
        "budget": inst.budget,
        "decision": decision,
        "equivalent": sat == decision,
        "order": inst.graph.n,
        "size": inst.graph.m,
    }


def check_graph_step(graph: Graph, k: int, chain: str, max_nodes: Optional[int] = None) -> dict:
    """Compare the source decision on (graph, k) with the target decision on the reduced instance."""
    inst = GRAPH_STEPS[chain](graph, k)
    source_value = SOURCES[chain](graph, max_nodes)
    target_value = TARGETS[chain](inst.graph, max_nodes)
    return {
        "chain": chain,
        "source_value": source_value,
        "source_decision": source_value <= k,
        "value": target_value,
        "budget": inst.budget,
        "decision": target_value <= inst.budget,
        "equivalent": (source_value <= k) == (target_value <= inst.budget),
        "order": inst.graph.n,
        "size": inst.graph.m,
    }
