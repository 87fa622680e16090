import json

import pytest

from graphdim import (
    GraphError,
    complete,
    connected_components,
    cycle,
    dimension,
    domination_number,
    min_locating_dominating,
    null,
    path,
    star,
    vertex_cover_number,
)
from graphdim.reductions.chains import (
    CHAINS,
    ReductionInstance,
    adjdim_from_locdom,
    check_3sat_chain,
    check_graph_step,
    dim_from_adjdim,
    expected_counts,
    locadjdim_from_3sat,
    locadjdim_from_dom,
    locdom_from_3sat,
    reduce_3sat,
    triangle_construction,
    vc_from_3sat,
)
from graphdim.reductions.cnf import (
    CnfFormula,
    FormulaError,
    parse_dimacs,
    read_dimacs,
    sat_bruteforce,
    satisfying_assignment,
)
from graphdim.reductions.gadget import GADGET_EDGES, ORDER, SIZE, certify_gadget, search_gadgets

from . import oracles
from .corpus import corpus, random_formulas, small_formulas

F32 = CnfFormula(3, ((1, 2, 3), (-1, -2, -3)))


class TestCnf:
    def test_sat_examples(self):
        assert sat_bruteforce(CnfFormula(3, ((1, 2, 3),)))
        all_patterns = [(a * 1, b * 2, c * 3) for a in (1, -1) for b in (1, -1) for c in (1, -1)]
        assert not sat_bruteforce(CnfFormula(3, all_patterns))
        assert sat_bruteforce(F32)
        assert F32.evaluate(satisfying_assignment(F32))

    def test_cap(self):
        with pytest.raises(FormulaError):
            sat_bruteforce(CnfFormula(20, ((1, 2, 3),)))
        assert sat_bruteforce(CnfFormula(20, ((1, 2, 3),)), cap=20)

    @pytest.mark.parametrize("clauses,n", [(((1, 2),), 3), (((1, 1, 2),), 3), (((1, -1, 2),), 3),
                                           (((1, 2, 4),), 3), (((0, 1, 2),), 3), ((), 0)])
    def test_shape_rejected(self, clauses, n):
        with pytest.raises(FormulaError):
            CnfFormula(n, clauses)

    def test_polarity_diagnostic(self):
        f = CnfFormula(3, ((1, 2, 3),))
        assert "variable 1 never occurs negatively" in f.polarity_problems()
        with pytest.raises(FormulaError, match="never occurs negatively"):
            vc_from_3sat(f)
        with pytest.raises(FormulaError):
            locadjdim_from_3sat(f)

    def test_dimacs_round_trip(self, tmp_path):
        text = "c comment\np cnf 3 2\n1 2 3 0\n-1 -2\n-3 0\n"
        f = parse_dimacs(text)
        assert f == F32
        assert parse_dimacs(f.to_dimacs()) == f
        p = tmp_path / "f.cnf"
        p.write_text(text)
        assert read_dimacs(p) == F32

    @pytest.mark.parametrize("text", ["1 2 3 0\n", "p cnf 3\n", "p cnf 3 2\n1 2 3 0\n",
                                      "p cnf 3 1\n1 2 3\n", "p cnf 3 1\n1 a 3 0\n", ""])
    def test_dimacs_errors(self, text):
        with pytest.raises(FormulaError):
            parse_dimacs(text)


class TestCounts:
    @pytest.mark.parametrize("f", small_formulas() + random_formulas(6))
    def test_every_chain_matches_closed_form(self, f):
        for chain in CHAINS:
            inst = reduce_3sat(f, chain)
            assert (inst.graph.n, inst.graph.m, inst.budget) == expected_counts(chain, f.n_vars, f.m)
            assert len(inst.roles) == inst.graph.n

    def test_named_sizes(self):
        assert expected_counts("vc", 3, 2) == (12, 15, 7)
        assert expected_counts("locdom", 2, 1) == (15, 24, 4)
        assert expected_counts("locdom", 3, 2) == (27, 45, 7)
        assert expected_counts("ladim-gadget", 2, 1) == (17, 24, 4)
        assert expected_counts("ladim-gadget", 3, 2) == (30, 45, 7)
        with pytest.raises(ValueError):
            expected_counts("nope", 1, 1)

    def test_closed_forms_are_identities(self):
        for n in range(1, 8):
            for m in range(1, 8):
                vc = expected_counts("vc", n, m)
                assert vc[:2] == (3 * m + 2 * n, 6 * m + n)
                tri = expected_counts("locdom", n, m)
                assert tri[:2] == (vc[0] + vc[1], 3 * vc[1])
                assert tri[:2] == (3 * n + 9 * m, 3 * n + 18 * m)
                assert expected_counts("ladim-gadget", n, m)[:2] == (4 * n + 9 * m, 3 * n + 18 * m)

    def test_unknown_chain(self):
        with pytest.raises(ValueError):
            reduce_3sat(F32, "nope")


class TestConstructions:
    def test_vc_roles_and_edges(self):
        inst = vc_from_3sat(F32)
        assert inst.graph.has_edge(0, 1)  # variable 1: positive 0, negative 1
        assert inst.graph.has_edge(6, 0) and inst.graph.has_edge(9, 1)  # clause literals to variables
        assert inst.roles[6] == {"role": "literal-vertex", "gadget": "clause", "clause": 1, "literal": 1}

    def test_triangle_counts(self):
        t = triangle_construction(path(3), 2)
        assert (t.graph.n, t.graph.m) == (5, 6)
        t = triangle_construction(complete(3), 2)
        assert (t.graph.n, t.graph.m) == (6, 9)
        assert {r["role"] for r in t.roles[3:]} == {"triangle-added"}

    def test_triangle_equivalence_catalog(self):
        for g in oracles.atlas_upto(6):
            if any(g.degree(v) == 0 for v in range(g.n)):
                continue
            beta = vertex_cover_number(g).value
            for k in (beta, beta - 1):
                r = check_graph_step(g, k, "dom")
                assert r["equivalent"], (g, k)

    def test_locdom_roles(self):
        inst = locdom_from_3sat(F32)
        tags = [r["role"] for r in inst.roles]
        assert tags.count("interconnect") == 3 * F32.m
        assert tags.count("triangle-added") == F32.n_vars + 3 * F32.m
        assert tags.count("literal-vertex") == 2 * F32.n_vars + 3 * F32.m
        assert inst.provenance == ("3sat", "vc", "triangle")

    def test_adjdim_examples(self):
        inst = adjdim_from_locdom(path(4), 2)
        assert (inst.graph.n, inst.graph.m, inst.budget) == (5, 3, 2)
        assert dimension(inst.graph, "adjacency").value == 2 == min_locating_dominating(path(4)).value
        assert dimension(adjdim_from_locdom(complete(3), 2).graph, "adjacency").value == 2
        assert inst.roles[-1] == {"role": "isolated"}

    def test_adjdim_step_equivalence_catalog(self):
        for g in oracles.atlas_upto(6):
            ld = min_locating_dominating(g).value
            for k in (ld, ld - 1):
                assert check_graph_step(g, k, "adjdim")["equivalent"], (g, k)

    def test_dim_corona_examples(self):
        assert dimension(dim_from_adjdim(path(3), 1).graph, "metric").value == 2
        inst = dim_from_adjdim(complete(3), 2)
        assert inst.budget == 4 and dimension(inst.graph, "metric").value == 4
        with pytest.raises(GraphError):
            dim_from_adjdim(complete(1), 0)

    def test_dim_corona_budget_exact(self):
        for h in oracles.atlas_upto(5, min_order=2):
            a = dimension(h, "adjacency").value
            for k in (a, a - 1):
                assert check_graph_step(h, k, "dim-corona")["equivalent"], (h, k)

    def test_ladim_corona_examples(self):
        inst = locadjdim_from_dom(path(4), 2)
        assert inst.budget == 6 and dimension(inst.graph, "local_adjacency").value == 6
        inst = locadjdim_from_dom(complete(3), 1)
        assert dimension(inst.graph, "local_adjacency").value == 4
        for bad in (null(3), complete(1)):
            with pytest.raises(GraphError):
                locadjdim_from_dom(bad, 1)

    def test_ladim_corona_step_equivalence(self):
        for g in oracles.atlas_upto(5, connected=True, min_order=2):
            gamma = domination_number(g).value
            for k in (gamma, gamma - 1):
                assert check_graph_step(g, k, "ladim-corona")["equivalent"], (g, k)

    def test_gadget_wiring(self):
        inst = locadjdim_from_3sat(CnfFormula(3, ((-3, 1, 2), (3, -1, -2))))
        base = 4 * 3
        # Outer vertex t meets the literal of the t-th variable in ascending order.
        assert inst.graph.has_edge(base + 0, 1) and inst.graph.has_edge(base + 1, 5)
        assert inst.graph.has_edge(base + 2, 10)
        assert inst.roles[0]["role"] == "path-end" and inst.roles[1]["role"] == "literal-vertex"
        assert len(connected_components(inst.graph)) == 1

    def test_roles_must_cover_vertices(self):
        with pytest.raises(GraphError):
            ReductionInstance(path(3), 1, ({"role": "isolated"},))

    def test_sidecar(self):
        side = json.loads(json.dumps(vc_from_3sat(F32).sidecar()))
        assert side["budget"] == 7 and len(side["roles"]) == 12 and side["provenance"] == ["3sat", "vc"]

    def test_bare_graph_needs_budget(self):
        with pytest.raises(ValueError):
            triangle_construction(path(3))


class TestGadget:
    def test_frozen_gadget_certificate(self):
        cert = certify_gadget()
        assert cert["passed"]
        assert cert["inner_lower_bound"] and cert["two_insufficient_without_literal"]
        assert sorted(cert["two_suffice"]) == list(range(1, 8)) and all(cert["two_suffice"].values())
        assert cert["min_basis_uses_two"]

    def test_shape(self):
        assert ORDER == 9 and SIZE == len(GADGET_EDGES) == 15

    def test_search_reproduces_frozen_choice(self):
        assert next(search_gadgets()) == tuple(sorted(GADGET_EDGES))

    def test_certificate_rejects_a_bad_gadget(self):
        assert not certify_gadget(cycle(9).edges())["passed"]


class TestSoundness:
    """Chains whose SAT equivalence holds on the whole small corpus."""

    @pytest.mark.parametrize("chain", ["vc", "dom", "ladim-gadget", "ladim-corona"])
    @pytest.mark.parametrize("f", small_formulas(), ids=lambda f: f.to_dimacs().split("\n")[1])
    def test_small_formulas(self, chain, f):
        r = check_3sat_chain(f, chain)
        assert r["satisfiable"] and r["equivalent"] and r["value"] == r["budget"]

    @pytest.mark.parametrize("chain", ["locdom", "adjdim"])
    def test_locating_chains_overshoot(self, chain):
        # The triangle-built graph has no 1-locating dominating set within budget
        # even for satisfiable formulas; see the README's note on this chain.
        r = check_3sat_chain(F32, chain)
        assert r["satisfiable"] and r["value"] == 9 > r["budget"] == 7

    def test_corpus_size(self):
        assert len(corpus()) >= 30
