import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphdim import BudgetExceeded
from graphdim._cover import CoverProblem, _reduce_elements
from graphdim.graph import iter_bits


def brute(n, coverers):
    for size in range(n + 1):
        hits = []
        for s in combinations(range(n), size):
            mask = sum(1 << v for v in s)
            if all(c & mask for c in coverers):
                hits.append(mask)
        if hits:
            return size, hits
    return None, []


@st.composite
def instances(draw):
    n = draw(st.integers(1, 9))
    m = draw(st.integers(0, 14))
    coverers = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=m, max_size=m))
    return n, coverers


@settings(max_examples=300)
@given(instances())
def test_minimum_and_witness_match_brute_force(inst):
    n, coverers = inst
    size, hits = brute(n, coverers)
    p = CoverProblem(n, coverers)
    assert p.minimum() == size
    least = min(hits, key=lambda m: list(iter_bits(m)))
    assert p.lex_least(size) == least
    assert p.all_minimum(size) == sorted(hits, key=lambda m: list(iter_bits(m)))
    assert p.is_cover(least)
    assert p.feasible(size) and (size == 0 or not p.feasible(size - 1))


@settings(max_examples=150)
@given(instances(), st.data())
def test_forced_minimum(inst, data):
    n, coverers = inst
    forced = data.draw(st.integers(0, (1 << n) - 1))
    best = None
    for size in range(n + 1):
        for s in combinations(range(n), size):
            mask = sum(1 << v for v in s)
            if mask & forced == forced and all(c & mask for c in coverers):
                best = size
                break
        if best is not None:
            break
    assert CoverProblem(n, coverers).minimum(forced) == best


def test_infeasible_element():
    p = CoverProblem(3, [0b001, 0])
    assert p.minimum() is None and p.all_minimum(1) == [] and not p.feasible(3)


def test_no_elements():
    p = CoverProblem(4, [])
    assert p.minimum() == 0 and p.lex_least(0) == 0 and p.all_minimum(0) == [0]


def test_element_reduction_drops_supersets():
    assert _reduce_elements([0b111, 0b011, 0b011, 0b100]) == [0b100, 0b011]


def test_budget_exceeded():
    rng = random.Random(3)
    n = 30
    coverers = [rng.getrandbits(n) | 1 << rng.randrange(n) for _ in range(200)]
    with pytest.raises(BudgetExceeded) as info:
        CoverProblem(n, coverers, max_nodes=5).minimum()
    assert info.value.limit == 5


def test_decomposition_independent_blocks():
    # Ten disjoint triangles of elements: the minimum is the sum over blocks.
    coverers = []
    for b in range(10):
        base = 3 * b
        coverers += [(1 << base) | (1 << base + 1), (1 << base + 1) | (1 << base + 2), (1 << base) | (1 << base + 2)]
    p = CoverProblem(30, coverers, max_nodes=10_000)
    assert p.minimum() == 20
    assert p.lex_least(20) == sum(0b011 << 3 * b for b in range(10))
