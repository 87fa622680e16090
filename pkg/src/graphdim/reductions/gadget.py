"""The 9-vertex clause gadget used by the 3-SAT to local adjacency dimension reduction.

Vertices 0, 1, 2 are the outer vertices numbered 1, 2, 3 (vertex ``i`` is
wired to the literal of the ``i``-th variable of the clause); 3..8 are inner.
The edge set below was selected by :func:`search_gadgets` and is re-certified
by the test suite with :func:`certify_gadget`.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

OUTER = (0, 1, 2)
INNER = (3, 4, 5, 6, 7, 8)
ORDER = 9
SIZE = 15

# Outer triangle, one spoke per outer vertex, a middle ring joined to an inner triangle.
GADGET_EDGES = (
    (0, 1), (0, 2), (1, 2),
    (0, 3), (1, 4), (2, 5),
    (3, 6), (3, 7), (4, 7), (4, 8), (5, 6), (5, 8),
    (6, 7), (6, 8), (7, 8),
)


def _rotate(v: int) -> int:
    base = (v // 3) * 3
    return base + (v - base + 1) % 3


def _edge_orbits() -> list:
    seen = set()
    orbits = []
    for u, v in combinations(range(ORDER), 2):
        if (u, v) in seen:
            continue
        orbit = []
        a, b = u, v
        for _ in range(3):
            e = (min(a, b), max(a, b))
            if e not in orbit:
                orbit.append(e)
            a, b = _rotate(a), _rotate(b)
        seen.update(orbit)
        orbits.append(tuple(sorted(orbit)))
    return orbits


def _rows(edges, extra: int = 0) -> list:
    rows = [0] * (ORDER + extra)
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


def _with_stubs(edges) -> list:
    """Adjacency rows of gadget plus pendant literal stubs 9, 10, 11 on the outer vertices."""
    return _rows(list(edges) + [(i, ORDER + i) for i in OUTER], extra=3)


def _covers_all(rows, edges, chosen: int) -> bool:
    for x, y in edges:
        if (chosen >> x) & 1 or (chosen >> y) & 1:
            continue
        sep = (rows[x] ^ rows[y]) & chosen
        if not sep:
            return False
    return True


def certify_gadget(edges=GADGET_EDGES) -> dict:
    """Exhaustively check the properties the reduction's correctness rests on.

    ``inner_lower_bound``: for every set of stubs in the generator, any gadget
    subset separating all gadget edges holds at least two inner vertices.
    ``two_suffice``: for each of the 7 non-empty stub sets, two inner vertices suffice.
    ``two_insufficient_without_literal``: with no stub, no two gadget vertices suffice.
    ``min_basis_uses_two``: every minimum local adjacency basis of gadget plus
    stubs holds at least two gadget vertices.
    """
    edges = tuple(edges)
    rows = _with_stubs(edges)
    inner_mask = sum(1 << v for v in INNER)
    gadget_subsets = range(1 << ORDER)
    patterns = [sum(1 << (ORDER + i) for i in pick) for r in range(4) for pick in combinations(OUTER, r)]

    inner_lb = True
    for stubs in patterns:
        for g in gadget_subsets:
            if (g & inner_mask).bit_count() < 2 and _covers_all(rows, edges, g | stubs):
                inner_lb = False
                break
        if not inner_lb:
            break

    two_suffice = {}
    for stubs in patterns[1:]:
        two_suffice[stubs >> ORDER] = any(
            _covers_all(rows, edges, (1 << a) | (1 << b) | stubs) for a, b in combinations(INNER, 2)
        )

    insufficient = not any(
        _covers_all(rows, edges, sum(1 << v for v in pick))
        for r in range(3)
        for pick in combinations(range(ORDER), r)
    )

    all_edges = edges + tuple((i, ORDER + i) for i in OUTER)
    best = None
    bases = []
    for r in range(ORDER + 4):
        for pick in combinations(range(ORDER + 3), r):
            if _covers_all(rows, all_edges, sum(1 << v for v in pick)):
                bases.append(pick)
        if bases:
            best = r
            break
    min_uses_two = all(sum(1 for v in b if v < ORDER) >= 2 for b in bases)

    return {
        "order": ORDER,
        "size": len(edges),
        "inner_lower_bound": inner_lb,
        "two_suffice": two_suffice,
        "two_insufficient_without_literal": insufficient,
        "min_basis_size": best,
        "min_basis_uses_two": min_uses_two,
        "passed": inner_lb and all(two_suffice.values()) and insufficient and min_uses_two,
    }


def _connected(edges) -> bool:
    rows = _rows(edges)
    seen = frontier = 1
    while frontier:
        nxt = 0
        v = frontier
        while v:
            low = v & -v
            nxt |= rows[low.bit_length() - 1]
            v ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << ORDER) - 1


def search_gadgets() -> Iterator[tuple]:
    """Connected 3-fold symmetric gadgets with 15 edges passing :func:`certify_gadget`.

    Candidates are unions of five edge orbits under the rotation, in
    lexicographic order of orbit index.
    """
    orbits = _edge_orbits()
    for pick in combinations(range(len(orbits)), SIZE // 3):
        edges = tuple(sorted(e for i in pick for e in orbits[i]))
        if not _connected(edges):
            continue
        if certify_gadget(edges)["passed"]:
            yield edges
