"""Exact minimum set cover over bitmask-encoded elements.

Every parameter in this package is a minimum vertex set S such that each
"element" (a vertex pair to separate, a vertex to dominate, an edge to cover)
has at least one coverer in S. Elements are described by the mask of vertices
that cover them; the search below is branch and bound over those masks.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .graph import iter_bits


class BudgetExceeded(RuntimeError):
    """The search visited more nodes than the configured cap."""

    def __init__(self, limit: int):
        super().__init__(f"search budget of {limit} nodes exceeded")
        self.limit = limit


def _reduce_elements(coverers: Sequence[int]) -> list:
    # An element whose coverer set contains another element's is implied by it.
    kept: list = []
    for c in sorted(set(coverers), key=lambda c: (c.bit_count(), c)):
        if not any(k & ~c == 0 for k in kept):
            kept.append(c)
    return kept


class CoverProblem:
    """Minimum covers of a fixed element family by vertices ``0..n-1``.

    ``coverers[e]`` is the bitmask of vertices covering element ``e``. Vertex
    sets are passed and returned as bitmasks.
    """

    def __init__(self, n: int, coverers: Sequence[int], max_nodes: Optional[int] = None):
        self.n = n
        self.max_nodes = max_nodes
        self.nodes = 0
        self.elem_cov = _reduce_elements(coverers)
        self.infeasible = any(c == 0 for c in self.elem_cov)
        self.full = (1 << len(self.elem_cov)) - 1
        covers = [0] * n
        for e, c in enumerate(self.elem_cov):
            for v in iter_bits(c):
                covers[v] |= 1 << e
        self.covers = covers
        self.all_vertices = (1 << n) - 1

    def _tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceeded(self.max_nodes)

    def covered_by(self, mask: int) -> int:
        out = 0
        for v in iter_bits(mask):
            out |= self.covers[v]
        return out

    def is_cover(self, mask: int) -> bool:
        return self.covered_by(mask) == self.full

    def _scan(self, uncovered: int, allowed: int, with_groups: bool):
        """Packing lower bound, the most constrained element and (optionally) components."""
        lb = 0
        used = 0
        best = None
        best_count = self.n + 1
        groups = [] if with_groups else None
        elem_cov = self.elem_cov
        u = uncovered
        while u:
            low = u & -u
            u ^= low
            c = elem_cov[low.bit_length() - 1] & allowed
            if not c:
                return None, None, None
            count = c.bit_count()
            if count < best_count:
                best, best_count = c, count
            packed = not (c & used)
            if packed:
                lb += 1
                used |= c
            if groups is not None:
                merged_v, merged_e, merged_lb = c, low, int(packed)
                rest = []
                for g in groups:
                    if g[0] & c:
                        merged_v |= g[0]
                        merged_e |= g[1]
                        merged_lb += g[2]
                    else:
                        rest.append(g)
                rest.append((merged_v, merged_e, merged_lb))
                groups = rest
        return lb, best, groups

    def _solve(self, uncovered: int, allowed: int, ub: int):
        """Smallest cover of ``uncovered`` from ``allowed`` with size <= ub, as (size, mask)."""
        if not uncovered:
            return 0, 0
        if ub <= 0:
            return None
        self._tick()
        lb, best, groups = self._scan(uncovered, allowed, with_groups=True)
        if lb is None or lb > ub:
            return None
        if len(groups) > 1:
            groups.sort(key=lambda g: g[1].bit_count())
            remaining_lb = sum(g[2] for g in groups)
            total, chosen = 0, 0
            for vmask, emask, glb in groups:
                remaining_lb -= glb
                sub = self._solve(emask, vmask, ub - total - remaining_lb)
                if sub is None:
                    return None
                total += sub[0]
                chosen |= sub[1]
            return total, chosen
        result = None
        rest = allowed
        covers = self.covers
        for v in iter_bits(best):
            bit = 1 << v
            rest &= ~bit
            sub = self._solve(uncovered & ~covers[v], rest, ub - 1)
            if sub is not None:
                result = (sub[0] + 1, sub[1] | bit)
                ub = result[0] - 1
                if ub < lb:
                    break
        return result

    def _greedy(self, uncovered: int, allowed: int) -> Optional[int]:
        chosen = 0
        while uncovered:
            gain, pick = 0, -1
            for v in iter_bits(allowed & ~chosen):
                g = (self.covers[v] & uncovered).bit_count()
                if g > gain:
                    gain, pick = g, v
            if pick < 0:
                return None
            chosen |= 1 << pick
            uncovered &= ~self.covers[pick]
        return chosen

    def minimum(self, forced: int = 0) -> Optional[int]:
        """Minimum cover size among covers containing ``forced``; None if none exists."""
        if self.infeasible:
            return None
        uncovered = self.full & ~self.covered_by(forced)
        allowed = self.all_vertices & ~forced
        seed = self._greedy(uncovered, allowed)
        if seed is None:
            return None
        best = self._solve(uncovered, allowed, seed.bit_count())
        return forced.bit_count() + best[0]

    def feasible(self, size: int, forced: int = 0) -> bool:
        if self.infeasible:
            return False
        uncovered = self.full & ~self.covered_by(forced)
        return self._solve(uncovered, self.all_vertices & ~forced, size - forced.bit_count()) is not None

    def lex_least(self, size: int, forced: int = 0) -> int:
        """Lexicographically least cover of exactly ``size`` vertices containing ``forced``.

        ``size`` must be the minimum; the scan decides each vertex in increasing
        order, keeping it whenever the remainder is still coverable in budget.
        """
        chosen = forced
        uncovered = self.full & ~self.covered_by(forced)
        budget = size - forced.bit_count()
        for v in range(self.n):
            if not uncovered:
                break
            if (forced >> v) & 1 or not self.covers[v] & uncovered:
                continue
            after = uncovered & ~self.covers[v]
            later = self.all_vertices & ~((2 << v) - 1) & ~forced
            if self._solve(after, later, budget - 1) is not None:
                chosen |= 1 << v
                uncovered = after
                budget -= 1
        if uncovered:
            raise ValueError(f"no cover of size {size} exists")
        return chosen

    def all_minimum(self, size: int) -> list:
        """Every cover of exactly ``size`` vertices, assuming ``size`` is the minimum."""
        out: list = []
        if not self.infeasible:
            self._enumerate(self.full, self.all_vertices, size, 0, out)
        return sorted(out, key=lambda m: list(iter_bits(m)))

    def _enumerate(self, uncovered: int, allowed: int, budget: int, chosen: int, out: list) -> None:
        if not uncovered:
            out.append(chosen)
            return
        if budget <= 0:
            return
        self._tick()
        lb, best, _ = self._scan(uncovered, allowed, with_groups=False)
        if lb is None or lb > budget:
            return
        rest = allowed
        for v in iter_bits(best):
            bit = 1 << v
            rest &= ~bit
            self._enumerate(uncovered & ~self.covers[v], rest, budget - 1, chosen | bit, out)
