"""Small 3-CNF formulas obeying the clause-shape and both-polarities rules."""

from __future__ import annotations

import random
from itertools import product

from graphdim.reductions.cnf import CnfFormula


def small_formulas() -> list:
    """Every formula with n <= 3, m <= 2 that satisfies the rules, up to clause order.

    With three distinct variables per clause, n must be 3. One clause cannot
    give every variable both signs, so m = 2 and the second clause must be the
    sign-flip of the first: eight formulas.
    """
    out = []
    for signs in product((1, -1), repeat=3):
        c1 = tuple(s * v for s, v in zip(signs, (1, 2, 3)))
        c2 = tuple(-lit for lit in c1)
        out.append(CnfFormula(3, (c1, c2)))
    return out


def _incidence_connected(f: CnfFormula) -> bool:
    seen = {1}
    changed = True
    while changed:
        changed = False
        for clause in f.clauses:
            vs = {abs(l) for l in clause}
            if vs & seen and not vs <= seen:
                seen |= vs
                changed = True
    return len(seen) == f.n_vars


def random_formulas(count: int, n: int = 4, m: int = 3, seed: int = 2024) -> list:
    rng = random.Random(seed)
    out, seen = [], set()
    while len(out) < count:
        clauses = tuple(
            tuple(v * rng.choice((1, -1)) for v in sorted(rng.sample(range(1, n + 1), 3))) for _ in range(m)
        )
        f = CnfFormula(n, clauses)
        key = tuple(sorted(clauses))
        if key in seen or f.polarity_problems() or not _incidence_connected(f):
            continue
        seen.add(key)
        out.append(f)
    return out


def corpus(n_random: int = 22) -> list:
    return small_formulas() + random_formulas(n_random)
