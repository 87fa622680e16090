"""3-CNF formulas, DIMACS input and the brute-force satisfiability oracle."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional


class FormulaError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    """Formula over variables ``1..n_vars``; literals are signed DIMACS integers.

    Construction enforces the clause shape (three literals over distinct
    variables). The polarity condition the reductions rely on is checked
    separately by :meth:`require_both_polarities`.
    """

    n_vars: int
    clauses: tuple

    def __post_init__(self):
        clauses = tuple(tuple(int(l) for l in c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        if self.n_vars < 1:
            raise FormulaError("a formula needs at least one variable")
        for j, clause in enumerate(clauses):
            if len(clause) != 3:
                raise FormulaError(f"clause {j + 1} has {len(clause)} literals, expected 3")
            for lit in clause:
                if lit == 0 or abs(lit) > self.n_vars:
                    raise FormulaError(f"clause {j + 1}: literal {lit} outside 1..{self.n_vars}")
            if len({abs(l) for l in clause}) != 3:
                raise FormulaError(f"clause {j + 1} repeats a variable: {clause}")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def polarity_problems(self) -> list:
        pos = {abs(l) for c in self.clauses for l in c if l > 0}
        neg = {abs(l) for c in self.clauses for l in c if l < 0}
        problems = []
        for x in range(1, self.n_vars + 1):
            if x not in pos:
                problems.append(f"variable {x} never occurs positively")
            if x not in neg:
                problems.append(f"variable {x} never occurs negatively")
        return problems

    def require_both_polarities(self) -> None:
        problems = self.polarity_problems()
        if problems:
            raise FormulaError("; ".join(problems))

    def evaluate(self, assignment) -> bool:
        """``assignment[x - 1]`` is the truth value of variable ``x``."""
        return all(any(assignment[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.n_vars} {self.m}"]
        lines.extend(" ".join(str(l) for l in c) + " 0" for c in self.clauses)
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    header = None
    literals = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise FormulaError(f"malformed problem line: {line!r}")
            header = (int(parts[2]), int(parts[3]))
            continue
        if header is None:
            raise FormulaError("clause data before the 'p cnf' line")
        try:
            literals.extend(int(tok) for tok in line.split())
        except ValueError:
            raise FormulaError(f"non-integer token in {line!r}") from None
    if header is None:
        raise FormulaError("missing 'p cnf n m' line")
    clauses, current = [], []
    for lit in literals:
        if lit == 0:
            clauses.append(tuple(current))
            current = []
        else:
            current.append(lit)
    if current:
        raise FormulaError("last clause is not terminated by 0")
    n, m = header
    if len(clauses) != m:
        raise FormulaError(f"header announces {m} clauses, found {len(clauses)}")
    return CnfFormula(n, tuple(clauses))


def read_dimacs(path) -> CnfFormula:
    with open(path) as fh:
        return parse_dimacs(fh.read())


DEFAULT_SAT_CAP = 16


def satisfying_assignment(formula: CnfFormula, cap: int = DEFAULT_SAT_CAP) -> Optional[tuple]:
    if formula.n_vars > cap:
        raise FormulaError(f"{formula.n_vars} variables exceed the brute-force cap of {cap}")
    for assignment in product((False, True), repeat=formula.n_vars):
        if formula.evaluate(assignment):
            return assignment
    return None


def sat_bruteforce(formula: CnfFormula, cap: int = DEFAULT_SAT_CAP) -> bool:
    return satisfying_assignment(formula, cap) is not None
