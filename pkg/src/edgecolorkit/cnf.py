"""CNF formulas, DIMACS parsing, and the off-by-one model count transform.

The transform appends a fresh variable y and produces, from Phi over
variables 1..n, the formula Phi' with clauses {y OR x_j : j <= n} and
{NOT y OR C : C in Phi}. With y true every original clause must hold and
the x_j are otherwise free, contributing count_sat(Phi) models. With y
false the original clauses are disabled but every x_j is forced true,
contributing exactly one model, whether or not it satisfies Phi. Hence

    count_sat(Phi') = count_sat(Phi) + 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError, PreconditionError

BRUTE_FORCE_VARIABLE_CAP = 24


@dataclass(frozen=True)
class CnfFormula:
    """Clauses over variables 1..variable_count; literal v or -v. The empty
    clause is permitted (and unsatisfiable)."""

    variable_count: int
    clauses: tuple[tuple[int, ...], ...]

    def __init__(self, variable_count, clauses):
        if variable_count < 0:
            raise ValueError("variable count must be nonnegative")
        normalized = tuple(tuple(c) for c in clauses)
        for ci, clause in enumerate(normalized):
            for lit in clause:
                if lit == 0 or abs(lit) > variable_count:
                    raise ValueError(
                        "clause %d: literal %d out of range for %d variables"
                        % (ci, lit, variable_count)
                    )
        object.__setattr__(self, "variable_count", variable_count)
        object.__setattr__(self, "clauses", normalized)

    @property
    def clause_count(self) -> int:
        return len(self.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    """Parse the DIMACS subset: 'c' comment lines, one 'p cnf V C' header,
    then whitespace-separated literals with each clause terminated by 0."""
    header: tuple[int, int] | None = None
    tokens: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if header is not None:
                raise ParseError("line %d: duplicate header" % lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("line %d: malformed header %r" % (lineno, line))
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError("line %d: malformed header %r" % (lineno, line))
            if header[0] < 0 or header[1] < 0:
                raise ParseError("line %d: negative header counts" % lineno)
            continue
        if header is None:
            raise ParseError("line %d: clause data before header" % lineno)
        for tok in line.split():
            try:
                tokens.append(int(tok))
            except ValueError:
                raise ParseError("line %d: bad token %r" % (lineno, tok))
    if header is None:
        raise ParseError("missing 'p cnf' header")
    variable_count, clause_count = header
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for tok in tokens:
        if tok == 0:
            clauses.append(tuple(current))
            current = []
        else:
            current.append(tok)
    if current:
        raise ParseError("last clause is not terminated by 0")
    if len(clauses) != clause_count:
        raise ParseError(
            "header declares %d clauses, found %d" % (clause_count, len(clauses))
        )
    try:
        return CnfFormula(variable_count, clauses)
    except ValueError as exc:
        raise ParseError(str(exc))


def render_dimacs(phi: CnfFormula) -> str:
    lines = ["p cnf %d %d" % (phi.variable_count, phi.clause_count)]
    for clause in phi.clauses:
        lines.append(" ".join(str(lit) for lit in clause + (0,)))
    return "\n".join(lines) + "\n"


def transform_phi_prime(phi: CnfFormula) -> CnfFormula:
    """Phi' over n+1 variables: count_sat(Phi') = count_sat(Phi) + 1."""
    y = phi.variable_count + 1
    clauses = [(-y,) + clause for clause in phi.clauses]
    clauses.extend((y, j) for j in range(1, phi.variable_count + 1))
    return CnfFormula(y, clauses)


def count_sat(phi: CnfFormula, cap: int = BRUTE_FORCE_VARIABLE_CAP) -> int:
    """Exact model count by exhaustive enumeration, refused above the cap."""
    n = phi.variable_count
    if n > cap:
        raise PreconditionError(
            "%d variables exceeds the brute-force cap of %d" % (n, cap)
        )
    pos_masks = []
    neg_masks = []
    for clause in phi.clauses:
        pos = 0
        neg = 0
        for lit in clause:
            if lit > 0:
                pos |= 1 << (lit - 1)
            else:
                neg |= 1 << (-lit - 1)
        pos_masks.append(pos)
        neg_masks.append(neg)
    full = (1 << n) - 1
    count = 0
    for assignment in range(1 << n):
        flipped = assignment ^ full
        if all(
            assignment & pos or flipped & neg
            for pos, neg in zip(pos_masks, neg_masks)
        ):
            count += 1
    return count
