"""Shared fixtures and independent oracle helpers.

The oracles here deliberately re-derive results through different
algorithms than the package uses: full product enumeration instead of
pruned search, direct dictionary evaluation instead of bit masks, and
block arithmetic instead of bit tests.  Tests lean on them to cross
check derived values.
"""

from __future__ import annotations

import itertools
import random

from rectatg import (
    Clause,
    ClauseSet,
    Constant,
    Function,
    Literal,
    Pred,
    Prop,
    Variable,
    complementary,
    collect_atoms,
    parse_literal,
    validate_generation_set,
)


def lit(name: str, negated: bool = False) -> Literal:
    return Literal(Prop(name), negated)


def clause(*texts: str) -> Clause:
    return Clause(parse_literal(t) for t in texts)


def clause_set(*clauses_: Clause) -> ClauseSet:
    return ClauseSet(clauses_)


def sc_oracle_naive(clauses) -> bool:
    """Standard-contradiction check by enumerating every selection tuple."""
    rows = [c.literals for c in clauses]
    if any(len(r) == 0 for r in rows):
        return True
    for combo in itertools.product(*rows):
        if not any(
            complementary(a, b) for a, b in itertools.combinations(combo, 2)
        ):
            return False
    return True


def sat_oracle_direct(clauses):
    """Truth-table search with plain dict evaluation.

    Returns a satisfying assignment dict, or None.  Assignments are
    tried with the first-appearing atom toggling slowest, which differs
    from the package's sweep order on purpose; only the verdict is
    compared against it.
    """
    atoms = collect_atoms(clauses)
    for bits in itertools.product((False, True), repeat=len(atoms)):
        env = dict(zip(atoms, bits))
        ok = True
        for c in clauses:
            if not any(env[l.atom] != l.negated for l in c.literals):
                ok = False
                break
        if ok:
            return env
    return None


def evaluates_true(env, clauses) -> bool:
    """Independent re-check that env satisfies every clause."""
    return all(
        any(env[l.atom] != l.negated for l in c.literals) for c in clauses
    )


def polarity_oracle_positive(row: int, column: int) -> bool:
    """Block formulation: row i alternates blocks of width 2**(i-1),
    positive block first."""
    return (column // (1 << (row - 1))) % 2 == 0


def random_term(rng: random.Random, depth: int = 0):
    roll = rng.random()
    if depth >= 2 or roll < 0.45:
        return Constant(rng.choice("abc"))
    if roll < 0.65:
        return Variable(rng.choice(("X", "Y")))
    arity = rng.randint(1, 2)
    return Function(
        rng.choice("fgh"), tuple(random_term(rng, depth + 1) for _ in range(arity))
    )


def random_generation_set(rng: random.Random, max_n: int = 10, first_order: bool = True):
    n = rng.randint(1, max_n)
    literals = []
    for i in range(1, n + 1):
        negated = rng.random() < 0.5
        if first_order and rng.random() < 0.5:
            arity = rng.randint(1, 2)
            atom = Pred(f"P{i}", tuple(random_term(rng) for _ in range(arity)))
        else:
            atom = Prop(f"q{i}")
        literals.append(Literal(atom, negated))
    return validate_generation_set(literals)


def random_clause_set(rng: random.Random, max_atoms: int = 4, max_clauses: int = 5):
    atoms = [Prop(name) for name in ("p", "q", "r", "s")[:max_atoms]]
    clauses = []
    for _ in range(rng.randint(0, max_clauses)):
        width = rng.randint(1, 3)
        clauses.append(
            Clause(
                Literal(rng.choice(atoms), rng.random() < 0.5) for _ in range(width)
            )
        )
    return ClauseSet(clauses)
