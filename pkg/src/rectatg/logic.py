"""Core syntax: terms, atoms, literals, clauses, clause sets.

All values are immutable and compare structurally.  Negation is a
polarity flag on the literal, so negating twice is the identity by
construction and double negation cannot be represented.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import EmptyClauseError

_SYMBOL_RE = re.compile(r"[A-Za-z0-9_]+\Z")


def _check_symbol(name: str, allow_eq: bool = False) -> None:
    if allow_eq and name == "=":
        return
    if not _SYMBOL_RE.match(name):
        raise ValueError(f"bad symbol name: {name!r}")


@dataclass(frozen=True)
class Constant:
    name: str

    def __post_init__(self):
        _check_symbol(self.name)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Variable:
    name: str

    def __post_init__(self):
        _check_symbol(self.name)

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Function:
    name: str
    args: "tuple[Term, ...]"

    def __post_init__(self):
        _check_symbol(self.name)
        object.__setattr__(self, "args", tuple(self.args))
        if not self.args:
            raise ValueError("a function term needs at least one argument")

    def __str__(self) -> str:
        return f"{self.name}({', '.join(str(a) for a in self.args)})"


Term = Union[Constant, Variable, Function]


@dataclass(frozen=True)
class Prop:
    """Propositional variable."""

    name: str

    def __post_init__(self):
        _check_symbol(self.name)

    @property
    def symbol(self) -> str:
        return self.name

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Pred:
    """Predicate applied to terms.  "=" is an ordinary binary predicate here."""

    predicate: str
    args: "tuple[Term, ...]" = ()

    def __post_init__(self):
        _check_symbol(self.predicate, allow_eq=True)
        object.__setattr__(self, "args", tuple(self.args))
        if self.predicate == "=" and len(self.args) != 2:
            raise ValueError("'=' takes exactly two arguments")

    @property
    def symbol(self) -> str:
        return self.predicate

    def __str__(self) -> str:
        if self.predicate == "=":
            return f"{self.args[0]}={self.args[1]}"
        if not self.args:
            return f"{self.predicate}()"
        return f"{self.predicate}({', '.join(str(a) for a in self.args)})"


Atom = Union[Prop, Pred]


@dataclass(frozen=True)
class Literal:
    atom: Atom
    negated: bool = False

    def __str__(self) -> str:
        return f"¬{self.atom}" if self.negated else str(self.atom)


def negate_literal(lit: Literal) -> Literal:
    """Complement of a literal.  Applying it twice gives the original back."""
    return Literal(lit.atom, not lit.negated)


def complementary(a: Literal, b: Literal) -> bool:
    """True when the two literals clash: same atom, opposite polarity."""
    return a.atom == b.atom and a.negated != b.negated


class Clause:
    """Disjunction of literals.

    Literal order is kept (it mirrors the row order of the rectangle a
    clause came from) but equality and hashing treat the literals as a
    multiset, so reordered clauses compare equal.
    """

    __slots__ = ("literals", "_key")

    def __init__(self, literals: Iterable[Literal] = ()):
        self.literals: tuple[Literal, ...] = tuple(literals)
        self._key = None

    def _multiset_key(self):
        if self._key is None:
            self._key = frozenset(Counter(self.literals).items())
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, Clause):
            return NotImplemented
        return self._multiset_key() == other._multiset_key()

    def __hash__(self) -> int:
        return hash(self._multiset_key())

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.literals)

    def __len__(self) -> int:
        return len(self.literals)

    def __str__(self) -> str:
        if not self.literals:
            return "□"
        return " ∨ ".join(str(l) for l in self.literals)

    def __repr__(self) -> str:
        return f"Clause({str(self)})"


EMPTY_CLAUSE = Clause()


def negate_clause(clause: Clause) -> tuple[Literal, ...]:
    """Literal-wise complements of a clause, in clause order.

    The conjunction of the returned literals is the negation of the
    clause.  The empty clause has no negation in clause form.
    """
    if not clause.literals:
        raise EmptyClauseError("the empty clause cannot be negated literal-wise")
    return tuple(negate_literal(l) for l in clause.literals)


class ClauseSet:
    """Ordered collection of clauses.

    An empty ClauseSet (no clauses, satisfiable) is a different value
    from a ClauseSet holding just the empty clause (unsatisfiable).
    """

    __slots__ = ("clauses",)

    def __init__(self, clauses: Iterable[Clause] = ()):
        self.clauses: tuple[Clause, ...] = tuple(clauses)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClauseSet):
            return NotImplemented
        return self.clauses == other.clauses

    def __hash__(self) -> int:
        return hash(self.clauses)

    def __iter__(self) -> Iterator[Clause]:
        return iter(self.clauses)

    def __len__(self) -> int:
        return len(self.clauses)

    def __getitem__(self, i):
        return self.clauses[i]

    def __repr__(self) -> str:
        return f"ClauseSet([{', '.join(str(c) for c in self.clauses)}])"


def collect_atoms(clauses: Iterable[Clause]) -> tuple[Atom, ...]:
    """Distinct atoms in first-appearance order (clause order, then literal order)."""
    seen: dict[Atom, None] = {}
    for clause in clauses:
        for lit in clause:
            if lit.atom not in seen:
                seen[lit.atom] = None
    return tuple(seen)
