"""Theorem generation from rectangles.

Splitting the rectangle's clauses into premises A and hypothesis H turns
the contradiction into a valid entailment: A proves the negation of the
conjunction of H.  The canonical split removes column 0 (the generation
clause itself), which flattens to the conjunction of the complements of
the generation literals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyHypothesisError, IndexOutOfRangeError
from .logic import Clause, ClauseSet, Literal, negate_clause, negate_literal
from .parser import GenerationSet
from .rectangle import construct_from_template, remove_clauses
from .semantics import (
    DEFAULT_MAX_ATOMS,
    entails,
    implication_is_tautology,
)
from .template import DEFAULT_MAX_LEVEL


@dataclass(frozen=True)
class Provenance:
    """Everything needed to rebuild a theorem: generators and the removed columns."""

    generators: GenerationSet
    removed_indices: tuple[int, ...]


@dataclass(frozen=True)
class LiteralConjunction:
    """Conclusion shape for a one-clause hypothesis: a conjunction of literals.

    Negating a single clause distributes to the literal level, so the
    conclusion of the canonical theorem reads as the complements of the
    generation literals joined by conjunction.
    """

    literals: tuple[Literal, ...]

    def __str__(self) -> str:
        return " ∧ ".join(str(l) for l in self.literals)


@dataclass(frozen=True)
class NegatedConjunction:
    """Conclusion shape for a multi-clause hypothesis: the negated conjunction."""

    clauses: tuple[Clause, ...]

    def __str__(self) -> str:
        inner = " ∧ ".join(f"({c})" for c in self.clauses)
        return f"¬({inner})"


Conclusion = LiteralConjunction | NegatedConjunction


@dataclass(frozen=True)
class Theorem:
    premises: ClauseSet
    hypothesis_clauses: ClauseSet
    conclusion: Conclusion
    provenance: Provenance


def generate_theorem(
    generators: GenerationSet, max_level: int = DEFAULT_MAX_LEVEL
) -> Theorem:
    """Canonical theorem: remove column 0, conclude the complements of
    the generation literals."""
    return generate_theorem_with_partition(generators, (0,), max_level)


def generate_theorem_with_partition(
    generators: GenerationSet,
    hypothesis_indices: Iterable[int],
    max_level: int = DEFAULT_MAX_LEVEL,
) -> Theorem:
    """Split the rectangle at the given column indices.

    The selected columns become the hypothesis H (in ascending index
    order), everything else stays premise-side in construction order.
    The conclusion is the negation of the conjunction of H, flattened to
    a literal conjunction when H is a single clause.  Selecting every
    column is allowed and leaves no premises.
    """
    indices = sorted({int(j) for j in hypothesis_indices})
    if not indices:
        raise EmptyHypothesisError("the hypothesis side of a partition cannot be empty")
    width = 1 << generators.n
    for j in indices:
        if not 0 <= j < width:
            raise IndexOutOfRangeError(f"column {j} not in 0..{width - 1}")
    rect = construct_from_template(generators, max_level)
    hypothesis = tuple(rect.clauses[j] for j in indices)
    premises = remove_clauses(rect, indices)
    if len(hypothesis) == 1:
        conclusion: Conclusion = LiteralConjunction(negate_clause(hypothesis[0]))
    else:
        conclusion = NegatedConjunction(hypothesis)
    return Theorem(
        premises,
        ClauseSet(hypothesis),
        conclusion,
        Provenance(generators, tuple(indices)),
    )


def hypothesis_from_conclusion(conclusion: Conclusion) -> ClauseSet:
    """Clauses whose joint refutation the conclusion asserts.

    A literal conjunction asserts the negation of the single clause made
    of its complements; a negated conjunction asserts the negation of
    its clauses taken together.
    """
    if isinstance(conclusion, LiteralConjunction):
        return ClauseSet((Clause(negate_literal(l) for l in conclusion.literals),))
    return ClauseSet(conclusion.clauses)


def verify_theorem(theorem: Theorem, max_atoms: int = DEFAULT_MAX_ATOMS) -> bool:
    """Machine-check the entailment the theorem claims.

    The conclusion is taken at face value: whatever it asserts the
    negation of is conjoined with the premises and refuted by the
    truth-table oracle.  A tampered conclusion therefore fails unless it
    happens to be entailed as well.
    """
    return entails(
        theorem.premises, hypothesis_from_conclusion(theorem.conclusion), max_atoms
    )


def check_mutual_equivalence(
    generators: GenerationSet,
    partitions: Sequence[Iterable[int]],
    max_level: int = DEFAULT_MAX_LEVEL,
    max_atoms: int = DEFAULT_MAX_ATOMS,
) -> bool:
    """All theorems cut from one rectangle say the same thing.

    For each partition the implication (premise conjunction) -> negated
    hypothesis conjunction must be a tautology under the assignment
    sweep.  Since every such implication paraphrases the same underlying
    contradiction, confirming each one confirms pairwise equivalence.
    """
    for partition in partitions:
        theorem = generate_theorem_with_partition(generators, partition, max_level)
        if not implication_is_tautology(
            theorem.premises, theorem.hypothesis_clauses, max_atoms
        ):
            return False
    return True
