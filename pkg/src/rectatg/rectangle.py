"""Rectangles: maximal contradictions over a generation literal set.

For n generation literals the rectangle is the n by 2**n literal grid
whose columns, read top to bottom, are the 2**n clauses choosing each
generator or its complement in every combination, in binary-counter
column order.  Two independent constructions are kept on purpose: the
level-by-level doubling route and the template-fill route.  They must
agree cell for cell, and the test suite holds them to that.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import IndexOutOfRangeError, SizeCapError
from .logic import Clause, ClauseSet, Literal, negate_literal
from .parser import GenerationSet
from .template import DEFAULT_MAX_LEVEL, Marker, make_template


class Rectangle:
    """Immutable literal grid plus its clause view.

    The grid (``rows``) and the clause view (``clauses``) are two
    projections of the same store: clause j is column j read top to
    bottom.  Cells reuse one literal object per row and polarity.
    """

    __slots__ = ("generators", "rows", "_clauses")

    def __init__(self, generators: GenerationSet, rows: Sequence[Sequence[Literal]]):
        self.generators = generators
        self.rows: tuple[tuple[Literal, ...], ...] = tuple(tuple(r) for r in rows)
        self._clauses: tuple[Clause, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return len(self.rows[0])

    @property
    def clauses(self) -> tuple[Clause, ...]:
        if self._clauses is None:
            self._clauses = tuple(Clause(col) for col in zip(*self.rows))
        return self._clauses

    def column(self, j: int) -> tuple[Literal, ...]:
        if not 0 <= j < self.width:
            raise IndexOutOfRangeError(f"column {j} not in 0..{self.width - 1}")
        return tuple(row[j] for row in self.rows)

    def clause_set(self) -> ClauseSet:
        return ClauseSet(self.clauses)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Rectangle):
            return NotImplemented
        return self.generators == other.generators and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.generators, self.rows))

    def __repr__(self) -> str:
        return f"Rectangle(n={self.n}, width={self.width})"


def construct_naive(
    generators: GenerationSet, max_level: int = DEFAULT_MAX_LEVEL
) -> Rectangle:
    """Build the rectangle level by level.

    Level 1 is the single row (l1, ~l1).  Each further level lays two
    copies of the previous grid side by side and appends a new bottom
    row: 2**(i-1) copies of the next generator, then as many of its
    complement.
    """
    n = generators.n
    if n > max_level:
        raise SizeCapError(n, max_level)
    lits = list(generators)
    rows: list[list[Literal]] = [[lits[0], negate_literal(lits[0])]]
    for i in range(1, n):
        rows = [row + row for row in rows]
        half = 1 << i
        rows.append([lits[i]] * half + [negate_literal(lits[i])] * half)
    return Rectangle(generators, rows)


def construct_from_template(
    generators: GenerationSet, max_level: int = DEFAULT_MAX_LEVEL
) -> Rectangle:
    """Build the rectangle by filling the level-n polarity template.

    Cell (i, j) is generator i where the template marker is positive and
    its complement where the marker is "?".
    """
    n = generators.n
    if n > max_level:
        raise SizeCapError(n, max_level)
    tpl = make_template(n, max_level)
    rows = []
    for lit, marker_row in zip(generators, tpl.rows):
        neg = negate_literal(lit)
        rows.append([lit if m is Marker.POSITIVE else neg for m in marker_row])
    return Rectangle(generators, rows)


def remove_clauses(rect: Rectangle, indices: Iterable[int]) -> ClauseSet:
    """Clause set left after deleting the given columns (duplicates ignored).

    Remaining clauses keep their original order.  Removing every column
    yields the empty clause set.
    """
    drop = set(indices)
    width = rect.width
    for j in drop:
        if not 0 <= j < width:
            raise IndexOutOfRangeError(f"column {j} not in 0..{width - 1}")
    return ClauseSet(c for j, c in enumerate(rect.clauses) if j not in drop)
