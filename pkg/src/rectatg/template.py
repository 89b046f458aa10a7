"""Polarity templates: the sign pattern behind every rectangle.

A level-n template is an n by 2**n grid of markers.  Row i alternates
blocks of width 2**(i-1), positive block first, so the columns run
through all 2**n sign patterns exactly once, in binary-counter order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import IndexOutOfRangeError, InvalidLevelError, SizeCapError

# Past level 24 the grid would exceed 4e8 cells; callers can lower (or,
# at their own risk, raise) the cap per call.
DEFAULT_MAX_LEVEL = 24


class Marker(Enum):
    POSITIVE = "!"
    NEGATIVE = "?"

    @property
    def char(self) -> str:
        return self.value


@dataclass(frozen=True)
class PolarityTemplate:
    level: int
    rows: tuple[tuple[Marker, ...], ...]

    @property
    def width(self) -> int:
        return 1 << self.level


def _check_level(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidLevelError(f"level must be a positive integer, got {n!r}")


def make_template(n: int, max_level: int = DEFAULT_MAX_LEVEL) -> PolarityTemplate:
    """Build the level-n template by repeated doubling.

    Start from the single row (!, ?).  To go from level k-1 to level k,
    lay two copies of every row side by side and append a fresh row of
    2**(k-1) positives followed by 2**(k-1) negatives.
    """
    _check_level(n)
    if n > max_level:
        raise SizeCapError(n, max_level)
    rows: list[list[Marker]] = [[Marker.POSITIVE, Marker.NEGATIVE]]
    for k in range(2, n + 1):
        rows = [row + row for row in rows]
        half = 1 << (k - 1)
        rows.append([Marker.POSITIVE] * half + [Marker.NEGATIVE] * half)
    return PolarityTemplate(n, tuple(tuple(row) for row in rows))


def polarity_at(row: int, column: int, level: int) -> Marker:
    """Marker at (row, column) of the level-n template, without building it.

    Rows are 1-based, columns 0-based.  The marker is positive exactly
    when bit (row - 1) of the column index is clear, which is the closed
    form of the block pattern make_template produces.  There is no upper
    bound on the level here.
    """
    _check_level(level)
    if not 1 <= row <= level:
        raise IndexOutOfRangeError(f"row {row} not in 1..{level}")
    if not 0 <= column < (1 << level):
        raise IndexOutOfRangeError(f"column {column} not in 0..{(1 << level) - 1}")
    return Marker.NEGATIVE if (column >> (row - 1)) & 1 else Marker.POSITIVE


def render_template(template: PolarityTemplate) -> str:
    """Dump format: one line per row, markers separated by single spaces."""
    return "\n".join(" ".join(m.char for m in row) for row in template.rows)
