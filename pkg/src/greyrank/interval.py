"""Closed interval numbers [lo, hi] and their arithmetic.

An uncertain quantity known only up to a closed interval is stored as a
pair of float bounds.  The distance between two intervals is the plain
Euclidean distance between their (lo, hi) pairs, so all metric axioms
come for free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError


@dataclass(frozen=True, slots=True)
class GreyInterval:
    """Closed interval [lo, hi] with lo <= hi.

    Bounds are never silently swapped: reversed bounds indicate corrupted
    input data and raise ValidationError.
    """

    lo: float
    hi: float

    def __post_init__(self):
        object.__setattr__(self, "lo", float(self.lo))
        object.__setattr__(self, "hi", float(self.hi))
        if math.isnan(self.lo) or math.isnan(self.hi):
            raise ValidationError(f"interval bounds must not be NaN: [{self.lo}, {self.hi}]")
        if self.lo > self.hi:
            raise ValidationError(
                f"interval lower bound {self.lo} exceeds upper bound {self.hi}"
            )

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    @property
    def nonnegative(self) -> bool:
        return self.lo >= 0.0

    def add(self, other: "GreyInterval") -> "GreyInterval":
        """Componentwise sum [lo+lo, hi+hi]."""
        return GreyInterval(self.lo + other.lo, self.hi + other.hi)

    def scale(self, c: float) -> "GreyInterval":
        """Multiply both bounds by a scalar c >= 0.

        Negative c is rejected because it would flip the bound order.
        """
        if c < 0:
            raise ValidationError(f"scale factor must be non-negative, got {c}")
        return GreyInterval(c * self.lo, c * self.hi)

    def mul(self, other: "GreyInterval") -> "GreyInterval":
        """Componentwise product, exact for non-negative intervals.

        General signed interval multiplication is out of scope; negative
        bounds are rejected.
        """
        if self.lo < 0 or other.lo < 0:
            raise ValidationError(
                f"interval product requires non-negative intervals, "
                f"got {self} and {other}"
            )
        return GreyInterval(self.lo * other.lo, self.hi * other.hi)

    def __add__(self, other: "GreyInterval") -> "GreyInterval":
        return self.add(other)

    def __mul__(self, other: "GreyInterval") -> "GreyInterval":
        return self.mul(other)

    def as_pair(self) -> list[float]:
        """Serialized form: a 2-element [lo, hi] array."""
        return [self.lo, self.hi]

    @classmethod
    def from_pair(cls, pair) -> "GreyInterval":
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ValidationError(f"expected a [lo, hi] pair, got {pair!r}")
        return cls(float(pair[0]), float(pair[1]))

    def __repr__(self) -> str:
        return f"[{self.lo:g}, {self.hi:g}]"


def distance(a: GreyInterval, b: GreyInterval) -> float:
    """2-D Euclidean distance sqrt((b.hi - a.hi)^2 + (b.lo - a.lo)^2)."""
    return math.hypot(b.hi - a.hi, b.lo - a.lo)


def interval_grid(pairs) -> list[list[GreyInterval]]:
    """Build an interval matrix from nested [lo, hi] pairs."""
    return [[GreyInterval.from_pair(cell) for cell in row] for row in pairs]


def grid_as_pairs(grid: list[list[GreyInterval]]) -> list[list[list[float]]]:
    return [[cell.as_pair() for cell in row] for row in grid]
