# Copyright 2026 strongb contributors
# Licensed under GNU GPLv3 or later
# See https://www.gnu.org/licenses/gpl-3.0.en.html
"""Closed intervals with exact rational endpoints."""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval [lo, hi]."""
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value: Fraction) -> "RationalInterval":
        """Degenerate interval [value, value]."""
        return cls(value, value)

    @classmethod
    def around(
        cls,
        center: Fraction,
        radius: Fraction,
        nonnegative: bool = False,
    ) -> "RationalInterval":
        """[center - radius, center + radius], clamped at 0 if asked."""
        if radius < 0:
            raise ValueError(f"negative radius: {radius}")
        lo = center - radius
        if nonnegative and lo < 0:
            lo = Fraction(0)
        return cls(lo, center + radius)

    @property
    def width(self) -> Fraction:
        """hi - lo."""
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        """(lo + hi) / 2."""
        return (self.lo + self.hi) / 2

    def __contains__(self, value: Fraction) -> bool:
        return self.lo <= value <= self.hi

    def __add__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo - other.hi, self.hi - other.lo)

    def scale(self, factor: Fraction) -> "RationalInterval":
        """Multiply by a nonnegative scalar."""
        if factor < 0:
            raise ValueError(f"negative scale factor: {factor}")
        return RationalInterval(self.lo * factor, self.hi * factor)

    def overlaps(self, other: "RationalInterval") -> bool:
        """Whether the intervals share a point."""
        return self.lo <= other.hi and other.lo <= self.hi

    def disjoint(self, other: "RationalInterval") -> bool:
        """Whether the intervals share no point."""
        return not self.overlaps(other)

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


__all__ = ["RationalInterval"]
