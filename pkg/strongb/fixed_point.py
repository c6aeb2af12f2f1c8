# Copyright 2026 strongb contributors
# Licensed under GNU GPLv3 or later
# See https://www.gnu.org/licenses/gpl-3.0.en.html
"""Fixed-point hypotheses for set-valued maps on finite spaces.

The checked hypotheses are those of the Dontchev-Hager extension of
Nadler's theorem, read on a strong b-metric space:

1. dist(x0, Tx0) < r(1 - k), and
2. delta(Tx & B(x0,r), Ty) <= k D(x,y) for all x, y in B(x0,r) with
   Tx & B(x0,r) nonempty.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from logging import getLogger
import typing as t

from strongb.spaces import (
    FiniteSpace,
    InvalidRadius,
    NotStrongB,
    Point,
    ball,
    delta_set_set,
    dist_point_set,
    min_strong_b_constant,
)


logger = getLogger(__name__)

CLOSEDNESS_NOTE = (
    "finite space: every target set is closed and the space is complete"
)


class InvalidMap(ValueError):
    """Raised for an empty target set or a target outside the space."""


class InvalidK(ValueError):
    """Raised when the contraction constant k is outside [0, 1)."""


class NotSingleValued(ValueError):
    """Raised when a single-valued map is required."""
    def __init__(self, point: Point, targets: frozenset[Point]) -> None:
        super().__init__(f"T({point}) has {len(targets)} targets")
        self.point = point
        self.targets = targets


@dataclass(frozen=True)
class SetValuedMap:
    """Map from each point to a nonempty set of points."""
    targets: tuple[frozenset[Point], ...]

    def __post_init__(self) -> None:
        for x, image in enumerate(self.targets):
            if not image:
                raise InvalidMap(f"T({x}) is empty")

    @classmethod
    def single_valued(cls, images: t.Sequence[Point]) -> "SetValuedMap":
        """Build a map with T(x) = {images[x]}."""
        return cls(tuple(frozenset([image]) for image in images))

    def __len__(self) -> int:
        return len(self.targets)

    def __call__(self, x: Point) -> frozenset[Point]:
        return self.targets[x]

    @property
    def is_single_valued(self) -> bool:
        """Whether every target set is a singleton."""
        return all(len(image) == 1 for image in self.targets)

    def image(self, x: Point) -> Point:
        """The only point of T(x)."""
        image = self.targets[x]
        if len(image) != 1:
            raise NotSingleValued(x, image)
        return next(iter(image))

    def check(self, space: FiniteSpace) -> None:
        """Raise `InvalidMap` unless the map is defined on `space`."""
        if len(self.targets) != len(space):
            raise InvalidMap(
                f"map has {len(self.targets)} points, space has {len(space)}"
            )
        for x, image in enumerate(self.targets):
            for y in image:
                if not 0 <= y < len(space):
                    raise InvalidMap(f"T({x}) contains unknown point {y}")


@dataclass(frozen=True)
class PairCheck:
    """Condition (2) for one pair (x, y)."""
    x: Point
    y: Point
    intersection: frozenset[Point]
    delta: Fraction
    bound: Fraction
    holds: bool


@dataclass(frozen=True)
class HypothesisReport:
    """Outcome of checking both hypotheses at (x0, r, k)."""
    x0: Point
    r: Fraction
    k: Fraction
    K: Fraction
    ball: frozenset[Point]
    cond1_lhs: Fraction
    cond1_rhs: Fraction
    cond1_holds: bool
    cond2_checks: tuple[PairCheck, ...]
    vacuous_pairs: tuple[tuple[Point, Point], ...]
    all_hold: bool
    fixed_points: frozenset[Point]
    notes: tuple[str, ...] = field(default=())


def check_parameters(r: Fraction, k: Fraction) -> None:
    """Raise unless r > 0 and 0 <= k < 1."""
    if not 0 <= k < 1:
        raise InvalidK(f"k must be in [0, 1): {k}")
    if r <= 0:
        raise InvalidRadius(f"radius must be positive: {r}")


def fixed_points(space: FiniteSpace, T: SetValuedMap) -> frozenset[Point]:
    """Points x with x in T(x)."""
    T.check(space)
    return frozenset(x for x in space.points if x in T(x))


def check_hypotheses(
    space: FiniteSpace,
    K: Fraction,
    T: SetValuedMap,
    x0: Point,
    r: Fraction,
    k: Fraction,
) -> HypothesisReport:
    """Check both hypotheses and list fixed points.

    Pairs (x, y) with Tx & B(x0,r) empty are reported in `vacuous_pairs`
    instead of `cond2_checks`.
    """
    check_parameters(r, k)
    space.check_point(x0)
    T.check(space)
    minimal = min_strong_b_constant(space)
    if minimal > K:
        raise NotStrongB(K, minimal)

    neighborhood = ball(space, x0, r)
    cond1_lhs = dist_point_set(space, x0, T(x0))
    cond1_rhs = r * (1 - k)

    checks = []
    vacuous = []
    for x in sorted(neighborhood):
        intersection = T(x) & neighborhood
        for y in sorted(neighborhood):
            if not intersection:
                vacuous.append((x, y))
                continue
            delta = delta_set_set(space, intersection, T(y))
            bound = k * space.d(x, y)
            checks.append(
                PairCheck(x, y, intersection, delta, bound, delta <= bound)
            )

    logger.debug(CLOSEDNESS_NOTE)
    cond1_holds = cond1_lhs < cond1_rhs
    return HypothesisReport(
        x0=x0,
        r=r,
        k=k,
        K=K,
        ball=neighborhood,
        cond1_lhs=cond1_lhs,
        cond1_rhs=cond1_rhs,
        cond1_holds=cond1_holds,
        cond2_checks=tuple(checks),
        vacuous_pairs=tuple(vacuous),
        all_hold=cond1_holds and all(check.holds for check in checks),
        fixed_points=fixed_points(space, T),
        notes=(CLOSEDNESS_NOTE,),
    )


@dataclass(frozen=True)
class FixedPoint:
    """Iteration reached a point with T(p) = p."""
    point: Point
    steps: int


@dataclass(frozen=True)
class Cycle:
    """Iteration revisited a point; `period` is the cycle length."""
    period: int
    start: Point


@dataclass(frozen=True)
class Exhausted:
    """Iteration ran out of steps."""
    steps: int


Outcome: t.TypeAlias = FixedPoint | Cycle | Exhausted


@dataclass(frozen=True)
class Trajectory:
    """Visited points x0, x1, ... and the distances D(xn, xn+1)."""
    points: tuple[Point, ...]
    distances: tuple[Fraction, ...]
    outcome: Outcome


def picard_trajectory(
    space: FiniteSpace,
    T: SetValuedMap,
    x0: Point,
    max_steps: int,
) -> Trajectory:
    """Iterate x(n+1) = T(x(n)) until a fixed point, a cycle, or max_steps.

    On a cycle the trajectory ends with the first repeated point.
    """
    if max_steps < 1:
        raise ValueError(f"max_steps must be at least 1: {max_steps}")
    space.check_point(x0)
    T.check(space)
    for x in space.points:
        if len(T(x)) != 1:
            raise NotSingleValued(x, T(x))

    points = [x0]
    seen = {x0: 0}
    outcome: Outcome
    while True:
        current = points[-1]
        following = T.image(current)
        if following == current:
            outcome = FixedPoint(current, len(points) - 1)
            break
        if len(points) - 1 >= max_steps:
            outcome = Exhausted(len(points) - 1)
            break
        points.append(following)
        if following in seen:
            outcome = Cycle(len(points) - 1 - seen[following], following)
            break
        seen[following] = len(points) - 1

    distances = tuple(
        space.d(points[i], points[i + 1]) for i in range(len(points) - 1)
    )
    return Trajectory(tuple(points), distances, outcome)


__all__ = [
    "Cycle",
    "Exhausted",
    "FixedPoint",
    "HypothesisReport",
    "InvalidK",
    "InvalidMap",
    "NotSingleValued",
    "PairCheck",
    "SetValuedMap",
    "Trajectory",
    "check_hypotheses",
    "check_parameters",
    "fixed_points",
    "picard_trajectory",
]
