# Copyright 2026 strongb contributors
# Licensed under GNU GPLv3 or later
# See https://www.gnu.org/licenses/gpl-3.0.en.html
"""Exhaustive search for fixed-point-free maps that satisfy the hypotheses."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from logging import getLogger
import typing as t

from strongb.fixed_point import (
    HypothesisReport,
    SetValuedMap,
    check_hypotheses,
)
from strongb.spaces import (
    FiniteSpace,
    Point,
    canonical_form,
    min_strong_b_constant,
    strong_b_violation,
    upper_triangle,
)


logger = getLogger(__name__)

SearchKey: t.TypeAlias = tuple[int, int, int, int, int]


class InvalidConfig(ValueError):
    """Raised for a search configuration that can't be run."""


@dataclass(frozen=True)
class SearchConfig:
    """Search space: point count, distance palette, and (r, k) candidates.

    `max_constant` skips spaces whose least strong b-metric constant
    exceeds it.
    """
    n: int
    palette: tuple[Fraction, ...]
    ks: tuple[Fraction, ...]
    rs: tuple[Fraction, ...]
    require_strong_b: bool = True
    max_results: int = 100
    canonical: bool = False
    max_constant: Fraction | None = None
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.n < 2:
            raise InvalidConfig(f"need at least 2 points: {self.n}")
        if not self.palette or any(value <= 0 for value in self.palette):
            raise InvalidConfig("palette values must be positive")
        if any(not 0 <= k < 1 for k in self.ks):
            raise InvalidConfig("k candidates must be in [0, 1)")
        if any(r <= 0 for r in self.rs):
            raise InvalidConfig("r candidates must be positive")
        if self.max_results < 0:
            raise InvalidConfig("max_results can't be negative")
        if self.jobs < 1:
            raise InvalidConfig("jobs must be at least 1")
        object.__setattr__(self, "palette", tuple(sorted(set(self.palette))))


@dataclass(frozen=True)
class Counterexample:
    """Configuration where both hypotheses hold but T has no fixed point."""
    space: FiniteSpace
    K: Fraction
    map: SetValuedMap
    x0: Point
    r: Fraction
    k: Fraction
    report: HypothesisReport


def enumerate_spaces(
    n: int,
    palette: t.Iterable[Fraction],
    canonical: bool = False,
) -> t.Iterator[FiniteSpace]:
    """Yield every n-point space with off-diagonal distances from `palette`.

    With `canonical`, only the least relabeling of each space is kept.
    """
    values = sorted(set(palette))
    pairs = list(combinations(range(n), 2))
    for entries in product(values, repeat=len(pairs)):
        matrix = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), value in zip(pairs, entries):
            matrix[i][j] = matrix[j][i] = value
        space = FiniteSpace(
            tuple(str(i + 1) for i in range(n)),
            tuple(tuple(row) for row in matrix),
        )
        if canonical and canonical_form(space) != upper_triangle(space):
            continue
        yield space


def _search_space(
    config: SearchConfig,
    index: int,
    space: FiniteSpace,
) -> t.Iterator[tuple[SearchKey, Counterexample]]:
    K = min_strong_b_constant(space)
    if config.max_constant is not None and K > config.max_constant:
        return
    if config.require_strong_b and strong_b_violation(space, K) is not None:
        return

    points = space.points
    for map_index, images in enumerate(product(points, repeat=len(space))):
        if any(images[x] == x for x in points):
            continue
        T = SetValuedMap.single_valued(images)
        for x0 in points:
            for r_index, r in enumerate(config.rs):
                for k_index, k in enumerate(config.ks):
                    # Condition (1) first; condition (2) is the costly one.
                    if not space.d(x0, images[x0]) < r * (1 - k):
                        continue
                    report = check_hypotheses(space, K, T, x0, r, k)
                    if report.all_hold and not report.fixed_points:
                        key = (index, map_index, x0, r_index, k_index)
                        yield key, Counterexample(space, K, T, x0, r, k,
                                                  report)


def _search_partition(
    config: SearchConfig,
    part: int,
    parts: int,
) -> list[tuple[SearchKey, Counterexample]]:
    found: list[tuple[SearchKey, Counterexample]] = []
    scanned = 0
    spaces = enumerate_spaces(config.n, config.palette, config.canonical)
    for index, space in enumerate(spaces):
        if index % parts != part:
            continue
        scanned += 1
        for item in _search_space(config, index, space):
            found.append(item)
            if len(found) >= config.max_results:
                logger.info("partition %d: scanned %d spaces, stopped at %d",
                            part, scanned, len(found))
                return found
    logger.info("partition %d: scanned %d spaces, found %d",
                part, scanned, len(found))
    return found


def find_counterexamples(config: SearchConfig) -> list[Counterexample]:
    """Search every space, fixed-point-free single-valued map, x0, r and k.

    Results come in enumeration order regardless of `config.jobs`.
    """
    if config.max_results == 0:
        return []
    if config.jobs == 1:
        found = _search_partition(config, 0, 1)
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as executor:
            futures = [
                executor.submit(_search_partition, config, part, config.jobs)
                for part in range(config.jobs)
            ]
            found = [item for future in futures for item in future.result()]
        found.sort(key=lambda item: item[0])
    return [example for _, example in found[:config.max_results]]


__all__ = [
    "Counterexample",
    "InvalidConfig",
    "SearchConfig",
    "enumerate_spaces",
    "find_counterexamples",
]
