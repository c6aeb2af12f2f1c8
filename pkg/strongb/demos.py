# Copyright 2026 strongb contributors
# Licensed under GNU GPLv3 or later
# See https://www.gnu.org/licenses/gpl-3.0.en.html
"""Compiled-in worked examples.

example-2.1: a 3-point strong b-metric space (K = 4) with a fixed-point-free
map that satisfies both hypotheses at x0 = 1, r = 6, k = 1/2.

example-3: a b-metric space (K = 8/3) where the termwise limit of distances
between Cauchy sequences depends on the chosen representatives.
"""

from dataclasses import dataclass
from fractions import Fraction

from strongb.completion import ProbeReport, wellposedness_probe
from strongb.fixed_point import (
    HypothesisReport,
    SetValuedMap,
    check_hypotheses,
)
from strongb.presentations import example_3_quadruple
from strongb.spaces import (
    ClassificationReport,
    FiniteSpace,
    InequalityInstance,
    classify,
    strong_b_trace,
    validate_space,
)


EXAMPLE_2_1_X0 = 0
EXAMPLE_2_1_R = Fraction(6)
EXAMPLE_2_1_K = Fraction(1, 2)
EXAMPLE_2_1_CONSTANT = Fraction(4)


def example_2_1_space() -> FiniteSpace:
    """X = {1, 2, 3} with D(1,2) = 2, D(2,3) = 1, D(1,3) = 6."""
    return validate_space(
        ["1", "2", "3"],
        [
            [0, 2, 6],
            [2, 0, 1],
            [6, 1, 0],
        ],
    )


def example_2_1_map() -> SetValuedMap:
    """T1 = 2, T2 = 3, T3 = 1."""
    return SetValuedMap.single_valued([1, 2, 0])


@dataclass(frozen=True)
class Example21Replay:
    """Classification, strong-b trace at K = 4, and the hypothesis check."""
    classification: ClassificationReport
    trace: tuple[InequalityInstance, ...]
    hypotheses: HypothesisReport


def replay_example_2_1() -> Example21Replay:
    """Rerun every computation of the 3-point counterexample."""
    space = example_2_1_space()
    return Example21Replay(
        classification=classify(space),
        trace=tuple(strong_b_trace(space, EXAMPLE_2_1_CONSTANT)),
        hypotheses=check_hypotheses(
            space,
            EXAMPLE_2_1_CONSTANT,
            example_2_1_map(),
            EXAMPLE_2_1_X0,
            EXAMPLE_2_1_R,
            EXAMPLE_2_1_K,
        ),
    )


def replay_example_3(i: int = 100) -> ProbeReport:
    """Probe x = 1, y = 1/(2n), z = 1, w = 0 at precision i."""
    first, second, tails = example_3_quadruple()
    return wellposedness_probe(first, second, i, tails=tails)


DEMOS = ("example-2.1", "example-3")


__all__ = [
    "DEMOS",
    "EXAMPLE_2_1_CONSTANT",
    "EXAMPLE_2_1_K",
    "EXAMPLE_2_1_R",
    "EXAMPLE_2_1_X0",
    "Example21Replay",
    "example_2_1_map",
    "example_2_1_space",
    "replay_example_2_1",
    "replay_example_3",
]
