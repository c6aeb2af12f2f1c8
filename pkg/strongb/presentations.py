# Copyright 2026 strongb contributors
# Licensed under GNU GPLv3 or later
# See https://www.gnu.org/licenses/gpl-3.0.en.html
"""Built-in space presentations and Cauchy sequence families."""

from fractions import Fraction
from math import ceil, isqrt
from pathlib import Path
import typing as t

from strongb.completion import (
    CauchySequence,
    CompletionPoint,
    ProbeTails,
    SpaceClass,
    SpacePresentation,
    TailCertificate,
    embed,
)
from strongb.formats import ParseError, load_space, parse_rational
from strongb.spaces import FiniteSpace, min_strong_b_constant


def _is_rational(x: object) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def absolute_distance(x: Fraction, y: Fraction) -> Fraction:
    """|x - y|."""
    return abs(Fraction(x) - Fraction(y))


RATIONALS_ABS = SpacePresentation(
    name="rationals-abs",
    distance=absolute_distance,
    K=Fraction(1),
    kind=SpaceClass.STRONG_B,
    contains=_is_rational,
    samples=tuple(
        Fraction(x) for x in ("0", "1", "1/2", "-3/2", "2", "7/3", "-5")
    ),
)


def _in_example_3(x: object) -> bool:
    if not _is_rational(x):
        return False
    x = Fraction(t.cast(Fraction, x))
    return x == 0 or (0 < x <= 1 and x.numerator == 1)


def _in_even_part(x: Fraction) -> bool:
    # {0} and the points 1/(2n)
    return x == 0 or (x.numerator == 1 and x.denominator % 2 == 0)


def example_3_distance(x: Fraction, y: Fraction) -> Fraction:
    """Distance on {0, 1, 1/2, 1/3, ...} that is a b-metric with K = 8/3.

    0 on the diagonal, 1 between 0 and 1, |x - y| between distinct points
    of {0} and {1/(2n)}, and 4 otherwise.
    """
    x, y = Fraction(x), Fraction(y)
    if x == y:
        return Fraction(0)
    if {x, y} <= {Fraction(0), Fraction(1)}:
        return Fraction(1)
    if _in_even_part(x) and _in_even_part(y):
        return abs(x - y)
    return Fraction(4)


EXAMPLE_3 = SpacePresentation(
    name="example-3",
    distance=example_3_distance,
    K=Fraction(8, 3),
    kind=SpaceClass.PLAIN_B,
    contains=_in_example_3,
    samples=tuple(Fraction(1, n) for n in range(1, 9)) + (Fraction(0),),
)

PRESENTATIONS = {
    RATIONALS_ABS.name: RATIONALS_ABS,
    EXAMPLE_3.name: EXAMPLE_3,
}


def finite_presentation(space: FiniteSpace) -> SpacePresentation:
    """Lift a finite space to a presentation over its point indices.

    The constant is the space's least strong b-metric constant.
    """
    return SpacePresentation(
        name="finite",
        distance=space.d,
        K=min_strong_b_constant(space),
        kind=SpaceClass.STRONG_B,
        contains=lambda x: (
            isinstance(x, int) and not isinstance(x, bool)
            and 0 <= x < len(space)
        ),
        samples=tuple(space.points),
        labels=space.labels,
    )


def get_presentation(name: str) -> SpacePresentation:
    """Look up `rationals-abs`, `example-3` or `finite:<file>`."""
    if name.startswith("finite:"):
        return finite_presentation(load_space(Path(name[len("finite:"):])))
    try:
        return PRESENTATIONS[name]
    except KeyError:
        raise ParseError(f"unknown presentation {name!r}") from None


def constant(space: SpacePresentation, x: t.Any) -> CompletionPoint:
    """Constant sequence x, x, x, ..."""
    return embed(space, x)


def reciprocal(
    space: SpacePresentation = RATIONALS_ABS,
    offset: Fraction = Fraction(0),
    scale: Fraction = Fraction(1),
) -> CompletionPoint:
    """offset + 1/(scale n), with modulus i -> ceil(i / scale).

    Consecutive tails stay within 1/(scale n) for distances that agree with
    |x - y| along the sequence.
    """
    if scale <= 0:
        raise ValueError(f"scale must be positive: {scale}")
    return CompletionPoint(CauchySequence(
        space,
        lambda n: offset + 1 / (scale * n),
        lambda i: max(1, ceil(i / scale)),
        name=f"reciprocal {offset} {scale}",
    ))


def decimal_sqrt(radicand: int, digits: int, upper: bool = False) -> Fraction:
    """sqrt(radicand) truncated to `digits` decimals, from below or above."""
    scale = 10 ** digits
    root = isqrt(radicand * scale * scale)
    if upper:
        root += 1
    return Fraction(root, scale)


def sqrt_truncations(
    radicand: int = 2,
    upper: bool = False,
    space: SpacePresentation = RATIONALS_ABS,
) -> CompletionPoint:
    """Decimal truncations of sqrt(radicand), with modulus i -> i.

    Terms n and m >= i differ by less than 2 * 10^-i <= 1/i.
    """
    if radicand < 0:
        raise ValueError(f"negative radicand: {radicand}")
    side = "upper" if upper else "lower"
    return CompletionPoint(CauchySequence(
        space,
        lambda n: decimal_sqrt(radicand, n, upper),
        lambda i: i,
        name=f"sqrt {radicand} {side}",
    ))


def example_3_quadruple() -> tuple[
    tuple[CompletionPoint, CompletionPoint],
    tuple[CompletionPoint, CompletionPoint],
    ProbeTails,
]:
    """x = 1, y = 1/(2n), z = 1, w = 0 in the example-3 space.

    Returns ((x, z), (y, w), tails). D(xn, yn) = 4, D(zn, wn) = 1 and
    D(xn, zn) = 0 for every n, and D(yn, wn) = 1/(2n).
    """
    one = constant(EXAMPLE_3, Fraction(1))
    zero = constant(EXAMPLE_3, Fraction(0))
    halves = reciprocal(EXAMPLE_3, scale=Fraction(2))
    tails = ProbeTails(
        xy=TailCertificate.constant_from(1),
        zw=TailCertificate.constant_from(1),
        xz=TailCertificate.constant_from(1),
        yw=TailCertificate.rate(lambda i: i),
    )
    return (one, one), (halves, zero), tails


FAMILIES = ("constant:<point>", "reciprocal[:<offset>[:<scale>]]",
            "sqrt2-truncations", "sqrt-truncations:<a>[:upper]")


def parse_sequence(space: SpacePresentation, text: str) -> CompletionPoint:
    """Build a named sequence family from CLI text.

    Points of `finite` presentations are given by label, and only constant
    sequences are available there.
    """
    name, _, rest = text.partition(":")
    arguments = rest.split(":") if rest else []
    if space.labels:
        if name != "constant" or len(arguments) != 1:
            raise ParseError(
                f"unknown sequence {text!r} for a finite space; "
                "expected constant:<label>"
            )
        label = arguments[0]
        if label not in space.labels:
            raise ParseError(f"unknown point {label!r}")
        point = space.labels.index(label)
        return CompletionPoint(CauchySequence(
            space, lambda _: point, lambda _: 1, name=f"constant {label}",
        ))
    if name == "constant" and len(arguments) == 1:
        return constant(space, parse_rational(arguments[0]))
    if name == "reciprocal" and len(arguments) <= 2:
        values = [parse_rational(argument) for argument in arguments]
        return reciprocal(space, *values)
    if name == "sqrt2-truncations" and not arguments:
        return sqrt_truncations(2, space=space)
    if name == "sqrt-truncations" and 1 <= len(arguments) <= 2:
        radicand = parse_rational(arguments[0])
        if radicand.denominator != 1:
            raise ParseError(f"radicand must be an integer: {radicand}")
        upper = arguments[1:] == ["upper"]
        if len(arguments) == 2 and not upper:
            raise ParseError(f"unknown option {arguments[1]!r}")
        return sqrt_truncations(int(radicand), upper=upper, space=space)
    raise ParseError(
        f"unknown sequence {text!r}; expected one of {', '.join(FAMILIES)}"
    )


__all__ = [
    "EXAMPLE_3",
    "PRESENTATIONS",
    "RATIONALS_ABS",
    "absolute_distance",
    "constant",
    "decimal_sqrt",
    "example_3_distance",
    "example_3_quadruple",
    "finite_presentation",
    "get_presentation",
    "parse_sequence",
    "reciprocal",
    "sqrt_truncations",
]
