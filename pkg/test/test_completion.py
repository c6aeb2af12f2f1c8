# Copyright 2026 strongb contributors
# Licensed under GNU GPLv3 or later
# See https://www.gnu.org/licenses/gpl-3.0.en.html
"""Test completion distances, witnesses, limits and the well-posedness
probe.
"""

from fractions import Fraction
import typing as t

from hypothesis import given, strategies as st
import pytest

from strongb.completion import (
    BadModulus,
    CauchySequence,
    CompletionPoint,
    Equivalence,
    MixedSpaces,
    NotEquivalentInputs,
    WrongSpaceClass,
    density_witness,
    dstar_estimate,
    dstar_interval,
    embed,
    equivalent_at,
    limit_point,
    sample_pairs,
    strong_triangle_check,
    tail_index,
    validate_modulus,
    wellposedness_probe,
)
from strongb.demos import example_2_1_space
from strongb.formats import ParseError
from strongb.intervals import RationalInterval
from strongb.presentations import (
    EXAMPLE_3,
    RATIONALS_ABS,
    constant,
    decimal_sqrt,
    example_3_distance,
    example_3_quadruple,
    finite_presentation,
    parse_sequence,
    reciprocal,
    sqrt_truncations,
)
from strongb.spaces import BadPoint


rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=1000,
)
precisions = st.sampled_from([1, 10, 1000])


@given(rationals, rationals, precisions)
def test_embedding_is_isometric(x: Fraction, y: Fraction, i: int) -> None:
    """Constant sequences evaluate to |x - y| with width 4K/i, clamped."""
    value, radius = dstar_estimate(embed(RATIONALS_ABS, x),
                                   embed(RATIONALS_ABS, y), i)
    assert value == abs(x - y)
    assert radius == Fraction(2, i)

    interval = dstar_interval(embed(RATIONALS_ABS, x),
                              embed(RATIONALS_ABS, y), i)
    assert interval.hi == abs(x - y) + Fraction(2, i)
    assert interval.lo == max(Fraction(0), abs(x - y) - Fraction(2, i))
    assert interval.width == min(Fraction(4, i), abs(x - y) + Fraction(2, i))


def test_sqrt2_against_zero() -> None:
    """sqrt(2) truncations are within 4/1000 of 1.41421356."""
    interval = dstar_interval(sqrt_truncations(2), constant(RATIONALS_ABS, 0),
                              1000)
    assert interval.width <= Fraction(4, 1000)
    assert Fraction("1.41421356") in interval
    assert interval.lo * interval.lo < 2 < interval.hi * interval.hi


def test_sqrt_lower_and_upper_truncations_are_equivalent() -> None:
    """Truncations from below and above define the same point."""
    lower = sqrt_truncations(3)
    upper = sqrt_truncations(3, upper=True)
    assert equivalent_at(lower, upper, Fraction(1, 10), 100) \
        is Equivalence.EQUIVALENT


def test_decimal_sqrt() -> None:
    """Truncations bracket the root."""
    assert decimal_sqrt(2, 3) == Fraction(1414, 1000)
    assert decimal_sqrt(2, 3, upper=True) == Fraction(1415, 1000)
    assert decimal_sqrt(4, 2) == 2


def test_equivalence_is_three_valued() -> None:
    """Distinct, equivalent and undecided comparisons."""
    zero = constant(RATIONALS_ABS, 0)
    one = constant(RATIONALS_ABS, 1)
    epsilon = Fraction(1, 10)
    assert equivalent_at(zero, one, epsilon, 10) is Equivalence.DISTINCT
    assert equivalent_at(
        one, reciprocal(offset=Fraction(1)), epsilon, 1000,
    ) is Equivalence.EQUIVALENT
    half = constant(RATIONALS_ABS, Fraction(1, 2))
    assert equivalent_at(zero, half, epsilon, 1) is Equivalence.UNDECIDED


def test_density_witness() -> None:
    """The witness is a base point within 1/i of the completion point."""
    point = sqrt_truncations(2)
    witness = density_witness(point, 100)
    assert witness.point == decimal_sqrt(2, 100)
    assert witness.bound == Fraction(1, 100)
    assert witness.interval.lo == 0
    assert witness.interval.hi <= Fraction(3, 100)


@given(rationals, rationals, rationals, precisions)
def test_strong_triangle_residual(
    x: Fraction,
    y: Fraction,
    z: Fraction,
    i: int,
) -> None:
    """D*(a,c) - D*(a,b) - K D*(b,c) can't be certified positive."""
    a = embed(RATIONALS_ABS, x)
    b = reciprocal(offset=y)
    c = reciprocal(offset=z, scale=Fraction(3))
    assert strong_triangle_check(a, b, c, i).lo <= 0
    assert strong_triangle_check(c, a, b, i).lo <= 0


def test_strong_triangle_check_needs_strong_b() -> None:
    """Plain b-metric presentations are rejected."""
    zero = embed(EXAMPLE_3, Fraction(0))
    with pytest.raises(WrongSpaceClass):
        strong_triangle_check(zero, zero, zero, 10)


def test_mixed_spaces() -> None:
    """Points over different presentations can't be compared."""
    with pytest.raises(MixedSpaces):
        dstar_interval(embed(RATIONALS_ABS, 0), embed(EXAMPLE_3, 0), 10)


def test_embed_checks_membership() -> None:
    """2/3 isn't a point of the example-3 space."""
    with pytest.raises(BadPoint):
        embed(EXAMPLE_3, Fraction(2, 3))


def test_validate_modulus() -> None:
    """A divergent sequence with a constant modulus fails sampling."""
    good = reciprocal().representative
    assert validate_modulus(good, 10, 8) is None

    bad = CauchySequence(RATIONALS_ABS, Fraction, lambda _: 1, name="n")
    violation = validate_modulus(bad, 10, 8)
    assert violation is not None
    assert violation.distance > Fraction(1, 10)


def test_sample_pairs() -> None:
    """Pairs come from start, start+1, start+2, start+4, ..."""
    assert sample_pairs(5, 3) == [(5, 6), (5, 7), (6, 7)]
    assert len(sample_pairs(1, 10)) == 10
    assert all(n < m for n, m in sample_pairs(3, 20))


def shifted(
    c: Fraction,
    scale: int,
) -> t.Callable[[int], CompletionPoint]:
    """xs(n) = the point c + 1/n, given by c + 1/n + 1/(scale k)."""
    def xs(n: int) -> CompletionPoint:
        return reciprocal(offset=c + Fraction(1, n), scale=Fraction(scale))
    return xs


@given(rationals, st.integers(1, 5))
def test_limit_point_tail(c: Fraction, scale: int) -> None:
    """At the prescribed index the distance to the limit is below 1/50."""
    xs = shifted(c, scale)
    target = Fraction(1, 50)
    limit = limit_point(xs, lambda j: j)
    n, i = tail_index(lambda j: j, RATIONALS_ABS.K, target)
    assert dstar_interval(xs(n), limit, i).hi <= target

    # The limit is the point c.
    assert Fraction(0) in dstar_interval(limit, embed(RATIONALS_ABS, c), i)


def test_limit_point_rejects_bad_modulus() -> None:
    """Terms 1 and 3 of n -> n are 2 apart, which modulus 1 can't allow."""
    with pytest.raises(BadModulus) as info:
        limit_point(lambda n: embed(RATIONALS_ABS, Fraction(n)), lambda j: j)
    assert info.value.precision == 1


def test_limit_point_needs_strong_b() -> None:
    """The diagonal construction is only sound for strong b-metrics."""
    with pytest.raises(WrongSpaceClass):
        limit_point(lambda _: embed(EXAMPLE_3, Fraction(0)), lambda j: j)


def test_tail_index() -> None:
    """n >= modulus(j) and j, i >= 8K/target."""
    n, i = tail_index(lambda j: 2 * j, Fraction(2), Fraction(1, 10))
    assert n == 120
    assert i == 160
    with pytest.raises(ValueError):
        tail_index(lambda j: j, Fraction(1), Fraction(0))


def test_example_3_distance() -> None:
    """Four cases of the example-3 distance."""
    assert example_3_distance(Fraction(1), Fraction(1)) == 0
    assert example_3_distance(Fraction(1), Fraction(0)) == 1
    assert example_3_distance(Fraction(1, 4), Fraction(0)) == Fraction(1, 4)
    assert example_3_distance(Fraction(1, 2), Fraction(1, 6)) == \
        Fraction(1, 3)
    assert example_3_distance(Fraction(1), Fraction(1, 2)) == 4
    assert example_3_distance(Fraction(1, 3), Fraction(0)) == 4
    assert EXAMPLE_3.spot_check() == []
    assert RATIONALS_ABS.spot_check() == []


def test_example_3_is_not_strong_b() -> None:
    """D(1, 1/2) = 4 > D(1, 0) + (8/3) D(0, 1/2)."""
    d = example_3_distance
    one, zero, half = Fraction(1), Fraction(0), Fraction(1, 2)
    assert d(one, half) > d(one, zero) + EXAMPLE_3.K * d(zero, half)


def test_example_3_clash() -> None:
    """lim D(xn, yn) = 4 but lim D(zn, wn) = 1 although x ~ z and y ~ w."""
    first, second, tails = example_3_quadruple()
    report = wellposedness_probe(first, second, 100, tails=tails)
    assert report.first_limit == RationalInterval.exact(Fraction(4))
    assert report.second_limit == RationalInterval.exact(Fraction(1))
    assert report.first_equivalence is Equivalence.EQUIVALENT
    assert report.second_equivalence is Equivalence.EQUIVALENT
    assert report.clash


def test_probe_needs_tails_on_plain_b() -> None:
    """Without tail certificates the 2K/i radius isn't sound."""
    first, second, _ = example_3_quadruple()
    with pytest.raises(WrongSpaceClass):
        wellposedness_probe(first, second, 100)


def test_probe_no_clash_on_strong_b() -> None:
    """On the rationals the distance limit is well defined."""
    x = reciprocal()
    z = constant(RATIONALS_ABS, 0)
    y = constant(RATIONALS_ABS, 1)
    w = reciprocal(offset=Fraction(1))
    report = wellposedness_probe((x, z), (y, w), 100)
    assert not report.clash
    assert report.first_limit.overlaps(report.second_limit)
    assert Fraction(1) in report.first_limit
    assert Fraction(1) in report.second_limit


def test_probe_rejects_inequivalent_inputs() -> None:
    """x and z must be equivalent."""
    zero = constant(RATIONALS_ABS, 0)
    one = constant(RATIONALS_ABS, 1)
    with pytest.raises(NotEquivalentInputs):
        wellposedness_probe((zero, one), (zero, zero), 100)


@given(rationals, st.integers(1, 3))
def test_limit_of_constant_sequence(c: Fraction, scale: int) -> None:
    """The limit of a, a, a, ... is equivalent to a."""
    points = (
        embed(RATIONALS_ABS, c),
        reciprocal(offset=c, scale=Fraction(scale)),
    )
    for a in points:
        limit = limit_point(lambda _, a=a: a, lambda j: j)
        assert equivalent_at(limit, a, Fraction(1, 1000), 4000) \
            is Equivalence.EQUIVALENT


def test_limit_of_embedded_truncations() -> None:
    """Embedded truncations of sqrt(2) converge to the sqrt(2) point."""
    def xs(n: int) -> CompletionPoint:
        return embed(RATIONALS_ABS, decimal_sqrt(2, n))

    limit = limit_point(xs, lambda j: j)
    assert equivalent_at(limit, sqrt_truncations(2), Fraction(1, 1000),
                         4000) is Equivalence.EQUIVALENT


@given(rationals, rationals, st.lists(st.integers(1, 5), min_size=4,
                                      max_size=4))
def test_distance_limits_agree_on_rationals(
    p: Fraction,
    q: Fraction,
    scales: list[int],
) -> None:
    """Equivalent pairs of sequences have overlapping distance limits."""
    x, z, y, w = (
        reciprocal(offset=offset, scale=Fraction(scale))
        for offset, scale in zip((p, p, q, q), scales)
    )
    report = wellposedness_probe((x, z), (y, w), 100)
    assert not report.clash
    assert abs(p - q) in report.first_limit
    assert abs(p - q) in report.second_limit


def test_finite_presentation_points() -> None:
    """Only point indices are points of a finite presentation."""
    space = finite_presentation(example_2_1_space())
    assert space.d(0, 2) == 6
    for point in (Fraction(1, 2), Fraction(1), 3, -1, True):
        with pytest.raises(BadPoint):
            space.d(point, 0)
    with pytest.raises(BadPoint):
        embed(space, Fraction(1, 2))


def test_terms_outside_the_space() -> None:
    """A sequence whose terms leave the space is rejected when evaluated."""
    space = finite_presentation(example_2_1_space())
    with pytest.raises(BadPoint):
        validate_modulus(reciprocal(space).representative, 10, 4)
    with pytest.raises(BadPoint):
        dstar_interval(reciprocal(space), embed(space, 0), 10)


def test_finite_sequences_by_label() -> None:
    """Finite presentations take constant:<label> and nothing else."""
    space = finite_presentation(example_2_1_space())
    assert parse_sequence(space, "constant:3").term(1) == 2
    for text in ["constant:5/2", "constant:4", "constant:0", "reciprocal",
                 "sqrt2-truncations", "constant"]:
        with pytest.raises(ParseError):
            parse_sequence(space, text)
