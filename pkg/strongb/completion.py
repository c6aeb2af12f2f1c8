# Copyright 2026 strongb contributors
# Licensed under GNU GPLv3 or later
# See https://www.gnu.org/licenses/gpl-3.0.en.html
"""Constructive completion of computably presented strong b-metric spaces.

A completion point is a Cauchy sequence that carries an explicit modulus:
for all n, m >= modulus(i), D(term(n), term(m)) <= 1/i.
Limits of distance sequences are returned as rational intervals that are
guaranteed to contain the true limit.

For a strong b-metric with constant K,

    |D(xm,ym) - D(xn,yn)| <= K [D(xn,xm) + D(ym,yn)],

so evaluating a single term past both moduli at precision i pins the limit
down to within 2K/i.
That bound fails for plain b-metrics; see `wellposedness_probe`.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from logging import getLogger
from math import ceil
import typing as t

from strongb.intervals import RationalInterval
from strongb.spaces import BadPoint, CertificateFailure


logger = getLogger(__name__)

BasePoint: t.TypeAlias = t.Hashable
Distance: t.TypeAlias = t.Callable[[t.Any, t.Any], Fraction]
Modulus: t.TypeAlias = t.Callable[[int], int]


class SpaceClass(Enum):
    """Which relaxed triangle inequality a presentation satisfies."""
    STRONG_B = "strong-b"
    PLAIN_B = "plain-b"


class MixedSpaces(ValueError):
    """Raised when completion points come from different presentations."""


class WrongSpaceClass(ValueError):
    """Raised when an operation needs a strong b-metric presentation."""


class BadModulus(ValueError):
    """Raised when a modulus fails a sampled certification check."""
    def __init__(
        self,
        precision: int,
        n: int,
        m: int,
        interval: RationalInterval,
    ) -> None:
        super().__init__(
            f"modulus fails at precision {precision}: distance between "
            f"terms {n} and {m} is certified in {interval}"
        )
        self.precision = precision
        self.n = n
        self.m = m
        self.interval = interval


class NotEquivalentInputs(ValueError):
    """Raised when the probe's input pairs aren't certified equivalent."""


def _accept_all(_: object) -> bool:
    return True


@dataclass(frozen=True, eq=False)
class SpacePresentation:
    """Countable space given by an exact distance oracle.

    Presentations compare by identity: two completion points can only be
    compared if they live over the same presentation object.
    """
    name: str
    distance: Distance
    K: Fraction
    kind: SpaceClass
    contains: t.Callable[[t.Any], bool] = _accept_all
    samples: tuple[t.Any, ...] = ()
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.K < 1:
            raise ValueError(f"relaxation constant must be >= 1: {self.K}")

    def d(self, x: BasePoint, y: BasePoint) -> Fraction:
        """Exact distance between two base points.

        Raises `BadPoint` if either argument isn't a point of the space.
        """
        for point in (x, y):
            if not self.contains(point):
                raise BadPoint(f"{point!r} is not a point of {self.name}")
        return self.distance(x, y)

    def spot_check(
        self,
        points: t.Sequence[BasePoint] | None = None,
    ) -> list[str]:
        """Check the axioms on sample points and return every violation.

        The strong inequality is only checked for strong b-metric
        presentations.
        """
        points = self.samples if points is None else points
        result = []
        for x in points:
            for y in points:
                value = self.d(x, y)
                if value != self.d(y, x):
                    result.append(f"D({x},{y}) != D({y},{x})")
                if (value == 0) != (x == y):
                    result.append(f"D({x},{y}) = {value}")
                if value < 0:
                    result.append(f"D({x},{y}) < 0")
        if self.kind is SpaceClass.STRONG_B:
            for x in points:
                for y in points:
                    for z in points:
                        bound = self.d(x, y) + self.K * self.d(y, z)
                        if self.d(x, z) > bound:
                            result.append(
                                f"D({x},{z}) > D({x},{y}) + K D({y},{z})"
                            )
        return result


@dataclass(frozen=True, eq=False)
class CauchySequence:
    """Sequence of base points (indexed from 1) with a Cauchy modulus."""
    space: SpacePresentation
    term: t.Callable[[int], BasePoint]
    modulus: Modulus
    name: str = ""


@dataclass(frozen=True, eq=False)
class CompletionPoint:
    """Point of the completion, given by one representative sequence."""
    representative: CauchySequence

    @property
    def space(self) -> SpacePresentation:
        """Presentation of the underlying space."""
        return self.representative.space

    def term(self, n: int) -> BasePoint:
        """n-th term of the representative."""
        return self.representative.term(n)

    def modulus(self, i: int) -> int:
        """Index past which terms are within 1/i of each other."""
        return max(1, self.representative.modulus(i))

    @property
    def name(self) -> str:
        """Name of the representative."""
        return self.representative.name


def _check_precision(i: int) -> None:
    if i < 1:
        raise ValueError(f"precision must be a positive integer: {i}")


def same_space(*points: CompletionPoint) -> SpacePresentation:
    """Return the shared presentation or raise `MixedSpaces`."""
    space = points[0].space
    for point in points[1:]:
        if point.space is not space:
            raise MixedSpaces(
                f"points over {space.name} and {point.space.name}"
            )
    return space


def embed(space: SpacePresentation, x: BasePoint) -> CompletionPoint:
    """Constant sequence x, x, x, ... with modulus 1."""
    if not space.contains(x):
        raise BadPoint(f"{x} is not a point of {space.name}")
    return CompletionPoint(
        CauchySequence(space, lambda _: x, lambda _: 1, name=f"constant {x}")
    )


def sample_pairs(start: int, samples: int) -> list[tuple[int, int]]:
    """Deterministic index pairs n < m drawn from start, start+1, start+2,
    start+4, ...
    """
    if samples < 1:
        raise ValueError(f"need at least one sample: {samples}")
    grid = [start]
    result: list[tuple[int, int]] = []
    while len(result) < samples:
        grid.append(start + 2 ** (len(grid) - 1))
        latest = grid[-1]
        for earlier in grid[:-1]:
            result.append((earlier, latest))
            if len(result) == samples:
                break
    return result


@dataclass(frozen=True)
class ModulusViolation:
    """Terms n and m are farther apart than the modulus allows."""
    n: int
    m: int
    distance: Fraction


def validate_modulus(
    seq: CauchySequence,
    i: int,
    samples: int,
) -> ModulusViolation | None:
    """Sample pairs past modulus(i) and check D(term(n), term(m)) <= 1/i.

    Returns the first violation, or None if every sampled pair passes.
    """
    _check_precision(i)
    start = max(1, seq.modulus(i))
    for n, m in sample_pairs(start, samples):
        value = seq.space.d(seq.term(n), seq.term(m))
        if value > Fraction(1, i):
            return ModulusViolation(n, m, value)
    return None


def dstar_estimate(
    a: CompletionPoint,
    b: CompletionPoint,
    i: int,
) -> tuple[Fraction, Fraction]:
    """Return (v, radius) with |D*(a,b) - v| <= radius = 2K/i."""
    _check_precision(i)
    space = same_space(a, b)
    index = max(a.modulus(i), b.modulus(i))
    value = space.d(a.term(index), b.term(index))
    return value, 2 * space.K / i


def dstar_interval(
    a: CompletionPoint,
    b: CompletionPoint,
    i: int,
) -> RationalInterval:
    """Interval containing D*(a, b), of width 4K/i before clamping at 0."""
    value, radius = dstar_estimate(a, b, i)
    return RationalInterval.around(value, radius, nonnegative=True)


class Equivalence(Enum):
    """Three-valued answer to whether two Cauchy sequences are equivalent.

    DISTINCT is a proof. EQUIVALENT only certifies D* < epsilon.
    """
    EQUIVALENT = "equivalent"
    DISTINCT = "distinct"
    UNDECIDED = "undecided"


def judge(interval: RationalInterval, epsilon: Fraction) -> Equivalence:
    """Classify a certified distance interval against epsilon."""
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive: {epsilon}")
    if interval.lo > 0:
        return Equivalence.DISTINCT
    if interval.hi < epsilon:
        return Equivalence.EQUIVALENT
    return Equivalence.UNDECIDED


def equivalent_at(
    a: CompletionPoint,
    b: CompletionPoint,
    epsilon: Fraction,
    i: int,
) -> Equivalence:
    """Compare D*(a, b) against 0 and epsilon at precision i."""
    return judge(dstar_interval(a, b, i), epsilon)


def strong_triangle_check(
    a: CompletionPoint,
    b: CompletionPoint,
    c: CompletionPoint,
    i: int,
) -> RationalInterval:
    """Interval for D*(a,c) - D*(a,b) - K D*(b,c).

    A positive lower bound certifies a violation of the strong inequality.
    """
    space = same_space(a, b, c)
    if space.kind is not SpaceClass.STRONG_B:
        raise WrongSpaceClass(f"{space.name} is not a strong b-metric space")
    ac = dstar_interval(a, c, i)
    ab = dstar_interval(a, b, i)
    bc = dstar_interval(b, c, i)
    return ac - ab - bc.scale(space.K)


@dataclass(frozen=True)
class DensityWitness:
    """Base point within `bound` of a completion point."""
    point: BasePoint
    index: int
    bound: Fraction
    interval: RationalInterval


def density_witness(a: CompletionPoint, i: int) -> DensityWitness:
    """Return the base point a.term(a.modulus(i)), which is within 1/i of a."""
    _check_precision(i)
    space = a.space
    index = a.modulus(i)
    point = a.term(index)
    interval = dstar_interval(embed(space, point), a, i)
    slack = Fraction(1, i) + 2 * space.K / i
    if interval.hi > slack:
        raise CertificateFailure(
            f"witness {point} is certified only within {interval.hi}"
        )
    return DensityWitness(point, index, Fraction(1, i), interval)


def limit_point(
    xs: t.Callable[[int], CompletionPoint],
    modulus: Modulus,
    checks: int = 3,
    samples: int = 3,
) -> CompletionPoint:
    """Limit of a Cauchy sequence of completion points.

    `modulus` must satisfy D*(xs(n), xs(m)) <= 1/j for all n, m >= modulus(j).
    The n-th term of the limit's representative is the density witness of
    xs(n) at precision ceil(K n); its modulus is i -> max(modulus(3i), 3i).
    """
    space = xs(1).space
    if space.kind is not SpaceClass.STRONG_B:
        raise WrongSpaceClass(f"{space.name} is not a strong b-metric space")
    K = space.K

    for step in range(checks):
        j = 2 ** step
        for n, m in sample_pairs(max(1, modulus(j)), samples):
            interval = dstar_interval(xs(n), xs(m), 8 * j)
            if interval.lo > Fraction(1, j):
                raise BadModulus(j, n, m, interval)

    @lru_cache(maxsize=None)
    def term(n: int) -> BasePoint:
        point = xs(n)
        if point.space is not space:
            raise MixedSpaces(f"term {n} is over {point.space.name}")
        return point.term(point.modulus(ceil(K * n)))

    def limit_modulus(i: int) -> int:
        return max(modulus(3 * i), 3 * i)

    return CompletionPoint(
        CauchySequence(space, term, limit_modulus, name="limit")
    )


def tail_index(
    modulus: Modulus,
    K: Fraction,
    target: Fraction,
) -> tuple[int, int]:
    """Return (n, i) with dstar_interval(xs(n), limit, i).hi <= target.

    For n >= modulus(j) and n >= j, D*(xs(n), limit) <= 2/n + 1/j <= 3/j,
    and the evaluated interval adds at most 4K/i on top of that.
    """
    if target <= 0:
        raise ValueError(f"target must be positive: {target}")
    j = ceil(6 / target)
    n = max(modulus(j), j)
    i = ceil(8 * K / target)
    return n, i


@dataclass(frozen=True)
class TailCertificate:
    """Convergence certificate for the real sequence D(a(n), b(n)).

    With `exact`, the sequence is constant from modulus(i) on; otherwise
    it is within 1/i of its limit from modulus(i) on.
    """
    modulus: Modulus
    exact: bool = False

    @classmethod
    def constant_from(cls, start: int) -> "TailCertificate":
        """Sequence is constant from index `start` on."""
        return cls(lambda _: start, exact=True)

    @classmethod
    def rate(cls, modulus: Modulus) -> "TailCertificate":
        """Sequence is within 1/i of its limit from modulus(i) on."""
        return cls(modulus)

    def evaluate(
        self,
        a: CompletionPoint,
        b: CompletionPoint,
        i: int,
    ) -> RationalInterval:
        """Interval containing lim D(a(n), b(n))."""
        _check_precision(i)
        space = same_space(a, b)
        index = max(1, self.modulus(i))
        value = space.d(a.term(index), b.term(index))
        if self.exact:
            return RationalInterval.exact(value)
        return RationalInterval.around(value, Fraction(1, i), nonnegative=True)


@dataclass(frozen=True)
class ProbeTails:
    """Tail certificates for the four distance sequences of the probe."""
    xy: TailCertificate
    zw: TailCertificate
    xz: TailCertificate
    yw: TailCertificate


@dataclass(frozen=True)
class ProbeReport:
    """Evidence on whether lim D(xn,yn) = lim D(zn,wn) for x ~ z, y ~ w."""
    first_limit: RationalInterval
    second_limit: RationalInterval
    first_gap: RationalInterval
    second_gap: RationalInterval
    first_equivalence: Equivalence
    second_equivalence: Equivalence
    clash: bool


def wellposedness_probe(
    first: tuple[CompletionPoint, CompletionPoint],
    second: tuple[CompletionPoint, CompletionPoint],
    i: int,
    epsilon: Fraction = Fraction(1, 10),
    tails: ProbeTails | None = None,
) -> ProbeReport:
    """Test whether D* is well defined on the pairs (x, z) and (y, w).

    `first` is (x, z) and `second` is (y, w); x ~ z and y ~ w must be
    certified at `epsilon`.
    The probe compares lim D(xn, yn) with lim D(zn, wn) and flags a clash
    when the two certified intervals are disjoint.
    Plain b-metric presentations need `tails`: the 2K/i radius is only
    sound for strong b-metrics.
    """
    x, z = first
    y, w = second
    space = same_space(x, z, y, w)

    def evaluate(
        a: CompletionPoint,
        b: CompletionPoint,
        certificate: TailCertificate | None,
    ) -> RationalInterval:
        if certificate is None:
            return dstar_interval(a, b, i)
        logger.debug("using tail certificate for %s and %s", a.name, b.name)
        return certificate.evaluate(a, b, i)

    if tails is None:
        if space.kind is not SpaceClass.STRONG_B:
            raise WrongSpaceClass(
                f"{space.name} is a plain b-metric space; "
                "the probe needs tail certificates"
            )
        certificates: tuple[TailCertificate | None, ...] = (None,) * 4
    else:
        certificates = (tails.xy, tails.zw, tails.xz, tails.yw)

    first_gap = evaluate(x, z, certificates[2])
    second_gap = evaluate(y, w, certificates[3])
    first_equivalence = judge(first_gap, epsilon)
    second_equivalence = judge(second_gap, epsilon)
    if Equivalence.EQUIVALENT is not first_equivalence \
            or Equivalence.EQUIVALENT is not second_equivalence:
        raise NotEquivalentInputs(
            f"x ~ z is {first_equivalence.value}, "
            f"y ~ w is {second_equivalence.value}"
        )

    first_limit = evaluate(x, y, certificates[0])
    second_limit = evaluate(z, w, certificates[1])
    return ProbeReport(
        first_limit=first_limit,
        second_limit=second_limit,
        first_gap=first_gap,
        second_gap=second_gap,
        first_equivalence=first_equivalence,
        second_equivalence=second_equivalence,
        clash=first_limit.disjoint(second_limit),
    )


__all__ = [
    "BadModulus",
    "CauchySequence",
    "CompletionPoint",
    "DensityWitness",
    "Equivalence",
    "MixedSpaces",
    "ModulusViolation",
    "NotEquivalentInputs",
    "ProbeReport",
    "ProbeTails",
    "SpaceClass",
    "SpacePresentation",
    "TailCertificate",
    "WrongSpaceClass",
    "density_witness",
    "dstar_estimate",
    "dstar_interval",
    "embed",
    "equivalent_at",
    "judge",
    "limit_point",
    "same_space",
    "sample_pairs",
    "strong_triangle_check",
    "tail_index",
    "validate_modulus",
    "wellposedness_probe",
]
