# Copyright 2026 strongb contributors
# Licensed under GNU GPLv3 or later
# See https://www.gnu.org/licenses/gpl-3.0.en.html
"""Finite distance spaces with exact rational distances.

Distances are `fractions.Fraction` values throughout; nothing in this module
touches floating point.
Points are 0-based indices into the space; labels are only used for display.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import permutations, product
import typing as t


Rational: t.TypeAlias = Fraction
Point: t.TypeAlias = int
Triple: t.TypeAlias = tuple[Point, Point, Point]
Matrix: t.TypeAlias = tuple[tuple[Fraction, ...], ...]

ONE = Fraction(1)
ZERO = Fraction(0)


def as_rational(value: object) -> Fraction:
    """Convert an exact number to a Fraction.

    Floats are rejected: a float distance is already rounded.
    """
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def _one_based(x: Point) -> str:
    return str(x + 1)


@dataclass(frozen=True)
class NonSquare:
    """Row `row` has `length` entries instead of `expected`."""
    row: int
    length: int
    expected: int

    def describe(self, name: t.Callable[[Point], str] = _one_based) -> str:
        """Message with points shown by `name`."""
        return (
            f"row {name(self.row)} has {self.length} entries, "
            f"expected {self.expected}"
        )


@dataclass(frozen=True)
class LabelMismatch:
    """Number of labels doesn't match the matrix size."""
    labels: int
    size: int

    def describe(self, name: t.Callable[[Point], str] = _one_based) -> str:
        """Message; there are no points to name."""
        return f"{self.labels} labels for {self.size} points"


@dataclass(frozen=True)
class DuplicateLabel:
    """Two points share a label."""
    label: str

    def describe(self, name: t.Callable[[Point], str] = _one_based) -> str:
        """Message; there are no points to name."""
        return f"duplicate label {self.label!r}"


@dataclass(frozen=True)
class AsymmetricEntry:
    """D(i,j) != D(j,i)."""
    i: Point
    j: Point

    def describe(self, name: t.Callable[[Point], str] = _one_based) -> str:
        """Message with points shown by `name`."""
        return f"asymmetric entry ({name(self.i)}, {name(self.j)})"


@dataclass(frozen=True)
class NonzeroDiagonal:
    """D(i,i) != 0."""
    i: Point

    def describe(self, name: t.Callable[[Point], str] = _one_based) -> str:
        """Message with points shown by `name`."""
        return f"nonzero diagonal entry ({name(self.i)}, {name(self.i)})"


@dataclass(frozen=True)
class ZeroOffDiagonal:
    """D(i,j) = 0 for i != j."""
    i: Point
    j: Point

    def describe(self, name: t.Callable[[Point], str] = _one_based) -> str:
        """Message with points shown by `name`."""
        return f"zero off-diagonal entry ({name(self.i)}, {name(self.j)})"


@dataclass(frozen=True)
class NegativeEntry:
    """D(i,j) < 0."""
    i: Point
    j: Point

    def describe(self, name: t.Callable[[Point], str] = _one_based) -> str:
        """Message with points shown by `name`."""
        return f"negative entry ({name(self.i)}, {name(self.j)})"


AxiomViolation: t.TypeAlias = (
    NonSquare
    | LabelMismatch
    | DuplicateLabel
    | AsymmetricEntry
    | NonzeroDiagonal
    | ZeroOffDiagonal
    | NegativeEntry
)


class InvalidSpace(ValueError):
    """Raised when a distance matrix violates the semimetric axioms.

    Violations keep 0-based indices. Messages name points by label, or
    1..n when the labels don't fit the matrix.
    """
    def __init__(
        self,
        violations: list[AxiomViolation],
        labels: t.Sequence[str] | None = None,
    ) -> None:
        self.violations = violations
        self.labels = labels
        super().__init__("; ".join(self.describe()))

    def name(self, x: Point) -> str:
        """Label of point `x`."""
        if self.labels is None:
            return _one_based(x)
        return self.labels[x]

    def describe(self) -> list[str]:
        """One message per violation."""
        return [violation.describe(self.name) for violation in self.violations]


class NotStrongB(ValueError):
    """Raised when a space isn't a strong b-metric space with constant K."""
    def __init__(self, K: Fraction, minimal: Fraction) -> None:
        super().__init__(f"not a strong b-metric space with K = {K} "
                         f"(least constant is {minimal})")
        self.K = K
        self.minimal = minimal


class InvalidRadius(ValueError):
    """Raised when a ball radius isn't positive."""


class EmptySet(ValueError):
    """Raised when dist or delta gets an empty set."""


class BadPoint(ValueError):
    """Raised for a point index or label that isn't in the space."""


class CertificateFailure(AssertionError):
    """Raised when a certificate fails its own enumeration check."""


def find_violations(
    matrix: t.Sequence[t.Sequence[Fraction]],
    labels: t.Sequence[str] | None = None,
) -> list[AxiomViolation]:
    """Return every violated semimetric axiom, with witness indices.

    Symmetry violations are reported once per unordered pair.
    If the matrix isn't square, only the shape errors are reported.
    """
    size = len(matrix)
    result: list[AxiomViolation] = []
    for row, entries in enumerate(matrix):
        if len(entries) != size:
            result.append(NonSquare(row, len(entries), size))
    if labels is not None:
        if len(labels) != size:
            result.append(LabelMismatch(len(labels), size))
        seen: set[str] = set()
        for label in labels:
            if label in seen:
                result.append(DuplicateLabel(label))
            seen.add(label)
    if any(isinstance(v, NonSquare) for v in result):
        return result

    for i in range(size):
        if matrix[i][i] != 0:
            result.append(NonzeroDiagonal(i))
        if matrix[i][i] < 0:
            result.append(NegativeEntry(i, i))
    for i, j in product(range(size), repeat=2):
        if i == j:
            continue
        if i < j and matrix[i][j] != matrix[j][i]:
            result.append(AsymmetricEntry(i, j))
        if matrix[i][j] < 0:
            result.append(NegativeEntry(i, j))
        elif matrix[i][j] == 0:
            result.append(ZeroOffDiagonal(i, j))
    return result


@dataclass(frozen=True)
class FiniteSpace:
    """Finite semimetric space.

    Construction fails with `InvalidSpace` unless the matrix is square,
    symmetric, zero exactly on the diagonal, and nonnegative.
    """
    labels: tuple[str, ...]
    matrix: Matrix

    def __post_init__(self) -> None:
        if violations := find_violations(self.matrix, self.labels):
            fits = len(self.labels) == len(self.matrix)
            raise InvalidSpace(violations, self.labels if fits else None)

    def __len__(self) -> int:
        return len(self.matrix)

    @property
    def points(self) -> range:
        """All point indices."""
        return range(len(self.matrix))

    def d(self, x: Point, y: Point) -> Fraction:
        """Distance between two points."""
        return self.matrix[x][y]

    def label(self, x: Point) -> str:
        """Display name of a point."""
        return self.labels[x]

    def index(self, label: str) -> Point:
        """Point index for a label."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise BadPoint(f"unknown point {label!r}") from None

    def check_point(self, x: Point) -> Point:
        """Return `x` if it is a point of the space."""
        if not 0 <= x < len(self):
            raise BadPoint(f"point index {x} out of range")
        return x


def validate_space(
    labels: t.Sequence[str] | None,
    matrix: t.Sequence[t.Sequence[object]],
) -> FiniteSpace:
    """Build a FiniteSpace from labels and a matrix of exact numbers.

    Labels default to "1", ..., "n".
    Raises `InvalidSpace` listing every violated axiom.
    """
    rows = tuple(tuple(as_rational(entry) for entry in row) for row in matrix)
    if labels is None:
        labels = [str(i + 1) for i in range(len(rows))]
    return FiniteSpace(tuple(labels), rows)


class Constant(Enum):
    """Generalized-metric classes with a relaxation constant."""
    B = "b"
    STRONG_B = "strong-b"
    METRIC_TYPE = "metric-type"


def _b_ratios(space: FiniteSpace) -> t.Iterator[tuple[Fraction, Triple]]:
    d = space.d
    for x, y, z in product(space.points, repeat=3):
        total = d(x, y) + d(y, z)
        if total > 0:
            yield d(x, z) / total, (x, y, z)


def _strong_b_ratios(
    space: FiniteSpace,
) -> t.Iterator[tuple[Fraction, Triple]]:
    # The inequality D(x,z) <= D(x,y) + K D(y,z) isn't symmetric in x and z,
    # so every ordered triple is scanned.
    d = space.d
    for x, y, z in product(space.points, repeat=3):
        if d(y, z) > 0:
            yield (d(x, z) - d(x, y)) / d(y, z), (x, y, z)


def shortest_paths(space: FiniteSpace) -> list[list[Fraction]]:
    """All-pairs shortest path lengths in the complete graph weighted by D.

    Exact Floyd-Warshall relaxation.
    """
    table = [list(row) for row in space.matrix]
    for k in space.points:
        for i in space.points:
            through = table[i][k]
            for j in space.points:
                if through + table[k][j] < table[i][j]:
                    table[i][j] = through + table[k][j]
    return table


def _metric_type_ratios(
    space: FiniteSpace,
) -> t.Iterator[tuple[Fraction, tuple[Point, Point]]]:
    # The least chain sum between x and z is the shortest path, so it binds.
    paths = shortest_paths(space)
    for x, z in product(space.points, repeat=2):
        if x != z:
            yield space.d(x, z) / paths[x][z], (x, z)


def _ratios(
    space: FiniteSpace,
    constant: Constant,
) -> t.Iterator[tuple[Fraction, tuple[Point, ...]]]:
    if constant is Constant.B:
        return _b_ratios(space)
    if constant is Constant.STRONG_B:
        return _strong_b_ratios(space)
    return _metric_type_ratios(space)


def min_constant(space: FiniteSpace, constant: Constant) -> Fraction:
    """Least K >= 1 for which the space belongs to the class."""
    return max([ONE, *(ratio for ratio, _ in _ratios(space, constant))])


def min_b_constant(space: FiniteSpace) -> Fraction:
    """Least K with D(x,z) <= K[D(x,y) + D(y,z)] for all triples."""
    return min_constant(space, Constant.B)


def min_strong_b_constant(space: FiniteSpace) -> Fraction:
    """Least K with D(x,z) <= D(x,y) + K D(y,z) for all ordered triples."""
    return min_constant(space, Constant.STRONG_B)


def min_metric_type_constant(space: FiniteSpace) -> Fraction:
    """Least K with D(x,z) <= K[D(x,y1) + ... + D(yn,z)] for all chains."""
    return min_constant(space, Constant.METRIC_TYPE)


def binding_instance(
    space: FiniteSpace,
    constant: Constant,
) -> tuple[Point, ...] | None:
    """Return the first triple (a pair for metric-type) attaining the constant.

    Returns None if no instance reaches 1, which only happens for a
    single-point space.
    """
    best: tuple[Fraction, tuple[Point, ...]] | None = None
    for ratio, witness in _ratios(space, constant):
        if best is None or ratio > best[0]:
            best = (ratio, witness)
    if best is None or best[0] < ONE:
        return None
    return best[1]


def b_violation(space: FiniteSpace, K: Fraction) -> Triple | None:
    """Return a triple violating the b-inequality with constant K, if any."""
    d = space.d
    for x, y, z in product(space.points, repeat=3):
        if d(x, z) > K * (d(x, y) + d(y, z)):
            return (x, y, z)
    return None


def strong_b_violation(space: FiniteSpace, K: Fraction) -> Triple | None:
    """Return a triple violating the strong b-inequality with constant K."""
    d = space.d
    for x, y, z in product(space.points, repeat=3):
        if d(x, z) > d(x, y) + K * d(y, z):
            return (x, y, z)
    return None


def metric_type_violation(
    space: FiniteSpace,
    K: Fraction,
) -> tuple[Point, Point] | None:
    """Return a pair whose shortest chain violates the chain inequality."""
    paths = shortest_paths(space)
    for x, z in product(space.points, repeat=2):
        if space.d(x, z) > K * paths[x][z]:
            return (x, z)
    return None


@dataclass(frozen=True)
class InequalityInstance:
    """One instance D(x,z) <= bound of a relaxed triangle inequality."""
    triple: Triple
    distance: Fraction
    bound: Fraction
    holds: bool = field(init=False)
    tight: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "holds", self.distance <= self.bound)
        object.__setattr__(self, "tight", self.distance == self.bound)


def _distinct_triples(space: FiniteSpace) -> t.Iterator[Triple]:
    return permutations(space.points, 3)


def strong_b_trace(
    space: FiniteSpace,
    K: Fraction,
) -> list[InequalityInstance]:
    """Instances D(x,z) <= D(x,y) + K D(y,z) over distinct ordered triples.

    Triples with repeated points are tautologies for any K >= 1.
    """
    d = space.d
    return [
        InequalityInstance((x, y, z), d(x, z), d(x, y) + K * d(y, z))
        for x, y, z in _distinct_triples(space)
    ]


def b_trace(space: FiniteSpace, K: Fraction) -> list[InequalityInstance]:
    """Instances D(x,z) <= K[D(x,y) + D(y,z)] over distinct ordered triples."""
    d = space.d
    return [
        InequalityInstance((x, y, z), d(x, z), K * (d(x, y) + d(y, z)))
        for x, y, z in _distinct_triples(space)
    ]


@dataclass(frozen=True)
class TriangleViolation:
    """D(x,z) > D(x,y) + D(y,z)."""
    triple: Triple
    instance: str
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class ClassificationReport:
    """Which generalized-metric classes a finite space belongs to."""
    is_semimetric: bool
    min_b_constant: Fraction
    min_strong_b_constant: Fraction
    min_metric_type_constant: Fraction
    is_metric: bool
    violations: tuple[TriangleViolation, ...]


def triangle_violations(space: FiniteSpace) -> list[TriangleViolation]:
    """Return triangle inequality violations, one per unordered endpoint pair.

    Triples are reported with x < z; the mirrored triple violates too.
    """
    d = space.d
    name = space.label
    result = []
    for x, y, z in _distinct_triples(space):
        if x > z:
            continue
        lhs = d(x, z)
        rhs = d(x, y) + d(y, z)
        if lhs > rhs:
            instance = (
                f"D({name(x)},{name(z)}) <= "
                f"D({name(x)},{name(y)}) + D({name(y)},{name(z)})"
            )
            result.append(TriangleViolation((x, y, z), instance, lhs, rhs))
    return result


def classify(space: FiniteSpace) -> ClassificationReport:
    """Compute every minimal constant and the triangle violations."""
    violations = tuple(triangle_violations(space))
    strong = min_strong_b_constant(space)
    return ClassificationReport(
        is_semimetric=True,
        min_b_constant=min_b_constant(space),
        min_strong_b_constant=strong,
        min_metric_type_constant=min_metric_type_constant(space),
        is_metric=strong == ONE,
        violations=violations,
    )


def _check_radius(radius: Fraction) -> None:
    if radius <= 0:
        raise InvalidRadius(f"radius must be positive: {radius}")


def ball(
    space: FiniteSpace,
    center: Point,
    radius: Fraction,
) -> frozenset[Point]:
    """Open ball {x : D(center,x) < radius}."""
    space.check_point(center)
    _check_radius(radius)
    return frozenset(x for x in space.points if space.d(center, x) < radius)


@dataclass(frozen=True)
class BallCertificate:
    """B(point, radius) is contained in the enclosing ball."""
    point: Point
    radius: Fraction
    inner_ball: frozenset[Point]


def ball_openness_certificate(
    space: FiniteSpace,
    K: Fraction,
    center: Point,
    radius: Fraction,
) -> list[BallCertificate]:
    """Certify that B(center, radius) is open in a strong b-metric space.

    Every y in the ball gets the inner radius (radius - D(center,y)) / K.
    Each inclusion is rechecked by enumeration.
    """
    minimal = min_strong_b_constant(space)
    if minimal > K:
        raise NotStrongB(K, minimal)

    outer = ball(space, center, radius)
    result = []
    for y in sorted(outer):
        inner_radius = (radius - space.d(center, y)) / K
        inner = ball(space, y, inner_radius)
        if not inner <= outer:
            raise CertificateFailure(
                f"B({y}, {inner_radius}) is not inside B({center}, {radius})"
            )
        result.append(BallCertificate(y, inner_radius, inner))
    return result


def dist_point_set(
    space: FiniteSpace,
    x: Point,
    A: t.Collection[Point],
) -> Fraction:
    """dist(x, A) = min of D(x,a) over a in A."""
    if not A:
        raise EmptySet("dist(x, A) needs a nonempty A")
    return min(space.d(x, a) for a in A)


def delta_set_set(
    space: FiniteSpace,
    A: t.Collection[Point],
    B: t.Collection[Point],
) -> Fraction:
    """delta(A, B) = max of dist(x, A) over x in B.

    Not symmetric: distances are measured to A, the max is over B.
    """
    if not B:
        raise EmptySet("delta(A, B) needs a nonempty B")
    return max(dist_point_set(space, x, A) for x in B)


def relabel(space: FiniteSpace, permutation: t.Sequence[Point]) -> FiniteSpace:
    """Move old point i to position permutation[i]."""
    size = len(space)
    if sorted(permutation) != list(space.points):
        raise BadPoint(f"not a permutation of {size} points: {permutation}")
    inverse = [0] * size
    for old, new in enumerate(permutation):
        inverse[new] = old
    matrix = tuple(
        tuple(space.d(inverse[i], inverse[j]) for j in range(size))
        for i in range(size)
    )
    labels = tuple(space.label(inverse[i]) for i in range(size))
    return FiniteSpace(labels, matrix)


def upper_triangle(space: FiniteSpace) -> tuple[Fraction, ...]:
    """Entries above the diagonal, row by row."""
    return tuple(
        space.d(i, j) for i in space.points for j in space.points if i < j
    )


def canonical_form(space: FiniteSpace) -> tuple[Fraction, ...]:
    """Least upper triangle over all relabelings.

    Two spaces are isometric up to relabeling iff their canonical forms match.
    """
    size = len(space)
    return min(
        tuple(
            space.d(p[i], p[j])
            for i in range(size) for j in range(size) if i < j
        )
        for p in permutations(space.points)
    )


__all__ = [
    "AsymmetricEntry",
    "BallCertificate",
    "BadPoint",
    "CertificateFailure",
    "ClassificationReport",
    "Constant",
    "DuplicateLabel",
    "EmptySet",
    "FiniteSpace",
    "InequalityInstance",
    "InvalidRadius",
    "InvalidSpace",
    "LabelMismatch",
    "NegativeEntry",
    "NonSquare",
    "NonzeroDiagonal",
    "NotStrongB",
    "TriangleViolation",
    "ZeroOffDiagonal",
    "as_rational",
    "b_trace",
    "b_violation",
    "ball",
    "ball_openness_certificate",
    "binding_instance",
    "canonical_form",
    "classify",
    "delta_set_set",
    "dist_point_set",
    "find_violations",
    "metric_type_violation",
    "min_b_constant",
    "min_constant",
    "min_metric_type_constant",
    "min_strong_b_constant",
    "relabel",
    "shortest_paths",
    "strong_b_trace",
    "strong_b_violation",
    "triangle_violations",
    "upper_triangle",
    "validate_space",
]
