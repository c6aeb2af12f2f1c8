# Copyright 2026 strongb contributors
# Licensed under GNU GPLv3 or later
# See https://www.gnu.org/licenses/gpl-3.0.en.html
"""Text formats for spaces, maps and reports.

Space file:

    points: 3
    labels: 1 2 3
    matrix:
    0 2 6
    2 0 1
    6 1 0

Map file:

    map:
    1 -> 2
    2 -> 3
    3 -> 1

Rationals are written `p/q` in lowest terms, integers as bare `p`.
Blank lines and lines starting with # are ignored.
"""

from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
import re
import typing as t

from strongb.fixed_point import InvalidMap, SetValuedMap
from strongb.spaces import FiniteSpace, validate_space


RATIONAL = re.compile(r"-?\d+(?:/\d+)?")

# Report fields that hold points (or collections of points).
POINT_FIELDS = {
    "ball",
    "center",
    "fixed_points",
    "inner_ball",
    "intersection",
    "pair",
    "point",
    "points",
    "start",
    "targets",
    "triple",
    "vacuous_pairs",
    "x",
    "x0",
    "y",
}

# Dataclasses that are one of several alternatives get a "kind" tag.
OUTCOME_TAGS = {"FixedPoint", "Cycle", "Exhausted"}


class ParseError(ValueError):
    """Raised on malformed input, with a 1-based line number."""
    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(
            message if line is None else f"line {line}: {message}"
        )
        self.message = message
        self.line = line


def parse_rational(text: str, line: int | None = None) -> Fraction:
    """Parse `p/q` or `p`."""
    if not RATIONAL.fullmatch(text):
        raise ParseError(f"malformed rational {text!r}", line)
    numerator, _, denominator = text.partition("/")
    if denominator and int(denominator) == 0:
        raise ParseError(f"zero denominator in {text!r}", line)
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction) -> str:
    """Format as `p/q` in lowest terms, or `p` for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _content_lines(text: str) -> list[tuple[int, str]]:
    result = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            result.append((number, stripped))
    return result


def _header(
    lines: list[tuple[int, str]],
    position: int,
    key: str,
) -> tuple[int, str] | None:
    if position >= len(lines):
        return None
    number, line = lines[position]
    name, colon, value = line.partition(":")
    if not colon or name.strip() != key:
        return None
    return number, value.strip()


def parse_space(text: str) -> FiniteSpace:
    """Parse a space file.

    Sections after the matrix (map and parameter lines) are ignored here.
    Raises `ParseError`, or `InvalidSpace` if the matrix breaks an axiom.
    """
    lines = _content_lines(text)
    header = _header(lines, 0, "points")
    if header is None:
        first = lines[0][0] if lines else 1
        raise ParseError("expected 'points: <n>'", first)
    number, value = header
    if not value.isdigit() or int(value) < 1:
        raise ParseError(f"bad point count {value!r}", number)
    size = int(value)

    position = 1
    labels: list[str] | None = None
    if (found := _header(lines, position, "labels")) is not None:
        number, value = found
        labels = value.split()
        if len(labels) != size:
            raise ParseError(f"expected {size} labels, got {len(labels)}",
                             number)
        position += 1

    found = _header(lines, position, "matrix")
    if found is None or found[1]:
        number = lines[position][0] if position < len(lines) else None
        raise ParseError("expected 'matrix:'", number)
    position += 1

    rows: list[list[Fraction]] = []
    for _ in range(size):
        if position >= len(lines):
            raise ParseError(f"expected {size} matrix rows, got {len(rows)}",
                             lines[-1][0])
        number, line = lines[position]
        entries = [parse_rational(entry, number) for entry in line.split()]
        if len(entries) != size:
            raise ParseError(f"expected {size} entries, got {len(entries)}",
                             number)
        rows.append(entries)
        position += 1
    if position < len(lines) and ":" not in lines[position][1]:
        number, _ = lines[position]
        raise ParseError(f"more than {size} matrix rows", number)
    return validate_space(labels, rows)


def load_space(path: Path) -> FiniteSpace:
    """Read a space file."""
    return parse_space(path.read_text(encoding="utf-8"))


def dump_space(space: FiniteSpace) -> str:
    """Write a space in the format read by `parse_space`."""
    lines = [
        f"points: {len(space)}",
        f"labels: {' '.join(space.labels)}",
        "matrix:",
    ]
    for row in space.matrix:
        lines.append(" ".join(format_rational(entry) for entry in row))
    return "\n".join(lines) + "\n"


def parse_map(text: str, space: FiniteSpace) -> SetValuedMap:
    """Parse the `map:` section of a file against the labels of `space`."""
    lines = _content_lines(text)
    start = next(
        (index for index, (_, line) in enumerate(lines) if line == "map:"),
        None,
    )
    if start is None:
        raise ParseError("expected 'map:'")

    targets: dict[int, frozenset[int]] = {}
    for number, line in lines[start + 1:]:
        if "->" not in line:
            break
        source, _, images = line.partition("->")
        point = _point(space, source.strip(), number)
        if point in targets:
            raise ParseError(f"point {source.strip()} mapped twice", number)
        image = frozenset(
            _point(space, name, number) for name in images.split()
        )
        if not image:
            raise ParseError(f"empty targets for {source.strip()}", number)
        targets[point] = image

    missing = [space.label(x) for x in space.points if x not in targets]
    if missing:
        raise ParseError(f"no targets for points {' '.join(missing)}")
    try:
        return SetValuedMap(tuple(targets[x] for x in space.points))
    except InvalidMap as exc:
        raise ParseError(str(exc)) from exc


def load_map(path: Path, space: FiniteSpace) -> SetValuedMap:
    """Read a map file."""
    return parse_map(path.read_text(encoding="utf-8"), space)


def _point(space: FiniteSpace, label: str, line: int) -> int:
    try:
        return space.labels.index(label)
    except ValueError:
        raise ParseError(f"unknown point {label!r}", line) from None


def dump_map(space: FiniteSpace, T: SetValuedMap) -> str:
    """Write a map in the format read by `parse_map`."""
    lines = ["map:"]
    for x in space.points:
        images = " ".join(space.label(y) for y in sorted(T(x)))
        lines.append(f"{space.label(x)} -> {images}")
    return "\n".join(lines) + "\n"


def dump_counterexample(
    space: FiniteSpace,
    T: SetValuedMap,
    x0: int,
    r: Fraction,
    k: Fraction,
    K: Fraction,
) -> str:
    """Write a space, a map and its parameter lines as one document.

    The result is readable by `parse_space`, `parse_map` and
    `parse_parameters`.
    """
    parameters = [
        f"x0: {space.label(x0)}",
        f"r: {format_rational(r)}",
        f"k: {format_rational(k)}",
        f"K: {format_rational(K)}",
    ]
    return "".join([
        dump_space(space),
        dump_map(space, T),
        "\n".join(parameters) + "\n",
    ])


def parse_parameters(text: str) -> dict[str, Fraction | str]:
    """Parse `key: value` parameter lines (x0, r, k, K) after a map section."""
    result: dict[str, Fraction | str] = {}
    for number, line in _content_lines(text):
        key, colon, value = line.partition(":")
        key = key.strip()
        if not colon or key not in ("x0", "r", "k", "K"):
            continue
        value = value.strip()
        result[key] = value if key == "x0" else parse_rational(value, number)
    return result


def to_jsonable(
    value: object,
    label: t.Callable[[int], str] | None = None,
    key: str = "",
) -> object:
    """Convert a report into JSON-compatible data.

    Rationals become strings and sets become sorted lists.
    If `label` is given, point indices in `POINT_FIELDS` are replaced by
    their labels.
    """
    if label is not None and key in POINT_FIELDS:
        return _label_points(value, label)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Enum):
        return value.value
    if is_dataclass(value) and not isinstance(value, type):
        data: dict[str, object] = {}
        if type(value).__name__ in OUTCOME_TAGS:
            data["kind"] = type(value).__name__
        for item in fields(value):
            data[item.name] = to_jsonable(getattr(value, item.name), label,
                                          item.name)
        return data
    if isinstance(value, dict):
        return {
            str(name): to_jsonable(item, label, str(name))
            for name, item in value.items()
        }
    if isinstance(value, (set, frozenset)):
        return [to_jsonable(item, label, key) for item in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item, label, key) for item in value]
    return value


def _label_points(value: object, label: t.Callable[[int], str]) -> object:
    if isinstance(value, int) and not isinstance(value, bool):
        return label(value)
    if isinstance(value, (set, frozenset)):
        return [_label_points(item, label) for item in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [_label_points(item, label) for item in value]
    return value


def render_human(data: object, indent: int = 0) -> str:
    """Render JSON-compatible data as indented `key: value` lines."""
    pad = "  " * indent
    if isinstance(data, dict):
        lines = []
        for key, value in data.items():
            if _is_scalar(value) or _is_flat_list(value):
                lines.append(f"{pad}{key}: {_scalar(value)}")
            else:
                lines.append(f"{pad}{key}:")
                lines.append(render_human(value, indent + 1))
        return "\n".join(line for line in lines if line)
    if isinstance(data, list):
        lines = []
        for item in data:
            if _is_scalar(item) or _is_flat_list(item):
                lines.append(f"{pad}- {_scalar(item)}")
            else:
                body = render_human(item, indent + 1).lstrip()
                lines.append(f"{pad}- {body}")
        return "\n".join(lines)
    return f"{pad}{_scalar(data)}"


def _is_scalar(value: object) -> bool:
    return not isinstance(value, (dict, list))


def _is_flat_list(value: object) -> bool:
    return isinstance(value, list) and all(
        _is_scalar(item) or _is_flat_list(item) for item in value
    )


def _scalar(value: object) -> str:
    if isinstance(value, list):
        if not value:
            return "(none)"
        return " ".join(
            f"({_scalar(item)})" if isinstance(item, list) else _scalar(item)
            for item in value
        )
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


__all__ = [
    "ParseError",
    "dump_counterexample",
    "dump_map",
    "dump_space",
    "format_rational",
    "load_map",
    "load_space",
    "parse_map",
    "parse_parameters",
    "parse_rational",
    "parse_space",
    "render_human",
    "to_jsonable",
]
