# Copyright 2026 strongb contributors
# Licensed under GNU GPLv3 or later
# See https://www.gnu.org/licenses/gpl-3.0.en.html
"""Classify finite distance spaces, check fixed-point hypotheses, search for
counterexamples and evaluate completion distances.

Exit status is 0 on success, 1 on a mathematical negative (axiom violated,
hypothesis failed, clash detected) and 2 on input errors.
"""

from argparse import ArgumentParser, ArgumentTypeError, Namespace
from fractions import Fraction
import json
import logging
from pathlib import Path
import sys
import typing as t

from strongb.completion import (
    BadModulus,
    CompletionPoint,
    SpaceClass,
    WrongSpaceClass,
    density_witness,
    dstar_estimate,
    dstar_interval,
    equivalent_at,
    validate_modulus,
    wellposedness_probe,
)
from strongb.demos import (
    DEMOS,
    example_2_1_space,
    replay_example_2_1,
    replay_example_3,
)
from strongb.fixed_point import check_hypotheses, picard_trajectory
from strongb.formats import (
    ParseError,
    dump_counterexample,
    load_map,
    load_space,
    parse_map,
    parse_parameters,
    parse_rational,
    render_human,
    to_jsonable,
)
from strongb.presentations import (
    EXAMPLE_3,
    example_3_quadruple,
    get_presentation,
    parse_sequence,
)
from strongb.search import SearchConfig, find_counterexamples
from strongb.spaces import (
    Constant,
    InvalidSpace,
    NotStrongB,
    ball,
    ball_openness_certificate,
    binding_instance,
    classify,
    min_constant,
    min_strong_b_constant,
)


SUCCESS = 0
NEGATIVE = 1
INPUT_ERROR = 2
INTERRUPTED = 130

# Bad arguments and files. Every domain input error is a ValueError.
INPUT_ERRORS = (OSError, ValueError)

Label: t.TypeAlias = t.Callable[[int], str] | None


def rational(text: str) -> Fraction:
    """argparse type for `p/q` rationals."""
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise ArgumentTypeError(exc.message) from None


def rationals(text: str) -> tuple[Fraction, ...]:
    """argparse type for comma-separated rationals."""
    return tuple(rational(item) for item in text.split(","))


def add_space_file(parser: ArgumentParser) -> None:
    """Add the positional space file argument."""
    parser.add_argument("space", type=Path, help="space file")


def parse_args(argv: list[str] | None = None) -> Namespace:
    """Parse command-line arguments."""
    parser = ArgumentParser(prog="strongb", description=__doc__)
    parser.add_argument(
        "--format",
        dest="format",
        choices=["human", "json"],
        default="human",
        help="output format (default: human)",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        dest="verbose",
        default=0,
        action="count",
        help="log more (repeatable)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser(
        "check",
        help="check the axioms and classify a space",
    )
    add_space_file(check)

    constants = commands.add_parser(
        "constants",
        help="minimal b, strong b and metric-type constants",
    )
    add_space_file(constants)

    ball_parser = commands.add_parser(
        "ball",
        help="open ball with an openness certificate",
    )
    add_space_file(ball_parser)
    ball_parser.add_argument("--center", required=True, help="center label")
    ball_parser.add_argument("--radius", required=True, type=rational)
    ball_parser.add_argument(
        "--K",
        dest="K",
        type=rational,
        default=None,
        help="strong b-metric constant (default: least one)",
    )

    fixed = commands.add_parser(
        "fixed-point",
        help="check the fixed-point hypotheses for a map",
    )
    add_space_file(fixed)
    fixed.add_argument(
        "map",
        type=Path,
        nargs="?",
        default=None,
        help="map file (default: the map section of the space file)",
    )
    fixed.add_argument("--x0", default=None, help="initial point label")
    fixed.add_argument("--r", dest="r", type=rational, default=None)
    fixed.add_argument("--k", dest="k", type=rational, default=None)
    fixed.add_argument(
        "--K",
        dest="K",
        type=rational,
        default=None,
        help="strong b-metric constant (default: least one)",
    )
    fixed.add_argument(
        "--trajectory",
        dest="trajectory",
        type=int,
        default=None,
        metavar="STEPS",
        help="also iterate a single-valued map from x0",
    )

    search = commands.add_parser(
        "search",
        help="search small spaces for fixed-point-free counterexamples",
    )
    search.add_argument("--n", dest="n", type=int, required=True)
    search.add_argument("--palette", type=rationals, required=True)
    search.add_argument("--k", dest="k", type=rationals, required=True)
    search.add_argument("--r", dest="r", type=rationals, required=True)
    search.add_argument(
        "--canonical",
        default=False,
        action="store_true",
        help="skip relabelings of spaces already enumerated",
    )
    search.add_argument("--max-results", type=int, default=100)
    search.add_argument("--max-constant", type=rational, default=None)
    search.add_argument("--jobs", type=int, default=1)

    complete = commands.add_parser(
        "complete",
        help="evaluate distances in the completion of a presentation",
    )
    complete.add_argument(
        "presentation",
        help="rationals-abs, example-3 or finite:<file>",
    )
    complete.add_argument("--a", dest="a", default=None, help="sequence")
    complete.add_argument("--b", dest="b", default=None, help="sequence")
    complete.add_argument(
        "--c",
        dest="c",
        default=None,
        help="probe: sequence equivalent to --a",
    )
    complete.add_argument(
        "--d",
        dest="d",
        default=None,
        help="probe: sequence equivalent to --b",
    )
    complete.add_argument("--i", dest="i", type=int, default=100)
    complete.add_argument(
        "--probe",
        default=False,
        action="store_true",
        help="test whether the distance limit is well defined",
    )
    complete.add_argument(
        "--epsilon",
        type=rational,
        default=Fraction(1, 10),
    )
    complete.add_argument("--samples", type=int, default=8)

    demo = commands.add_parser("demo", help="replay a worked example")
    demo.add_argument("name", choices=DEMOS)
    demo.add_argument("--i", dest="i", type=int, default=100)
    return parser.parse_args(argv)


def emit(args: Namespace, report: object, label: Label = None) -> None:
    """Print a report in the selected format."""
    data = to_jsonable(report, label)
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(render_human(data))


def run_check(args: Namespace) -> int:
    """Classify a space. A non-metric or invalid matrix is a negative."""
    try:
        space = load_space(args.space)
    except InvalidSpace as exc:
        emit(args, {"valid": False,
                    "violations": exc.describe()})
        return NEGATIVE
    report = classify(space)
    emit(args, report, space.label)
    return SUCCESS if report.is_metric else NEGATIVE


def run_constants(args: Namespace) -> int:
    """Print the three minimal constants with their binding instances."""
    space = load_space(args.space)
    data: dict[str, object] = {}
    for constant in Constant:
        witness = binding_instance(space, constant)
        field = "pair" if constant is Constant.METRIC_TYPE else "triple"
        data[constant.value] = {
            "constant": min_constant(space, constant),
            field: witness,
        }
    emit(args, data, space.label)
    return SUCCESS


def run_ball(args: Namespace) -> int:
    """Print an open ball and its openness certificate."""
    space = load_space(args.space)
    center = space.index(args.center)
    K = args.K if args.K is not None else min_strong_b_constant(space)
    members = ball(space, center, args.radius)
    try:
        certificates = ball_openness_certificate(space, K, center,
                                                 args.radius)
    except NotStrongB as exc:
        emit(args, {
            "center": center,
            "radius": args.radius,
            "ball": members,
            "K": K,
            "error": str(exc),
        }, space.label)
        return NEGATIVE
    emit(args, {
        "center": center,
        "radius": args.radius,
        "ball": members,
        "K": K,
        "certificates": certificates,
    }, space.label)
    return SUCCESS


def _parameter(
    args: Namespace,
    parameters: dict[str, Fraction | str],
    key: str,
) -> t.Any:
    value = getattr(args, key)
    if value is not None:
        return value
    if key in parameters:
        return parameters[key]
    if key == "K":
        return None
    raise ParseError(f"missing --{key} (not in the space file either)")


def run_fixed_point(args: Namespace) -> int:
    """Check both hypotheses; failing either one is a negative."""
    space = load_space(args.space)
    text = args.space.read_text(encoding="utf-8")
    if args.map is None:
        T = parse_map(text, space)
    else:
        T = load_map(args.map, space)
    parameters = parse_parameters(text)
    x0 = space.index(str(_parameter(args, parameters, "x0")))
    r = _parameter(args, parameters, "r")
    k = _parameter(args, parameters, "k")
    K = _parameter(args, parameters, "K") or min_strong_b_constant(space)
    try:
        report = check_hypotheses(space, K, T, x0, r, k)
    except NotStrongB as exc:
        emit(args, {"K": K, "error": str(exc)})
        return NEGATIVE

    if args.trajectory is None:
        emit(args, report, space.label)
    else:
        trajectory = picard_trajectory(space, T, x0, args.trajectory)
        emit(args, {"hypotheses": report, "trajectory": trajectory},
             space.label)
    return SUCCESS if report.all_hold else NEGATIVE


def run_search(args: Namespace) -> int:
    """Print every counterexample found; finding none is a negative."""
    config = SearchConfig(
        n=args.n,
        palette=args.palette,
        ks=args.k,
        rs=args.r,
        max_results=args.max_results,
        canonical=args.canonical,
        max_constant=args.max_constant,
        jobs=args.jobs,
    )
    found = find_counterexamples(config)
    if args.format == "json":
        data = [
            to_jsonable(example, example.space.label) for example in found
        ]
        print(json.dumps(data, indent=2))
    elif found:
        print("\n".join(
            dump_counterexample(example.space, example.map, example.x0,
                                example.r, example.k, example.K)
            for example in found
        ), end="")
    else:
        print("no counterexamples")
    return SUCCESS if found else NEGATIVE


def _sequences(
    args: Namespace,
    names: t.Iterable[str],
) -> list[CompletionPoint]:
    space = get_presentation(args.presentation)
    result = []
    for name in names:
        text = getattr(args, name)
        if text is None:
            raise ParseError(f"missing --{name}")
        result.append(parse_sequence(space, text))
    return result


def run_probe(args: Namespace) -> int:
    """Probe well-definedness of the distance limit; a clash is a negative."""
    if args.presentation == EXAMPLE_3.name and args.a is None:
        first, second, tails = example_3_quadruple()
        report = wellposedness_probe(first, second, args.i, args.epsilon,
                                     tails)
    else:
        x, y, z, w = _sequences(args, "abcd")
        report = wellposedness_probe((x, z), (y, w), args.i, args.epsilon)
    emit(args, report)
    return NEGATIVE if report.clash else SUCCESS


def run_complete(args: Namespace) -> int:
    """Evaluate D*(a, b) at precision i with density witnesses."""
    if args.i < 1:
        raise ParseError(f"precision must be positive: {args.i}")
    if args.probe:
        return run_probe(args)

    a, b = _sequences(args, "ab")
    if a.space.kind is not SpaceClass.STRONG_B:
        raise WrongSpaceClass(
            f"{a.space.name} is a plain b-metric space; "
            "use --probe to test its distance limits"
        )
    violations = {
        name: validate_modulus(point.representative, args.i, args.samples)
        for name, point in (("a", a), ("b", b))
    }
    labels = a.space.labels
    value, radius = dstar_estimate(a, b, args.i)
    emit(args, {
        "presentation": a.space.name,
        "a": a.name,
        "b": b.name,
        "i": args.i,
        "estimate": value,
        "radius": radius,
        "interval": dstar_interval(a, b, args.i),
        "equivalence": equivalent_at(a, b, args.epsilon, args.i),
        "witness_a": density_witness(a, args.i),
        "witness_b": density_witness(b, args.i),
        "modulus_violations": violations,
    }, labels.__getitem__ if labels else None)
    if any(violation is not None for violation in violations.values()):
        return NEGATIVE
    return SUCCESS


def run_demo(args: Namespace) -> int:
    """Replay a worked example."""
    if args.name == "example-2.1":
        emit(args, replay_example_2_1(), example_2_1_space().label)
    else:
        emit(args, replay_example_3(args.i))
    return SUCCESS


COMMANDS: dict[str, t.Callable[[Namespace], int]] = {
    "check": run_check,
    "constants": run_constants,
    "ball": run_ball,
    "fixed-point": run_fixed_point,
    "search": run_search,
    "complete": run_complete,
    "demo": run_demo,
}


def main(args: Namespace) -> int:
    """Script entrypoint."""
    logging.basicConfig(
        level=max(logging.DEBUG, logging.WARNING - 10 * args.verbose),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except BadModulus as exc:
        print(f"strongb: {exc}", file=sys.stderr)
        return NEGATIVE
    except INPUT_ERRORS as exc:
        print(f"strongb: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except KeyboardInterrupt:
        return INTERRUPTED


def run() -> None:
    """Console script entrypoint."""
    sys.exit(main(parse_args()))


if __name__ == "__main__":
    run()
