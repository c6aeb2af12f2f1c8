# Copyright 2026 strongb contributors
# Licensed under GNU GPLv3 or later
# See https://www.gnu.org/licenses/gpl-3.0.en.html
"""Some pytest stuff."""
from pathlib import Path

from hypothesis import HealthCheck, settings
import pytest

from strongb.demos import example_2_1_space
from strongb.formats import dump_space
from strongb.spaces import FiniteSpace


# Randomized property suites run at least 500 cases each.
settings.register_profile(
    "ci",
    max_examples=500,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


def pytest_addoption(parser: pytest.Parser) -> None:
    """Add options to pytest."""
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run slow tests",
    )


def pytest_configure(config: pytest.Config) -> None:
    """Add 'slow' marker."""
    config.addinivalue_line("markers", "slow: mark test as slow to run")


def pytest_collection_modifyitems(
    config: pytest.Config,
    items: list[pytest.Item],
) -> None:
    """Skip slow tests if not `--runslow`."""
    if config.getoption("--runslow"):
        return

    # Skip slow tests.
    skip_slow = pytest.mark.skip(reason="requires --runslow option")
    for item in items:
        # Usage: @pytest.mark.slow
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def example_space() -> FiniteSpace:
    """The 3-point strong b-metric space with K = 4."""
    return example_2_1_space()


@pytest.fixture
def example_file(tmp_path: Path, example_space: FiniteSpace) -> Path:
    """Space file for the 3-point example, with its map and parameters."""
    path = tmp_path / "example.txt"
    path.write_text(
        dump_space(example_space)
        + "map:\n1 -> 2\n2 -> 3\n3 -> 1\n"
        + "x0: 1\nr: 6\nk: 1/2\n",
        encoding="utf-8",
    )
    return path
