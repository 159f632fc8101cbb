import contextlib
import io
import itertools
import random
from pathlib import Path

import pytest

from cminor import SquareMatrix
from cminor.cli import main as cli_main

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

FIG5_ROWS = [
    [1, 1, 1, 1, 0],
    [0, 1, 0, 1, 1],
    [1, 0, 1, 1, 1],
    [1, 1, 1, 0, 0],
    [1, 1, 1, 1, 1],
]
EX1_ROWS = [[0, 1, 1], [1, 1, 1], [1, 1, 1]]


@pytest.fixture
def fig5():
    return SquareMatrix.from_rows(FIG5_ROWS)


@pytest.fixture
def ex1():
    return SquareMatrix.from_rows(EX1_ROWS)


def brute_force_determinant(matrix: SquareMatrix) -> int:
    """Signed permutation sum straight from the definition; parity from the
    decrement n - gamma.  Independent of the expansion engine."""
    n = matrix.n
    entries = matrix.entries
    total = 0
    for images in itertools.permutations(range(n)):
        weight = 1
        for i in range(n):
            weight *= entries[i][images[i]]
        if weight == 0:
            continue
        gamma = _cycle_count(images)
        sign = -1 if (n - gamma) % 2 else 1
        total += sign * weight
    return total


def _cycle_count(images) -> int:
    n = len(images)
    seen = [False] * n
    gamma = 0
    for start in range(n):
        if seen[start]:
            continue
        gamma += 1
        cursor = start
        while not seen[cursor]:
            seen[cursor] = True
            cursor = images[cursor]
    return gamma


def random_01_matrix(rng: random.Random, n: int, density: float) -> SquareMatrix:
    rows = [[1 if rng.random() < density else 0 for _ in range(n)] for _ in range(n)]
    return SquareMatrix.from_rows(rows)


def run_cli(argv):
    """Run the CLI in-process; returns (exit_code, stdout, stderr)."""
    stdout, stderr = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
        try:
            code = cli_main(argv)
        except SystemExit as exc:  # argparse errors
            code = exc.code if isinstance(exc.code, int) else 2
    return code, stdout.getvalue(), stderr.getvalue()
