"""Brute-force ground truth: permutations, cycle statistics, oracle evaluation.

Everything here works straight from the definitions, with no recursion over
minors, so it serves as the independent oracle for the expansion engine.
The enumerator backtracks row by row, pruning on zero entries, which keeps
orders up to the oracle cap (default 9) comfortably fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import PreconditionError, SizeGuardError
from .indicators import ClassVector, CycleIndicator, StirlingVector
from .matrices import SquareMatrix

DEFAULT_ORACLE_LIMIT = 9


@dataclass(frozen=True)
class Permutation:
    """One-line notation: images[i-1] = s(i), a bijection on {1..n}."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n < 1:
            raise PreconditionError("permutation size must be at least 1")
        if sorted(self.images) != list(range(1, n + 1)):
            raise PreconditionError("images must be a permutation of 1..n")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise PreconditionError(f"argument {i} out of range 1..{self.n}")
        return self.images[i - 1]


@dataclass(frozen=True)
class CycleStats:
    gamma: int
    decrement: int
    structure: tuple[int, ...]  # structure[i-1] = number of cycles of length i


def cycle_stats(permutation: Permutation) -> CycleStats:
    """Cycle count (fixed points included), decrement n - gamma, and the
    full cycle-structure vector."""
    n = permutation.n
    images = permutation.images
    seen = [False] * n
    structure = [0] * n
    gamma = 0
    for start in range(n):
        if seen[start]:
            continue
        gamma += 1
        length = 0
        cursor = start
        while not seen[cursor]:
            seen[cursor] = True
            cursor = images[cursor] - 1
            length += 1
        structure[length - 1] += 1
    return CycleStats(gamma=gamma, decrement=n - gamma, structure=tuple(structure))


def lemma1_map(permutation: Permutation, j: int) -> Permutation:
    """Contract the value 1 out of a permutation with s(j) = 1, j >= 2.

    The image in S_{n-1} is s*(i) = s(i+1) - 1 for i != j-1 and
    s*(j-1) = s(1) - 1.  The cycle through j loses one element; every other
    cycle keeps its length, so the cycle count is preserved.  This is the
    exact bookkeeping behind the combinatorial-minor column rotation.
    """
    n = permutation.n
    if n < 2:
        raise PreconditionError("need size at least 2")
    if not 2 <= j <= n:
        raise PreconditionError(f"position j={j} must satisfy 2 <= j <= {n}")
    if permutation(j) != 1:
        raise PreconditionError(f"permutation does not map {j} to 1")
    images = permutation.images
    result = [0] * (n - 1)
    for i in range(1, n):  # i is the 1-based argument of the result
        if i == j - 1:
            result[i - 1] = images[0] - 1
        else:
            result[i - 1] = images[i] - 1
    return Permutation(tuple(result))


def enumerate_restricted(matrix: SquareMatrix) -> Iterator[tuple[Permutation, int]]:
    """Yield every permutation s with all a_{i,s(i)} > 0, with its weight.

    The weight is the product of the chosen entries; for 0/1 matrices each
    weight is 1 and the stream enumerates the restricted-position class of
    the matrix.
    """
    entries = matrix.entries
    n = matrix.n
    images = [0] * n
    used = [False] * n

    def backtrack(row: int, weight: int) -> Iterator[tuple[Permutation, int]]:
        if row == n:
            yield Permutation(tuple(images)), weight
            return
        for col in range(n):
            value = entries[row][col]
            if value == 0 or used[col]:
                continue
            used[col] = True
            images[row] = col + 1
            yield from backtrack(row + 1, weight * value)
            used[col] = False

    yield from backtrack(0, 1)


@dataclass(frozen=True)
class OracleReport:
    """Everything the oracle knows about one matrix, from a single pass."""

    permanent: int
    class_counts: ClassVector
    full_cycle_count: int
    stirling: StirlingVector
    indicator: CycleIndicator


def oracle_all_functions(
    matrix: SquareMatrix, m: int, limit: int = DEFAULT_ORACLE_LIMIT
) -> OracleReport:
    """Evaluate all five matrix functions by definition.

    Refuses orders above `limit` (factorial blow-up guard).  Weights are
    plain Python integers throughout, so results are exact at any size.
    """
    if m < 1:
        raise PreconditionError("modulus m must be at least 1")
    n = matrix.n
    if n > limit:
        raise SizeGuardError(f"oracle refuses order {n} > limit {limit}")
    permanent = 0
    classes = [0] * m
    full_cycles = 0
    stirling = [0] * n
    indicator: dict[tuple[int, ...], int] = {}
    for permutation, weight in enumerate_restricted(matrix):
        stats = cycle_stats(permutation)
        permanent += weight
        classes[stats.decrement % m] += weight
        if stats.gamma == 1:
            full_cycles += weight
        stirling[stats.gamma - 1] += weight
        indicator[stats.structure] = indicator.get(stats.structure, 0) + weight
    return OracleReport(
        permanent=permanent,
        class_counts=ClassVector(tuple(classes)),
        full_cycle_count=full_cycles,
        stirling=StirlingVector(tuple(stirling)),
        indicator=CycleIndicator.from_term_map(n, indicator),
    )
