"""Recursive first-row expansions over combinatorial minors.

Each matrix function is reduced from order n to order n-1 subproblems on
combinatorial minors.  When the position (1, j) with j >= 2 is consumed,
the cycle through that position loses one element while all other cycles
keep their lengths, so:

  * class counts: the decrement drops by 1, i.e. the class index shifts
    by one place (multiplication by the formal root of unity, kept as an
    exact index rotation, never reduced);
  * full-cycle counts: full cycles stay full cycles one order down, and
    the (1,1) term is simply omitted;
  * Stirling vectors: the cycle count is preserved for j >= 2 and grows
    by one for the fixed-point branch j = 1;
  * cycle indicators: tracked per length r of the cycle through element 1;
    consuming (1, j) turns an r-1 tracked cycle into an r cycle, realized
    as an exact monomial exponent shift (never polynomial division).

Complexity is exponential by nature: these functions generalize the
permanent.  Size guards refuse orders beyond a configurable cap with a
clear error instead of hanging.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Optional

from .errors import PreconditionError, SizeGuardError
from .indicators import ClassVector, CycleIndicator, StirlingVector
from .matrices import Entries, SquareMatrix, _comb_minor_row1, _tracking_minor_row1

DEFAULT_VECTOR_CAP = 20
DEFAULT_INDICATOR_CAP = 12
DEFAULT_CACHE_LIMIT = 1 << 20

STRATEGIES = ("naive", "memo", "parallel")


class _Memo:
    """Bounded memo table; on capacity exhaustion it stops inserting and the
    engine silently recomputes (degradation, never failure)."""

    __slots__ = ("data", "limit")

    def __init__(self, limit: int = DEFAULT_CACHE_LIMIT):
        self.data: dict = {}
        self.limit = limit

    def get(self, key):
        return self.data.get(key)

    def put(self, key, value) -> None:
        if len(self.data) < self.limit:
            self.data[key] = value


def _has_zero_row(entries: Entries) -> bool:
    return any(not any(row) for row in entries)


def _branches(entries: Entries) -> list[tuple[int, int]]:
    """Nonzero first-row positions as 0-based (column, weight) pairs."""
    return [(j0, a) for j0, a in enumerate(entries[0]) if a]


def _class_counts(entries: Entries, m: int, memo: Optional[_Memo], mapper=None) -> tuple[int, ...]:
    n = len(entries)
    if n == 1:
        return (entries[0][0],) + (0,) * (m - 1)
    key = ("classes", m, entries)
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            return hit
    if _has_zero_row(entries):
        result = (0,) * m
    else:
        acc = [0] * m

        def branch(item):
            j0, a = item
            return j0, a, _class_counts(_comb_minor_row1(entries, j0), m, memo)

        for j0, a, sub in (mapper or map)(branch, _branches(entries)):
            if j0 == 0:
                # deleting a fixed point removes one cycle and one element:
                # the decrement is unchanged
                for k in range(m):
                    acc[k] += a * sub[k]
            else:
                # the cycle count is preserved one order down, so the
                # decrement drops by 1: rotate the class index
                for k in range(m):
                    acc[(k + 1) % m] += a * sub[k]
        result = tuple(acc)
    if memo is not None:
        memo.put(key, result)
    return result


def _full_cycle_count(entries: Entries, memo: Optional[_Memo], mapper=None) -> int:
    n = len(entries)
    if n == 1:
        return entries[0][0]
    key = ("cycl", entries)
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            return hit
    if _has_zero_row(entries):
        result = 0
    else:

        def branch(item):
            j0, a = item
            if j0 == 0:  # a fixed point can never be part of a full cycle
                return 0
            return a * _full_cycle_count(_comb_minor_row1(entries, j0), memo)

        result = sum((mapper or map)(branch, _branches(entries)))
    if memo is not None:
        memo.put(key, result)
    return result


def _stirling(entries: Entries, memo: Optional[_Memo], mapper=None) -> tuple[int, ...]:
    n = len(entries)
    if n == 1:
        return (entries[0][0],)
    key = ("stirling", entries)
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            return hit
    if _has_zero_row(entries):
        result = (0,) * n
    else:
        counts = [0] * n  # counts[k-1] = weight with k cycles

        def branch(item):
            j0, a = item
            return j0, a, _stirling(_comb_minor_row1(entries, j0), memo)

        for j0, a, sub in (mapper or map)(branch, _branches(entries)):
            if j0 == 0:
                # fixed point at 1 adds one cycle on top of the minor's
                for k in range(1, n):
                    counts[k] += a * sub[k - 1]
            else:
                for k in range(n - 1):
                    counts[k] += a * sub[k]
        result = tuple(counts)
    if memo is not None:
        memo.put(key, result)
    return result


TermMap = dict[tuple[int, ...], int]


def _indicator(entries: Entries, memo: Optional[_Memo], mapper=None) -> TermMap:
    """Full cycle indicator as a term map, summed over the tracked length r."""
    n = len(entries)
    key = ("ind", entries)
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            return hit
    if _has_zero_row(entries):
        result: TermMap = {}
    else:
        result = {}

        def branch(r):
            return _partial_indicator(entries, r, memo)

        for partial in (mapper or map)(branch, range(1, n + 1)):
            for exponents, coefficient in partial.items():
                result[exponents] = result.get(exponents, 0) + coefficient
    if memo is not None:
        memo.put(key, result)
    return result


def _partial_indicator(entries: Entries, r: int, memo: Optional[_Memo]) -> TermMap:
    """Indicator restricted to permutations whose cycle through 1 has length r.

    Every monomial carries at least one factor t_r, so advancing r is an
    exact exponent shift from position r-1 to position r.
    """
    n = len(entries)
    if n == 1:
        a = entries[0][0]
        return {(1,): a} if (r == 1 and a) else {}
    key = ("partial", r, entries)
    if memo is not None:
        hit = memo.get(key)
        if hit is not None:
            return hit
    result: TermMap = {}
    if not _has_zero_row(entries):
        if r == 1:
            a = entries[0][0]
            if a:
                # fixed point at 1: multiply the minor's full indicator by t1
                for exponents, coefficient in _indicator(
                    _comb_minor_row1(entries, 0), memo
                ).items():
                    lifted = (exponents[0] + 1,) + exponents[1:] + (0,)
                    result[lifted] = result.get(lifted, 0) + a * coefficient
        else:
            for j0, a in _branches(entries):
                if j0 == 0:
                    continue
                sub = _partial_indicator(_tracking_minor_row1(entries, j0), r - 1, memo)
                for exponents, coefficient in sub.items():
                    shifted = list(exponents) + [0]
                    shifted[r - 2] -= 1  # the tracked cycle grows from r-1 to r
                    shifted[r - 1] += 1
                    lifted = tuple(shifted)
                    result[lifted] = result.get(lifted, 0) + a * coefficient
    if memo is not None:
        memo.put(key, result)
    return result


class Engine:
    """Evaluation front-end with a pluggable strategy.

    strategy='naive' recomputes everything; 'memo' caches results keyed by
    (function tag, parameters, matrix bytes) because distinct expansion
    paths reach identical submatrices; 'parallel' is memoized with the
    top-level branches fanned out over a thread pool.  All strategies
    return identical values on every input.
    """

    def __init__(
        self,
        strategy: str = "memo",
        max_n: Optional[int] = None,
        cache: Optional[_Memo] = None,
        cache_limit: int = DEFAULT_CACHE_LIMIT,
        workers: int = 4,
    ):
        if strategy not in STRATEGIES:
            raise PreconditionError(f"unknown strategy {strategy!r}")
        self.strategy = strategy
        self.max_n = max_n
        self.workers = workers
        if strategy == "naive":
            self._memo = None
        else:
            self._memo = cache if cache is not None else _Memo(cache_limit)

    def _guard(self, n: int, default_cap: int) -> None:
        cap = self.max_n if self.max_n is not None else default_cap
        if n > cap:
            raise SizeGuardError(
                f"order {n} exceeds the size cap {cap}; raise max_n explicitly "
                "if you accept the exponential runtime"
            )

    def _run(self, fn: Callable) -> object:
        """Run fn(mapper); parallel strategy supplies a thread-pool mapper
        for the outermost branch loop only."""
        if self.strategy == "parallel":
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                return fn(pool.map)
        return fn(None)

    def class_counts(self, matrix: SquareMatrix, m: int) -> ClassVector:
        if m < 1:
            raise PreconditionError("modulus m must be at least 1")
        self._guard(matrix.n, DEFAULT_VECTOR_CAP)
        counts = self._run(lambda mapper: _class_counts(matrix.entries, m, self._memo, mapper))
        return ClassVector(counts)

    def permanent(self, matrix: SquareMatrix) -> int:
        return self.class_counts(matrix, 1).counts[0]

    def even_odd_counts(self, matrix: SquareMatrix) -> tuple[int, int]:
        counts = self.class_counts(matrix, 2).counts
        return counts[0], counts[1]

    def determinant(self, matrix: SquareMatrix) -> int:
        """even - odd: the single signed value, derived at the boundary."""
        even, odd = self.even_odd_counts(matrix)
        return even - odd

    def full_cycle_count(self, matrix: SquareMatrix) -> int:
        self._guard(matrix.n, DEFAULT_VECTOR_CAP)
        return self._run(lambda mapper: _full_cycle_count(matrix.entries, self._memo, mapper))

    def stirling_function(self, matrix: SquareMatrix) -> StirlingVector:
        self._guard(matrix.n, DEFAULT_VECTOR_CAP)
        counts = self._run(lambda mapper: _stirling(matrix.entries, self._memo, mapper))
        return StirlingVector(counts)

    def cycle_indicator(self, matrix: SquareMatrix) -> CycleIndicator:
        self._guard(matrix.n, DEFAULT_INDICATOR_CAP)
        terms = self._run(lambda mapper: _indicator(matrix.entries, self._memo, mapper))
        return CycleIndicator.from_term_map(matrix.n, terms)


_DEFAULT_ENGINE = Engine()


def class_counts(matrix: SquareMatrix, m: int) -> ClassVector:
    return _DEFAULT_ENGINE.class_counts(matrix, m)


def permanent(matrix: SquareMatrix) -> int:
    return _DEFAULT_ENGINE.permanent(matrix)


def even_odd_counts(matrix: SquareMatrix) -> tuple[int, int]:
    return _DEFAULT_ENGINE.even_odd_counts(matrix)


def determinant(matrix: SquareMatrix) -> int:
    return _DEFAULT_ENGINE.determinant(matrix)


def full_cycle_count(matrix: SquareMatrix) -> int:
    return _DEFAULT_ENGINE.full_cycle_count(matrix)


def stirling_function(matrix: SquareMatrix) -> StirlingVector:
    return _DEFAULT_ENGINE.stirling_function(matrix)


def cycle_indicator(matrix: SquareMatrix) -> CycleIndicator:
    return _DEFAULT_ENGINE.cycle_indicator(matrix)
