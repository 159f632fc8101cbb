"""Result value types: class vectors, Stirling vectors, cycle indicators.

A ClassVector is the unreduced coefficient vector of the formal sum
sum_k w^k * (weight of permutations with decrement = k mod m).  It is never
collapsed with identities like 1 + w + ... + w^{m-1} = 0; that collapse
destroys the enumerative information, so counts stay exact nonnegative
integers and the determinant is derived only at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError

ExponentVector = tuple[int, ...]
Term = tuple[ExponentVector, int]


@dataclass(frozen=True)
class ClassVector:
    """counts[k] = total weight of permutations with decrement = k (mod m)."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) < 1:
            raise PreconditionError("modulus must be at least 1")
        if any(c < 0 for c in self.counts):
            raise PreconditionError("class counts must be nonnegative")

    @property
    def m(self) -> int:
        return len(self.counts)

    def total(self) -> int:
        """Sum over all classes; equals the permanent."""
        return sum(self.counts)


@dataclass(frozen=True)
class StirlingVector:
    """counts[k-1] = total weight of permutations with exactly k cycles."""

    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) < 1:
            raise PreconditionError("order must be at least 1")
        if any(c < 0 for c in self.counts):
            raise PreconditionError("Stirling counts must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.counts)

    def count(self, k: int) -> int:
        """Weight of permutations with k cycles, 1 <= k <= n."""
        if not 1 <= k <= self.n:
            raise PreconditionError(f"cycle count {k} out of range 1..{self.n}")
        return self.counts[k - 1]

    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class CycleIndicator:
    """Sparse polynomial sum nu(k1..kn) * t1^k1 ... tn^kn over cycle structures.

    Terms are stored sorted by exponent vector, zero coefficients dropped,
    so equal indicators compare equal structurally.
    """

    n: int
    terms: tuple[Term, ...]

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError("order must be at least 1")
        for exponents, coefficient in self.terms:
            _check_exponents(self.n, exponents)
            if coefficient <= 0:
                raise PreconditionError("indicator coefficients must be positive")

    @classmethod
    def from_term_map(cls, n: int, term_map: dict[ExponentVector, int]) -> "CycleIndicator":
        terms = tuple(sorted((e, c) for e, c in term_map.items() if c != 0))
        return cls(n, terms)

    def as_dict(self) -> dict[ExponentVector, int]:
        return dict(self.terms)

    def coefficient(self, exponents: ExponentVector) -> int:
        return self.as_dict().get(tuple(exponents), 0)


def _check_exponents(n: int, exponents: ExponentVector) -> None:
    if len(exponents) != n:
        raise PreconditionError(f"exponent vector must have length {n}")
    if any(k < 0 for k in exponents):
        raise PreconditionError("exponents must be nonnegative")
    if sum(i * k for i, k in enumerate(exponents, start=1)) != n:
        raise PreconditionError("cycle lengths must sum to the matrix order")


def specialize_indicator(indicator: CycleIndicator, mode: str, m: int | None = None):
    """Collapse a cycle indicator to a coarser statistic by exact bucketing.

    mode='permanent' sums all coefficients; mode='stirling' buckets monomials
    by total cycle count; mode='classes' buckets by decrement mod m.  No
    complex roots of unity are ever evaluated.
    """
    n = indicator.n
    if mode == "permanent":
        return sum(c for _, c in indicator.terms)
    if mode == "stirling":
        counts = [0] * n
        for exponents, coefficient in indicator.terms:
            gamma = sum(exponents)
            counts[gamma - 1] += coefficient
        return StirlingVector(tuple(counts))
    if mode == "classes":
        if m is None or m < 1:
            raise PreconditionError("mode='classes' needs a modulus m >= 1")
        counts = [0] * m
        for exponents, coefficient in indicator.terms:
            decrement = sum((i - 1) * k for i, k in enumerate(exponents, start=1))
            counts[decrement % m] += coefficient
        return ClassVector(tuple(counts))
    raise PreconditionError(f"unknown specialization mode {mode!r}")
