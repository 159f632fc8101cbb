"""Divisor-graph applications: Gray-code-style orderings of divisors.

For n given in factored form, build the 0/1 matrix B over the divisors of n
with b_ij = 1 iff one of the two ratios d_i/d_j, d_j/d_i is prime.  The
full-cycle count of B counts directed Hamiltonian cycles of the divisor
graph; replacing the first column of B by all ones counts orderings
d_1 = n, d_2, ..., d_tau with every consecutive ratio prime or 1/prime
(Hamiltonian paths from the marked start).  For n a product of k distinct
primes the divisor graph is the k-dimensional hypercube.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from sympy import isprime, nextprime

from .errors import PreconditionError, SizeGuardError
from .expansions import Engine
from .matrices import SquareMatrix

DEFAULT_HYPERCUBE_LIMIT = 4


@dataclass(frozen=True)
class DivisorInstance:
    n: int
    factorization: tuple[tuple[int, int], ...]
    divisors: tuple[int, ...]  # n first, the rest descending
    matrix_b: SquareMatrix
    matrix_a: SquareMatrix  # matrix_b with its first column replaced by ones


def _validate_factorization(factorization) -> tuple[tuple[int, int], ...]:
    factors = tuple((int(p), int(e)) for p, e in factorization)
    if not factors:
        raise PreconditionError("factorization must contain at least one prime")
    seen = set()
    for p, e in factors:
        if not isprime(p):
            raise PreconditionError(f"{p} is not prime")
        if e < 1:
            raise PreconditionError(f"exponent of {p} must be at least 1")
        if p in seen:
            raise PreconditionError(f"prime {p} listed twice")
        seen.add(p)
    return factors


def _divisors(factors: tuple[tuple[int, int], ...]) -> list[int]:
    values = [1]
    for p, e in factors:
        values = [d * p**k for d in values for k in range(e + 1)]
    return values


def _ratio_is_prime(a: int, b: int) -> bool:
    """True iff a/b or b/a is a prime integer."""
    if a % b == 0:
        return isprime(a // b)
    if b % a == 0:
        return isprime(b // a)
    return False


def build_divisor_instance(factorization: Iterable[tuple[int, int]]) -> DivisorInstance:
    factors = _validate_factorization(factorization)
    n = 1
    for p, e in factors:
        n *= p**e
    rest = sorted((d for d in _divisors(factors) if d != n), reverse=True)
    divisors = (n, *rest)
    tau = len(divisors)
    b_rows = [
        [1 if i != j and _ratio_is_prime(divisors[i], divisors[j]) else 0 for j in range(tau)]
        for i in range(tau)
    ]
    a_rows = [[1] + row[1:] for row in b_rows]
    return DivisorInstance(
        n=n,
        factorization=factors,
        divisors=divisors,
        matrix_b=SquareMatrix.from_rows(b_rows),
        matrix_a=SquareMatrix.from_rows(a_rows),
    )


def gray_cycle_count(instance: DivisorInstance, engine: Optional[Engine] = None) -> int:
    """Directed Hamiltonian cycles of the divisor graph (A180026-style b(n))."""
    return (engine or Engine()).full_cycle_count(instance.matrix_b)


def gray_path_count(instance: DivisorInstance, engine: Optional[Engine] = None) -> int:
    """Divisor orderings starting at n with prime/(1/prime) consecutive
    ratios (A179926-style a(n))."""
    return (engine or Engine()).full_cycle_count(instance.matrix_a)


def hypercube_instance(dim: int, limit: int = DEFAULT_HYPERCUBE_LIMIT) -> DivisorInstance:
    """The instance for n = product of the first `dim` primes; its divisor
    graph is the dim-cube under the divisor <-> subset correspondence."""
    if dim < 1:
        raise PreconditionError("dimension must be at least 1")
    if dim > limit:
        raise SizeGuardError(f"dimension {dim} exceeds the limit {limit} (2^{dim} nodes)")
    primes = []
    p = 2
    for _ in range(dim):
        primes.append(p)
        p = nextprime(p)
    return build_divisor_instance([(p, 1) for p in primes])
