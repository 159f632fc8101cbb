"""Exact enumeration of permutations with restricted positions.

Five matrix functions of a nonnegative integer square matrix, all computed
by recursive first-row expansion over combinatorial minors and exact
integer arithmetic: the permanent, the even/odd split (determinant at the
boundary), decrement-class counts modulo m, the full-cycle count, Stirling
vectors, and the cycle indicator polynomial.
"""

__version__ = "0.1.0"

from .errors import (
    CminorError,
    OracleMismatchError,
    ParseError,
    PreconditionError,
    SizeGuardError,
)
from .expansions import (
    Engine,
    class_counts,
    cycle_indicator,
    determinant,
    even_odd_counts,
    full_cycle_count,
    permanent,
    stirling_function,
)
from .indicators import ClassVector, CycleIndicator, StirlingVector, specialize_indicator
from .matrices import (
    SquareMatrix,
    all_ones,
    classical_minor,
    combinatorial_minor,
    identity,
)
from .permutations import (
    CycleStats,
    OracleReport,
    Permutation,
    cycle_stats,
    enumerate_restricted,
    lemma1_map,
    oracle_all_functions,
)
from .divisors import (
    DivisorInstance,
    build_divisor_instance,
    gray_cycle_count,
    gray_path_count,
    hypercube_instance,
)

__all__ = [
    "CminorError",
    "OracleMismatchError",
    "ParseError",
    "PreconditionError",
    "SizeGuardError",
    "Engine",
    "class_counts",
    "cycle_indicator",
    "determinant",
    "even_odd_counts",
    "full_cycle_count",
    "permanent",
    "stirling_function",
    "ClassVector",
    "CycleIndicator",
    "StirlingVector",
    "specialize_indicator",
    "SquareMatrix",
    "all_ones",
    "classical_minor",
    "combinatorial_minor",
    "identity",
    "CycleStats",
    "OracleReport",
    "Permutation",
    "cycle_stats",
    "enumerate_restricted",
    "lemma1_map",
    "oracle_all_functions",
    "DivisorInstance",
    "build_divisor_instance",
    "gray_cycle_count",
    "gray_path_count",
    "hypercube_instance",
]
