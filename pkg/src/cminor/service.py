"""FastAPI service exposing the expansion engine.

One process keeps a single shared memo table, so repeated queries on
overlapping submatrices get faster over the lifetime of the service.
All integers in responses are decimal strings: results are exact
arbitrary-precision counts and must survive any JSON consumer.
"""

from __future__ import annotations

import time
from typing import Any, Literal, Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .divisors import (
    DEFAULT_HYPERCUBE_LIMIT,
    DivisorInstance,
    build_divisor_instance,
    gray_cycle_count,
    gray_path_count,
    hypercube_instance,
)
from .errors import (
    CminorError,
    OracleMismatchError,
    ParseError,
    PreconditionError,
    SizeGuardError,
)
from .expansions import Engine, _Memo
from .indicators import ClassVector, CycleIndicator, StirlingVector
from .matrices import SquareMatrix
from .permutations import DEFAULT_ORACLE_LIMIT, oracle_all_functions

app = FastAPI(title="cminor", version=__version__)

_SHARED_MEMO = _Memo()

Strategy = Literal["naive", "memo", "parallel"]


class EvaluationOptions(BaseModel):
    strategy: Strategy = "memo"
    check_oracle: bool = False
    max_n: Optional[int] = Field(default=None, ge=1)


class MatrixRequest(EvaluationOptions):
    entries: list[list[int]]


class ClassesRequest(MatrixRequest):
    mod: int = Field(ge=1)


class DivisorRequest(EvaluationOptions):
    factors: list[tuple[int, int]]


class HypercubeRequest(EvaluationOptions):
    dim: int = Field(ge=1)
    limit: int = Field(default=DEFAULT_HYPERCUBE_LIMIT, ge=1)


class ResultDocument(BaseModel):
    function: str
    params: dict[str, Any]
    result: dict[str, Any]
    strategy: str
    elapsed_ms: int


_ERROR_STATUS = {
    "parse": 400,
    "precondition": 400,
    "guard": 409,
    "oracle_mismatch": 500,
    "internal": 500,
}


def _error_response(category: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=_ERROR_STATUS[category],
        content={"error": {"category": category, "message": message}},
    )


@app.exception_handler(ParseError)
async def _on_parse(_: Request, exc: ParseError):
    return _error_response("parse", str(exc))


@app.exception_handler(PreconditionError)
async def _on_precondition(_: Request, exc: PreconditionError):
    return _error_response("precondition", str(exc))


@app.exception_handler(SizeGuardError)
async def _on_guard(_: Request, exc: SizeGuardError):
    return _error_response("guard", str(exc))


@app.exception_handler(OracleMismatchError)
async def _on_mismatch(_: Request, exc: OracleMismatchError):
    return _error_response("oracle_mismatch", str(exc))


@app.exception_handler(CminorError)
async def _on_internal(_: Request, exc: CminorError):
    return _error_response("internal", str(exc))


@app.exception_handler(RequestValidationError)
async def _on_validation(_: Request, exc: RequestValidationError):
    return JSONResponse(
        status_code=422,
        content={"error": {"category": "parse", "message": str(exc)}},
    )


def _engine(options: EvaluationOptions) -> Engine:
    cache = None if options.strategy == "naive" else _SHARED_MEMO
    return Engine(strategy=options.strategy, max_n=options.max_n, cache=cache)


def _class_vector_payload(vector: ClassVector) -> dict[str, Any]:
    return {"m": vector.m, "counts": [str(c) for c in vector.counts]}


def _stirling_payload(vector: StirlingVector) -> dict[str, Any]:
    # counts indexed 1..n: counts[0] is the weight of full cycles
    return {"n": vector.n, "counts": [str(c) for c in vector.counts]}


def _indicator_payload(indicator: CycleIndicator) -> dict[str, Any]:
    # terms in lexicographic exponent order (the stored order)
    return {
        "n": indicator.n,
        "terms": [
            {"exponents": list(exponents), "coefficient": str(coefficient)}
            for exponents, coefficient in indicator.terms
        ],
    }


def _check_matrix_oracle(function: str, matrix: SquareMatrix, value, m: int) -> str:
    """Compare an engine result with the definitional oracle.  Returns
    'ok' or 'skipped'; raises OracleMismatchError on disagreement."""
    if matrix.n > DEFAULT_ORACLE_LIMIT:
        return "skipped"
    report = oracle_all_functions(matrix, m)
    if function == "permanent":
        expected = report.permanent
    elif function == "determinant":
        expected = report.class_counts.counts[0] - report.class_counts.counts[1]
    elif function == "classes":
        expected = report.class_counts
    elif function == "evenodd":
        expected = (report.class_counts.counts[0], report.class_counts.counts[1])
    elif function == "cycles":
        expected = report.full_cycle_count
    elif function == "stirling":
        expected = report.stirling
    else:
        expected = report.indicator
    if value != expected:
        raise OracleMismatchError(
            f"{function}: engine produced {value!r}, oracle says {expected!r}"
        )
    return "ok"


def _document(function, params, result, strategy, started) -> ResultDocument:
    elapsed_ms = int(round((time.perf_counter() - started) * 1000))
    return ResultDocument(
        function=function,
        params=params,
        result=result,
        strategy=strategy,
        elapsed_ms=elapsed_ms,
    )


@app.get("/health")
def health() -> dict[str, str]:
    return {"status": "ok", "version": __version__}


@app.post("/matrix/permanent", response_model=ResultDocument)
def matrix_permanent(request: MatrixRequest) -> ResultDocument:
    started = time.perf_counter()
    matrix = SquareMatrix.from_rows(request.entries)
    value = _engine(request).permanent(matrix)
    result: dict[str, Any] = {"value": str(value)}
    if request.check_oracle:
        result["oracle_check"] = _check_matrix_oracle("permanent", matrix, value, 1)
    return _document("permanent", {"n": matrix.n}, result, request.strategy, started)


@app.post("/matrix/determinant", response_model=ResultDocument)
def matrix_determinant(request: MatrixRequest) -> ResultDocument:
    started = time.perf_counter()
    matrix = SquareMatrix.from_rows(request.entries)
    value = _engine(request).determinant(matrix)
    result: dict[str, Any] = {"value": str(value)}
    if request.check_oracle:
        result["oracle_check"] = _check_matrix_oracle("determinant", matrix, value, 2)
    return _document("determinant", {"n": matrix.n}, result, request.strategy, started)


@app.post("/matrix/classes", response_model=ResultDocument)
def matrix_classes(request: ClassesRequest) -> ResultDocument:
    started = time.perf_counter()
    matrix = SquareMatrix.from_rows(request.entries)
    vector = _engine(request).class_counts(matrix, request.mod)
    result = _class_vector_payload(vector)
    if request.check_oracle:
        result["oracle_check"] = _check_matrix_oracle("classes", matrix, vector, request.mod)
    return _document(
        "classes", {"n": matrix.n, "m": request.mod}, result, request.strategy, started
    )


@app.post("/matrix/evenodd", response_model=ResultDocument)
def matrix_evenodd(request: MatrixRequest) -> ResultDocument:
    started = time.perf_counter()
    matrix = SquareMatrix.from_rows(request.entries)
    even, odd = _engine(request).even_odd_counts(matrix)
    result: dict[str, Any] = {
        "even": str(even),
        "odd": str(odd),
        "determinant": str(even - odd),
    }
    if request.check_oracle:
        result["oracle_check"] = _check_matrix_oracle("evenodd", matrix, (even, odd), 2)
    return _document("evenodd", {"n": matrix.n}, result, request.strategy, started)


@app.post("/matrix/cycles", response_model=ResultDocument)
def matrix_cycles(request: MatrixRequest) -> ResultDocument:
    started = time.perf_counter()
    matrix = SquareMatrix.from_rows(request.entries)
    value = _engine(request).full_cycle_count(matrix)
    result: dict[str, Any] = {"value": str(value)}
    if request.check_oracle:
        result["oracle_check"] = _check_matrix_oracle("cycles", matrix, value, 1)
    return _document("cycles", {"n": matrix.n}, result, request.strategy, started)


@app.post("/matrix/stirling", response_model=ResultDocument)
def matrix_stirling(request: MatrixRequest) -> ResultDocument:
    started = time.perf_counter()
    matrix = SquareMatrix.from_rows(request.entries)
    vector = _engine(request).stirling_function(matrix)
    result = _stirling_payload(vector)
    if request.check_oracle:
        result["oracle_check"] = _check_matrix_oracle("stirling", matrix, vector, 1)
    return _document("stirling", {"n": matrix.n}, result, request.strategy, started)


@app.post("/matrix/indicator", response_model=ResultDocument)
def matrix_indicator(request: MatrixRequest) -> ResultDocument:
    started = time.perf_counter()
    matrix = SquareMatrix.from_rows(request.entries)
    indicator = _engine(request).cycle_indicator(matrix)
    result = _indicator_payload(indicator)
    if request.check_oracle:
        result["oracle_check"] = _check_matrix_oracle("indicator", matrix, indicator, 1)
    return _document("indicator", {"n": matrix.n}, result, request.strategy, started)


def _divisor_payload(instance: DivisorInstance, engine: Engine, check_oracle: bool) -> dict[str, Any]:
    paths = gray_path_count(instance, engine)
    cycles = gray_cycle_count(instance, engine)
    result: dict[str, Any] = {
        "n": str(instance.n),
        "divisors": [str(d) for d in instance.divisors],
        "path_count": str(paths),
        "cycle_count": str(cycles),
    }
    if check_oracle:
        if len(instance.divisors) > DEFAULT_ORACLE_LIMIT:
            result["oracle_check"] = "skipped"
        else:
            expected_paths = oracle_all_functions(instance.matrix_a, 1).full_cycle_count
            expected_cycles = oracle_all_functions(instance.matrix_b, 1).full_cycle_count
            if (paths, cycles) != (expected_paths, expected_cycles):
                raise OracleMismatchError(
                    f"divisor counts ({paths}, {cycles}) disagree with oracle "
                    f"({expected_paths}, {expected_cycles})"
                )
            result["oracle_check"] = "ok"
    return result


@app.post("/divisors/sequence", response_model=ResultDocument)
def divisor_sequence(request: DivisorRequest) -> ResultDocument:
    started = time.perf_counter()
    instance = build_divisor_instance(request.factors)
    result = _divisor_payload(instance, _engine(request), request.check_oracle)
    params = {"factors": [[p, e] for p, e in instance.factorization]}
    return _document("divseq", params, result, request.strategy, started)


@app.post("/divisors/hypercube", response_model=ResultDocument)
def hypercube(request: HypercubeRequest) -> ResultDocument:
    started = time.perf_counter()
    instance = hypercube_instance(request.dim, request.limit)
    result = _divisor_payload(instance, _engine(request), request.check_oracle)
    result["dim"] = request.dim
    return _document("hypercube", {"dim": request.dim}, result, request.strategy, started)
