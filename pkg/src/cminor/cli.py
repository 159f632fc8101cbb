"""Batch command-line front door.

The CLI is a thin client of the FastAPI service: by default it mounts the
app in-process (no daemon needed), or it talks to a running server when
--server is given.  Exit codes: 0 success, 2 usage/parse, 3 size-guard
refusal, 4 oracle mismatch, 5 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .errors import ParseError
from .matrixio import parse_factors, read_matrix

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_ORACLE_MISMATCH = 4
EXIT_INTERNAL = 5

_CATEGORY_EXIT = {
    "parse": EXIT_USAGE,
    "precondition": EXIT_USAGE,
    "guard": EXIT_GUARD,
    "oracle_mismatch": EXIT_ORACLE_MISMATCH,
    "internal": EXIT_INTERNAL,
}

MATRIX_COMMANDS = {
    "permanent": "/matrix/permanent",
    "determinant": "/matrix/determinant",
    "classes": "/matrix/classes",
    "evenodd": "/matrix/evenodd",
    "cycles": "/matrix/cycles",
    "stirling": "/matrix/stirling",
    "indicator": "/matrix/indicator",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cminor",
        description="Exact enumeration of permutations with restricted positions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--strategy", choices=("naive", "memo", "parallel"), default="memo")
    common.add_argument("--check-oracle", action="store_true")
    common.add_argument("--max-n", type=int, default=None, help="size-guard override")
    common.add_argument("--server", default=None, help="base URL of a running service; "
                        "default runs the service in-process")

    matrix = argparse.ArgumentParser(add_help=False, parents=[common])
    matrix.add_argument("--input", required=True, help="matrix document path, or - for stdin")

    for name in ("permanent", "determinant", "evenodd", "cycles", "stirling", "indicator"):
        sub.add_parser(name, parents=[matrix])
    classes = sub.add_parser("classes", parents=[matrix])
    classes.add_argument("--mod", type=int, required=True, help="modulus m")

    divseq = sub.add_parser("divseq", parents=[common])
    divseq.add_argument("--factors", required=True, help="prime factorization, e.g. 2^2,3")

    hypercube = sub.add_parser("hypercube", parents=[common])
    hypercube.add_argument("--dim", type=int, required=True)
    hypercube.add_argument("--limit", type=int, default=None, help="dimension cap override")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _build_request(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    body: dict[str, Any] = {
        "strategy": args.strategy,
        "check_oracle": args.check_oracle,
        "max_n": args.max_n,
    }
    if args.command in MATRIX_COMMANDS:
        matrix = read_matrix(args.input)
        body["entries"] = matrix.rows()
        if args.command == "classes":
            body["mod"] = args.mod
        return MATRIX_COMMANDS[args.command], body
    if args.command == "divseq":
        body["factors"] = parse_factors(args.factors)
        return "/divisors/sequence", body
    if args.command == "hypercube":
        body["dim"] = args.dim
        if args.limit is not None:
            body["limit"] = args.limit
        return "/divisors/hypercube", body
    raise AssertionError(f"unhandled command {args.command}")


def _post(server: str | None, path: str, body: dict[str, Any]):
    if server:
        import httpx

        with httpx.Client(base_url=server, timeout=None) as client:
            return client.post(path, json=body)
    from fastapi.testclient import TestClient

    from .service import app

    with TestClient(app) as client:
        return client.post(path, json=body)


def _monomial(exponents: list[int]) -> str:
    parts = []
    for i, k in enumerate(exponents, start=1):
        if k == 1:
            parts.append(f"t{i}")
        elif k > 1:
            parts.append(f"t{i}^{k}")
    return " ".join(parts) or "1"


def _format_text(doc: dict[str, Any]) -> str:
    function = doc["function"]
    result = doc["result"]
    lines = [f"function: {function}"]
    for key, value in doc["params"].items():
        if key == "factors":
            value = ",".join(f"{p}^{e}" for p, e in value)
        lines.append(f"{key}: {value}")
    if function in ("permanent", "determinant", "cycles"):
        lines.append(f"value: {result['value']}")
    elif function == "evenodd":
        lines.append(f"even: {result['even']}")
        lines.append(f"odd: {result['odd']}")
        lines.append(f"determinant: {result['determinant']}")
    elif function == "classes":
        for k, count in enumerate(result["counts"]):
            lines.append(f"counts[{k}]: {count}")
    elif function == "stirling":
        for k, count in enumerate(result["counts"], start=1):
            lines.append(f"counts[{k}]: {count}")
    elif function == "indicator":
        for term in result["terms"]:
            lines.append(f"{_monomial(term['exponents'])}: {term['coefficient']}")
    elif function in ("divseq", "hypercube"):
        lines.append(f"n: {result['n']}")
        lines.append("divisors: " + " ".join(result["divisors"]))
        lines.append(f"path_count: {result['path_count']}")
        lines.append(f"cycle_count: {result['cycle_count']}")
    if result.get("oracle_check"):
        lines.append(f"oracle_check: {result['oracle_check']}")
    lines.append(f"strategy: {doc['strategy']}")
    lines.append(f"elapsed_ms: {doc['elapsed_ms']}")
    return "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK

    try:
        path, body = _build_request(args)
    except ParseError as exc:
        print(f"error (parse): {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        response = _post(args.server, path, body)
    except Exception as exc:  # connection failures and the like
        print(f"error (internal): {exc}", file=sys.stderr)
        return EXIT_INTERNAL

    if response.status_code == 200:
        doc = response.json()
        if args.format == "structured":
            output = json.dumps(doc, indent=2) + "\n"
        else:
            output = _format_text(doc)
        sys.stdout.write(output)
        return EXIT_OK

    try:
        envelope = response.json()
        category = envelope["error"]["category"]
        message = envelope["error"]["message"]
    except Exception:
        category, message = "internal", response.text
    print(f"error ({category}): {message}", file=sys.stderr)
    return _CATEGORY_EXIT.get(category, EXIT_INTERNAL)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
