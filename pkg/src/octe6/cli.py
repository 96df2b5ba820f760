"""Thin command-line client for the octe6 service.

Every subcommand is an HTTP call.  Without ``--url`` the service app is
mounted in-process (no server needed); with ``--url http://host:port`` the
same requests go to a running server (see the ``serve`` subcommand).

Machine-readable JSON goes to stdout (canonical form: sorted keys, so two
runs with one seed are byte-identical); the human summary goes to stderr.
Exit codes: 0 pass, 1 verification failure, 2 usage or I/O error.

Family id grammar (see also GET /families):
  g2:c1:<unit> | g2:c2:<unit>      unit in {i,j,k,kl,jl,il}
  g2:c3:<lead>                     lead in {i,j}
  rot:xy:<unit>                    unit in {i,j,k,kl,jl,il,l}
  phase:<unit>
  rot:yz:<unit>:<block> | rot:zx:<block>        block in {I,II,III}
  boost:tz:<block!=III> | boost:tx:<block> | boost:ty:<unit>:<block>
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path

import httpx

from . import serialize

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octe6",
        description="Octonion / exceptional-Jordan-algebra verification client.",
        epilog="Family id grammar" + __doc__.split("Family id grammar", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--url", default=None, help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the randomized property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE",
                   help="tolerance override, repeatable")
    p.add_argument("--suite", action="append", default=[], metavar="NAME",
                   help="suite selection (octonion, jordan, e6, trace_identity, inner_automorphism)")
    p.add_argument("--json", type=Path, default=None, help="also write the report to this path")

    p = sub.add_parser("dims", help="numerical subgroup dimension report")
    p.add_argument("--json", type=Path, default=None)

    p = sub.add_parser("apply", help="apply a generator family to a matrix file")
    p.add_argument("family", help="family id, e.g. rot:zx:I")
    p.add_argument("parameter", type=float)
    p.add_argument("--in", dest="infile", type=Path, required=True, metavar="FILE")
    p.add_argument("--out", dest="outfile", type=Path, default=None, metavar="FILE")

    p = sub.add_parser("decompose", help="spectral decomposition of a matrix file")
    p.add_argument("infile", type=Path, metavar="FILE")
    p.add_argument("--json", type=Path, default=None)

    sub.add_parser("table", help="print the 7x7 signed unit multiplication table")

    p = sub.add_parser("states", help="print the 16-state lepton spectrum")
    p.add_argument("--json", type=Path, default=None)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


class ClientError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


async def _request(url: str | None, method: str, path: str, body: dict | None = None) -> dict:
    if url is None:
        from .service import app

        transport = httpx.ASGITransport(app=app)
        base = "http://octe6.internal"
    else:
        transport = None
        base = url
    async with httpx.AsyncClient(transport=transport, base_url=base, timeout=600.0) as client:
        try:
            response = await client.request(method, path, json=body)
        except httpx.HTTPError as exc:
            raise ClientError(f"request failed: {exc}") from exc
    try:
        payload = response.json()
    except json.JSONDecodeError:
        raise ClientError(f"non-JSON response (status {response.status_code})") from None
    if response.status_code >= 400:
        code = payload.get("error", "http_error") if isinstance(payload, dict) else "http_error"
        detail = payload.get("detail", payload) if isinstance(payload, dict) else payload
        raise ClientError(f"{code}: {detail}")
    return payload


def _call(url: str | None, method: str, path: str, body: dict | None = None) -> dict:
    return asyncio.run(_request(url, method, path, body))


def _emit(payload: dict, json_path: Path | None = None) -> None:
    text = serialize.dumps(payload)
    sys.stdout.write(text)
    if json_path is not None:
        json_path.write_text(text)


def _read_matrix_file(path: Path) -> dict:
    try:
        text = path.read_text()
    except OSError as exc:
        raise ClientError(f"io_error: cannot read {path}: {exc.strerror}")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ClientError(f"malformed_json: {path}: {exc}")
    if not isinstance(obj, dict):
        raise ClientError(f"malformed_matrix: {path}: matrix payload must be a JSON object")
    return obj


def _parse_tolerances(items: list[str]) -> dict[str, float]:
    out = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep:
            raise ClientError(f"bad --tol {item!r}: expected NAME=VALUE")
        try:
            out[name] = float(value)
        except ValueError:
            raise ClientError(f"bad --tol {item!r}: {value!r} is not a number") from None
    return out


def _cmd_verify(args) -> int:
    body = {
        "seed": args.seed,
        "trials": args.trials,
        "tolerances": _parse_tolerances(args.tol),
        "suites": args.suite or None,
    }
    report = _call(args.url, "POST", "/verify", body)
    _emit(report, args.json)
    for name, suite in report["suites"].items():
        marker = "ok" if suite["passed"] else "FAIL"
        print(f"suite {name}: {marker}", file=sys.stderr)
    status = "PASS" if report["passed"] else "FAIL"
    print(f"verification: {status} (seed={args.seed}, trials={args.trials})", file=sys.stderr)
    return EXIT_OK if report["passed"] else EXIT_VERIFICATION


def _cmd_dims(args) -> int:
    report = _call(args.url, "GET", "/dims")
    _emit(report, args.json)
    for name, sub in report["subsets"].items():
        gap = "inf" if sub["gap"] is None else f"{sub['gap']:.2e}"
        marker = "ok" if sub["passed"] else "MISMATCH"
        print(f"{name}: rank {sub['rank']} (expected {sub['expected']}, gap {gap}) {marker}", file=sys.stderr)
    return EXIT_OK if report["passed"] else EXIT_VERIFICATION


def _cmd_apply(args) -> int:
    matrix = _read_matrix_file(args.infile)
    body = {"matrix": matrix, "family": args.family, "parameter": args.parameter}
    result = _call(args.url, "POST", "/apply", body)
    out = {key: value for key, value in result["matrix"].items() if value is not None}
    _emit(out, args.outfile)
    print(
        f"applied {args.family} at {args.parameter}: det {result['det_before']!r} -> {result['det_after']!r}",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_decompose(args) -> int:
    matrix = _read_matrix_file(args.infile)
    result = _call(args.url, "POST", "/decompose", {"matrix": matrix})
    for pair in result["pairs"]:
        pair["idempotent"] = {k: v for k, v in pair["idempotent"].items() if v is not None}
    _emit(result, args.json)
    lams = ", ".join(f"{v:.6g}" for v in result["eigenvalues"])
    print(f"eigenvalues: [{lams}] degenerate={result['degenerate']}", file=sys.stderr)
    return EXIT_OK


def _cmd_table(args) -> int:
    result = _call(args.url, "GET", "/table")
    _emit(result)
    units = result["units"]
    width = 4
    header = "    " + "".join(u.rjust(width) for u in units)
    print(header, file=sys.stderr)
    for name, row in zip(units, result["rows"]):
        print(name.ljust(4) + "".join(v.rjust(width) for v in row), file=sys.stderr)
    return EXIT_OK


def _cmd_states(args) -> int:
    result = _call(args.url, "GET", "/states")
    _emit(result, args.json)
    for state in result["states"]:
        gen = state["generation"] or "-"
        print(
            f"{state['label']:<11} gen={gen:<2} helicity={state['helicity'] or '-':<5} "
            f"residual={state['residual_norm']:.1e} detP={state['det_p']:.1e}",
            file=sys.stderr,
        )
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("octe6.service:app", host=args.host, port=args.port)
    return EXIT_OK


_COMMANDS = {
    "verify": _cmd_verify,
    "dims": _cmd_dims,
    "apply": _cmd_apply,
    "decompose": _cmd_decompose,
    "table": _cmd_table,
    "states": _cmd_states,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except ClientError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
