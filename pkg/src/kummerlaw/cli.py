"""Command-line front end: a thin client of the service layer.

Every subcommand builds a request model, sends it to the FastAPI app (over
an in-process transport by default, or to a remote --server URL) and prints
the JSON response with sorted keys, so identical invocations produce
byte-identical reports.

Exit codes: 0 all requested checks passed; 1 a check failed; 2 malformed
input.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys

import httpx


def _load_json_arg(value: str):
    """Inline JSON, a bare token (number / p/q literal), or a file path."""
    if value is None:
        return None
    if os.path.isfile(value):
        with open(value, "r", encoding="utf-8") as fh:
            return json.load(fh)
    try:
        return json.loads(value)
    except json.JSONDecodeError:
        return value  # bare token such as 3/4


def _request(method: str, path: str, payload, server: str | None):
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            return client.request(method, path, json=payload)

    from .service import app

    async def go():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://kernel", timeout=600.0
        ) as client:
            return await client.request(method, path, json=payload)

    return asyncio.run(go())


def _emit(obj, out_path: str | None) -> None:
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _finish(response, out_path: str | None) -> int:
    try:
        body = response.json()
    except ValueError:
        body = {"error": "InvalidResponse", "detail": response.text}
    _emit(body, out_path)
    if response.status_code >= 400:
        return 2
    if isinstance(body, dict) and body.get("passed") is False:
        return 1
    return 0


def _curve_payload(args) -> dict:
    if getattr(args, "curve", None):
        data = _load_json_arg(args.curve)
        if not isinstance(data, dict):
            raise SystemExit(2)
        return data
    return {
        "lambda4": args.lambda4,
        "lambda6": args.lambda6,
        "lambda8": args.lambda8,
        "lambda10": args.lambda10,
    }


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--server", help="remote service URL (default: in-process)")
    p.add_argument("--out", help="write the JSON report to this file")


def _add_curve_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--curve", help="curve JSON file or inline JSON")
    p.add_argument("--lambda4", type=json.loads, default=0)
    p.add_argument("--lambda6", type=json.loads, default=0)
    p.add_argument("--lambda8", type=json.loads, default=0)
    p.add_argument("--lambda10", type=json.loads, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kummerlaw",
        description="Evaluate multivalued group laws and run their verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("law-eval", help="one product of a selected law")
    p.add_argument("--law", required=True,
                   choices=["p2", "zplus", "groupoid1", "groupoid2", "cp1", "eg", "rk"])
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--z", help="optional third operand: probe associativity at (x, y, z)")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--lam", default="0")
    p.add_argument("--lam1", default="0")
    p.add_argument("--lam2", default="0")
    p.add_argument("--g2", default="0")
    p.add_argument("--g3", default="0")
    p.add_argument("--curve", help="curve JSON file or inline JSON ({\"g2\":..,\"g3\":..})")
    p.add_argument("--exact", action="store_true")
    _add_common(p)

    p = sub.add_parser("axioms-check", help="axiom suite for a law")
    p.add_argument("--law", required=True,
                   choices=["p2", "zplus", "groupoid1", "groupoid2", "cp1", "rk", "kummer"])
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--lam", default="0")
    p.add_argument("--lam1", default="0")
    p.add_argument("--lam2", default="0")
    p.add_argument("--g2", default="0")
    p.add_argument("--g3", default="0")
    _add_curve_flags(p)
    _add_common(p)

    p = sub.add_parser("kummer-mul", help="two-valued product of embedded classes")
    _add_curve_flags(p)
    p.add_argument("--x", required=True, help="point JSON file or inline array")
    p.add_argument("--y", required=True, help="point JSON file or inline array")
    p.add_argument("--tol", type=float, default=1e-9)
    _add_common(p)

    p = sub.add_parser("surface-check", help="quartic membership of embedded points")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--exact", action="store_true")
    _add_common(p)

    p = sub.add_parser("groupoid-check", help="fiberwise axiom suite for a deformation family")
    p.add_argument("--family", choices=["one_param", "two_param"], default="one_param")
    p.add_argument("--fibers", type=int, default=5)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--tol", type=float, default=1e-9)
    _add_common(p)

    p = sub.add_parser("kowalevski", help="separation-variable solutions")
    p.add_argument("--rational", action="store_true")
    p.add_argument("--u1", default="0")
    p.add_argument("--u3", default="0")
    _add_curve_flags(p)
    p.add_argument("--init", help="initial divisor JSON file or inline JSON")
    p.add_argument("--t1", type=float, default=1.0)
    p.add_argument("--dt", type=float, default=1e-3)
    _add_common(p)

    p = sub.add_parser("typo-ledger", help="documented printed-formula discrepancies")
    _add_common(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    server = getattr(args, "server", None)
    out = getattr(args, "out", None)

    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    if args.command == "law-eval":
        payload = {
            "law": args.law,
            "x": _load_json_arg(args.x),
            "y": _load_json_arg(args.y),
            "lam": _load_json_arg(args.lam),
            "lam1": _load_json_arg(args.lam1),
            "lam2": _load_json_arg(args.lam2),
            "g2": _load_json_arg(args.g2),
            "g3": _load_json_arg(args.g3),
            "tol": {"rel": args.tol, "abs": args.tol},
            "exact": args.exact,
        }
        if args.z is not None:
            payload["z"] = _load_json_arg(args.z)
        if args.curve:
            payload["curve"] = _load_json_arg(args.curve)
        return _finish(_request("POST", "/law-eval", payload, server), out)

    if args.command == "axioms-check":
        payload = {
            "law": args.law,
            "samples": args.samples,
            "seed": args.seed,
            "tol": {"rel": args.tol, "abs": args.tol},
            "lam": _load_json_arg(args.lam),
            "lam1": _load_json_arg(args.lam1),
            "lam2": _load_json_arg(args.lam2),
            "g2": _load_json_arg(args.g2),
            "g3": _load_json_arg(args.g3),
        }
        if args.law == "kummer":
            payload["curve"] = _curve_payload(args)
        return _finish(_request("POST", "/axioms-check", payload, server), out)

    if args.command == "kummer-mul":
        payload = {
            "curve": _curve_payload(args),
            "x": _load_json_arg(args.x),
            "y": _load_json_arg(args.y),
            "tol": {"rel": args.tol, "abs": args.tol},
        }
        return _finish(_request("POST", "/kummer-mul", payload, server), out)

    if args.command == "surface-check":
        payload = {"samples": args.samples, "seed": args.seed, "exact": args.exact}
        return _finish(_request("POST", "/surface-check", payload, server), out)

    if args.command == "groupoid-check":
        payload = {
            "family": args.family,
            "fibers": args.fibers,
            "triples_per_fiber": args.samples,
            "seed": args.seed,
            "tol": {"rel": args.tol, "abs": args.tol},
        }
        return _finish(_request("POST", "/groupoid-check", payload, server), out)

    if args.command == "kowalevski":
        payload = {
            "rational": args.rational,
            "u1": _load_json_arg(args.u1),
            "u3": _load_json_arg(args.u3),
            "t1": args.t1,
            "dt": args.dt,
        }
        if not args.rational:
            payload["curve"] = _curve_payload(args)
            if args.init:
                payload["init"] = _load_json_arg(args.init)
        return _finish(_request("POST", "/kowalevski", payload, server), out)

    if args.command == "typo-ledger":
        return _finish(_request("GET", "/typo-ledger", None, server), out)

    return 2


if __name__ == "__main__":
    sys.exit(main())
