"""Command-line front end.

Every verb except ``curve-scan`` prints one JSON report on stdout::

    {"status": "ok" | "fail" | "error", "payload": {...}, "elapsed_ms": 3, "version": "0.1.0"}

Exit codes: 0 ok, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from . import __version__
from .contverify import CONSTRUCTIONS, EXTRA_CONSTRUCTIONS, inversion_differential_check, run_check
from .ecurve import CSV_COLUMNS, BadRange, census, curve_scan, decide_existence_curve, parse_curve, prime_powers
from .finfield import MAX_ORDER
from .groups import parse_group
from .iafun import brute_force_exists, construct, decide_existence, verify, witness_from_json
from .registry import existence_registry, query_registry

EXIT = {"ok": 0, "fail": 1, "error": 2}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="invambig", description="Inverse ambiguous functions: decide, construct, verify.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("group-decide", help="existence verdict for a finite group")
    s.add_argument("target")
    s.add_argument("--oracle", action="store_true", help="also run the backtracking oracle (order <= 24)")

    s = sub.add_parser("group-construct", help="build a witness table")
    s.add_argument("target")
    s.add_argument("--out", type=Path, help="also write the bare witness file here")

    s = sub.add_parser("group-verify", help="check a witness file")
    s.add_argument("target")
    s.add_argument("--witness", required=True, help="witness JSON path, or - for stdin")

    for verb in ("curve-census", "curve-decide"):
        s = sub.add_parser(verb)
        s.add_argument("target", help="E(q;a=<int>,b=<int>)")

    s = sub.add_parser("curve-scan", help="census rows for y^2 = x^3 + ax + b over a range of q")
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.add_argument("--qmin", type=int, default=5)
    s.add_argument("--qmax", type=int, required=True)
    s.add_argument("--format", choices=("csv", "json", "table"), default="csv")
    s.add_argument("--out", type=Path)

    s = sub.add_parser("cont-check", help="sampled check of a continuous construction")
    s.add_argument("target", help=", ".join(CONSTRUCTIONS + EXTRA_CONSTRUCTIONS + ("inversion-differential",)))
    s.add_argument("--samples", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--tol", type=float)
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--dim", type=int)
    s.add_argument("--h", type=float, default=1e-6)

    s = sub.add_parser("registry", help="list verdicts, or query one space")
    s.add_argument("target", nargs="?")
    return p


def _read_witness(src: str) -> dict:
    text = sys.stdin.read() if src == "-" else Path(src).read_text()
    return witness_from_json(text)


def _scan_rows(args) -> list[dict]:
    if args.qmin < 0 or args.qmax > MAX_ORDER:
        raise BadRange(f"q range must lie within [0, {MAX_ORDER}]")
    return curve_scan(args.a, args.b, prime_powers(args.qmin, args.qmax))


def format_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows) + "\n"
    if fmt == "table":
        lines = ["  ".join(f"{c:>7}" for c in CSV_COLUMNS)]
        lines += ["  ".join(f"{str(r[c]).lower() if c == 'exists' else r[c]:>7}" for c in CSV_COLUMNS) for r in rows]
        return "\n".join(lines) + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({**r, "exists": str(r["exists"]).lower()})
    return buf.getvalue()


def run(args) -> tuple[str, dict]:
    """Execute a parsed command; returns (status, payload)."""
    verb = args.verb
    if verb == "group-decide":
        G = parse_group(args.target)
        payload = {"group": G.name, "order": G.order, **decide_existence(G).as_dict()}
        if args.oracle:
            payload["oracle_exists"] = brute_force_exists(G)
        return "ok", payload
    if verb == "group-construct":
        G = parse_group(args.target)
        w = construct(G)
        if w is None:
            return "ok", {"group": G.name, "table": None, "verdict": decide_existence(G).as_dict()}
        doc = w.to_json()
        if args.out:
            args.out.write_text(json.dumps(doc) + "\n")
        return "ok", doc
    if verb == "group-verify":
        G = parse_group(args.target)
        doc = _read_witness(args.witness)
        if doc.get("group") not in (None, G.name):
            raise ValueError(f"witness is for {doc['group']!r}, not {G.name!r}")
        if doc["table"] is None:
            raise ValueError("witness has no table")
        rep = verify(G, doc["table"])
        return ("ok" if rep.passed else "fail"), {"group": G.name, **rep.as_dict()}
    if verb in ("curve-census", "curve-decide"):
        C = parse_curve(args.target)
        c = census(C)
        payload = {"curve": C.label, "q": C.field.q, **c.as_dict()}
        if verb == "curve-decide":
            payload.update(decide_existence_curve(C).as_dict())
        return "ok", payload
    if verb == "cont-check":
        if args.target == "inversion-differential":
            rep = inversion_differential_check(args.n or 2, args.h)
        else:
            params = {k: v for k, v in (("n", args.n), ("k", args.k), ("dim", args.dim)) if v is not None}
            rep = run_check(args.target, samples=args.samples, seed=args.seed, tol=args.tol, **params)
        return ("ok" if rep.passed else "fail"), rep.as_dict()
    if verb == "registry":
        if args.target:
            return "ok", query_registry(args.target).as_dict()
        return "ok", {"entries": [e.as_dict() for e in existence_registry()]}
    raise UsageError(f"unknown verb {verb!r}")  # pragma: no cover


def main(argv=None, stdout=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = stdout or sys.stdout
    if argv[:2] == ["cont", "check"]:
        argv = ["cont-check"] + argv[2:]
    start = time.perf_counter()
    status, payload = "error", {}
    try:
        args = build_parser().parse_args(argv)
        if args.verb == "curve-scan":
            text = format_rows(_scan_rows(args), args.format)
            if args.out:
                args.out.write_text(text)
            out.write(text)
            return 0
        status, payload = run(args)
    except SystemExit as e:  # --help / --version
        return int(e.code or 0)
    except (UsageError, ValueError, OSError, KeyError, json.JSONDecodeError) as e:
        print(f"invambig: error: {e}", file=sys.stderr)
        status, payload = "error", {"error": type(e).__name__, "message": str(e)}
    report = {
        "status": status,
        "payload": payload,
        "elapsed_ms": int((time.perf_counter() - start) * 1000),
        "version": __version__,
    }
    out.write(json.dumps(report) + "\n")
    return EXIT[status]


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
