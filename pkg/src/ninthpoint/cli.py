"""Command-line interface.

Subcommands: compute, verify, trop, newton, bench, serve.  Everything
printed to stdout is a canonical JSON document with exact-string rational
values, byte-identical across runs for identical inputs; timings go to
stderr.  Exit codes: 0 success, 1 degenerate input or failed verification,
2 usage or parse error.

The environment variable CB_SEED overrides the default random seed of the
verification subcommands when --seed is not given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional, Sequence

from . import documents, newton, service, tropical, verify
from .verify import IDENTITIES

EXIT_OK = 0
EXIT_DEGENERATE = 1
EXIT_USAGE = 2

DEFAULT_SEED = 2026


def _default_seed() -> int:
    env = os.environ.get("CB_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(f"CB_SEED must be an integer, got {env!r}")
    return DEFAULT_SEED


def _emit(payload: object) -> None:
    sys.stdout.write(documents.canonical_json(payload))


def _load_document(path: str) -> object:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise documents.DocumentError("$", f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise documents.DocumentError("$", f"invalid JSON: {exc}")


def _parse_triple(text: Optional[str]) -> Optional[tuple[int, int, int]]:
    if text is None:
        return None
    parts = text.split(",")
    if len(parts) != 3:
        raise documents.DocumentError("--triple", "expected three comma-separated indices")
    try:
        triple = tuple(int(p) for p in parts)
    except ValueError:
        raise documents.DocumentError("--triple", f"not integers: {text!r}")
    return triple  # type: ignore[return-value]


def cmd_compute(args: argparse.Namespace) -> int:
    doc = _load_document(args.points)
    config = documents.parse_points_document(doc)
    triple = _parse_triple(args.triple)
    start = time.perf_counter()
    result = documents.handle_compute(config, args.method, triple)
    elapsed = time.perf_counter() - start
    _emit(result)
    print(f"computed in {elapsed * 1000:.1f} ms", file=sys.stderr)
    return EXIT_OK if result["p9"] is not None else EXIT_DEGENERATE


def cmd_verify(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    names = sorted(IDENTITIES) if args.which == "all" else [args.which]
    reports = [
        verify.run_identity_suite(name, args.trials, seed, args.bound) for name in names
    ]
    payload = reports[0].to_json() if len(reports) == 1 else {
        "suites": [r.to_json() for r in reports],
        "status": "pass" if all(r.status == "pass" for r in reports) else "fail",
    }
    _emit(payload)
    ok = all(r.status == "pass" for r in reports)
    return EXIT_OK if ok else EXIT_DEGENERATE


def cmd_trop(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    report = tropical.valuation_agreement(args.prime, args.trials, seed)
    _emit(report.to_json())
    return EXIT_OK if report.soundness_violations == 0 else EXIT_DEGENERATE


def cmd_newton(args: argparse.Namespace) -> int:
    support = sorted(newton.newton_support(args.poly))
    payload: dict = {
        "poly": args.poly,
        "variables": list(newton.VARIABLES),
        "support_size": len(support),
    }
    if not args.support_only:
        payload["vertices"] = newton.newton_vertex_count(support)
    if args.full_support:
        payload["support"] = [list(e) for e in support]
    _emit(payload)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    import random

    from .ninth import p9_cross_ratio, p9_determinantal, p9_fano, p9_reduced
    from .verify import random_nondegenerate_config

    rng = random.Random(args.seed if args.seed is not None else _default_seed())
    configs = [random_nondegenerate_config(rng, 50) for _ in range(args.configs)]
    counts = {"fano_reduced": None, "fano_full": None}
    timings: dict[str, float] = {}

    def timed(name, fn):
        start = time.perf_counter()
        values = [fn(c) for c in configs]
        timings[name] = time.perf_counter() - start
        return values

    det_pts = timed("det", p9_determinantal)
    red_pts = timed("reduced", p9_reduced)
    cr_pts = timed("crossratio", p9_cross_ratio)
    fr = timed("fano_reduced", lambda c: p9_fano(c, "reduced"))
    ff = timed("fano_full", lambda c: p9_fano(c, "full"))
    counts["fano_reduced"] = fr[0].evaluations
    counts["fano_full"] = ff[0].evaluations
    agree = all(
        d == r == x == f.canonical_point() == g.canonical_point()
        for d, r, x, f, g in zip(det_pts, red_pts, cr_pts, fr, ff)
    )
    assert counts["fano_reduced"] == 2880 and counts["fano_full"] == 40320
    _emit(
        {
            "configs": args.configs,
            "monomial_evaluations": counts,
            "methods_agree": agree,
        }
    )
    for name, secs in timings.items():
        print(f"{name}: {secs * 1000:.1f} ms total", file=sys.stderr)
    return EXIT_OK if agree else EXIT_DEGENERATE


def cmd_serve(args: argparse.Namespace) -> int:
    service.serve(args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ninthpoint",
        description="Exact ninth base point of the cubics through eight plane points",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("compute", help="compute and certify the ninth point")
    p.add_argument("--points", required=True, help="points document (JSON file or '-')")
    p.add_argument("--method", default="det",
                   choices=["det", "reduced", "fano", "fano-full", "crossratio"])
    p.add_argument("--triple", default=None, help="index triple i,j,k (formula methods)")
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("verify", help="randomized exact identity checks")
    p.add_argument("--which", default="all", choices=["all"] + sorted(IDENTITIES))
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--bound", type=int, default=25)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("trop", help="p-adic vs tropical valuation experiments")
    p.add_argument("--prime", type=int, default=2)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=cmd_trop)

    p = sub.add_parser("newton", help="support and hull vertex count of one ingredient")
    p.add_argument("--poly", required=True, choices=list(tropical.INGREDIENT_NAMES))
    p.add_argument("--support-only", action="store_true", help="skip the vertex LP")
    p.add_argument("--full-support", action="store_true", help="include exponent vectors")
    p.set_defaults(fn=cmd_newton)

    p = sub.add_parser("bench", help="evaluation counts and timings on a seeded corpus")
    p.add_argument("--configs", type=int, default=3)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("serve", help="run the local JSON service")
    p.add_argument("--port", type=int, default=8439)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "fn", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.fn(args)
    except documents.DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
