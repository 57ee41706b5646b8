"""Command line: generate, verify, jarnik, bench.

Exit codes: 0 success / verified, 1 domain or verification failure,
2 parse error.
"""
from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from typing import List, Optional, Sequence

import numpy as np

from .constructions import METHODS, build_double_circle, jarnik_counts, jarnik_polygon, translate_to_grid
from .lattice import LatticeError
from .render import svg_point_set
from .sequences import PointSet, Role
from .verification import grid_size, is_double_circle, label_roles

ROLE_NAMES = {Role.UNLABELED: "unlabeled", Role.HULL: "hull", Role.INNER: "inner"}


class ParseError(Exception):
    pass


def format_points(P: PointSet, header: Sequence[str]) -> str:
    lines = [f"# {h}" for h in header]
    lines.extend(f"{x} {y}" for x, y in P.points.tolist())
    return "\n".join(lines) + "\n"


def format_json(P: PointSet, meta: dict) -> str:
    doc = dict(meta)
    doc["points"] = P.points.tolist()
    if P.labels is not None:
        doc["labels"] = [ROLE_NAMES[Role(int(c))] for c in P.labels]
    return json.dumps(doc, sort_keys=True) + "\n"


def parse_points(text: str) -> np.ndarray:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'x y', got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer coordinate in {raw!r}") from None
    return np.array(rows, dtype=np.int64).reshape(-1, 2)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    P = translate_to_grid(METHODS[args.method](args.n))
    P = label_roles(P)
    N = grid_size(P)
    if args.format == "points":
        text = format_points(P, [f"n={args.n} method={args.method} N={N}"])
    elif args.format == "json":
        text = format_json(P, {"n": args.n, "method": args.method, "N": N})
    else:
        text = svg_point_set(P, scale=args.scale, title=f"{args.method} n={args.n} N={N}")
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    if args.input and args.input != "-":
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        pts = parse_points(text)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    report = is_double_circle(pts)
    n = len(pts) // 2
    if report.passed:
        print(f"PASS n={n} N={grid_size(pts)}")
        return 0
    witness = "" if report.witness is None else " witness=" + ",".join(map(str, report.witness))
    print(f"FAIL {report.failed_condition}{witness} {report.detail}".rstrip())
    return 1


def cmd_jarnik(args) -> int:
    P = jarnik_polygon(args.q)
    s = jarnik_counts(args.q)
    N = grid_size(P)
    summary = (
        f"Q={s.Q} vertex_count={s.vertex_count} size_S={s.size_S} N={N} "
        f"count_ratio={s.count_ratio:.6f} size_ratio={s.size_ratio:.6f}"
    )
    if args.format == "points":
        text = format_points(P, [summary])
    elif args.format == "json":
        meta = {
            "Q": s.Q,
            "vertex_count": s.vertex_count,
            "size_S": s.size_S,
            "N": N,
            "count_ratio": round(s.count_ratio, 6),
            "size_ratio": round(s.size_ratio, 6),
        }
        text = format_json(P, meta)
    else:
        text = svg_point_set(P, scale=args.scale, title=summary)
    _emit(text, args.out)
    return 0


def bench_rows(ns: Sequence[int], repeat: int = 3):
    for n in ns:
        times = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            P = build_double_circle(n)
            times.append(time.perf_counter() - t0)
        N = grid_size(P)
        yield n, statistics.median(times), N, N / n**1.5


def cmd_bench(args) -> int:
    lines = ["n,seconds,N,ratio"]
    for n, sec, N, ratio in bench_rows(args.n, args.repeat):
        lines.append(f"{n},{sec:.6f},{N},{ratio:.6f}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="doublecircle", description="Small-grid double circles and Jarnik polygons.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="emit a point set")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--method", choices=sorted(METHODS), default="doublecircle")
    g.add_argument("--format", choices=["points", "json", "svg"], default="points")
    g.add_argument("--scale", type=float, default=20.0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="check that a point list is a double circle")
    v.add_argument("input", nargs="?", help="point file ('x y' per line); stdin if omitted")
    v.set_defaults(func=cmd_verify)

    j = sub.add_parser("jarnik", help="emit a Jarnik polygon with its exact counts")
    j.add_argument("--q", type=int, required=True)
    j.add_argument("--format", choices=["points", "json", "svg"], default="points")
    j.add_argument("--scale", type=float, default=20.0)
    j.add_argument("--out")
    j.set_defaults(func=cmd_jarnik)

    b = sub.add_parser("bench", help="time build_double_circle, CSV on stdout")
    b.add_argument("--n", type=int, nargs="+", default=[2**e for e in range(16, 21)])
    b.add_argument("--repeat", type=int, default=3)
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LatticeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
