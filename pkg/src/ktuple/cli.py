"""Command-line front end.

Exit codes: 0 ok, 1 verify false, 2 parse/parameter error, 3 not
co-biconvex, 4 unsupported k, 5 infeasible, 6 oracle budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .errors import (
    BudgetExceeded,
    InputError,
    NotCoBiconvex,
    StructureViolation,
    UnsupportedK,
    WitnessNotConstructed,
)

OK, VERIFY_FALSE, PARAM, NOT_COBICONVEX, UNSUPPORTED, INFEASIBLE, BUDGET = range(7)


@dataclass
class ResultRecord:
    instance: str
    k: int
    value: int | str
    witness: list[int] | np.ndarray | None = None
    derivation: str = ""
    elapsed_ms: float = 0.0
    extra: dict = field(default_factory=dict)
    code: int = OK

    def _items(self):
        yield "instance", self.instance
        yield "k", self.k
        yield "value", self.value
        if self.witness is not None:
            yield "witness", self.witness
        yield "derivation", self.derivation
        yield "elapsed_ms", round(self.elapsed_ms, 3)
        yield from self.extra.items()

    def as_dict(self) -> dict:
        return {key: _plain(val) for key, val in self._items()}

    def render(self, as_json: bool) -> str:
        if as_json:
            # arrays are serialized one field at a time to keep peak memory low
            fields = []
            for key, val in self._items():
                text = "[" + _join(val) + "]" if isinstance(val, np.ndarray) else json.dumps(val, separators=(",", ":"))
                fields.append(f"{json.dumps(key)}:{text}")
            return "{" + ",".join(fields) + "}"
        lines = [f"instance: {self.instance}", f"k: {self.k}", f"value: {self.value}"]
        if self.witness is not None:
            lines.append("witness: " + _join(self.witness))
        for key, val in self.extra.items():
            lines.append(f"{key}: " + (_join(val) if isinstance(val, (list, np.ndarray)) else str(val)))
        lines.append(f"derivation: {self.derivation}")
        lines.append(f"elapsed_ms: {self.elapsed_ms:.3f}")
        return "\n".join(lines)


def _join(items) -> str:
    if isinstance(items, np.ndarray):
        items = items.tolist()
    return ",".join(map(str, items))


def _plain(value):
    return value.tolist() if isinstance(value, np.ndarray) else value


def _record(instance: str, res, elapsed: float, extra: dict | None = None) -> ResultRecord:
    chain = " > ".join(t.value for t in res.derivation)
    if not res.feasible:
        return ResultRecord(instance, res.k, "infeasible", None, chain, elapsed, code=INFEASIBLE)
    return ResultRecord(instance, res.k, res.value, res.sorted_witness, chain, elapsed, extra or {})


# -- argument helpers --------------------------------------------------------

def _k_values(text: str) -> list[int]:
    """'3', '1,2,5' or '1-9'."""
    out = []
    try:
        for part in text.split(","):
            part = part.strip()
            if "-" in part[1:]:
                lo, hi = part.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k specification {text!r}") from None
    if any(k < 0 for k in out):
        raise argparse.ArgumentTypeError("k must be non-negative")
    return out


def _vertex_set(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex list {text!r}") from None


def _load(args):
    from .graphio import load_graph

    return load_graph(args.file, args.format)


def _web_params(args, need: bool = True):
    from .web import WebParams

    n = getattr(args, "n", None)
    m = getattr(args, "m", None)
    if n is None or m is None:
        if need:
            raise InputError("web instance needs both n and m")
        return None
    return WebParams(n, m)


# -- commands ----------------------------------------------------------------

def cmd_recognize(args, out) -> int:
    from .graph import augmented_adjacency
    from .recognition import circ1p_columns, decompose_cobiconvex

    g = _load(args)
    circ = circ1p_columns(augmented_adjacency(g)) is not None
    try:
        d = decompose_cobiconvex(g)
    except NotCoBiconvex:
        d = None
    report = {"instance": args.file, "n": g.n, "cobiconvex": d is not None, "circular_ones": circ}
    if d is not None:
        report.update(c1=list(d.c1), c2=list(d.c2), u=sorted(d.u), ordering=list(d.ordering))
    if args.json:
        print(json.dumps(report, separators=(",", ":")), file=out)
    elif d is None:
        print(f"co-biconvex: no; circular-ones: {_yn(circ)}", file=out)
    else:
        print(f"co-biconvex: yes; |C1|={len(d.c1)} |C2|={len(d.c2)} |U|={len(d.u)}", file=out)
        print(f"circular-ones: {_yn(circ)}", file=out)
        print("ordering: " + _join(d.ordering), file=out)
        print("C1: " + _join(d.c1), file=out)
        print("C2: " + _join(d.c2), file=out)
        print("U: " + _join(sorted(d.u)), file=out)
    return OK


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _solve_one(g, instance: str, k: int) -> ResultRecord:
    from .cobiconvex import solve_cobiconvex

    start = time.perf_counter()
    try:
        res = solve_cobiconvex(g, k)
    except UnsupportedK as exc:
        return ResultRecord(instance, k, "unsupported", None, str(exc), 0.0, code=UNSUPPORTED)
    except NotCoBiconvex as exc:
        return ResultRecord(instance, k, "not-co-biconvex", None, str(exc), 0.0, code=NOT_COBICONVEX)
    except WitnessNotConstructed as exc:
        return ResultRecord(instance, k, exc.value, None, str(exc), 0.0, code=OK)
    return _record(instance, res, (time.perf_counter() - start) * 1e3)


def cmd_solve(args, out) -> int:
    g = _load(args)
    jobs = [(g, args.file, k) for k in args.k]
    return _emit(_run(jobs, _solve_one, args.jobs), args, out)


def _web_one(n: int, m: int, k: int) -> ResultRecord:
    from .web import WebParams, algorithm1, label_to_vertex

    p = WebParams(n, m)
    start = time.perf_counter()
    res = algorithm1(p, k)
    elapsed = (time.perf_counter() - start) * 1e3
    labels = res.extra.get("labels")
    if labels is None:
        return _record(f"web n={n} m={m}", res, elapsed)
    chain = " > ".join(t.value for t in res.derivation)
    extra = {"order": labels, "vertices": label_to_vertex(p, labels)}
    return ResultRecord(f"web n={n} m={m}", k, res.value, np.sort(labels), chain, elapsed, extra)


def cmd_web(args, out) -> int:
    p = _web_params(args)
    jobs = [(p.n, p.m, k) for k in args.k]
    return _emit(_run(jobs, _web_one, args.jobs), args, out)


def cmd_oracle(args, out) -> int:
    from .oracle import OracleBudget, oracle_min_ktuple

    g, instance = _instance_graph(args)
    budget = OracleBudget(max_vertices=args.max_vertices, time_limit=args.time_limit)
    records = []
    for k in args.k:
        start = time.perf_counter()
        try:
            res = oracle_min_ktuple(g, k, budget)
        except BudgetExceeded as exc:
            records.append(ResultRecord(instance, k, "budget-exceeded", None, str(exc), code=BUDGET))
            continue
        records.append(_record(instance, res, (time.perf_counter() - start) * 1e3))
    return _emit(records, args, out)


def _instance_graph(args):
    from .web import web_graph

    if args.file is not None:
        return _load(args), args.file
    p = _web_params(args)
    return web_graph(p), f"web n={p.n} m={p.m}"


def cmd_verify(args, out) -> int:
    from .graph import deficiencies

    if args.file is None:
        from .web import coverage, verify_web

        p = _web_params(args)
        bad = [v for v in args.set if not 1 <= v <= p.n]
        if bad:
            raise InputError(f"vertex {bad[0]} out of range 1..{p.n}")
        instance = f"web n={p.n} m={p.m}"
        if verify_web(p, args.set, args.k[0]):
            short = {}
        else:
            cov = coverage(p, args.set)
            short = {j + 1: args.k[0] - int(c) for j, c in enumerate(cov) if c < args.k[0]}
    else:
        g = _load(args)
        instance = args.file
        short = deficiencies(g, args.set, args.k[0])
    ok = not short
    if args.json:
        print(json.dumps({"instance": instance, "k": args.k[0], "set": sorted(args.set), "dominating": ok,
                          "deficiency": {str(v): d for v, d in short.items()}}, separators=(",", ":")), file=out)
    else:
        print(f"{args.k[0]}-tuple dominating: {_yn(ok)}", file=out)
        for v, d in short.items():
            print(f"vertex {v}: short by {d}", file=out)
    return OK if ok else VERIFY_FALSE


def cmd_gen(args, out) -> int:
    from .graphio import format_edge_list, format_matrix

    if args.kind == "web":
        from .web import WebParams, web_graph

        if len(args.params) != 2:
            raise InputError("gen web takes two parameters: n m")
        p = WebParams(*args.params)
        g = web_graph(p)
        comments = [f"web n={p.n} m={p.m} (shifted labels)"]
    else:
        from .generate import CoBiconvexSpec, random_cobiconvex

        if len(args.params) != 2:
            raise InputError("gen cobiconvex takes two parameters: |C1| |C2|")
        spec = CoBiconvexSpec(args.params[0], args.params[1], args.universal, args.width, args.seed)
        g = random_cobiconvex(spec)
        comments = [f"cobiconvex c1={spec.c1} c2={spec.c2} universal={spec.universal} "
                    f"width={spec.width} seed={spec.seed}"]
    text = format_edge_list(g, comments) if args.format == "edges" else format_matrix(g)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return OK


# -- plumbing ----------------------------------------------------------------

def _run(jobs, fn, workers: int):
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, *zip(*jobs)))
    return [fn(*job) for job in jobs]


def _emit(records, args, out) -> int:
    code = OK
    for i, rec in enumerate(records):
        if i and not args.json:
            print(file=out)
        print(rec.render(args.json), file=out)
        if code == OK:
            code = rec.code
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ktuple", description="Exact k-tuple domination on "
                                     "co-biconvex and web graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, file_required: bool, k: bool = True, jobs: bool = False):
        if file_required:
            p.add_argument("file")
        else:
            p.add_argument("file", nargs="?")
            p.add_argument("-n", type=int)
            p.add_argument("-m", type=int)
        p.add_argument("--format", choices=["edges", "matrix"], default="edges")
        if k:
            p.add_argument("-k", type=_k_values, required=True, help="k, or a list like 1,2,4 or 1-9")
        p.add_argument("--json", action="store_true", help="one JSON record per line")
        if jobs:
            p.add_argument("--jobs", type=int, default=1, help="worker processes for several k")

    p = sub.add_parser("recognize", help="class verdicts and the (C1, C2, U) partition")
    common(p, True, k=False)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("solve", help="k-tuple domination on a co-biconvex graph")
    common(p, True, jobs=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("web", help="k-tuple domination on W_n^m")
    p.add_argument("pos", nargs="*", type=int, metavar="N M")
    p.add_argument("-n", type=int)
    p.add_argument("-m", type=int)
    p.add_argument("-k", type=_k_values, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_web)

    p = sub.add_parser("oracle", help="brute-force minimum (small graphs only)")
    common(p, False)
    p.add_argument("--max-vertices", type=int, default=14)
    p.add_argument("--time-limit", type=float, default=60.0)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a candidate k-tuple dominating set")
    common(p, False)
    p.add_argument("--set", type=_vertex_set, required=True, help="comma-separated vertices")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a web or random co-biconvex graph")
    p.add_argument("kind", choices=["web", "cobiconvex"])
    p.add_argument("params", nargs="+", type=int)
    p.add_argument("--universal", type=int, default=0)
    p.add_argument("--width", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=["edges", "matrix"], default="edges")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return PARAM if exc.code else OK
    if args.command == "web":
        if args.pos:
            if len(args.pos) != 2:
                print("error: web takes positional N M", file=sys.stderr)
                return PARAM
            args.n, args.m = args.pos
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARAM
    except StructureViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NOT_COBICONVEX


if __name__ == "__main__":
    sys.exit(main())
