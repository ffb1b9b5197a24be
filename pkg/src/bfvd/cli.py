"""Command-line front end.

Exit status: 0 when the command completed (whatever the verdict), 2 for
usage and input errors, 3 for contract or integrity violations, 4 when
``--timeout-ms`` expired.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import selftest as selftest_mod
from .bench import FAMILIES, BenchConfig, Timeout, bench, summarize, time_limit
from .bfvd_kernel import kernelize_bfvd
from .biclique import enumerate_smaller_sides
from .errors import BfvdError, ContractError, IntegrityError, ParseError
from .graph import Graph, degeneracy, fen_value, minimum_fvs
from .instance import BddInstance, BfvdInstance, WbddInstance, parse_instance, write_instance
from .reductions import bdd_from_wbdd, hardness_gadget
from .solvers import STRATEGIES, solve
from .wbdd import (KERNEL_SHORT_LENGTHS, KERNEL_WINDOW, build_replacement_table,
                   expand_weights, kernelize_wbdd)

log = logging.getLogger("bfvd")


class UsageError(BfvdError):
    pass


def _emit(args, record: dict, text: str) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def _read(path: str | None):
    if path is None or path == "-":
        return parse_instance(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_instance(text)


def _need(inst, kind, what: str):
    if not isinstance(inst, kind):
        raise UsageError(f"{what} needs a {'bfvd' if kind is BfvdInstance else 'wbdd'} instance file")
    return inst


def _read_ids(path: str) -> list[int]:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    ids = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        for tok in line.split("#", 1)[0].split():
            try:
                ids.append(int(tok))
            except ValueError:
                raise ParseError(f"bad vertex id {tok!r}", lineno) from None
    return ids


def cmd_solve(args) -> int:
    inst = _need(_read(args.input), BfvdInstance, "solve")
    inst = _override(inst, args)
    d_set = _read_ids(args.fvs_file) if args.fvs_file else None
    verdict = solve(inst, args.algo, d_set=d_set)
    rec = verdict.to_dict()
    lines = ["YES" if verdict.answer else "NO"]
    if verdict.answer:
        lines.append("witness: " + " ".join(map(str, verdict.witness)))
    _emit(args, rec, "\n".join(lines))
    return 0


def _override(inst: BfvdInstance, args) -> BfvdInstance:
    i = inst.i if args.i is None else args.i
    j = inst.j if args.j is None else args.j
    k = inst.k if args.k is None else args.k
    return BfvdInstance(inst.g, i, j, k)


def _star_no_instance(r: int) -> BddInstance:
    # K_{1,r+1} with k = 0 has no solution
    return BddInstance(Graph(range(1, r + 3), [(1, t) for t in range(2, r + 3)]), r, 0)


def cmd_kernelize(args) -> int:
    inst = _read(args.input)
    if args.mode == "bfvd":
        inst = _override(_need(inst, BfvdInstance, "kernelize --mode bfvd"), args)
        out, trace = kernelize_bfvd(inst)
        doc = write_instance(out)
        rec = {"n": out.g.n, "m": out.g.m, "k": out.k, "rule_counts": dict(sorted(trace.counts().items()))}
    else:
        if isinstance(inst, BfvdInstance):
            if args.r is None or args.k is None:
                raise UsageError("--mode bdd on a bfvd file needs --r and --k")
            winst = WbddInstance(inst.g, args.r, args.k)
        else:
            winst = WbddInstance(inst.g, inst.r if args.r is None else args.r,
                                 inst.k if args.k is None else args.k, inst.w)
        wk, trace = kernelize_wbdd(winst)
        log.debug("weighted kernel: n=%d m=%d r=%d k=%d", wk.g.n, wk.g.m, wk.r, wk.k)
        out, trace = expand_weights(wk, trace)
        decided = None
        if out.k < 0:
            decided = "no"
            out = _star_no_instance(out.r)
        elif out.g.n == 0:
            decided = "yes"
        doc = ("" if decided is None else f"# decided: {decided}\n") + write_instance(out)
        rec = {"n": out.g.n, "m": out.g.m, "r": out.r, "k": out.k, "decided": decided,
               "rule_counts": dict(sorted(trace.counts().items()))}
    if args.json:
        rec["instance"] = doc
        print(json.dumps(rec, sort_keys=True))
    else:
        sys.stdout.write(doc)
    return 0


def cmd_enumerate(args) -> int:
    inst = _read(args.input)
    i = args.i if args.i is not None else getattr(inst, "i", None)
    j = args.j if args.j is not None else getattr(inst, "j", None)
    if i is None or j is None:
        raise UsageError("enumerate needs --i and --j for wbdd files")
    coll = enumerate_smaller_sides(inst.g, i, j)
    for side in coll.sides:
        common = len(coll.common_nbhd[side])
        _emit(args, {"side": list(side), "common": common},
              " ".join(map(str, side)) + f" | {common}")
    return 0


def cmd_stats(args) -> int:
    inst = _read(args.input)
    g = inst.g
    rec = {"n": g.n, "m": g.m, "d": degeneracy(g).d, "fen": fen_value(g),
           "fvs": len(minimum_fvs(g).fvs), "components": len(g.components())}
    _emit(args, rec, "\n".join(f"{key}={rec[key]}" for key in ("n", "m", "d", "fen", "fvs", "components")))
    return 0


def _fmt(v) -> str:
    return "inf" if v == float("inf") else str(int(v))


def cmd_charm_table(args) -> int:
    r = 2 if args.r is None else args.r
    long_length = args.window
    shorts = (6,) if long_length == 7 else KERNEL_SHORT_LENGTHS if long_length == KERNEL_WINDOW \
        else tuple(range(5, long_length))
    table = build_replacement_table(r, long_length, shorts, strict=False)
    for key, m in table.matrices.items():
        rep = table.replacement.get(key)
        rep_txt = "none" if rep is None else ",".join(map(str, rep.inner_offsets(r)))
        offs = ",".join(map(str, key))
        if args.json:
            print(json.dumps({"offsets": list(key), "matrix": [_fmt(v) for v in m.flat()],
                              "replacement": None if rep is None else list(rep.inner_offsets(r))}))
        else:
            print(f"{offs} | {' '.join(_fmt(v) for v in m.flat())} | {rep_txt}")
    unmatched = len(table.unmatched)
    summary = (f"# patterns {len(table)}, distinct matrices {table.distinct_matrices()}, "
               f"unmatched {unmatched}, short lengths {','.join(map(str, shorts))}")
    print(summary)
    if unmatched:
        raise IntegrityError(f"{unmatched} length-{long_length} patterns have no shorter equivalent")
    return 0


def cmd_reduce_bdd(args) -> int:
    inst = _need(_read(args.input), WbddInstance, "reduce-bdd")
    if args.i is None:
        raise UsageError("reduce-bdd needs --i")
    bdd = bdd_from_wbdd(inst)
    if args.r is not None or args.k is not None:
        bdd = BddInstance(bdd.g, bdd.r if args.r is None else args.r, bdd.k if args.k is None else args.k)
    sys.stdout.write(write_instance(hardness_gadget(bdd, args.i)))
    return 0


def cmd_bench(args) -> int:
    cfg = BenchConfig(args.family, seed=args.seed or 0, seeds=args.seeds, max_fen=args.max_fen,
                      max_n=args.max_n, timeout_ms=args.timeout_ms, timing=not args.no_time)
    reports = []
    for rep in bench(cfg):
        reports.append(rep)
        if args.json:
            print(rep.to_json())
    for line in summarize(cfg.family, reports):
        print(line if not args.json else "# " + line)
    return 0


def cmd_selftest(args) -> int:
    ok = selftest_mod.run(seed=args.seed or 0, out=print)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="instance file ('-' or absent: stdin)")
    common.add_argument("--json", action="store_true", help="one JSON record per line")
    common.add_argument("--timeout-ms", type=int, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("-v", "--verbose", action="store_true")
    for flag in ("--i", "--j", "--k", "--r"):
        common.add_argument(flag, type=int, default=None)

    p = argparse.ArgumentParser(prog="bfvd", description="biclique-free and bounded-degree vertex deletion")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("solve", parents=[common], help="decide a bfvd instance")
    s.add_argument("--algo", choices=STRATEGIES, default="auto")
    s.add_argument("--fvs-file", help="whitespace-separated feedback vertex set for --algo fvn")
    s.set_defaults(func=cmd_solve)
    s = sub.add_parser("kernelize", parents=[common], help="shrink an instance by feedback edge number")
    s.add_argument("--mode", choices=("bdd", "bfvd"), required=True)
    s.set_defaults(func=cmd_kernelize)
    s = sub.add_parser("enumerate", parents=[common], help="list smaller sides of all K_{i,j}")
    s.set_defaults(func=cmd_enumerate)
    s = sub.add_parser("stats", parents=[common], help="degeneracy, fen and minimum fvs")
    s.set_defaults(func=cmd_stats)
    s = sub.add_parser("charm-table", parents=[common], help="dump path patterns and their matrices")
    s.add_argument("--window", type=int, default=7, help="long path length (default 7)")
    s.set_defaults(func=cmd_charm_table)
    s = sub.add_parser("reduce-bdd", parents=[common], help="build the biclique gadget instance")
    s.set_defaults(func=cmd_reduce_bdd)
    s = sub.add_parser("bench", parents=[common], help="run a seeded benchmark family")
    s.add_argument("--family", choices=FAMILIES, required=True)
    s.add_argument("--seeds", type=int, default=30)
    s.add_argument("--max-fen", type=int, default=10)
    s.add_argument("--max-n", type=int, default=300)
    s.add_argument("--no-time", action="store_true", help="omit wall times (byte-stable output)")
    s.set_defaults(func=cmd_bench)
    s = sub.add_parser("selftest", parents=[common], help="run the built-in property checks")
    s.set_defaults(func=cmd_selftest)
    return p


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "charm-table" and args.window < 5:
        print("error: --window must be at least 5", file=sys.stderr)
        return 2
    # bench applies the time limit per instance
    limit = None if args.command == "bench" else args.timeout_ms
    log.debug("command %s, time limit %s ms", args.command, limit)
    try:
        with time_limit(limit):
            return args.func(args)
    except Timeout as exc:
        _emit(args, {"status": "timeout", "command": args.command}, f"TIMEOUT: {exc}")
        return 4
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ContractError, IntegrityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run_cli())
