"""Benchmark harness: seeded instance families, per-run reports and summary tables."""
from __future__ import annotations

import json
import random
import signal
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field
from typing import Iterator

from .bfvd_kernel import kernelize_bfvd
from .errors import ContractError
from .graph import degeneracy, minimum_fvs
from .generators import degenerate, forest_plus_fvs, gnp, tree_plus_edges
from .instance import BddInstance, BfvdInstance, WbddInstance
from .reductions import bdd_oracle_minimum, hardness_gadget
from .solvers import oracle_minimum, solve_branching, solve_degenerate, solve_fvn
from .wbdd import expand_weights, kernelize_wbdd

FAMILIES = ("fen-sweep", "degen-sweep", "fvn-sweep", "gadget")


class Timeout(Exception):
    pass


@contextmanager
def time_limit(ms: int | None):
    """Raise ``Timeout`` in the main thread after ``ms`` milliseconds."""
    if not ms:
        yield
        return

    def fire(signum, frame):
        raise Timeout(f"time limit of {ms} ms exceeded")

    old = signal.signal(signal.SIGALRM, fire)
    signal.setitimer(signal.ITIMER_REAL, ms / 1000)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


@dataclass
class RunReport:
    family: str
    index: int
    seed: int
    n: int
    m: int
    i: int | None = None
    j: int | None = None
    k: int | None = None
    r: int | None = None
    d: int | None = None
    fen: int | None = None
    fvs: int | None = None
    algo: str | None = None
    verdict: str | None = None
    oracle: str | None = None
    wall_ms: float | None = None
    kernel_before: int | None = None
    kernel_after: int | None = None
    rule_counts: dict[str, int] = field(default_factory=dict)

    @property
    def disagrees(self) -> bool:
        return self.oracle is not None and self.verdict in ("yes", "no") and self.verdict != self.oracle

    def to_dict(self) -> dict:
        return {key: v for key, v in asdict(self).items() if v is not None and v != {}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass(frozen=True)
class BenchConfig:
    family: str
    seed: int = 0
    seeds: int = 30
    max_fen: int = 10
    max_n: int = 300
    timeout_ms: int | None = None
    timing: bool = True

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ContractError(f"unknown bench family {self.family!r}; pick one of {', '.join(FAMILIES)}")
        if self.seeds < 1 or self.max_fen < 1 or self.max_n < 2:
            raise ContractError("seeds, max_fen must be >= 1 and max_n >= 2")


def _size(g) -> int:
    return g.n + g.m


def _timed(cfg: BenchConfig, rep: RunReport, fn):
    start = time.perf_counter()
    try:
        with time_limit(cfg.timeout_ms):
            out = fn()
    except Timeout:
        rep.verdict = "timeout"
        out = None
    if cfg.timing:
        rep.wall_ms = round((time.perf_counter() - start) * 1000, 3)
    return out


def _fen_sweep(cfg: BenchConfig) -> Iterator[RunReport]:
    idx = 0
    for fen in range(1, cfg.max_fen + 1):
        for s in range(cfg.seeds):
            seed = cfg.seed * 1_000_003 + fen * 1009 + s
            n = random.Random(seed).randint(fen + 5, cfg.max_n)
            g = tree_plus_edges(n, fen, seed)
            for mode in ("wbdd", "bfvd"):
                rep = RunReport("fen-sweep", idx, seed, g.n, g.m, fen=fen, algo=mode,
                                kernel_before=_size(g))
                idx += 1
                if mode == "wbdd":
                    rep.r, rep.k = 2, n
                    res = _timed(cfg, rep, lambda: kernelize_wbdd(WbddInstance(g, 2, n)))
                    if res:
                        wk, trace = res
                        rep.kernel_after = _size(wk.g)
                        rep.rule_counts = dict(sorted(trace.counts().items()))
                        rep.verdict = "kernel"
                else:
                    rep.i, rep.j, rep.k = 2, 3, n
                    res = _timed(cfg, rep, lambda: kernelize_bfvd(BfvdInstance(g, 2, 3, n)))
                    if res:
                        bk, trace = res
                        rep.kernel_after = _size(bk.g)
                        rep.rule_counts = dict(sorted(trace.counts().items()))
                        rep.verdict = "kernel"
                yield rep


def _answer(found) -> str:
    return "no" if found is None else "yes"


def _degen_sweep(cfg: BenchConfig) -> Iterator[RunReport]:
    idx = 0
    for d in (1, 2, 3):
        for k in range(4):
            if d * k * k > 12:
                continue
            for s in range(cfg.seeds):
                seed = cfg.seed * 1_000_003 + d * 101 + k * 11 + s
                g = degenerate(14, d, seed, p=0.9)
                inst = BfvdInstance(g, 1, 3, k)
                rep = RunReport("degen-sweep", idx, seed, g.n, g.m, i=1, j=3, k=k,
                                d=degeneracy(g).d, algo="degen")
                idx += 1
                v = _timed(cfg, rep, lambda: solve_degenerate(inst))
                if v is not None:
                    rep.verdict = "yes" if v.answer else "no"
                rep.oracle = _answer(oracle_minimum(g, 1, 3, k))
                yield rep


def _fvn_sweep(cfg: BenchConfig) -> Iterator[RunReport]:
    idx = 0
    for fvn in (1, 2, 3, 4):
        for k in range(4):
            if fvn * k > 12:
                continue
            for s in range(cfg.seeds):
                seed = cfg.seed * 1_000_003 + fvn * 101 + k * 11 + s
                g, hubs = forest_plus_fvs(14 - fvn, fvn, seed)
                d_set = minimum_fvs(g).fvs
                inst = BfvdInstance(g, 2, 2 + fvn, k)
                rep = RunReport("fvn-sweep", idx, seed, g.n, g.m, i=2, j=2 + fvn, k=k,
                                fvs=len(d_set), algo="fvn")
                idx += 1
                v = _timed(cfg, rep, lambda: solve_fvn(inst, d_set))
                if v is not None:
                    rep.verdict = "yes" if v.answer else "no"
                rep.oracle = _answer(oracle_minimum(g, 2, 2 + fvn, k))
                yield rep


def _gadget(cfg: BenchConfig) -> Iterator[RunReport]:
    idx = 0
    for s in range(cfg.seeds):
        seed = cfg.seed * 1_000_003 + s
        rng = random.Random(seed)
        n, r, i, k = rng.randint(4, 6), rng.randint(0, 2), rng.choice((2, 3)), rng.randint(0, 3)
        g = gnp(n, 0.5, seed)
        bdd = BddInstance(g, r, k)
        inst = hardness_gadget(bdd, i)
        rep = RunReport("gadget", idx, seed, inst.g.n, inst.g.m, i=i, j=inst.j, k=k, r=r, algo="branch")
        idx += 1
        v = _timed(cfg, rep, lambda: solve_branching(inst))
        if v is not None:
            rep.verdict = "yes" if v.answer else "no"
        rep.oracle = _answer(bdd_oracle_minimum(bdd))
        yield rep


_RUNNERS = {"fen-sweep": _fen_sweep, "degen-sweep": _degen_sweep,
            "fvn-sweep": _fvn_sweep, "gadget": _gadget}


def bench(cfg: BenchConfig) -> Iterator[RunReport]:
    """Reports in instance order; deterministic for a fixed config."""
    return _RUNNERS[cfg.family](cfg)


def summarize(family: str, reports: list[RunReport]) -> list[str]:
    """Plain-text summary table for a finished run."""
    lines = []
    if family == "fen-sweep":
        lines.append("fen  max_wbdd  max_bfvd  wbdd/fen  bfvd/fen")
        by_fen: dict[int, dict[str, int]] = {}
        for rep in reports:
            if rep.kernel_after is None:
                continue
            row = by_fen.setdefault(rep.fen, {"wbdd": 0, "bfvd": 0})
            row[rep.algo] = max(row[rep.algo], rep.kernel_after)
        c = {"wbdd": 0.0, "bfvd": 0.0}
        for fen in sorted(by_fen):
            row = by_fen[fen]
            for key in c:
                c[key] = max(c[key], row[key] / fen)
            lines.append(f"{fen:>3}  {row['wbdd']:>8}  {row['bfvd']:>8}  "
                         f"{row['wbdd'] / fen:>8.2f}  {row['bfvd'] / fen:>8.2f}")
        lines.append(f"fitted c: wbdd {c['wbdd']:.2f}, bfvd {c['bfvd']:.2f}")
    else:
        key = "d" if family == "degen-sweep" else "fvs" if family == "fvn-sweep" else "i"
        groups: dict[tuple, list[RunReport]] = {}
        for rep in reports:
            groups.setdefault((getattr(rep, key), rep.k), []).append(rep)
        lines.append(f"{key:>3}  k  runs  timeouts  max_ms  disagreements")
        for (a, k), reps in sorted(groups.items()):
            times = [rep.wall_ms for rep in reps if rep.wall_ms is not None]
            worst = f"{max(times):.1f}" if times else "-"
            lines.append(f"{a:>3}  {k}  {len(reps):>4}  "
                         f"{sum(rep.verdict == 'timeout' for rep in reps):>8}  {worst:>6}  "
                         f"{sum(rep.disagrees for rep in reps):>13}")
    total = sum(rep.disagrees for rep in reports)
    lines.append(f"runs {len(reports)}, disagreements {total}, "
                 f"timeouts {sum(rep.verdict == 'timeout' for rep in reports)}")
    return lines
