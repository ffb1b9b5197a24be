"""Quick randomized property checks, run by ``bfvd selftest``."""
from __future__ import annotations

import random
import time
from typing import Callable

from .bfvd_kernel import kernelize_bfvd
from .biclique import enumerate_smaller_sides, reduce_biclique_membership
from .errors import IntegrityError
from .generators import gnp, tree_plus_edges
from .instance import BddInstance, BfvdInstance, WbddInstance
from .reductions import bdd_oracle_minimum, hardness_gadget
from .solvers import (oracle_minimum, solve_branching, solve_degenerate, solve_fvn, solve_vc)
from .graph import minimum_fvs
from .wbdd import build_replacement_table, kernel_table, kernelize_bdd


def _solvers(rng: random.Random) -> int:
    bad = 0
    for _ in range(40):
        g = gnp(rng.randint(1, 9), rng.uniform(0.2, 0.7), rng.randrange(1 << 30))
        fvs = minimum_fvs(g).fvs
        for i in range(1, 4):
            for j in range(i, 4):
                best = oracle_minimum(g, i, j, 3)
                for k in range(3):
                    want = best is not None and len(best) <= k
                    inst = BfvdInstance(g, i, j, k)
                    got = [solve_branching(inst).answer, solve_degenerate(inst).answer,
                           solve_vc(inst, g.vertices).answer]
                    if i >= 2:
                        got.append(solve_fvn(inst, fvs).answer)
                    bad += sum(x != want for x in got)
    return bad


def _backends(rng: random.Random) -> int:
    bad = 0
    for _ in range(40):
        g = gnp(rng.randint(1, 12), rng.uniform(0.2, 0.8), rng.randrange(1 << 30))
        for i in range(1, 4):
            for j in range(i, 5):
                a = enumerate_smaller_sides(g, i, j)
                b = enumerate_smaller_sides(g, i, j, backend="lattice")
                bad += a.common_nbhd != b.common_nbhd
    return bad


def _sides_cover_edges(rng: random.Random) -> int:
    bad = 0
    for _ in range(40):
        g = gnp(rng.randint(1, 20), rng.uniform(0.1, 0.5), rng.randrange(1 << 30))
        i = rng.randint(1, 3)
        j = rng.randint(i, 4)
        h, _ = reduce_biclique_membership(g, i, j)
        bad += not h.is_vertex_cover(enumerate_smaller_sides(h, i, j).union())
    return bad


def _bdd_kernel(rng: random.Random) -> int:
    bad = 0
    for _ in range(100):
        g = gnp(rng.randint(1, 10), rng.uniform(0.1, 0.5), rng.randrange(1 << 30))
        r, k = rng.randint(0, 4), rng.randint(0, 3)
        out, trace = kernelize_bdd(g, r, k)
        before = bdd_oracle_minimum(BddInstance(g, r, k)) is not None
        after = out.k >= 0 and bdd_oracle_minimum(out) is not None
        replay = trace.replay(g, k, r)
        bad += (before != after) + (replay[0] != out.g or replay[1] != out.k)
    return bad


def _bfvd_kernel(rng: random.Random) -> int:
    bad = 0
    for _ in range(100):
        n = rng.randint(2, 11)
        g = tree_plus_edges(n, rng.randint(0, min(4, n * (n - 1) // 2 - n + 1)), rng.randrange(1 << 30))
        i = rng.randint(2, 3)
        j, k = rng.randint(i, 4), rng.randint(0, 3)
        out, _ = kernelize_bfvd(BfvdInstance(g, i, j, k))
        bad += (oracle_minimum(g, i, j, k) is None) != (oracle_minimum(out.g, i, j, k) is None)
    return bad


def _gadget(rng: random.Random) -> int:
    bad = 0
    for _ in range(15):
        n = rng.randint(3, 5)
        g = gnp(n, 0.5, rng.randrange(1 << 30))
        r, k = rng.randint(0, 2), rng.randint(0, 2)
        i = 2 if n == 3 else rng.randint(2, 3)
        inst = hardness_gadget(BddInstance(g, r, k), i)
        want = bdd_oracle_minimum(BddInstance(g, r, k)) is not None
        bad += (oracle_minimum(inst.g, inst.i, inst.j, k) is not None) != want
    return bad


def _table() -> int:
    bad = 0
    for r in (2, 3):
        table = kernel_table(r)
        bad += len(table.unmatched)
        for m, p in table.by_matrix.items():
            bad += table.lookup(m) is not p
    return bad


CHECKS: list[tuple[str, Callable[[random.Random], int]]] = [
    ("solvers agree with brute force", _solvers),
    ("enumeration backends agree", _backends),
    ("smaller sides cover every edge after reduction", _sides_cover_edges),
    ("bdd kernel keeps answers and replays", _bdd_kernel),
    ("bfvd kernel keeps answers", _bfvd_kernel),
    ("gadget keeps answers", _gadget),
    ("path replacement table is total", lambda rng: _table()),
]


def run(seed: int = 0, out=print) -> bool:
    ok = True
    for name, check in CHECKS:
        start = time.perf_counter()
        bad = check(random.Random(seed))
        ok &= bad == 0
        out(f"{'PASS' if bad == 0 else 'FAIL'} {name} ({bad} violations, "
            f"{time.perf_counter() - start:.2f}s)")
    try:
        build_replacement_table(2)
        out("INFO 7-to-6 replacement table: complete")
    except IntegrityError as exc:
        out(f"INFO 7-to-6 replacement table: {exc}")
    return ok
