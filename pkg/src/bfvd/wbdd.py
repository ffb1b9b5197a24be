"""Kernelization of (Weighted) Bounded-Degree Deletion by feedback edge number.

Vertex v survives a solution only if its remaining degree is at most r - w_v.
The pipeline is: degree/weight rules, replacement of long weighted
degree-two paths by shorter ones with the same characteristic matrix,
uniform weight removal, and finally turning weights into pendant vertices.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

from .errors import ContractError, IntegrityError, UnsupportedParameterError
from .graph import Graph
from .instance import BddInstance, WbddInstance
from .trace import ReductionTrace, TraceEntry

INF = math.inf

# Window used by the kernel's path rule.  Every 10-vertex pattern has an
# exactly matching pattern of length 5..9 (checked when the table is built).
KERNEL_WINDOW = 10
KERNEL_SHORT_LENGTHS = tuple(range(5, KERNEL_WINDOW))


@dataclass(frozen=True)
class WeightedPath:
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) < 2:
            raise ContractError("a weighted path needs at least two vertices")

    @classmethod
    def from_offsets(cls, inner_offsets: Sequence[int], r: int) -> "WeightedPath":
        """Path with endpoint weights r-1 and the given inner offsets from r."""
        return cls((r - 1, *(r + o for o in inner_offsets), r - 1))

    def __len__(self) -> int:
        return len(self.weights)

    def inner_offsets(self, r: int) -> tuple[int, ...]:
        return tuple(x - r for x in self.weights[1:-1])

    def in_family(self, r: int) -> bool:
        w = self.weights
        return (len(w) >= 5 and w[0] == w[-1] == r - 1
                and all(r - 2 <= x <= r for x in w[1:-1]))


# ---------------------------------------------------------------------------
# path optimum

def _path_min(w: Sequence[int], r: int, forced: dict[int, bool]) -> float:
    """Fewest deletions on a path so kept vertices have degree <= r - w_v.

    ``forced`` pins vertices to deleted (True) or kept (False).  DP state is
    (previous deleted, current deleted); vertex t is checked once t+1 is fixed.
    """
    n = len(w)

    def options(t):
        f = forced.get(t)
        return (False, True) if f is None else (f,)

    dp = {(True, d): int(d) for d in options(0)}
    for t in range(1, n):
        nxt: dict[tuple[bool, bool], int] = {}
        for (pd, cd), cost in dp.items():
            for d in options(t):
                if not cd and (not pd) + (not d) + w[t - 1] > r:
                    continue
                key = (cd, d)
                c = cost + d
                if c < nxt.get(key, INF):
                    nxt[key] = c
        dp = nxt
    best = INF
    for (pd, cd), cost in dp.items():
        if not cd and (not pd) + w[n - 1] > r:
            continue
        best = min(best, cost)
    return best


def opt_path(p: WeightedPath, r: int) -> int:
    if any(x > r for x in p.weights):
        raise ContractError("path weight exceeds r; apply the high-weight rule first")
    return int(_path_min(p.weights, r, {}))


@dataclass(frozen=True)
class CharacteristicMatrix:
    entries: tuple[tuple[float, ...], ...]

    def __getitem__(self, xy):
        x, y = xy
        return self.entries[x - 1][y - 1]

    def flat(self) -> tuple[float, ...]:
        return tuple(v for row in self.entries for v in row)

    def __str__(self) -> str:
        return " ".join("inf" if v == INF else str(int(v)) for v in self.flat())


_LEFT = {1: {0: True}, 2: {0: False, 1: True}, 3: {0: False, 1: False}}


def _state_constraints(n: int, x: int, y: int) -> dict[int, bool]:
    forced = dict(_LEFT[x])
    for pos, val in _LEFT[y].items():
        idx = n - 1 - pos
        if forced.get(idx, val) != val:
            return None
        forced[idx] = val
    return forced


def characteristic_matrix(p: WeightedPath, r: int) -> CharacteristicMatrix:
    if r < 2:
        raise UnsupportedParameterError("characteristic matrices need r >= 2")
    if not p.in_family(r):
        raise ContractError(f"path {p.weights} is not in the family for r={r}")
    n = len(p)
    s = {}
    for x in (1, 2, 3):
        for y in (1, 2, 3):
            forced = _state_constraints(n, x, y)
            s[x, y] = INF if forced is None else _path_min(p.weights, r, forced)
    opt = min(s.values())
    return CharacteristicMatrix(tuple(tuple(s[x, y] - opt for y in (1, 2, 3)) for x in (1, 2, 3)))


# ---------------------------------------------------------------------------
# replacement tables

@dataclass
class ReplacementTable:
    r: int
    long_length: int
    short_lengths: tuple[int, ...]
    matrices: dict[tuple[int, ...], CharacteristicMatrix] = field(default_factory=dict)
    replacement: dict[tuple[int, ...], WeightedPath] = field(default_factory=dict)
    by_matrix: dict[CharacteristicMatrix, WeightedPath] = field(default_factory=dict)

    @property
    def unmatched(self) -> list[tuple[int, ...]]:
        return [key for key in self.matrices if key not in self.replacement]

    def distinct_matrices(self) -> int:
        return len(set(self.matrices.values()))

    def lookup(self, matrix: CharacteristicMatrix) -> WeightedPath | None:
        return self.by_matrix.get(matrix)

    def __len__(self) -> int:
        return len(self.matrices)


def _family(length: int, r: int):
    for offs in product((-2, -1, 0), repeat=length - 2):
        yield WeightedPath.from_offsets(offs, r)


def build_replacement_table(r: int, long_length: int = 7, short_lengths: Sequence[int] = (6,),
                            strict: bool = True) -> ReplacementTable:
    """Match every long pattern to the first short pattern with an equal matrix.

    Candidates are ordered by length, then by inner weights.  With ``strict``
    a pattern without a match raises ``IntegrityError``.
    """
    if r < 2:
        raise UnsupportedParameterError("replacement tables need r >= 2")
    short_lengths = tuple(sorted(short_lengths))
    table = ReplacementTable(r, long_length, short_lengths)
    for length in short_lengths:
        for p in _family(length, r):
            table.by_matrix.setdefault(characteristic_matrix(p, r), p)
    for p in _family(long_length, r):
        key = p.inner_offsets(r)
        m = characteristic_matrix(p, r)
        table.matrices[key] = m
        if m in table.by_matrix:
            table.replacement[key] = table.by_matrix[m]
    if strict and table.unmatched:
        raise IntegrityError(
            f"{len(table.unmatched)} of {len(table)} length-{long_length} patterns have no "
            f"length-{short_lengths} match ({table.distinct_matrices()} distinct matrices)")
    return table


@lru_cache(maxsize=None)
def kernel_table(r: int) -> ReplacementTable:
    return build_replacement_table(r, KERNEL_WINDOW, KERNEL_SHORT_LENGTHS)


# ---------------------------------------------------------------------------
# rules

def _remove(adj, w, v) -> list[int]:
    nbrs = sorted(adj.pop(v))
    for u in nbrs:
        adj[u].discard(v)
    del w[v]
    return nbrs


def apply_basic_rules(inst: WbddInstance, trace: ReductionTrace | None = None):
    """Low-weight, high-weight, isolated and degree-one rules, to a fixpoint."""
    trace = ReductionTrace() if trace is None else trace
    adj = inst.g.mutable_adjacency()
    w = dict(inst.w)
    r, k = inst.r, inst.k
    queue = sorted(adj)
    queued = set(queue)
    head = 0

    def push(vs):
        for u in vs:
            if u in adj and u not in queued:
                queue.append(u)
                queued.add(u)

    while head < len(queue):
        v = queue[head]
        head += 1
        queued.discard(v)
        if v not in adj:
            continue
        if w[v] > r:
            push(_remove(adj, w, v))
            k -= 1
            trace.append(TraceEntry("overweight", removed_vertices=(v,), dk=-1))
            continue
        deg = len(adj[v])
        if deg + w[v] < r:
            delta = r - deg - w[v]
            w[v] += delta
            trace.append(TraceEntry("raise-weight", weight_deltas=((v, delta),)))
        if deg == 0 and w[v] == r:
            _remove(adj, w, v)
            trace.append(TraceEntry("isolated-full", removed_vertices=(v,)))
        elif deg == 1:
            (u,) = adj[v]
            if w[v] == r - 1:
                _remove(adj, w, v)
                w[u] += 1
                push((u,))
                trace.append(TraceEntry("pendant-merge", removed_vertices=(v,), weight_deltas=((u, 1),)))
            elif w[v] == r:
                _remove(adj, w, v)
                push(_remove(adj, w, u))
                k -= 1
                trace.append(TraceEntry("pendant-take", removed_vertices=(v, u), dk=-1))
    return WbddInstance(Graph.from_adjacency(adj), r, k, w), trace


def _windows(adj, length: int):
    """Paths of ``length`` distinct vertices whose inner vertices have degree 2."""
    for a in sorted(adj):
        for b in sorted(adj[a]):
            if len(adj[b]) != 2:
                continue
            seq = [a, b]
            while len(seq) < length:
                cur, prev = seq[-1], seq[-2]
                if len(adj[cur]) != 2:
                    break
                (nxt,) = adj[cur] - {prev}
                if nxt in seq:
                    break
                seq.append(nxt)
            if len(seq) == length:
                yield seq


def apply_path_rule(inst: WbddInstance, table: ReplacementTable | None = None,
                    trace: ReductionTrace | None = None, limit: int | None = None):
    """Replace windows of degree-two vertices by shorter equivalent paths.

    Windows whose pattern the table cannot match are left alone.  ``limit``
    caps the number of replacements.
    """
    trace = ReductionTrace() if trace is None else trace
    r = inst.r
    if r < 2:
        raise UnsupportedParameterError("the path rule needs r >= 2")
    if table is None:
        table = kernel_table(r)
    if table.r != r:
        raise ContractError(f"table built for r={table.r}, instance has r={r}")
    adj = inst.g.mutable_adjacency()
    w = dict(inst.w)
    k = inst.k
    applied = 0
    while limit is None or applied < limit:
        seq = None
        for cand in _windows(adj, table.long_length):
            inner = tuple(w[v] - r for v in cand[1:-1])
            if any(o not in (-2, -1, 0) for o in inner):
                raise ContractError("inner weights outside r-2..r; run the basic rules first")
            if inner in table.replacement:
                seq = cand
                break
        if seq is None:
            break
        applied += 1
        inner = tuple(w[v] - r for v in seq[1:-1])
        old = WeightedPath((r - 1, *(w[v] for v in seq[1:-1]), r - 1))
        new = table.replacement[inner]
        dk = -(opt_path(old, r) - opt_path(new, r))
        for v in seq[1:-1]:
            _remove(adj, w, v)
        start = max(adj) + 1 if adj else 1
        fresh = list(range(start, start + len(new) - 2))
        chain = [seq[0], *fresh, seq[-1]]
        for v, x in zip(fresh, new.weights[1:-1]):
            adj[v] = set()
            w[v] = x
        added_edges = tuple(zip(chain, chain[1:]))
        for a, b in added_edges:
            adj[a].add(b)
            adj[b].add(a)
        k += dk
        trace.append(TraceEntry(
            "path-replace", removed_vertices=tuple(seq[1:-1]),
            added_vertices=tuple(zip(fresh, new.weights[1:-1])),
            added_edges=added_edges, dk=dk))
    return WbddInstance(Graph.from_adjacency(adj), r, k, w), trace


def remove_weights(inst: WbddInstance, trace: ReductionTrace | None = None):
    trace = ReductionTrace() if trace is None else trace
    w = dict(inst.w)
    r = inst.r
    while w and r > 0 and min(w.values()) > 0:
        for v in w:
            w[v] -= 1
        r -= 1
        trace.append(TraceEntry("lower-weights", weight_deltas=tuple((v, -1) for v in sorted(w)), dr=-1))
    return WbddInstance(inst.g, r, inst.k, w), trace


def expand_weights(inst: WbddInstance, trace: ReductionTrace | None = None) -> tuple[BddInstance, ReductionTrace]:
    """Attach w_v fresh pendant vertices to every vertex v."""
    trace = ReductionTrace() if trace is None else trace
    adj = inst.g.mutable_adjacency()
    nxt = max(adj, default=0) + 1
    added, edges, deltas = [], [], []
    for v in sorted(inst.w):
        x = inst.w[v]
        if not x:
            continue
        for _ in range(x):
            adj[nxt] = {v}
            adj[v].add(nxt)
            added.append((nxt, 0))
            edges.append((v, nxt))
            nxt += 1
        deltas.append((v, -x))
    if added:
        trace.append(TraceEntry("expand", added_vertices=tuple(added),
                                added_edges=tuple(edges), weight_deltas=tuple(deltas)))
    return BddInstance(Graph.from_adjacency(adj), inst.r, inst.k), trace


def kernelize_wbdd(inst: WbddInstance, table_for=kernel_table):
    """Run the weighted rules to a global fixpoint (no expansion)."""
    trace = ReductionTrace()
    while True:
        before = len(trace)
        inst, _ = apply_basic_rules(inst, trace)
        if inst.r >= 2:
            inst, _ = apply_path_rule(inst, table_for(inst.r), trace)
        inst, _ = remove_weights(inst, trace)
        if len(trace) == before:
            return inst, trace


def kernelize_bdd(g: Graph, r: int, k: int):
    """Answer-equivalent BDD instance; k < 0 means decided-no, an empty graph decided-yes."""
    wk, trace = kernelize_wbdd(WbddInstance(g, r, k))
    bdd, trace = expand_weights(wk, trace)
    return bdd, trace


# ---------------------------------------------------------------------------
# brute force

def wbdd_oracle_minimum(inst: WbddInstance, limit: int | None = None) -> tuple[int, ...] | None:
    """Smallest feasible deletion set (size <= limit), by exhaustive search."""
    if limit is None:
        limit = inst.k
    if limit < 0:
        return None
    verts = inst.g.vertices
    cap = [inst.r - inst.w[v] for v in verts]
    idx = {v: t for t, v in enumerate(verts)}
    nbrs = [[idx[u] for u in inst.g.adj[v]] for v in verts]
    for size in range(min(limit, len(verts)) + 1):
        for combo in combinations(range(len(verts)), size):
            gone = set(combo)
            if all(t in gone or sum(u not in gone for u in nbrs[t]) <= cap[t]
                   for t in range(len(verts))):
                return tuple(verts[t] for t in combo)
    return None
