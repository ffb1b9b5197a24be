"""Kernel for biclique-free deletion with i >= 2, parameterized by feedback edge number.

Degree-1 vertices lie in no K_{i,j} with i >= 2, and neither does the middle
vertex of a path whose three central vertices have degree 2.  Isolated
vertices are dropped as well, since they lie in no biclique either.
"""
from __future__ import annotations

from .errors import UnsupportedParameterError
from .graph import Graph
from .instance import BfvdInstance
from .trace import ReductionTrace, TraceEntry


def _drop(adj, v) -> list[int]:
    nbrs = sorted(adj.pop(v))
    for u in nbrs:
        adj[u].discard(v)
    return nbrs


def _prune_low_degree(adj, trace: ReductionTrace) -> None:
    queue = sorted(v for v, ns in adj.items() if len(ns) <= 1)
    queued = set(queue)
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        if v not in adj:
            continue
        rule = "degree-one" if adj[v] else "isolated"
        for u in _drop(adj, v):
            if len(adj[u]) <= 1 and u not in queued:
                queue.append(u)
                queued.add(u)
        trace.append(TraceEntry(rule, removed_vertices=(v,)))


def five_path_middle(adj) -> tuple[int, ...] | None:
    """First path (v1..v5) of distinct vertices with deg 2 at v2, v3, v4, by v3 id."""
    for v3 in sorted(adj):
        if len(adj[v3]) != 2:
            continue
        v2, v4 = sorted(adj[v3])
        if len(adj[v2]) != 2 or len(adj[v4]) != 2:
            continue
        (v1,) = adj[v2] - {v3}
        (v5,) = adj[v4] - {v3}
        if len({v1, v2, v3, v4, v5}) == 5:
            return v1, v2, v3, v4, v5
    return None


def kernelize_bfvd(inst: BfvdInstance) -> tuple[BfvdInstance, ReductionTrace]:
    if inst.i < 2:
        raise UnsupportedParameterError("this kernel needs i >= 2; use the weighted degree kernel for i = 1")
    adj = inst.g.mutable_adjacency()
    trace = ReductionTrace()
    while True:
        _prune_low_degree(adj, trace)
        path = five_path_middle(adj)
        if path is None:
            break
        _drop(adj, path[2])
        trace.append(TraceEntry("five-path-middle", removed_vertices=(path[2],)))
    return inst.with_graph(Graph.from_adjacency(adj)), trace
