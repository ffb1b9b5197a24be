"""Smaller-side enumeration for K_{i,j} subgraphs and the membership rule.

A *smaller side* is an i-set S whose common neighbourhood has at least j
vertices.  Two enumeration backends are provided:

``reference``
    every i-subset of every neighbourhood N(t) is a candidate.  Complete,
    because a side lies inside the neighbourhood of each common neighbour.
``lattice``
    enumerate maximal bicliques (closed pairs A = C(B), B = C(A) of the
    common-neighbourhood operator C) and expand i-subsets of A whenever
    |B| >= j.  Every side S sits in the extent C(C(S)) of the concept whose
    intent is C(S), so this is complete as well.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .errors import ContractError
from .graph import Graph
from .trace import ReductionTrace, TraceEntry


@dataclass(frozen=True)
class SmallerSideCollection:
    i: int
    j: int
    common_nbhd: Mapping[tuple[int, ...], frozenset[int]] = field(default_factory=dict)

    @property
    def sides(self) -> list[tuple[int, ...]]:
        return sorted(self.common_nbhd)

    def union(self) -> frozenset[int]:
        return frozenset(v for s in self.common_nbhd for v in s)

    def __len__(self) -> int:
        return len(self.common_nbhd)

    def __bool__(self) -> bool:
        return bool(self.common_nbhd)

    def __contains__(self, side) -> bool:
        return tuple(sorted(side)) in self.common_nbhd


def _check_ij(i: int, j: int) -> None:
    if not 1 <= i <= j:
        raise ContractError(f"need 1 <= i <= j, got i={i}, j={j}")


def _common(adj, side) -> frozenset[int]:
    it = iter(side)
    acc = adj[next(it)]
    for s in it:
        acc = acc & adj[s]
    return acc


def _enumerate_reference(g: Graph, i: int, j: int) -> dict:
    adj = g.adj
    eligible = {v for v, ns in adj.items() if len(ns) >= j}
    found: dict[tuple[int, ...], frozenset[int]] = {}
    rejected: set[tuple[int, ...]] = set()
    for t in sorted(adj):
        cand = sorted(adj[t] & eligible)
        if len(cand) < i:
            continue
        for side in combinations(cand, i):
            if side in found or side in rejected:
                continue
            common = _common(adj, side)
            if len(common) >= j:
                found[side] = common
            else:
                rejected.add(side)
    return found


def maximal_bicliques(g: Graph):
    """Yield closed pairs (A, B) with A = C(B), B = C(A), both non-empty.

    Close-by-One over the vertex order; each concept is produced once.
    """
    adj = g.adj
    order = sorted(adj)
    all_v = frozenset(order)

    def close(extent):
        if not extent:
            return all_v
        return _common(adj, extent)

    def rec(extent, intent, start):
        if extent and intent:
            yield extent, intent
        for pos in range(start, len(order)):
            y = order[pos]
            if y in intent:
                continue
            new_extent = extent & adj[y]
            if not new_extent:
                continue
            new_intent = close(new_extent)
            # canonicity: no attribute before y may be added by the closure
            if any(v not in intent and v in new_intent for v in order[:pos]):
                continue
            yield from rec(new_extent, new_intent, pos + 1)

    top_intent = close(all_v)
    yield from rec(all_v, top_intent, 0)


def _enumerate_lattice(g: Graph, i: int, j: int) -> dict:
    adj = g.adj
    found: dict[tuple[int, ...], frozenset[int]] = {}
    for extent, intent in maximal_bicliques(g):
        if len(intent) < j or len(extent) < i:
            continue
        for side in combinations(sorted(extent), i):
            if side not in found:
                found[side] = _common(adj, side)
    return found


def enumerate_smaller_sides(g: Graph, i: int, j: int, backend: str = "reference") -> SmallerSideCollection:
    _check_ij(i, j)
    if backend == "reference":
        found = _enumerate_reference(g, i, j)
    elif backend == "lattice":
        found = _enumerate_lattice(g, i, j)
    else:
        raise ContractError(f"unknown backend {backend!r}")
    return SmallerSideCollection(i, j, found)


def find_biclique(g: Graph, i: int, j: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Lexicographically first smaller side S and the first j of its common neighbours.

    Depth-first over sides in lexicographic order, pruning on the shrinking
    common neighbourhood; independent of the enumeration backends.
    """
    _check_ij(i, j)
    adj = g.adj
    eligible = sorted(v for v, ns in adj.items() if len(ns) >= j)

    def extend(side, common, start):
        if len(side) == i:
            return side, common
        for pos in range(start, len(eligible)):
            v = eligible[pos]
            nxt = common & adj[v] if side else adj[v]
            if len(nxt) < j:
                continue
            hit = extend(side + (v,), nxt, pos + 1)
            if hit:
                return hit
        return None

    hit = extend((), frozenset(), 0)
    if hit is None:
        return None
    side, common = hit
    return side, tuple(sorted(common)[:j])


def contains_biclique(g: Graph, i: int, j: int) -> bool:
    return find_biclique(g, i, j) is not None


def ss_value(g: Graph, i: int, j: int) -> int:
    return len(enumerate_smaller_sides(g, i, j).union())


def biclique_members(g: Graph, coll: SmallerSideCollection) -> tuple[set[int], set[tuple[int, int]]]:
    """Vertices and edges lying in at least one K_{i,j}."""
    verts: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for side, common in coll.common_nbhd.items():
        verts.update(side)
        verts.update(common)
        for s in side:
            for t in common:
                edges.add((s, t) if s < t else (t, s))
    return verts, edges


def reduce_biclique_membership(g: Graph, i: int, j: int,
                               trace: ReductionTrace | None = None) -> tuple[Graph, ReductionTrace]:
    """Delete vertices, then edges, that lie in no K_{i,j}; repeat until stable."""
    _check_ij(i, j)
    if trace is None:
        trace = ReductionTrace()
    while True:
        coll = enumerate_smaller_sides(g, i, j)
        verts, edges = biclique_members(g, coll)
        dead_v = tuple(v for v in g.vertices if v not in verts)
        dead_e = tuple(e for e in g.edges() if e not in edges and e[0] in verts and e[1] in verts)
        if not dead_v and not dead_e:
            return g, trace
        if dead_v:
            trace.append(TraceEntry("no-biclique-vertex", removed_vertices=dead_v))
        if dead_e:
            trace.append(TraceEntry("no-biclique-edge", removed_edges=dead_e))
        g = g.remove_vertices(dead_v).remove_edges(dead_e)
