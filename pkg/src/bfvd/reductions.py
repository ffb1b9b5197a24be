"""Translations between bounded-degree deletion and biclique-free deletion."""
from __future__ import annotations

from itertools import combinations

from .errors import ContractError
from .graph import Graph
from .instance import BddInstance, BfvdInstance, WbddInstance


def bdd_as_bfvd(inst: BddInstance) -> BfvdInstance:
    """Degree at most r is the same as containing no K_{1,r+1}."""
    return BfvdInstance(inst.g, 1, inst.r + 1, inst.k)


def bdd_from_wbdd(inst: WbddInstance) -> BddInstance:
    if any(inst.w.values()):
        raise ContractError("instance carries nonzero weights")
    return BddInstance(inst.g, inst.r, inst.k)


def hardness_gadget(inst: BddInstance, i: int) -> BfvdInstance:
    """Blow each vertex v up into a K_{i,n} between {v} + S_v and T_v.

    S_v has i-1 fresh vertices and T_v has n.  Every edge uv of the input
    joins u to all of S_v and v to all of S_u.  The answer for
    (G', i, j = n + r + 1, k) equals the bounded-degree answer for (G, r, k).
    Fresh ids come in blocks of i-1+n per input vertex, after max id.
    """
    g = inst.g
    n = g.n
    if i < 2:
        raise ContractError("the gadget needs i >= 2")
    if n <= i:
        raise ContractError(f"the gadget needs n > i (n={n}, i={i})")
    adj = g.mutable_adjacency()
    nxt = max(adj) + 1
    side: dict[int, list[int]] = {}
    for v in g.vertices:
        s_v = list(range(nxt, nxt + i - 1))
        t_v = list(range(nxt + i - 1, nxt + i - 1 + n))
        nxt += i - 1 + n
        side[v] = s_v
        for x in s_v + t_v:
            adj[x] = set()
        for s in [v] + s_v:
            for t in t_v:
                adj[s].add(t)
                adj[t].add(s)
    for u, v in g.edges():
        for a, b in ((u, v), (v, u)):
            for s in side[b]:
                adj[a].add(s)
                adj[s].add(a)
    return BfvdInstance(Graph.from_adjacency(adj), i, n + inst.r + 1, inst.k)


def bdd_oracle_minimum(inst: BddInstance, limit: int | None = None) -> tuple[int, ...] | None:
    """Smallest set of at most ``limit`` vertices whose removal leaves max degree <= r."""
    limit = inst.k if limit is None else limit
    verts = inst.g.vertices
    for size in range(min(limit, len(verts)) + 1):
        for combo in combinations(verts, size):
            if inst.g.remove_vertices(combo).max_degree() <= inst.r:
                return combo
    return None
