import itertools

import pytest

from bfvd.graph import Graph


def cycle(n, start=1):
    vs = list(range(start, start + n))
    return Graph(vs, [(vs[t], vs[(t + 1) % n]) for t in range(n)])


def path(n, start=1):
    vs = list(range(start, start + n))
    return Graph(vs, list(zip(vs, vs[1:])))


def complete_bipartite(a, b, start=1):
    left = range(start, start + a)
    right = range(start + a, start + a + b)
    return Graph(range(start, start + a + b), [(u, v) for u in left for v in right])


def disjoint_union(*graphs):
    adj = {}
    for g in graphs:
        for v, ns in g.adj.items():
            assert v not in adj
            adj[v] = set(ns)
    return Graph.from_adjacency(adj)


def stars(count, leaves):
    gs, nxt = [], 1
    for _ in range(count):
        gs.append(complete_bipartite(1, leaves, nxt))
        nxt += leaves + 1
    return disjoint_union(*gs)


def brute_min_fvs(g):
    for size in range(g.n + 1):
        for xs in itertools.combinations(g.vertices, size):
            if g.remove_vertices(xs).is_forest():
                return size


@pytest.fixture
def c4():
    return cycle(4)
