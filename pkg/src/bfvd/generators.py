"""Seeded instance generators.

All randomness flows through ``random.Random(seed)`` and the draws happen in
the order documented on each function, so a (generator, parameters, seed)
triple always yields the same graph.
"""
from __future__ import annotations

import random

from .errors import ContractError
from .graph import Graph


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi graph on 1..n; pairs (u, v), u < v, drawn in lexicographic order."""
    rng = random.Random(seed)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    return Graph(range(1, n + 1), edges)


def tree_plus_edges(n: int, fen: int, seed: int) -> Graph:
    """Random recursive tree plus ``fen`` extra edges, so the result has fen = ``fen``.

    Vertex t = 2..n attaches to ``rng.randint(1, t-1)``.  Extra edges are
    drawn as ``rng.sample(range(1, n+1), 2)`` until a non-edge comes up.
    """
    if n < 1 or fen < 0 or fen > n * (n - 1) // 2 - (n - 1):
        raise ContractError(f"cannot place fen={fen} extra edges on a tree with n={n}")
    rng = random.Random(seed)
    edges = {(rng.randint(1, t - 1), t) for t in range(2, n + 1)}
    while len(edges) < n - 1 + fen:
        u, v = sorted(rng.sample(range(1, n + 1), 2))
        edges.add((u, v))
    return Graph(range(1, n + 1), sorted(edges))


def degenerate(n: int, d: int, seed: int, p: float = 1.0) -> Graph:
    """Ordered attachment: vertex t picks ``min(d, t-1)`` earlier vertices with
    ``rng.sample`` and keeps each with probability p (one ``rng.random()`` per pick).

    The reverse insertion order witnesses degeneracy at most d.
    """
    if d < 0:
        raise ContractError("d must be non-negative")
    rng = random.Random(seed)
    edges = []
    for t in range(2, n + 1):
        for u in sorted(rng.sample(range(1, t), min(d, t - 1))):
            if rng.random() < p:
                edges.append((u, t))
    return Graph(range(1, n + 1), edges)


def forest_plus_fvs(n_forest: int, fvn: int, seed: int, p: float = 0.5, q: float = 0.7) -> tuple[Graph, list[int]]:
    """A random forest on 1..n_forest plus ``fvn`` hub vertices.

    Forest vertex t >= 2 links to ``rng.randint(1, t-1)`` with probability q.
    Hub h (ids after the forest) links to each earlier vertex with probability p,
    in ascending order.  Returns the graph and the hubs, which form an FVS.
    """
    rng = random.Random(seed)
    edges = []
    for t in range(2, n_forest + 1):
        parent = rng.randint(1, t - 1)
        if rng.random() < q:
            edges.append((parent, t))
    hubs = list(range(n_forest + 1, n_forest + fvn + 1))
    for h in hubs:
        for u in range(1, h):
            if rng.random() < p:
                edges.append((u, h))
    return Graph(range(1, n_forest + fvn + 1), edges), hubs
