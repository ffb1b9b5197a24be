"""Undirected simple graphs with stable integer vertex ids, plus the
structural parameters the solvers need: degeneracy, feedback edge data and
an exact minimum feedback vertex set.
"""
from __future__ import annotations

import heapq
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import BudgetExhausted, ContractError


class Graph:
    """Immutable undirected simple graph.

    Derived graphs (vertex/edge deletion, relabelling) are fresh copies, so a
    ``Graph`` can be shared freely between search branches.
    """

    __slots__ = ("_adj", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            if v in adj:
                raise ContractError(f"duplicate vertex {v}")
            adj[v] = set()
        for u, v in edges:
            if u == v:
                raise ContractError(f"self-loop at {u}")
            if u not in adj or v not in adj:
                raise ContractError(f"edge {u}-{v} has an undeclared endpoint")
            if v in adj[u]:
                raise ContractError(f"duplicate edge {u}-{v}")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._hash = None

    @classmethod
    def from_adjacency(cls, adj: Mapping[int, Iterable[int]]) -> "Graph":
        """Trusting constructor; ``adj`` must already be symmetric and loop-free."""
        g = cls.__new__(cls)
        g._adj = {v: frozenset(ns) for v, ns in adj.items()}
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> "Graph":
        edges = list(edges)
        vs = set(vertices)
        for e in edges:
            vs.update(e)
        return cls(sorted(vs), edges)

    # -- queries -----------------------------------------------------------
    @property
    def adj(self) -> Mapping[int, frozenset[int]]:
        return self._adj

    @property
    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self._adj)

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def sorted_neighbors(self, v: int) -> list[int]:
        return sorted(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, ns in self._adj.items() for v in ns if u < v)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __iter__(self):
        return iter(sorted(self._adj))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._adj.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived copies ----------------------------------------------------
    def remove_vertices(self, xs: Iterable[int]) -> "Graph":
        xs = set(xs)
        if not xs:
            return self
        return Graph.from_adjacency(
            {v: ns - xs for v, ns in self._adj.items() if v not in xs})

    def remove_edges(self, es: Iterable[tuple[int, int]]) -> "Graph":
        adj = self.mutable_adjacency()
        for u, v in es:
            adj[u].discard(v)
            adj[v].discard(u)
        return Graph.from_adjacency(adj)

    def induced(self, xs: Iterable[int]) -> "Graph":
        keep = set(xs) & self._adj.keys()
        return Graph.from_adjacency({v: self._adj[v] & keep for v in keep})

    def mutable_adjacency(self) -> dict[int, set[int]]:
        return {v: set(ns) for v, ns in self._adj.items()}

    def relabel_compact(self) -> tuple["Graph", dict[int, int]]:
        """Order-preserving relabelling onto 1..n; returns the graph and old->new map."""
        mapping = {v: idx for idx, v in enumerate(sorted(self._adj), start=1)}
        return Graph.from_adjacency(
            {mapping[v]: {mapping[u] for u in ns} for v, ns in self._adj.items()}), mapping

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for root in sorted(self._adj):
            if root in seen:
                continue
            seen.add(root)
            comp = [root]
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in sorted(self._adj[u]):
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def is_vertex_cover(self, xs: Iterable[int]) -> bool:
        xs = set(xs)
        return all(u in xs or v in xs for u, ns in self._adj.items() for v in ns)


# ---------------------------------------------------------------------------
# structural parameters

@dataclass(frozen=True)
class DegeneracyResult:
    d: int
    ordering: tuple[int, ...]


def degeneracy(g: Graph) -> DegeneracyResult:
    """Peel a minimum-degree vertex (smallest id on ties) until empty."""
    deg = {v: len(ns) for v, ns in g.adj.items()}
    heap = [(d, v) for v, d in deg.items()]
    heapq.heapify(heap)
    removed: set[int] = set()
    order = []
    d = 0
    while heap:
        dv, v = heapq.heappop(heap)
        if v in removed or dv != deg[v]:
            continue
        removed.add(v)
        order.append(v)
        d = max(d, dv)
        for u in g.adj[v]:
            if u not in removed:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return DegeneracyResult(d, tuple(order))


@dataclass(frozen=True)
class FeedbackSets:
    fen: int = 0
    fen_edges: tuple[tuple[int, int], ...] = ()
    fvs: frozenset[int] = frozenset()


def feedback_edge_data(g: Graph) -> FeedbackSets:
    """Non-tree edges of the BFS forest grown from the lowest unvisited id."""
    parent: dict[int, int | None] = {}
    tree: set[tuple[int, int]] = set()
    for root in sorted(g.adj):
        if root in parent:
            continue
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adj[u]):
                if w not in parent:
                    parent[w] = u
                    tree.add((min(u, w), max(u, w)))
                    queue.append(w)
    extra = tuple(e for e in g.edges() if e not in tree)
    return FeedbackSets(fen=len(extra), fen_edges=extra)


def fen_value(g: Graph) -> int:
    return g.m - g.n + len(g.components())


def is_feedback_vertex_set(g: Graph, xs: Iterable[int]) -> bool:
    return g.remove_vertices(xs).is_forest()


# -- exact feedback vertex set ---------------------------------------------
# The search runs on a multigraph (Counter per vertex) because bypassing a
# degree-2 vertex can create parallel edges and self-loops.

def _reduce_multi(adj: dict[int, Counter], forced: list[int]) -> None:
    changed = True
    while changed:
        changed = False
        for v in sorted(adj, reverse=True):
            if v not in adj:
                continue
            nbrs = adj[v]
            if nbrs.get(v, 0) > 0:
                forced.append(v)
                _drop(adj, v)
                changed = True
                continue
            deg = sum(nbrs.values())
            if deg <= 1:
                _drop(adj, v)
                changed = True
            elif deg == 2:
                ends = list(nbrs.elements())
                a, b = ends
                if a == b:
                    # v and a form a 2-cycle; a hits every cycle v lies on
                    forced.append(a)
                    _drop(adj, a)
                    _drop(adj, v)
                else:
                    _drop(adj, v)
                    adj[a][b] += 1
                    adj[b][a] += 1
                changed = True


def _drop(adj: dict[int, Counter], v: int) -> None:
    for u in list(adj[v]):
        if u != v:
            del adj[u][v]
    del adj[v]


def _shortest_cycle(adj: dict[int, Counter]) -> list[int]:
    for v in sorted(adj):
        for u, c in adj[v].items():
            if c >= 2:
                return sorted((u, v))
    best: list[int] | None = None
    for root in sorted(adj):
        dist = {root: 0}
        par = {root: None}
        queue = deque([root])
        found = None
        while queue and found is None:
            u = queue.popleft()
            for w in sorted(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    par[w] = u
                    queue.append(w)
                elif w != par[u]:
                    found = (u, w)
                    break
        if found is None:
            continue
        u, w = found
        cyc = set()
        for x in (u, w):
            while x is not None:
                cyc.add(x)
                x = par[x]
        length = dist[u] + dist[w] + 1
        if best is None or length < len(best):
            best = sorted(cyc)
            if length == 3:
                break
    return best or []


def _fvs_search(adj: dict[int, Counter], budget: int) -> list[int] | None:
    adj = {v: Counter(ns) for v, ns in adj.items()}
    forced: list[int] = []
    _reduce_multi(adj, forced)
    budget -= len(forced)
    if budget < 0:
        return None
    if not adj:
        return forced
    if budget == 0:
        return None
    for v in _shortest_cycle(adj):
        sub = {u: Counter(ns) for u, ns in adj.items()}
        _drop(sub, v)
        rest = _fvs_search(sub, budget - 1)
        if rest is not None:
            return forced + [v] + rest
    return None


def minimum_fvs(g: Graph, budget: int | None = None) -> FeedbackSets:
    """Minimum feedback vertex set by iterative deepening.

    Raises ``BudgetExhausted`` if no set of size <= ``budget`` exists.
    """
    base = {v: Counter({u: 1 for u in ns}) for v, ns in g.adj.items()}
    size = 0
    while budget is None or size <= budget:
        found = _fvs_search(base, size)
        if found is not None:
            return FeedbackSets(fvs=frozenset(found))
        size += 1
    raise BudgetExhausted(budget)


@dataclass(frozen=True)
class DegreeTwoRun:
    """A maximal path whose inner vertices have degree 2, or such a cycle.

    ``vertices`` lists the run in order, endpoints included.  For a cycle
    through a single hub the hub appears once, first.
    """
    vertices: tuple[int, ...]
    cycle: bool

    def __len__(self) -> int:
        return len(self.vertices)


def degree_two_runs(g: Graph) -> list[DegreeTwoRun]:
    """Decompose the edges of g into maximal degree-2 paths and cycles.

    Edges between two vertices of degree other than 2 count as runs with no
    inner vertex.  Components that are plain cycles form one run each.
    """
    adj = g.adj
    hub = {v for v, ns in adj.items() if len(ns) != 2}
    runs: list[DegreeTwoRun] = []
    seen: set[int] = set()
    for u, v in g.edges():
        if u in hub and v in hub:
            runs.append(DegreeTwoRun((u, v), False))
    for h in sorted(hub):
        for first in sorted(adj[h]):
            if first in hub or first in seen:
                continue
            seq = [h, first]
            while seq[-1] not in hub:
                seen.add(seq[-1])
                (nxt,) = adj[seq[-1]] - {seq[-2]}
                seq.append(nxt)
            if seq[-1] == h:
                runs.append(DegreeTwoRun(tuple(seq[:-1]), True))
            else:
                runs.append(DegreeTwoRun(tuple(seq), False))
    for v in sorted(adj):
        if v in hub or v in seen:
            continue
        seq = [v]
        seen.add(v)
        nxt = min(adj[v])
        while nxt != v:
            seq.append(nxt)
            seen.add(nxt)
            nxt = next(iter(adj[nxt] - {seq[-2]}))
        runs.append(DegreeTwoRun(tuple(seq), True))
    return runs
