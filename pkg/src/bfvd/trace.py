"""Replayable log of reduction-rule applications."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .graph import Graph


@dataclass(frozen=True)
class TraceEntry:
    rule: str
    removed_vertices: tuple[int, ...] = ()
    removed_edges: tuple[tuple[int, int], ...] = ()
    added_vertices: tuple[tuple[int, int], ...] = ()   # (id, weight)
    added_edges: tuple[tuple[int, int], ...] = ()
    weight_deltas: tuple[tuple[int, int], ...] = ()    # (id, delta)
    dk: int = 0
    dr: int = 0

    def to_dict(self) -> dict:
        out = {"rule": self.rule}
        for name in ("removed_vertices", "removed_edges", "added_vertices",
                     "added_edges", "weight_deltas"):
            value = getattr(self, name)
            if value:
                out[name] = [list(x) if isinstance(x, tuple) else x for x in value]
        if self.dk:
            out["dk"] = self.dk
        if self.dr:
            out["dr"] = self.dr
        return out


@dataclass
class ReductionTrace:
    entries: list[TraceEntry] = field(default_factory=list)

    def append(self, entry: TraceEntry) -> None:
        self.entries.append(entry)

    def extend(self, other: "ReductionTrace") -> None:
        self.entries.extend(other.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def counts(self) -> Counter:
        return Counter(e.rule for e in self.entries)

    def replay(self, g: Graph, k: int, r: int = 0, w: dict[int, int] | None = None):
        """Re-apply every entry to ``(g, k, r, w)``; returns the same tuple."""
        adj = g.mutable_adjacency()
        w = dict(w) if w is not None else {v: 0 for v in adj}
        for e in self.entries:
            for u, v in e.removed_edges:
                adj[u].discard(v)
                adj[v].discard(u)
            for v in e.removed_vertices:
                for u in adj.pop(v):
                    adj[u].discard(v)
                w.pop(v, None)
            for v, x in e.added_vertices:
                adj[v] = set()
                w[v] = x
            for u, v in e.added_edges:
                adj[u].add(v)
                adj[v].add(u)
            for v, delta in e.weight_deltas:
                w[v] += delta
            k += e.dk
            r += e.dr
        return Graph.from_adjacency(adj), k, r, w
