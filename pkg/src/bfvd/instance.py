"""Problem instances and the line-oriented instance file format.

    # comment
    p bfvd <n> <m>            |  p wbdd <n> <m> <r> <k>
    e <u> <v>                 (1 <= u < v <= n)
    param <i> <j> <k>         (bfvd only)
    w <v> <weight>            (wbdd only, default 0)
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping

from .errors import ContractError, ParseError
from .graph import Graph


@dataclass(frozen=True)
class BfvdInstance:
    g: Graph
    i: int
    j: int
    k: int

    def __post_init__(self):
        if self.i < 1 or self.j < self.i or self.k < 0:
            raise ContractError(f"need 1 <= i <= j and k >= 0, got i={self.i} j={self.j} k={self.k}")

    def with_graph(self, g: Graph, k: int | None = None) -> "BfvdInstance":
        return replace(self, g=g, k=self.k if k is None else k)


@dataclass(frozen=True)
class BddInstance:
    g: Graph
    r: int
    k: int


@dataclass(frozen=True)
class WbddInstance:
    g: Graph
    r: int
    k: int
    w: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        w = {v: self.w.get(v, 0) for v in self.g.adj}
        if any(x < 0 for x in w.values()):
            raise ContractError("weights must be non-negative")
        object.__setattr__(self, "w", w)

    @classmethod
    def from_bdd(cls, inst: BddInstance) -> "WbddInstance":
        return cls(inst.g, inst.r, inst.k)

    @property
    def decided_no(self) -> bool:
        return self.k < 0


def _ints(tokens, lineno, count):
    if len(tokens) != count:
        raise ParseError(f"expected {count} fields, got {len(tokens)}", lineno)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"non-integer field in {' '.join(tokens)!r}", lineno) from None


def parse_instance(text: str) -> BfvdInstance | WbddInstance:
    kind = None
    n = m = r = k = None
    params = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    weights: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tag, *rest = line.split()
        if tag == "p":
            if kind is not None:
                raise ParseError("second header", lineno)
            if not rest or rest[0] not in ("bfvd", "wbdd"):
                raise ParseError("header must be 'p bfvd' or 'p wbdd'", lineno)
            kind = rest[0]
            if kind == "bfvd":
                n, m = _ints(rest[1:], lineno, 2)
            else:
                n, m, r, k = _ints(rest[1:], lineno, 4)
                if r < 0 or k < 0:
                    raise ParseError("negative parameter", lineno)
            if n < 0 or m < 0:
                raise ParseError("negative size", lineno)
            continue
        if kind is None:
            raise ParseError("data before header", lineno)
        if tag == "e":
            u, v = _ints(rest, lineno, 2)
            if u == v:
                raise ParseError(f"self-loop at {u}", lineno)
            if not (1 <= min(u, v) and max(u, v) <= n):
                raise ParseError(f"vertex out of range 1..{n}", lineno)
            if u > v:
                raise ParseError("edge endpoints must be ordered u < v", lineno)
            if (u, v) in seen:
                raise ParseError(f"duplicate edge {u} {v}", lineno)
            seen.add((u, v))
            edges.append((u, v))
        elif tag == "param":
            if kind != "bfvd":
                raise ParseError("'param' only allowed in bfvd files", lineno)
            if params is not None:
                raise ParseError("second param line", lineno)
            params = _ints(rest, lineno, 3)
            pi, pj, pk = params
            if min(params) < 0:
                raise ParseError("negative parameter", lineno)
            if pi < 1:
                raise ParseError("i must be at least 1", lineno)
            if pi > pj:
                raise ParseError(f"i > j ({pi} > {pj})", lineno)
        elif tag == "w":
            if kind != "wbdd":
                raise ParseError("'w' only allowed in wbdd files", lineno)
            v, x = _ints(rest, lineno, 2)
            if not 1 <= v <= n:
                raise ParseError(f"vertex out of range 1..{n}", lineno)
            if x < 0:
                raise ParseError("negative weight", lineno)
            if v in weights:
                raise ParseError(f"second weight for vertex {v}", lineno)
            weights[v] = x
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno)
    if kind is None:
        raise ParseError("missing header")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    g = Graph(range(1, n + 1), edges)
    if kind == "bfvd":
        if params is None:
            raise ParseError("missing 'param i j k' line")
        return BfvdInstance(g, *params)
    return WbddInstance(g, r, k, weights)


def write_instance(inst: BfvdInstance | WbddInstance | BddInstance) -> str:
    """Serialize; vertex ids are compacted order-preservingly onto 1..n."""
    g, mapping = inst.g.relabel_compact()
    if isinstance(inst, BfvdInstance):
        lines = [f"p bfvd {g.n} {g.m}"]
    else:
        lines = [f"p wbdd {g.n} {g.m} {inst.r} {inst.k}"]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    if isinstance(inst, BfvdInstance):
        lines.append(f"param {inst.i} {inst.j} {inst.k}")
    elif isinstance(inst, WbddInstance):
        lines += [f"w {mapping[v]} {x}" for v, x in sorted(inst.w.items()) if x]
    return "\n".join(lines) + "\n"


def read_instance(path) -> BfvdInstance | WbddInstance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())
