"""Exact BFVD solvers.

Every solver returns a :class:`Verdict`; yes-verdicts carry a witness that is
re-checked against the input graph before it is returned.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable

from .biclique import (biclique_members, contains_biclique, enumerate_smaller_sides,
                       find_biclique, reduce_biclique_membership)
from .errors import BudgetExhausted, ContractError, IntegrityError, UnsupportedParameterError
from .graph import Graph, degeneracy, is_feedback_vertex_set, minimum_fvs
from .instance import BfvdInstance

ORACLE_MAX_N = 16
AUTO_ORACLE_MAX_N = 14
AUTO_FVS_CAP = 8


@dataclass
class Verdict:
    answer: bool
    witness: tuple[int, ...] | None = None
    stats: Counter = field(default_factory=Counter)

    def to_dict(self) -> dict:
        return {
            "answer": "yes" if self.answer else "no",
            "witness": list(self.witness) if self.witness is not None else None,
            "stats": dict(self.stats),
        }


def _yes(inst: BfvdInstance, witness: Iterable[int], stats: Counter) -> Verdict:
    witness = tuple(sorted(set(witness)))
    if len(witness) > inst.k:
        raise IntegrityError(f"witness of size {len(witness)} exceeds k={inst.k}")
    if contains_biclique(inst.g.remove_vertices(witness), inst.i, inst.j):
        raise IntegrityError(f"witness {witness} leaves a K_{inst.i},{inst.j}")
    return Verdict(True, witness, stats)


# ---------------------------------------------------------------------------
# brute-force oracle

def _popcount(x: int) -> int:
    return bin(x).count("1")


def oracle_minimum(g: Graph, i: int, j: int, limit: int) -> tuple[int, ...] | None:
    """Smallest deletion set of size <= limit, or None.

    Biclique test is the literal definition: every i-subset of V with its
    common-neighbourhood bitmask, independent of the enumeration code.
    """
    verts = g.vertices
    bit = {v: 1 << idx for idx, v in enumerate(verts)}
    masks = [sum(bit[u] for u in g.adj[v]) for v in verts]
    full = (1 << len(verts)) - 1
    sides = []
    for combo in combinations(range(len(verts)), i):
        common = full
        for idx in combo:
            common &= masks[idx]
        if _popcount(common) >= j:
            sides.append((sum(1 << idx for idx in combo), common))
    for size in range(min(limit, len(verts)) + 1):
        for combo in combinations(range(len(verts)), size):
            xm = sum(1 << idx for idx in combo)
            keep = ~xm
            if all(s & xm or _popcount(c & keep) < j for s, c in sides):
                return tuple(verts[idx] for idx in combo)
    return None


def solve_oracle(inst: BfvdInstance, allow_large: bool = False) -> Verdict:
    if inst.g.n > ORACLE_MAX_N and not allow_large:
        raise ContractError(f"oracle refuses n={inst.g.n} > {ORACLE_MAX_N} (pass allow_large)")
    found = oracle_minimum(inst.g, inst.i, inst.j, inst.k)
    stats = Counter(strategy_oracle=1)
    if found is None:
        return Verdict(False, None, stats)
    return _yes(inst, found, stats)


# ---------------------------------------------------------------------------
# vertex-cover guessing

def _relevant_vertices(g: Graph, i: int, j: int) -> set[int]:
    verts, _ = biclique_members(g, enumerate_smaller_sides(g, i, j))
    return verts


def _class_multisets(sizes: list[int], total: int):
    for combo in combinations_with_replacement(range(len(sizes)), total):
        counts = Counter(combo)
        if all(c <= sizes[idx] for idx, c in counts.items()):
            yield counts


def _vc_search(g: Graph, i: int, j: int, k: int, cover: Iterable[int], stats: Counter):
    if not contains_biclique(g, i, j):
        return ()
    if k == 0:
        return None
    # vertices outside every K_{i,j} never need deleting
    relevant = _relevant_vertices(g, i, j)
    cover_rel = sorted(set(cover) & relevant)
    if len(cover_rel) <= k:
        return tuple(cover_rel)
    classes: dict[frozenset, list[int]] = {}
    for v in sorted(relevant - set(cover_rel)):
        classes.setdefault(g.adj[v], []).append(v)
    class_list = sorted(classes.values())
    sizes = [len(c) for c in class_list]
    for total in range(1, k + 1):
        for a in range(min(total, len(cover_rel)) + 1):
            rest = total - a
            if rest > sum(sizes):
                continue
            multisets = list(_class_multisets(sizes, rest))
            for xp in combinations(cover_rel, a):
                for counts in multisets:
                    stats["guesses"] += 1
                    dele = list(xp)
                    for idx, c in counts.items():
                        dele.extend(class_list[idx][:c])
                    if not contains_biclique(g.remove_vertices(dele), i, j):
                        return tuple(dele)
    return None


def solve_vc(inst: BfvdInstance, cover: Iterable[int]) -> Verdict:
    cover = set(cover)
    if not cover <= inst.g.vertex_set() or not inst.g.is_vertex_cover(cover):
        raise ContractError("supplied set is not a vertex cover of the graph")
    stats = Counter(strategy_vc=1)
    found = _vc_search(inst.g, inst.i, inst.j, inst.k, cover, stats)
    if found is None:
        return Verdict(False, None, stats)
    return _yes(inst, found, stats)


# ---------------------------------------------------------------------------
# hitting-set branching

def _branch(g: Graph, i: int, j: int, k: int, stats: Counter):
    stats["nodes"] += 1
    hit = find_biclique(g, i, j)
    if hit is None:
        return ()
    if k == 0:
        return None
    side, big = hit
    for v in sorted(side + big):
        rest = _branch(g.remove_vertices((v,)), i, j, k - 1, stats)
        if rest is not None:
            return (v,) + rest
    return None


def solve_branching(inst: BfvdInstance) -> Verdict:
    stats = Counter(strategy_branch=1)
    found = _branch(inst.g, inst.i, inst.j, inst.k, stats)
    if found is None:
        return Verdict(False, None, stats)
    return _yes(inst, found, stats)


# ---------------------------------------------------------------------------
# degeneracy win-win

def find_branching_set(inst: BfvdInstance, d: int, coll=None) -> list[int]:
    """Vertices hitting every solution when the smaller sides cover many vertices."""
    g, k = inst.g, inst.k
    if k < 1:
        raise ContractError("find_branching_set needs k >= 1")
    if coll is None:
        coll = enumerate_smaller_sides(g, inst.i, inst.j)
    threshold = (4 * d + 2) * k
    if len(coll.union()) <= threshold:
        raise ContractError(f"ss(G)={len(coll.union())} does not exceed (4d+2)k={threshold}")
    xs: set[int] = set()
    for side in coll.sides:
        if len(xs) >= threshold:
            break
        xs.update(side)
    heavy = {v for v, ns in g.adj.items() if len(ns & xs) * k >= len(xs)}
    if len(heavy) > threshold:
        raise IntegrityError(f"{len(heavy)} heavy vertices exceed (4d+2)k={threshold}; is d the degeneracy?")
    return sorted(xs | heavy)


def _degen(g: Graph, i: int, j: int, k: int, stats: Counter):
    stats["nodes"] += 1
    g, trace = reduce_biclique_membership(g, i, j)
    stats["rule_applications"] += len(trace)
    if g.n == 0:
        return ()
    d = degeneracy(g).d
    if i > d:
        return ()
    coll = enumerate_smaller_sides(g, i, j)
    if not coll:
        return ()
    if k == 0:
        return None
    union = coll.union()
    if len(union) <= (4 * d + 2) * k:
        return _vc_search(g, i, j, k, union, stats)
    stats["branch_sets"] += 1
    for w in find_branching_set(BfvdInstance(g, i, j, k), d, coll):
        rest = _degen(g.remove_vertices((w,)), i, j, k - 1, stats)
        if rest is not None:
            return (w,) + rest
    return None


def solve_degenerate(inst: BfvdInstance) -> Verdict:
    stats = Counter(strategy_degen=1)
    found = _degen(inst.g, inst.i, inst.j, inst.k, stats)
    if found is None:
        return Verdict(False, None, stats)
    return _yes(inst, found, stats)


# ---------------------------------------------------------------------------
# feedback-vertex-set guided search

RejectHook = Callable[[str, Graph, frozenset, int], None]


def _fvn(inst: BfvdInstance, dset: frozenset, stats: Counter, on_reject: RejectHook | None):
    i, j, k = inst.i, inst.j, inst.k
    g = inst.g
    if not contains_biclique(g, i, j):
        return ()
    if k >= len(dset):
        stats["fvn_shortcut"] += 1
        return tuple(sorted(dset))
    if j <= len(dset) + 1:
        stats["delegated_branch"] += 1
        return _branch(g, i, j, k, stats)
    for size in range(min(k, len(dset)) + 1):
        for dp in combinations(sorted(dset), size):
            stats["guesses_d"] += 1
            rest_d = dset - set(dp)
            k1 = k - size
            g1, trace = reduce_biclique_membership(g.remove_vertices(dp), i, j)
            stats["rule_applications"] += len(trace)
            coll1 = enumerate_smaller_sides(g1, i, j)
            if not coll1:
                return dp
            if k1 == 0:
                continue
            union1 = coll1.union()
            forest1 = g1.vertex_set() - rest_d
            for side in coll1.sides:
                if len(forest1.intersection(side)) > 1:
                    raise IntegrityError(f"side {side} has two forest vertices although j > |D|+1")
            big = [v for v in sorted(forest1)
                   if len(({v} | (g1.adj[v] & forest1)) & union1) >= 3]
            if len(big) > 3 * k1:
                stats["rejected_r"] += 1
                if on_reject:
                    on_reject("R", g1, frozenset(forest1), k1)
                continue
            for rsize in range(min(k1, len(big)) + 1):
                for rp in combinations(big, rsize):
                    stats["guesses_r"] += 1
                    k2 = k1 - rsize
                    g2, trace = reduce_biclique_membership(g1.remove_vertices(rp), i, j)
                    stats["rule_applications"] += len(trace)
                    coll2 = enumerate_smaller_sides(g2, i, j)
                    if not coll2:
                        return dp + rp
                    union2 = coll2.union()
                    forest2 = g2.vertex_set() - rest_d
                    if len(forest2 & union2) > 2 * k2:
                        stats["rejected_q"] += 1
                        if on_reject:
                            on_reject("Q", g2, frozenset(forest2 - set(big)), k2)
                        continue
                    inner = _vc_search(g2, i, j, k2, union2, stats)
                    if inner is not None:
                        return dp + rp + inner
    return None


def solve_fvn(inst: BfvdInstance, d_set: Iterable[int], on_reject: RejectHook | None = None) -> Verdict:
    if inst.i < 2:
        raise UnsupportedParameterError("the feedback-vertex-set solver needs i >= 2; use solve_degenerate")
    dset = frozenset(d_set)
    if not dset <= inst.g.vertex_set() or not is_feedback_vertex_set(inst.g, dset):
        raise ContractError("supplied set is not a feedback vertex set of the graph")
    stats = Counter(strategy_fvn=1)
    found = _fvn(inst, dset, stats, on_reject)
    if found is None:
        return Verdict(False, None, stats)
    return _yes(inst, found, stats)


# ---------------------------------------------------------------------------

STRATEGIES = ("auto", "oracle", "vc", "branch", "degen", "fvn")


def solve(inst: BfvdInstance, strategy: str = "auto", d_set: Iterable[int] | None = None,
          cover: Iterable[int] | None = None, fvs_cap: int = AUTO_FVS_CAP) -> Verdict:
    if strategy not in STRATEGIES:
        raise ContractError(f"unknown strategy {strategy!r}")
    if strategy == "auto":
        if inst.g.n <= AUTO_ORACLE_MAX_N:
            strategy = "oracle"
        elif inst.i >= 2:
            if d_set is None:
                try:
                    d_set = minimum_fvs(inst.g, budget=fvs_cap).fvs
                except BudgetExhausted:
                    d_set = None
            strategy = "fvn" if d_set is not None and len(d_set) <= fvs_cap else "degen"
        else:
            strategy = "degen"
    if strategy == "oracle":
        return solve_oracle(inst)
    if strategy == "vc":
        if cover is None:
            # smaller sides cover every edge once the membership rule has run
            g, _ = reduce_biclique_membership(inst.g, inst.i, inst.j)
            cover = enumerate_smaller_sides(g, inst.i, inst.j).union()
            inner = solve_vc(inst.with_graph(g), cover)
            return _yes(inst, inner.witness, inner.stats) if inner.answer else inner
        return solve_vc(inst, cover)
    if strategy == "branch":
        return solve_branching(inst)
    if strategy == "degen":
        return solve_degenerate(inst)
    if d_set is None:
        d_set = minimum_fvs(inst.g).fvs
    return solve_fvn(inst, d_set)
