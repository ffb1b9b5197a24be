import itertools
import random

import pytest

from bfvd.biclique import contains_biclique
from bfvd.errors import ContractError, UnsupportedParameterError
from bfvd.generators import degenerate, forest_plus_fvs, gnp
from bfvd.graph import Graph, degeneracy, minimum_fvs
from bfvd.instance import BfvdInstance
from bfvd.solvers import (find_branching_set, oracle_minimum, solve, solve_branching,
                          solve_degenerate, solve_fvn, solve_oracle, solve_vc)
from conftest import complete_bipartite, cycle, disjoint_union, path, stars


def check_witness(inst, verdict):
    if verdict.answer:
        assert len(verdict.witness) <= inst.k
        assert not contains_biclique(inst.g.remove_vertices(verdict.witness), inst.i, inst.j)
    else:
        assert verdict.witness is None


def test_oracle_examples():
    v = solve_oracle(BfvdInstance(cycle(4), 1, 2, 2))
    # lexicographically first minimum set; any two vertices of C4 work
    assert v.answer and v.witness == (1, 2)
    assert not solve_oracle(BfvdInstance(cycle(4), 1, 2, 1)).answer
    assert solve_oracle(BfvdInstance(complete_bipartite(2, 3), 2, 3, 1)).witness == (1,)


def test_oracle_size_guard():
    big = path(17)
    with pytest.raises(ContractError):
        solve_oracle(BfvdInstance(big, 1, 3, 1))
    assert solve_oracle(BfvdInstance(big, 1, 3, 0), allow_large=True).answer


def test_vc_examples():
    k23 = complete_bipartite(2, 3)
    assert solve_vc(BfvdInstance(k23, 2, 3, 1), [1, 2]).answer
    v = solve_vc(BfvdInstance(path(6), 2, 2, 0), path(6).vertices)
    assert v.answer and v.witness == ()
    assert not solve_vc(BfvdInstance(cycle(4), 1, 2, 1), [1, 3]).answer
    with pytest.raises(ContractError):
        solve_vc(BfvdInstance(cycle(4), 1, 2, 1), [1])


def test_branching_examples():
    k22 = complete_bipartite(2, 2)
    assert solve_branching(BfvdInstance(k22, 2, 2, 1)).answer
    two = disjoint_union(k22, complete_bipartite(2, 2, 5))
    assert not solve_branching(BfvdInstance(two, 2, 2, 1)).answer
    v = solve_branching(BfvdInstance(path(5), 1, 3, 0))
    assert v.answer and v.witness == ()


def test_branching_set_example():
    g = stars(8, 3)
    w = find_branching_set(BfvdInstance(g, 1, 3, 1), 1)
    centers = [1 + 4 * t for t in range(6)]
    assert w == centers
    with pytest.raises(ContractError):
        find_branching_set(BfvdInstance(g, 1, 3, 2), 1)
    with pytest.raises(ContractError):
        find_branching_set(BfvdInstance(g, 1, 3, 0), 1)


def spider(rng):
    """Hub with 6..9 legs of length 1 or 2, plus a few random chords."""
    edges, nxt = [], 2
    for _ in range(rng.randint(6, 9)):
        edges.append((1, nxt))
        if rng.random() < 0.7:
            edges.append((nxt, nxt + 1))
            nxt += 1
        nxt += 1
    g = Graph(range(1, nxt), edges)
    for _ in range(rng.randint(0, 2)):
        u, v = sorted(rng.sample(range(2, nxt), 2))
        if not g.has_edge(u, v):
            g = Graph(range(1, nxt), g.edges() + [(u, v)])
    return g


def test_branching_set_hits_optimal_witness():
    rng = random.Random(7)
    checked = 0
    for _ in range(300):
        g = spider(rng)
        d = degeneracy(g).d
        for j in (2, 3):
            for k in (1, 2):
                inst = BfvdInstance(g, 1, j, k)
                try:
                    w = find_branching_set(inst, d)
                except ContractError:
                    continue
                best = oracle_minimum(g, 1, j, k)
                if best is not None:
                    checked += 1
                    assert set(best) & set(w)
    assert checked > 20


def test_degenerate_examples():
    assert solve_degenerate(BfvdInstance(degenerate(9, 1, 3), 2, 2, 0)).answer
    v = solve_degenerate(BfvdInstance(complete_bipartite(3, 3), 1, 3, 2))
    assert v.answer and len(v.witness) == 2
    assert not solve_degenerate(BfvdInstance(complete_bipartite(3, 3), 1, 3, 1)).answer
    assert not solve_degenerate(BfvdInstance(stars(7, 3), 1, 3, 1)).answer


def test_fvn_examples():
    k23 = complete_bipartite(2, 3)
    v = solve_fvn(BfvdInstance(k23, 2, 3, 1), [1])
    assert v.answer and v.stats["fvn_shortcut"] == 1
    two = disjoint_union(complete_bipartite(2, 2), complete_bipartite(2, 2, 5))
    assert not solve_fvn(BfvdInstance(two, 2, 2, 1), [1, 5]).answer
    assert solve_fvn(BfvdInstance(path(6), 2, 2, 0), []).witness == ()
    with pytest.raises(UnsupportedParameterError):
        solve_fvn(BfvdInstance(k23, 1, 3, 1), [1])
    with pytest.raises(ContractError):
        solve_fvn(BfvdInstance(cycle(4), 2, 2, 0), [])


def test_dispatcher():
    inst = BfvdInstance(cycle(5), 1, 2, 2)
    assert solve(inst).stats["strategy_oracle"] == 1
    assert solve(inst, "oracle").answer == solve(inst, "degen").answer
    with pytest.raises(UnsupportedParameterError):
        solve(inst, "fvn")
    with pytest.raises(ContractError):
        solve(inst, "bogus")
    big = BfvdInstance(disjoint_union(cycle(8), cycle(8, 9)), 2, 2, 0)
    assert solve(big).answer
    assert solve(BfvdInstance(stars(5, 3), 1, 3, 0)).answer is False


# frozen minimum deletion sizes, computed with the bitmask oracle
FROZEN = [
    (complete_bipartite(3, 3), 2, 2, 2),
    (complete_bipartite(3, 4), 2, 3, 2),
    (cycle(6), 1, 2, 2),
    (disjoint_union(complete_bipartite(2, 2), cycle(5, 5)), 1, 2, 4),
]


@pytest.mark.parametrize("g,i,j,best", FROZEN)
def test_frozen_minimums(g, i, j, best):
    assert len(oracle_minimum(g, i, j, g.n)) == best
    for algo in ("branch", "degen", "vc"):
        assert solve(BfvdInstance(g, i, j, best), algo).answer
        assert not solve(BfvdInstance(g, i, j, best - 1), algo).answer


def test_all_solvers_agree_with_oracle():
    rng = random.Random(11)
    for _ in range(60):
        g = gnp(rng.randint(1, 9), rng.uniform(0.2, 0.7), rng.randrange(10**6))
        fvs = minimum_fvs(g).fvs
        for i in range(1, 5):
            for j in range(i, 5):
                best = oracle_minimum(g, i, j, 3)
                for k in range(4):
                    want = best is not None and len(best) <= k
                    inst = BfvdInstance(g, i, j, k)
                    verdicts = [solve_vc(inst, g.vertices), solve_branching(inst), solve_degenerate(inst)]
                    if i >= 2:
                        verdicts.append(solve_fvn(inst, fvs))
                    for v in verdicts:
                        assert v.answer == want
                        check_witness(inst, v)


def test_fvn_rejections_are_safe():
    """Every pruned guess really has no solution inside the forest."""
    events = []

    def hook(reason, g, allowed, k_res):
        events.append(reason)
        for size in range(k_res + 1):
            for xs in itertools.combinations(sorted(allowed), size):
                assert contains_biclique(g.remove_vertices(xs), i, j)

    rng = random.Random(3)
    for _ in range(80):
        g, hubs = forest_plus_fvs(20, 2, rng.randrange(10**6), p=0.9, q=1.0)
        i, j = 2, len(hubs) + 2
        for k in (1, 2):
            solve_fvn(BfvdInstance(g, i, j, k), hubs, on_reject=hook)
    assert {"Q", "R"} <= set(events)
