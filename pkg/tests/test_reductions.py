import pytest
from hypothesis import given, settings, strategies as st

from bfvd.biclique import enumerate_smaller_sides
from bfvd.errors import ContractError
from bfvd.generators import gnp
from bfvd.graph import Graph
from bfvd.instance import BddInstance, WbddInstance
from bfvd.reductions import bdd_as_bfvd, bdd_from_wbdd, bdd_oracle_minimum, hardness_gadget
from bfvd.solvers import oracle_minimum
from conftest import cycle, path


def test_bdd_as_bfvd():
    inst = bdd_as_bfvd(BddInstance(cycle(4), 1, 2))
    assert (inst.g, inst.i, inst.j, inst.k) == (cycle(4), 1, 2, 2)
    inst = bdd_as_bfvd(BddInstance(path(3), 0, 1))
    assert (inst.i, inst.j) == (1, 1)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8), st.floats(0, 1), st.integers(0, 999), st.integers(0, 3), st.integers(0, 3))
def test_bdd_as_bfvd_agrees(n, p, seed, r, k):
    bdd = BddInstance(gnp(n, p, seed), r, k)
    b = bdd_as_bfvd(bdd)
    assert (bdd_oracle_minimum(bdd) is None) == (oracle_minimum(b.g, b.i, b.j, b.k) is None)


def test_gadget_on_triangle():
    tri = cycle(3)
    inst = hardness_gadget(BddInstance(tri, 1, 1), 2)
    assert inst.j == 5 and inst.g.n == 15 and inst.i == 2
    assert oracle_minimum(inst.g, 2, 5, 1) is not None
    assert oracle_minimum(inst.g, 2, 5, 0) is None
    assert bdd_oracle_minimum(BddInstance(tri, 1, 1)) is not None
    assert bdd_oracle_minimum(BddInstance(tri, 1, 0)) is None


@pytest.mark.parametrize("i", [2, 3])
def test_gadget_structure(i):
    g = Graph(range(1, 6), [(1, 2), (2, 3), (3, 4), (1, 5)])
    inst = hardness_gadget(BddInstance(g, 1, 0), i)
    n = g.n
    assert inst.g.n == n * i + n * n
    assert set(inst.g.vertices) > set(g.vertices)
    for u, v in g.edges():
        assert inst.g.has_edge(u, v)
    # per-vertex blocks: S_v then T_v
    block = i - 1 + n
    for t, v in enumerate(g.vertices):
        start = 6 + t * block
        s_side = [v] + list(range(start, start + i - 1))
        t_side = range(start + i - 1, start + block)
        assert all(inst.g.has_edge(s, x) for s in s_side for x in t_side)
        assert tuple(sorted(s_side)) in enumerate_smaller_sides(inst.g, i, n)
    assert hardness_gadget(BddInstance(g, 1, 0), i) == inst


def test_gadget_needs_more_vertices_than_i():
    with pytest.raises(ContractError):
        hardness_gadget(BddInstance(path(3), 1, 0), 3)
    with pytest.raises(ContractError):
        hardness_gadget(BddInstance(path(3), 1, 0), 1)


def test_bdd_from_wbdd():
    assert bdd_from_wbdd(WbddInstance(path(2), 1, 0)).r == 1
    with pytest.raises(ContractError):
        bdd_from_wbdd(WbddInstance(path(2), 1, 0, {1: 1}))
