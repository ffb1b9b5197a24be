import pytest

from bfvd.bench import BenchConfig, RunReport, Timeout, bench, summarize, time_limit
from bfvd.errors import ContractError
from bfvd.generators import degenerate, forest_plus_fvs, gnp, tree_plus_edges
from bfvd.graph import degeneracy, fen_value, is_feedback_vertex_set


def test_generators_are_seeded():
    assert tree_plus_edges(30, 4, 9) == tree_plus_edges(30, 4, 9)
    assert gnp(10, 0.5, 1) == gnp(10, 0.5, 1)
    assert gnp(10, 0.5, 1) != gnp(10, 0.5, 2)


def test_generator_parameters():
    for seed in range(20):
        assert fen_value(tree_plus_edges(25, 6, seed)) == 6
        assert degeneracy(degenerate(20, 3, seed)).d <= 3
        g, hubs = forest_plus_fvs(15, 3, seed)
        assert is_feedback_vertex_set(g, hubs)
    with pytest.raises(ContractError):
        tree_plus_edges(3, 5, 0)


def test_bench_is_deterministic():
    cfg = BenchConfig("degen-sweep", seeds=2, timing=False)
    a = [r.to_json() for r in bench(cfg)]
    b = [r.to_json() for r in bench(cfg)]
    assert a == b and a


@pytest.mark.parametrize("family", ["fen-sweep", "degen-sweep", "fvn-sweep", "gadget"])
def test_bench_families(family):
    reports = list(bench(BenchConfig(family, seeds=2, max_fen=3, max_n=40)))
    assert [r.index for r in reports] == list(range(len(reports)))
    assert not any(r.disagrees for r in reports)
    lines = summarize(family, reports)
    assert lines[-1].startswith(f"runs {len(reports)}, disagreements 0")


def test_bad_family():
    with pytest.raises(ContractError):
        BenchConfig("nope")


def test_report_omits_absent_fields():
    rep = RunReport("x", 0, 1, 3, 2)
    assert rep.to_dict() == {"family": "x", "index": 0, "seed": 1, "n": 3, "m": 2}


def test_time_limit():
    with pytest.raises(Timeout):
        with time_limit(20):
            while True:
                pass
