import json

import pytest

from pbcomplex import verify as V
from pbcomplex.graph_core import LabelledGraph, graph_from_json, graph_to_json, path_graph, rose, theta


def gj(g):
    return graph_to_json(g)


def test_con_x_examples():
    assert V._check_con_x(gj(rose(2)))["failures"] == []
    loop_leaf = LabelledGraph.from_pairs([(0, 0), (0, 1)])
    res = V._check_con_x(gj(loop_leaf))
    assert res["failures"] == [] and res["counts"]["with_l_separating"] == 1
    assert V._check_con_x(gj(path_graph(1, labels=[0, 1])))["failures"] == []


def test_small_sweeps_pass():
    for fn in (V.verify_con_x, V.verify_core_retract, V.verify_suspension, V.verify_quotient_step):
        rep = fn(4, 2)
        assert rep.passed, rep.failures[:1]
        assert rep.certification_level in ("homological", "homological+pi1")


def test_core_retract_with_fibre_check():
    assert V.verify_core_retract(4, 2, quillen=True).passed


def test_suspension_examples():
    assert V._check_suspension(gj(rose(2)))["failures"] == []
    assert V._check_suspension(gj(rose(3)))["failures"] == []
    banana_loop = LabelledGraph.from_pairs([(0, 1), (0, 1), (1, 1)])
    assert V._check_suspension(gj(banana_loop))["failures"] == []
    assert V._check_suspension(gj(path_graph(2))).get("skipped")


def test_quotient_examples():
    assert V._check_quotient(gj(theta()))["failures"] == []
    assert V.admissible_quotient_edges(path_graph(2, labels=[0, 1, 2])) == []
    assert V._check_quotient(gj(path_graph(2, labels=[0, 2])))["failures"] == []
    banana = LabelledGraph.from_pairs([(0, 1), (0, 1)])
    assert V._check_quotient(gj(banana))["failures"] == []
    both = LabelledGraph.from_pairs([(0, 1), (0, 1)], labels=[0, 1])
    assert V._check_quotient(gj(both))["counts"] == {"no_admissible_edge": 1}


def test_quotient_step_reports_skips():
    rep = V.verify_quotient_step(4, 2)
    assert rep.skipped > 0 and "no_admissible_edge" in rep.observations


def test_inflation_examples():
    from pbcomplex.complex import boundary_of_simplex

    T = boundary_of_simplex(3)
    res = V._check_inflation(([sorted(f) for f in T.maximal_faces], {v: 2 for v in T.vertices}))
    assert res == {"failures": [], "counts": {"cm": 1, "non_cm": 0}}
    bow = [[0, 1, 2], [0, 3, 4]]
    assert V._check_inflation((bow, {v: 2 for v in range(5)}))["counts"]["non_cm"] == 1
    assert V._check_inflation(([[0]], {0: 3}))["counts"]["cm"] == 1


def test_inflation_is_seeded():
    a = V.verify_inflation_cm(25, seed=4)
    b = V.verify_inflation_cm(25, seed=4)
    assert a.passed and a.dumps(False) == b.dumps(False)
    assert a.observations["cm"] + a.observations["non_cm"] == 25


def test_random_complex_bounds():
    import random

    rng = random.Random(0)
    for _ in range(200):
        K = V.random_complex(rng)
        assert len(K.vertices) <= 8 and K.dimension <= 3


def test_farey_small():
    rep = V.verify_farey(1)
    assert rep.passed and rep.observations == {"vertices": 4, "edges": 4, "components": 1}
    assert V.verify_farey(2).passed
    with pytest.raises(ValueError):
        V.verify_farey(9)


def test_b3_probe_small():
    rep = V.verify_b3_probe(1)
    assert rep.passed and not rep.observational
    assert rep.observations["H1"] == 0 and rep.observations["components"] == 1
    with pytest.raises(ValueError):
        V.verify_b3_probe(5)


def test_report_round_trip_and_pass_flag():
    rep = V.verify_con_x(3, 1)
    data = json.loads(rep.dumps())
    back = V.VerificationReport.from_json(data)
    assert back.dumps() == rep.dumps()
    assert data["passed"] is True and data["failures"] == []
    assert "elapsed" not in json.loads(rep.dumps(include_timing=False))
    rep.failures.append({"instance": gj(rose(1)), "expected": 0, "observed": 1})
    assert not rep.passed


def test_sweeps_are_deterministic_and_job_independent():
    a = V.verify_con_x(4, 2, jobs=1).dumps(False)
    b = V.verify_con_x(4, 2, jobs=4).dumps(False)
    c = V.verify_con_x(4, 2, jobs=1).dumps(False)
    assert a == b == c


def _loop_detector(data):
    g = graph_from_json(data)
    bad = any(e.is_loop for e in g.edges)
    return {"failures": [{"instance": data, "expected": "no loop", "observed": "loop"}] if bad else []}


def test_failing_instance_is_minimized():
    g = LabelledGraph.from_pairs([(0, 1), (1, 1), (1, 2), (2, 0)], labels=[0, 2])
    small = graph_from_json(V._minimize(_loop_detector, g))
    assert len(small.edges) == 1 and small.edges[0].is_loop and small.k == 0


def test_harness_minimizes_and_reports(monkeypatch):
    rep = V._graph_sweep("loops", _loop_detector, 3, 1, 1)
    assert not rep.passed
    assert graph_from_json(rep.failures[0]["instance"]) is not None
    m = graph_from_json(rep.minimal_failure)
    assert len(m.edges) == 1 and m.k == 0


def test_formula_evaluators():
    assert V.ffs_connectivity(3, 0) == 1
    assert V.ffs_connectivity(3, 4) == 3
    assert [V.p1_equivalence_degree(2, k) for k in range(4)] == [0, 1, 1, 2]
    rep = V.verify_con_x(2, 1)
    table = rep.observations["formulas"]["table"]
    assert {"n": 1, "k": 2, "d": 0, "e": 0, "c": -1} in table


def test_bad_bounds():
    with pytest.raises(ValueError):
        V.verify_con_x(0, 1)
