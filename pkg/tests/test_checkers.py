"""Concept checkers against brute-force oracles and hand-made drawings."""

import random

import pytest

from beyondcr import check_concept, compute_crossings, random_drawing, standard_drawing
from beyondcr.checkers import (
    check_adjacency_crossing,
    check_fan_crossing,
    check_ic,
    check_k_apex,
    check_k_edge_crossing,
    check_k_fan_crossing_free,
    check_k_gap_planar,
    check_k_planar,
    check_k_vertex_planar,
    check_nic,
    check_nnic,
    check_skewness,
    check_strong_fan_planar,
    check_weak_fan_planar,
)
from beyondcr.graph_core import as_concept
from conftest import (
    GRID,
    fan_fixture_adjacent_not_fan,
    fan_fixture_fan_not_weak,
    fan_fixture_weak_not_strong,
)
import oracles as o


# ---------------------------------------------------------------------------
# Standard drawings: witness passes its own checker, the upper variant fails.
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("kind,ell,k", GRID)
def test_witness_passes_upper_fails(kind, ell, k):
    w = standard_drawing(kind, ell, k, variant="witness")
    u = standard_drawing(kind, ell, k, variant="upper")
    assert check_concept(w, kind, k).ok
    assert not check_concept(u, kind, k).ok


def test_failure_reasons_are_informative():
    v = check_concept(standard_drawing("ic", 2, variant="upper"), "ic")
    assert "share" in v.reason and v.witness is not None
    v = check_concept(standard_drawing("k-apex", 1, 1, variant="upper"), "k-apex", 1)
    assert "no 1 vertices" in v.reason
    v = check_concept(standard_drawing("skewness", 2, 1, variant="upper"), "skewness", 1)
    assert "no 1 edges" in v.reason
    v = check_concept(standard_drawing("k-planar", 2, 1, variant="upper"), "k-planar", 1)
    assert "crossed" in v.reason


# ---------------------------------------------------------------------------
# Fan-variant ladder: three drawings that each separate one rung.
# ---------------------------------------------------------------------------

def _fan_verdicts(d):
    xs = compute_crossings(d)
    return (check_adjacency_crossing(d, xs=xs).ok,
            check_fan_crossing(d, xs=xs).ok,
            check_weak_fan_planar(d, xs=xs).ok,
            check_strong_fan_planar(d, xs=xs).ok)


def test_adjacent_but_not_fan():
    d = fan_fixture_adjacent_not_fan()
    assert _fan_verdicts(d) == (True, False, False, False)
    v = check_fan_crossing(d)
    assert "no common vertex" in v.reason


def test_fan_but_not_weak():
    d = fan_fixture_fan_not_weak()
    assert _fan_verdicts(d) == (True, True, False, False)
    v = check_weak_fan_planar(d)
    assert "both sides" in v.reason


def test_weak_but_not_strong():
    d = fan_fixture_weak_not_strong()
    assert _fan_verdicts(d) == (True, True, True, False)
    v = check_strong_fan_planar(d)
    assert "enclosed" in v.reason


def test_non_simple_fails_every_fan_variant():
    # two adjacent edges crossing: not a simple drawing
    from beyondcr import Drawing, edge, make_graph
    from conftest import pt
    g = make_graph(["a", "b", "c"], [edge("a", "b"), edge("a", "c")])
    d = Drawing(g, {"a": pt(0, 0), "b": pt(6, 0), "c": pt(6, 3)},
                curves={edge("a", "c"): (pt(2, -2), pt(4, 1))})
    assert _fan_verdicts(d) == (False, False, False, False)
    assert not check_nnic(d).ok
    assert not check_k_fan_crossing_free(d, 5).ok
    # but the pairwise-endpoint and counting concepts do not mind
    assert check_ic(d).ok
    assert check_k_planar(d, 1).ok


# ---------------------------------------------------------------------------
# Brute-force oracle agreement on a random corpus
# ---------------------------------------------------------------------------

def test_checkers_agree_with_oracles_on_random_drawings():
    rng = random.Random(1312)
    for _ in range(40):
        d = random_drawing(rng, bend_prob=0.35)
        xs = compute_crossings(d)
        for k in (1, 2, 3):
            assert check_k_planar(d, k, xs=xs).ok == o.kpl_ok(xs, k)
            assert check_k_vertex_planar(d, k, xs=xs).ok == o.kvp_ok(xs, k)
            assert check_k_edge_crossing(d, k, xs=xs).ok == o.ecr_ok(xs, k)
            assert check_k_fan_crossing_free(d, k, xs=xs).ok == o.kfcf_ok(xs, k)
            assert check_k_gap_planar(d, k, xs=xs).ok == o.gap_ok_brute(xs, k)
            assert check_k_apex(d, k, xs=xs).ok == o.apex_ok_brute(xs, k)
            assert check_skewness(d, k, xs=xs).ok == o.skew_ok_brute(xs, k)
        assert check_ic(d, xs=xs).ok == o.shared_endpoints_ok(xs, 0)
        assert check_nic(d, xs=xs).ok == o.shared_endpoints_ok(xs, 1)
        assert check_nnic(d, xs=xs).ok == (
            o.simple_ok(xs) and o.shared_endpoints_ok(xs, 2))


def test_gap_planar_success_carries_an_assignment():
    d = standard_drawing("k-gap-planar", 5, 1, variant="witness")
    xs = compute_crossings(d)
    v = check_k_gap_planar(d, 1, xs=xs)
    assert v.ok
    assignment = v.witness["assignment"]
    assert len(assignment) == len(xs)
    loads = {}
    for e_key in assignment.values():
        loads[e_key] = loads.get(e_key, 0) + 1
    assert max(loads.values()) <= 1


def test_apex_and_skew_witnesses_name_their_removals():
    d = standard_drawing("k-apex", 2, 2, variant="witness")
    v = check_k_apex(d, 2)
    assert v.ok and len(v.witness["apices"]) <= 2
    d = standard_drawing("skewness", 2, 1, variant="witness")
    v = check_skewness(d, 1)
    assert v.ok and len(v.witness["removed"]) <= 1


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

def test_check_concept_dispatch():
    d = standard_drawing("ic", 2, variant="witness")
    assert check_concept(d, "ic").ok
    assert check_concept(d, "IC").ok
    assert check_concept(d, as_concept("ic")).ok
    # ic witnesses are exactly 1-vertex-planar
    assert check_concept(d, "k-vertex-planar", 1).ok
    with pytest.raises(ValueError):
        check_concept(d, "k-planar")         # k missing
    with pytest.raises(ValueError):
        check_concept(d, "no-such-concept")


def test_precomputed_crossings_short_circuit():
    d = standard_drawing("nic", 4, variant="witness")
    xs = compute_crossings(d)
    assert check_concept(d, "nic", xs=xs).ok == check_concept(d, "nic").ok
