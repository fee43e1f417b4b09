"""Frames, con-graph gadgets, concept registry, and framework construction."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from beyondcr import (
    build_frame,
    connection_widths,
    construction_for,
    edge,
    framework_size,
    graph_from_json_obj,
    make_graph,
    parse_concept,
)
from beyondcr.graph_core import (
    ALL_CONNECTIONS,
    CONCEPTS,
    FRAME_NODES,
    Bundle,
    BundlePlus,
    ApexBlue,
    Graph,
    K7,
    SingleEdge,
    SkewBlue,
    Triangle,
    as_concept,
    connection_id,
    connection_poles,
    graph_to_json_obj,
    instantiate_congraph,
    structural_k,
)
from conftest import GRID


# ---------------------------------------------------------------------------
# Graphs and edges
# ---------------------------------------------------------------------------

def test_edge_normalizes_and_rejects_loops():
    assert edge("b", "a") == ("a", "b")
    assert edge("a", "b") == ("a", "b")
    with pytest.raises(ValueError):
        edge("a", "a")


def test_make_graph_sorts_and_validates():
    g = make_graph(["c", "a", "b"], [edge("c", "a"), edge("a", "b")])
    assert g.vertices == ("a", "b", "c")
    assert g.edges == (("a", "b"), ("a", "c"))
    with pytest.raises(ValueError):
        make_graph(["a"], [edge("a", "b")])
    with pytest.raises(ValueError):
        Graph(("a", "b"), (("b", "a"),))


def test_graph_json_round_trip():
    g = make_graph(["a", "b", "c"], [edge("a", "b"), edge("b", "c")])
    assert graph_from_json_obj(graph_to_json_obj(g)) == g


# ---------------------------------------------------------------------------
# Frame colorings
# ---------------------------------------------------------------------------

def test_connection_ids():
    assert connection_id("w2", "v1") == "v1-w2"
    assert connection_poles("v1-w2") == ("v1", "w2")
    assert len(ALL_CONNECTIONS) == 9
    assert len(FRAME_NODES) == 6


def test_standard_coloring():
    frame = build_frame("standard")
    assert sorted(frame.connections_by_color("blue")) == ["v1-w1", "v2-w2"]
    assert frame.connections_by_color("red") == ("v1-w2",)
    assert frame.connections_by_color("yellow") == ("v2-w1",)
    assert len(frame.connections_by_color("gray")) == 5
    assert frame.color("v1-w1") == "blue"
    assert frame.designated["upper"] == ("v1-w2", "v2-w1")
    assert frame.designated["witness"] == ("v1-w1", "v2-w2")


def test_alternate_coloring():
    frame = build_frame("alternate")
    assert frame.connections_by_color("blue") == ("v1-w1",)
    assert sorted(frame.connections_by_color("red")) == ["v1-w2", "v2-w1"]
    assert len(frame.connections_by_color("gray")) == 6
    assert frame.connections_by_color("yellow") == ()
    assert frame.designated == build_frame("standard").designated


def test_unknown_coloring_rejected():
    with pytest.raises(ValueError):
        build_frame("rainbow")


# ---------------------------------------------------------------------------
# Con-graph gadgets: the declared size properties must match what is built.
# ---------------------------------------------------------------------------

small = st.integers(min_value=1, max_value=6)


def _assert_spec_matches(spec, disjoint_paths=True):
    cg = instantiate_congraph(spec, "v1-w1", "v1", "w1")
    assert cg.width == spec.width == len(cg.paths)
    assert len(cg.internals) == spec.internal_count
    assert len(cg.edges) == spec.edge_count
    seen = set()
    for path in cg.paths:
        assert path[0] == "v1" and path[-1] == "w1"
        inner = set(path[1:-1])
        if disjoint_paths:
            # bundles promise internally disjoint pole paths
            assert not (inner & seen)
        seen |= inner
        for a, b in zip(path, path[1:]):
            assert edge(a, b) in cg.edges


@given(small, st.integers(min_value=2, max_value=6))
def test_bundle_counts(i, j):
    _assert_spec_matches(Bundle(i, j))


@given(small, st.integers(min_value=2, max_value=6))
def test_bundle_plus_counts(i, j):
    _assert_spec_matches(BundlePlus(i, j))


@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=3))
def test_apex_blue_counts(ell, k):
    # apex paths deliberately share their apex vertices, so no disjointness
    _assert_spec_matches(ApexBlue(ell, k), disjoint_paths=False)


@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=3))
def test_skew_blue_counts(ell, k):
    _assert_spec_matches(SkewBlue(ell, k), disjoint_paths=False)


def test_special_gadget_counts():
    _assert_spec_matches(SingleEdge())
    _assert_spec_matches(Triangle())
    _assert_spec_matches(K7())
    k7 = K7()
    assert (k7.width, k7.internal_count, k7.edge_count) == (6, 5, 21)
    assert SingleEdge().width == 1 and Triangle().edge_count == 3


# ---------------------------------------------------------------------------
# Concept registry
# ---------------------------------------------------------------------------

def test_parse_concept_round_trips():
    assert parse_concept("ic").kind == "ic"
    assert parse_concept("IC") == parse_concept("ic")
    assert parse_concept("kpl", 3) == as_concept("k-planar", 3)
    assert parse_concept("gap", 2).kind == "k-gap-planar"
    assert parse_concept("skew", 1).k == 1


def test_parse_concept_errors():
    with pytest.raises(ValueError):
        parse_concept("bogus")
    with pytest.raises(ValueError):
        parse_concept("k-planar")            # k required
    with pytest.raises(ValueError):
        parse_concept("k-fan-crossing-free", 1)   # k_min = 2
    with pytest.raises(ValueError):
        parse_concept("k-edge-crossing", 1)       # k_min = 2


def test_structural_k_defaults():
    assert structural_k(as_concept("ic")) == 1
    assert structural_k(as_concept("nnic")) == 2
    assert structural_k(as_concept("k-gap-planar", 3)) == 3


def test_thresholds():
    at_k2 = {kind: CONCEPTS[kind].threshold(2) for kind in CONCEPTS}
    assert at_k2["k-planar"] == 41
    assert at_k2["k-vertex-planar"] == 11
    assert at_k2["ic"] == 2
    assert at_k2["nic"] == 4
    assert at_k2["nnic"] == 109
    assert at_k2["k-fan-crossing-free"] == 109
    assert at_k2["adjacency-crossing"] == 1
    assert at_k2["k-edge-crossing"] == 1
    assert at_k2["k-gap-planar"] == 5
    assert at_k2["k-apex"] == 1
    assert at_k2["skewness"] == 3        # k + 1


# ---------------------------------------------------------------------------
# Framework construction
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("kind,ell,k", GRID)
def test_framework_size_matches_built_graph(kind, ell, k):
    fg = construction_for(kind, ell, k)
    n, m = framework_size(kind, ell, k)
    assert (len(fg.graph.vertices), len(fg.graph.edges)) == (n, m)


def test_vertex_count_formulas():
    # frozen closed forms, one instance each
    assert framework_size("ic", 2) == (28, 39)
    assert framework_size("ic", 3)[0] == 4 * 9 + 12
    assert framework_size("nic", 4)[0] == 7 + 5 * 4 + 2 * 4 * 5
    assert framework_size("nnic", 3)[0] == 18 * 3 + 10
    assert framework_size("adjacency-crossing", 2)[0] == 36 + 2 * 2
    assert framework_size("k-planar", 3, 2)[0] == 6 + 3 + 2 * 6 * 2 + 5 * 6
    assert framework_size("k-vertex-planar", 2, 1)[0] == 6 + 2 + 4 * 4 * 1 + 5 * 2
    assert framework_size("k-fan-crossing-free", 3, 2)[0] == 6 + 4 + 9 * 6
    assert framework_size("k-edge-crossing", 1, 2)[0] == 6 + 2 + 2 * 1 + 5 * 2
    assert framework_size("k-gap-planar", 5, 1)[0] == 6 + 15 + 24 * 5
    assert framework_size("k-apex", 1, 1)[0] == 6 + 8 + 5
    assert framework_size("skewness", 2, 1)[0] == 6 + 12 + 4


def test_connection_widths_match_congraphs():
    for kind, ell, k in GRID[::3]:
        fg = construction_for(kind, ell, k)
        assert connection_widths(kind, ell, k) == fg.widths()


def test_framework_graph_structure():
    fg = construction_for("ic", 2)
    assert fg.concept.kind == "ic"
    assert fg.ell == 2
    assert fg.k == 1
    assert not fg.below_threshold
    assert set(fg.congraphs) == set(ALL_CONNECTIONS)
    # every edge belongs to exactly one con-graph
    for e in fg.graph.edges:
        cid = fg.congraph_of_edge(e)
        assert e in fg.congraphs[cid].edges
    with pytest.raises(KeyError):
        fg.congraph_of_edge(edge("v1", "v2"))


def test_paths_through():
    fg = construction_for("k-planar", 2, 1)
    cg = fg.congraphs["v1-w1"]
    for i, path in enumerate(cg.paths):
        e = edge(path[0], path[1])
        assert i in cg.paths_through(e)
    # the direct pole edge of a bundle+ belongs to no pole path
    cg_ic = construction_for("ic", 2).congraphs["v1-w2"]
    assert cg_ic.paths_through(edge("v1", "w2")) == ()


def test_below_threshold_flag():
    assert construction_for("ic", 1).below_threshold
    assert not construction_for("ic", 2).below_threshold
    assert construction_for("nic", 3).below_threshold
    assert construction_for("skewness", 2, 2).below_threshold


def test_k_planar_needs_ell_at_least_two():
    with pytest.raises(ValueError):
        construction_for("k-planar", 1, 1)


def test_construction_deterministic():
    a = construction_for("k-gap-planar", 2, 2)
    b = construction_for("k-gap-planar", 2, 2)
    assert a.graph == b.graph
    assert a.widths() == b.widths()


def test_framework_graph_json_round_trip():
    fg = construction_for("skewness", 2, 1)
    obj = graph_to_json_obj(fg.graph)
    assert graph_from_json_obj(obj) == fg.graph
