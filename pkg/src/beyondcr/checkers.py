"""Checkers for beyond-planarity concepts on polyline drawings.

Every checker takes a Drawing (and parameter k where applicable) and returns
a Verdict.  Failure verdicts carry a machine-checkable witness: the edge /
vertex / crossing pair that breaks the condition, or for the search-based
concepts (gap, apex, skewness) a certificate that no valid assignment or
deletion set exists.

Counting conventions, applied consistently:
  * a self-crossing counts twice toward its edge's crossing count;
  * a crossing event counts once per vertex for vertex-based counts, even
    when both its edges are incident to that vertex;
  * the fan-family checkers (ac, fc, wfp, sfp) and the *-nic checkers that
    need it require a simple drawing and reject non-simple ones outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import networkx as nx

from .drawing import (Crossing, CrossingSet, Drawing, Verdict,
                      compute_crossings, is_simple_drawing)
from .geometry import Point, cross, point_in_polygon_evenodd, sub
from .graph_core import ConceptId, Edge, as_concept, edge_key


def _xs(drawing: Drawing, xs: CrossingSet | None) -> CrossingSet:
    return xs if xs is not None else compute_crossings(drawing)


def _crossing_vertices(x: Crossing) -> set[str]:
    return set(x.a) | set(x.b)


def _xjson(x: Crossing) -> dict:
    return {"edges": [edge_key(x.a), edge_key(x.b)],
            "point": [str(x.point[0]), str(x.point[1])]}


# ---------------------------------------------------------------------------
# Local crossing number / vertex crossing number
# ---------------------------------------------------------------------------

def check_k_planar(drawing: Drawing, k: int, *,
                   xs: CrossingSet | None = None) -> Verdict:
    """Every edge is crossed at most k times (self-crossings count twice)."""
    xs = _xs(drawing, xs)
    counts: dict[Edge, int] = {}
    for x in xs:
        counts[x.a] = counts.get(x.a, 0) + 1
        counts[x.b] = counts.get(x.b, 0) + 1
    for e in sorted(counts):
        if counts[e] > k:
            return Verdict(False, "k-planar",
                           f"edge {edge_key(e)} crossed {counts[e]} > {k} times",
                           {"edge": edge_key(e), "count": counts[e],
                            "crossings": [_xjson(x) for x in xs.of_edge(e)]})
    return Verdict(True, "k-planar")


def check_k_vertex_planar(drawing: Drawing, k: int, *,
                          xs: CrossingSet | None = None) -> Verdict:
    """Every vertex has at most k crossings on its incident edges; a crossing
    between two edges sharing that vertex still counts once."""
    xs = _xs(drawing, xs)
    counts: dict[str, int] = {}
    per_vertex: dict[str, list[Crossing]] = {}
    for x in xs:
        for v in _crossing_vertices(x):
            counts[v] = counts.get(v, 0) + 1
            per_vertex.setdefault(v, []).append(x)
    for v in sorted(counts):
        if counts[v] > k:
            return Verdict(False, "k-vertex-planar",
                           f"vertex {v} has {counts[v]} > {k} adjacent crossings",
                           {"vertex": v, "count": counts[v],
                            "crossings": [_xjson(x) for x in per_vertex[v]]})
    return Verdict(True, "k-vertex-planar")


# ---------------------------------------------------------------------------
# Independent-crossing family
# ---------------------------------------------------------------------------

def _check_shared_endpoints(drawing: Drawing, limit: int, concept: str,
                            xs: CrossingSet | None,
                            require_simple: bool) -> Verdict:
    xs = _xs(drawing, xs)
    if require_simple and not is_simple_drawing(drawing, xs):
        return Verdict(False, concept, "drawing is not simple")
    for x1, x2 in combinations(xs, 2):
        shared = _crossing_vertices(x1) & _crossing_vertices(x2)
        if len(shared) > limit:
            return Verdict(False, concept,
                           f"two crossings share {len(shared)} > {limit} "
                           f"endpoints ({', '.join(sorted(shared))})",
                           {"crossings": [_xjson(x1), _xjson(x2)],
                            "shared": sorted(shared)})
    return Verdict(True, concept)


def check_ic(drawing: Drawing, *, xs: CrossingSet | None = None) -> Verdict:
    """Independent crossings: no two crossings share an endpoint vertex."""
    return _check_shared_endpoints(drawing, 0, "ic", xs, False)


def check_nic(drawing: Drawing, *, xs: CrossingSet | None = None) -> Verdict:
    """Near-independent crossings: two crossings share at most one endpoint."""
    return _check_shared_endpoints(drawing, 1, "nic", xs, False)


def check_nnic(drawing: Drawing, *, xs: CrossingSet | None = None) -> Verdict:
    """Nearly-near-independent: simple drawing, at most two shared endpoints."""
    return _check_shared_endpoints(drawing, 2, "nnic", xs, True)


def check_k_fan_crossing_free(drawing: Drawing, k: int, *,
                              xs: CrossingSet | None = None) -> Verdict:
    """Simple drawing in which no edge is crossed by k edges with a common
    endpoint: for every edge e and vertex z outside e, at most k-1 of the
    edges crossing e are incident to z."""
    xs = _xs(drawing, xs)
    if not is_simple_drawing(drawing, xs):
        return Verdict(False, "k-fan-crossing-free", "drawing is not simple")
    crossers: dict[Edge, set[Edge]] = {}
    for x in xs:
        crossers.setdefault(x.a, set()).add(x.b)
        crossers.setdefault(x.b, set()).add(x.a)
    for e in sorted(crossers):
        apex_count: dict[str, list[Edge]] = {}
        for f in crossers[e]:
            for z in f:
                if z not in e:
                    apex_count.setdefault(z, []).append(f)
        for z in sorted(apex_count):
            fan = apex_count[z]
            if len(fan) > k - 1:
                return Verdict(
                    False, "k-fan-crossing-free",
                    f"edge {edge_key(e)} is crossed by {len(fan)} >= {k} "
                    f"edges incident to {z}",
                    {"edge": edge_key(e), "apex": z,
                     "fan": sorted(edge_key(f) for f in fan)})
    return Verdict(True, "k-fan-crossing-free")


# ---------------------------------------------------------------------------
# Fan family
# ---------------------------------------------------------------------------

def _crossers_by_edge(xs: CrossingSet) -> dict[Edge, list[Crossing]]:
    out: dict[Edge, list[Crossing]] = {}
    for x in xs:
        out.setdefault(x.a, []).append(x)
        out.setdefault(x.b, []).append(x)
    return out


def _side_of_crossing(drawing: Drawing, e: Edge, x: Crossing,
                      anchor: str) -> int:
    """Sign of the crossing of f over e when f is oriented toward anchor."""
    f = x.other(e)
    seg_e, _te = x.positions_on(e)[0]
    seg_f, _tf = x.positions_on(f)[0]
    a, b = drawing.segments(e)[seg_e]
    c, d = drawing.segments(f)[seg_f]
    dir_e = sub(b, a)
    dir_f = sub(d, c) if anchor == f[1] else sub(c, d)
    s = cross(dir_e, dir_f)
    return 1 if s > 0 else -1


def _sub_polyline_between(drawing: Drawing, e: Edge,
                          p1: tuple[int, Fraction], pt1: Point,
                          p2: tuple[int, Fraction], pt2: Point) -> list[Point]:
    """Points of e's curve from crossing (p1, pt1) to crossing (p2, pt2)."""
    if p2 < p1:
        p1, p2, pt1, pt2 = p2, p1, pt2, pt1
    poly = drawing.polyline(e)
    out = [pt1]
    out.extend(poly[p1[0] + 1: p2[0] + 1])
    out.append(pt2)
    return out


def _curve_to_vertex(drawing: Drawing, f: Edge, pos: tuple[int, Fraction],
                     xpt: Point, vertex: str) -> list[Point]:
    """Points of f's curve from a crossing point to one of its endpoints."""
    poly = drawing.polyline(f)
    if vertex == f[1]:
        return [xpt, *poly[pos[0] + 1:]]
    if vertex == f[0]:
        return [xpt, *reversed(poly[:pos[0] + 1])]
    raise ValueError(f"{vertex} is not an endpoint of {f}")


def _dedupe_ring(points: list[Point]) -> list[Point]:
    out: list[Point] = []
    for p in points:
        if not out or out[-1] != p:
            out.append(p)
    if len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def _fan_anchor_candidates(e: Edge, crossers: list[Crossing]) -> list[str]:
    common: set[str] | None = None
    for x in crossers:
        vs = set(x.other(e))
        common = vs if common is None else common & vs
    if not common:
        return []
    return sorted(common - set(e))


def _check_fan(drawing: Drawing, concept: str, need_anchor: bool,
               need_side: bool, need_enclosure: bool,
               xs: CrossingSet | None) -> Verdict:
    xs = _xs(drawing, xs)
    if not is_simple_drawing(drawing, xs):
        return Verdict(False, concept, "drawing is not simple")
    for e, crossings in sorted(_crossers_by_edge(xs).items()):
        if len(crossings) <= 1:
            continue
        if not need_anchor:
            # adjacency-crossing: crossers only need to be pairwise adjacent.
            for x1, x2 in combinations(crossings, 2):
                f1, f2 = x1.other(e), x2.other(e)
                if f1 != f2 and not set(f1) & set(f2):
                    return Verdict(
                        False, concept,
                        f"edges {edge_key(f1)} and {edge_key(f2)} cross "
                        f"{edge_key(e)} but share no vertex",
                        {"edge": edge_key(e),
                         "crossers": [edge_key(f1), edge_key(f2)]})
            continue
        anchors = _fan_anchor_candidates(e, crossings)
        if not anchors:
            fans = sorted(edge_key(x.other(e)) for x in crossings)
            return Verdict(False, concept,
                           f"edges crossing {edge_key(e)} have no common vertex",
                           {"edge": edge_key(e), "crossers": fans})
        if not need_side:
            continue
        ok_anchor = None
        last_reason: tuple[str, dict] | None = None
        for v in anchors:
            sides = {_side_of_crossing(drawing, e, x, v) for x in crossings}
            if len(sides) > 1:
                last_reason = (
                    f"crossings of {edge_key(e)} approach anchor {v} from "
                    f"both sides", {"edge": edge_key(e), "anchor": v})
                continue
            if need_enclosure:
                trapped = _enclosure_failure(drawing, e, crossings, v)
                if trapped is not None:
                    last_reason = trapped
                    continue
            ok_anchor = v
            break
        if ok_anchor is None:
            reason, witness = last_reason  # at least one anchor was tried
            return Verdict(False, concept, reason, witness)
    return Verdict(True, concept)


def _enclosure_failure(drawing: Drawing, e: Edge,
                       crossings: list[Crossing],
                       anchor: str) -> tuple[str, dict] | None:
    """sfp condition: for each pair of crossers, the closed curve formed by
    the piece of e between the two crossing points and the two crosser
    curves up to the anchor must not strictly enclose an endpoint of e."""
    endpoints = [(u, drawing.positions[u]) for u in e]
    for xi, xj in combinations(crossings, 2):
        pi = xi.positions_on(e)[0]
        pj = xj.positions_on(e)[0]
        fi, fj = xi.other(e), xj.other(e)
        first, second = (xi, xj) if pi <= pj else (xj, xi)
        ring = _sub_polyline_between(drawing, e,
                                     first.positions_on(e)[0], first.point,
                                     second.positions_on(e)[0], second.point)
        ring += _curve_to_vertex(drawing, second.other(e),
                                 second.positions_on(second.other(e))[0],
                                 second.point, anchor)[1:]
        back = _curve_to_vertex(drawing, first.other(e),
                                first.positions_on(first.other(e))[0],
                                first.point, anchor)
        ring += list(reversed(back))[1:]
        ring = _dedupe_ring(ring)
        for u, p in endpoints:
            if point_in_polygon_evenodd(p, ring):
                return (f"endpoint {u} of {edge_key(e)} is enclosed by the "
                        f"fan region of {edge_key(fi)} and {edge_key(fj)}",
                        {"edge": edge_key(e), "endpoint": u, "anchor": anchor,
                         "crossers": [edge_key(fi), edge_key(fj)]})
    return None


def check_adjacency_crossing(drawing: Drawing, *,
                             xs: CrossingSet | None = None) -> Verdict:
    """Simple drawing; edges crossing a common edge are pairwise adjacent."""
    return _check_fan(drawing, "adjacency-crossing", False, False, False, xs)


def check_fan_crossing(drawing: Drawing, *,
                       xs: CrossingSet | None = None) -> Verdict:
    """Simple drawing; edges crossing a common edge all share one vertex."""
    return _check_fan(drawing, "fan-crossing", True, False, False, xs)


def check_weak_fan_planar(drawing: Drawing, *,
                          xs: CrossingSet | None = None) -> Verdict:
    """Fan-crossing with a consistent side: for some common vertex of the
    crossers, all of them cross the edge from the same side."""
    return _check_fan(drawing, "weak-fan-planar", True, True, False, xs)


def check_strong_fan_planar(drawing: Drawing, *,
                            xs: CrossingSet | None = None) -> Verdict:
    """Weak fan-planar and no fan region traps an endpoint of the crossed
    edge."""
    return _check_fan(drawing, "strong-fan-planar", True, True, True, xs)


# ---------------------------------------------------------------------------
# Global counting concepts
# ---------------------------------------------------------------------------

def check_k_edge_crossing(drawing: Drawing, k: int, *,
                          xs: CrossingSet | None = None) -> Verdict:
    """At most k edges are involved in crossings."""
    xs = _xs(drawing, xs)
    crossed = xs.crossed_edges()
    if len(crossed) > k:
        return Verdict(False, "k-edge-crossing",
                       f"{len(crossed)} > {k} edges are crossed",
                       {"crossed_edges": sorted(edge_key(e) for e in crossed)})
    return Verdict(True, "k-edge-crossing")


def check_k_gap_planar(drawing: Drawing, k: int, *,
                       xs: CrossingSet | None = None) -> Verdict:
    """Each crossing can be charged to one of its two edges so that every
    edge is charged at most k times.  Decided by max-flow; on failure the
    witness is a set of edges E_R whose internal crossings exceed k|E_R|."""
    xs = _xs(drawing, xs)
    if len(xs) == 0:
        return Verdict(True, "k-gap-planar")
    G = nx.DiGraph()
    for i, x in enumerate(xs):
        G.add_edge("S", ("x", i), capacity=1)
        for e in {x.a, x.b}:
            G.add_edge(("x", i), ("e", e), capacity=1)
            G.add_edge(("e", e), "T", capacity=k)
    value, flow = nx.maximum_flow(G, "S", "T")
    if value == len(xs):
        assignment = {}
        for i, x in enumerate(xs):
            for e in {x.a, x.b}:
                if flow[("x", i)].get(("e", e), 0) == 1:
                    assignment[str(i)] = edge_key(e)
                    break
        return Verdict(True, "k-gap-planar", witness={"assignment": assignment})
    # Residual reachability from S gives a Hall-type deficiency certificate.
    reach = {"S"}
    stack = ["S"]
    while stack:
        u = stack.pop()
        for v in G.successors(u):
            if v not in reach and flow[u][v] < G[u][v]["capacity"]:
                reach.add(v)
                stack.append(v)
        for v in G.predecessors(u):
            if v not in reach and flow[v][u] > 0:
                reach.add(v)
                stack.append(v)
    e_r = sorted(n[1] for n in reach if isinstance(n, tuple) and n[0] == "e")
    internal = [i for i, x in enumerate(xs)
                if x.a in e_r and x.b in e_r]
    return Verdict(False, "k-gap-planar",
                   f"{len(internal)} crossings among {len(e_r)} edges exceed "
                   f"capacity {k}*{len(e_r)}",
                   {"edges": [edge_key(e) for e in e_r],
                    "internal_crossings": len(internal)})


def _hitting_set(universe: list[frozenset], k: int) -> set | None:
    """Smallest-first branch and bound for a hitting set of size <= k."""
    def solve(remaining: list[frozenset], budget: int) -> set | None:
        if not remaining:
            return set()
        if budget == 0:
            return None
        target = min(remaining, key=len)
        for choice in sorted(target, key=str):
            rest = [r for r in remaining if choice not in r]
            sub = solve(rest, budget - 1)
            if sub is not None:
                sub.add(choice)
                return sub
        return None

    return solve(universe, k)


def check_k_apex(drawing: Drawing, k: int, *,
                 xs: CrossingSet | None = None) -> Verdict:
    """Some set of at most k vertices meets every crossing (deleting them
    leaves a crossing-free drawing)."""
    xs = _xs(drawing, xs)
    sets = [frozenset(_crossing_vertices(x)) for x in xs]
    hit = _hitting_set(sets, k)
    if hit is None:
        return Verdict(False, "k-apex",
                       f"no {k} vertices cover all {len(xs)} crossings",
                       {"crossings": [_xjson(x) for x in xs]})
    return Verdict(True, "k-apex", witness={"apices": sorted(hit)})


def check_skewness(drawing: Drawing, k: int, *,
                   xs: CrossingSet | None = None) -> Verdict:
    """Some set of at most k edges meets every crossing (deleting them
    leaves a crossing-free drawing)."""
    xs = _xs(drawing, xs)
    sets = [frozenset({x.a, x.b}) for x in xs]
    hit = _hitting_set(sets, k)
    if hit is None:
        return Verdict(False, "skewness",
                       f"no {k} edges cover all {len(xs)} crossings",
                       {"crossings": [_xjson(x) for x in xs]})
    return Verdict(True, "skewness",
                   witness={"removed": sorted(edge_key(e) for e in hit)})


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

_PARAMETRIC = {
    "k-planar": check_k_planar,
    "k-vertex-planar": check_k_vertex_planar,
    "k-fan-crossing-free": check_k_fan_crossing_free,
    "k-edge-crossing": check_k_edge_crossing,
    "k-gap-planar": check_k_gap_planar,
    "k-apex": check_k_apex,
    "skewness": check_skewness,
}

_PLAIN = {
    "ic": check_ic,
    "nic": check_nic,
    "nnic": check_nnic,
    "adjacency-crossing": check_adjacency_crossing,
    "fan-crossing": check_fan_crossing,
    "weak-fan-planar": check_weak_fan_planar,
    "strong-fan-planar": check_strong_fan_planar,
}


def check_concept(drawing: Drawing, concept: "str | ConceptId",
                  k: int | None = None, *,
                  xs: CrossingSet | None = None) -> Verdict:
    cid = as_concept(concept, k)
    if cid.kind in _PARAMETRIC:
        return _PARAMETRIC[cid.kind](drawing, cid.k, xs=xs)
    return _PLAIN[cid.kind](drawing, xs=xs)
