"""Polyline drawings and exact crossing computation.

Coordinates are rational (``fractions.Fraction``), so every intersection
test is exact.  A drawing must be in *general position*: no overlapping
segments, no curve through a vertex or bend of another curve, and no two
crossings at the same point.  Violations raise GeneralPositionViolation
instead of silently producing a bogus crossing count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .geometry import Point, bbox_disjoint, pt, segment_meet
from .graph_core import (Edge, FRAME_NODES, Graph, edge, edge_from_key,
                         edge_key, graph_to_json_obj, graph_from_json_obj,
                         make_graph)


class GeneralPositionViolation(Exception):
    """The drawing degenerates in a way that makes crossings ambiguous."""

    def __init__(self, kind: str, detail: str):
        super().__init__(f"{kind}: {detail}")
        self.kind = kind
        self.detail = detail


@dataclass
class Drawing:
    """A polyline drawing of a graph.

    ``positions`` maps each vertex to a point; ``curves`` maps an edge to
    its tuple of interior bend points, ordered from the smaller endpoint to
    the larger one (the canonical edge orientation).  Missing curve entries
    mean a straight-line edge.
    """

    graph: Graph
    positions: dict[str, Point]
    curves: dict[Edge, tuple[Point, ...]] = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def polyline(self, e: Edge) -> tuple[Point, ...]:
        u, v = e
        return (self.positions[u], *self.curves.get(e, ()), self.positions[v])

    def segments(self, e: Edge) -> list[tuple[Point, Point]]:
        poly = self.polyline(e)
        return list(zip(poly, poly[1:]))


def is_straight_line(drawing: Drawing) -> bool:
    return all(len(bends) == 0 for bends in drawing.curves.values())


# ---------------------------------------------------------------------------
# Crossings
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Crossing:
    """One proper crossing point between two edge curves.

    ``a <= b``; for a self-crossing a == b.  ``pos_a``/``pos_b`` locate the
    point along each curve as (segment index, parameter within segment) and
    order crossings along an edge.
    """

    a: Edge
    b: Edge
    pos_a: tuple[int, Fraction]
    pos_b: tuple[int, Fraction]
    point: Point

    def edges(self) -> tuple[Edge, Edge]:
        return (self.a, self.b)

    def involves(self, e: Edge) -> bool:
        return self.a == e or self.b == e

    def other(self, e: Edge) -> Edge:
        if e == self.a:
            return self.b
        if e == self.b:
            return self.a
        raise ValueError(f"{e} not part of this crossing")

    def positions_on(self, e: Edge) -> list[tuple[int, Fraction]]:
        out = []
        if self.a == e:
            out.append(self.pos_a)
        if self.b == e:
            out.append(self.pos_b)
        if not out:
            raise ValueError(f"{e} not part of this crossing")
        return out


@dataclass(frozen=True)
class CrossingSet:
    crossings: tuple[Crossing, ...]

    def __len__(self) -> int:
        return len(self.crossings)

    def __iter__(self) -> Iterator[Crossing]:
        return iter(self.crossings)

    def of_edge(self, e: Edge) -> list[Crossing]:
        return [x for x in self.crossings if x.involves(e)]

    def count_on_edge(self, e: Edge) -> int:
        """Number of times the curve of e is crossed (self-crossings twice)."""
        total = 0
        for x in self.crossings:
            if x.a == e:
                total += 1
            if x.b == e:
                total += 1
        return total

    def ordered_along(self, e: Edge) -> list[tuple[tuple[int, Fraction], Crossing]]:
        out = []
        for x in self.crossings:
            for p in x.positions_on(e) if x.involves(e) else ():
                out.append((p, x))
        out.sort(key=lambda px: px[0])
        return out

    def crossed_edges(self) -> set[Edge]:
        out: set[Edge] = set()
        for x in self.crossings:
            out.add(x.a)
            out.add(x.b)
        return out


def _curve_points(drawing: Drawing) -> dict[Point, str]:
    """All vertex and bend coordinates, with a short description each."""
    seen: dict[Point, str] = {}
    for v in drawing.graph.vertices:
        p = drawing.positions[v]
        if p in seen:
            raise GeneralPositionViolation(
                "duplicate-point", f"vertex {v} coincides with {seen[p]}")
        seen[p] = f"vertex {v}"
    for e in sorted(drawing.curves):
        for i, p in enumerate(drawing.curves[e]):
            if p in seen:
                raise GeneralPositionViolation(
                    "duplicate-point",
                    f"bend {i} of {e} coincides with {seen[p]}")
            seen[p] = f"bend {i} of {e}"
    return seen


def compute_crossings(drawing: Drawing) -> CrossingSet:
    """All proper crossings of the drawing, exactly.

    Raises GeneralPositionViolation for overlaps, touching curves (except
    shared endpoints of adjacent edges), curves through vertices/bends, and
    coincident crossing points.
    """
    g = drawing.graph
    for v in g.vertices:
        if v not in drawing.positions:
            raise ValueError(f"vertex {v} has no position")
    point_desc = _curve_points(drawing)

    edges = sorted(set(g.edges) | set(drawing.curves))
    if set(drawing.curves) - set(g.edges):
        bad = sorted(set(drawing.curves) - set(g.edges))[0]
        raise ValueError(f"curve for non-edge {bad}")
    segs: dict[Edge, list[tuple[Point, Point]]] = {}
    for e in sorted(g.edges):
        ss = drawing.segments(e)
        for i, (a, b) in enumerate(ss):
            if a == b:
                raise GeneralPositionViolation(
                    "degenerate-segment", f"segment {i} of {e} has zero length")
        segs[e] = ss

    found: list[Crossing] = []
    seen_points: dict[Point, tuple[Edge, Edge]] = {}
    edge_list = sorted(segs)
    for ia, ea in enumerate(edge_list):
        sa = segs[ea]
        for eb in edge_list[ia:]:
            sb = segs[eb]
            same = ea == eb
            shared = set(ea) & set(eb) if not same else set()
            for i, (a1, a2) in enumerate(sa):
                jstart = i + 1 if same else 0
                for j in range(jstart, len(sb)):
                    b1, b2 = sb[j]
                    if same and j == i + 1:
                        continue  # consecutive segments share a bend
                    if bbox_disjoint(a1, a2, b1, b2):
                        continue
                    meet = segment_meet(a1, a2, b1, b2)
                    if meet.kind == "none":
                        continue
                    if meet.kind == "overlap":
                        raise GeneralPositionViolation(
                            "overlap", f"{ea} and {eb} share a subsegment")
                    if meet.kind == "touch":
                        p = meet.point
                        ok = (not same and shared
                              and p == drawing.positions[next(iter(shared))]
                              and p in (a1, a2) and p in (b1, b2))
                        if ok:
                            continue
                        raise GeneralPositionViolation(
                            "touch",
                            f"{ea} touches {eb} at ({p[0]},{p[1]})")
                    # proper crossing
                    p = meet.point
                    if p in point_desc:
                        raise GeneralPositionViolation(
                            "crossing-at-vertex",
                            f"{ea} x {eb} crosses at {point_desc[p]}")
                    if p in seen_points:
                        raise GeneralPositionViolation(
                            "concurrent-crossings",
                            f"{ea} x {eb} and {seen_points[p]} cross at the "
                            f"same point ({p[0]},{p[1]})")
                    seen_points[p] = (ea, eb)
                    pa = (i, meet.t1)
                    pb = (j, meet.t2)
                    if same and pb < pa:
                        pa, pb = pb, pa
                    found.append(Crossing(ea, eb, pa, pb, p))
    found.sort()
    return CrossingSet(tuple(found))


def is_simple_drawing(drawing: Drawing,
                      crossings: CrossingSet | None = None) -> bool:
    """Simple = no self-crossings, no crossing adjacent edges, and no edge
    pair crossing more than once."""
    xs = crossings if crossings is not None else compute_crossings(drawing)
    pair_counts: dict[tuple[Edge, Edge], int] = {}
    for x in xs:
        if x.a == x.b:
            return False
        if set(x.a) & set(x.b):
            return False
        pair_counts[(x.a, x.b)] = pair_counts.get((x.a, x.b), 0) + 1
        if pair_counts[(x.a, x.b)] > 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Verdicts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    """Outcome of a checker: ok plus a machine-readable witness on failure."""

    ok: bool
    concept: str
    reason: str = ""
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.ok

    def to_json_obj(self) -> dict:
        obj: dict = {"ok": self.ok, "concept": self.concept}
        if self.reason:
            obj["reason"] = self.reason
        if self.witness is not None:
            obj["witness"] = self.witness
        return obj


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _frac_str(x: Fraction) -> str:
    return str(x)


def _point_json(p: Point) -> list[str]:
    return [_frac_str(p[0]), _frac_str(p[1])]


def _point_from_json(obj) -> Point:
    return pt(Fraction(obj[0]), Fraction(obj[1]))


def drawing_to_json_obj(drawing: Drawing, graph_meta: dict | None = None) -> dict:
    gobj = graph_to_json_obj(drawing.graph)
    if graph_meta:
        gobj["meta"].update(graph_meta)
    return {
        "graph": gobj,
        "positions": {v: _point_json(drawing.positions[v])
                      for v in drawing.graph.vertices},
        "curves": {edge_key(e): [_point_json(p) for p in bends]
                   for e, bends in sorted(drawing.curves.items()) if bends},
        "meta": drawing.meta,
    }


def drawing_to_json(drawing: Drawing, graph_meta: dict | None = None) -> str:
    return json.dumps(drawing_to_json_obj(drawing, graph_meta),
                      indent=2, sort_keys=True)


def drawing_from_json_obj(obj: dict) -> Drawing:
    graph = graph_from_json_obj(obj["graph"])
    positions = {v: _point_from_json(p) for v, p in obj["positions"].items()}
    curves = {edge_from_key(k): tuple(_point_from_json(p) for p in bends)
              for k, bends in obj.get("curves", {}).items()}
    return Drawing(graph, positions, curves, meta=dict(obj.get("meta", {})))


def drawing_from_json(text: str) -> Drawing:
    return drawing_from_json_obj(json.loads(text))


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------

_SVG_COLORS = {
    "blue": "#2060c0",
    "red": "#c03030",
    "yellow": "#c0a020",
    "gray": "#808080",
}


def to_svg(drawing: Drawing, edge_colors: Mapping[Edge, str] | None = None,
           width: int = 900) -> str:
    """Deterministic standalone SVG for a drawing.

    ``edge_colors`` maps edges to frame colors (blue/red/yellow/gray); other
    edges are black.
    """
    pts: list[Point] = [drawing.positions[v] for v in drawing.graph.vertices]
    for e in sorted(drawing.curves):
        pts.extend(drawing.curves[e])
    if not pts:
        return '<svg xmlns="http://www.w3.org/2000/svg"/>'
    xs = [float(p[0]) for p in pts]
    ys = [float(p[1]) for p in pts]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    spanx = (maxx - minx) or 1.0
    spany = (maxy - miny) or 1.0
    scale = (width - 40) / max(spanx, spany)
    height = int(spany * scale) + 40

    def sx(x: Fraction) -> str:
        return f"{(float(x) - minx) * scale + 20:.3f}"

    def sy(y: Fraction) -> str:
        # Flip y so larger coordinates are higher on the canvas.
        return f"{(maxy - float(y)) * scale + 20:.3f}"

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    for e in sorted(drawing.graph.edges):
        poly = drawing.polyline(e)
        points = " ".join(f"{sx(p[0])},{sy(p[1])}" for p in poly)
        color = "#000000"
        if edge_colors and e in edge_colors:
            color = _SVG_COLORS.get(edge_colors[e], "#000000")
        lines.append(f'<polyline points="{points}" fill="none" '
                     f'stroke="{color}" stroke-width="1"/>')
    for v in drawing.graph.vertices:
        p = drawing.positions[v]
        r = 4 if v in FRAME_NODES else 1.5
        lines.append(f'<circle cx="{sx(p[0])}" cy="{sy(p[1])}" r="{r}" '
                     f'fill="#202020"/>')
        if v in FRAME_NODES:
            lines.append(f'<text x="{sx(p[0])}" y="{sy(p[1])}" dx="6" dy="-6" '
                         f'font-size="12" font-family="monospace">{v}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
