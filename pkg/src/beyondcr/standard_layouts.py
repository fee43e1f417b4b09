"""Standard drawings of framework graphs.

Each framework graph has two standard drawings:

  * ``witness``  — realizes the intended large crossing count while still
    satisfying the concept's predicate;
  * ``upper``    — realizes the small crossing count of the designated
    connection pair while violating the predicate.

The global scheme is shared: the six frame nodes go to six poles far apart,
one designated connection is drawn along the vertical axis and the other
along the horizontal axis, and all crossings between different connections
happen in a small box around the origin.  Every other connection is drawn
planar inside a thin corridor around the straight segment between its
poles; those seven segments are pairwise non-crossing by construction.

All coordinates are exact rationals.  Only the complete-graph gadget used
by the fan-family concepts needs bends; every other standard drawing is
straight-line.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Literal

from .drawing import Drawing
from .geometry import Point, pt
from .graph_core import (ALL_CONNECTIONS, Bundle, BundlePlus, ConceptId,
                         ConGraph, CONCEPTS, FAN_KINDS, FrameworkGraph, K7,
                         ApexBlue, SkewBlue, connection_poles,
                         as_concept, construction_for, edge, make_graph,
                         structural_k)

LayoutVariant = Literal["witness", "upper"]

R = 300  # half-side of the central interaction box


def _add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def _mul(a: Point, s) -> Point:
    s = Fraction(s)
    return (a[0] * s, a[1] * s)


def _rot90(a: Point) -> Point:
    return (-a[1], a[0])


def _frac(a, b=1) -> Fraction:
    return Fraction(a, b)


# ---------------------------------------------------------------------------
# Crossing-count formulas for the standard drawings
# ---------------------------------------------------------------------------

def crossing_count_formula(concept: "str | ConceptId", ell: int,
                           k: int | None = None,
                           variant: LayoutVariant = "witness") -> int:
    """Exact number of crossings of the standard drawing."""
    cid = as_concept(concept, k)
    kk = structural_k(cid)
    kind = cid.kind
    if variant == "witness":
        if kind in ("k-planar", "k-vertex-planar", "k-fan-crossing-free",
                    "nnic"):
            return (ell * kk) ** 2
        if kind in ("ic", "nic"):
            return ell * ell
        if kind in FAN_KINDS:
            return ell * ell + 54
        if kind == "k-edge-crossing":
            return (kk // 2) ** 2
        if kind == "k-gap-planar":
            return 5 * ell * kk * kk
        if kind == "k-apex":
            return (ell * kk) ** 2 + kk
        if kind == "skewness":
            return ell * kk * kk + kk
    elif variant == "upper":
        if kind in ("k-planar", "k-vertex-planar", "k-apex", "skewness"):
            return kk + 1
        if kind in ("ic", "nic"):
            return 2
        if kind in ("nnic", "k-fan-crossing-free"):
            return 2 * kk
        if kind in FAN_KINDS:
            return 60
        if kind == "k-edge-crossing":
            return kk
        if kind == "k-gap-planar":
            return 25 * kk * kk
    else:
        raise ValueError(f"unknown drawing variant {variant!r}")
    raise ValueError(f"unknown concept kind {kind!r}")


# ---------------------------------------------------------------------------
# The complete-graph gadget on 7 vertices
# ---------------------------------------------------------------------------
#
# Local coordinates: poles s=(0,-40), t=(0,40), convex pentagon q1..q5.
# Drawn with 9 crossings: the 5 pentagon-diagonal crossings plus s-q2 x t-q1,
# s-q3 x t-q1, s-q3 x t-q2, s-q4 x t-q5.  The horizontal slice y=0 meets
# exactly the six edges at s, one point per pole path, and nothing else.

_K7_LOCAL = {
    "s": (0, -40), "t": (0, 40),
    "q1": (5, 6), "q2": (6, 14), "q3": (0, 17), "q4": (-6, 14), "q5": (-5, 6),
}

_K7_BENDS = {
    ("s", "q2"): [(9, 9)],
    ("s", "q3"): [(16, 5), (8, 24)],
    ("s", "q4"): [(-9, 9)],
    ("s", "t"): [(-30, 2)],
    ("t", "q1"): [(10, 8)],
    ("t", "q5"): [(-10, 8)],
}


def _place_k7(cg: ConGraph, s_name: str, t_name: str,
              mapfn: Callable[[Fraction, Fraction], Point],
              positions: dict, curves: dict) -> None:
    names = {"s": s_name, "t": t_name}
    for idx, q in enumerate(cg.internals):
        names[f"q{idx + 1}"] = q
    for local, xy in _K7_LOCAL.items():
        positions[names[local]] = mapfn(Fraction(xy[0]), Fraction(xy[1]))
    for (la, lb), bends in _K7_BENDS.items():
        u, v = names[la], names[lb]
        e = edge(u, v)
        path = [mapfn(Fraction(x), Fraction(y)) for x, y in bends]
        if (u, v) != e:  # canonical orientation runs v -> u here
            path.reverse()
        curves[e] = tuple(path)


# ---------------------------------------------------------------------------
# Corridors for undesignated connections
# ---------------------------------------------------------------------------

def _corridor_bundle(cg: ConGraph, A: Point, B: Point,
                     positions: dict) -> None:
    """Planar nested drawing of a bundle between poles at A and B.

    Path p is offset to one side of segment A-B proportionally to p+1, so
    middle segments are parallel and the end segments fan out of the poles.
    A direct pole edge, if any, stays on the segment itself (offset 0).
    """
    d = _add(B, _mul(A, -1))
    pv = _rot90(d)
    n_paths = len(cg.paths)
    for p_idx, path in enumerate(cg.paths):
        j = len(path) - 1
        if j < 2:
            continue  # single edge: straight, nothing to place
        mu = _frac(p_idx + 1, 300 * n_paths)
        for q in range(1, j):
            alpha = _frac(q, j)
            positions[path[q]] = _add(A, _add(_mul(d, alpha), _mul(pv, mu)))


def _corridor_k7(cg: ConGraph, A: Point, B: Point,
                 positions: dict, curves: dict) -> None:
    d = _add(B, _mul(A, -1))
    pv = _rot90(d)
    rho = _frac(1, 6000)

    def mapfn(x: Fraction, y: Fraction) -> Point:
        along = _mul(d, (y + 40) / 80)
        perp = _mul(pv, x * rho)
        return _add(A, _add(along, perp))

    _place_k7(cg, cg.s, cg.t, mapfn, positions, curves)


# ---------------------------------------------------------------------------
# Designated-pair emitters: witness drawings
# ---------------------------------------------------------------------------

def _grid_plan(kind: str, ell: int, kk: int) -> list[int]:
    if kind == "k-planar":
        return [kk] * ell
    if kind == "k-vertex-planar" or kind == "ic":
        plan = [0]
        for _ in range(ell):
            plan += [kk, 0]
        return plan
    if kind == "nic":
        return [0] + [1] * ell + [0]
    if kind in ("nnic", "k-fan-crossing-free"):
        return [0, ell * kk, 0]
    raise ValueError(f"no grid plan for {kind}")


def _cluster(center: Fraction, m: int, idx: int, sigma: Fraction) -> Fraction:
    return center + Fraction(2 * idx - (m - 1)) * sigma / 2


def _grid_witness(vcg: ConGraph, hcg: ConGraph, plan: list[int],
                  positions: dict) -> None:
    """Orthogonal grid: vertical strands at distinct columns, horizontal
    strands at distinct rows.  plan[q] is the number of opposing strands
    crossed by edge q of every path; the first/last entries are carried by
    the pole-side edges."""
    j = len(plan)
    width = len(vcg.paths)
    assert sum(plan) == width, "plan must distribute all opposing strands"
    m_max = max(plan)
    sigma = _frac(R, 2 * j * m_max)

    rows: list[Fraction] = []       # descending, grouped by V edge index
    cols: list[Fraction] = []       # ascending, grouped by H edge index
    for q, m in enumerate(plan):
        row_c = _frac(R) - _frac(R * (2 * q + 1), j)
        col_c = -_frac(R) + _frac(R * (2 * q + 1), j)
        for u in range(m):
            rows.append(row_c - _cluster(Fraction(0), m, u, sigma))
            cols.append(col_c + _cluster(Fraction(0), m, u, sigma))

    bands = [_frac(R) - _frac(2 * R * q, j) for q in range(j + 1)]
    for p, path in enumerate(vcg.paths):
        x = cols[p]
        for q in range(1, j):
            positions[path[q]] = (x, bands[q])
    for r, path in enumerate(hcg.paths):
        y = rows[r]
        for q in range(1, j):
            positions[path[q]] = (-bands[q], y)


def _pole_fan(vcg: ConGraph, hcg: ConGraph, positions: dict) -> None:
    """Both bundles are (i,2); the long edges toward the far poles cross
    pairwise.  The crossings of every long edge share the opposite pole."""
    iv, ih = len(vcg.paths), len(hcg.paths)
    for p, path in enumerate(vcg.paths):
        positions[path[1]] = (-200 + _frac(100 * (2 * p + 1), 2 * iv),
                              _frac(-150))
    for r, path in enumerate(hcg.paths):
        positions[path[1]] = (_frac(-250),
                              100 + _frac(100 * (2 * r + 1), 2 * ih))


def _gap_witness(vcg: ConGraph, hcg: ConGraph, positions: dict,
                 D: int, kk: int) -> None:
    """Blue (5k,2) strands cross the horizontal (lk,5) strands so that each
    of the five edges of every horizontal path is crossed exactly k times."""
    lam0 = _frac(D, D + 350)
    bounds = [Fraction(c) * lam0 for c in (-180, -60, 60, 180)]
    centers = [Fraction(c) for c in (-240, -120, 0, 120, 240)]
    sigma = _frac(40, kk)
    for p, path in enumerate(vcg.paths):
        group, idx = divmod(p, kk)
        x = _cluster(centers[group], kk, idx, sigma)
        positions[path[1]] = (x, Fraction(-350))
    ih = len(hcg.paths)
    for r, path in enumerate(hcg.paths):
        y = -10 + _frac(20 * (2 * r + 1), 2 * ih)
        for q in range(1, 5):
            positions[path[q]] = (bounds[q - 1], y)


def _apex_stripe_x(i: int, kk: int) -> Fraction:
    return _frac(600 * (i + 1), kk + 1) - 300


_K5_BLOB = {"b": (4, 0), "c": (2, 4), "d": (Fraction(9, 5), 1),
            "e": (Fraction(11, 5), 2)}


def _apex_witness(vcg: ConGraph, hcg: ConGraph, positions: dict,
                  D: int, ell: int, kk: int) -> None:
    gamma = _frac(600, (kk + 1) * 4 * (ell + 2))
    by_anchor: dict[str, list] = {}
    for idx, path in enumerate(vcg.paths):
        by_anchor.setdefault(path[2], []).append(path)
    anchors = sorted(by_anchor)  # a0, a1, ... in name order
    for i, a in enumerate(anchors):
        lam = _apex_stripe_x(i, kk)
        positions[a] = (lam, Fraction(0))
        for jj, path in enumerate(by_anchor[a]):
            x = lam + (jj + 1) * gamma
            positions[path[1]] = (x, Fraction(150))   # upper internal
            positions[path[3]] = (x, Fraction(-150))  # lower internal
        blob = [v for v in vcg.internals if v.startswith(a + "/q")]
        for name, (bx, by) in zip(blob, _K5_BLOB.values()):
            positions[name] = (lam - 5 * Fraction(bx), -5 * Fraction(by))
    ih = len(hcg.paths)
    for r, path in enumerate(hcg.paths):
        h = 30 + _frac(90 * (2 * r + 1), 2 * ih)
        positions[path[1]] = (Fraction(420), h)


def _skew_witness(vcg: ConGraph, hcg: ConGraph, positions: dict,
                  D: int, kk: int) -> None:
    w_local = {"w1": (16, 9), "w2": (16, -7), "w3": (-9, 1)}
    anchors = sorted({p[2] for p in vcg.paths})
    rho = _frac(2, D)
    for i, a in enumerate(anchors):
        lam = _apex_stripe_x(i, kk)
        positions[a] = (lam, Fraction(0))
        d = (-lam, Fraction(-D))  # direction a -> t
        for suffix, (ux, uy) in w_local.items():
            name = f"{a}/{suffix}"
            off = _add(_mul(d, Fraction(ux) * rho),
                       _mul(_rot90(d), Fraction(uy) * rho))
            positions[name] = _add((lam, Fraction(0)), off)
    ih = len(hcg.paths)
    for r, path in enumerate(hcg.paths):
        h = 80 + _frac(220 * (2 * r + 1), 2 * ih)
        positions[path[1]] = (Fraction(420), -h)


# ---------------------------------------------------------------------------
# Designated-pair emitters: upper drawings
# ---------------------------------------------------------------------------

def _ry_upper(vcg: ConGraph, positions: dict) -> None:
    """Vertical bundle/triangle whose long edges all cross the horizontal
    single edge; a direct pole edge crosses it at the origin."""
    if isinstance(vcg.spec, BundlePlus):
        positions[vcg.paths[0][1]] = (Fraction(100), Fraction(150))
        return
    i = len(vcg.paths)
    for p, path in enumerate(vcg.paths):
        positions[path[1]] = (-150 + _frac(300 * (2 * p + 1), 2 * i),
                              Fraction(150))


def _fan_upper(vcg: ConGraph, positions: dict, curves: dict, D: int) -> None:
    """The complete-graph gadget spanning the vertical axis; the horizontal
    single edge runs along y=0 and crosses exactly the six pole paths."""

    def mapfn(x: Fraction, y: Fraction) -> Point:
        return (8 * x, y * _frac(D, 40))

    # the gadget's bottom pole is the w-node (drawn at (0,-D))
    _place_k7(vcg, vcg.t, vcg.s, mapfn, positions, curves)


def _stripe_upper(vcg: ConGraph, positions: dict, D: int, ell: int,
                  kk: int, kind: str) -> None:
    """Blue con-graph between the upper poles, one parallel stripe per unit,
    with exactly one internal crossing per unit (K5 blob or w-triangle)."""
    O = (Fraction(0), Fraction(D))          # corridor start: pole at P1
    d = (Fraction(D), Fraction(-D))
    pv = (Fraction(D), Fraction(D))

    def pos(alpha, mu) -> Point:
        return _add(O, _add(_mul(d, alpha), _mul(pv, mu)))

    delta_cap = _frac(1, 40 * (kk + 1))
    by_anchor: dict[str, list] = {}
    for path in vcg.paths:
        by_anchor.setdefault(path[2], []).append(path)
    anchors = sorted(by_anchor)
    for i, a in enumerate(anchors):
        mu_i = (i + 1) * delta_cap
        positions[a] = pos(_frac(1, 2), mu_i)
        if kind == "k-apex":
            delta = delta_cap / (4 * (ell + 2))
            for jj, path in enumerate(by_anchor[a]):
                positions[path[1]] = pos(_frac(7, 16), mu_i + (jj + 1) * delta)
                positions[path[3]] = pos(_frac(9, 16), mu_i + (jj + 1) * delta)
            blob = [v for v in vcg.internals if v.startswith(a + "/q")]
            for name, (bx, by) in zip(blob, _K5_BLOB.values()):
                positions[name] = pos(_frac(1, 2) + Fraction(bx) / 1000,
                                      mu_i - Fraction(by) * delta_cap / 20)
        else:  # skewness: w-triangle with one crossing a-w1 x w2-w3
            delta = delta_cap / 100
            positions[f"{a}/w1"] = pos(_frac(28, 64), mu_i + delta)
            positions[f"{a}/w2"] = pos(_frac(28, 64), mu_i + 2 * delta)
            positions[f"{a}/w3"] = pos(_frac(29, 64), mu_i + delta / 2)


# ---------------------------------------------------------------------------
# Assembly
# ---------------------------------------------------------------------------

def _pole_distance(fg: FrameworkGraph) -> int:
    return 5000 * (fg.ell + fg.k + 2)


def draw_framework(fg: FrameworkGraph, variant: LayoutVariant) -> Drawing:
    """Standard drawing of a framework graph (witness or upper)."""
    if variant not in ("witness", "upper"):
        raise ValueError(f"unknown drawing variant {variant!r}")
    D = _pole_distance(fg)
    vcid, hcid = fg.frame.designated[variant]
    vv, vw = connection_poles(vcid)
    hv, hw = connection_poles(hcid)
    positions: dict[str, Point] = {
        vv: (Fraction(0), Fraction(D)),
        vw: (Fraction(0), Fraction(-D)),
        hv: (Fraction(-D), Fraction(0)),
        hw: (Fraction(D), Fraction(0)),
        "v3": (Fraction(4 * D), Fraction(-2 * D)),
        "w3": (Fraction(-2 * D), Fraction(4 * D)),
    }
    curves: dict = {}

    kind = fg.concept.kind
    kk = fg.k
    # In the apex/skew upper drawings the blue con-graph is not designated
    # but still needs its special stripe layout (plain corridors cannot
    # place its K5 blobs / w-triangles).
    stripe_cid = "v1-w1" if (variant == "upper"
                             and kind in ("k-apex", "skewness")) else None

    for cid in ALL_CONNECTIONS:
        if cid in (vcid, hcid) or cid == stripe_cid:
            continue
        cg = fg.congraphs[cid]
        A, B = positions[cg.s], positions[cg.t]
        if isinstance(cg.spec, K7):
            _corridor_k7(cg, A, B, positions, curves)
        else:
            _corridor_bundle(cg, A, B, positions)

    vcg, hcg = fg.congraphs[vcid], fg.congraphs[hcid]
    if variant == "witness":
        if kind in ("k-planar", "k-vertex-planar", "ic", "nic", "nnic",
                    "k-fan-crossing-free"):
            _grid_witness(vcg, hcg, _grid_plan(kind, fg.ell, kk), positions)
        elif kind in FAN_KINDS or kind == "k-edge-crossing":
            _pole_fan(vcg, hcg, positions)
        elif kind == "k-gap-planar":
            _gap_witness(vcg, hcg, positions, D, kk)
        elif kind == "k-apex":
            _apex_witness(vcg, hcg, positions, D, fg.ell, kk)
        elif kind == "skewness":
            _skew_witness(vcg, hcg, positions, D, kk)
        else:
            raise ValueError(f"no witness emitter for {kind}")
    else:
        if kind in FAN_KINDS:
            _fan_upper(vcg, positions, curves, D)
        elif kind == "k-gap-planar":
            _pole_fan(vcg, hcg, positions)
        elif kind in ("k-apex", "skewness"):
            _stripe_upper(fg.congraphs[stripe_cid], positions, D,
                          fg.ell, kk, kind)
        else:
            _ry_upper(vcg, positions)

    meta = {"concept": kind, "ell": fg.ell, "k": fg.concept.k,
            "variant": variant}
    return Drawing(fg.graph, positions, curves, meta=meta)


def standard_drawing(concept: "str | ConceptId", ell: int,
                     k: int | None = None,
                     variant: LayoutVariant = "witness") -> Drawing:
    fg = construction_for(concept, ell, k)
    return draw_framework(fg, variant)


def frame_edge_colors(fg: FrameworkGraph) -> dict:
    """Edge -> frame color of its connection, for rendering."""
    out = {}
    for cid, cg in fg.congraphs.items():
        color = fg.frame.color(cid)
        for e in cg.edges:
            out[e] = color
    return out


# ---------------------------------------------------------------------------
# Fixed drawings: the wall-and-blob fixture and the one-crossing K5
# ---------------------------------------------------------------------------

_FIX_LARGE = {
    "A": (0, 12), "m": (9, 9), "z": (12, 0), "y": (9, -9), "n": (0, -12),
    "B": (-9, -9), "t": (-12, 0), "tp": (-9, 9),
    "v": (-4, 0), "c": (4, 4), "d": (0, -8),
}

_FIX_WALLS = [
    ("A", "m"), ("m", "z"), ("z", "y"), ("y", "n"), ("n", "B"), ("B", "t"),
    ("t", "tp"), ("tp", "A"),
    ("A", "v"), ("v", "B"), ("B", "d"), ("d", "y"), ("z", "c"), ("c", "A"),
    ("c", "m"), ("d", "n"), ("v", "t"), ("v", "tp"),
]

# Loner edges: (u, v, bends listed from u to v).
_FIX_LONERS = [
    ("A", "B", [(-20, 12), (-20, -12)]),
    ("y", "t", [(2, -17), (-17, -8)]),
    ("z", "tp", [(14, 8), (2, 17), (-17, 8)]),
    ("v", "c", []),
    ("v", "d", []),
    ("A", "y", []),
    ("B", "z", []),
]

# Blob side per wall: an anchor vertex of the face the blob sits in, or
# "out" for the octagon walls whose blob goes to the unbounded face.
_FIX_BLOB_SIDE = {
    ("A", "m"): "out", ("m", "z"): "out", ("z", "y"): "out",
    ("y", "n"): "out", ("n", "B"): "out", ("B", "t"): "out",
    ("t", "tp"): "out", ("tp", "A"): "out",
    ("A", "v"): "tp", ("v", "B"): "t", ("B", "d"): "n", ("d", "y"): "n",
    ("z", "c"): "m", ("c", "A"): "m", ("c", "m"): "z", ("d", "n"): "y",
    ("v", "t"): "tp", ("v", "tp"): "A",
}

_BLOB_H = Fraction(7, 20)
_BLOB_LOCAL = {
    "x": (Fraction(1, 2), 3 * _BLOB_H),
    "y": (Fraction(1, 2), _BLOB_H),
    "z": (Fraction(3, 10), _BLOB_H / 4),
}
_BLOB_SCALE = Fraction(1, 20)


def _blob_points(U: Point, V: Point, side: int) -> dict[str, Point]:
    along = _add(V, _mul(U, -1))
    normal = _mul(_rot90(along), _BLOB_SCALE * side)
    out = {}
    for name, (px, py) in _BLOB_LOCAL.items():
        out[name] = _add(U, _add(_mul(along, px), _mul(normal, py)))
    return out


def appendix_fcf_fixture():
    """A fixed 65-vertex drawing: planar wall skeleton, 7 polyline loner
    edges and one 5-clique blob per wall.  Exactly 23 crossings; every
    crossing pair of its fan-crossing-free check is disjoint, while two
    crossing pairs share three endpoints."""
    positions: dict[str, Point] = {
        name: (Fraction(x), Fraction(y)) for name, (x, y) in _FIX_LARGE.items()
    }
    vertices = list(_FIX_LARGE)
    edges = []
    curves: dict = {}

    for u, v in _FIX_WALLS:
        edges.append(edge(u, v))
    for u, v, bends in _FIX_LONERS:
        e = edge(u, v)
        edges.append(e)
        if bends:
            path = [(Fraction(x), Fraction(y)) for x, y in bends]
            if (u, v) != e:
                path.reverse()
            curves[e] = tuple(path)

    for u, v in _FIX_WALLS:
        U, V = positions[u], positions[v]
        anchor = _FIX_BLOB_SIDE[(u, v)]
        if anchor == "out":
            # outward: opposite side from the origin
            o = _orient_sign(U, V, (Fraction(0), Fraction(0)))
            side = -o
        else:
            side = _orient_sign(U, V, positions[anchor])
        pts = _blob_points(U, V, side)
        names = {}
        for local in ("x", "y", "z"):
            nm = f"{u}-{v}/{local}"
            names[local] = nm
            vertices.append(nm)
            positions[nm] = pts[local]
        blob_vs = [u, v, names["x"], names["y"], names["z"]]
        for a in range(len(blob_vs)):
            for b in range(a + 1, len(blob_vs)):
                e = edge(blob_vs[a], blob_vs[b])
                if e not in edges:
                    edges.append(e)

    graph = make_graph(vertices, edges)
    drawing = Drawing(graph, positions, curves,
                      meta={"fixture": "appendix-fcf"})
    return graph, drawing


def _orient_sign(a: Point, b: Point, c: Point) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if v == 0:
        raise ValueError("degenerate blob side")
    return 1 if v > 0 else -1


def k5_fcf_fixture() -> Drawing:
    """A 5-clique drawn with exactly one crossing; the smallest fixture on
    which the fan-crossing-free checker has something to do."""
    positions = {
        "u": (Fraction(0), Fraction(0)),
        "v": (Fraction(1), Fraction(0)),
    }
    for name, p in _BLOB_LOCAL.items():
        positions[name] = p
    vs = ["u", "v", "x", "y", "z"]
    edges = [edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]]
    graph = make_graph(vs, edges)
    return Drawing(graph, positions, {}, meta={"fixture": "k5-fcf"})


def fixture_walls() -> list:
    """The wall edges of the appendix fixture (they must stay uncrossed)."""
    return [edge(u, v) for u, v in _FIX_WALLS]
