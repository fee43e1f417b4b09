"""Frames, con-graphs and framework graphs.

A *frame* is an edge-colored K_{3,3} on nodes v1,v2,v3 / w1,w2,w3.  Each of
its nine connections is replaced by a *con-graph* (a two-pole graph) to form
a *framework graph*; each con-graph carries a family of internally disjoint
pole-to-pole paths used by the Kuratowski-subdivision accounting.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

Edge = tuple[str, str]

V_NODES = ("v1", "v2", "v3")
W_NODES = ("w1", "w2", "w3")
FRAME_NODES = V_NODES + W_NODES


def edge(u: str, v: str) -> Edge:
    if u == v:
        raise ValueError(f"loop edge at {u!r}")
    return (u, v) if u < v else (v, u)


def edge_key(e: Edge) -> str:
    return f"{e[0]}|{e[1]}"


def edge_from_key(key: str) -> Edge:
    u, _, v = key.partition("|")
    return edge(u, v)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph with string vertex ids."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertices")
        es = set(self.edges)
        if len(es) != len(self.edges):
            raise ValueError("parallel edges")
        for u, v in self.edges:
            if u not in vs or v not in vs:
                raise ValueError(f"edge ({u},{v}) uses unknown vertex")
            if not u < v:
                raise ValueError(f"edge ({u},{v}) not normalized")

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacent(self, e: Edge, f: Edge) -> bool:
        return bool(set(e) & set(f))


def make_graph(vertices: Iterable[str], edges: Iterable[Edge]) -> Graph:
    return Graph(tuple(sorted(set(vertices))), tuple(sorted(set(edges))))


# ---------------------------------------------------------------------------
# Frames
# ---------------------------------------------------------------------------

def connection_id(v: str, w: str) -> str:
    """Canonical id of the frame connection between a v-node and a w-node."""
    if v in W_NODES:
        v, w = w, v
    if v not in V_NODES or w not in W_NODES:
        raise ValueError(f"not a frame connection: {v},{w}")
    return f"{v}-{w}"


ALL_CONNECTIONS = tuple(
    connection_id(v, w) for v in V_NODES for w in W_NODES
)


def connection_poles(cid: str) -> tuple[str, str]:
    v, _, w = cid.partition("-")
    return v, w


@dataclass(frozen=True)
class Frame:
    """Edge-colored K_{3,3}: coloring maps each connection id to a color.

    ``designated`` maps drawing-variant name ("witness"/"upper") to the
    ordered pair of connection ids whose con-graphs may cross each other in
    the corresponding standard drawing.
    """

    coloring_name: str
    coloring: Mapping[str, str]
    designated: Mapping[str, tuple[str, str]]

    def color(self, cid: str) -> str:
        return self.coloring[cid]

    def connections_by_color(self, color: str) -> tuple[str, ...]:
        return tuple(c for c in ALL_CONNECTIONS if self.coloring[c] == color)


def build_frame(coloring: str = "standard") -> Frame:
    """Build the frame with the given coloring ("standard" or "alternate").

    standard : a 4-cycle v1-w1 (blue), w1-v2 (yellow), v2-w2 (blue),
               w2-v1 (red); the remaining five connections gray.
    alternate: v1-w1 blue, v1-w2 and v2-w1 red (two independent connections,
               each adjacent to the blue one); the remaining six gray.
    """
    if coloring == "standard":
        colors = {
            "v1-w1": "blue",
            "v2-w1": "yellow",
            "v2-w2": "blue",
            "v1-w2": "red",
        }
        default = "gray"
    elif coloring == "alternate":
        colors = {
            "v1-w1": "blue",
            "v1-w2": "red",
            "v2-w1": "red",
        }
        default = "gray"
    else:
        raise ValueError(f"unknown frame coloring {coloring!r}")
    full = {cid: colors.get(cid, default) for cid in ALL_CONNECTIONS}
    designated = {
        # Both colorings use the same non-adjacent connection pairs; only the
        # colors of those connections differ.
        "upper": ("v1-w2", "v2-w1"),
        "witness": ("v1-w1", "v2-w2"),
    }
    return Frame(coloring, full, designated)


# ---------------------------------------------------------------------------
# Con-graph specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConGraphSpec:
    """Base class; concrete subclasses define the two-pole graph shape."""

    def describe(self) -> str:
        raise NotImplementedError

    @property
    def width(self) -> int:
        """Size of the pole-path family, without instantiating the graph."""
        raise NotImplementedError

    @property
    def internal_count(self) -> int:
        """Number of internal vertices the instantiated con-graph has."""
        raise NotImplementedError

    @property
    def edge_count(self) -> int:
        """Number of edges the instantiated con-graph has."""
        raise NotImplementedError


@dataclass(frozen=True)
class Bundle(ConGraphSpec):
    """i internally disjoint pole paths, each of length j (j edges)."""

    i: int
    j: int

    def describe(self) -> str:
        return f"bundle({self.i},{self.j})"

    @property
    def width(self) -> int:
        return self.i

    @property
    def internal_count(self) -> int:
        return self.i * (self.j - 1)

    @property
    def edge_count(self) -> int:
        return self.i * self.j


@dataclass(frozen=True)
class BundlePlus(ConGraphSpec):
    """Bundle(i, j) plus the direct pole edge {s, t}."""

    i: int
    j: int

    def describe(self) -> str:
        return f"bundle+({self.i},{self.j})"

    @property
    def width(self) -> int:
        return self.i

    @property
    def internal_count(self) -> int:
        return self.i * (self.j - 1)

    @property
    def edge_count(self) -> int:
        return self.i * self.j + 1


def SingleEdge() -> Bundle:
    """A single pole edge == Bundle(1, 1)."""
    return Bundle(1, 1)


def Triangle() -> BundlePlus:
    """Pole edge plus one length-2 path == BundlePlus(1, 2)."""
    return BundlePlus(1, 2)


@dataclass(frozen=True)
class K7(ConGraphSpec):
    """Complete graph on the two poles and five internal vertices."""

    def describe(self) -> str:
        return "K7"

    @property
    def width(self) -> int:
        # the direct pole edge plus the five length-2 pole paths
        return 6

    @property
    def internal_count(self) -> int:
        return 5

    @property
    def edge_count(self) -> int:
        return 21


@dataclass(frozen=True)
class ApexBlue(ConGraphSpec):
    """(k,2)-bundle s-a_i-t where each edge {s,a_i} is replaced by an
    (ell,2)-bundle and each a_i carries a K5 built on four new vertices."""

    ell: int
    k: int

    def describe(self) -> str:
        return f"apex-blue({self.ell},{self.k})"

    @property
    def width(self) -> int:
        return self.ell * self.k

    @property
    def internal_count(self) -> int:
        # k anchors, ell*k left + ell*k right path vertices, 4 blob
        # vertices per anchor
        return 2 * self.ell * self.k + 5 * self.k

    @property
    def edge_count(self) -> int:
        return 4 * self.ell * self.k + 10 * self.k


@dataclass(frozen=True)
class SkewBlue(ConGraphSpec):
    """(k,2)-bundle s-a_i-t where each edge {s,a_i} is replaced by a K5 on
    {s, a_i} and three new vertices minus the edge {s, a_i} itself."""

    ell: int
    k: int

    def describe(self) -> str:
        return f"skew-blue({self.ell},{self.k})"

    @property
    def width(self) -> int:
        return self.k

    @property
    def internal_count(self) -> int:
        # one anchor plus three K5 vertices per pole path
        return 4 * self.k

    @property
    def edge_count(self) -> int:
        # per anchor: the 9 K5 edges (direct pole-anchor edge removed)
        # plus the anchor-t edge
        return 10 * self.k


@dataclass(frozen=True)
class ConGraph:
    """An instantiated con-graph on concrete vertex ids.

    ``paths`` is the family of internally disjoint pole paths used for
    Kuratowski accounting (each a vertex tuple from s to t).  Edges not on
    any family path (direct edges of BundlePlus, K7 pentagon edges, apex K5
    blobs, ...) simply never contribute coverage.
    """

    cid: str
    spec: ConGraphSpec
    s: str
    t: str
    internals: tuple[str, ...]
    edges: tuple[Edge, ...]
    paths: tuple[tuple[str, ...], ...]

    @property
    def width(self) -> int:
        return len(self.paths)

    def paths_through(self, e: Edge) -> tuple[int, ...]:
        """Indices of family paths containing edge e (P_c[e])."""
        out = []
        for idx, p in enumerate(self.paths):
            for a, b in zip(p, p[1:]):
                if edge(a, b) == e:
                    out.append(idx)
                    break
        return tuple(out)


def instantiate_congraph(spec: ConGraphSpec, cid: str, s: str, t: str) -> ConGraph:
    """Create the concrete con-graph for one frame connection."""
    internals: list[str] = []
    edges: list[Edge] = []
    paths: list[tuple[str, ...]] = []

    def name(*parts) -> str:
        return "/".join([cid, *map(str, parts)])

    if isinstance(spec, (Bundle, BundlePlus)):
        i, j = spec.i, spec.j
        if i < 1 or j < 1:
            raise ValueError(f"bundle parameters must be positive: {spec}")
        if j == 1 and i > 1:
            raise ValueError(f"{spec.describe()} would need parallel pole edges")
        for p in range(i):
            prev = s
            pv: list[str] = [s]
            for pos in range(1, j):
                vtx = name(f"p{p}", pos)
                internals.append(vtx)
                edges.append(edge(prev, vtx))
                pv.append(vtx)
                prev = vtx
            edges.append(edge(prev, t))
            pv.append(t)
            paths.append(tuple(pv))
        if isinstance(spec, BundlePlus):
            if j == 1:
                raise ValueError("BundlePlus(i,1) would duplicate the pole edge")
            edges.append(edge(s, t))
    elif isinstance(spec, K7):
        qs = [name(f"q{r}") for r in range(1, 6)]
        internals.extend(qs)
        allv = [s, t, *qs]
        for a in range(len(allv)):
            for b in range(a + 1, len(allv)):
                edges.append(edge(allv[a], allv[b]))
        paths.append((s, t))
        for q in qs:
            paths.append((s, q, t))
    elif isinstance(spec, ApexBlue):
        ell, k = spec.ell, spec.k
        if ell < 1 or k < 1:
            raise ValueError(f"apex-blue parameters must be positive: {spec}")
        for ai in range(k):
            a = name(f"a{ai}")
            internals.append(a)
            for jj in range(ell):
                left = name(f"a{ai}", f"L{jj}")
                right = name(f"a{ai}", f"R{jj}")
                internals.extend([left, right])
                edges.append(edge(s, left))
                edges.append(edge(left, a))
                edges.append(edge(a, right))
                edges.append(edge(right, t))
                paths.append((s, left, a, right, t))
            blob = [name(f"a{ai}", f"q{r}") for r in range(4)]
            internals.extend(blob)
            k5 = [a, *blob]
            for x in range(len(k5)):
                for y in range(x + 1, len(k5)):
                    edges.append(edge(k5[x], k5[y]))
    elif isinstance(spec, SkewBlue):
        k = spec.k
        if k < 1:
            raise ValueError(f"skew-blue parameters must be positive: {spec}")
        for ai in range(k):
            a = name(f"a{ai}")
            ws = [name(f"a{ai}", f"w{r}") for r in (1, 2, 3)]
            internals.extend([a, *ws])
            edges.append(edge(a, t))
            for w in ws:
                edges.append(edge(s, w))
                edges.append(edge(a, w))
            edges.append(edge(ws[0], ws[1]))
            edges.append(edge(ws[0], ws[2]))
            edges.append(edge(ws[1], ws[2]))
            paths.append((s, ws[0], a, t))
    else:
        raise TypeError(f"unknown con-graph spec {spec!r}")

    return ConGraph(cid, spec, s, t, tuple(internals), tuple(sorted(set(edges))),
                    tuple(paths))


# ---------------------------------------------------------------------------
# Concepts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConceptId:
    """Identifier of a beyond-planarity concept, with parameter k if any."""

    kind: str
    k: int | None = None

    # Constructors mirroring the concept names.
    @staticmethod
    def KPlanar(k: int) -> "ConceptId":
        return ConceptId("k-planar", k)

    @staticmethod
    def KVertexPlanar(k: int) -> "ConceptId":
        return ConceptId("k-vertex-planar", k)

    IC_KIND = "ic"

    @staticmethod
    def IC() -> "ConceptId":
        return ConceptId("ic")

    @staticmethod
    def NIC() -> "ConceptId":
        return ConceptId("nic")

    @staticmethod
    def NNIC() -> "ConceptId":
        return ConceptId("nnic")

    @staticmethod
    def KFanCrossingFree(k: int) -> "ConceptId":
        return ConceptId("k-fan-crossing-free", k)

    @staticmethod
    def AdjacencyCrossing() -> "ConceptId":
        return ConceptId("adjacency-crossing")

    @staticmethod
    def FanCrossing() -> "ConceptId":
        return ConceptId("fan-crossing")

    @staticmethod
    def WeakFanPlanar() -> "ConceptId":
        return ConceptId("weak-fan-planar")

    @staticmethod
    def StrongFanPlanar() -> "ConceptId":
        return ConceptId("strong-fan-planar")

    @staticmethod
    def KEdgeCrossing(k: int) -> "ConceptId":
        return ConceptId("k-edge-crossing", k)

    @staticmethod
    def KGapPlanar(k: int) -> "ConceptId":
        return ConceptId("k-gap-planar", k)

    @staticmethod
    def KApex(k: int) -> "ConceptId":
        return ConceptId("k-apex", k)

    @staticmethod
    def Skewness(k: int) -> "ConceptId":
        return ConceptId("skewness", k)

    @property
    def shorthand(self) -> str:
        return CONCEPTS[self.kind].shorthand

    def __str__(self) -> str:
        if CONCEPTS[self.kind].requires_k:
            return f"{self.shorthand}(k={self.k})"
        return self.shorthand


@dataclass(frozen=True)
class ConceptInfo:
    kind: str
    shorthand: str
    coloring: str              # frame coloring used by the construction
    requires_k: bool
    k_min: int = 1
    implied_k: int = 1         # structural k when requires_k is False

    def threshold(self, k: int) -> int:
        return _THRESHOLDS[self.kind](k)


_THRESHOLDS = {
    "k-planar": lambda k: 41,
    "k-vertex-planar": lambda k: 11,
    "ic": lambda k: 2,
    "nic": lambda k: 4,
    "nnic": lambda k: 109,
    "k-fan-crossing-free": lambda k: 109,
    "adjacency-crossing": lambda k: 1,
    "fan-crossing": lambda k: 1,
    "weak-fan-planar": lambda k: 1,
    "strong-fan-planar": lambda k: 1,
    "k-edge-crossing": lambda k: 1,
    "k-gap-planar": lambda k: 5,
    "k-apex": lambda k: 1,
    "skewness": lambda k: k + 1,
}

CONCEPTS: dict[str, ConceptInfo] = {
    c.kind: c
    for c in [
        ConceptInfo("k-planar", "k-pl", "standard", True),
        ConceptInfo("k-vertex-planar", "k-vp", "standard", True),
        ConceptInfo("ic", "IC", "standard", False, implied_k=1),
        ConceptInfo("nic", "NIC", "standard", False, implied_k=1),
        ConceptInfo("nnic", "NNIC", "standard", False, implied_k=2),
        ConceptInfo("k-fan-crossing-free", "k-fcf", "standard", True, k_min=2),
        ConceptInfo("adjacency-crossing", "ac", "standard", False),
        ConceptInfo("fan-crossing", "fc", "standard", False),
        ConceptInfo("weak-fan-planar", "wfp", "standard", False),
        ConceptInfo("strong-fan-planar", "sfp", "standard", False),
        ConceptInfo("k-edge-crossing", "k-ecr", "standard", True, k_min=2),
        ConceptInfo("k-gap-planar", "k-gap-pl", "alternate", True),
        ConceptInfo("k-apex", "k-apex", "alternate", True),
        ConceptInfo("skewness", "skew-k", "alternate", True),
    ]
}

_SHORTHANDS = {info.shorthand.lower(): kind for kind, info in CONCEPTS.items()}
# Friendly aliases.
_SHORTHANDS.update({
    "kpl": "k-planar", "k-planar": "k-planar",
    "kvp": "k-vertex-planar", "k-vertex-planar": "k-vertex-planar",
    "kfcf": "k-fan-crossing-free", "k-fan-crossing-free": "k-fan-crossing-free",
    "kecr": "k-edge-crossing", "k-edge-crossing": "k-edge-crossing",
    "kgap": "k-gap-planar", "k-gap": "k-gap-planar", "gap": "k-gap-planar",
    "k-gap-planar": "k-gap-planar",
    "apex": "k-apex", "k-apex": "k-apex",
    "skew": "skewness", "skewness": "skewness",
    "adjacency-crossing": "adjacency-crossing",
    "fan-crossing": "fan-crossing",
    "weak-fan-planar": "weak-fan-planar",
    "strong-fan-planar": "strong-fan-planar",
})

FAN_KINDS = ("adjacency-crossing", "fan-crossing", "weak-fan-planar",
             "strong-fan-planar")


def parse_concept(text: str, k: int | None = None) -> ConceptId:
    kind = _SHORTHANDS.get(text.strip().lower())
    if kind is None:
        raise ValueError(f"unknown concept {text!r}")
    info = CONCEPTS[kind]
    if info.requires_k:
        if k is None:
            raise ValueError(f"concept {info.shorthand} requires k")
        if k < info.k_min:
            raise ValueError(f"concept {info.shorthand} requires k >= {info.k_min}")
        return ConceptId(kind, k)
    return ConceptId(kind)


def as_concept(concept: "str | ConceptId", k: int | None = None) -> ConceptId:
    if isinstance(concept, ConceptId):
        info = CONCEPTS[concept.kind]
        if info.requires_k and (concept.k is None or concept.k < info.k_min):
            raise ValueError(f"concept {info.shorthand} requires k >= {info.k_min}")
        return concept
    return parse_concept(concept, k)


def structural_k(concept: ConceptId) -> int:
    info = CONCEPTS[concept.kind]
    return concept.k if info.requires_k else info.implied_k


# ---------------------------------------------------------------------------
# Framework graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FrameworkGraph:
    concept: ConceptId
    ell: int
    frame: Frame
    congraphs: Mapping[str, ConGraph]
    graph: Graph
    below_threshold: bool

    @property
    def k(self) -> int:
        return structural_k(self.concept)

    def congraph_of_edge(self, e: Edge) -> str:
        return self._edge_map()[e]

    def _edge_map(self) -> dict[Edge, str]:
        cache = getattr(self, "__edge_map", None)
        if cache is None:
            cache = {}
            for cid, cg in self.congraphs.items():
                for e in cg.edges:
                    cache[e] = cid
            object.__setattr__(self, "__edge_map", cache)
        return cache

    def widths(self) -> dict[str, int]:
        return {cid: cg.width for cid, cg in self.congraphs.items()}


def _recipe(concept: ConceptId, ell: int) -> dict[str, ConGraphSpec]:
    """Map each frame color to its con-graph spec for this concept."""
    kind = concept.kind
    k = structural_k(concept)
    if kind == "k-planar":
        if ell < 2:
            raise ValueError("k-planar construction needs ell >= 2 "
                             "(blue bundles have length ell)")
        return {"red": Bundle(k + 1, 2), "blue": Bundle(ell * k, ell),
                "gray": Bundle(ell * k, 2), "yellow": SingleEdge()}
    if kind == "k-vertex-planar":
        return {"red": Bundle(k + 1, 2), "blue": Bundle(ell * k, 2 * ell + 1),
                "gray": Bundle(ell * k, 2), "yellow": SingleEdge()}
    if kind == "ic":
        return {"red": Triangle(), "blue": Bundle(ell, 2 * ell + 1),
                "gray": Triangle(), "yellow": SingleEdge()}
    if kind == "nic":
        return {"red": Triangle(), "blue": Bundle(ell, ell + 2),
                "gray": Bundle(ell, 2), "yellow": SingleEdge()}
    if kind in ("nnic", "k-fan-crossing-free"):
        return {"red": Bundle(2 * k, 2), "blue": Bundle(ell * k, 3),
                "gray": Bundle(ell * k, 2), "yellow": SingleEdge()}
    if kind in FAN_KINDS:
        return {"red": K7(), "blue": Bundle(ell, 2),
                "gray": K7(), "yellow": SingleEdge()}
    if kind == "k-edge-crossing":
        return {"red": Bundle(k, 2), "blue": Bundle(k // 2, 2),
                "gray": Bundle(ell * k, 2), "yellow": SingleEdge()}
    if kind == "k-gap-planar":
        return {"red": Bundle(5 * k, 2), "blue": Bundle(5 * k, 2),
                "gray": Bundle(ell * k, 5)}
    if kind == "k-apex":
        return {"red": SingleEdge(), "blue": ApexBlue(ell, k),
                "gray": Bundle(ell * k, 2)}
    if kind == "skewness":
        return {"red": SingleEdge(), "blue": SkewBlue(ell, k),
                "gray": Bundle(ell * k, 2)}
    raise ValueError(f"unknown concept kind {kind!r}")


def build_framework_graph(frame: Frame,
                          recipe: Mapping[str, ConGraphSpec],
                          concept: ConceptId,
                          ell: int,
                          below_threshold: bool = False) -> FrameworkGraph:
    """Replace every frame connection by the con-graph its color dictates."""
    congraphs: dict[str, ConGraph] = {}
    vertices: set[str] = set(FRAME_NODES)
    edges: set[Edge] = set()
    for cid in ALL_CONNECTIONS:
        color = frame.color(cid)
        if color not in recipe:
            raise ValueError(f"recipe missing color {color!r} for {cid}")
        s, t = connection_poles(cid)
        cg = instantiate_congraph(recipe[color], cid, s, t)
        congraphs[cid] = cg
        vertices.update(cg.internals)
        for e in cg.edges:
            if e in edges:
                raise ValueError(f"edge {e} produced by two con-graphs")
            edges.add(e)
    graph = make_graph(vertices, edges)
    return FrameworkGraph(concept, ell, frame, congraphs, graph, below_threshold)


def construction_for(concept: "str | ConceptId", ell: int,
                     k: int | None = None) -> FrameworkGraph:
    """Build the extremal framework graph G_ell for a concept.

    Valid for every ell >= 1 (ell >= 2 for k-planar); when ell is below the
    concept's quality threshold the graph is still built and flagged.
    """
    cid = as_concept(concept, k)
    info = CONCEPTS[cid.kind]
    if ell < 1:
        raise ValueError("ell must be >= 1")
    frame = build_frame(info.coloring)
    below = ell < info.threshold(structural_k(cid))
    return build_framework_graph(frame, _recipe(cid, ell), cid, ell, below)


def connection_widths(concept: "str | ConceptId", ell: int,
                      k: int | None = None) -> dict[str, int]:
    """Per-connection pole-path family sizes, without building the graph.

    Matches ``construction_for(...).widths()`` but stays cheap at large ell,
    which the counting bounds and ratio tables need.
    """
    cid = as_concept(concept, k)
    frame = build_frame(CONCEPTS[cid.kind].coloring)
    recipe = _recipe(cid, ell)
    return {c: recipe[frame.color(c)].width for c in ALL_CONNECTIONS}


def framework_size(concept: "str | ConceptId", ell: int,
                   k: int | None = None) -> tuple[int, int]:
    """(n, m) of the framework graph, without building it."""
    cid = as_concept(concept, k)
    frame = build_frame(CONCEPTS[cid.kind].coloring)
    recipe = _recipe(cid, ell)
    specs = [recipe[frame.color(c)] for c in ALL_CONNECTIONS]
    n = len(FRAME_NODES) + sum(s.internal_count for s in specs)
    m = sum(s.edge_count for s in specs)
    return n, m


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------

def graph_to_json_obj(fg: FrameworkGraph | Graph) -> dict:
    if isinstance(fg, Graph):
        return {
            "vertices": list(fg.vertices),
            "edges": [list(e) for e in fg.edges],
            "meta": {},
        }
    g = fg.graph
    edge_labels = {}
    for cid, cg in sorted(fg.congraphs.items()):
        color = fg.frame.color(cid)
        for e in cg.edges:
            edge_labels[edge_key(e)] = {"connection": cid, "color": color}
    vertex_labels = {}
    for v in g.vertices:
        if v in FRAME_NODES:
            vertex_labels[v] = {"role": "frame"}
        else:
            vertex_labels[v] = {"role": "internal",
                                "connection": v.split("/", 1)[0]}
    return {
        "vertices": list(g.vertices),
        "edges": [list(e) for e in g.edges],
        "meta": {
            "concept": fg.concept.kind,
            "ell": fg.ell,
            "k": fg.concept.k,
            "coloring": fg.frame.coloring_name,
            "below_threshold": fg.below_threshold,
            "vertex_labels": vertex_labels,
            "edge_labels": edge_labels,
        },
    }


def graph_to_json(fg: FrameworkGraph | Graph) -> str:
    return json.dumps(graph_to_json_obj(fg), indent=2, sort_keys=True)


def graph_from_json_obj(obj: dict) -> Graph:
    return make_graph(obj["vertices"], [edge(u, v) for u, v in obj["edges"]])
