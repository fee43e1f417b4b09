"""Kuratowski-subdivision coverage accounting for framework graphs.

A framework graph contains one K_{3,3} subdivision for every way of picking
a single pole path per connection, so the family has prod(widths) members.
In any drawing, each of those subdivisions must contain a crossing between
two edges lying on vertex-disjoint ("non-adjacent") Kuratowski paths — a
drawing in which only adjacent edges cross could be rerouted planarly.  A
crossing therefore *covers* the axis-aligned rectangle of subdivisions that
route through both of its crossed edges, and full coverage of the family is
a necessary condition checked here exactly.  Turning coverage fractions
into crossing counts gives the per-concept counting lower bounds.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod
from typing import Mapping, Sequence

from .drawing import CrossingSet, Drawing, Verdict, compute_crossings
from .graph_core import (
    ALL_CONNECTIONS,
    Bundle,
    CONCEPTS,
    ConGraph,
    ConceptId,
    Edge,
    FAN_KINDS,
    FrameworkGraph,
    Graph,
    as_concept,
    connection_poles,
    connection_widths,
    edge,
    make_graph,
    structural_k,
)

DEFAULT_BUDGET = 10_000_000


def enumeration_budget() -> int:
    """Active tuple-enumeration budget (BEYONDCR_BUDGET overrides)."""
    raw = os.environ.get("BEYONDCR_BUDGET", "").strip()
    return int(raw) if raw else DEFAULT_BUDGET


class BudgetExceeded(Exception):
    """Deciding coverage would enumerate more path tuples than allowed.

    Raised instead of ever returning an approximate answer.
    """

    def __init__(self, required: int, budget: int):
        super().__init__(
            f"coverage decision needs {required} tuple evaluations, "
            f"budget is {budget} (set BEYONDCR_BUDGET to raise it)")
        self.required = required
        self.budget = budget


# ---------------------------------------------------------------------------
# The subdivision family
# ---------------------------------------------------------------------------

def kuratowski_count(fg: FrameworkGraph) -> int:
    """Number of K_{3,3} subdivisions with the frame nodes as branch nodes."""
    return prod(cg.width for cg in fg.congraphs.values())


@dataclass(frozen=True)
class SubdivisionIndex:
    """One subdivision: a path index per connection, in ALL_CONNECTIONS order."""

    choices: tuple[int, ...]

    def __post_init__(self):
        if len(self.choices) != len(ALL_CONNECTIONS):
            raise ValueError("need one path choice per connection")

    def __getitem__(self, cid: str) -> int:
        return self.choices[ALL_CONNECTIONS.index(cid)]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(ALL_CONNECTIONS, self.choices))

    @staticmethod
    def from_dict(choices: Mapping[str, int]) -> "SubdivisionIndex":
        return SubdivisionIndex(tuple(choices[c] for c in ALL_CONNECTIONS))


def subdivision_paths(fg: FrameworkGraph,
                      sub: SubdivisionIndex) -> dict[str, tuple[str, ...]]:
    """The chosen pole path of every connection."""
    out = {}
    for cid in ALL_CONNECTIONS:
        cg = fg.congraphs[cid]
        idx = sub[cid]
        if not 0 <= idx < cg.width:
            raise ValueError(f"path index {idx} out of range for {cid}")
        out[cid] = cg.paths[idx]
    return out


def subdivision_subgraph(fg: FrameworkGraph, sub: SubdivisionIndex) -> Graph:
    """The subdivision as a concrete subgraph of fg.graph."""
    vertices: set[str] = set()
    edges: set[Edge] = set()
    for path in subdivision_paths(fg, sub).values():
        vertices.update(path)
        edges.update(edge(a, b) for a, b in zip(path, path[1:]))
    return make_graph(vertices, edges)


def is_frame_subdivision(fg: FrameworkGraph, sub: SubdivisionIndex) -> bool:
    """Structural re-check that the chosen paths form a K_{3,3} subdivision.

    True construction-side by design (pole paths are internally disjoint);
    this verifies it on the actual subgraph: every frame node has degree 3,
    every other vertex degree 2, and each path joins its connection's poles
    without touching any other path internally.
    """
    paths = subdivision_paths(fg, sub)
    seen_internal: set[str] = set()
    for cid, path in paths.items():
        s, t = connection_poles(cid)
        if path[0] != s or path[-1] != t:
            return False
        inner = set(path[1:-1])
        if inner & seen_internal or len(inner) != len(path) - 2:
            return False
        seen_internal |= inner
    g = subdivision_subgraph(fg, sub)
    degree: dict[str, int] = {v: 0 for v in g.vertices}
    for u, v in g.edges:
        degree[u] += 1
        degree[v] += 1
    frame_nodes = {"v1", "v2", "v3", "w1", "w2", "w3"}
    for v, d in degree.items():
        want = 3 if v in frame_nodes else 2
        if d != want:
            return False
    return True


# ---------------------------------------------------------------------------
# Coverage ledgers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoverageEntry:
    """One covering crossing, as the rectangle of subdivisions it covers.

    ``paths1``/``paths2`` are the path-index sets P_{c1}[e1] and P_{c2}[e2];
    the entry covers every subdivision choosing from both sets, a
    |paths1|*|paths2| / (w1*w2) share of the family.
    """

    index: int                # position in the drawing's sorted crossing list
    c1: str
    c2: str
    paths1: frozenset[int]
    paths2: frozenset[int]
    fraction: Fraction

    def covers(self, sub) -> bool:
        return sub[self.c1] in self.paths1 and sub[self.c2] in self.paths2

    def to_json_obj(self) -> dict:
        return {
            "crossing": self.index,
            "connections": [self.c1, self.c2],
            "paths": [sorted(self.paths1), sorted(self.paths2)],
            "fraction": str(self.fraction),
        }


@dataclass(frozen=True)
class CoverageLedger:
    """All covering crossings of one drawing, plus the connection widths.

    ``skipped`` counts crossings that cover nothing: same-connection and
    adjacent-connection crossings, and crossings on edges that lie on no
    pole path (direct pole edges of bundle+ con-graphs, K7 pentagon edges,
    apex K5 blobs, ...).
    """

    widths: dict[str, int]
    entries: tuple[CoverageEntry, ...]
    skipped: int = 0

    @property
    def fraction_sum(self) -> Fraction:
        return sum((e.fraction for e in self.entries), Fraction(0))

    def constrained(self) -> tuple[str, ...]:
        """Connections whose path choice any entry depends on."""
        cids = {e.c1 for e in self.entries} | {e.c2 for e in self.entries}
        return tuple(sorted(cids))

    def to_json_obj(self) -> dict:
        return {
            "widths": dict(sorted(self.widths.items())),
            "skipped": self.skipped,
            "entries": [e.to_json_obj() for e in self.entries],
        }


def coverage_ledger(drawing: Drawing, fg: FrameworkGraph,
                    crossings: CrossingSet | None = None) -> CoverageLedger:
    """Attribute every crossing of the drawing to the subdivisions it covers.

    Crossings between edges of non-adjacent connections (pole sets disjoint)
    contribute a rectangle entry; everything else contributes nothing.
    """
    if crossings is None:
        crossings = compute_crossings(drawing)
    widths = fg.widths()
    entries: list[CoverageEntry] = []
    skipped = 0
    for i, x in enumerate(crossings):
        try:
            c1 = fg.congraph_of_edge(x.a)
            c2 = fg.congraph_of_edge(x.b)
        except KeyError as exc:
            raise ValueError(f"crossed edge {exc.args[0]} belongs to no "
                             "con-graph of the framework graph") from None
        if c1 == c2:
            skipped += 1
            continue
        if set(connection_poles(c1)) & set(connection_poles(c2)):
            skipped += 1
            continue
        cg1, cg2 = fg.congraphs[c1], fg.congraphs[c2]
        t1 = frozenset(cg1.paths_through(x.a))
        t2 = frozenset(cg2.paths_through(x.b))
        if not t1 or not t2:
            skipped += 1
            continue
        frac = Fraction(len(t1) * len(t2), cg1.width * cg2.width)
        if c2 < c1:
            c1, c2, t1, t2 = c2, c1, t2, t1
        entries.append(CoverageEntry(i, c1, c2, t1, t2, frac))
    return CoverageLedger(widths, tuple(entries), skipped)


def _check_same_widths(ledger: CoverageLedger, fg: FrameworkGraph) -> None:
    if ledger.widths != fg.widths():
        raise ValueError("ledger was built for a different framework graph")


def verify_full_coverage(ledger: CoverageLedger,
                         fg: FrameworkGraph,
                         budget: int | None = None) -> Verdict:
    """Decide exactly whether every subdivision is covered by some entry.

    Only connections mentioned by an entry influence whether it applies, so
    it suffices to enumerate path choices over that subset; all extensions
    to the remaining connections behave identically.  The number of
    enumerated tuples is capped by the budget — exceeding it raises
    BudgetExceeded rather than ever sampling.
    """
    _check_same_widths(ledger, fg)
    if budget is None:
        budget = enumeration_budget()
    concept = str(fg.concept)
    if not ledger.entries:
        witness = {c: 0 for c in ALL_CONNECTIONS}
        return Verdict(False, concept, "no covering crossings",
                       {"subdivision": witness})
    cids = ledger.constrained()
    required = prod(ledger.widths[c] for c in cids)
    if required > budget:
        raise BudgetExceeded(required, budget)
    entries = ledger.entries
    for combo in product(*(range(ledger.widths[c]) for c in cids)):
        sub = dict(zip(cids, combo))
        if not any(e.covers(sub) for e in entries):
            full = {c: sub.get(c, 0) for c in ALL_CONNECTIONS}
            return Verdict(False, concept, "uncovered subdivision",
                           {"subdivision": full})
    return Verdict(True, concept)


def covered_fraction(ledger: CoverageLedger,
                     budget: int | None = None) -> Fraction:
    """Exact share of the subdivision family covered by >= 1 entry."""
    if budget is None:
        budget = enumeration_budget()
    if not ledger.entries:
        return Fraction(0)
    cids = ledger.constrained()
    required = prod(ledger.widths[c] for c in cids)
    if required > budget:
        raise BudgetExceeded(required, budget)
    covered = 0
    for combo in product(*(range(ledger.widths[c]) for c in cids)):
        sub = dict(zip(cids, combo))
        if any(e.covers(sub) for e in ledger.entries):
            covered += 1
    return Fraction(covered, required)


# ---------------------------------------------------------------------------
# Restrictions
# ---------------------------------------------------------------------------

def restrict(drawing: Drawing, fg: FrameworkGraph, cid: str,
             path: "int | Sequence[str]") -> tuple[Drawing, FrameworkGraph]:
    """Keep one pole path of connection ``cid``; drop the rest of its con-graph.

    ``path`` is a path index or the path's vertex tuple.  The con-graph
    shrinks to the width-1 bundle of the kept path, so the subdivision
    family shrinks by a factor of the old width.  Restricting two distinct
    connections commutes.
    """
    if cid not in fg.congraphs:
        raise ValueError(f"unknown connection {cid!r}")
    cg = fg.congraphs[cid]
    if isinstance(path, int):
        if not 0 <= path < cg.width:
            raise ValueError(f"path index {path} out of range for {cid}")
        chosen = cg.paths[path]
    else:
        chosen = tuple(path)
        if chosen not in cg.paths:
            chosen = chosen[::-1]
        if chosen not in cg.paths:
            raise ValueError(f"not a pole path of {cid}: {path!r}")
    keep_edges = {edge(a, b) for a, b in zip(chosen, chosen[1:])}
    new_cg = ConGraph(cid, Bundle(1, len(chosen) - 1), cg.s, cg.t,
                      chosen[1:-1],
                      tuple(e for e in cg.edges if e in keep_edges),
                      (chosen,))

    dropped_v = set(cg.internals) - set(chosen)
    dropped_e = set(cg.edges) - keep_edges
    g = fg.graph
    new_graph = make_graph((v for v in g.vertices if v not in dropped_v),
                           (e for e in g.edges if e not in dropped_e))
    congraphs = dict(fg.congraphs)
    congraphs[cid] = new_cg
    new_fg = FrameworkGraph(fg.concept, fg.ell, fg.frame, congraphs,
                            new_graph, fg.below_threshold)

    positions = {v: p for v, p in drawing.positions.items()
                 if v not in dropped_v}
    curves = {e: b for e, b in drawing.curves.items() if e not in dropped_e}
    meta = dict(drawing.meta)
    restrictions = dict(meta.get("restrictions", {}))
    restrictions[cid] = cg.paths.index(chosen)
    meta["restrictions"] = dict(sorted(restrictions.items()))
    return Drawing(new_graph, positions, curves, meta), new_fg


# ---------------------------------------------------------------------------
# Counting lower bounds
# ---------------------------------------------------------------------------

def counting_lower_bound(concept: "str | ConceptId", ell: int,
                         k: int | None = None
                         ) -> tuple[Fraction, tuple[str, ...]]:
    """Exact coverage-counting lower bound on crossings, with its arithmetic.

    The bound has the shape ``share * rectangles``: at least ``share`` of
    the subdivision family must be covered by crossings of the designated
    kind, each of which covers at most ``1/rectangles`` of the family.  The
    trace records the family size, both factors, and the product.  Below
    the construction's quality threshold the same formula is evaluated
    anyway (it may be non-positive) and the trace says so.
    """
    cid = as_concept(concept, k)
    kk = structural_k(cid)
    info = CONCEPTS[cid.kind]
    kind = cid.kind

    if kind == "k-planar":
        share, share_s = 1 - Fraction(40, ell), f"1 - 40/{ell}"
        rect, rect_s = (ell * kk) ** 2, f"({ell}*{kk})^2"
    elif kind == "k-vertex-planar":
        share, share_s = 1 - Fraction(10, ell), f"1 - 10/{ell}"
        rect, rect_s = (ell * kk) ** 2, f"({ell}*{kk})^2"
    elif kind == "ic":
        share, share_s = Fraction(1), "1"
        rect, rect_s = ell ** 2, f"{ell}^2"
    elif kind == "nic":
        share = 1 - Fraction(1, 2) - Fraction(3, 2 * ell)
        share_s = f"1 - 1/2 - 3/(2*{ell})"
        rect, rect_s = ell ** 2, f"{ell}^2"
    elif kind in ("nnic", "k-fan-crossing-free"):
        share = 1 - Fraction(108 * (kk - 1), ell * kk)
        share_s = f"1 - 108*({kk}-1)/({ell}*{kk})"
        rect, rect_s = (ell * kk) ** 2, f"({ell}*{kk})^2"
    elif kind in FAN_KINDS:
        share, share_s = Fraction(1), "1"
        rect, rect_s = ell ** 2, f"{ell}^2"
    elif kind == "k-edge-crossing":
        share, share_s = Fraction(1, 2), "1/2"
        rect, rect_s = (kk // 2) ** 2, f"floor({kk}/2)^2"
    elif kind == "k-gap-planar":
        share, share_s = Fraction(1, 5), "1/5"
        rect, rect_s = 5 * ell * kk ** 2, f"5*{ell}*{kk}^2"
    elif kind == "k-apex":
        share, share_s = Fraction(1), "1"
        rect, rect_s = (ell * kk) ** 2, f"({ell}*{kk})^2"
    elif kind == "skewness":
        share, share_s = Fraction(1), "1"
        rect, rect_s = ell * kk ** 2, f"{ell}*{kk}^2"
    else:
        raise ValueError(f"no counting bound for concept kind {kind!r}")

    widths = connection_widths(cid, ell)
    total = prod(widths[c] for c in ALL_CONNECTIONS)
    bound = share * rect
    trace = [
        "classes: |K| = "
        + " * ".join(str(widths[c]) for c in ALL_CONNECTIONS)
        + f" = {total}",
        f"coefficient: required covered share {share_s} = {share}; "
        f"each counted crossing covers at most 1/({rect_s}) = 1/{rect}",
        f"bound: ({share}) * {rect} = {bound}",
    ]
    threshold = info.threshold(kk)
    if ell < threshold:
        trace.append(f"below threshold: ell={ell} < {threshold}; "
                     "formula evaluated anyway")
    return bound, tuple(trace)
