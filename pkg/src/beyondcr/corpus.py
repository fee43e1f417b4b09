"""Seeded random small drawings for property tests and oracle comparisons.

Drawings are sampled on an integer grid and rejected until they are in
general position with at most ``max_crossings`` crossings, so exhaustive
oracles (assignment/subset enumeration) stay cheap.  Everything is driven
by a caller-supplied ``random.Random``, making corpora reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .drawing import Drawing, GeneralPositionViolation, compute_crossings
from .graph_core import edge, make_graph


def random_drawing(rng: random.Random,
                   n_range: tuple[int, int] = (4, 8),
                   extra_edges: tuple[int, int] = (2, 5),
                   bend_prob: float = 0.0,
                   coord_range: int = 256,
                   max_crossings: int = 12,
                   max_attempts: int = 500) -> Drawing:
    """One random polyline drawing in general position.

    The graph has n vertices (uniform in ``n_range``) and n-1+extra edges
    sampled from all pairs; with ``bend_prob`` an edge gets a single bend.
    Degenerate geometry (collinear overlaps, concurrent crossings, ...)
    and drawings with more than ``max_crossings`` crossings are rejected
    and resampled.
    """
    for _ in range(max_attempts):
        n = rng.randint(*n_range)
        names = [f"u{i}" for i in range(n)]
        pts = set()
        while len(pts) < n:
            pts.add((rng.randrange(coord_range), rng.randrange(coord_range)))
        positions = {
            v: (Fraction(x), Fraction(y))
            for v, (x, y) in zip(names, sorted(pts))
        }
        pairs = list(combinations(names, 2))
        rng.shuffle(pairs)
        m = min(len(pairs), n - 1 + rng.randint(*extra_edges))
        edges = [edge(u, v) for u, v in pairs[:m]]
        curves = {}
        for e in edges:
            if rng.random() < bend_prob:
                (x1, y1), (x2, y2) = positions[e[0]], positions[e[1]]
                off = rng.randrange(-coord_range // 8, coord_range // 8 + 1)
                mid = ((x1 + x2) / 2 + off, (y1 + y2) / 2 + off // 2 + 1)
                curves[e] = (mid,)
        drawing = Drawing(make_graph(names, edges), positions, curves)
        try:
            crossings = compute_crossings(drawing)
        except GeneralPositionViolation:
            continue
        if len(crossings) <= max_crossings:
            return drawing
    raise RuntimeError(f"no acceptable drawing after {max_attempts} attempts")


def random_corpus(seed: int, count: int, **kwargs) -> list[Drawing]:
    """A reproducible list of random drawings for one seed."""
    rng = random.Random(seed)
    return [random_drawing(rng, **kwargs) for _ in range(count)]
