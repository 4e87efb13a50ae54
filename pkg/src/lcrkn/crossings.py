"""Per-edge crossing counts of the straight-line complete graph on a point set."""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import NamedTuple

import numpy as np

from .errors import GeometryError
from .geometry import Point, PointSet, segments_cross


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int | Point, b: int | Point) -> "Edge":
        a = a.id if isinstance(a, Point) else int(a)
        b = b.id if isinstance(b, Point) else int(b)
        if a == b:
            raise GeometryError(f"an edge needs two distinct endpoints, got {a} twice")
        return cls(a, b) if a < b else cls(b, a)


def crossing_matrix(T: np.ndarray) -> np.ndarray:
    """Symmetric n x n matrix: entry (a, b) is the number of edges crossing ab.

    ``T`` is an orientation table. Segment cd crosses ab iff c, d are on
    opposite sides of line ab and a, b on opposite sides of line cd; both
    conditions vanish whenever an endpoint is shared, because the orientation
    of a repeated index is zero.
    """
    n = T.shape[0]
    if n < 4:
        return np.zeros((n, n), dtype=np.int64)
    T16 = T.astype(np.int16)
    split = (T16[:, :, :, None] * T16[:, :, None, :]) < 0  # split[a,b,c,d]: c,d straddle ab
    cross = split & split.transpose(2, 3, 0, 1)
    # every unordered partner {c, d} appears as (c, d) and (d, c)
    return cross.sum(axis=(2, 3), dtype=np.int64) // 2


@dataclass(frozen=True)
class CrossingProfile:
    n: int
    counts: dict[Edge, int]

    @property
    def lcr(self) -> int:
        return max(self.counts.values(), default=0)

    @property
    def total(self) -> int:
        s = sum(self.counts.values())
        assert s % 2 == 0, "crossing counts must sum to an even number"
        return s // 2

    def max_edges(self) -> list[Edge]:
        """Edges carrying the maximum number of crossings (empty when there are no edges)."""
        m = self.lcr
        return [e for e, c in self.counts.items() if c == m]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": [{"u": e.u, "v": e.v, "crossings": c} for e, c in self.counts.items()],
            "lcr": self.lcr,
            "total": self.total,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "CrossingProfile":
        counts = {Edge.of(e["u"], e["v"]): int(e["crossings"]) for e in data["edges"]}
        prof = cls(n=int(data["n"]), counts=counts)
        if "lcr" in data and data["lcr"] != prof.lcr:
            raise ValueError(f"profile lcr {data['lcr']} disagrees with its edges ({prof.lcr})")
        if "total" in data and data["total"] != prof.total:
            raise ValueError(f"profile total {data['total']} disagrees with its edges ({prof.total})")
        return prof


def _edge_ids(P: PointSet, e) -> Edge:
    u, v = e
    return Edge.of(P.member(u), P.member(v))


def edge_crossings(P: PointSet, e) -> int:
    """Number of edges of the complete graph on P that cross ``e``, by direct enumeration."""
    u, v = _edge_ids(P, e)
    a, b = P[u], P[v]
    others = [p for p in P if p.id not in (u, v)]
    count = 0
    for i, c in enumerate(others):
        for d in others[i + 1:]:
            if segments_cross(a, b, c, d):
                count += 1
    return count


def crossing_profile(P: PointSet) -> CrossingProfile:
    n = len(P)
    M = crossing_matrix(P.orientations)
    counts = {Edge(u, v): int(M[u, v]) for u in range(n) for v in range(u + 1, n)}
    return CrossingProfile(n=n, counts=counts)


def local_crossing_number(P: PointSet) -> int:
    if len(P) < 4:
        return 0
    return int(crossing_matrix(P.orientations).max())


def total_crossings(P: PointSet) -> int:
    return crossing_profile(P).total


def convex_quadrilaterals(T: np.ndarray) -> int:
    """Number of 4-point subsets in convex position, from an orientation table.

    In general position each such subset contributes exactly one crossing (its
    diagonals) and every other subset none, so this equals the total crossing
    count without going through per-edge counts. A 4-set is non-convex iff
    exactly one of its points is inside the triangle of the other three.
    """
    n = T.shape[0]
    if n < 4:
        return 0
    pos = T > 0
    # inside[i, j, k, x]: x strictly inside ccw triangle ijk; each triangle is hit
    # once per cyclic rotation of (i, j, k)
    inside = pos[:, :, None, :] & pos[None, :, :, :] & pos.transpose(1, 0, 2)[:, None, :, :]
    return comb(n, 4) - int(inside.sum()) // 3


def averaging_bound(n: int, total: int) -> int:
    """``ceil(2 * total / C(n, 2))``: some edge carries at least the average."""
    edges = comb(n, 2)
    if edges == 0:
        return 0
    return -(-2 * total // edges)
