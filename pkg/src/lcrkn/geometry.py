"""Exact planar predicates over rational points.

Coordinates are :class:`fractions.Fraction`. A :class:`PointSet` additionally
keeps an integer copy of its coordinates (everything multiplied by the common
denominator, which is a positive scaling and so preserves every orientation
sign) and a cached orientation table built from it. The table is what the
counting code in the rest of the package runs on.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import GeneralPositionError, GeometryError

Rational = Fraction

# Largest |integer coordinate| for which the int64 orientation path cannot overflow:
# differences stay below 2**31, products below 2**62.
_INT64_SAFE = 2**30


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted as coordinates; use Fraction or int")
    return Fraction(value)


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


@dataclass(frozen=True)
class Point:
    id: int
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    @property
    def xy(self) -> tuple[Fraction, Fraction]:
        return (self.x, self.y)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def orient(p: Point, q: Point, r: Point) -> Orientation:
    """Sign of the determinant of (q - p, r - p); positive means r is left of p->q."""
    det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return Orientation(_sign(det))


def orientation_table(xs: Sequence[int], ys: Sequence[int]) -> np.ndarray:
    """``T[i, j, k] = sign orient(P_i, P_j, P_k)`` for integer coordinates, as int8."""
    n = len(xs)
    if n == 0:
        return np.zeros((0, 0, 0), dtype=np.int8)
    big = max(max(abs(v) for v in xs), max(abs(v) for v in ys))
    dtype = np.int64 if big < _INT64_SAFE else object
    X = np.array(list(xs), dtype=dtype)
    Y = np.array(list(ys), dtype=dtype)
    dx = X[None, :] - X[:, None]
    dy = Y[None, :] - Y[:, None]
    det = dx[:, :, None] * dy[:, None, :] - dy[:, :, None] * dx[:, None, :]
    return (det > 0).astype(np.int8) - (det < 0).astype(np.int8)


class PointSet:
    """An immutable ordered collection of labelled rational points.

    Point ids are their positions, ``0 .. n-1``. General position is checked on
    construction unless ``validate=False``; the unchecked form exists for
    generators that want to test a candidate themselves.
    """

    def __init__(self, points: Iterable[Point], validate: bool = True):
        pts = tuple(points)
        for i, p in enumerate(pts):
            if p.id != i:
                raise GeometryError(f"point ids must be 0..n-1 in order; position {i} has id {p.id}")
        self.points: tuple[Point, ...] = pts
        if validate:
            self.check_general_position()

    @classmethod
    def from_coords(cls, coords: Iterable[tuple], validate: bool = True) -> "PointSet":
        return cls((Point(i, x, y) for i, (x, y) in enumerate(coords)), validate=validate)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"PointSet(n={len(self)})"

    @property
    def coords(self) -> list[tuple[Fraction, Fraction]]:
        return [p.xy for p in self.points]

    @cached_property
    def integer_coords(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Coordinates scaled by the lcm of all denominators."""
        den = 1
        for p in self.points:
            den = math.lcm(den, p.x.denominator, p.y.denominator)
        xs = tuple(int(p.x * den) for p in self.points)
        ys = tuple(int(p.y * den) for p in self.points)
        return xs, ys

    @cached_property
    def orientations(self) -> np.ndarray:
        xs, ys = self.integer_coords
        table = orientation_table(xs, ys)
        table.setflags(write=False)
        return table

    def member(self, p: Point | int) -> int:
        """Id of ``p`` after checking that it belongs to this set."""
        if isinstance(p, Point):
            if not (0 <= p.id < len(self.points)) or self.points[p.id] != p:
                raise GeometryError(f"{p} is not a point of this set")
            return p.id
        if not (0 <= p < len(self.points)):
            raise GeometryError(f"no point with id {p}")
        return int(p)

    def find_degeneracy(self) -> tuple[int, ...] | None:
        """Ids of a duplicate pair or collinear triple, or None."""
        seen: dict[tuple, int] = {}
        for p in self.points:
            if p.xy in seen:
                return (seen[p.xy], p.id)
            seen[p.xy] = p.id
        n = len(self.points)
        if n < 3:
            return None
        T = self.orientations
        i, j, k = np.indices((n, n, n))
        bad = (T == 0) & (i < j) & (j < k)
        if bad.any():
            a, b, c = (int(v) for v in np.argwhere(bad)[0])
            return (a, b, c)
        return None

    def check_general_position(self) -> None:
        ids = self.find_degeneracy()
        if ids is None:
            return
        if len(ids) == 2:
            raise GeneralPositionError(f"duplicate point: ids {ids[0]} and {ids[1]} coincide", ids)
        raise GeneralPositionError(f"collinear triple: ids {ids[0]}, {ids[1]}, {ids[2]}", ids)

    def is_general_position(self) -> bool:
        return self.find_degeneracy() is None


def is_general_position(P: PointSet | Iterable[Point]) -> bool:
    if not isinstance(P, PointSet):
        P = PointSet(P, validate=False)
    return P.is_general_position()


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the open segments ab and cd meet.

    Segments that share an endpoint never cross, and asking is treated as a
    caller error.
    """
    if {a.id, b.id} & {c.id, d.id}:
        raise GeometryError("segments share an endpoint; adjacency is not a crossing")
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if 0 in (o1, o2, o3, o4):
        raise GeneralPositionError(
            f"points {a.id}, {b.id}, {c.id}, {d.id} are not in general position",
            (a.id, b.id, c.id, d.id),
        )
    return o1 != o2 and o3 != o4


def convex_hull(P: PointSet) -> list[int]:
    """Hull vertex ids, counterclockwise, starting at the lexicographic minimum."""
    n = len(P)
    if n < 3:
        raise GeometryError(f"convex hull needs at least 3 points, got {n}")
    xs, ys = P.integer_coords
    order = sorted(range(n), key=lambda i: (xs[i], ys[i]))

    def cross(o, a, b):
        return (xs[a] - xs[o]) * (ys[b] - ys[o]) - (ys[a] - ys[o]) * (xs[b] - xs[o])

    lower: list[int] = []
    for i in order:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(order):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class SideCounts:
    right: int
    left: int


@dataclass(frozen=True)
class SectorCounts:
    ccw: int
    cw: int


def side_counts(P: PointSet, p: Point | int, q: Point | int) -> SideCounts:
    """Points strictly right (``H+``) and strictly left (``H-``) of the oriented line pq."""
    i, j = P.member(p), P.member(q)
    if i == j:
        raise GeometryError("side counts need two distinct points")
    row = P.orientations[i, j]
    return SideCounts(right=int((row < 0).sum()), left=int((row > 0).sum()))


def sector_mask(T: np.ndarray, p: int, r: int, q: int) -> np.ndarray:
    """Boolean mask over all ids: inside the open sector swept ccw at r from rp to rq."""
    turn = T[r, p, q]
    a = T[r, p]  # > 0: x is ccw of ray rp
    b = T[r, q]  # < 0: x is cw of ray rq
    if turn > 0:
        return (a > 0) & (b < 0)
    if turn < 0:
        # reflex sector: complement of the convex sector from rq to rp
        return (a > 0) | (b < 0)
    raise GeneralPositionError(f"degenerate triple: ids {p}, {r}, {q} are collinear", (p, r, q))


def sector_counts(P: PointSet, p: Point | int, r: Point | int, q: Point | int) -> SectorCounts:
    """``|S(prq)|`` and ``|S(qrp)|`` for the apex r."""
    i, k, j = P.member(p), P.member(r), P.member(q)
    if len({i, j, k}) != 3:
        raise GeometryError("sector counts need three distinct points")
    T = P.orientations
    ccw = sector_mask(T, i, k, j)
    cw = sector_mask(T, j, k, i)
    for m in (ccw, cw):
        m[[i, j, k]] = False
    return SectorCounts(ccw=int(ccw.sum()), cw=int(cw.sum()))

