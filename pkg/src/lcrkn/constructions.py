"""The two optimal point-set constructions, with exact coordinates.

Arcs of circles are replaced by parabolic arcs through the same three anchor
points (two endpoints and the bulge point at parameter 1/2), which keeps every
coordinate rational. The bulge size is ``eps = 1 / 2**t``; ``calibrate_epsilon``
picks the smallest exponent ``t`` for which the separation side conditions
and the expected local crossing number hold, all checked exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import Callable

import numpy as np

from .crossings import crossing_matrix
from .errors import CalibrationError, GeometryError
from .formula import five_part_value, three_arc_value
from .geometry import PointSet

THREE_ARCS = "three-arcs"
FIVE_PART = "five-part"

ARC_PARTS = ("ARC0", "ARC1", "ARC2")
FIVE_PARTS = ("A", "B1", "B2", "C1", "C2", "X1", "X2")
MIRROR = {"A": "A", "B1": "B2", "B2": "B1", "C1": "C2", "C2": "C1", "X1": "X2", "X2": "X1"}

# The fifteen (x part, y part) cases of the five-part analysis; the remaining
# part pairs are their mirror images across the y-axis.
FIVE_PART_CASES = (
    ("A", "A"), ("A", "X1"), ("A", "B1"), ("A", "C1"), ("X1", "X2"),
    ("X1", "B1"), ("X1", "B2"), ("X1", "C1"), ("X1", "C2"), ("B1", "B1"),
    ("B1", "B2"), ("B1", "C1"), ("B1", "C2"), ("C1", "C1"), ("C1", "C2"),
)

DEFAULT_MAX_EXPONENT = 64


@dataclass(frozen=True)
class ThreeArcSpec:
    n: int
    eps_exponent: int
    n0: int = field(init=False)
    n1: int = field(init=False)
    n2: int = field(init=False)

    def __post_init__(self):
        if self.n < 3:
            raise GeometryError(f"the three-arc construction needs n >= 3, got {self.n}")
        if self.eps_exponent < 0:
            raise ValueError("eps exponent must be nonnegative")
        object.__setattr__(self, "n0", self.n // 3)
        object.__setattr__(self, "n1", (self.n + 1) // 3)
        object.__setattr__(self, "n2", (self.n + 2) // 3)

    @property
    def sizes(self) -> dict[str, int]:
        return dict(zip(ARC_PARTS, (self.n0, self.n1, self.n2)))

    @property
    def expected_lcr(self) -> int:
        return three_arc_value(self.n)


@dataclass(frozen=True)
class FivePartSpec:
    k: int
    eps_exponent: int

    def __post_init__(self):
        if self.k < 4:
            raise GeometryError(f"the five-part construction needs k >= 4, got {self.k}")
        if self.eps_exponent < 0:
            raise ValueError("eps exponent must be nonnegative")

    @property
    def n(self) -> int:
        return 3 * self.k + 8

    @property
    def sizes(self) -> dict[str, int]:
        k, f = self.k, self.k // 2
        return {"A": k + 2, "B1": k + 2 - f, "B2": k + 2 - f, "C1": f, "C2": f, "X1": 1, "X2": 1}

    @property
    def expected_lcr(self) -> int:
        return five_part_value(self.k)


@dataclass(frozen=True)
class PartitionedPointSet:
    points: PointSet
    labels: tuple[str, ...]  # labels[id] is the part of point id
    kind: str
    param: int  # n for three arcs, k for five parts
    eps_exponent: int

    @property
    def parts(self) -> dict[str, list[int]]:
        out: dict[str, list[int]] = {}
        for i, name in enumerate(self.labels):
            out.setdefault(name, []).append(i)
        return out

    @property
    def spec(self):
        if self.kind == THREE_ARCS:
            return ThreeArcSpec(self.param, self.eps_exponent)
        return FivePartSpec(self.param, self.eps_exponent)

    @property
    def expected_lcr(self) -> int:
        return self.spec.expected_lcr

    def label_map(self) -> dict[int, str]:
        return dict(enumerate(self.labels))


def _params(m: int) -> list[Fraction]:
    """m equally spaced interior parameters in (0, 1): centres of m equal cells."""
    return [Fraction(2 * j + 1, 2 * m) for j in range(m)]


def parabolic_arc(p0, p1, bulge, m: int, eps: Fraction) -> list[tuple[Fraction, Fraction]]:
    """m points on the parabola from p0 to p1 whose midpoint is pushed by eps * bulge."""
    (x0, y0), (x1, y1), (wx, wy) = p0, p1, bulge
    pts = []
    for s in _params(m):
        h = 4 * eps * s * (1 - s)
        pts.append((x0 + s * (x1 - x0) + h * wx, y0 + s * (y1 - y0) + h * wy))
    return pts


# Scaled rotations by roughly +120 and -120 degrees (cos -1/2, sin +-7/8). An exact
# 120 degree rotation is irrational; a similarity with positive determinant keeps
# each arc's convexity and its bulge on the counterclockwise side.
_COS, _SIN = Fraction(-1, 2), Fraction(7, 8)
_ARC_MAPS = (
    ((1, 0), (0, 1)),
    ((_COS, -_SIN), (_SIN, _COS)),
    ((_COS, _SIN), (-_SIN, _COS)),
)


def three_arc_layout(n: int, eps_exponent: int) -> PartitionedPointSet:
    """Three-arc point set for a given bulge exponent, without any checks.

    The base arc runs from (1, 0) to (3, 0) bulging to (2, eps); the other two
    are its images under the scaled rotations above.
    """
    spec = ThreeArcSpec(n, eps_exponent)
    eps = Fraction(1, 2**eps_exponent)
    coords, labels = [], []
    for name, m, ((a, b), (c, d)) in zip(ARC_PARTS, (spec.n0, spec.n1, spec.n2), _ARC_MAPS):
        for x, y in parabolic_arc((1, 0), (3, 0), (0, 1), m, eps):
            coords.append((a * x + b * y, c * x + d * y))
            labels.append(name)
    return PartitionedPointSet(PointSet.from_coords(coords, validate=False), tuple(labels), THREE_ARCS, n, eps_exponent)


def _mirror(pts):
    return [(-x, y) for x, y in pts]


def five_part_layout(k: int, eps_exponent: int) -> PartitionedPointSet:
    """Five-part point set on 3k + 8 points for a given bulge exponent, without checks.

    A runs from (0, 24) to (0, 20) bulging right, B1 from (-24, -12) to
    (-20, -10) bulging up-left along (-1, 2), C1 from (-5, -1) to (-4, 0)
    bulging up-left along (-1, 1); x1 = (-11, 1); B2, C2, x2 are mirror
    images across the y-axis. Within a part, ids follow the arc parameter.
    """
    spec = FivePartSpec(k, eps_exponent)
    eps = Fraction(1, 2**eps_exponent)
    sizes = spec.sizes
    A = parabolic_arc((0, 24), (0, 20), (1, 0), sizes["A"], eps)
    B1 = parabolic_arc((-24, -12), (-20, -10), (-1, 2), sizes["B1"], eps)
    C1 = parabolic_arc((-5, -1), (-4, 0), (-1, 1), sizes["C1"], eps)
    X1 = [(-11, 1)]
    groups = {"A": A, "B1": B1, "B2": _mirror(B1), "C1": C1, "C2": _mirror(C1), "X1": X1, "X2": _mirror(X1)}
    coords, labels = [], []
    for name in FIVE_PARTS:
        coords.extend(groups[name])
        labels.extend([name] * len(groups[name]))
    return PartitionedPointSet(PointSet.from_coords(coords, validate=False), tuple(labels), FIVE_PART, k, eps_exponent)


def _same_side(row: np.ndarray, ids: list[int]) -> int:
    """Common strict side (+1/-1) of ``ids`` in an orientation row, or 0 if they disagree."""
    if not ids:
        return 0
    s = row[ids]
    if (s > 0).all():
        return 1
    if (s < 0).all():
        return -1
    return 0


def verify_secant_separation(S: PartitionedPointSet) -> bool:
    """Every line through two points of one arc puts the other two arcs strictly on opposite sides."""
    if S.kind != THREE_ARCS or set(S.labels) - set(ARC_PARTS):
        raise GeometryError("secant separation applies to three-arc point sets only")
    T = S.points.orientations
    parts = S.parts
    for i, name in enumerate(ARC_PARTS):
        nxt = parts.get(ARC_PARTS[(i + 1) % 3], [])
        prv = parts.get(ARC_PARTS[(i + 2) % 3], [])
        for x, y in combinations(parts.get(name, []), 2):
            row = T[x, y]
            s1, s2 = _same_side(row, nxt), _same_side(row, prv)
            if s1 == 0 or s2 == 0 or s1 == s2:
                return False
    return True


def verify_cluster_separation(S: PartitionedPointSet) -> bool:
    """No line through two points of one part splits any other part."""
    if S.kind != FIVE_PART or set(S.labels) - set(FIVE_PARTS):
        raise GeometryError("cluster separation applies to five-part point sets only")
    T = S.points.orientations
    parts = S.parts
    for name, ids in parts.items():
        others = [v for other, v in parts.items() if other != name]
        for x, y in combinations(ids, 2):
            row = T[x, y]
            if any(_same_side(row, v) == 0 for v in others):
                return False
    return True


_LAYOUTS: dict[str, Callable[[int, int], PartitionedPointSet]] = {
    THREE_ARCS: three_arc_layout,
    FIVE_PART: five_part_layout,
}
_VERIFIERS = {THREE_ARCS: verify_secant_separation, FIVE_PART: verify_cluster_separation}


def check_layout(S: PartitionedPointSet) -> str | None:
    """None if S passes every construction check, else a description of the first failure."""
    bad = S.points.find_degeneracy()
    if bad is not None:
        return f"eps=1/2^{S.eps_exponent}: not in general position (ids {bad})"
    if not _VERIFIERS[S.kind](S):
        return f"eps=1/2^{S.eps_exponent}: separation condition fails"
    lcr = int(crossing_matrix(S.points.orientations).max()) if len(S.points) >= 4 else 0
    if lcr != S.expected_lcr:
        return f"eps=1/2^{S.eps_exponent}: local crossing number {lcr}, expected {S.expected_lcr}"
    return None


@lru_cache(maxsize=None)
def calibrate_epsilon(kind: str, param: int, max_exponent: int = DEFAULT_MAX_EXPONENT) -> int:
    """Smallest t in 1..max_exponent for which eps = 1/2^t passes every check."""
    if kind not in _LAYOUTS:
        raise ValueError(f"unknown construction {kind!r}; expected one of {sorted(_LAYOUTS)}")
    if max_exponent < 1:
        raise CalibrationError(f"empty exponent range 1..{max_exponent}")
    layout = _LAYOUTS[kind]
    diagnostic = None
    for t in range(1, max_exponent + 1):
        diagnostic = check_layout(layout(param, t))
        if diagnostic is None:
            return t
    raise CalibrationError(f"no eps exponent up to {max_exponent} works for {kind} {param}: {diagnostic}", diagnostic)


def _construct(kind: str, param: int, eps_exponent: int | None, max_exponent: int) -> PartitionedPointSet:
    if eps_exponent is None:
        eps_exponent = calibrate_epsilon(kind, param, max_exponent)
    S = _LAYOUTS[kind](param, eps_exponent)
    S.points.check_general_position()
    return S


def construct_three_arcs(n: int, eps_exponent: int | None = None,
                         max_exponent: int = DEFAULT_MAX_EXPONENT) -> PartitionedPointSet:
    """Three clusters of sizes floor(n/3), floor((n+1)/3), floor((n+2)/3) on shallow arcs.

    With ``eps_exponent`` given, calibration is skipped; the result is still
    required to be in general position.
    """
    ThreeArcSpec(n, eps_exponent or 0)
    return _construct(THREE_ARCS, n, eps_exponent, max_exponent)


def construct_five_part(k: int, eps_exponent: int | None = None,
                        max_exponent: int = DEFAULT_MAX_EXPONENT) -> PartitionedPointSet:
    FivePartSpec(k, eps_exponent or 0)
    return _construct(FIVE_PART, k, eps_exponent, max_exponent)


def _part_pair_key(a: str, b: str) -> tuple[str, str]:
    order = {name: i for i, name in enumerate(FIVE_PARTS)}
    return (a, b) if order[a] <= order[b] else (b, a)


def case_maxima_report(S: PartitionedPointSet) -> dict[tuple[str, str], int]:
    """Maximum edge crossing count over edges joining each pair of parts.

    Keys are unordered part pairs in canonical part order, e.g. ``("B1", "C2")``;
    pairs with no edges (a singleton with itself) are omitted.
    """
    if S.kind != FIVE_PART:
        raise GeometryError("case maxima are defined for five-part point sets only")
    M = crossing_matrix(S.points.orientations)
    parts = S.parts
    report = {}
    for a, b in combinations_with_replacement(FIVE_PARTS, 2):
        if a == b:
            pairs = list(combinations(parts[a], 2))
        else:
            pairs = list(product(parts[a], parts[b]))
        if pairs:
            report[(a, b)] = max(int(M[u, v]) for u, v in pairs)
    return report


def five_part_case_formulas(k: int) -> dict[tuple[str, str], int]:
    """Per-case maxima predicted by the counting argument for the five-part set.

    Each case's crossing count is a polynomial in how many points of each part
    lie below/above (or between) the edge's endpoints; the prediction is its
    maximum over every admissible parameter value, found by enumeration.
    """
    f = k // 2
    nb = k + 1 - f  # |B| - 1
    rng = lambda hi: range(0, hi + 1)

    def best(fn, *ranges):
        return max(fn(*args) for args in product(*ranges))

    cases = {
        ("A", "A"): best(lambda a: a * (2 * k + 3 - a), rng(k)),
        ("A", "X1"): best(lambda a: a * (f + k + 1 - a) + (k + 1 - a) * (k + 2 - f), rng(k + 1)),
        ("A", "B1"): best(
            lambda a, b: a * (f + (k + 1 - a) + (nb - b) + 1) + b * ((k + 1 - a) + f + 1),
            rng(k + 1), rng(nb)),
        ("A", "C1"): best(
            lambda a, c: a * ((f - 1 - c) + (k + 1 - a)) + (k + 1 - a) * ((k + 2 - f) + c + 1)
            + (f - 1 - c) * (k + 3 - f) + (f + 1),
            rng(k + 1), rng(f - 1)),
        ("X1", "X2"): (k + 2) * 2 * f,
        ("X1", "B1"): best(lambda b: b * f + (nb - b) * (k + 2), rng(nb)),
        ("X1", "B2"): best(lambda b: (k + 2 - f) * (2 * f + (nb - b) + 1) + b * (f + nb - b), rng(nb)),
        ("X1", "C1"): best(lambda c: (f - 1 - c) * (k + 2 - f) + c * (k + 2), rng(f - 1)),
        ("X1", "C2"): best(lambda c: f * (k + 3) + (f - 1 - c) * ((k + 2 - f) + f + c), rng(f - 1)),
        ("B1", "B1"): best(lambda b: b * (2 * k + 3 - f - b), rng(k - f)),
        ("B1", "B2"): best(lambda b1, b2: (b1 + b2) * (2 * k + 3 - f - (b1 + b2)), rng(nb), rng(nb)),
        ("B1", "C1"): best(
            lambda b, c: (f - 1 - c) * (b + k + 3) + (nb - b) * (c + k + 3) + (k + 2 - f),
            rng(nb), rng(f - 1)),
        ("B1", "C2"): best(
            lambda b, c: b * (c + nb - b) + (nb - b) * ((k + 2 - f) + (f - 1 - c) + 1)
            + ((k + 2 - f) + (f - 1 - c)) * (f + 1) + c * (f - 1 - c),
            rng(nb), rng(f - 1)),
        ("C1", "C1"): best(lambda c: c * (k + f + 1 - c), rng(f - 2)),
        ("C1", "C2"): best(
            lambda c1, c2: (c1 + c2) * (k + f - 1 - c1 - c2) + 2 * f - 2,
            rng(f - 1), rng(f - 1)),
    }
    return {_part_pair_key(*key): v for key, v in cases.items()}


def mirror_case(key: tuple[str, str]) -> tuple[str, str]:
    return _part_pair_key(MIRROR[key[0]], MIRROR[key[1]])
