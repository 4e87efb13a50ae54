"""Balanced hull-edge / hull-path separators and the lower bound they certify.

For a point set P with n >= 3 points there is always either

* a hull edge witness: hull vertices p, q with ``| |H+(pq)| - |H-(pq)| | <= (n-2)/3``, or
* a hull path witness: hull vertices p, q and a third point r with
  ``| |S(prq)| - |S(qrp)| | <= (n-3)/3``.

Every segment joining the two sides of a hull edge crosses it, and every
segment joining the two sectors of a hull path crosses pr or rq, which gives
a per-drawing lower bound on the local crossing number.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator

import numpy as np

from .crossings import averaging_bound, convex_quadrilaterals, crossing_matrix
from .errors import LemmaViolation
from .formula import lower_bound_class
from .geometry import PointSet, convex_hull

EDGE = "edge"
PATH = "path"


@dataclass(frozen=True)
class SeparationWitness:
    """One branch of the separation lemma.

    For an edge witness ``counts`` is (right of p->q, left of p->q) and ``r``
    is None; for a path witness it is (``|S(prq)|``, ``|S(qrp)|``).
    """
    kind: str
    p: int
    q: int
    r: int | None
    counts: tuple[int, int]
    threshold: Fraction

    @property
    def difference(self) -> int:
        return abs(self.counts[0] - self.counts[1])

    @property
    def satisfied(self) -> bool:
        return self.difference <= self.threshold

    @property
    def forced_crossings(self) -> int:
        return self.counts[0] * self.counts[1]

    @property
    def edge_bound(self) -> int:
        forced = self.forced_crossings
        return forced if self.kind == EDGE else -(-forced // 2)

    def sort_key(self) -> tuple:
        return (0 if self.kind == EDGE else 1, self.p, self.q, -1 if self.r is None else self.r)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["counts"] = list(self.counts)
        d["threshold"] = str(self.threshold)
        d["difference"] = self.difference
        return d


@dataclass(frozen=True)
class LowerBoundCertificate:
    witness: SeparationWitness
    forced_crossings: int
    edge_bound: int

    @property
    def edges(self) -> list[tuple[int, int]]:
        """The edge (or the two path edges) that must carry the crossings."""
        w = self.witness
        if w.kind == EDGE:
            return [(w.p, w.q)]
        return [(w.p, w.r), (w.r, w.q)]

    def to_dict(self) -> dict:
        return {
            "witness": self.witness.to_dict(),
            "forced_crossings": self.forced_crossings,
            "edge_bound": self.edge_bound,
            "edges": [list(e) for e in self.edges],
        }


def _sector_masks(T: np.ndarray, p: int, q: int) -> np.ndarray:
    """``m[r, x]``: x lies in the open sector swept ccw at r from ray rp to ray rq.

    Rows r = p and r = q are meaningless and must be ignored by callers.
    """
    turn = T[:, p, q][:, None]
    a = T[:, p, :]  # > 0: x ccw of ray rp
    b = T[:, q, :]  # < 0: x cw of ray rq
    convex = (a > 0) & (b < 0)
    reflex = (a > 0) | (b < 0)
    return np.where(turn > 0, convex, np.where(turn < 0, reflex, False))


def _path_counts(T: np.ndarray, p: int, q: int) -> tuple[np.ndarray, np.ndarray]:
    ccw = _sector_masks(T, p, q).sum(axis=1)
    cw = _sector_masks(T, q, p).sum(axis=1)
    return ccw, cw


def iter_witnesses(P: PointSet, hull: list[int] | None = None) -> Iterator[SeparationWitness]:
    """All candidate witnesses (satisfied or not): hull pairs first, then hull pair x apex.

    Hull pairs are taken with ``p < q`` by id.
    """
    n = len(P)
    T = P.orientations
    if hull is None:
        hull = convex_hull(P)
    pairs = [(min(a, b), max(a, b)) for a, b in combinations(hull, 2)]
    pairs.sort()
    edge_thr, path_thr = Fraction(n - 2, 3), Fraction(n - 3, 3)
    for p, q in pairs:
        row = T[p, q]
        yield SeparationWitness(EDGE, p, q, None, (int((row < 0).sum()), int((row > 0).sum())), edge_thr)
    for p, q in pairs:
        ccw, cw = _path_counts(T, p, q)
        for r in range(n):
            if r != p and r != q:
                yield SeparationWitness(PATH, p, q, r, (int(ccw[r]), int(cw[r])), path_thr)


def find_separation_witness(P: PointSet) -> SeparationWitness:
    """First satisfied witness in search order; raises LemmaViolation if there is none."""
    if len(P) < 3:
        raise ValueError("the separation lemma needs at least 3 points")
    hull = convex_hull(P)
    for w in iter_witnesses(P, hull):
        if w.satisfied:
            return w
    if len(P) == 4 and len(hull) == 3:
        # triangle plus one interior point: every hull pair splits 2/0 and every
        # path has a sector sum of 1, so neither branch can hold
        raise LemmaViolation("no separation witness: 4 points with a triangular hull admit neither branch")
    raise LemmaViolation("separation lemma violated (implementation bug): no balanced hull edge or hull path")


def _all_satisfied(P: PointSet) -> list[SeparationWitness]:
    return [w for w in iter_witnesses(P) if w.satisfied]


def lemma_lower_bound(P: PointSet, lcr: int | None = None) -> LowerBoundCertificate:
    """Strongest certificate over all satisfied witnesses.

    Ties go to the smallest ``sort_key``. The bound is checked against the
    drawing's actual local crossing number (pass ``lcr`` to skip recomputing it).
    """
    if len(P) < 3:
        raise ValueError("the separation lemma needs at least 3 points")
    witnesses = _all_satisfied(P)
    if not witnesses:
        find_separation_witness(P)  # raises with the appropriate message
    best = min(witnesses, key=lambda w: (-w.edge_bound, w.sort_key()))
    cert = LowerBoundCertificate(best, best.forced_crossings, best.edge_bound)
    if lcr is None:
        lcr = int(crossing_matrix(P.orientations).max()) if len(P) >= 4 else 0
    if cert.edge_bound > lcr:
        raise LemmaViolation(f"certificate claims {cert.edge_bound} crossings but lcr is {lcr}")
    return cert


def path_imbalances(P: PointSet) -> list[tuple[int, int, int, int]]:
    """``(p, q, r, | |S(prq)| - |S(qrp)| |)`` for every hull pair p < q and apex r."""
    return [(w.p, w.q, w.r, w.difference) for w in iter_witnesses(P) if w.kind == PATH]


def tightness_diagnostic(P: PointSet) -> int:
    """Smallest sector imbalance over all paths p-r-q with hull endpoints p, q."""
    if len(P) < 4:
        raise ValueError("the tightness diagnostic needs at least 4 points")
    return min(d for *_, d in path_imbalances(P))


def hull_endpoint_property(P: PointSet) -> bool:
    """Some edge carrying the maximum number of crossings has a hull vertex as an endpoint."""
    if len(P) < 3:
        raise ValueError("needs at least 3 points")
    hull = set(convex_hull(P))
    M = crossing_matrix(P.orientations)
    top = M.max()
    us, vs = np.nonzero(np.triu(M == top, k=1))
    return any(int(u) in hull or int(v) in hull for u, v in zip(us, vs))


def random_point_set(n: int, rng: np.random.Generator, bound: int = 2**20) -> PointSet:
    """Uniform integer points in [0, bound)^2, redrawn until in general position."""
    while True:
        xy = rng.integers(0, bound, size=(n, 2))
        P = PointSet.from_coords(((int(x), int(y)) for x, y in xy), validate=False)
        if P.is_general_position():
            return P


@dataclass
class FuzzReport:
    """Tallies from a randomized run of the lemma and the bounds that follow from it."""
    instances: int = 0
    witness_failures: int = 0
    unsound_certificates: int = 0
    below_class_bound: int = 0
    handshake_failures: int = 0
    averaging_failures: int = 0
    witnesses_by_kind: dict = field(default_factory=lambda: {EDGE: 0, PATH: 0})
    certificate_meets_class_bound: int = 0
    # (n, hull size) -> number of instances without a separation witness
    witness_failure_shapes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not (self.witness_failures or self.unsound_certificates or self.below_class_bound
                    or self.handshake_failures or self.averaging_failures)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d


def fuzz_corpus(count: int, seed: int, n_range: tuple[int, int] = (3, 15)) -> Iterator[PointSet]:
    """The deterministic fuzz corpus: ``count`` random sets with n uniform in ``n_range``."""
    lo, hi = n_range
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(lo, hi + 1))
        yield random_point_set(n, rng)


def lemma_fuzz(count: int, seed: int, n_range: tuple[int, int] = (3, 15)) -> FuzzReport:
    """Check the lemma, certificate soundness, the class bound and the counting identities."""
    report = FuzzReport()
    for P in fuzz_corpus(count, seed, n_range):
        n = len(P)
        report.instances += 1
        M = crossing_matrix(P.orientations)
        lcr = int(M.max()) if n >= 4 else 0
        total = convex_quadrilaterals(P.orientations)
        if int(np.triu(M, k=1).sum()) != 2 * total:
            report.handshake_failures += 1
        if lcr < averaging_bound(n, total):
            report.averaging_failures += 1
        if lcr < lower_bound_class(n):
            report.below_class_bound += 1
        try:
            w = find_separation_witness(P)
            report.witnesses_by_kind[w.kind] += 1
        except LemmaViolation:
            report.witness_failures += 1
            shape = f"n={n},hull={len(convex_hull(P))}"
            report.witness_failure_shapes[shape] = report.witness_failure_shapes.get(shape, 0) + 1
            continue
        try:
            cert = lemma_lower_bound(P, lcr=lcr)
            if cert.edge_bound >= lower_bound_class(n):
                report.certificate_meets_class_bound += 1
        except LemmaViolation:
            report.unsound_certificates += 1
    return report

