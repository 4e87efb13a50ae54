"""Randomized hill-climbing for drawings with a small local crossing number.

Points live on the integer grid [-grid_bound, grid_bound]^2. A move relocates
one point to a random grid location within the current radius and is undone
if it creates a collinear triple or a repeated point, or if it makes the
objective worse. The objective is (max crossings on an edge, number of edges
attaining it), compared lexicographically; equal scores are accepted so the
walk can cross plateaus.
"""
from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .constructions import construct_three_arcs
from .crossings import crossing_matrix
from .errors import LcrError
from .formula import lcr_formula
from .geometry import PointSet, orientation_table
from .separation import random_point_set

log = logging.getLogger(__name__)

DEFAULT_SEED = 20240617
DEFAULT_RESTARTS = 64
DEFAULT_MOVES = 20_000
DEFAULT_GRID_BOUND = 100_000


@dataclass(frozen=True)
class SearchConfig:
    n: int
    target: int
    seed: int = DEFAULT_SEED
    restarts: int = DEFAULT_RESTARTS
    moves_per_restart: int = DEFAULT_MOVES
    grid_bound: int = DEFAULT_GRID_BOUND

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"search needs n >= 3, got {self.n}")
        for name in ("restarts", "moves_per_restart", "grid_bound"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.target < 0:
            raise ValueError("target must be nonnegative")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")
        # the int64 orientation arithmetic needs (2 * grid_bound)**2 * 2 < 2**63
        if self.grid_bound >= 2**30:
            raise ValueError("grid_bound must be below 2**30")

    @property
    def unsatisfiable(self) -> bool:
        """True when the target is below the proven value, so no search can succeed."""
        return self.target < lcr_formula(self.n).value


@dataclass
class SearchResult:
    best: PointSet
    best_lcr: int
    achieved_target: bool
    iterations_used: int
    best_restart: int
    restarts: list[dict] = field(default_factory=list)

    def run_log(self, cfg: SearchConfig) -> dict:
        return {
            "config": asdict(cfg),
            "formula_value": lcr_formula(cfg.n).value,
            "best_lcr": self.best_lcr,
            "achieved_target": self.achieved_target,
            "iterations_used": self.iterations_used,
            "best_restart": self.best_restart,
            "restarts": self.restarts,
        }


def _orient_rows(X: np.ndarray, i: int) -> np.ndarray:
    """R[j, k] = sign orient(X_i, X_j, X_k)."""
    dx = X[:, 0] - X[i, 0]
    dy = X[:, 1] - X[i, 1]
    det = dx[:, None] * dy[None, :] - dy[:, None] * dx[None, :]
    return np.sign(det).astype(np.int8)


def _score(M: np.ndarray) -> tuple[int, int]:
    top = int(M.max())
    return top, int((M == top).sum())


def _is_general(T: np.ndarray) -> bool:
    n = T.shape[0]
    i, j, k = np.indices((n, n, n))
    return not ((T == 0) & (i < j) & (j < k)).any()


def _three_arc_seed(n: int, grid_bound: int) -> np.ndarray | None:
    """The three-arc set scaled onto the grid, or None if rounding breaks general position."""
    S = construct_three_arcs(n)
    xs, ys = S.points.integer_coords
    big = max(max(abs(v) for v in xs), max(abs(v) for v in ys))
    # exact rounding of v * grid_bound / big
    X = np.array([[(2 * x * grid_bound + big) // (2 * big), (2 * y * grid_bound + big) // (2 * big)]
                  for x, y in zip(xs, ys)], dtype=np.int64)
    if not _is_general(orientation_table(X[:, 0].tolist(), X[:, 1].tolist())):
        return None
    return X


def _random_start(n: int, rng: np.random.Generator, grid_bound: int) -> np.ndarray:
    P = random_point_set(n, rng, bound=2 * grid_bound + 1)
    xs, ys = P.integer_coords
    return np.array([xs, ys], dtype=np.int64).T - grid_bound


def _climb(cfg: SearchConfig, restart: int) -> dict:
    """One restart. Returns the final coordinates and bookkeeping."""
    n, G = cfg.n, cfg.grid_bound
    rng = np.random.default_rng([cfg.seed, restart])
    X = _three_arc_seed(n, G) if restart % 2 == 0 else None
    start = "three-arcs"
    if X is None:
        X, start = _random_start(n, rng, G), "random"
    T = orientation_table(X[:, 0].tolist(), X[:, 1].tolist())
    M = crossing_matrix(T)
    score = _score(M)
    floor = lcr_formula(n).value
    radius = max(1, G // 2)
    halve_every = max(1, cfg.moves_per_restart // 8)
    accepted = moves = 0
    while moves < cfg.moves_per_restart and score[0] > cfg.target:
        moves += 1
        i = int(rng.integers(n))
        old = X[i].copy()
        X[i] = np.clip(old + rng.integers(-radius, radius + 1, size=2), -G, G)
        R = _orient_rows(X, i)
        off = ~np.eye(n, dtype=bool)
        off[i, :] = off[:, i] = False
        if (R[off] == 0).any():
            X[i] = old
            continue
        saved = (T[i].copy(), T[:, i].copy(), T[:, :, i].copy())
        T[i], T[:, i], T[:, :, i] = R, -R, R
        M_new = crossing_matrix(T)
        new = _score(M_new)
        if new <= score:
            if new[0] < floor:
                raise LcrError(f"found a drawing with lcr {new[0]} below the proven value {floor}")
            score, M = new, M_new
            accepted += 1
            if accepted % halve_every == 0:
                radius = max(1, radius // 2)
        else:
            X[i] = old
            T[i], T[:, i], T[:, :, i] = saved
    return {
        "restart": restart,
        "start": start,
        "lcr": score[0],
        "moves": moves,
        "accepted": accepted,
        "coords": X.tolist(),
    }


def _workers() -> int:
    raw = os.environ.get("LCR_THREADS", "").strip()
    n = int(raw) if raw else 0
    return n if n > 0 else (os.cpu_count() or 1)


def search_witness(cfg: SearchConfig, workers: int | None = None) -> SearchResult:
    """Run restarts in index order until one reaches the target.

    The result depends only on ``cfg``: with several workers, restarts run in
    batches, and the winner is still the lowest-index restart that reached the
    target. ``iterations_used`` counts moves of every restart up to the winner.
    """
    workers = _workers() if workers is None else max(1, workers)
    runs: list[dict] = []
    if workers == 1:
        for r in range(cfg.restarts):
            runs.append(_climb(cfg, r))
            log.debug("restart %d: lcr %d after %d moves", r, runs[-1]["lcr"], runs[-1]["moves"])
            if runs[-1]["lcr"] <= cfg.target:
                break
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for lo in range(0, cfg.restarts, workers):
                batch = range(lo, min(cfg.restarts, lo + workers))
                runs.extend(pool.map(_climb, [cfg] * len(batch), batch))
                if any(run["lcr"] <= cfg.target for run in runs):
                    break
        hit = next((k for k, run in enumerate(runs) if run["lcr"] <= cfg.target), None)
        if hit is not None:
            runs = runs[: hit + 1]

    best = min(runs, key=lambda run: (run["lcr"], run["restart"]))
    P = PointSet.from_coords([tuple(c) for c in best["coords"]])
    lcr = int(crossing_matrix(P.orientations).max()) if cfg.n >= 4 else 0
    if lcr != best["lcr"]:
        raise LcrError(f"incremental bookkeeping drifted: {best['lcr']} vs recomputed {lcr}")
    summary = [{k: v for k, v in run.items() if k != "coords"} for run in runs]
    return SearchResult(
        best=P,
        best_lcr=lcr,
        achieved_target=lcr <= cfg.target,
        iterations_used=sum(run["moves"] for run in runs),
        best_restart=best["restart"],
        restarts=summary,
    )


def verify_floor_by_sampling(n: int, samples: int, seed: int = DEFAULT_SEED) -> int:
    """Smallest local crossing number over ``samples`` random general-position sets."""
    if n < 3 or samples < 1:
        raise ValueError("need n >= 3 and samples >= 1")
    rng = np.random.default_rng(seed)
    best = None
    for _ in range(samples):
        P = random_point_set(n, rng)
        lcr = int(crossing_matrix(P.orientations).max()) if n >= 4 else 0
        best = lcr if best is None else min(best, lcr)
    floor = lcr_formula(n).value
    if best < floor:
        raise LcrError(f"sampled a drawing with lcr {best} below the proven value {floor}")
    return best
