"""Validated finite metric spaces, coarse disjoint unions, and bounded windows.

Everything downstream (spectra, embeddings, scans) consumes the two core
containers defined here: `FiniteMetricSpace` for a single validated block
and `BlockSpace` for an ordered union of blocks whose mutual distances
grow with the block indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import (
    AsymmetricError,
    EmptyInputError,
    NegativeEntryError,
    TriangleViolationError,
    ZeroDistanceError,
)

METRIC_TOL = 1e-9


def _check_axioms(d: np.ndarray, tol: float) -> None:
    n = d.shape[0]
    bad = np.argwhere(~np.isclose(d, d.T, rtol=0.0, atol=tol))
    if bad.size:
        i, j = bad[0]
        raise AsymmetricError(int(i), int(j))
    bad = np.argwhere(d < -tol)
    if bad.size:
        i, j = bad[0]
        raise NegativeEntryError(int(i), int(j), float(d[bad[0][0], bad[0][1]]))
    diag = np.abs(np.diag(d))
    if diag.size and diag.max() > tol:
        i = int(np.argmax(diag))
        raise ZeroDistanceError(i, i, float(d[i, i]))
    off = d + np.eye(n)  # mask the diagonal
    bad = np.argwhere(off <= tol)
    if bad.size:
        i, j = bad[0]
        raise ZeroDistanceError(int(i), int(j), float(d[i, j]))
    for k in range(n):
        via = d[:, k, None] + d[None, k, :]
        slack = d - via
        worst = np.unravel_index(np.argmax(slack), slack.shape)
        if slack[worst] > tol:
            i, j = (int(worst[0]), int(worst[1]))
            raise TriangleViolationError(i, j, k, float(slack[worst]))


@dataclass(frozen=True)
class FiniteMetricSpace:
    """A labeled point set with a symmetric distance matrix.

    Construct through `validate_metric` unless the matrix is already known
    to satisfy the metric axioms.
    """

    labels: tuple[str, ...]
    dist: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.dist, dtype=float)
        d.setflags(write=False)
        object.__setattr__(self, "dist", d)
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        if len(self.labels) != d.shape[0] or d.shape[0] != d.shape[1]:
            raise ValueError("labels and matrix size disagree")

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def diam(self) -> float:
        return float(self.dist.max()) if len(self) else 0.0

    def restrict(self, points: Sequence[int]) -> "FiniteMetricSpace":
        idx = list(points)
        return FiniteMetricSpace(
            tuple(self.labels[i] for i in idx), self.dist[np.ix_(idx, idx)]
        )

    def relabel(self, labels: Sequence[str]) -> "FiniteMetricSpace":
        return FiniteMetricSpace(tuple(labels), self.dist)


def validate_metric(
    matrix, labels: Sequence[str] | None = None, tol: float = METRIC_TOL
) -> FiniteMetricSpace:
    """Check the metric axioms and wrap the matrix on success.

    Raises AsymmetricError, NegativeEntryError, ZeroDistanceError, or
    TriangleViolationError (naming the offending triple) when they fail.
    Tolerance is additive; all constructions in this package produce
    small exact sums, so anything past rounding is a real violation.
    """
    d = np.asarray(matrix, dtype=float)
    if d.ndim != 2 or d.shape[0] != d.shape[1]:
        raise ValueError("matrix must be square")
    if not np.all(np.isfinite(d)):
        raise ValueError("matrix entries must be finite")
    _check_axioms(d, tol)
    if labels is None:
        labels = tuple(f"p{i}" for i in range(d.shape[0]))
    return FiniteMetricSpace(tuple(labels), d)


@dataclass(frozen=True)
class BlockSpace:
    """Coarse disjoint union of finite blocks.

    Cross-block distances follow the deterministic offset rule
    d(x, y) = R_n + R_m with R_k = k + sum of the first k block diameters
    (blocks indexed from 1).  The rule keeps the triangle inequality and
    pushes distinct blocks apart monotonically in the indices.

    `graphs` and `injectivity_radii` are optional per-block metadata used
    by the spectral scan and by the injectivity-based exclusion rule.
    """

    blocks: tuple[FiniteMetricSpace, ...]
    offsets: tuple[float, ...]
    graphs: tuple[object, ...] | None = None
    injectivity_radii: tuple[float, ...] | None = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    UNION_RULE = "k_plus_cum_diam"

    def __post_init__(self):
        if not self.blocks:
            raise EmptyInputError("a BlockSpace needs at least one block")
        if len(self.offsets) != len(self.blocks):
            raise ValueError("offsets and blocks disagree")
        if self.graphs is not None and len(self.graphs) != len(self.blocks):
            raise ValueError("graphs metadata and blocks disagree")
        if self.injectivity_radii is not None and len(self.injectivity_radii) != len(
            self.blocks
        ):
            raise ValueError("radii metadata and blocks disagree")

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    @property
    def n_points(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_start(self, k: int) -> int:
        """Global index of the first point of 1-based block k."""
        return sum(len(b) for b in self.blocks[: k - 1])

    def block_of(self, i: int) -> int:
        """1-based block index containing global point i."""
        for k in range(1, self.n_blocks + 1):
            start = self.block_start(k)
            if start <= i < start + len(self.blocks[k - 1]):
                return k
        raise IndexError(i)

    def global_labels(self) -> tuple[str, ...]:
        out = []
        for k, b in enumerate(self.blocks, start=1):
            out.extend(f"b{k}:{lbl}" for lbl in b.labels)
        return tuple(out)

    def materialize(self) -> FiniteMetricSpace:
        """Assemble the full distance matrix (cached; single block passes through)."""
        if "space" in self._cache:
            return self._cache["space"]
        if self.n_blocks == 1:
            space = self.blocks[0]
        else:
            n = self.n_points
            d = np.zeros((n, n))
            starts = [self.block_start(k) for k in range(1, self.n_blocks + 1)]
            for k, b in enumerate(self.blocks):
                s = starts[k]
                d[s : s + len(b), s : s + len(b)] = b.dist
            for k in range(self.n_blocks):
                for m in range(k + 1, self.n_blocks):
                    cross = self.offsets[k] + self.offsets[m]
                    sk, sm = starts[k], starts[m]
                    d[sk : sk + len(self.blocks[k]), sm : sm + len(self.blocks[m])] = cross
                    d[sm : sm + len(self.blocks[m]), sk : sk + len(self.blocks[k])] = cross
            space = FiniteMetricSpace(self.global_labels(), d)
        self._cache["space"] = space
        return space


def coarse_disjoint_union(
    blocks: Iterable[FiniteMetricSpace],
    graphs: Sequence[object] | None = None,
    injectivity_radii: Sequence[float] | None = None,
) -> BlockSpace:
    """Join validated blocks into a BlockSpace under the offset rule."""
    blocks = tuple(blocks)
    if not blocks:
        raise EmptyInputError("coarse_disjoint_union needs at least one block")
    offsets = []
    cum = 0.0
    for k, b in enumerate(blocks, start=1):
        cum += b.diam
        offsets.append(float(k) + cum)
    return BlockSpace(
        blocks,
        tuple(offsets),
        graphs=tuple(graphs) if graphs is not None else None,
        injectivity_radii=tuple(float(r) for r in injectivity_radii)
        if injectivity_radii is not None
        else None,
    )


@dataclass(frozen=True)
class Window:
    """A bounded point set of diameter at most `radius_bound`, clear of the
    excluded region of its parent space."""

    parent: object
    points: tuple[int, ...]
    radius_bound: float
    excluded: str
    block: int | None = None
    center: int | None = None

    @property
    def label(self) -> str:
        blk = self.block if self.block is not None else 0
        return f"b{blk}p{min(self.points)}n{len(self.points)}"

    def subspace(self) -> FiniteMetricSpace:
        space = (
            self.parent.materialize()
            if isinstance(self.parent, BlockSpace)
            else self.parent
        )
        return space.restrict(self.points)

    @property
    def diam(self) -> float:
        return self.subspace().diam


def enumerate_windows(
    space: BlockSpace, R: float, exclude_below: int
) -> list[Window]:
    """Catalogue of scan windows at scale R.

    Blocks with 1-based index < `exclude_below` form the excluded region.
    Candidates are the closed balls of radius ceil(R/2) around every
    remaining point (within the remaining region) plus each remaining
    whole block; candidates whose computed diameter exceeds R are dropped
    and duplicates are merged.  The catalogue trades exhaustiveness over
    all bounded subsets (exponentially many) for every diameter scale
    being represented, so scan results are certified on the catalogue
    only.
    """
    if R <= 0:
        raise ValueError("R must be positive")
    windows: list[Window] = []
    seen: set[frozenset] = set()
    if exclude_below > space.n_blocks:
        return windows
    full = space.materialize()
    d = full.dist
    allowed = []
    for k in range(max(1, exclude_below), space.n_blocks + 1):
        start = space.block_start(k)
        allowed.extend(range(start, start + len(space.blocks[k - 1])))
    allowed_arr = np.array(allowed, dtype=int)
    excluded_desc = f"blocks<{exclude_below}"
    radius = math.ceil(R / 2.0)

    def _push(pts: Sequence[int], block: int | None, center: int | None) -> None:
        key = frozenset(pts)
        if key in seen or len(pts) < 1:
            return
        sub = d[np.ix_(list(pts), list(pts))]
        if sub.max(initial=0.0) > R + METRIC_TOL:
            return
        seen.add(key)
        windows.append(
            Window(space, tuple(sorted(pts)), float(R), excluded_desc, block, center)
        )

    for c in allowed:
        ball = allowed_arr[d[c, allowed_arr] <= radius + METRIC_TOL]
        _push([int(x) for x in ball], space.block_of(c), c)
    for k in range(max(1, exclude_below), space.n_blocks + 1):
        start = space.block_start(k)
        pts = list(range(start, start + len(space.blocks[k - 1])))
        _push(pts, k, None)
    return windows


@dataclass(frozen=True)
class ControlPair:
    """Piecewise-linear lower/upper distortion controls.

    Breakpoints are (t, value) pairs sorted by t; evaluation interpolates
    linearly and extrapolates the last segment's slope.  The lower control
    is unbounded exactly when that final slope is positive.
    """

    rho_minus: tuple[tuple[float, float], ...]
    rho_plus: tuple[tuple[float, float], ...]

    def __post_init__(self):
        for name in ("rho_minus", "rho_plus"):
            pts = tuple(
                (float(t), float(v)) for t, v in getattr(self, name)
            )
            if not pts:
                raise ValueError(f"{name} needs at least one breakpoint")
            ts = [t for t, _ in pts]
            vs = [v for _, v in pts]
            if any(b < a for a, b in zip(ts, ts[1:])):
                raise ValueError(f"{name} breakpoints must be sorted")
            if any(b < a - 1e-12 for a, b in zip(vs, vs[1:])):
                raise ValueError(f"{name} must be non-decreasing")
            object.__setattr__(self, name, pts)
        grid = sorted({t for t, _ in self.rho_minus} | {t for t, _ in self.rho_plus})
        for t in grid:
            if self.lower(t) > self.upper(t) + 1e-9:
                raise ValueError("rho_minus exceeds rho_plus at t=%g" % t)

    @staticmethod
    def _eval(pts: tuple[tuple[float, float], ...], t: float) -> float:
        ts = np.array([p[0] for p in pts])
        vs = np.array([p[1] for p in pts])
        if t <= ts[0]:
            return float(vs[0])
        if t >= ts[-1]:
            if len(ts) >= 2 and ts[-1] > ts[-2]:
                slope = (vs[-1] - vs[-2]) / (ts[-1] - ts[-2])
            else:
                slope = 0.0
            return float(vs[-1] + slope * (t - ts[-1]))
        return float(np.interp(t, ts, vs))

    def lower(self, t: float) -> float:
        return self._eval(self.rho_minus, t)

    def upper(self, t: float) -> float:
        return self._eval(self.rho_plus, t)

    @property
    def lower_unbounded(self) -> bool:
        pts = self.rho_minus
        if len(pts) < 2:
            return False
        return (pts[-1][1] - pts[-2][1]) > 0 and (pts[-1][0] - pts[-2][0]) > 0


def shortest_path_closure(weights: np.ndarray) -> np.ndarray:
    """Metric closure of a non-negative weight matrix (inf = no edge)."""
    from ._kernels import floyd_warshall

    w = np.array(weights, dtype=float)
    np.fill_diagonal(w, 0.0)
    return floyd_warshall(w)


ExclusionRule = Callable[[float], int]
