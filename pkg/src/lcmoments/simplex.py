"""Central hyperplane sections of the regular simplex.

A central section of the regular n-simplex is encoded by a unit normal with
zero coordinate sum; its (n-1)-volume equals sqrt(n+1)/(n-1)! times the
density at zero of the correspondingly weighted sum of i.i.d. standard
exponentials.  The density at zero is computed by inverting the
characteristic function,

    f(0) = (1/pi) * int_0^inf Re prod_j (1 + i w_j s)^(-1) ds,

over the nonzero weights w_j (zero weights contribute a factor one), with a
partial-fraction closed form as an independent route when the nonzero
weights are distinct.  A direct polytope-slicing oracle covers n in {2, 3}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSectionError, DomainError, NumericalError
from .specfun import DEFAULT_QUADRATURE, QuadratureConfig, integrate_adaptive

__all__ = [
    "WeightVector",
    "density_at_zero",
    "density_at_zero_residue",
    "section_volume",
    "MaxSectionResult",
    "maximize_section",
    "geometry_oracle_volume",
]

# weights at or below this magnitude are treated as exactly zero
ZERO_WEIGHT_TOL = 1e-12

# nonzero weights closer than this relative gap route away from the residue
# form, whose partial fractions cancel catastrophically near coincidence
DISTINCT_REL_GAP = 1e-8

# the two computation routes must agree this tightly whenever both apply
_ROUTE_AGREEMENT = 1e-8


@dataclass(frozen=True)
class WeightVector:
    """A unit vector with zero coordinate sum, the outer normal of a section."""

    a: np.ndarray

    def __post_init__(self):
        arr = np.array(self.a, dtype=float)
        if arr.ndim != 1 or arr.size < 2:
            raise DomainError("weight vector needs at least two coordinates")
        if not np.all(np.isfinite(arr)):
            raise DomainError("weight vector must be finite")
        if abs(float(arr.sum())) > 1e-12:
            raise DomainError(f"coordinates must sum to zero, got sum {arr.sum():.3e}")
        if abs(float(np.linalg.norm(arr)) - 1.0) > 1e-12:
            raise DomainError(f"vector must have unit norm, got {np.linalg.norm(arr):.15f}")
        arr.flags.writeable = False
        object.__setattr__(self, "a", arr)

    @classmethod
    def from_raw(cls, values, project: bool = False) -> "WeightVector":
        """Build from raw coordinates; ``project`` recentres and renormalises
        instead of validating strictly."""
        arr = np.array(values, dtype=float)
        if project:
            if arr.ndim != 1 or arr.size < 2:
                raise DomainError("weight vector needs at least two coordinates")
            arr = arr - arr.mean()
            norm = float(np.linalg.norm(arr))
            if norm <= 1e-14:
                raise DomainError("cannot normalise a vector with no zero-sum component")
            arr = arr / norm
        return cls(arr)

    def __len__(self) -> int:
        return int(self.a.size)


def _nonzero_weights(a: np.ndarray) -> np.ndarray:
    w = np.asarray(a, dtype=float)
    w = w[np.abs(w) > ZERO_WEIGHT_TOL]
    if w.size == 0:
        raise DomainError("all weights are zero")
    if w.size == 1 or not (np.any(w > 0.0) and np.any(w < 0.0)):
        raise DomainError("weights must include both signs for a density at zero")
    return w


def _weights_distinct(w: np.ndarray) -> bool:
    scale = float(np.max(np.abs(w)))
    diff = np.abs(w[:, None] - w[None, :])
    np.fill_diagonal(diff, np.inf)
    return bool(np.min(diff) > DISTINCT_REL_GAP * scale)


def _density_fourier(w: np.ndarray, cfg: QuadratureConfig) -> float:
    """Characteristic-function inversion over a ladder of scale knots.

    Each weight contributes structure to the integrand near s = 1/|w|, so
    the range is split there and refined geometrically out to the point
    where the crude bound prod_j min(1, 1/(|w_j| s)) integrates to below the
    absolute tolerance; the remaining tail is dropped.
    """
    aw = np.abs(w)
    m = aw.size

    def re_cf(s):
        return float(np.prod(1.0 / (1.0 + 1j * w * s)).real)

    scales = sorted({1.0 / float(x) for x in aw})
    inv_prod = float(np.prod(aw))
    upper = scales[-1]
    while upper ** (-(m - 1)) / (inv_prod * (m - 1)) > 0.5 * cfg.abs_tol:
        upper *= 4.0
    knots = [0.0]
    for s in scales:
        if s > knots[-1]:
            knots.append(s)
    while knots[-1] < upper:
        knots.append(min(4.0 * knots[-1], upper))
    total = 0.0
    for lo, hi in zip(knots[:-1], knots[1:]):
        total += integrate_adaptive(re_cf, lo, hi, cfg)
    return total / math.pi


def _residue_side(w: np.ndarray, positive: bool) -> tuple[float, float]:
    """Partial-fraction sum over one sign of poles, with its conditioning.

    Returns (value, cond) where cond is the smallest relative gap
    |w_j - w_k| / |w_j| over contributing j; the per-term rounding error
    grows like eps / cond.
    """
    total = 0.0
    cond = math.inf
    for j, wj in enumerate(w):
        if (wj > 0.0) != positive:
            continue
        diffs = wj - np.delete(w, j)
        cond = min(cond, float(np.min(np.abs(diffs))) / abs(wj))
        total += float(np.prod(wj / diffs)) / abs(wj)
    return total, cond


def density_at_zero_residue(weights) -> float:
    """Partial-fraction closed form; requires distinct nonzero weights.

    The density of the weighted sum is a signed mixture of one-sided
    exponentials, so f(0) can be read off the poles of either sign:
    f(0) = sum_{w_j > 0} (1/w_j) prod_{k != j} w_j/(w_j - w_k), and the
    mirror-image sum over negative weights.  Both are evaluated and the
    better-conditioned side is returned.
    """
    w = _nonzero_weights(weights.a if isinstance(weights, WeightVector) else weights)
    if not _weights_distinct(w):
        raise DomainError("residue form requires distinct nonzero weights")
    pos_val, pos_cond = _residue_side(w, positive=True)
    neg_val, neg_cond = _residue_side(w, positive=False)
    return pos_val if pos_cond >= neg_cond else neg_val


def density_at_zero(weights: WeightVector, cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Density at zero of the weighted exponential sum.

    Computed by characteristic-function inversion; whenever the nonzero
    weights are distinct the residue form is evaluated as well and the two
    routes must agree to 1e-8.
    """
    if not isinstance(weights, WeightVector):
        weights = WeightVector(np.asarray(weights, dtype=float))
    w = _nonzero_weights(weights.a)
    value = _density_fourier(w, cfg)
    if _weights_distinct(w):
        check = density_at_zero_residue(w)
        if abs(value - check) > _ROUTE_AGREEMENT * max(1.0, abs(value)):
            raise NumericalError(
                f"inversion and residue routes disagree: {value:.12g} vs {check:.12g}"
            )
    return value


def section_volume(weights: WeightVector, n: int, cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """vol_{n-1} of the central section with the given unit normal."""
    if n < 2:
        raise DomainError(f"sections need dimension n >= 2, got {n}")
    if len(weights) != n + 1:
        raise DomainError(f"normal of a {n}-simplex section needs {n + 1} coordinates")
    return math.sqrt(n + 1.0) / math.factorial(n - 1) * density_at_zero(weights, cfg)


# ---------------------------------------------------------------------------
# direct geometry oracle for low dimensions
# ---------------------------------------------------------------------------


def _section_polytope_vertices(a: np.ndarray) -> np.ndarray:
    """Vertices of simplex ∩ normal-hyperplane: simplex vertices lying on the
    hyperplane plus transversal edge intersections."""
    dim = a.size
    points = []
    for j in range(dim):
        if abs(a[j]) <= ZERO_WEIGHT_TOL:
            e = np.zeros(dim)
            e[j] = 1.0
            points.append(e)
    for j in range(dim):
        for k in range(j + 1, dim):
            if a[j] * a[k] < 0.0:
                lam = a[k] / (a[k] - a[j])
                pt = np.zeros(dim)
                pt[j] = lam
                pt[k] = 1.0 - lam
                points.append(pt)
    unique: list[np.ndarray] = []
    for pt in points:
        if all(np.linalg.norm(pt - u) > 1e-9 for u in unique):
            unique.append(pt)
    return np.array(unique)


def geometry_oracle_volume(weights: WeightVector, n: int) -> float:
    """Section volume by direct polytope slicing (n in {2, 3} only).

    Enumerates the vertices of the intersection polytope inside the affine
    hull of the simplex, then measures segment length (n = 2) or polygon
    area via the shoelace formula (n = 3).
    """
    if n not in (2, 3):
        raise DomainError(f"geometry oracle covers n in {{2, 3}}, got {n}")
    if len(weights) != n + 1:
        raise DomainError(f"normal of a {n}-simplex section needs {n + 1} coordinates")
    verts = _section_polytope_vertices(weights.a)
    if len(verts) < n:
        raise DegenerateSectionError(f"section degenerates to {len(verts)} vertex/vertices")
    if n == 2:
        if len(verts) != 2:
            raise DegenerateSectionError(f"segment section with {len(verts)} vertices")
        return float(np.linalg.norm(verts[0] - verts[1]))

    # orthonormal basis of the 2-plane {sum x = 0, <a, x> = 0} in R^4
    ones = np.ones(4) / 2.0
    u = weights.a - np.dot(weights.a, ones) * ones
    u = u / np.linalg.norm(u)
    basis = []
    for seed in np.eye(4):
        v = seed - np.dot(seed, ones) * ones - np.dot(seed, u) * u
        for b in basis:
            v -= np.dot(v, b) * b
        norm = np.linalg.norm(v)
        if norm > 1e-9:
            basis.append(v / norm)
        if len(basis) == 2:
            break
    centre = verts.mean(axis=0)
    coords = np.column_stack([(verts - centre) @ basis[0], (verts - centre) @ basis[1]])
    order = np.argsort(np.arctan2(coords[:, 1], coords[:, 0]))
    ring = coords[order]
    x, y = ring[:, 0], ring[:, 1]
    area = 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))))
    if area <= 1e-18:
        raise DegenerateSectionError("section polygon has zero area")
    return area


# ---------------------------------------------------------------------------
# optimisation over unit zero-sum normals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MaxSectionResult:
    a_star: WeightVector
    value: float
    max_evaluated: float
    evaluations: int


def _objective(raw: np.ndarray, cfg: QuadratureConfig) -> float:
    """Density at zero as a function of raw weights; residue route from the
    better-conditioned side when one exists, inversion otherwise."""
    w = raw[np.abs(raw) > ZERO_WEIGHT_TOL]
    if w.size < 2 or not (np.any(w > 0.0) and np.any(w < 0.0)):
        return 0.0
    value, cond = _residue_side(w, positive=True)
    if cond < 1e-4:
        value, cond = _residue_side(w, positive=False)
    if cond < 1e-4:
        return _density_fourier(w, cfg)
    return value


def _project_tangent(g: np.ndarray, a: np.ndarray) -> np.ndarray:
    g = g - g.mean()
    return g - np.dot(g, a) * a


def _renormalise(v: np.ndarray) -> np.ndarray:
    v = v - v.mean()
    return v / np.linalg.norm(v)


def maximize_section(
    n: int,
    restarts: int = 20,
    seed: int = 0,
    cfg: QuadratureConfig = DEFAULT_QUADRATURE,
) -> MaxSectionResult:
    """Maximise the density at zero over unit zero-sum normals.

    Projected finite-difference ascent with backtracking steps and random
    restarts; restart streams are derived from (seed, restart index) so the
    result does not depend on execution order.  The expected optimum is
    2^(-1/2), attained on normals supported on exactly two coordinates.
    """
    if n < 2:
        raise DomainError(f"need dimension n >= 2, got {n}")
    if restarts < 20:
        raise DomainError(f"need at least 20 restarts, got {restarts}")

    dim = n + 1
    tracked = {"max": -math.inf, "count": 0}

    def candidate_value(a: np.ndarray) -> float:
        val = _objective(a, cfg)
        tracked["count"] += 1
        if val > tracked["max"]:
            tracked["max"] = val
        return val

    def ascend(a: np.ndarray) -> tuple[np.ndarray, float]:
        val = candidate_value(a)
        for fd_step in (1e-5, 1e-7):
            for _ in range(200):
                grad = np.empty(dim)
                for i in range(dim):
                    probe = np.zeros(dim)
                    probe[i] = fd_step
                    grad[i] = (_objective(a + probe, cfg) - _objective(a - probe, cfg)) / (2.0 * fd_step)
                grad = _project_tangent(grad, a)
                gnorm = float(np.linalg.norm(grad))
                if gnorm < 1e-10:
                    break
                improved = False
                eta = 0.5
                for _ in range(20):
                    trial = _renormalise(a + eta * grad)
                    trial_val = candidate_value(trial)
                    if trial_val > val + 1e-13:
                        a, val = trial, trial_val
                        improved = True
                        break
                    eta *= 0.5
                if not improved:
                    break
        return a, val

    best_a, best_val = None, -math.inf
    for r in range(restarts):
        rng = np.random.default_rng((seed, r))
        start = rng.standard_normal(dim)
        start -= start.mean()
        norm = float(np.linalg.norm(start))
        if norm <= 1e-12:
            start = np.zeros(dim)
            start[0], start[1] = 1.0, -1.0
            norm = math.sqrt(2.0)
        a, val = ascend(start / norm)
        if val > best_val:
            best_a, best_val = a, val

    return MaxSectionResult(
        a_star=WeightVector.from_raw(best_a, project=True),
        value=best_val,
        max_evaluated=tracked["max"],
        evaluations=tracked["count"],
    )
