"""Catalog of finite-dimensional normed spaces and their duality mappings.

Supported norms: lp (1 < p < inf, "l2" is lp with p=2), l1, linf, and a
2-D real "mixed" norm that is Euclidean on the quadrants x1*x2 >= 0 and
the max norm on x1*x2 <= 0.  For each catalog norm the duality mapping
J(x) = {x* : ||x*||_* = 1, x*(x) = ||x||} is available in closed form,
either as a singleton (smooth points) or as the extreme points of the
supporting face.  Functionals act by the plain coordinate pairing
x*(z) = sum_i a_i z_i (no conjugation is baked into the pairing).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

REAL = "real"
COMPLEX = "complex"

# Closed-form membership checks; searched quantities get looser bounds.
CLOSED_FORM_TOL = 1e-9
SEARCH_TOL_2D = 1e-7
SEARCH_TOL_HIGH = 1e-5

_ZERO_TOL = 1e-14  # coordinate considered exactly zero on the unit sphere
_MAX_EXTREME_COMBOS = 256

_KIND_CODES = {"lp": 0, "l1": 1, "linf": 2, "mixed": 3}


class DimensionMismatchError(ValueError):
    """Operand shape does not match the ambient space."""


@dataclass(frozen=True)
class NormedSpace:
    dim: int
    kind: str  # "lp" | "l1" | "linf" | "mixed"
    p: float | None = None
    field: str = REAL

    def __post_init__(self):
        if not 2 <= self.dim <= 8:
            raise ValueError(f"dim must be in [2, 8], got {self.dim}")
        if self.kind not in _KIND_CODES:
            raise ValueError(f"unknown norm kind {self.kind!r}")
        if self.field not in (REAL, COMPLEX):
            raise ValueError(f"field must be 'real' or 'complex', got {self.field!r}")
        if self.kind == "lp":
            if self.p is None or not 1.0 < self.p < np.inf:
                raise ValueError(f"lp requires p in (1, inf), got {self.p}")
        elif self.p is not None:
            raise ValueError(f"p is only meaningful for lp, got kind={self.kind!r}")
        if self.kind == "mixed" and (self.dim != 2 or self.field != REAL):
            raise ValueError("mixed norm requires dim=2 and field=real")

    # ------------------------------------------------------------------
    # construction helpers
    # ------------------------------------------------------------------

    @classmethod
    def from_string(cls, spec: str, dim: int = 2, field: str = REAL) -> "NormedSpace":
        """Parse a CLI-style norm name: "lp:<p>", "l1", "linf", "l2", "mixed"."""
        s = spec.strip().lower()
        if s.startswith("lp:"):
            return cls(dim, "lp", float(s[3:]), field)
        if s == "l2":
            return cls(dim, "lp", 2.0, field)
        if s in ("l1", "linf", "mixed"):
            return cls(dim, s, None, field)
        raise ValueError(f"unknown space spec {spec!r}")

    @property
    def dtype(self):
        return np.complex128 if self.field == COMPLEX else np.float64

    @property
    def kind_code(self) -> int:
        return _KIND_CODES[self.kind]

    @property
    def tol(self) -> float:
        return SEARCH_TOL_2D if self.dim == 2 else SEARCH_TOL_HIGH

    def as_vector(self, coords) -> np.ndarray:
        x = np.asarray(coords, dtype=self.dtype)
        if x.shape != (self.dim,):
            raise DimensionMismatchError(
                f"expected a vector of dim {self.dim}, got shape {x.shape}"
            )
        if not np.all(np.isfinite(x.view(np.float64) if x.dtype == np.complex128 else x)):
            raise ValueError("vector has non-finite entries")
        return x

    # ------------------------------------------------------------------
    # norms
    # ------------------------------------------------------------------

    def norm(self, x) -> float | np.ndarray:
        """Norm of a vector, or row-wise norms of an (m, dim) array."""
        x = np.asarray(x, dtype=self.dtype)
        ax = np.abs(x)
        if self.kind == "lp":
            return (ax**self.p).sum(axis=-1) ** (1.0 / self.p)
        if self.kind == "l1":
            return ax.sum(axis=-1)
        if self.kind == "linf":
            return ax.max(axis=-1)
        # mixed
        x1, x2 = x[..., 0], x[..., 1]
        return np.where(x1 * x2 >= 0, np.hypot(x1, x2), np.maximum(np.abs(x1), np.abs(x2)))

    def dual_norm(self, a) -> float | np.ndarray:
        a = np.asarray(a, dtype=self.dtype)
        aa = np.abs(a)
        if self.kind == "lp":
            q = self.p / (self.p - 1.0)
            return (aa**q).sum(axis=-1) ** (1.0 / q)
        if self.kind == "l1":
            return aa.max(axis=-1)
        if self.kind == "linf":
            return aa.sum(axis=-1)
        # mixed: polar of the unit ball. Candidates: the two Euclidean arcs
        # and the corners +-(-1, 1).
        a1, a2 = a[..., 0], a[..., 1]

        def arc(u, v):
            both = (u > 0) & (v > 0)
            return np.where(both, np.hypot(u, v), np.maximum(u, v))

        return np.maximum(np.maximum(arc(a1, a2), arc(-a1, -a2)), np.abs(a1 - a2))

    def unitize(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=self.dtype)
        n = self.norm(x)
        if np.any(n <= 0):
            raise ValueError("cannot normalize the zero vector")
        return x / (n[..., None] if np.ndim(n) else n)

    def check_unit(self, x, tol: float = CLOSED_FORM_TOL) -> np.ndarray:
        x = self.as_vector(x)
        if abs(self.norm(x) - 1.0) > max(tol, 1e-7):
            raise ValueError(f"expected a unit vector, got norm {self.norm(x)!r}")
        return x

    def random_unit(self, rng: np.random.Generator, m: int | None = None) -> np.ndarray:
        shape = (self.dim,) if m is None else (m, self.dim)
        u = rng.standard_normal(shape)
        if self.field == COMPLEX:
            u = u + 1j * rng.standard_normal(shape)
        return self.unitize(u)

    # ------------------------------------------------------------------
    # duality mapping
    # ------------------------------------------------------------------

    def duality_set(self, x) -> "DualitySet":
        """J(x) for a unit vector x: a singleton at smooth points, else the
        extreme points of the supporting face."""
        x = self.check_unit(x)
        if self.kind == "lp":
            return DualitySet((_lp_functional(x, self.p),), True)
        if self.kind == "l1":
            return _l1_duality(x, self.field)
        if self.kind == "linf":
            return _linf_duality(x)
        return _mixed_duality(x)

    def supporting_functional(self, x, y=None) -> np.ndarray:
        """An element of J(x); when y is given, the one maximizing |x*(y)|
        over the supporting face (attained at an extreme point)."""
        x = self.check_unit(x)
        if self.kind == "lp":
            return _lp_functional(x, self.p)
        if y is None:
            y = np.zeros(self.dim, dtype=self.dtype)
        y = np.asarray(y, dtype=self.dtype)
        if self.kind == "l1":
            nz = np.abs(x) >= _ZERO_TOL
            base = (np.where(nz, np.conj(_phase(x)), 0.0) * y).sum()
            u = base / abs(base) if abs(base) > _ZERO_TOL else 1.0
            # align zero-coordinate contributions with the phase of the base
            return np.where(nz, np.conj(_phase(x)), u * np.conj(_phase(y)))
        if self.kind == "linf":
            m = np.abs(x).max()
            idx = np.flatnonzero(np.abs(x) >= m - _ZERO_TOL)
            best = idx[np.argmax(np.abs(y[idx]))]
            a = np.zeros(self.dim, dtype=self.dtype)
            a[best] = np.conj(_phase(x[best]))
            return a
        # mixed
        cands = _mixed_duality(x).functionals
        vals = [abs(np.dot(a, y)) for a in cands]
        return cands[int(np.argmax(vals))]

    def support_values(self, X, Y) -> np.ndarray:
        """Row-wise sup over J(x_i) of |x*(y_i)| for unit rows X and arbitrary
        rows Y, in closed form (the sup of the modulus of a linear functional
        over a face is attained at an extreme point)."""
        X = np.asarray(X, dtype=self.dtype)
        Y = np.asarray(Y, dtype=self.dtype)
        aX = np.abs(X)
        if self.kind == "lp":
            A = np.where(aX >= _ZERO_TOL, np.conj(_phase(X)) * aX ** (self.p - 1.0), 0.0)
            return np.abs((A * Y).sum(axis=-1))
        if self.kind == "l1":
            nz = aX >= _ZERO_TOL
            base = np.abs((np.where(nz, np.conj(_phase(X)), 0.0) * Y).sum(axis=-1))
            extra = (np.abs(Y) * ~nz).sum(axis=-1)
            return base + extra
        if self.kind == "linf":
            m = aX.max(axis=-1, keepdims=True)
            tie = aX >= m - _ZERO_TOL
            return np.where(tie, np.abs(Y), -np.inf).max(axis=-1)
        # mixed
        x1, x2 = X[..., 0], X[..., 1]
        y1, y2 = Y[..., 0], Y[..., 1]
        prod = x1 * x2
        arc = np.abs(x1 * y1 + x2 * y2)
        gap = np.abs(x1) - np.abs(x2)
        sq = np.where(gap > _ZERO_TOL, np.abs(y1),
                      np.where(gap < -_ZERO_TOL, np.abs(y2),
                               np.maximum(np.abs(y1), np.abs(y2))))
        axis = np.where(np.abs(x1) > np.abs(x2), np.abs(y1), np.abs(y2))
        return np.where(prod > _ZERO_TOL, arc, np.where(prod < -_ZERO_TOL, sq, axis))

    # ------------------------------------------------------------------
    # point classification
    # ------------------------------------------------------------------

    def is_smooth_point(self, x) -> bool:
        return self.duality_set(x).singleton

    def is_rotund_point(self, x) -> bool:
        """Midpoint criterion: x is not rotund iff some unit y != x has
        ||(x+y)/2|| = 1 (endpoints of sphere segments count as not rotund)."""
        x = self.check_unit(x)
        if self.kind == "lp":
            return True  # strictly convex
        if self.dim != 2 or self.field != REAL:
            # catalog rule only beyond the planar real case
            return False
        return not _segment_partner_exists(self, x)


@dataclass(frozen=True)
class DualitySet:
    functionals: tuple = field(default_factory=tuple)
    singleton: bool = False


def pair(a, z):
    """Dual pairing x*(z) = sum_i a_i z_i (no conjugation)."""
    return np.dot(np.asarray(a), np.asarray(z))


def _phase(x):
    """x/|x| with phase 1 at zero entries."""
    ax = np.abs(x)
    return np.where(ax >= _ZERO_TOL, x / np.maximum(ax, _ZERO_TOL), 1.0)


def _lp_functional(x, p):
    ax = np.abs(x)
    return np.where(ax >= _ZERO_TOL, np.conj(_phase(x)) * ax ** (p - 1.0), 0.0)


def _l1_duality(x, fld):
    ax = np.abs(x)
    zeros = np.flatnonzero(ax < _ZERO_TOL)
    base = np.conj(_phase(x))
    if zeros.size == 0:
        return DualitySet((base,), True)
    # Real: all sign completions at zero coordinates are the extreme points.
    # Complex: the extreme set is a torus; list the fourth-root phases as a
    # finite sample (values computed elsewhere use the exact closed form).
    phases = (1.0, -1.0) if fld == REAL else (1.0, -1.0, 1.0j, -1.0j)
    combos = itertools.product(phases, repeat=len(zeros))
    out = []
    for combo in itertools.islice(combos, _MAX_EXTREME_COMBOS):
        a = base.copy()
        a[zeros] = combo
        out.append(a)
    return DualitySet(tuple(out), False)


def _linf_duality(x):
    ax = np.abs(x)
    m = ax.max()
    idx = np.flatnonzero(ax >= m - _ZERO_TOL)
    out = []
    for i in idx:
        a = np.zeros_like(x)
        a[i] = np.conj(_phase(x[i]))
        out.append(a)
    return DualitySet(tuple(out), len(out) == 1)


def _mixed_duality(x):
    x1, x2 = float(x[0]), float(x[1])
    prod = x1 * x2
    if prod > _ZERO_TOL:
        # Euclidean arc: x itself is the (unit) supporting functional.
        return DualitySet((np.array([x1, x2]),), True)
    e1 = np.array([np.sign(x1) if x1 else 0.0, 0.0])
    e2 = np.array([0.0, np.sign(x2) if x2 else 0.0])
    if prod < -_ZERO_TOL:
        gap = abs(x1) - abs(x2)
        if gap > _ZERO_TOL:
            return DualitySet((e1,), True)
        if gap < -_ZERO_TOL:
            return DualitySet((e2,), True)
        return DualitySet((e1, e2), False)  # corner of the square part
    # axis point
    return DualitySet((e1 if abs(x1) > abs(x2) else e2,), True)


# The partner must stay this far from x so that strict convexity shows up as
# a midpoint-norm deficit of order curvature * _PARTNER_GAP^2 / 8 >> _MID_TOL;
# partners along a flat segment keep midpoint norm exactly 1 at any distance.
_PARTNER_GAP = 1e-3
_MID_TOL = 1e-8


def _segment_partner_exists(space, x, coarse=4096):
    """Search the planar sphere for y != x with ||(x+y)/2|| ~ 1."""
    th = np.linspace(0.0, 2.0 * np.pi, coarse, endpoint=False)
    Y = space.unitize(np.stack([np.cos(th), np.sin(th)], axis=1))
    far = np.abs(Y - x).max(axis=1) > _PARTNER_GAP
    mids = space.norm((Y + x) / 2.0)
    mids = np.where(far, mids, -np.inf)
    k = int(np.argmax(mids))
    best, bt = mids[k], th[k]
    # local refinement around the best candidate
    h = 2.0 * np.pi / coarse
    for _ in range(4):
        loc = np.linspace(bt - h, bt + h, 65)
        Y = space.unitize(np.stack([np.cos(loc), np.sin(loc)], axis=1))
        far = np.abs(Y - x).max(axis=1) > _PARTNER_GAP
        vals = np.where(far, space.norm((Y + x) / 2.0), -np.inf)
        k = int(np.argmax(vals))
        if vals[k] > best:
            best, bt = vals[k], loc[k]
        h /= 32.0
    return best >= 1.0 - _MID_TOL
