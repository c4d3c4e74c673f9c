"""Isometries of the upper half-plane via determinant-one 2x2 matrices.

The half-plane {x + iy : y > 0} carries the metric ds^2 = (dx^2 + dy^2)/y^2.
A real matrix ((a, b), (c, d)) with ad - bc = 1 acts on it by the Mobius map
z -> (az + b)/(cz + d); the matrices A and -A induce the identical map.  This
module is the scalar numerical core: the matrix and point types, the action
and its j-cocycle j(A, z) = cz + d, trace classification, and the metric
(closed-form distance plus a discretized path length used as its oracle).

All types are immutable values and all functions are pure, so everything in
here can be shared or sent across threads freely.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

DET_TOL = 1e-9    # |det - 1| allowed at construction
TRACE_TOL = 1e-8  # half-width of the parabolic band around |trace| = 2
DEN_TOL = 1e-12   # Mobius denominator guard


class DegenerateDenominator(ArithmeticError):
    """|cz + d| underflowed the guard tolerance; the input is corrupted."""


class NonPositiveScale(ValueError):
    """scaling() requires a strictly positive ratio."""


@dataclass(frozen=True)
class Mat2:
    """Real 2x2 matrix of determinant one (within DET_TOL)."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        entries = (self.a, self.b, self.c, self.d)
        if not all(math.isfinite(e) for e in entries):
            raise ValueError(f"non-finite matrix entries {entries}")
        det = self.a * self.d - self.b * self.c
        # ad - bc itself carries ~scale^2 * eps of rounding, so the check is
        # widened for large entries where the absolute tolerance is unmeasurable
        scale = max(abs(e) for e in entries)
        tol = max(DET_TOL, 64.0 * 2.22e-16 * scale * scale)
        if abs(det - 1.0) > tol:
            raise ValueError(f"determinant {det!r} is not 1 within {tol}")

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def renormalized(cls, a: float, b: float, c: float, d: float) -> "Mat2":
        """Divide by sqrt(det), so nearly-unimodular entries construct cleanly."""
        det = a * d - b * c
        if not det > 0.0:  # also rejects NaN
            raise ValueError(f"cannot renormalize entries with det {det!r}")
        s = math.sqrt(det)
        return cls(a / s, b / s, c / s, d / s)

    @property
    def trace(self) -> float:
        return self.a + self.d

    def __matmul__(self, other: "Mat2") -> "Mat2":
        # renormalizing every product keeps long words from drifting off det = 1
        return Mat2.renormalized(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inv(self) -> "Mat2":
        # adjugate: exact for det = 1, never amplifies the entries
        return Mat2(self.d, -self.b, -self.c, self.a)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)


def frobenius_distance(A: Mat2, B: Mat2) -> float:
    return math.sqrt(
        (A.a - B.a) ** 2 + (A.b - B.b) ** 2 + (A.c - B.c) ** 2 + (A.d - B.d) ** 2
    )


@dataclass(frozen=True)
class HPoint:
    """Point x + iy of the upper half-plane, y > 0."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x!r}, {self.y!r})")
        if not self.y > 0.0:
            raise ValueError(f"imaginary part {self.y!r} must be positive")

    @classmethod
    def from_complex(cls, z: complex) -> "HPoint":
        return cls(z.real, z.imag)

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)


class IsometryClass(Enum):
    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class Classification:
    """classify() plus the data needed to judge it near the parabolic boundary."""

    kind: IsometryClass
    trace: float
    margin: float    # | |trace| - 2 |
    confident: bool  # margin comfortably outside the parabolic band


def classify(A: Mat2, tol: float = TRACE_TOL) -> IsometryClass:
    return classify_detailed(A, tol).kind


def classify_detailed(A: Mat2, tol: float = TRACE_TOL) -> Classification:
    """Trace trichotomy: |tr| < 2 elliptic, = 2 parabolic, > 2 hyperbolic.

    +-I are split off first (they act trivially).  The trichotomy is
    ill-posed at |tr| = 2, so calls landing within 100*tol of the boundary
    are flagged not confident.
    """
    tr = A.trace
    margin = abs(abs(tr) - 2.0)
    near_plus = frobenius_distance(A, Mat2.identity())
    near_minus = frobenius_distance(A, -Mat2.identity())
    if min(near_plus, near_minus) <= tol:
        kind = IsometryClass.IDENTITY
    elif margin <= tol:
        kind = IsometryClass.PARABOLIC
    elif abs(tr) < 2.0:
        kind = IsometryClass.ELLIPTIC
    else:
        kind = IsometryClass.HYPERBOLIC
    confident = kind is IsometryClass.IDENTITY or margin > 100.0 * tol
    return Classification(kind, tr, margin, confident)


def j_cocycle(A: Mat2, z: HPoint) -> complex:
    """Denominator cocycle j(A, z) = cz + d; never 0 on the half-plane."""
    return complex(A.c * z.x + A.d, A.c * z.y)


def mobius_act(A: Mat2, z: HPoint) -> HPoint:
    """Apply z -> (az + b)/(cz + d).

    The imaginary part is computed from Im(Az) = Im(z)/|cz+d|^2, which keeps
    it strictly positive instead of trusting a complex quotient near the axis.
    """
    den = j_cocycle(A, z)
    den2 = den.real * den.real + den.imag * den.imag
    if den2 < DEN_TOL * DEN_TOL:
        raise DegenerateDenominator(f"|cz+d| = {math.sqrt(den2):.3e} at z = {z.z}")
    num = complex(A.a * z.x + A.b, A.a * z.y)
    w = num / den
    return HPoint(w.real, z.y / den2)


def hyp_distance(z: HPoint, w: HPoint) -> float:
    """Hyperbolic distance arccosh(1 + |z-w|^2 / (2 Im z Im w)).

    Written as log1p(u + sqrt(u(u+2))) to avoid cancellation for z near w.
    """
    dx = z.x - w.x
    dy = z.y - w.y
    u = (dx * dx + dy * dy) / (2.0 * z.y * w.y)
    return math.log1p(u + math.sqrt(u * (u + 2.0)))


def path_length(points: "list[HPoint] | tuple[HPoint, ...]") -> float:
    """Length of a polyline: each chord weighted by the geometric mean height.

    This is the midpoint-rule discretization of the arc length integral; it
    converges to the true length of the traced curve as the polyline refines.
    """
    if len(points) < 2:
        raise ValueError("need at least two points")
    total = 0.0
    for z, w in zip(points, points[1:]):
        chord = math.hypot(w.x - z.x, w.y - z.y)
        total += chord / math.sqrt(z.y * w.y)
    return total


def rotation(theta: float) -> Mat2:
    """((cos t, -sin t), (sin t, cos t)): fixes i, turns the tangent by 2t."""
    c, s = math.cos(theta), math.sin(theta)
    return Mat2(c, -s, s, c)


def scaling(rho: float) -> Mat2:
    """diag(rho, 1/rho): translation along the imaginary axis, i -> rho^2 i."""
    if not rho > 0.0:
        raise NonPositiveScale(f"scale ratio must be positive, got {rho!r}")
    return Mat2(rho, 0.0, 0.0, 1.0 / rho)


def geodesic_points(z: HPoint, w: HPoint, n: int) -> list[HPoint]:
    """n+1 points along the geodesic from z to w (vertical ray or semicircle)."""
    if n < 1:
        raise ValueError("need at least one segment")
    if abs(z.x - w.x) <= 1e-12 * (1.0 + abs(z.x) + abs(w.x)):
        # vertical geodesic: geometric spacing in y is the uniform-speed choice
        ratio = w.y / z.y
        return [HPoint(z.x, z.y * ratio ** (k / n)) for k in range(n + 1)]
    cx = (w.x * w.x + w.y * w.y - z.x * z.x - z.y * z.y) / (2.0 * (w.x - z.x))
    t0 = math.atan2(z.y, z.x - cx)
    t1 = math.atan2(w.y, w.x - cx)
    r = math.hypot(z.x - cx, z.y)
    return [
        HPoint(cx + r * math.cos(t0 + (t1 - t0) * k / n), r * math.sin(t0 + (t1 - t0) * k / n))
        for k in range(n + 1)
    ]


def geodesic_midpoint(z: HPoint, w: HPoint) -> HPoint:
    """Point at equal distance from z and w on the geodesic between them."""
    if z == w:
        return z
    # send z to the disk center, halve the radius in the hyperbolic sense
    zc, wc = z.z, w.z
    v = (wc - zc) / (wc - zc.conjugate())
    r = abs(v)
    half = math.tanh(0.5 * math.atanh(r))
    v_mid = v * (half / r)
    back = (zc - zc.conjugate() * v_mid) / (1.0 - v_mid)
    return HPoint(back.real, back.imag)
