"""Regular hyperbolic 4g-gons and their side-pairing generators.

For genus g >= 2 there is a regular 4g-gon whose interior angles sum to
2*pi; gluing its sides in the pattern a1 b1 a1' b1' a2 b2 a2' b2' ...
(primes are reversed traversals, read counterclockwise) produces a closed
genus-g surface, and the gluing isometries generate a Fuchsian group.  The
polygon is found in the unit-disk model, where the regular polygon around 0
is rotationally symmetric, and transported to the half-plane around i.

The circumradius is solved by bisection: the interior angle of the regular
n-gon decreases monotonically from its flat value pi - 2*pi/n toward 0 as
the circumradius grows, so the bracket is certified.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .halfplane import (
    HPoint,
    Mat2,
    hyp_distance,
    mobius_act,
    rotation,
)
from .reps import Representation

ANGLE_TOL = 1e-8    # polygon validity: equal angles, sum 2*pi
PAIRING_TOL = 1e-6  # certification of side-onto-side mapping


class GenusTooSmall(ValueError):
    """No hyperbolic 4g-gon with angle sum 2*pi exists for g < 2."""


class PairingFailed(RuntimeError):
    """A constructed pairing does not carry its source side onto its target."""


def _to_disk(z: complex) -> complex:
    return (z - 1j) / (z + 1j)


def _from_disk(w: complex) -> complex:
    return 1j * (1.0 + w) / (1.0 - w)


def _act(M: Mat2, z: complex) -> complex:
    return (M.a * z + M.b) / (M.c * z + M.d)


@dataclass(frozen=True)
class HyperbolicPolygon:
    """Cyclic vertex list of a regular-candidate 4g-gon, counterclockwise.

    Construction checks the defining angle conditions: all interior angles
    agree within ANGLE_TOL and they add up to 2*pi within ANGLE_TOL.
    """

    vertices: tuple[HPoint, ...]
    genus: int

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if self.genus < 2:
            raise GenusTooSmall(f"genus must be >= 2, got {self.genus}")
        if len(self.vertices) != 4 * self.genus:
            raise ValueError(
                f"genus {self.genus} needs {4 * self.genus} vertices, "
                f"got {len(self.vertices)}"
            )
        angles = interior_angles(self.vertices)
        if max(angles) - min(angles) > ANGLE_TOL:
            raise ValueError("interior angles are not all equal")
        if abs(sum(angles) - 2.0 * math.pi) > ANGLE_TOL:
            raise ValueError(f"interior angles sum to {sum(angles)!r}, not 2*pi")

    def sides(self) -> list[tuple[HPoint, HPoint]]:
        n = len(self.vertices)
        return [(self.vertices[k], self.vertices[(k + 1) % n]) for k in range(n)]


def _triangle_angle(at: HPoint, p: HPoint, q: HPoint) -> float:
    """Angle at `at` in the geodesic triangle (at, p, q), by the law of cosines."""
    a = hyp_distance(at, p)
    b = hyp_distance(at, q)
    c = hyp_distance(p, q)
    num = math.cosh(a) * math.cosh(b) - math.cosh(c)
    den = math.sinh(a) * math.sinh(b)
    return math.acos(max(-1.0, min(1.0, num / den)))


def interior_angles(vertices) -> list[float]:
    """Interior angle at each vertex; valid for convex cyclic vertex lists."""
    n = len(vertices)
    return [
        _triangle_angle(vertices[k], vertices[k - 1], vertices[(k + 1) % n])
        for k in range(n)
    ]


def _vertices_at_radius(r: float, n: int) -> list[HPoint]:
    return [
        HPoint.from_complex(_from_disk(r * cmath.exp(2j * math.pi * k / n)))
        for k in range(n)
    ]


def regular_polygon(g: int) -> HyperbolicPolygon:
    """The regular 4g-gon centered at i with interior angle 2*pi/(4g)."""
    if g < 2:
        raise GenusTooSmall(
            f"genus {g}: angle sum 2*pi needs area (4g-4)*pi > 0, so g >= 2"
        )
    n = 4 * g
    target = 2.0 * math.pi / n

    def angle_at(r: float) -> float:
        vs = _vertices_at_radius(r, n)
        return _triangle_angle(vs[1], vs[0], vs[2])

    lo, hi = 1e-3, 1.0 - 1e-12  # angle(lo) ~ flat value > target > angle(hi) ~ 0
    while hi - lo > 1e-16:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # bracket has collapsed to adjacent doubles
        if angle_at(mid) > target:
            lo = mid
        else:
            hi = mid
    return HyperbolicPolygon(tuple(_vertices_at_radius(0.5 * (lo + hi), n)), g)


def polygon_area(p) -> float:
    """Angle-defect area: (n - 2)*pi minus the sum of interior angles."""
    vertices = p.vertices if isinstance(p, HyperbolicPolygon) else tuple(p)
    angles = interior_angles(vertices)
    return (len(vertices) - 2) * math.pi - sum(angles)


def _orthocircle_center(w1: complex, w2: complex) -> "complex | None":
    # circle through w1, w2 orthogonal to the unit circle: |C|^2 = R^2 + 1
    det = 2.0 * (w1.real * w2.imag - w1.imag * w2.real)
    if abs(det) < 1e-13:
        return None  # the geodesic is a diameter
    r1 = abs(w1) ** 2 + 1.0
    r2 = abs(w2) ** 2 + 1.0
    cx = (r1 * w2.imag - r2 * w1.imag) / det
    cy = (r2 * w1.real - r1 * w2.real) / det
    return complex(cx, cy)


def _simpson(f, n: int) -> float:
    # composite Simpson on [0, 1]; n intervals, forced even
    if n % 2:
        n += 1
    h = 1.0 / n
    total = f(0.0) + f(1.0)
    total += 4.0 * sum(f((2 * i + 1) * h) for i in range(n // 2))
    total += 2.0 * sum(f(2 * i * h) for i in range(1, n // 2))
    return total * h / 3.0


def polygon_area_numeric(p, subdiv: int = 2000) -> float:
    """Quadrature oracle for the area, independent of the angle-defect formula.

    Works in the disk model recentered at the vertex mean: the polygon is
    starlike there, so it splits into the triangles (0, w_k, w_{k+1}) and
    each triangle is an angular sector bounded by its side's geodesic circle.
    The radial integral of the area form has the closed form
    2/(1 - rho^2) - 2, leaving one angular quadrature per side.
    """
    vertices = p.vertices if isinstance(p, HyperbolicPolygon) else tuple(p)
    disk = [_to_disk(v.z) for v in vertices]
    m = sum(disk) / len(disk)
    u = [(w - m) / (1.0 - m.conjugate() * w) for w in disk]

    total = 0.0
    n = len(u)
    for k in range(n):
        w1, w2 = u[k], u[(k + 1) % n]
        th1 = cmath.phase(w1)
        dth = (cmath.phase(w2) - th1 + math.pi) % (2.0 * math.pi) - math.pi
        if abs(dth) < 1e-14:
            continue
        C = _orthocircle_center(w1, w2)
        if C is None:
            continue  # degenerate sector through the center: zero area

        def sector(t: float) -> float:
            phi = th1 + t * dth
            beta = C.real * math.cos(phi) + C.imag * math.sin(phi)
            rho = beta - math.sqrt(max(beta * beta - 1.0, 0.0))
            return 2.0 / (1.0 - rho * rho) - 2.0

        total += dth * _simpson(sector, subdiv)
    return total


def _move_to_i(p: HPoint) -> Mat2:
    # z -> (z - x)/y as a determinant-one matrix
    s = math.sqrt(p.y)
    return Mat2(1.0 / s, -p.x / s, 0.0, s)


def _carrier(p1: HPoint, p2: HPoint, q1: HPoint, q2: HPoint) -> Mat2:
    """The orientation-preserving isometry with p1 -> q1, p2 -> q2.

    Both segments are swept to a canonical position at i and the residual
    rotation about i is read off in disk coordinates, where the rotation
    matrix with parameter t acts as multiplication by exp(-2it).
    """
    Cp = _move_to_i(p1)
    Cq = _move_to_i(q1)
    wp = _act(Cp, p2.z)
    wq = _act(Cq, q2.z)
    alpha = cmath.phase((wq - 1j) / (wq + 1j)) - cmath.phase((wp - 1j) / (wp + 1j))
    return Cq.inv() @ rotation(-0.5 * alpha) @ Cp


def side_pairings(p: HyperbolicPolygon) -> Representation:
    """Side-pairing translations of the labeled polygon, as a representation.

    Sides run from vertex k to k+1 and are labeled a1 b1 a1' b1' a2 ...
    counterclockwise.  The generator for a_{j+1} carries the a' side onto the
    a side, the one for b_{j+1} carries the b side onto the b' side, both
    head-to-tail against the boundary orientation.  In vertices, with m = 4j:

        A_{j+1}: V_{m+2} -> V_{m+1},  V_{m+3} -> V_m
        B_{j+1}: V_{m+1} -> V_{m+4},  V_{m+2} -> V_{m+3}

    Chasing the single vertex class around with these maps reproduces the
    word [A_1,B_1]...[A_g,B_g], which is why the commutator relation closes
    at +I when the interior angles sum to 2*pi.
    """
    vs = p.vertices
    n = len(vs)
    gens_a: list[Mat2] = []
    gens_b: list[Mat2] = []
    for j in range(p.genus):
        m = 4 * j
        a_src = (vs[(m + 2) % n], vs[(m + 3) % n])
        a_tgt = (vs[(m + 1) % n], vs[m % n])
        b_src = (vs[(m + 1) % n], vs[(m + 2) % n])
        b_tgt = (vs[(m + 4) % n], vs[(m + 3) % n])
        A = _carrier(*a_src, *a_tgt)
        B = _carrier(*b_src, *b_tgt)
        _certify(A, *a_src, *a_tgt)
        _certify(B, *b_src, *b_tgt)
        gens_a.append(A)
        gens_b.append(B)
    return Representation(p.genus, tuple(gens_a), tuple(gens_b))


def _certify(M: Mat2, p1: HPoint, p2: HPoint, q1: HPoint, q2: HPoint) -> None:
    err = max(
        hyp_distance(mobius_act(M, p1), q1),
        hyp_distance(mobius_act(M, p2), q2),
    )
    if err > PAIRING_TOL:
        raise PairingFailed(
            f"pairing misses its target side by {err:.3e} (tol {PAIRING_TOL:.1e})"
        )
