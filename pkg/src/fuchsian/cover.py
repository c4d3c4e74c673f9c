"""The universal cover of SL(2,R), tracked through logarithm branches.

A cover element is a pair (A, phi) where phi is a continuous branch of
log j(A, .) on the half-plane, j(A, z) = cz + d.  The half-plane is simply
connected and j never vanishes on it, so such branches exist and any one is
pinned down by its value at i; we store only phi(i).  Its imaginary part is
the winding data a bare matrix forgets: shifting the branch adds 2*pi*i*k,
and the elements over the identity matrix form the central kernel, with
phi(i) ranging over 2*pi*i*Z.

Multiplication transports the first factor's branch along the second
factor's action: over A1 A2 the branch value at i is phi1(A2 . i) + phi2(i).
Evaluating a branch away from i needs no numerical continuation: j maps the
segment [i, z] to a straight segment that misses 0 and stays inside one open
half-plane, so the argument increment lies in (-pi, pi) and equals the
principal log of the ratio j(A, z)/j(A, i).

After every product and inverse the real part of phi(i) is reset to its
exact value log|j(A, i)|; only the imaginary part carries accumulated state.
This keeps the defining residual |exp(phi(i)) - j(A, i)| flat over long
words instead of growing with word length.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple

from .halfplane import HPoint, Mat2, frobenius_distance, j_cocycle, mobius_act

TWO_PI = 2.0 * math.pi
EXP_TOL = 1e-9     # |exp(phi(i)) - j(A,i)| allowed, relative above |j| = 1
KERNEL_TOL = 1e-6  # Frobenius distance to I for kernel membership

_I = HPoint(0.0, 1.0)


class NotInKernel(ValueError):
    """kernel_value() was given an element whose matrix part is not near I."""


@dataclass(frozen=True)
class CoverElement:
    """Pair (A, phi(i)) with exp(phi(i)) = j(A, i)."""

    A: Mat2
    phi_i: complex

    def __post_init__(self):
        j = j_cocycle(self.A, _I)
        if abs(cmath.exp(self.phi_i) - j) > EXP_TOL * max(1.0, abs(j)):
            raise ValueError(
                f"phi(i) = {self.phi_i} is not a logarithm of j(A, i) = {j}"
            )

    def __mul__(self, other: "CoverElement") -> "CoverElement":
        return cover_mul(self, other)

    def inverse(self) -> "CoverElement":
        return cover_inv(self)


class KernelValue(NamedTuple):
    k: int
    residual: float


def lift(A: Mat2, k: int = 0) -> CoverElement:
    """The element over A on branch k; k = 0 takes the principal argument."""
    j = j_cocycle(A, _I)
    return CoverElement(A, cmath.log(j) + complex(0.0, TWO_PI * k))


def phi_at(e: CoverElement, z: HPoint) -> complex:
    """Evaluate the branch at z: phi(i) plus the principal-log increment."""
    return e.phi_i + cmath.log(j_cocycle(e.A, z) / j_cocycle(e.A, _I))


def _rebased(A: Mat2, phi: complex) -> CoverElement:
    # reset the redundant real part; the imaginary part is the payload
    j = j_cocycle(A, _I)
    return CoverElement(A, complex(math.log(abs(j)), phi.imag))


def cover_mul(e1: CoverElement, e2: CoverElement) -> CoverElement:
    A = e1.A @ e2.A
    phi = phi_at(e1, mobius_act(e2.A, _I)) + e2.phi_i
    return _rebased(A, phi)


def cover_inv(e: CoverElement) -> CoverElement:
    A_inv = e.A.inv()
    phi = -phi_at(e, mobius_act(A_inv, _I))
    return _rebased(A_inv, phi)


def kernel_value(e: CoverElement, tol: float = KERNEL_TOL) -> KernelValue:
    """Integer k with phi(i) = 2*pi*i*k for an element over the identity.

    Returns the nearest lattice point together with the distance to it, so
    callers can judge how cleanly the element sits in the kernel.
    """
    dist = frobenius_distance(e.A, Mat2.identity())
    if dist > tol:
        raise NotInKernel(f"matrix part is {dist:.3e} from I (tol {tol:.1e})")
    k = round(e.phi_i.imag / TWO_PI)
    residual = abs(e.phi_i - complex(0.0, TWO_PI * k))
    return KernelValue(int(k), residual)
