"""Surface-group representations into SL(2,R) and their Toledo invariant.

A genus-g representation is the tuple (A_1, B_1, ..., A_g, B_g) of images of
the standard generators, constrained by the single relation
[A_1,B_1]...[A_g,B_g] = I.  The Toledo invariant lifts each generator to the
universal cover, multiplies the lifted commutators, and reads the winding of
the resulting central element: tau = Im phi(i) / pi.  It does not depend on
the branch chosen for any lift, because each lift appears in a commutator
together with its inverse.

Side-pairing constructions may satisfy the relation only up to sign (the
product lands on -I).  Commutators are blind to the signs of the individual
matrices, so no sign flip of a generator can repair this; such data is
honestly a PSL(2,R)-representation.  We still compute tau for it: over -I
the admissible phi(i) values form i*pi*(2Z+1), so tau comes out odd and the
result carries a psl_only flag.
"""
from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from math import pi

from .cover import CoverElement, cover_inv, cover_mul, lift
from .halfplane import Mat2, frobenius_distance

REL_TOL = 1e-6         # relation residual for a representation to count as valid
NONINTEGRAL_TOL = 1e-3  # raw invariant farther than this from the lattice is an error
WARN_TOL = 1e-6         # ... farther than this is merely suspicious


class RelationViolated(ValueError):
    """The generators do not satisfy the surface-group relation."""


class NonIntegral(ArithmeticError):
    """The raw invariant is too far from an integer; numerical breakdown."""


@dataclass(frozen=True)
class Representation:
    """Genus plus the 2g generator images.

    Construction does not enforce the relation, so solver iterates and other
    unvalidated candidates can be carried around; anything consuming the
    representation as a representation checks relation_residual itself.
    """

    genus: int
    gens_a: tuple[Mat2, ...]
    gens_b: tuple[Mat2, ...]

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError(f"genus must be >= 1, got {self.genus}")
        object.__setattr__(self, "gens_a", tuple(self.gens_a))
        object.__setattr__(self, "gens_b", tuple(self.gens_b))
        if len(self.gens_a) != self.genus or len(self.gens_b) != self.genus:
            raise ValueError(
                f"need {self.genus} generators per family, got "
                f"{len(self.gens_a)} and {len(self.gens_b)}"
            )

    @classmethod
    def trivial(cls, genus: int) -> "Representation":
        eye = Mat2.identity()
        return cls(genus, (eye,) * genus, (eye,) * genus)


def relation_product(r: Representation) -> Mat2:
    P = Mat2.identity()
    for A, B in zip(r.gens_a, r.gens_b):
        P = P @ A @ B @ A.inv() @ B.inv()
    return P


def relation_residual(r: Representation) -> float:
    """Frobenius distance of the commutator product to +-I (sign-tolerant)."""
    P = relation_product(r)
    eye = Mat2.identity()
    return min(frobenius_distance(P, eye), frobenius_distance(P, -eye))


@dataclass(frozen=True)
class ToledoResult:
    value: int                    # the invariant, even unless psl_only
    raw: float                    # Im phi(i) / pi before rounding
    residual: float               # |raw - value|
    kernel_matrix_residual: float  # Frobenius distance of the product to +-I
    psl_only: bool = False        # relation closed at -I, not liftable data


def toledo(
    r: Representation,
    branches: "list[int] | tuple[int, ...] | None" = None,
    rel_tol: float = REL_TOL,
) -> ToledoResult:
    """Toledo invariant of a representation satisfying the relation.

    branches, when given, holds 2g integers choosing the lift branch of
    A_1, B_1, ..., A_g, B_g in that order; the result must not depend on it.
    """
    if relation_residual(r) > rel_tol:
        raise RelationViolated(
            f"relation residual {relation_residual(r):.3e} exceeds {rel_tol:.1e}"
        )
    if branches is None:
        branches = (0,) * (2 * r.genus)
    if len(branches) != 2 * r.genus:
        raise ValueError(f"need {2 * r.genus} branch integers, got {len(branches)}")

    total: CoverElement | None = None
    for i, (A, B) in enumerate(zip(r.gens_a, r.gens_b)):
        ta = lift(A, branches[2 * i])
        tb = lift(B, branches[2 * i + 1])
        comm = cover_mul(cover_mul(ta, tb), cover_mul(cover_inv(ta), cover_inv(tb)))
        total = comm if total is None else cover_mul(total, comm)
    assert total is not None

    eye = Mat2.identity()
    dist_plus = frobenius_distance(total.A, eye)
    dist_minus = frobenius_distance(total.A, -eye)
    psl_only = dist_minus < dist_plus
    kernel_matrix_residual = min(dist_plus, dist_minus)

    raw = total.phi_i.imag / pi
    if psl_only:
        value = round(raw)            # lattice over -I is the odd integers
    else:
        value = 2 * round(raw / 2.0)  # lattice over +I is the even integers
    residual = abs(raw - value)
    if residual > NONINTEGRAL_TOL:
        raise NonIntegral(
            f"raw invariant {raw!r} is {residual:.3e} from the lattice"
        )
    if residual > WARN_TOL:
        warnings.warn(
            f"Toledo invariant residual {residual:.3e} is unusually large",
            stacklevel=2,
        )
    return ToledoResult(int(value), raw, residual, kernel_matrix_residual, psl_only)


def milnor_check(r: Representation) -> bool:
    """|tau| <= 2g - 2; holds for every representation."""
    return abs(toledo(r).value) <= 2 * r.genus - 2


def goldman_fuchsian_test(r: Representation) -> bool:
    """Fuchsian exactly when the invariant is maximal: |tau| = 2g - 2."""
    return abs(toledo(r).value) == 2 * r.genus - 2


def reflect_conjugate(r: Representation) -> Representation:
    """Conjugate every generator by diag(1, -1); negates the invariant.

    At the matrix level this is (a, b; c, d) -> (a, -b; -c, d), exact in
    floating point, and corresponds to reversing the surface orientation.
    """
    def refl(M: Mat2) -> Mat2:
        return Mat2(M.a, -M.b, -M.c, M.d)

    return Representation(
        r.genus, tuple(refl(A) for A in r.gens_a), tuple(refl(B) for B in r.gens_b)
    )


def branch_independence_check(
    r: Representation, seed: int, trials: int = 20, span: int = 3
) -> bool:
    """Recompute the invariant under random branch choices in [-span, span].

    True when every trial reproduces the principal-branch integer exactly.
    """
    base = toledo(r).value
    rng = random.Random(seed)
    for _ in range(trials):
        ks = [rng.randint(-span, span) for _ in range(2 * r.genus)]
        if toledo(r, branches=ks).value != base:
            return False
    return True
