import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from fuchsian.euclidean import (
    LatticeGroup,
    commutator_check,
    euclid_path_length,
    reduce_point,
)

finite = st.floats(-10.0, 10.0)


@st.composite
def lattices(draw):
    a = (draw(finite), draw(finite))
    b = (draw(finite), draw(finite))
    assume(abs(a[0] * b[1] - a[1] * b[0]) > 0.1)
    return LatticeGroup(a, b)


def test_degenerate_basis_rejected():
    with pytest.raises(ValueError):
        LatticeGroup((1.0, 2.0), (2.0, 4.0))


def test_sum_of_basis_reduces_to_origin():
    L = LatticeGroup((1.0, 0.25), (-0.5, 2.0))
    q, (n, m) = reduce_point(L, (L.a[0] + L.b[0], L.a[1] + L.b[1]))
    assert (n, m) == (1, 1)
    assert math.hypot(*q) < 1e-12


def test_interior_point_untouched():
    L = LatticeGroup((2.0, 0.0), (0.0, 3.0))
    q, nm = reduce_point(L, (0.5, 1.0))
    assert q == (0.5, 1.0)
    assert nm == (0, 0)


cell_frac = st.floats(0.001, 0.999)
small_int = st.integers(-4, 4)


@given(lattices(), cell_frac, cell_frac, small_int, small_int)
def test_reduce_idempotent(L, fs, ft, n0, m0):
    # compose a point from in-cell fractions plus a known lattice shift
    px = (fs + n0) * L.a[0] + (ft + m0) * L.b[0]
    py = (fs + n0) * L.a[1] + (ft + m0) * L.b[1]
    q, nm = reduce_point(L, (px, py))
    q2, nm2 = reduce_point(L, q)
    assert nm == (n0, m0)
    assert nm2 == (0, 0)
    assert q2 == q


@given(lattices(), finite, finite)
def test_reduced_coordinates_in_unit_cell(L, px, py):
    q, nm = reduce_point(L, (px, py))
    # consistency: q really is p - n a - m b
    n, m = nm
    assert q[0] == px - n * L.a[0] - m * L.b[0]
    assert q[1] == py - n * L.a[1] - m * L.b[1]
    s, t = L.basis_coords(q)
    assert -1e-9 <= s <= 1.0 + 1e-9
    assert -1e-9 <= t <= 1.0 + 1e-9


def test_commutator_vanishes_at_origin():
    L = LatticeGroup((1.0, 0.0), (0.0, 1.0))
    assert commutator_check(L, [(0.0, 0.0)]) == 0.0


def test_commutator_unit_square_center():
    L = LatticeGroup((1.0, 0.0), (0.0, 1.0))
    assert commutator_check(L, [(0.5, 0.5)]) == 0.0


@given(lattices())
def test_commutator_tiny_everywhere(L):
    assert commutator_check(L) < 1e-12


@given(lattices(), st.lists(st.tuples(finite, finite), min_size=2, max_size=6), st.integers(-3, 3), st.integers(-3, 3))
def test_path_length_translation_invariant(L, pts, n, m):
    dx = n * L.a[0] + m * L.b[0]
    dy = n * L.a[1] + m * L.b[1]
    moved = [(x + dx, y + dy) for x, y in pts]
    assert abs(euclid_path_length(moved) - euclid_path_length(pts)) < 1e-12
