import math

import pytest
from hypothesis import strategies as st

from fuchsian.halfplane import HPoint, Mat2
from fuchsian.polygons import regular_polygon, side_pairings


def iwasawa(theta: float, s: float, u: float) -> Mat2:
    """Exactly unimodular matrix rotation(theta) diag(e^s, e^-s) shear(u)."""
    es = math.exp(s)
    c, sn = math.cos(theta), math.sin(theta)
    return Mat2.renormalized(c * es, c * es * u - sn / es, sn * es, sn * es * u + c / es)


@st.composite
def sl2_matrices(draw, s_bound=1.0, u_bound=1.5):
    theta = draw(st.floats(-math.pi, math.pi))
    s = draw(st.floats(-s_bound, s_bound))
    u = draw(st.floats(-u_bound, u_bound))
    return iwasawa(theta, s, u)


@st.composite
def hpoints(draw, box=5.0, ymin=0.1, ymax=5.0):
    x = draw(st.floats(-box, box))
    y = draw(st.floats(ymin, ymax))
    return HPoint(x, y)


def mat_close(A: Mat2, B: Mat2, tol: float) -> bool:
    return max(abs(A.a - B.a), abs(A.b - B.b), abs(A.c - B.c), abs(A.d - B.d)) <= tol


@pytest.fixture(scope="session")
def octagon():
    return regular_polygon(2)


@pytest.fixture(scope="session")
def octagon_rep(octagon):
    return side_pairings(octagon)
