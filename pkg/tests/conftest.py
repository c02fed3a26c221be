import random

import pytest

from polytype.geometry import Polygon, hull


def random_lattice_polygon(rng, lo=-8, hi=8, npts=7):
    """Hull of a few random lattice points; any dimension can come out."""
    pts = [(rng.randint(lo, hi), rng.randint(lo, hi)) for _ in range(rng.randint(1, npts))]
    return hull(pts)


def random_full_dim_polygon(rng, lo=0, hi=8, npts=8):
    while True:
        P = random_lattice_polygon(rng, lo, hi, npts)
        if len(P.vertices) >= 3:
            return P


def random_convenient_polygon(rng, hi=8):
    """Full-dimensional lattice polygon translated to touch both axes."""
    P = random_full_dim_polygon(rng, 0, hi)
    mx = min(x for x, _ in P.vertices)
    my = min(y for _, y in P.vertices)
    return hull([(x - mx, y - my) for x, y in P.vertices])


def random_staircase_polygon(rng, hi=6):
    """Lower-closed lattice polytope: hull of the origin and the coordinate
    boxes of a few random points."""
    pts = [(0, 0)]
    for _ in range(rng.randint(1, 4)):
        x, y = rng.randint(0, hi), rng.randint(0, hi)
        pts += [(x, y), (x, 0), (0, y)]
    return hull(pts)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
