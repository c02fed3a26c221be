"""Newton-polytope invariants: convenience, Newton number, conical test.

The Newton number of a convenient polytope P not containing the origin is
computed from the bounded component of the non-negative quadrant minus P,
realized as hull(P + {0}) \\ P.
"""

from __future__ import annotations

import json

from .geometry import (
    Polygon,
    contains,
    dim,
    face,
    hull,
    lattice_points,
    polygon_from_obj,
    polygon_to_obj,
    support_value,
    volume,
)

ORIGIN = (0, 0)


class PolytopePair:
    """Ordered pair (A1, A2) of lattice polygons in the non-negative quadrant."""

    __slots__ = ("a1", "a2")

    def __init__(self, a1, a2):
        for P in (a1, a2):
            if not P.is_lattice:
                raise ValueError("pair components must be lattice polygons")
            if any(x < 0 or y < 0 for x, y in P.vertices):
                raise ValueError("pair components must lie in the non-negative quadrant")
        self.a1 = a1
        self.a2 = a2

    def __eq__(self, other):
        return (
            isinstance(other, PolytopePair)
            and self.a1 == other.a1
            and self.a2 == other.a2
        )

    def __hash__(self):
        return hash((self.a1, self.a2))

    def __repr__(self):
        return "PolytopePair(%r, %r)" % (self.a1, self.a2)

    def swapped(self):
        return PolytopePair(self.a2, self.a1)


def with_origin(pair):
    """The pair with the origin adjoined to each component."""
    return PolytopePair(
        hull(list(pair.a1.vertices) + [ORIGIN]),
        hull(list(pair.a2.vertices) + [ORIGIN]),
    )


def is_convenient(P):
    """True iff P meets both coordinate axes."""
    xs = [x for x, _ in P.vertices]
    ys = [y for _, y in P.vertices]
    return min(xs) <= 0 <= max(xs) and min(ys) <= 0 <= max(ys)


def newton_number(P):
    """Newton number of a convenient lattice polytope in the quadrant.

    Zero when the origin lies in P; otherwise 2*Vol(S0) - a - b + 1 with S0
    the bounded component below P and a, b the near axis intercepts.
    """
    if not P.is_lattice:
        raise ValueError("Newton number undefined: rational polygon")
    if not is_convenient(P):
        raise ValueError("Newton number undefined")
    if any(x < 0 or y < 0 for x, y in P.vertices):
        raise ValueError("Newton number undefined: polygon leaves the quadrant")
    if contains(P, ORIGIN):
        return 0
    filled = hull(list(P.vertices) + [ORIGIN])
    vol0 = volume(filled) - volume(P)
    # near intercepts: P touches both axes, so the axis slices are faces
    a = min(x for x, _ in face(P, (0, 1)).vertices)
    b = min(y for _, y in face(P, (1, 0)).vertices)
    n = 2 * vol0 - a - b + 1
    if n < 0 or n != int(n):
        raise ArithmeticError("Newton number came out %s on %r" % (n, P))
    return int(n)


def delta_ind(P):
    """0 iff the Newton number vanishes, else 1."""
    return 0 if newton_number(P) == 0 else 1


def conical_moment_row(s):
    x, y = s
    return (x, y, x * x, x * y, y * y)


def conical_det(points):
    """Exact determinant of the 5x5 moment matrix of five nonzero points.

    Brute-force oracle for is_conical.
    """
    pts = list(points)
    if len(pts) != 5:
        raise ValueError("conical determinant needs exactly 5 points")
    if any(p == ORIGIN for p in pts):
        raise ValueError("conical determinant undefined with the origin")
    rows = [conical_moment_row(p) for p in pts]
    return _det(rows)


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    sign = 1
    for j in range(n):
        if rows[0][j]:
            minor = [
                [rows[i][k] for k in range(n) if k != j] for i in range(1, n)
            ]
            total += sign * rows[0][j] * _det(minor)
        sign = -sign
    return total


def is_conical(P):
    """True iff the nonzero lattice points of P span all quadratic moments.

    Rank-5 test on the rows (x, y, x^2, xy, y^2) by exact fraction-free
    elimination; equivalent to some 5-subset having nonzero determinant.
    """
    pts = [p for p in lattice_points(P) if p != ORIGIN]
    if len(pts) < 5:
        return False
    return _rank([list(conical_moment_row(p)) for p in pts]) == 5


def _rank(rows):
    cols = 5
    rank = 0
    for c in range(cols):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][c]:
                f = rows[i][c]
                rows[i] = [rows[i][k] * pr[c] - f * pr[k] for k in range(cols)]
        rank += 1
        if rank == 5:
            break
    return rank


def is_conical_pair(pair):
    return is_conical(pair.a1) and is_conical(pair.a2)


# --- pair wire format --------------------------------------------------------


def pair_to_obj(pair):
    return {"A1": polygon_to_obj(pair.a1), "A2": polygon_to_obj(pair.a2)}


def pair_from_obj(obj):
    return PolytopePair(polygon_from_obj(obj["A1"]), polygon_from_obj(obj["A2"]))


def pair_dumps(pair):
    return json.dumps(pair_to_obj(pair), separators=(",", ":"))


def pair_loads(s):
    return pair_from_obj(json.loads(s))
