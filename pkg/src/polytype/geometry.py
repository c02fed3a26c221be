"""Exact 2D convex-polytope arithmetic over the rationals.

All coordinates are ints or Fractions; no floating point anywhere.  A
Polygon is stored in canonical form (counter-clockwise, starting at the
lexicographically smallest vertex, strictly convex), so structural
equality is value equality.  Points and segments are first-class
degenerate polygons of dimension 0 and 1.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd


def _norm(c):
    """Normalize a coordinate: integral Fractions become ints."""
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return int(c)
        return c
    if isinstance(c, int):
        return c
    if isinstance(c, float):
        raise TypeError("floating point coordinate rejected: %r" % (c,))
    return Fraction(c)


def _ratio(num, den):
    """num/den as an int when exact, else a Fraction."""
    q = Fraction(num, den)
    return int(q) if q.denominator == 1 else q


def cross(o, a, b):
    """Cross product of (a - o) and (b - o)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def cross2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def rotate90(v):
    """Rotate a vector counter-clockwise by 90 degrees: (x, y) -> (-y, x)."""
    return (-v[1], v[0])


def primitive(v):
    """Primitive integer vector parallel to v (which may be rational)."""
    x, y = v
    if x == 0 and y == 0:
        raise ValueError("zero vector has no primitive form")
    if isinstance(x, Fraction) or isinstance(y, Fraction):
        fx, fy = Fraction(x), Fraction(y)
        m = fx.denominator * fy.denominator // gcd(fx.denominator, fy.denominator)
        x, y = int(fx * m), int(fy * m)
    g = gcd(abs(x), abs(y))
    return (x // g, y // g)


class Polygon:
    """Convex polytope in the plane with exact rational vertices.

    ``vertices`` is the canonical CCW vertex tuple starting at the
    lexicographic minimum; two polygons are equal iff the tuples match.
    """

    __slots__ = ("vertices", "is_lattice")

    def __init__(self, points):
        pts = [(_norm(p[0]), _norm(p[1])) for p in points]
        if not pts:
            raise ValueError("empty point set")
        self.vertices = _convex_hull(pts)
        self.is_lattice = all(
            isinstance(x, int) and isinstance(y, int) for x, y in self.vertices
        )

    @classmethod
    def _from_canonical(cls, vertices):
        p = object.__new__(cls)
        p.vertices = vertices
        p.is_lattice = all(
            isinstance(x, int) and isinstance(y, int) for x, y in vertices
        )
        return p

    def __eq__(self, other):
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return "Polygon(%s)" % (list(self.vertices),)


def _mk(points):
    """Polygon from internally produced points (already int/Fraction).

    Integral Fractions that survive arithmetic are folded back to ints so
    canonical forms stay comparable across code paths.
    """
    verts = _convex_hull(points)
    for v in verts:
        if type(v[0]) is not int or type(v[1]) is not int:
            verts = tuple(
                (
                    int(x) if isinstance(x, Fraction) and x.denominator == 1 else x,
                    int(y) if isinstance(y, Fraction) and y.denominator == 1 else y,
                )
                for x, y in verts
            )
            break
    return Polygon._from_canonical(verts)


def _convex_hull(pts):
    """Canonical strict hull vertex tuple (CCW from the lex-min vertex)."""
    pts = sorted(set(pts))
    if len(pts) == 1:
        return (pts[0],)
    if len(pts) == 2:
        return tuple(pts)
    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    if len(lower) == len(pts) and len(upper) == len(pts):
        # all points collinear: a segment
        return (pts[0], pts[-1])
    verts = lower[:-1] + upper[:-1]
    # lower chain starts at the lex-min point, so the cycle already does
    return tuple(verts)


def hull(points):
    """Convex hull of a point set as a canonical Polygon."""
    return Polygon(points)


def dim(P):
    n = len(P.vertices)
    return 0 if n == 1 else (1 if n == 2 else 2)


def translate(P, t):
    tx, ty = _norm(t[0]), _norm(t[1])
    verts = tuple((x + tx, y + ty) for x, y in P.vertices)
    if (tx or ty) and not (type(tx) is int and type(ty) is int):
        return _mk(list(verts))
    return Polygon._from_canonical(verts)


def scale(P, lam):
    """Dilate by a non-negative rational factor (0 collapses to the origin)."""
    lam = _norm(lam)
    if lam < 0:
        raise ValueError("negative scale factor")
    if lam == 0:
        return Polygon._from_canonical(((0, 0),))
    if type(lam) is int:
        return Polygon._from_canonical(
            tuple((x * lam, y * lam) for x, y in P.vertices)
        )
    return _mk([(x * lam, y * lam) for x, y in P.vertices])


def area2(P):
    """Twice the Euclidean area (shoelace); exact, 0 for dim < 2."""
    vs = P.vertices
    if len(vs) < 3:
        return 0
    s = 0
    for i in range(len(vs)):
        x0, y0 = vs[i]
        x1, y1 = vs[(i + 1) % len(vs)]
        s += x0 * y1 - x1 * y0
    return s


def volume(P):
    """Scaled Euclidean area, normalized so the unit simplex has 1/2."""
    return _ratio(area2(P), 2)


def _sum_walk(pv, qv):
    """Boundary walk of the Minkowski sum of two CCW vertex tuples (each
    with at least 2 vertices); may contain collinear break points."""
    edges = _edge_vectors(pv) + _edge_vectors(qv)
    edges.sort(key=_angle_key)
    # edges are ordered by angle from 0, so the walk must start at the
    # bottom-most (then leftmost) vertex; that support point is additive
    p0 = min(pv, key=lambda v: (v[1], v[0]))
    q0 = min(qv, key=lambda v: (v[1], v[0]))
    x, y = p0[0] + q0[0], p0[1] + q0[1]
    walk = [(x, y)]
    for dx, dy in edges[:-1]:
        x, y = x + dx, y + dy
        walk.append((x, y))
    return walk


def minkowski(P, Q):
    """Minkowski sum by the merged-edge rotating sweep."""
    pv, qv = P.vertices, Q.vertices
    if len(pv) == 1:
        return translate(Q, pv[0])
    if len(qv) == 1:
        return translate(P, qv[0])
    return _mk(_sum_walk(pv, qv))


def _edge_vectors(vs):
    if len(vs) == 2:
        a, b = vs
        d = (b[0] - a[0], b[1] - a[1])
        return [d, (-d[0], -d[1])]
    out = []
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        out.append((b[0] - a[0], b[1] - a[1]))
    return out


def _angle_key(v):
    """Sort key ordering vectors by CCW angle from the positive x-axis."""
    x, y = v
    if y > 0 or (y == 0 and x > 0):
        half = 0
    else:
        half = 1
    # within a half-turn, compare by slope via cross product; encode as a
    # rational key x/y-free: use (half, -x/|v| ...) -- instead return a
    # functools key object
    return (half, _SlopeKey(x, y))


class _SlopeKey:
    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x, self.y = x, y

    def __lt__(self, other):
        # both vectors lie in the same open half-turn, so cross > 0 means
        # self comes first in CCW order
        return self.x * other.y - self.y * other.x > 0

    def __eq__(self, other):
        return self.x * other.y - self.y * other.x == 0


def _cycle_area2(pts):
    s = 0
    n = len(pts)
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s


def mixed_volume(P, Q):
    """MV(P, Q) = Vol(P + Q) - Vol(P) - Vol(Q); integer on lattice input."""
    pv, qv = P.vertices, Q.vertices
    if len(pv) == 1 or len(qv) == 1:
        return 0
    s = _cycle_area2(_sum_walk(pv, qv)) - area2(P) - area2(Q)
    return _ratio(s, 2)


def _require_lattice(P):
    if not P.is_lattice:
        raise ValueError("lattice operation on rational polygon")


def lattice_points(P):
    """All integer points of a lattice polygon, sorted lexicographically."""
    return list(_lattice_points_tuple(P))


def _lattice_points_tuple(P, _cache={}):
    cached = _cache.get(P)
    if cached is not None:
        return cached
    pts = tuple(_lattice_points_raw(P))
    if len(_cache) > 65536:
        _cache.clear()
    _cache[P] = pts
    return pts


def _lattice_points_raw(P):
    _require_lattice(P)
    vs = P.vertices
    if len(vs) == 1:
        return [vs[0]]
    if len(vs) == 2:
        (x0, y0), (x1, y1) = vs
        g = gcd(abs(x1 - x0), abs(y1 - y0))
        sx, sy = (x1 - x0) // g, (y1 - y0) // g
        return sorted((x0 + i * sx, y0 + i * sy) for i in range(g + 1))
    ys = [y for _, y in vs]
    pts = []
    for y in range(min(ys), max(ys) + 1):
        lo, hi = _row_bounds(vs, y)
        if lo is not None:
            pts.extend((x, y) for x in range(lo, hi + 1))
    pts.sort()
    return pts


def _row_bounds(vs, y):
    """Exact [ceil(xmin), floor(xmax)] of the slice at height y, or Nones."""
    xmin = xmax = None
    n = len(vs)
    for i in range(n):
        (x0, y0), (x1, y1) = vs[i], vs[(i + 1) % n]
        if y0 == y1:
            if y0 != y:
                continue
            cands = [x0, x1]
        else:
            if not (min(y0, y1) <= y <= max(y0, y1)):
                continue
            cands = [Fraction(x0 * (y1 - y) + x1 * (y - y0), y1 - y0)]
        for x in cands:
            if xmin is None or x < xmin:
                xmin = x
            if xmax is None or x > xmax:
                xmax = x
    if xmin is None:
        return None, None
    lo = xmin if isinstance(xmin, int) else -((-xmin.numerator) // xmin.denominator)
    hi = xmax if isinstance(xmax, int) else xmax.numerator // xmax.denominator
    if lo > hi:
        return None, None
    return lo, hi


def boundary_lattice_count(P):
    """Number of integer points on the boundary (all points if dim < 2)."""
    _require_lattice(P)
    vs = P.vertices
    if len(vs) == 1:
        return 1
    if len(vs) == 2:
        return lattice_length(P) + 1
    total = 0
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        total += gcd(abs(b[0] - a[0]), abs(b[1] - a[1]))
    return total


def interior_count(P):
    """Integer points strictly inside P; 0 when dim < 2."""
    _require_lattice(P)
    if dim(P) < 2:
        return 0
    return len(lattice_points(P)) - boundary_lattice_count(P)


def face(P, alpha):
    """The face of P where <alpha, .> attains its minimum."""
    if alpha[0] == 0 and alpha[1] == 0:
        raise ValueError("zero direction")
    vals = [dot(alpha, v) for v in P.vertices]
    m = min(vals)
    return _mk([v for v, val in zip(P.vertices, vals) if val == m])


def support_value(P, alpha, mode="min"):
    """min or max of <alpha, .> over P."""
    vals = (dot(alpha, v) for v in P.vertices)
    if mode == "min":
        return min(vals)
    if mode == "max":
        return max(vals)
    raise ValueError("mode must be 'min' or 'max'")


def normal_rays(P, outer=False):
    """One primitive normal per edge, in cyclic (CCW boundary) order.

    Inner normals by default; pass outer=True for the negated list.  Both
    orientations are exposed by name so call sites never guess.
    """
    if dim(P) != 2:
        raise ValueError("no 2-dimensional normal fan")
    vs = P.vertices
    rays = []
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        d = primitive((b[0] - a[0], b[1] - a[1]))
        inner = rotate90(d)
        rays.append((-inner[0], -inner[1]) if outer else inner)
    return rays


def lattice_length(S):
    """Lattice-point count minus one of a point or lattice segment."""
    _require_lattice(S)
    if dim(S) > 1:
        raise ValueError("lattice length of a 2-dimensional polygon")
    if len(S.vertices) == 1:
        return 0
    (x0, y0), (x1, y1) = S.vertices
    return gcd(abs(x1 - x0), abs(y1 - y0))


def shave(P, rho):
    """Remove the lattice-width-one strip along the edge with inner normal rho.

    Returns P intersected with {q : <q, rho> >= m + 1}, m the support
    minimum.  Raises when rho is not an inner edge normal or the result
    drops below dimension 2.
    """
    if dim(P) != 2:
        raise ValueError("polytope too small to shave")
    if tuple(rho) not in normal_rays(P):
        raise ValueError("shave direction is not an inner edge normal")
    m = support_value(P, rho, "min")
    clipped = halfplane_clip(P, rho, m + 1)
    if clipped is None or dim(clipped) < 2:
        raise ValueError("polytope too small to shave")
    return clipped


def halfplane_clip(P, alpha, c):
    """P intersected with {q : <q, alpha> >= c}, or None when empty."""
    vs = P.vertices
    if len(vs) == 1:
        return P if dot(alpha, vs[0]) >= c else None
    out = []
    if len(vs) == 2:
        segs = [(vs[0], vs[1])]
    else:
        segs = [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]
    for a, b in segs:
        fa, fb = dot(alpha, a) - c, dot(alpha, b) - c
        if fa >= 0:
            out.append(a)
        if (fa > 0 > fb) or (fa < 0 < fb):
            t = Fraction(fa, fa - fb)
            out.append((a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])))
    if len(vs) == 2 and dot(alpha, vs[1]) >= c:
        out.append(vs[1])
    return _mk(out) if out else None


def contains(P, p):
    """Exact membership test."""
    p = (_norm(p[0]), _norm(p[1]))
    vs = P.vertices
    if len(vs) == 1:
        return vs[0] == p
    if len(vs) == 2:
        a, b = vs
        if cross(a, b, p) != 0:
            return False
        return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(
            a[1], b[1]
        ) <= p[1] <= max(a[1], b[1])
    return all(
        cross(vs[i], vs[(i + 1) % len(vs)], p) >= 0 for i in range(len(vs))
    )


# --- JSON wire format -------------------------------------------------------
#
# {"vertices": [[x_num, x_den, y_num, y_den], ...]}, with the shorthand
# [[x, y], ...] accepted and emitted when every coordinate is integral.


def polygon_to_obj(P):
    if P.is_lattice:
        return {"vertices": [[x, y] for x, y in P.vertices]}
    rows = []
    for x, y in P.vertices:
        fx, fy = Fraction(x), Fraction(y)
        rows.append([fx.numerator, fx.denominator, fy.numerator, fy.denominator])
    return {"vertices": rows}


def polygon_from_obj(obj):
    rows = obj["vertices"] if isinstance(obj, dict) else obj
    pts = []
    for row in rows:
        if len(row) == 2:
            pts.append((int(row[0]), int(row[1])))
        elif len(row) == 4:
            pts.append((Fraction(row[0], row[1]), Fraction(row[2], row[3])))
        else:
            raise ValueError("vertex row must have 2 or 4 entries")
    return Polygon(pts)


def polygon_dumps(P):
    return json.dumps(polygon_to_obj(P), separators=(",", ":"))


def polygon_loads(s):
    return polygon_from_obj(json.loads(s))
