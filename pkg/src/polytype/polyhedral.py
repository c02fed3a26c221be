"""From a conical pair to its 12-component polyhedral type.

Pipeline: jacobian support -> sigma and gaps -> edge taxonomy of the
origin-augmented pair -> non-properness polytopes -> discriminant polytope
by mixed-volume reconstruction -> the invariant vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .geometry import (
    Polygon,
    _lattice_points_tuple,
    dim,
    dot,
    face,
    hull,
    lattice_length,
    lattice_points,
    interior_count,
    minkowski,
    mixed_volume,
    normal_rays,
    primitive,
    scale,
    shave,
    support_value,
    translate,
)
from .newton import (
    ORIGIN,
    PolytopePair,
    delta_ind,
    is_conical_pair,
    newton_number,
    with_origin,
)


class DegeneratePairError(Exception):
    """The pair falls outside the discriminant pipeline (dim sigma < 2)."""

    def __init__(self, tag):
        super().__init__(tag)
        self.tag = tag


class InternalInconsistencyError(Exception):
    """An exact identity the pipeline relies on failed; never silently clamped."""


@dataclass(frozen=True)
class SigmaData:
    sigma: Polygon
    m_v: int
    m_h: int
    m_c: int


@dataclass(frozen=True)
class PairEdge:
    gamma1: Polygon
    gamma2: Polygon
    direction: tuple
    inner_normal: tuple
    long: bool
    short: bool
    semi_origin: bool
    origin: bool
    dicritical: bool
    lower: bool
    upper: bool


@dataclass(frozen=True)
class PolyhedralType:
    psi: tuple
    sigma_data: SigmaData
    delta: Polygon
    gammas: tuple
    degenerate_flags: frozenset = frozenset()


def jacobian_support(pair):
    """Exponents of the Jacobian determinant: u + v - (1,1) over
    non-proportional lattice-point pairs."""
    pts1 = _lattice_points_tuple(pair.a1)
    pts2 = _lattice_points_tuple(pair.a2)
    out = set()
    for u1, u2 in pts1:
        for v1, v2 in pts2:
            if u1 * v2 != u2 * v1:
                out.add((u1 + v1 - 1, u2 + v2 - 1))
    return out


def sigma_data(pair):
    """Critical-curve polytope, normalized to touch both axes, plus gaps."""
    supp = jacobian_support(pair)
    if not supp:
        raise DegeneratePairError("empty-jacobian-support")
    m_v = min(x for x, _ in supp)
    m_h = min(y for _, y in supp)
    sigma = translate(hull(supp), (-m_v, -m_h))
    m_c = 0 if dim(sigma) < 1 else 1
    return SigmaData(sigma=sigma, m_v=m_v, m_h=m_h, m_c=m_c)


def pair_edges(pair, p0=None):
    """Classified edges of the origin-augmented pair."""
    if p0 is None:
        p0 = with_origin(pair)
    a10, a20 = p0.a1, p0.a2
    total = minkowski(a10, a20)
    if dim(total) < 2:
        return []
    edges = []
    for alpha in normal_rays(total):
        g1 = face(a10, alpha)
        g2 = face(a20, alpha)
        m1 = support_value(a10, alpha, "min")
        m2 = support_value(a20, alpha, "min")
        verts = face(total, alpha).vertices
        direction = primitive(
            (verts[-1][0] - verts[0][0], verts[-1][1] - verts[0][1])
        )
        if direction < (0, 0):
            direction = (-direction[0], -direction[1])
        long = dim(g1) == 1 and dim(g2) == 1
        # semi-origin: a supporting line passes through 0 and vertex sides
        # are the origin itself
        cond51 = all(
            dim(g) != 0 or g.vertices[0] == ORIGIN for g in (g1, g2)
        )
        semi_origin = (m1 == 0 or m2 == 0) and cond51
        origin = semi_origin and m1 == 0 and m2 == 0
        dicritical = semi_origin and (alpha[0] < 0 or alpha[1] < 0)
        edges.append(
            PairEdge(
                gamma1=g1,
                gamma2=g2,
                direction=direction,
                inner_normal=alpha,
                long=long,
                short=not long,
                semi_origin=semi_origin,
                origin=origin,
                dicritical=dicritical,
                lower=dicritical and alpha[0] < 0,
                upper=dicritical and alpha[1] < 0,
            )
        )
    return edges


def _face_in_component(component, edge_face, alpha):
    """Lattice points of the component lying on the supporting line of the
    edge face; empty when the line misses the component."""
    m = support_value(component, alpha, "min")
    line_val = dot(alpha, edge_face.vertices[0])
    if m != line_val:
        return []
    return lattice_points(face(component, alpha))


def gamma_polytopes(pair, edges=None):
    """Newton polytopes of the non-properness components, one per long
    dicritical edge (at most two)."""
    if edges is None:
        edges = pair_edges(pair)
    p0 = None
    out = []
    for e in edges:
        if not (e.long and e.dicritical):
            continue
        v = e.direction
        if e.origin:
            bounds = []
            for comp, g in ((pair.a1, e.gamma1), (pair.a2, e.gamma2)):
                pts = _face_in_component(comp, g, e.inner_normal)
                ks = sorted(_v_multiple(p, v) for p in pts)
                if not ks:
                    raise InternalInconsistencyError(
                        "origin edge with no component support"
                    )
                bounds.append((ks[0], ks[-1]))
            (m1, n1), (m2, n2) = bounds
            out.append(hull([(m2, 0), (n2, 0), (0, m1), (0, n1)]))
        else:
            if p0 is None:
                p0 = with_origin(pair)
            m1 = support_value(p0.a1, e.inner_normal, "min")
            through0 = 1 if m1 == 0 else 2
            other = 2 if through0 == 1 else 1
            comp = pair.a1 if other == 1 else pair.a2
            g = e.gamma1 if other == 1 else e.gamma2
            length = lattice_length(
                hull(_face_in_component(comp, g, e.inner_normal))
            )
            if through0 == 1:
                out.append(hull([(0, 0), (length, 0)]))
            else:
                out.append(hull([(0, 0), (0, length)]))
    if len(out) > 2:
        raise InternalInconsistencyError(
            "more than two long dicritical edges: %d" % len(out)
        )
    return out


def _v_multiple(p, v):
    """k such that p = k*v for primitive v; p lies on the ray by construction."""
    if v[0] != 0:
        k, r = divmod(p[0], v[0])
    else:
        k, r = divmod(p[1], v[1])
    if r != 0:
        raise InternalInconsistencyError("point %r not a multiple of %r" % (p, v))
    return k


def _noo_edges(pair, edges=None, p0=None):
    """(index, lattice length) of each long dicritical non-origin edge; the
    index is the component whose supporting line misses the origin."""
    out = []
    if p0 is None:
        p0 = with_origin(pair)
    if edges is None:
        edges = pair_edges(pair, p0)
    for e in edges:
        if not (e.long and e.dicritical) or e.origin:
            continue
        m1 = support_value(p0.a1, e.inner_normal, "min")
        idx = 2 if m1 == 0 else 1
        g = e.gamma1 if idx == 1 else e.gamma2
        out.append((idx, lattice_length(g)))
    return out


def lifted_polytope(pair, Pi):
    """Lifted polytope: hull of b1*A1^0 + b2*A2^0 over the vertices of Pi."""
    p0 = with_origin(pair)
    return _lift_hull(p0.a1, p0.a2, Pi)


def lifted_support_polytope(pair, Pi):
    """Newton polytope of a generic polynomial supported on Pi composed
    with the map: hull of b1*A1 + b2*A2 over the vertices of a lattice Pi.

    Unlike lifted_polytope this sees the lower-left corner of Pi exactly,
    which the discriminant reconstruction needs; the two agree on
    staircase-closed Pi.
    """
    return _lift_hull(pair.a1, pair.a2, Pi)


def _lift_hull(c1, c2, Pi):
    from .geometry import _sum_walk

    pts = []
    for b1, b2 in Pi.vertices:
        p, q = scale(c1, b1), scale(c2, b2)
        if len(p.vertices) == 1:
            pts.extend(
                (p.vertices[0][0] + x, p.vertices[0][1] + y) for x, y in q.vertices
            )
        elif len(q.vertices) == 1:
            pts.extend(
                (q.vertices[0][0] + x, q.vertices[0][1] + y) for x, y in p.vertices
            )
        else:
            pts.extend(_sum_walk(p.vertices, q.vertices))
    return hull(pts)


def correction_term(pair, Pi, _noo=None):
    """A-correction term: weighted lattice lengths of the long dicritical
    non-origin edges, each multiplied by its own vertex maximum (absent
    edges contribute 0).

    The per-edge maxima live at distinct toric orbits, so they are summed
    independently; taking one max of the sum instead fails the exact
    reconstruction as soon as the two maxima sit at different vertices.
    """
    noo = _noo_edges(pair) if _noo is None else _noo
    total = 0
    for idx, length in noo:
        total += length * max(b[idx - 1] for b in Pi.vertices)
    return total


def delta_rays(pair, sig):
    """Inner-normal candidates for the discriminant's edges.

    One candidate per outer normal of sigma via the support maxima of A1
    and A2 (sign fixed empirically by the worked example), plus the two
    axis rays; rays that support no actual edge reconstruct to length zero
    and are dropped by the caller.
    """
    if dim(sig.sigma) != 2:
        raise DegeneratePairError("sigma-not-full-dimensional")
    cands = {(1, 0), (0, 1)}
    for tau in normal_rays(sig.sigma, outer=True):
        r1 = support_value(pair.a1, tau, "max")
        r2 = support_value(pair.a2, tau, "max")
        if r1 == 0 and r2 == 0:
            continue
        cands.add(primitive((-r1, -r2)))
    return _cyclic_sort(cands)


def _cyclic_sort(vectors):
    """Primitive vectors ordered counter-clockwise from the positive x-axis."""

    def key(v):
        x, y = v
        half = 0 if (y > 0 or (y == 0 and x > 0)) else 1
        return (half, _Slope(x, y))

    return sorted(vectors, key=key)


class _Slope:
    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x, self.y = x, y

    def __lt__(self, o):
        return self.x * o.y - self.y * o.x > 0

    def __eq__(self, o):
        return self.x * o.y - self.y * o.x == 0


def fan_polytope(rays, safety=1):
    """A lattice polygon whose inner normal fan has exactly the given rays,
    every edge of lattice length at least 2*safety.

    Edge lengths kappa solve sum(kappa_i * ray_i) = 0 with kappa_i >= 1,
    found by decomposing each -ray over a consecutive positive pair, then
    scaled up to the safety margin.
    """
    rays = _cyclic_sort({primitive(r) for r in rays})
    h = len(rays)
    if h < 3 or any(
        cross2_int(rays[i], rays[(i + 1) % h]) <= 0 for i in range(h)
    ):
        raise ValueError("rays do not positively span the plane")
    kappa = [Fraction(0)] * h
    for j in range(h):
        t = (-rays[j][0], -rays[j][1])
        placed = False
        for i in range(h):
            a, b = rays[i], rays[(i + 1) % h]
            d = cross2_int(a, b)
            if d <= 0:
                continue
            la = Fraction(cross2_int(t, b), d)
            lb = Fraction(cross2_int(a, t), d)
            if la >= 0 and lb >= 0:
                kappa[j] += 1
                kappa[i] += la
                kappa[(i + 1) % h] += lb
                placed = True
                break
        if not placed:
            raise ValueError("rays do not positively span the plane")
    den = 1
    for q in kappa:
        den = den * q.denominator // gcd(den, q.denominator)
    ints = [int(q * den) for q in kappa]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    lo = min(ints)
    need = 2 * safety
    if lo < need:
        m = -((-need) // lo)  # ceil
        ints = [v * m for v in ints]
    x, y = 0, 0
    verts = []
    for r, k in zip(rays, ints):
        verts.append((x, y))
        x += k * r[1]
        y -= k * r[0]
    if (x, y) != (0, 0):
        raise InternalInconsistencyError("fan polytope walk failed to close")
    mx = min(v[0] for v in verts)
    my = min(v[1] for v in verts)
    poly = hull([(vx - mx, vy - my) for vx, vy in verts])
    if set(normal_rays(poly)) != set(rays):
        raise InternalInconsistencyError("fan polytope has wrong normal fan")
    return poly


def cross2_int(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _mv_probe(pair, sig, Pi, _noo=None):
    """MV(Delta, Pi) evaluated without Delta: mixed volume against the
    lifted support polytope minus the correction term.

    Pi is first anchored to touch both axes (the identity is exact only
    there; MV(Delta, .) is translation-invariant so nothing is lost) and
    scaled to a lattice polytope (both sides are positively homogeneous).
    """
    mx = min(x for x, _ in Pi.vertices)
    my = min(y for _, y in Pi.vertices)
    if (mx, my) != (0, 0):
        Pi = translate(Pi, (-mx, -my))
    lam = 1
    for x, y in Pi.vertices:
        for c in (x, y):
            if isinstance(c, Fraction):
                lam = lam * c.denominator // gcd(lam, c.denominator)
    P = scale(Pi, lam) if lam != 1 else Pi
    val = mixed_volume(sig.sigma, lifted_support_polytope(pair, P))
    val -= correction_term(pair, P, _noo=_noo)
    return val if lam == 1 else Fraction(val, lam)


def face_length(pair, sig, Pi, rho, _noo=None):
    """Lattice length of the discriminant's face with inner normal rho."""
    if _noo is None:
        _noo = _noo_edges(pair)
    full = _mv_probe(pair, sig, Pi, _noo=_noo)
    shaved = _mv_probe(pair, sig, shave(Pi, rho), _noo=_noo)
    length = full - shaved
    if length != int(length) or length < 0:
        raise InternalInconsistencyError(
            "face length %s for ray %r" % (length, rho)
        )
    return int(length)


def delta_polytope(pair, sig=None, _noo=None):
    """The discriminant's Newton polytope, reconstructed edge by edge and
    normalized to touch both axes."""
    if sig is None:
        sig = sigma_data(pair)
    if _noo is None:
        _noo = _noo_edges(pair)
    rays = delta_rays(pair, sig)
    safety = 1
    while True:
        Pi = fan_polytope(rays, safety=safety)
        ok = True
        for rho in rays:
            try:
                shaved = shave(Pi, rho)
            except ValueError:
                ok = False
                break
            if set(normal_rays(shaved)) != set(rays):
                ok = False
                break
        if ok:
            break
        safety *= 2
        if safety > 1 << 12:
            raise InternalInconsistencyError("cannot stabilize shaving fan")
    full = _mv_probe(pair, sig, Pi, _noo=_noo)
    lengths = []
    for rho in rays:
        ln = full - _mv_probe(pair, sig, shave(Pi, rho), _noo=_noo)
        if ln != int(ln) or ln < 0:
            raise InternalInconsistencyError(
                "face length %s for ray %r" % (ln, rho)
            )
        lengths.append(int(ln))
    x = y = 0
    verts = []
    for rho, ln in zip(rays, lengths):
        if ln:
            verts.append((x, y))
            x += ln * rho[1]
            y -= ln * rho[0]
    if (x, y) != (0, 0):
        raise InternalInconsistencyError(
            "delta reconstruction does not close: residual %r" % ((x, y),)
        )
    if len(verts) < 3:
        raise InternalInconsistencyError("delta degenerated to dim < 2")
    mx = min(v[0] for v in verts)
    my = min(v[1] for v in verts)
    delta = hull([(vx - mx, vy - my) for vx, vy in verts])
    return delta


def _op_sum(op, polys):
    return sum(op(P) for P in polys)


def _op_prod(op, polys):
    vals = [op(P) for P in polys]
    if len(vals) < 2:
        return 0
    return vals[0] * vals[1]


def psi(pair):
    """The polyhedral type of a conical pair."""
    if not is_conical_pair(pair):
        raise ValueError("psi requires a conical pair")
    sig = sigma_data(pair)  # may raise DegeneratePairError
    if dim(sig.sigma) < 2:
        raise DegeneratePairError("sigma-not-full-dimensional")
    p0 = with_origin(pair)
    edges = pair_edges(pair, p0)
    gammas = gamma_polytopes(pair, edges)
    noo = _noo_edges(pair, edges, p0)
    delta = delta_polytope(pair, sig, _noo=noo)

    circ = interior_count
    nn = newton_number
    di = delta_ind

    psi1 = mixed_volume(p0.a1, p0.a2)
    psi2 = circ(sig.sigma)
    psi3 = nn(sig.sigma)
    m = (sig.m_c, sig.m_h, sig.m_v)
    psi4 = m[0] + m[1] + m[2]
    psi5 = m[0] * m[1] + m[0] * m[2] + m[1] * m[2]
    psi6 = m[0] * m[1] * m[2]
    psi7 = circ(delta) - circ(sig.sigma) + di(delta)
    if len(gammas) == 2:
        both = minkowski(gammas[0], gammas[1])
        psi8 = mixed_volume(*gammas) + nn(both) - nn(gammas[0]) - nn(gammas[1])
    else:
        psi8 = 0
    psi9 = _op_sum(lambda P: circ(P) + nn(P), gammas)
    psi10 = _op_prod(lambda P: circ(P) + nn(P), gammas)
    psi11 = _op_sum(lambda P: circ(P) + di(P), gammas)
    psi12 = _op_prod(lambda P: circ(P) + di(P), gammas)

    vec = (
        psi1,
        psi2,
        psi3,
        psi4,
        psi5,
        psi6,
        psi7,
        psi8,
        psi9,
        psi10,
        psi11,
        psi12,
    )
    if any(v < 0 for v in vec):
        raise InternalInconsistencyError("negative psi component in %r" % (vec,))
    return PolyhedralType(
        psi=tuple(int(v) for v in vec),
        sigma_data=sig,
        delta=delta,
        gammas=tuple(gammas),
    )
