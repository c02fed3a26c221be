"""Listing lattice polygons inside k times the unit simplex.

The enumerator grows clockwise vertex words from the lexicographically
minimal vertex, extending a word by any point strictly to the right of the
three support lines; every convex polygon is reached by exactly one word,
so the search tree is a tree and no deduplication is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .geometry import Polygon
from .newton import PolytopePair, is_conical

HARD_CAP = 9


@dataclass(frozen=True)
class EnumOptions:
    k: int
    min_dim: int = 2
    up_to_translation: bool = False
    hard_cap: int = HARD_CAP

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if self.k > self.hard_cap:
            raise ValueError("k exceeds the configured cap %d" % self.hard_cap)
        if self.min_dim not in (0, 1, 2):
            raise ValueError("min_dim must be 0, 1 or 2")


def simplex_points(k):
    """All lattice points of k*simplex, lexicographic order."""
    if k < 1:
        raise ValueError("k must be positive")
    return [(x, y) for x in range(k + 1) for y in range(k + 1 - x)]


def _right_of(a, b, p):
    """p strictly to the right of the directed line a -> b."""
    return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) < 0


def enumerate_polygons(opts):
    """Yield each polytope with vertices in k*simplex exactly once.

    Emission order is deterministic: points, segments, then polygons in
    BFS layers by vertex count.
    """
    S = simplex_points(opts.k)
    seen_reps = set() if opts.up_to_translation else None

    def emit(poly):
        if seen_reps is None:
            return poly
        mx = min(x for x, _ in poly.vertices)
        my = min(y for _, y in poly.vertices)
        rep = Polygon._from_canonical(
            tuple((x - mx, y - my) for x, y in poly.vertices)
        )
        if rep in seen_reps:
            return None
        seen_reps.add(rep)
        return rep

    if opts.min_dim == 0:
        for s in S:
            out = emit(Polygon._from_canonical((s,)))
            if out is not None:
                yield out
    words = []
    for i, s1 in enumerate(S):
        for s2 in S[i + 1 :]:
            words.append((s1, s2))
    if opts.min_dim <= 1:
        for w in words:
            out = emit(Polygon._from_canonical(w))
            if out is not None:
                yield out
    while words:
        grown = []
        for w in words:
            w1, wn1, wn = w[0], w[-2], w[-1]
            for s in S:
                if s <= w1:
                    continue
                if (
                    _right_of(w1, w[1], s)
                    and _right_of(w1, wn, s)
                    and _right_of(wn1, wn, s)
                ):
                    grown.append(w + (s,))
        for w in grown:
            poly = Polygon(w)
            if len(poly.vertices) != len(w):
                raise AssertionError("enumerator produced a non-strict word: %r" % (w,))
            out = emit(poly)
            if out is not None:
                yield out
        words = grown


def brute_force_polygons(opts):
    """Hulls of all non-empty subsets of the simplex points (oracle).

    Guarded to k <= 4; filtered exactly like enumerate_polygons.
    """
    if opts.k > 4:
        raise ValueError("brute force oracle capped at k = 4")
    S = simplex_points(opts.k)
    out = set()
    n = len(S)
    for mask in range(1, 1 << n):
        pts = [S[i] for i in range(n) if mask >> i & 1]
        poly = Polygon(pts)
        if min(len(poly.vertices) - 1, 2) < opts.min_dim:
            continue
        if opts.up_to_translation:
            mx = min(x for x, _ in poly.vertices)
            my = min(y for _, y in poly.vertices)
            poly = Polygon._from_canonical(
                tuple((x - mx, y - my) for x, y in poly.vertices)
            )
        out.add(poly)
    return out


@lru_cache(maxsize=None)
def conical_polygons(k):
    """Conical full-dimensional polytopes in k*simplex, positions preserved."""
    opts = EnumOptions(k=k, min_dim=2, up_to_translation=False)
    return tuple(P for P in enumerate_polygons(opts) if is_conical(P))


def conical_pair_count(k):
    n = len(conical_polygons(k))
    return n * (n + 1) // 2


def pair_at(polys, index):
    """The index-th unordered pair (i <= j) in the deterministic stream."""
    n = len(polys)
    if not 0 <= index < n * (n + 1) // 2:
        raise IndexError(index)
    i = 0
    # row i holds (n - i) pairs: (i,i), (i,i+1), ..., (i,n-1)
    remaining = index
    while remaining >= n - i:
        remaining -= n - i
        i += 1
    j = i + remaining
    return PolytopePair(polys[i], polys[j])


def conical_pairs(k):
    """All unordered pairs (with repetition) of conical polytopes in k*simplex."""
    polys = conical_polygons(k)
    for i in range(len(polys)):
        for j in range(i, len(polys)):
            yield PolytopePair(polys[i], polys[j])
