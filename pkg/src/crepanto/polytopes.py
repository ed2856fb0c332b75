"""Exact convex hulls, volumes and mixed volumes in low dimension.

Brute-force hyperplane enumeration with exact rational predicates; all the
polytopes handled here have a handful of vertices in dimension at most four,
where this is both simple and fast.
"""

import itertools
from fractions import Fraction
from math import factorial, lcm

from . import guards, linalg, lp


def extreme_points(points) -> list[tuple[Fraction, ...]]:
    """The vertices of the convex hull of the given points."""
    pts = sorted({tuple(Fraction(x) for x in p) for p in points})
    out = []
    for i, p in enumerate(pts):
        others = [q for j, q in enumerate(pts) if j != i]
        if not others or not _in_hull(p, others):
            out.append(p)
    return out


def _in_hull(p, pts) -> bool:
    n = len(pts)
    dim = len(p)
    eq = [[pts[j][i] for j in range(n)] for i in range(dim)]
    eq.append([1] * n)
    rhs = list(p) + [1]
    return lp.maximize([0] * n, eq, rhs) is not None


def polytope_volume(points) -> Fraction:
    """Euclidean volume of conv(points); zero when not full-dimensional."""
    pts = extreme_points(points)
    if not pts:
        return Fraction(0)
    dim = len(pts[0])
    guards.check(dim, guards.POLYTOPE_DIM, "polytope dimension")
    if _affine_dim(pts) < dim:
        return Fraction(0)
    total = Fraction(0)
    for simplex in _triangulate(pts):
        base = simplex[0]
        rows = [[a - b for a, b in zip(v, base)] for v in simplex[1:]]
        total += abs(linalg.det(rows))
    return total / factorial(dim)


def mixed_volume(polytopes) -> Fraction:
    """Minkowski mixed volume, normalized so that V(P,...,P) = vol(P)."""
    r = len(polytopes)
    dims = {len(tuple(p[0])) for p in polytopes}
    if len(dims) != 1 or dims != {r}:
        raise ValueError("need r polytopes in dimension r")
    guards.check(r, guards.MIXED_DIM, "mixed-volume dimension")
    total = Fraction(0)
    for size in range(1, r + 1):
        for subset in itertools.combinations(range(r), size):
            s = minkowski_sum([polytopes[i] for i in subset])
            total += (-1) ** (r - size) * polytope_volume(s)
    return total / factorial(r)


def minkowski_sum(polytopes) -> list[tuple[Fraction, ...]]:
    acc = [tuple(Fraction(x) for x in p) for p in polytopes[0]]
    for other in polytopes[1:]:
        sums = [
            tuple(a + Fraction(b) for a, b in zip(p, q))
            for p in acc
            for q in other
        ]
        acc = extreme_points(sums)
    return extreme_points(acc)


def _affine_dim(pts) -> int:
    den = lcm(*(x.denominator for p in pts for x in p))
    base = [x * den for x in pts[0]]
    rows = [[int(x * den - b) for x, b in zip(p, base)] for p in pts[1:]]
    rows = [[int(v) for v in row] for row in rows]
    return linalg.rank_int(rows) if rows else 0


def _triangulate(pts):
    """Simplices (as vertex tuples) triangulating conv(pts).

    Recursive apex construction: cone the first vertex over the
    triangulated facets that do not contain it.
    """
    d = _affine_dim(pts)
    if len(pts) == d + 1:
        return [tuple(pts)]
    apex = pts[0]
    out = []
    for facet in _facets(pts, d):
        if apex in facet:
            continue
        for piece in _triangulate(facet):
            out.append((apex,) + piece)
    return out


def _facets(pts, d):
    """Vertex sets of the facets of conv(pts), which has affine dim d."""
    den = lcm(*(x.denominator for p in pts for x in p))
    ints = [tuple(int(x * den) for x in p) for p in pts]
    facets = {}
    for comb in itertools.combinations(range(len(pts)), d):
        base = ints[comb[0]]
        rows = [[a - b for a, b in zip(ints[i], base)] for i in comb[1:]]
        # normals to the candidate hyperplane inside the hull's affine space
        hull_rows = [[a - b for a, b in zip(q, ints[0])] for q in ints[1:]]
        normals = [
            v
            for v in linalg.kernel_int(rows + [[0] * len(base)], len(base))
            if any(sum(n * h for n, h in zip(v, hrow)) != 0 for hrow in hull_rows)
        ] if rows else []
        if not rows:
            continue
        if linalg.rank_int(rows) != d - 1:
            continue
        for normal in normals:
            offset = sum(n * b for n, b in zip(normal, base))
            values = [sum(n * x for n, x in zip(normal, q)) - offset for q in ints]
            if all(v >= 0 for v in values) or all(v <= 0 for v in values):
                members = tuple(i for i, v in enumerate(values) if v == 0)
                if len(members) >= d:
                    facets[members] = True
                break
    return [[pts[i] for i in members] for members in facets]
