"""Lattice triangulations of the junior simplex.

Cells are lattice simplices; a triangulation is the set of its maximal
cells over a fixed point configuration.  Coherence (regularity) is decided
exactly: a strictly convex quadratic lift is tried first and verified with
integer determinants, falling back to an exact rational LP when the lift
does not certify.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import guards, linalg, lp
from .cones import Cone, Fan
from .lattices import LatticePoint, WeightLattice


@dataclass(frozen=True)
class Simplex:
    vertices: tuple[LatticePoint, ...]

    @staticmethod
    def make(points) -> "Simplex":
        vs = tuple(sorted(set(points)))
        if len(vs) != len(tuple(points)):
            raise ValueError("repeated vertex")
        if not affinely_independent(vs):
            raise ValueError("vertices are affinely dependent")
        return Simplex(vs)

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class LatticeTriangulation:
    lattice: WeightLattice
    points: tuple[LatticePoint, ...]
    cells: tuple[Simplex, ...]

    @staticmethod
    def make(lattice, points, cells) -> "LatticeTriangulation":
        pts = tuple(sorted(set(points)))
        cs = tuple(sorted(set(cells), key=lambda s: s.vertices))
        for s in cs:
            if not set(s.vertices) <= set(pts):
                raise ValueError("cell uses a vertex outside the configuration")
        return LatticeTriangulation(lattice, pts, cs)


@dataclass
class SupportHeights:
    """Coherence certificate: heights in [0,1] with strict global slack."""

    heights: dict
    functionals: dict
    epsilon: Fraction


@dataclass
class Incoherent:
    epsilon: Fraction
    tight: tuple


def affinely_independent(points) -> bool:
    if len(points) <= 1:
        return True
    den = lcm(*(p.den for p in points))
    base = points[0].rescaled(den).nums
    rows = [[a - b for a, b in zip(p.rescaled(den).nums, base)] for p in points[1:]]
    return linalg.rank_int(rows) == len(points) - 1


def is_elementary(lattice: WeightLattice, s: Simplex) -> bool:
    """True when the only lattice points of the simplex are its vertices.

    Scans the lattice points of the bounding box (one integer translate per
    group residue) and tests simplex membership exactly.
    """
    vs = s.vertices
    fracs = [v.fractions() for v in vs]
    dim = vs[0].dim
    den = lattice.den
    vertex_set = set(vs)
    count = 0
    bounds = [(min(f[i] for f in fracs), max(f[i] for f in fracs)) for i in range(dim)]
    for res in lattice.residues:
        ranges = []
        for i in range(dim):
            lo, hi = bounds[i]
            kmin = _fceil((lo * den - res[i]) / den)
            kmax = _ffloor((hi * den - res[i]) / den)
            ranges.append(range(kmin, kmax + 1))
        for shift in itertools.product(*ranges):
            count += 1
            guards.check(count, guards.ELEMENTARY_SCAN, "elementary-test scan size")
            nums = tuple(res[i] + shift[i] * den for i in range(dim))
            p = LatticePoint(nums, den)
            if p in vertex_set:
                continue
            if _simplex_contains(vs, p):
                return False
    return True


def is_basic(lattice: WeightLattice, s: Simplex) -> bool:
    """Relative volume 1/dim! with respect to the simplex's own sublattice."""
    vs = s.vertices
    coords = [lattice.coordinates(v) for v in vs]
    edges = [[a - b for a, b in zip(c, coords[0])] for c in coords[1:]]
    if not edges:
        return True
    sat = linalg.saturation(edges)
    sat_t = [list(col) for col in zip(*sat)]
    rel = []
    for e in edges:
        x = linalg.solve(sat_t, e)
        if x is None or any(c.denominator != 1 for c in x):
            raise ValueError("edge outside saturated span")
        rel.append([int(c) for c in x])
    return abs(linalg.det_int(rel)) == 1


def simplex_cone_multiplicity(lattice: WeightLattice, s: Simplex) -> int:
    """Multiplicity of the cone spanned by the simplex's actual vertices."""
    return Cone(tuple(sorted(s.vertices)), lattice).multiplicity()


def is_junior_configuration(t: LatticeTriangulation) -> bool:
    units = set(t.lattice.units())
    return units <= set(t.points) and all(p.coordinate_sum() == 1 for p in t.points)


def validate(t: LatticeTriangulation, pairwise: str = "auto") -> None:
    """Structural validity; pairwise face intersections per the policy flag.

    pairwise="full" forces the quadratic exact pairwise check, "skip" trusts
    the construction (certified series triangulations), "auto" runs it for
    small cell counts.
    """
    if not t.cells:
        raise ValueError("empty triangulation")
    d = t.cells[0].dim
    if any(s.dim != d for s in t.cells):
        raise ValueError("cells of mixed dimension")
    if is_junior_configuration(t):
        total = sum(simplex_cone_multiplicity(t.lattice, s) for s in t.cells)
        if total != t.lattice.group_order:
            raise ValueError("cells do not cover the junior simplex")
    if pairwise == "full" or (pairwise == "auto" and len(t.cells) <= 40):
        for s1, s2 in itertools.combinations(t.cells, 2):
            if not simplices_compatible(s1, s2):
                raise ValueError("two cells do not intersect in a common face")


def classify(t: LatticeTriangulation, pairwise: str = "auto") -> dict[str, bool]:
    """Flags {is_maximal, is_basic, is_crepant} of a valid triangulation."""
    validate(t, pairwise=pairwise)
    return {
        "is_maximal": all(is_elementary(t.lattice, s) for s in t.cells),
        "is_basic": all(is_basic(t.lattice, s) for s in t.cells),
        "is_crepant": all(p.coordinate_sum() == 1 for p in t.points),
    }


def simplices_compatible(s1: Simplex, s2: Simplex) -> bool:
    """Exact test that two simplices intersect in their common face."""
    common = set(s1.vertices) & set(s2.vertices)
    den = lcm(*(p.den for p in s1.vertices + s2.vertices))
    v1 = [p.rescaled(den).nums for p in s1.vertices]
    v2 = [p.rescaled(den).nums for p in s2.vertices]
    dim = len(v1[0])
    k1, k2 = len(v1), len(v2)
    eq = []
    for i in range(dim):
        eq.append([v[i] for v in v1] + [-v[i] for v in v2])
    eq.append([1] * k1 + [0] * k2)
    eq.append([0] * k1 + [1] * k2)
    rhs = [0] * dim + [1, 1]
    obj = [0 if v in common else 1 for v in s1.vertices]
    obj += [0 if v in common else 1 for v in s2.vertices]
    out = lp.maximize(obj, eq, rhs)
    if out is None:
        return not common
    value, _ = out
    return value == 0


# ---------------------------------------------------------------------------
# coherence


class _AffineFrame:
    """Integer homogeneous coordinates for a point configuration.

    Every point maps to (affine coordinates..., D) with one global integer
    scale D, so barycentric computations reduce to integer determinants.
    """

    def __init__(self, points):
        points = list(points)
        den = lcm(*(p.den for p in points))
        base = points[0].rescaled(den).nums
        edges = []
        for p in points[1:]:
            e = [a - b for a, b in zip(p.rescaled(den).nums, base)]
            if linalg.rank_int(edges + [e]) > len(edges):
                edges.append(e)
        self.dim = len(edges)
        edges_t = [list(col) for col in zip(*edges)]
        raw = {}
        scale = 1
        for p in points:
            e = [a - b for a, b in zip(p.rescaled(den).nums, base)]
            x = linalg.solve(edges_t, e)
            if x is None:
                raise ValueError("point outside the configuration's affine hull")
            raw[p] = x
            for c in x:
                scale = lcm(scale, c.denominator)
        self.den = den
        self.scale = scale
        self._hom = {
            p: tuple(int(c * scale) for c in raw[p]) + (scale,) for p in points
        }

    def homogeneous(self, p: LatticePoint) -> tuple[int, ...]:
        return self._hom[p]


def coherence_certificate(t: LatticeTriangulation):
    """A strictly upper convex support certificate, or Incoherent.

    The certificate's heights are normalized into [0,1]; epsilon is the
    exact minimal slack extension(w) - height(w) over all maximal cells and
    non-member points, and is strictly positive.
    """
    frame = _AffineFrame(t.points)
    quad = {
        p: -sum(x * x for x in p.rescaled(frame.den).nums) for p in t.points
    }
    out = _verify_heights(t, frame, quad)
    if out is not None and out[0] > 0:
        return _normalized_certificate(t, frame, quad)
    return _lp_certificate(t, frame)


def verify_certificate(t: LatticeTriangulation, heights: dict) -> Fraction:
    """Replay a certificate: the exact minimal slack of the given heights."""
    frame = _AffineFrame(t.points)
    out = _verify_heights(t, frame, heights, stop_early=False)
    if out is None:
        raise ValueError("degenerate cell in the configuration frame")
    return out[0]


def _verify_heights(t, frame, heights, stop_early: bool = True):
    """Exact minimal slack and per-cell affine functionals.

    Functionals are stored as (g, d): the extension of the heights over a
    cell evaluates at w as <g, hom(w)> / d.
    """
    pts = t.points
    best = None
    functionals = {}
    for cell in t.cells:
        cols = [frame.homogeneous(v) for v in cell.vertices]
        n = len(cols)
        if n != len(cols[0]):
            return None
        mat = [[cols[j][i] for j in range(n)] for i in range(n)]
        d = linalg.det_int(mat)
        if d == 0:
            return None
        hvec = [heights[v] for v in cell.vertices]
        g = []
        for j in range(n):
            rows = [mat[i] if i != j else hvec for i in range(n)]
            g.append(_det_mixed(rows))
        functionals[cell] = (tuple(g), d)
        sgn = 1 if d > 0 else -1
        for w in pts:
            if w in cell.vertices:
                continue
            val = sum(gi * wi for gi, wi in zip(g, frame.homogeneous(w)))
            val -= d * heights[w]
            slack = Fraction(sgn * val, abs(d))
            if best is None or slack < best:
                best = slack
                if stop_early and best <= 0:
                    return best, functionals
    return (best if best is not None else Fraction(1)), functionals


def _det_mixed(rows):
    if all(isinstance(x, int) for row in rows for x in row):
        return linalg.det_int(rows)
    return linalg.det(rows)


def _normalized_certificate(t, frame, heights):
    values = [Fraction(h) for h in heights.values()]
    lo, hi = min(values), max(values)
    span = hi - lo if hi > lo else Fraction(1)
    norm = {p: (Fraction(h) - lo) / span for p, h in heights.items()}
    eps, functionals = _verify_heights(t, frame, norm, stop_early=False)
    assert eps > 0
    return SupportHeights(norm, functionals, eps)


def _lp_certificate(t, frame):
    pts = list(t.points)
    index = {p: i for i, p in enumerate(pts)}
    n = len(pts)
    rows = []
    rhs = []
    labels = []
    for cell in t.cells:
        cols = [frame.homogeneous(v) for v in cell.vertices]
        k = len(cols)
        mat = [[cols[j][i] for j in range(k)] for i in range(k)]
        for w in pts:
            if w in cell.vertices:
                continue
            bary = linalg.solve(mat, list(frame.homogeneous(w)))
            # extension(w) - h_w >= eps, i.e. -(sum_i b_i h_i) + h_w + eps <= 0
            row = [Fraction(0)] * (n + 2)
            for b, v in zip(bary, cell.vertices):
                row[index[v]] -= b
            row[index[w]] += 1
            row[n] += 1
            row[n + 1] -= 1
            rows.append(row)
            rhs.append(Fraction(0))
            labels.append((cell, w))
    for i in range(n):
        bound = [Fraction(0)] * (n + 2)
        bound[i] = Fraction(1)
        rows.append(bound)
        rhs.append(Fraction(1))
        labels.append(None)
    obj = [Fraction(0)] * n + [Fraction(1), Fraction(-1)]
    out = lp.maximize_ineq(obj, rows, rhs)
    if out is None:
        raise RuntimeError("height LP cannot be infeasible")
    value, x = out
    heights = {p: x[index[p]] for p in pts}
    if value > 0:
        eps, functionals = _verify_heights(t, frame, heights, stop_early=False)
        return SupportHeights(heights, functionals, eps)
    tight = []
    for label, row, r in zip(labels, rows, rhs):
        if label is None:
            continue
        if sum(c * xi for c, xi in zip(row, x)) == r:
            tight.append(label)
    return Incoherent(value, tuple(tight))


# ---------------------------------------------------------------------------
# fans and enumeration


def fan_of(t: LatticeTriangulation, certified: bool = False) -> Fan:
    """The fan of cones over the maximal cells; refines the orthant fan."""
    if not is_junior_configuration(t):
        raise ValueError("fan construction expects a junior configuration")
    total = sum(simplex_cone_multiplicity(t.lattice, s) for s in t.cells)
    if total != t.lattice.group_order:
        raise ValueError("triangulation does not cover the junior simplex")
    cones = [Cone.make(t.lattice, s.vertices) for s in t.cells]
    return Fan.make(t.lattice, cones, pairwise="skip" if certified else "auto")


def enumerate_maximal_triangulations(
    lattice: WeightLattice, points, max_count: int = 64
) -> tuple[list[LatticeTriangulation], bool]:
    """All maximal triangulations of a junior configuration.

    Exhaustive tiling with elementary cells; any pairwise-compatible cell
    set whose cone multiplicities add up to the group order tiles the whole
    simplex.  Returns (triangulations, truncated).
    """
    pts = tuple(sorted(set(points)))
    guards.check(len(pts), guards.TRIANGULATION_POINTS, "configuration size")
    probe = LatticeTriangulation.make(lattice, pts, [])
    if not is_junior_configuration(probe):
        raise ValueError("enumeration expects a junior configuration")
    target = lattice.group_order
    d = _config_dim(pts)
    cells = []
    for subset in itertools.combinations(pts, d + 1):
        if not affinely_independent(subset):
            continue
        s = Simplex(tuple(subset))
        if is_elementary(lattice, s):
            cells.append((s, simplex_cone_multiplicity(lattice, s)))
    compat: dict = {}

    def compatible(i: int, j: int) -> bool:
        key = (min(i, j), max(i, j))
        if key not in compat:
            compat[key] = simplices_compatible(cells[key[0]][0], cells[key[1]][0])
        return compat[key]

    suffix = [0] * (len(cells) + 1)
    for i in range(len(cells) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + cells[i][1]

    found: list[LatticeTriangulation] = []
    truncated = False

    def search(start: int, chosen: list[int], volume: int):
        nonlocal truncated
        if truncated:
            return
        if volume == target:
            found.append(
                LatticeTriangulation.make(lattice, pts, [cells[i][0] for i in chosen])
            )
            if len(found) >= max_count:
                truncated = True
            return
        for i in range(start, len(cells)):
            if volume + suffix[i] < target:
                break
            if volume + cells[i][1] > target:
                continue
            if all(compatible(i, j) for j in chosen):
                chosen.append(i)
                search(i + 1, chosen, volume + cells[i][1])
                chosen.pop()
                if truncated:
                    return

    search(0, [], 0)
    return found, truncated


def _config_dim(points) -> int:
    den = lcm(*(p.den for p in points))
    base = points[0].rescaled(den).nums
    rows = [[a - b for a, b in zip(p.rescaled(den).nums, base)] for p in points[1:]]
    return linalg.rank_int(rows) if rows else 0


def _simplex_contains(vertices, p: LatticePoint) -> bool:
    den = lcm(p.den, *(v.den for v in vertices))
    cols = [v.rescaled(den).nums for v in vertices]
    dim = len(cols[0])
    a = [[c[i] for c in cols] for i in range(dim)]
    a.append([1] * len(cols))
    b = list(p.rescaled(den).nums) + [1]
    x = linalg.solve(a, b)
    if x is None:
        return False
    return all(v >= 0 for v in x)


def _fceil(f: Fraction) -> int:
    return -((-f).numerator // (-f).denominator) if f.denominator != 1 else int(f)


def _ffloor(f: Fraction) -> int:
    return f.numerator // f.denominator
