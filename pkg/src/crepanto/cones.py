"""Simplicial rational cones and fans over a weight lattice.

Cones store only their primitive ray generators; faces of a simplicial cone
are exactly the subsets of its rays, which keeps the data model small.  Fans
verify the pairwise face-intersection axiom with an exact test based on the
rational simplex solver.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

from . import linalg, lp
from .lattices import LatticePoint, WeightLattice

# Pairwise fan validation is quadratic with a small LP per pair; beyond this
# many maximal cones the caller must either pass certified=True (fans built
# from a certified coherent triangulation) or request it explicitly.
PAIRWISE_VALIDATION_LIMIT = 48


@dataclass(frozen=True)
class Cone:
    rays: tuple[LatticePoint, ...]
    lattice: WeightLattice

    @staticmethod
    def make(lattice: WeightLattice, points) -> "Cone":
        rays = sorted({lattice.primitive(p) for p in points})
        cone = Cone(tuple(rays), lattice)
        if cone.dim != len(rays):
            raise ValueError("cone generators are linearly dependent")
        return cone

    @property
    def dim(self) -> int:
        if not self.rays:
            return 0
        return linalg.rank_int(self._coords)

    @cached_property
    def _coords(self) -> list[list[int]]:
        return [list(self.lattice.coordinates(r)) for r in self.rays]

    def multiplicity(self) -> int:
        """Index of the subgroup spanned by the rays inside its saturation."""
        k = len(self.rays)
        if k == 0:
            return 1
        coords = self._coords
        if k == self.lattice.dim:
            d = linalg.det_int(coords)
            if d == 0:
                raise ValueError("non-simplicial cone")
            return abs(d)
        sat = linalg.saturation(coords)
        sat_t = [list(col) for col in zip(*sat)]
        rel = []
        for row in coords:
            x = linalg.solve(sat_t, row) if sat else None
            if x is None:
                raise ValueError("degenerate cone")
            if any(c.denominator != 1 for c in x):
                raise ValueError("inconsistent saturation")
            rel.append([int(c) for c in x])
        return abs(linalg.det_int(rel))

    def is_smooth(self) -> bool:
        return self.multiplicity() == 1

    def has_face(self, other: "Cone") -> bool:
        return set(other.rays) <= set(self.rays)

    def contains(self, p: LatticePoint) -> bool:
        cols = [r.fractions() for r in self.rays]
        a = [[cols[j][i] for j in range(len(cols))] for i in range(self.lattice.dim)]
        x = linalg.solve(a, list(p.fractions()))
        if x is None:
            return False
        back = [sum(cols[j][i] * x[j] for j in range(len(cols))) for i in range(self.lattice.dim)]
        return all(v >= 0 for v in x) and tuple(back) == p.fractions()

    def dual_generators(self) -> list[tuple[int, ...]]:
        """Primitive inward facet normals of a full-dimensional cone.

        They generate the dual cone and are scaled to be primitive in the
        dual of the weight lattice.
        """
        r = self.lattice.dim
        if len(self.rays) != r:
            raise ValueError("dual generators require a full-dimensional cone")
        out = []
        frac_rays = [ray.fractions() for ray in self.rays]
        for i in range(r):
            others = [list(frac_rays[j]) for j in range(r) if j != i]
            ker = _rational_kernel(others, r)
            if len(ker) != 1:
                raise ValueError("degenerate cone")
            normal = ker[0]
            value = sum(a * b for a, b in zip(normal, frac_rays[i]))
            if value < 0:
                normal = [-x for x in normal]
            elif value == 0:
                raise ValueError("degenerate cone")
            ints, _ = _primitive_int(normal)
            scale = self.lattice.dual_primitive_scale(tuple(ints))
            out.append(tuple(x * scale for x in ints))
        return out


@dataclass(frozen=True)
class Fan:
    maximal_cones: tuple[Cone, ...]
    lattice: WeightLattice

    @staticmethod
    def make(lattice: WeightLattice, cones, pairwise: str = "auto") -> "Fan":
        """Build a fan, verifying the pairwise face-intersection axiom.

        pairwise: "full" always runs the exact pairwise test, "skip" trusts
        the caller (used for fans whose validity is certified elsewhere),
        "auto" runs it below PAIRWISE_VALIDATION_LIMIT maximal cones.
        """
        uniq = sorted(set(cones), key=lambda c: c.rays)
        for c in uniq:
            if c.lattice != lattice:
                raise ValueError("cone lattice mismatch")
        fan = Fan(tuple(uniq), lattice)
        if pairwise == "full" or (
            pairwise == "auto" and len(uniq) <= PAIRWISE_VALIDATION_LIMIT
        ):
            fan.validate_pairwise()
        return fan

    def validate_pairwise(self) -> None:
        for c1, c2 in itertools.combinations(self.maximal_cones, 2):
            if not cones_meet_in_common_face(c1, c2):
                raise ValueError(
                    f"cones {_fmt(c1)} and {_fmt(c2)} do not intersect in a common face"
                )

    @cached_property
    def rays(self) -> list[LatticePoint]:
        seen = set()
        for c in self.maximal_cones:
            seen.update(c.rays)
        return sorted(seen)

    def cones_containing(self, tau: Cone) -> list[Cone]:
        return [c for c in self.maximal_cones if c.has_face(tau)]

    def is_smooth(self) -> bool:
        return all(c.is_smooth() for c in self.maximal_cones)

    def is_complete(self) -> bool:
        """Facet-pairing completeness test for pure simplicial fans."""
        r = self.lattice.dim
        if any(len(c.rays) != r for c in self.maximal_cones):
            return False
        count: dict = {}
        for c in self.maximal_cones:
            for facet in itertools.combinations(c.rays, r - 1):
                count[facet] = count.get(facet, 0) + 1
        return bool(count) and all(v == 2 for v in count.values())


def cones_meet_in_common_face(c1: Cone, c2: Cone) -> bool:
    """Exact test that two simplicial cones intersect in pos(common rays)."""
    common = set(c1.rays) & set(c2.rays)
    k1, k2 = len(c1.rays), len(c2.rays)
    dim = c1.lattice.dim
    den = lcm(c1.lattice.den, c2.lattice.den)
    cols1 = [r.rescaled(den).nums for r in c1.rays]
    cols2 = [r.rescaled(den).nums for r in c2.rays]
    eq = []
    for i in range(dim):
        eq.append([c[i] for c in cols1] + [-c[i] for c in cols2])
    eq.append([1] * (k1 + k2))
    rhs = [0] * dim + [1]
    obj = [0 if ray in common else 1 for ray in c1.rays]
    obj += [0 if ray in common else 1 for ray in c2.rays]
    out = lp.maximize(obj, eq, rhs)
    if out is None:
        # infeasible: the cones meet only at the origin, which is the
        # common face exactly when they share no ray
        return not common
    value, _ = out
    return value == 0


def star(fan: Fan, tau: Cone) -> tuple[WeightLattice, Fan]:
    """Quotient lattice and image fan of the cones containing tau."""
    if not tau.rays:
        return fan.lattice, fan
    ambient = fan.lattice
    carriers = fan.cones_containing(tau)
    if not carriers:
        raise ValueError("tau is not a face of any cone of the fan")
    tau_coords = [list(ambient.coordinates(r)) for r in tau.rays]
    sat = linalg.saturation(tau_coords)
    w = linalg.kernel_int(sat)
    q_dim = ambient.dim - len(sat)
    quotient = WeightLattice.standard(q_dim)
    if q_dim == 0:
        zero_cone = Cone((), quotient)
        return quotient, Fan.make(quotient, [zero_cone], pairwise="skip")
    # basis of the image lattice W . Z^r so the projection is surjective
    image_gens = [[w[i][j] for i in range(q_dim)] for j in range(ambient.dim)]
    h, _ = linalg.hnf(image_gens)
    cbasis = [row for row in h if any(x != 0 for x in row)]

    def project(point: LatticePoint) -> LatticePoint | None:
        coords = ambient.coordinates(point)
        raw = [sum(w[i][j] * coords[j] for j in range(ambient.dim)) for i in range(q_dim)]
        x = linalg.solve([list(c) for c in zip(*cbasis)], [Fraction(v) for v in raw])
        if x is None or any(v.denominator != 1 for v in x):
            raise ValueError("projection left the quotient lattice")
        nums = tuple(int(v) for v in x)
        if all(v == 0 for v in nums):
            return None
        return LatticePoint(nums, 1)

    image_cones = set()
    for sigma in carriers:
        pts = []
        for ray in sigma.rays:
            p = project(ray)
            if p is not None:
                pts.append(p)
        image_cones.add(Cone.make(quotient, pts))
    return quotient, Fan.make(quotient, image_cones)


def starring_subdivision(fan: Fan, tau: Cone) -> Fan:
    """Refine the fan by inserting the (primitivized) ray-sum of tau."""
    carriers = fan.cones_containing(tau)
    if not carriers:
        raise ValueError("tau is not a cone of the fan")
    total = tau.rays[0]
    for ray in tau.rays[1:]:
        total = total + ray
    n0 = fan.lattice.primitive(total)
    if n0 in tau.rays:
        return fan
    new_cones = [c for c in fan.maximal_cones if not c.has_face(tau)]
    for sigma in carriers:
        for dropped in tau.rays:
            pts = [r for r in sigma.rays if r != dropped] + [n0]
            new_cones.append(Cone.make(fan.lattice, pts))
    return Fan.make(fan.lattice, new_cones)


def envelope_subdivision(cone: Cone, functionals) -> Fan:
    """Subdivide a full-dimensional cone into the domains of linearity of
    y -> min_j <m_j, y> over the given dual vectors.

    Full-dimensional regions are kept once each; regions that are faces of
    other regions are dropped.
    """
    if not functionals:
        raise ValueError("need at least one functional")
    ms = [tuple(Fraction(x) for x in m) for m in functionals]
    lattice = cone.lattice
    r = lattice.dim
    if len(cone.rays) != r:
        raise ValueError("envelope subdivision requires a full-dimensional cone")
    facets = [_clear_row(f)[0] for f in cone.dual_generators()]
    seed = [list(p.rescaled(lattice.den).nums) for p in cone.rays]
    regions = []
    for j, mj in enumerate(ms):
        cuts = [
            _clear_row([mi[t] - mj[t] for t in range(r)])[0]
            for i, mi in enumerate(ms)
            if i != j
        ]
        rays = _refine_cone_rays(seed, facets, cuts, r)
        if len(rays) < r or linalg.rank_int(rays) < r:
            continue
        pts = sorted(_ray_to_lattice_point(lattice, v) for v in rays)
        regions.append(tuple(pts))
    uniq = sorted(set(regions))
    keep = []
    for reg in uniq:
        if any(reg != other and set(reg) <= set(other) for other in uniq):
            continue
        keep.append(reg)
    cones = [Cone.make(lattice, reg) for reg in keep]
    return Fan.make(lattice, cones)


def euler_characteristic(fan: Fan) -> int:
    """Number of maximal-dimensional cones."""
    r = fan.lattice.dim
    return sum(1 for c in fan.maximal_cones if len(c.rays) == r)


def discrepancies(fan: Fan, lattice: WeightLattice) -> dict[LatticePoint, Fraction]:
    """Discrepancy of each ray of a refinement of the positive orthant."""
    out = {}
    for ray in fan.rays:
        if not ray.is_nonnegative():
            raise ValueError("fan does not refine the positive orthant")
        out[ray] = ray.coordinate_sum() - 1
    return out


def is_crepant(fan: Fan, lattice: WeightLattice) -> bool:
    return all(v == 0 for v in discrepancies(fan, lattice).values())


def _rational_kernel(rows, n) -> list[list[Fraction]]:
    scaled = []
    for row in rows:
        ints, _ = _clear_row(row)
        scaled.append(ints)
    ker = linalg.kernel_int(scaled) if scaled else [[int(i == j) for j in range(n)] for i in range(n)]
    return [[Fraction(x) for x in v] for v in ker]


def _clear_row(row) -> tuple[list[int], int]:
    fr = [Fraction(x) for x in row]
    d = lcm(*(f.denominator for f in fr)) if fr else 1
    return [int(f * d) for f in fr], d


def _primitive_int(vec) -> tuple[list[int], int]:
    ints, d = _clear_row(vec)
    g = linalg.content(ints)
    if g:
        ints = [x // g for x in ints]
    return ints, d


def _refine_cone_rays(seed_rays, facets, cuts, r) -> list[list[int]]:
    """Extreme rays of a simplicial cone cut by halfspaces (double description).

    seed_rays are the extreme rays of the starting cone and facets its
    inward normals; each cut <a, .> >= 0 is applied incrementally, with new
    rays from adjacent (positive, negative) pairs.  Adjacency is decided by
    the rank of the common active constraint set.
    """
    rays = [tuple(v) for v in seed_rays]
    processed = [list(f) for f in facets]
    for cut in cuts:
        values = {v: sum(a * b for a, b in zip(cut, v)) for v in rays}
        keep = [v for v in rays if values[v] >= 0]
        pos = [v for v in rays if values[v] > 0]
        neg = [v for v in rays if values[v] < 0]
        if neg:
            active = {
                v: frozenset(
                    i
                    for i, row in enumerate(processed)
                    if sum(a * b for a, b in zip(row, v)) == 0
                )
                for v in rays
            }
            for u in pos:
                for w in neg:
                    common = active[u] & active[w]
                    if len(common) < r - 2:
                        continue
                    if linalg.rank_int([processed[i] for i in common] + [[0] * r]) < r - 2:
                        continue
                    new = tuple(
                        values[u] * wi - values[w] * ui for ui, wi in zip(u, w)
                    )
                    g = linalg.content(list(new))
                    if g:
                        new = tuple(x // g for x in new)
                    if new not in keep:
                        keep.append(new)
        processed.append(list(cut))
        rays = keep
        if not rays:
            break
    return [list(v) for v in rays]


def _ray_to_lattice_point(lattice: WeightLattice, v: list[int]) -> LatticePoint:
    den = lattice.den
    for k in range(1, den + 1):
        p = LatticePoint(tuple(k * x for x in v), den)
        if lattice.contains(p):
            return p
    raise ValueError("no lattice point on ray")


def _fmt(c: Cone) -> str:
    return "[" + ", ".join(f"{r.nums}/{r.den}" for r in c.rays) + "]"
