"""Projectivized sums of line bundles over projective space, as toric data.

These are the smooth compact toric varieties of Picard number two; their
fans have exactly two disjoint primitive collections.  The module builds
the fans, recognizes them inside arbitrary smooth complete fans, and
evaluates the closed-form self-intersection numbers.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import linalg, polytopes
from .cones import Cone, Fan
from .lattices import LatticePoint, WeightLattice


@dataclass(frozen=True)
class HKVariety:
    dim: int
    twists: tuple[int, ...]
    fan: Fan

    @property
    def fiber_dim(self) -> int:
        return len(self.twists)

    @property
    def base_dim(self) -> int:
        return self.dim - len(self.twists)


@dataclass(frozen=True)
class Detection:
    kind: str  # "hk_bundle" | "projective_space" | "not_hk"
    dim: int = 0
    twists: tuple[int, ...] = ()


def build_hk_fan(dim: int, twists) -> HKVariety:
    """Fan of the projectivized bundle with the given twists over P^s."""
    twists = tuple(int(x) for x in twists)
    k = len(twists)
    s = dim - k
    if k < 1 or s < 1 or any(t < 0 for t in twists):
        raise ValueError("need dim > fiber dim >= 1 and nonnegative twists")
    lat = WeightLattice.standard(dim)
    fiber = [lat.unit(i) for i in range(k)]
    fiber.append(lat.point([-1] * k + [0] * s))
    base = [lat.unit(k + j) for j in range(s)]
    last = list(twists) + [-1] * s
    base.append(lat.point(last))
    cones = []
    for i in range(k + 1):
        for j in range(s + 1):
            rays = [f for t, f in enumerate(fiber) if t != i]
            rays += [b for t, b in enumerate(base) if t != j]
            cones.append(Cone.make(lat, rays))
    fan = Fan.make(lat, cones, pairwise="skip")
    assert fan.is_complete() and fan.is_smooth()
    return HKVariety(dim, twists, fan)


def primitive_collections(fan: Fan) -> list[frozenset]:
    """All primitive collections of generators of a smooth complete fan."""
    if not fan.is_complete():
        raise ValueError("primitive collections need a complete fan")
    if not fan.is_smooth():
        raise ValueError("primitive collections are defined for smooth fans")
    rays = fan.rays
    if len(rays) > 12:
        raise ValueError("too many rays for the subset search")
    cone_sets = set()
    for c in fan.maximal_cones:
        for size in range(1, len(c.rays) + 1):
            for sub in itertools.combinations(c.rays, size):
                cone_sets.add(frozenset(sub))
    out = []
    for size in range(2, len(rays) + 1):
        for sub in itertools.combinations(rays, size):
            cand = frozenset(sub)
            if cand in cone_sets:
                continue
            if all(cand - {n} in cone_sets for n in cand):
                out.append(cand)
    return out


def detect(fan: Fan) -> Detection:
    """Recognize a Picard-number-two bundle fan (or projective space)."""
    if not (fan.is_complete() and fan.is_smooth()):
        return Detection("not_hk")
    r = fan.lattice.dim
    picard = len(fan.rays) - r
    colls = primitive_collections(fan)
    if picard == 1 and len(colls) == 1:
        total = _ray_sum(next(iter(colls)))
        if total.is_zero():
            return Detection("projective_space", dim=r)
        return Detection("not_hk")
    if picard != 2 or len(colls) != 2:
        return Detection("not_hk")
    c1, c2 = colls
    if c1 & c2:
        return Detection("not_hk")
    for fiber, base in ((c1, c2), (c2, c1)):
        if not _ray_sum(fiber).is_zero():
            continue
        twists = _twists_from_relation(fan, fiber, base)
        if twists is not None:
            return Detection("hk_bundle", dim=r, twists=twists)
    return Detection("not_hk")


def _ray_sum(rays) -> LatticePoint:
    rays = sorted(rays)
    total = rays[0]
    for p in rays[1:]:
        total = total + p
    return total


def _twists_from_relation(fan: Fan, fiber, base):
    """Solve sum(base) = sum_i lambda_i n_i over the fiber rays, normalized
    so the twists are nonnegative with minimum zero."""
    lat = fan.lattice
    fiber = sorted(fiber)
    target = lat.coordinates(_ray_sum(base))
    cols = [lat.coordinates(n) for n in fiber[:-1]]
    a = [[c[i] for c in cols] for i in range(lat.dim)]
    x = linalg.solve(a, list(target))
    if x is None or any(c.denominator != 1 for c in x):
        return None
    coeffs = [int(c) for c in x] + [0]
    m = min(coeffs)
    twists = tuple(sorted(c - m for c in coeffs))[1:]  # drop one zero slot
    return twists


def canonical_self_intersection(dim: int, twist: int, printed: bool = False) -> int:
    """Self-intersection of the canonical divisor of the one-twist bundle.

    With printed=True the shifted variant (base twist - dim - 1) is
    evaluated instead; it disagrees with the adjunction route and is kept
    for comparison only.
    """
    if twist < 1:
        raise ValueError("twist must be positive")
    shift = dim + 1 if printed else dim
    total = 0
    for i in range(dim):
        total += comb(dim, i) * (-2) ** (dim - i) * (twist - shift) ** i * twist ** (dim - i - 1)
    return total


def e_divisor_self_intersection(dim: int, twist: int) -> int:
    return twist ** (dim - 1)


def ews_embedding_dimension(dim: int, twists) -> int:
    """Dimension of the smallest projective space carrying a quadric model."""
    twists = tuple(int(t) for t in twists)
    s = dim - len(twists)
    if s < 1:
        raise ValueError("fiber dimension must be smaller than the total")
    return s + sum(comb(t + s + 1, s) for t in twists)


def anticanonical_polytope(fan: Fan) -> list[tuple[Fraction, ...]]:
    """Vertices of the polytope of the anticanonical divisor.

    Requires the anticanonical support data (height -1 on every ray) to be
    strictly convex on the fan, i.e. the divisor to be ample.
    """
    r = fan.lattice.dim
    vertices = []
    ray_fracs = {ray: ray.fractions() for ray in fan.rays}
    cone_vertex = {}
    for cone in fan.maximal_cones:
        a = [list(ray_fracs[ray]) for ray in cone.rays]
        x = linalg.solve(a, [Fraction(-1)] * r)
        if x is None:
            raise ValueError("degenerate maximal cone")
        cone_vertex[cone] = tuple(x)
    for cone, vtx in cone_vertex.items():
        for ray in fan.rays:
            if ray in cone.rays:
                continue
            value = sum(a * b for a, b in zip(vtx, ray_fracs[ray]))
            if value <= -1:
                raise ValueError("anticanonical divisor is not ample on this fan")
        vertices.append(vtx)
    return polytopes.extreme_points(vertices)


def self_intersection_via_volume(vertices, dim: int) -> Fraction:
    """dim! times the polytope volume."""
    return factorial(dim) * polytopes.polytope_volume(vertices)
