"""The singularity series with weights (1,...,1, order-(dim-1)).

These are the Gorenstein cyclic quotients whose junior points lie on a
single line segment.  The module builds their unique maximal triangulation,
verifies uniqueness by exhausting the elementary cells, reports the
exceptional divisors with exact intersection numbers, and produces the two
blow-up factorizations of the resolution morphism.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from . import hkbundles, linalg
from .cones import Cone, Fan, star
from .cyclic import CyclicQuotientType
from .errors import CrepantoError
from .lattices import LatticePoint, WeightLattice
from .triangulations import (
    LatticeTriangulation,
    Simplex,
    SupportHeights,
    coherence_certificate,
    fan_of,
    simplex_cone_multiplicity,
)


@dataclass(frozen=True)
class SeriesType:
    order: int
    dim: int

    def __post_init__(self):
        if self.dim < 2 or self.order < self.dim:
            raise ValueError("series types need order >= dim >= 2")

    @property
    def nu(self) -> int:
        return self.order // (self.dim - 1)

    @property
    def remainder(self) -> int:
        return self.order % (self.dim - 1)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple([1] * (self.dim - 1) + [self.order - (self.dim - 1)])

    def quotient_type(self) -> CyclicQuotientType:
        return CyclicQuotientType(self.order, self.weights)

    @cached_property
    def lattice(self) -> WeightLattice:
        return WeightLattice.cyclic(self.order, self.weights)

    def chain_point(self, j: int) -> LatticePoint:
        """The j-th point on the junior line; index 0 is the last unit vector."""
        l, r = self.order, self.dim
        if j == 0:
            return self.lattice.unit(r - 1)
        nums = [j] * (r - 1) + [(j * (l - (r - 1))) % l]
        return LatticePoint(tuple(nums), l)

    def junior_points(self) -> list[LatticePoint]:
        pts = list(self.lattice.units())
        for j in range(1, self.nu + 1):
            p = self.chain_point(j)
            if p not in pts:
                pts.append(p)
        return sorted(pts)

    def is_basic(self) -> bool:
        return self.remainder in (0, 1)


# ---------------------------------------------------------------------------
# the triangulation


def build_triangulation(t: SeriesType) -> LatticeTriangulation:
    """The unique maximal triangulation of the junior simplex."""
    cells = [
        _span_cell(t, j - 1, j, xi)
        for j in range(1, t.nu + 1)
        for xi in _xi_tuples(t.dim)
    ]
    if t.remainder:
        cells.append(_last_cell(t))
    return LatticeTriangulation.make(t.lattice, t.junior_points(), cells)


def _xi_tuples(r: int):
    """(r-2)-subsets of the first r-1 unit-vector indices."""
    return itertools.combinations(range(r - 1), r - 2)


def _span_cell(t: SeriesType, i: int, j: int, xi) -> Simplex:
    pts = [t.chain_point(i), t.chain_point(j)]
    pts += [t.lattice.unit(q) for q in xi]
    return Simplex.make(pts)


def _last_cell(t: SeriesType) -> Simplex:
    pts = [t.chain_point(t.nu)] + [t.lattice.unit(q) for q in range(t.dim - 1)]
    return Simplex.make(pts)


def verify_uniqueness(t: SeriesType) -> bool:
    """Check that the elementary cells on the junior points are exactly the
    cells of the constructed triangulation.

    Junior points off the unit vectors are collinear, so a cell carries at
    most two of them; cells with a non-consecutive pair contain the point
    between (an exact one-line identity), and the remaining candidates are
    scanned in full.
    """
    l, r = t.order, t.dim
    nu = t.nu
    chain = [t.chain_point(j) for j in range(nu + 1)]
    # collinearity of the chain, verified once
    if nu >= 2:
        base, direction = chain[0], chain[1] - chain[0]
        for j in range(2, nu + 1):
            step = chain[j] - base
            if tuple(x * 1 for x in step.nums) != tuple(j * x for x in direction.nums):
                return False
    cells = set(build_triangulation(t).cells)
    points = t.junior_points()
    units = [t.lattice.unit(q) for q in range(r - 1)]
    found = set()
    # (a) two chain points plus r-2 of the first r-1 unit vectors
    for i, k in itertools.combinations(range(nu + 1), 2):
        if k > i + 1:
            # the in-between chain point witnesses non-elementarity:
            # (k-i) * chain[i+1] == (k-i-1) * chain[i] + chain[k]
            left = tuple((k - i) * x for x in chain[i + 1].nums)
            right = tuple(
                (k - i - 1) * a + b for a, b in zip(chain[i].nums, chain[k].nums)
            )
            assert left == right
            continue
        for xi in _xi_tuples(r):
            cand = tuple(sorted([chain[i], chain[k]] + [units[q] for q in xi]))
            if len(set(cand)) < r or not _independent_full(t, cand):
                continue
            if _cell_is_elementary(t, cand, points):
                found.add(cand)
    # (b) one chain point plus all r-1 first unit vectors
    for j in range(nu + 1):
        cand = tuple(sorted([chain[j]] + units))
        if len(set(cand)) < r or not _independent_full(t, cand):
            continue
        if _cell_is_elementary(t, cand, points):
            found.add(cand)
    expected = {tuple(sorted(c.vertices)) for c in cells}
    return found == expected


def _independent_full(t: SeriesType, cand) -> bool:
    mat = [list(p.nums) for p in cand]
    return linalg.det_int([list(col) for col in zip(*mat)]) != 0


def _cell_is_elementary(t: SeriesType, cand, points) -> bool:
    cols = [list(p.nums) for p in cand]
    mat = [[cols[j][i] for j in range(len(cols))] for i in range(t.dim)]
    d = linalg.det_int(mat)
    vertex_set = set(cand)
    for p in points:
        if p in vertex_set:
            continue
        if _contains_by_cramer(mat, d, p.nums):
            return False
    return True


def _contains_by_cramer(mat, d, nums) -> bool:
    n = len(mat)
    sgn = 1 if d > 0 else -1
    for j in range(n):
        rows = [
            [mat[i][k] if k != j else nums[i] for k in range(n)] for i in range(n)
        ]
        if sgn * linalg.det_int(rows) < 0:
            return False
    return True


def basicness(t: SeriesType) -> bool:
    """Whether the resolution is full: remainder of order mod (dim-1) in {0,1}.

    Cross-checked against the basicness of the constructed cells.
    """
    tri = build_triangulation(t)
    from .triangulations import is_basic as cell_basic

    computed = all(cell_basic(t.lattice, s) for s in tri.cells)
    closed_form = t.is_basic()
    assert computed == closed_form
    return closed_form


def euler_characteristic_of_series(t: SeriesType) -> int:
    return t.nu * (t.dim - 1) + (1 if t.remainder else 0)


def resolve(t: SeriesType):
    """Triangulation, certificate and fan, with the fan's validity
    established by the strict-separation data of the certificate."""
    tri = build_triangulation(t)
    cert = coherence_certificate(tri)
    if not isinstance(cert, SupportHeights):
        raise CrepantoError("series triangulation failed to certify as coherent")
    fan = fan_of(tri, certified=True)
    return tri, cert, fan


# ---------------------------------------------------------------------------
# divisors


@dataclass(frozen=True)
class DivisorReport:
    index: int
    kind: str  # "hk_bundle" | "projective_line" | "projective_space" | "projective_space_times_line"
    twist: int | None
    self_intersection: int
    self_intersection_printed: int | None
    with_next: tuple[int, int] | None  # (D_j^{r-1}.D_{j+1}, D_j.D_{j+1}^{r-1})


def divisor_indices(t: SeriesType) -> list[int]:
    last = t.nu - 1 if t.dim == 2 else t.nu
    return list(range(1, last + 1))


def divisor_reports(t: SeriesType) -> list[DivisorReport]:
    """Exceptional prime divisors of the full resolution, closed forms."""
    if not t.is_basic():
        raise CrepantoError("divisor reports require a fully resolvable type")
    l, r = t.order, t.dim
    indices = divisor_indices(t)
    out = []
    for j in indices:
        lam = l - (r - 1) * j
        if r == 2:
            kind, twist = "projective_line", None
        elif j < t.nu:
            kind, twist = "hk_bundle", lam
        elif t.remainder == 1:
            kind, twist = "projective_space", None
        else:
            kind, twist = "projective_space_times_line", None
        if r == 2 or j < t.nu:
            self_int = hkbundles.canonical_self_intersection(r - 1, lam)
            printed = hkbundles.canonical_self_intersection(r - 1, lam, printed=True)
        elif t.remainder == 1:
            self_int = (-r) ** (r - 1)
            printed = None
        else:
            self_int = (-(r - 1)) ** (r - 2)
            printed = None
        if j + 1 in indices:
            with_next = (
                (l - (r - 1) * (j + 1)) ** (r - 2),
                ((r - 1) * j - l) ** (r - 2),
            )
        else:
            with_next = None
        out.append(DivisorReport(j, kind, twist, self_int, printed, with_next))
    return out


def divisor_star(t: SeriesType, j: int, fan: Fan | None = None):
    """Quotient lattice and star fan of the j-th exceptional ray."""
    if fan is None:
        _, _, fan = resolve(t)
    ray = Cone.make(t.lattice, [t.chain_point(j)])
    return star(fan, ray)


def divisor_kind_check(t: SeriesType, j: int, fan: Fan | None = None) -> bool:
    """Recompute the divisor structure from its star fan and compare."""
    report = {d.index: d for d in divisor_reports(t)}[j]
    quotient, star_fan = divisor_star(t, j, fan)
    if report.kind in ("hk_bundle", "projective_line", "projective_space"):
        det = hkbundles.detect(star_fan)
        if report.kind == "hk_bundle":
            return det.kind == "hk_bundle" and det.twists == (report.twist,)
        if report.kind == "projective_line":
            # a complete smooth fan on a line is the projective line
            return quotient.dim == 1 and star_fan.is_complete()
        return det.kind == "projective_space" and det.dim == t.dim - 1
    # product with a line: split off the ray common to every maximal cone
    common = set(star_fan.maximal_cones[0].rays)
    for c in star_fan.maximal_cones[1:]:
        common &= set(c.rays)
    if len(common) != 1:
        return False
    line_ray = Cone.make(quotient, list(common))
    _, factor_fan = star(star_fan, line_ray)
    det = hkbundles.detect(factor_fan)
    return det.kind == "projective_space" and det.dim == t.dim - 2


@dataclass(frozen=True)
class ResidualSingularity:
    kind: str  # "isolated" | "one_parameter_family"
    order: int
    weights: tuple[int, ...]


def residual_singularities(t: SeriesType) -> ResidualSingularity:
    """The singularity left on the last chart when the type is not basic."""
    if t.is_basic():
        raise CrepantoError("basic series types resolve fully; nothing residual")
    l, r = t.order, t.dim
    rem = t.remainder
    cell_mult = simplex_cone_multiplicity(t.lattice, _last_cell(t))
    assert cell_mult == rem
    g = gcd(l, r - 1)
    if g == 1:
        weights = tuple([1] * (r - 1) + [(-(r - 1)) % rem])
        return ResidualSingularity("isolated", rem, weights)
    order = (r - 1) // g
    return ResidualSingularity("one_parameter_family", order, tuple([1] * (r - 1)))


# ---------------------------------------------------------------------------
# factorizations


@dataclass(frozen=True)
class FactorizationStep:
    index: int
    center: str
    inserted: tuple[LatticePoint, ...]
    triangulation: LatticeTriangulation


@dataclass(frozen=True)
class FactorizationPlan:
    mode: str
    steps: tuple[FactorizationStep, ...]

    @property
    def step_count(self) -> int:
        return len(self.steps)


def speedy_step_count(t: SeriesType) -> int:
    """Closed form for the number of simultaneous-center blow-ups."""
    l, r = t.order, t.dim
    if r == 2 or l % (r - 1) == 1:
        return ((l - 1) // (r - 1) + 1) // 2
    return (l // (r - 1)) // 2 + 1


def stepwise_step_count(t: SeriesType) -> int:
    return t.nu - (1 if t.dim == 2 else 0)


def factorize(t: SeriesType, mode: str) -> FactorizationPlan:
    """Blow-up factorization of the resolution at the fan level.

    mode "speedy": centers shrink the untriangulated span from both ends at
    once; mode "stepwise": one chain point is inserted per step.
    """
    if not t.is_basic():
        raise CrepantoError("factorization requires a fully resolvable type")
    if mode == "speedy":
        plan = _factorize_speedy(t)
    elif mode == "stepwise":
        plan = _factorize_stepwise(t)
    else:
        raise ValueError("mode must be 'speedy' or 'stepwise'")
    final = plan.steps[-1].triangulation
    target = build_triangulation(t)
    assert set(final.cells) == set(target.cells)
    return plan


def _cells_T1_span(t: SeriesType, i: int, k: int):
    """Cells conv(chain_i, chain_k, units in xi) for every xi, when i < k."""
    if i >= k:
        return []
    return [_span_cell(t, i, k, xi) for xi in _xi_tuples(t.dim)]


def _big_cell(t: SeriesType, j: int) -> Simplex:
    """conv(chain_j, e_1, ..., e_{r-1}); for dim 2 the tail segment."""
    if t.dim == 2:
        return _span_cell(t, j, t.order, ())
    pts = [t.chain_point(j)] + [t.lattice.unit(q) for q in range(t.dim - 1)]
    return Simplex.make(pts)


def _check_cover(t: SeriesType, cells) -> LatticeTriangulation:
    tri = LatticeTriangulation.make(t.lattice, t.junior_points(), cells)
    total = sum(simplex_cone_multiplicity(t.lattice, s) for s in tri.cells)
    if total != t.order:
        raise AssertionError("intermediate subdivision does not cover")
    return tri


def _factorize_speedy(t: SeriesType) -> FactorizationPlan:
    l, r = t.order, t.dim
    branch_a = r == 2 or l % (r - 1) == 1
    kappa = speedy_step_count(t)
    if branch_a:
        top = (l - 1) // (r - 1) if r > 2 else l - 1
        cells = set(_cells_T1_span(t, 0, 1))
        cells.update(_cells_T1_span(t, 1, top))
        cells.add(_big_cell(t, top))
        steps = [
            FactorizationStep(
                1,
                "closed point of the singular chart",
                _new_points(t, cells, set()),
                _check_cover(t, cells),
            )
        ]
        for i in range(1, kappa):
            removed = set(_cells_T1_span(t, i, top - i + 1))
            added = set(_cells_T1_span(t, i, i + 1))
            added.update(_cells_T1_span(t, i + 1, top - i))
            added.update(_cells_T1_span(t, top - i, top - i + 1))
            prev = set(steps[-1].triangulation.cells)
            cells = (prev - removed) | added
            steps.append(
                FactorizationStep(
                    i + 1,
                    f"orbit closure of the cone on chain points {i} and {top - i + 1}",
                    _new_points(t, cells, prev),
                    _check_cover(t, cells),
                )
            )
        return FactorizationPlan("speedy", tuple(steps))
    nu = t.nu
    cells = set(_cells_T1_span(t, 0, 1))
    cells.update(_cells_T1_span(t, 1, nu - 1))
    cells.add(_big_cell(t, nu - 1))
    steps = [
        FactorizationStep(
            1,
            "closed point of the singular chart",
            _new_points(t, cells, set()),
            _check_cover(t, cells),
        )
    ]
    for i in range(1, kappa - 1):
        removed = set(_cells_T1_span(t, i, nu - i))
        added = set(_cells_T1_span(t, i, i + 1))
        added.update(_cells_T1_span(t, i + 1, nu - i - 1))
        added.update(_cells_T1_span(t, nu - i - 1, nu - i))
        prev = set(steps[-1].triangulation.cells)
        cells = (prev - removed) | added
        steps.append(
            FactorizationStep(
                i + 1,
                f"orbit closure of the cone on chain points {i} and {nu - i}",
                _new_points(t, cells, prev),
                _check_cover(t, cells),
            )
        )
    prev = set(steps[-1].triangulation.cells)
    cells = (prev - {_big_cell(t, nu - 1)}) | set(_cells_T1_span(t, nu - 1, nu))
    steps.append(
        FactorizationStep(
            kappa,
            "one-dimensional singular locus over the last facet",
            _new_points(t, cells, prev),
            _check_cover(t, cells),
        )
    )
    return FactorizationPlan("speedy", tuple(steps))


def _factorize_stepwise(t: SeriesType) -> FactorizationPlan:
    l, r = t.order, t.dim
    total = stepwise_step_count(t)
    steps = []
    prev: set = set()
    for i in range(1, total + 1):
        cells = set()
        for j in range(1, i + 1):
            cells.update(_cells_T1_span(t, j - 1, j))
        if t.dim == 2:
            if i < total:
                cells.add(_big_cell(t, i))
            else:
                cells.update(_cells_T1_span(t, total, total + 1))
        elif i < t.nu:
            cells.add(_big_cell(t, i))
        elif t.remainder:
            cells.add(_last_cell(t))
        if i == 1:
            center = "closed point of the singular chart"
        elif r >= 3 and t.remainder == 0 and i == t.nu:
            center = "one-dimensional singular locus over the last facet"
        else:
            center = f"closed point of the chart at chain point {i - 1}"
        tri = _check_cover(t, cells)
        steps.append(FactorizationStep(i, center, _new_points(t, cells, prev), tri))
        prev = set(cells)
    return FactorizationPlan("stepwise", tuple(steps))


def _new_points(t: SeriesType, cells, prev_cells) -> tuple[LatticePoint, ...]:
    now = set()
    for s in cells:
        now.update(s.vertices)
    before = set()
    for s in prev_cells:
        before.update(s.vertices)
    if not prev_cells:
        before = set(t.lattice.units())
    return tuple(sorted(now - before))
