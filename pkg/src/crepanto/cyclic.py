"""Cyclic (and finite abelian) quotient types and their invariants.

A type order/weights encodes the diagonal action generated by the first
primitive root of unity raised to each weight.  All classification here is
pure number theory on the weights; the geometry lives in the other modules.
"""

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from .errors import NonGorensteinError, SmallnessError
from .hilbert import hilbert_basis_orthant
from .lattices import LatticePoint, WeightLattice


@dataclass(frozen=True)
class CyclicQuotientType:
    order: int
    weights: tuple[int, ...]

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("order must be at least 2")
        if len(self.weights) < 2:
            raise ValueError("need at least two weights")
        if any(w < 0 or w >= self.order for w in self.weights):
            raise ValueError("weights must lie in [0, order)")
        if sum(1 for w in self.weights if w) < 2:
            raise ValueError("at least two weights must be nonzero")
        for i in range(len(self.weights)):
            rest = [w for j, w in enumerate(self.weights) if j != i]
            if gcd(self.order, *rest) != 1:
                raise SmallnessError(
                    f"1/{self.order}{self.weights} contains pseudoreflections"
                )

    @property
    def dim(self) -> int:
        return len(self.weights)

    @cached_property
    def lattice(self) -> WeightLattice:
        return WeightLattice.cyclic(self.order, self.weights)

    def is_gorenstein(self) -> bool:
        return sum(self.weights) % self.order == 0

    def splitting_codimension(self) -> int:
        """dim minus the number of zero weights; equals dim in the msc case."""
        return self.dim - sum(1 for w in self.weights if w == 0)

    def is_msc(self) -> bool:
        return self.splitting_codimension() == self.dim

    def is_isolated(self) -> bool:
        return all(gcd(w, self.order) == 1 for w in self.weights)

    def normal_form(self) -> tuple[int, ...]:
        """Lexicographic minimum over unit multiples of the sorted weights."""
        l = self.order
        best = None
        for unit in range(1, l):
            if gcd(unit, l) != 1:
                continue
            cand = tuple(sorted((unit * w) % l for w in self.weights))
            if best is None or cand < best:
                best = cand
        return best

    def equivalent(self, other: "CyclicQuotientType") -> bool:
        return self.order == other.order and self.normal_form() == other.normal_form()


@dataclass(frozen=True)
class JuniorData:
    vertices: tuple[LatticePoint, ...]
    interior: tuple[LatticePoint, ...]
    boundary: tuple[LatticePoint, ...]

    @property
    def points(self) -> tuple[LatticePoint, ...]:
        return tuple(sorted(self.vertices + self.interior + self.boundary))

    @property
    def non_vertex_points(self) -> tuple[LatticePoint, ...]:
        return tuple(sorted(self.interior + self.boundary))


@dataclass(frozen=True)
class CohomologyProfile:
    dims: tuple[int, ...]
    euler: int


@dataclass(frozen=True)
class CriterionResult:
    passes: bool
    violators: tuple[LatticePoint, ...]
    basis_size: int


def _require_gorenstein(t: CyclicQuotientType) -> None:
    if not t.is_gorenstein():
        raise NonGorensteinError(
            f"1/{t.order}{t.weights} is not Gorenstein (weight sum not 0 mod {t.order})"
        )


def junior_points(t: CyclicQuotientType) -> JuniorData:
    """Unit-coordinate-sum lattice points of the simplex conv(e_1..e_r)."""
    _require_gorenstein(t)
    return junior_points_of_lattice(t.lattice)


def junior_points_of_lattice(lattice: WeightLattice) -> JuniorData:
    den = lattice.den
    vertices = tuple(lattice.units())
    vertex_set = set(vertices)
    interior, boundary = [], []
    for res in sorted(lattice.residues):
        if sum(res) != den:
            continue
        p = LatticePoint(res, den)
        if p in vertex_set:
            continue
        (boundary if 0 in res else interior).append(p)
    return JuniorData(vertices, tuple(interior), tuple(boundary))


def necessary_criterion(t: CyclicQuotientType) -> CriterionResult:
    """Screen for crepant-resolution existence: every Hilbert-basis element
    of the orthant must have coordinate sum one.  Necessary, not sufficient.
    """
    _require_gorenstein(t)
    return necessary_criterion_of_lattice(t.lattice)


def necessary_criterion_of_lattice(lattice: WeightLattice) -> CriterionResult:
    basis = hilbert_basis_orthant(lattice)
    violators = tuple(p for p in basis.elements if p.coordinate_sum() != 1)
    return CriterionResult(not violators, violators, len(basis))


def cohomology_cyclic(t: CyclicQuotientType) -> CohomologyProfile:
    """Cohomology dimensions by counting weighted residue sums."""
    _require_gorenstein(t)
    l, r = t.order, t.dim
    dims = [0] * r
    for k in range(l):
        total = sum((k * w) % l for w in t.weights)
        q, rem = divmod(total, l)
        if rem:
            raise NonGorensteinError("non-integral residue sum")
        dims[q] += 1
    return CohomologyProfile(tuple(dims), l)


def cohomology_parallelotope(lattice: WeightLattice) -> CohomologyProfile:
    """Same dimensions via the residues of the half-open unit box.

    Works for any finite abelian (not just cyclic) Gorenstein action.
    """
    den = lattice.den
    r = lattice.dim
    dims = [0] * r
    for res in lattice.residues:
        q, rem = divmod(sum(res), den)
        if rem:
            raise NonGorensteinError("action is not Gorenstein")
        dims[q] += 1
    return CohomologyProfile(tuple(dims), lattice.group_order)


def cohomology_3d_closed_form(t: CyclicQuotientType) -> CohomologyProfile:
    """Closed form in the order and the weight gcds, dimension three only."""
    if t.dim != 3:
        raise ValueError("closed form is specific to dimension 3")
    _require_gorenstein(t)
    l = t.order
    g = sum(gcd(w, l) for w in t.weights)
    h2 = (l + g) // 2 - 2
    h4 = (l - g) // 2 + 1
    return CohomologyProfile((1, h2, h4), l)


def veronese_classify(order: int, dim: int) -> dict[str, bool]:
    """Terminal / canonical / Gorenstein flags of the diagonal type."""
    return {
        "terminal": dim > order,
        "canonical": dim >= order,
        "gorenstein": dim % order == 0,
    }
