"""Hilbert bases of the positive orthant with respect to a weight lattice.

Every additively irreducible element of the orthant monoid is either a unit
vector or lies in the half-open unit box: any other element drops a unit
vector and stays in the monoid.  That reduces the candidate set to the group
residues, and irreducibility is a pairwise test against them.
"""

import itertools
from dataclasses import dataclass
from math import gcd

from . import guards
from .lattices import LatticePoint, WeightLattice


@dataclass(frozen=True)
class HilbertBasis:
    lattice: WeightLattice
    elements: tuple[LatticePoint, ...]
    # for each rejected candidate, a witness pair summing to it
    witnesses: tuple[tuple[LatticePoint, LatticePoint, LatticePoint], ...]

    def __contains__(self, p: LatticePoint) -> bool:
        return p in set(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def group_residues(lattice: WeightLattice) -> list[LatticePoint]:
    """The group-order many lattice points of the half-open unit box."""
    return sorted(LatticePoint(r, lattice.den) for r in lattice.residues)


def hilbert_basis_orthant(lattice: WeightLattice) -> HilbertBasis:
    """Minimal generating system of (positive orthant) cap (weight lattice)."""
    den = lattice.den
    residues = {r for r in lattice.residues if any(r)}
    elements = list(lattice.units())
    witnesses = []
    for cand in sorted(residues):
        pair = _reduction_witness(cand, residues, den)
        if pair is None:
            elements.append(LatticePoint(cand, den))
        else:
            a, b = pair
            witnesses.append(
                (
                    LatticePoint(cand, den),
                    LatticePoint(a, den),
                    LatticePoint(b, den),
                )
            )
    return HilbertBasis(lattice, tuple(sorted(elements)), tuple(witnesses))


def _reduction_witness(cand, residues, den):
    for other in residues:
        if other == cand:
            continue
        if any(o > c for o, c in zip(other, cand)):
            continue
        diff = tuple(c - o for c, o in zip(cand, other))
        if diff in residues:
            return other, diff
    return None


def hilbert_basis_brute_force(lattice: WeightLattice) -> set[LatticePoint]:
    """Definitional oracle: pairwise reduction over residues plus units.

    Independent of the candidate filter above; kept quadratic on purpose and
    guarded to small groups.  Used by the tests for cross-validation.
    """
    guards.check(lattice.group_order, 64, "group order for the brute-force oracle")
    den = lattice.den
    nonzero = [r for r in lattice.residues if any(r)]
    sums = set()
    for a, b in itertools.product(nonzero, repeat=2):
        sums.add(tuple(x + y for x, y in zip(a, b)))
    survivors = {LatticePoint(r, den) for r in nonzero if r not in sums}
    survivors.update(lattice.units())
    return survivors


def dual_orthant_hilbert_basis(lattice: WeightLattice) -> list[tuple[int, ...]]:
    """Hilbert basis of the dual orthant with respect to the dual lattice.

    The dual lattice consists of the integer vectors pairing integrally with
    every group residue; the dual orthant's rays are the scaled unit covectors
    and the same box argument applies with the box spanned by those rays.
    """
    r = lattice.dim
    scales = [lattice.dual_primitive_scale(tuple(int(i == j) for j in range(r))) for i in range(r)]
    box = 1
    for c in scales:
        box *= c
    guards.check(box, guards.DUAL_ENUMERATION, "dual parallelotope size")
    members = []
    for point in itertools.product(*(range(c) for c in scales)):
        if lattice.in_dual(point) and any(point):
            members.append(point)
    member_set = set(members)
    basis = [tuple(c * int(i == j) for j in range(r)) for i, c in enumerate(scales)]
    for cand in sorted(members):
        reducible = False
        for other in members:
            if other == cand:
                continue
            if any(o > c for o, c in zip(other, cand)):
                continue
            diff = tuple(c - o for c, o in zip(cand, other))
            if lattice.in_dual(diff):
                reducible = True
                break
        if not reducible:
            basis.append(cand)
    return sorted(basis)


def embedding_dimension(lattice: WeightLattice) -> int:
    """Cardinality of the dual-orthant Hilbert basis."""
    return len(dual_orthant_hilbert_basis(lattice))
