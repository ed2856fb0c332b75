from math import comb

from crepanto import hilbert
from crepanto.lattices import LatticePoint, WeightLattice


def test_group_residues_1_2_11():
    lat = WeightLattice.cyclic(2, (1, 1))
    assert hilbert.group_residues(lat) == [
        LatticePoint((0, 0), 2),
        LatticePoint((1, 1), 2),
    ]


def test_group_residues_1_5_14():
    lat = WeightLattice.cyclic(5, (1, 4))
    res = hilbert.group_residues(lat)
    assert len(res) == 5
    assert LatticePoint((2, 3), 5) in res


def test_group_residues_1_9_1233():
    lat = WeightLattice.cyclic(9, (1, 2, 3, 3))
    res = hilbert.group_residues(lat)
    assert len(res) == 9
    assert LatticePoint((5, 1, 6, 6), 9) in res


def test_hilbert_basis_1_2_11():
    lat = WeightLattice.cyclic(2, (1, 1))
    basis = hilbert.hilbert_basis_orthant(lat)
    assert set(basis.elements) == {
        LatticePoint((2, 0), 2),
        LatticePoint((0, 2), 2),
        LatticePoint((1, 1), 2),
    }


def test_hilbert_basis_1_5_14():
    lat = WeightLattice.cyclic(5, (1, 4))
    basis = hilbert.hilbert_basis_orthant(lat)
    expected = {LatticePoint((j, 5 - j), 5) for j in range(1, 5)}
    expected.update({LatticePoint((5, 0), 5), LatticePoint((0, 5), 5)})
    assert set(basis.elements) == expected


def test_hilbert_basis_1_9_1233_contains_senior_element():
    lat = WeightLattice.cyclic(9, (1, 2, 3, 3))
    basis = hilbert.hilbert_basis_orthant(lat)
    assert LatticePoint((5, 1, 6, 6), 9) in basis


def test_witnesses_reconstruct_rejected_candidates():
    lat = WeightLattice.cyclic(9, (1, 2, 3, 3))
    basis = hilbert.hilbert_basis_orthant(lat)
    assert basis.witnesses
    for rejected, a, b in basis.witnesses:
        assert a + b == rejected
        assert lat.contains(a) and lat.contains(b)
        assert not a.is_zero() and not b.is_zero()


def test_matches_brute_force_oracle_small_groups():
    cases = [
        (5, (1, 4)),
        (7, (1, 1, 5)),
        (7, (1, 2, 4)),
        (9, (1, 2, 3, 3)),
        (12, (1, 5, 6)),
        (11, (1, 3, 7)),
    ]
    for l, weights in cases:
        lat = WeightLattice.cyclic(l, weights)
        basis = hilbert.hilbert_basis_orthant(lat)
        assert set(basis.elements) == hilbert.hilbert_basis_brute_force(lat)


def test_dual_hilbert_basis_1_5_14():
    lat = WeightLattice.cyclic(5, (1, 4))
    assert hilbert.dual_orthant_hilbert_basis(lat) == [(0, 5), (1, 1), (5, 0)]


def test_embedding_dimension_examples():
    assert hilbert.embedding_dimension(WeightLattice.cyclic(5, (1, 4))) == 3
    assert hilbert.embedding_dimension(WeightLattice.cyclic(2, (1, 1))) == 3


def test_embedding_dimension_veronese():
    # diagonal action of order l = r embeds in dimension C(r + l - 1, l)
    for r in (2, 3):
        lat = WeightLattice.cyclic(r, tuple([1] * r))
        assert hilbert.embedding_dimension(lat) == comb(2 * r - 1, r)


def test_basis_cardinality_bound():
    for l, weights in [(5, (1, 4)), (7, (1, 2, 4)), (9, (1, 2, 3, 3))]:
        lat = WeightLattice.cyclic(l, weights)
        assert len(hilbert.hilbert_basis_orthant(lat)) >= lat.dim
