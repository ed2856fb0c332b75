from fractions import Fraction

import pytest

from crepanto.lattices import LatticePoint, WeightLattice


def test_residues_cyclic_1_5_14():
    lat = WeightLattice.cyclic(5, (1, 4))
    assert lat.group_order == 5
    assert (1, 4) in lat.residues
    assert (4, 1) in lat.residues
    assert (1, 1) not in lat.residues


def test_membership():
    lat = WeightLattice.cyclic(5, (1, 4))
    assert lat.contains(LatticePoint((1, 4), 5))
    assert not lat.contains(LatticePoint((1, 1), 5))
    assert lat.contains(LatticePoint((1, 0), 1))


def test_membership_e1_standard():
    lat = WeightLattice.standard(3)
    assert lat.contains(LatticePoint((1, 0, 0), 1))


def test_residue_1_9_1233():
    lat = WeightLattice.cyclic(9, (1, 2, 3, 3))
    assert (5, 1, 6, 6) in lat.residues


def test_two_factor_group():
    # Z/4 x Z/4 inside SL(3, C)
    lat = WeightLattice(3, ((4, (1, 3, 0)), (4, (0, 1, 3))))
    assert lat.group_order == 16
    assert lat.den == 4


def test_determinant():
    lat = WeightLattice.cyclic(7, (1, 1, 5))
    assert lat.determinant() == Fraction(1, 7)


def test_point_constructor_validates():
    lat = WeightLattice.cyclic(5, (1, 4))
    p = lat.point((1, 4))
    assert p.den == 5
    with pytest.raises(ValueError):
        lat.point((1, 1))


def test_primitivity():
    lat = WeightLattice.cyclic(5, (1, 4))
    assert lat.is_primitive(lat.point((1, 4)))
    assert not lat.is_primitive(lat.point((2, 8)))
    assert lat.primitive(lat.point((2, 8))) == lat.point((1, 4))
    # (1,1) is primitive for Z^2 scaled into denominator 5
    assert lat.is_primitive(lat.point((5, 5)))


def test_coordinates_roundtrip():
    lat = WeightLattice.cyclic(7, (1, 1, 5))
    for raw in [(1, 1, 5), (7, 0, 0), (2, 2, 3), (3, 3, 1)]:
        p = lat.point(raw)
        coords = lat.coordinates(p)
        rebuilt = [Fraction(0)] * 3
        for c, row in zip(coords, lat.basis):
            for i in range(3):
                rebuilt[i] += c * row[i]
        assert tuple(rebuilt) == p.fractions()


def test_dual_scale():
    lat = WeightLattice.cyclic(5, (1, 4))
    assert lat.dual_primitive_scale((1, 0)) == 5
    assert lat.dual_primitive_scale((1, 1)) == 1
    assert lat.in_dual((1, 1))
    assert not lat.in_dual((1, 0))


def test_point_arithmetic():
    a = LatticePoint((1, 4), 5)
    b = LatticePoint((1, 0), 1)
    assert (a + b).nums == (6, 4)
    assert (b - a).nums == (4, -4)
    assert not (a - a).is_nonnegative() or (a - a).is_zero()
