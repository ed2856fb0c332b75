from fractions import Fraction

import pytest

from crepanto import cones
from crepanto.cones import Cone, Fan
from crepanto.lattices import LatticePoint, WeightLattice


def orthant(lattice):
    return Cone.make(lattice, lattice.units())


def test_multiplicity_standard_orthant():
    for r in (2, 3, 4):
        lat = WeightLattice.standard(r)
        assert orthant(lat).multiplicity() == 1
        assert orthant(lat).is_smooth()


def test_multiplicity_elementary_non_basic_cone():
    # pos(e_1, ..., e_{r-1}, (1,...,1,2)) over Z^r has multiplicity 2
    for r in (3, 4):
        lat = WeightLattice.standard(r)
        pts = lat.units()[: r - 1] + [lat.point([1] * (r - 1) + [2])]
        assert Cone.make(lat, pts).multiplicity() == 2


def test_multiplicity_orthant_weight_lattice():
    for l, weights in [(5, (1, 4)), (7, (1, 1, 5)), (9, (1, 2, 3, 3))]:
        lat = WeightLattice.cyclic(l, weights)
        assert orthant(lat).multiplicity() == l
        assert not orthant(lat).is_smooth()


def test_multiplicity_lower_dimensional_cone():
    lat = WeightLattice.standard(3)
    c = Cone.make(lat, [lat.point((1, 1, 0)), lat.point((1, -1, 0))])
    assert c.multiplicity() == 2


def test_dual_generators_standard():
    lat = WeightLattice.standard(2)
    assert sorted(orthant(lat).dual_generators()) == [(0, 1), (1, 0)]


def test_dual_generators_weight_lattice_1_5_14():
    lat = WeightLattice.cyclic(5, (1, 4))
    assert sorted(orthant(lat).dual_generators()) == [(0, 5), (5, 0)]


def test_dual_generators_slanted():
    lat = WeightLattice.standard(2)
    c = Cone.make(lat, [lat.point((2, 1)), lat.point((0, 1))])
    assert sorted(c.dual_generators()) == [(-1, 2), (1, 0)]


def test_fan_validation_rejects_overlap():
    lat = WeightLattice.standard(2)
    c1 = Cone.make(lat, [lat.point((1, 0)), lat.point((0, 1))])
    c2 = Cone.make(lat, [lat.point((1, 1)), lat.point((1, -1))])
    with pytest.raises(ValueError):
        Fan.make(lat, [c1, c2], pairwise="full")


def test_fan_validation_accepts_subdivision():
    lat = WeightLattice.standard(2)
    c1 = Cone.make(lat, [lat.point((1, 0)), lat.point((1, 1))])
    c2 = Cone.make(lat, [lat.point((1, 1)), lat.point((0, 1))])
    fan = Fan.make(lat, [c1, c2], pairwise="full")
    assert len(fan.rays) == 3


def test_starring_subdivision_quadrant():
    lat = WeightLattice.standard(2)
    quad = orthant(lat)
    fan = Fan.make(lat, [quad])
    out = cones.starring_subdivision(fan, quad)
    expected = {
        Cone.make(lat, [lat.point((1, 1)), lat.point((0, 1))]),
        Cone.make(lat, [lat.point((1, 0)), lat.point((1, 1))]),
    }
    assert set(out.maximal_cones) == expected


def test_starring_on_ray_is_identity():
    lat = WeightLattice.standard(2)
    fan = Fan.make(lat, [orthant(lat)])
    ray = Cone.make(lat, [lat.point((1, 0))])
    assert cones.starring_subdivision(fan, ray) is fan


def test_starring_middle_face_in_3d():
    lat = WeightLattice.standard(3)
    fan = Fan.make(lat, [orthant(lat)])
    tau = Cone.make(lat, [lat.point((1, 0, 0)), lat.point((0, 1, 0))])
    out = cones.starring_subdivision(fan, tau)
    assert len(out.maximal_cones) == 2
    n0 = lat.point((1, 1, 0))
    assert all(n0 in c.rays for c in out.maximal_cones)


def test_envelope_weighted_blowup():
    lat = WeightLattice.standard(2)
    fan = cones.envelope_subdivision(orthant(lat), [(1, 0), (0, 2)])
    expected = {
        Cone.make(lat, [lat.point((2, 1)), lat.point((0, 1))]),
        Cone.make(lat, [lat.point((1, 0)), lat.point((2, 1))]),
    }
    assert set(fan.maximal_cones) == expected
    mults = sorted(c.multiplicity() for c in fan.maximal_cones)
    assert mults == [1, 2]


def test_envelope_dual_hilbert_basis_1_5_14():
    lat = WeightLattice.cyclic(5, (1, 4))
    fan = cones.envelope_subdivision(orthant(lat), [(5, 0), (1, 1), (0, 5)])
    expected = {
        Cone.make(lat, [lat.point((1, 4)), lat.point((0, 5))]),
        Cone.make(lat, [lat.point((4, 1)), lat.point((1, 4))]),
        Cone.make(lat, [lat.point((5, 0)), lat.point((4, 1))]),
    }
    assert set(fan.maximal_cones) == expected


def test_envelope_single_functional_is_identity():
    lat = WeightLattice.standard(3)
    c = orthant(lat)
    fan = cones.envelope_subdivision(c, [(1, 1, 1)])
    assert set(fan.maximal_cones) == {c}


def test_euler_characteristic_trivial():
    lat = WeightLattice.standard(3)
    fan = Fan.make(lat, [orthant(lat)])
    assert cones.euler_characteristic(fan) == 1


def test_star_of_origin_is_fan_itself():
    lat = WeightLattice.standard(2)
    fan = Fan.make(lat, [orthant(lat)])
    zero = Cone((), lat)
    _, out = cones.star(fan, zero)
    assert out is fan


def test_star_of_maximal_cone_is_trivial():
    lat = WeightLattice.standard(2)
    c = orthant(lat)
    fan = Fan.make(lat, [c])
    quotient, out = cones.star(fan, c)
    assert quotient.dim == 0
    assert len(out.maximal_cones) == 1


def test_discrepancies():
    lat = WeightLattice.cyclic(5, (1, 4))
    c1 = Cone.make(lat, [lat.point((1, 4)), lat.point((0, 5))])
    c2 = Cone.make(lat, [lat.point((5, 0)), lat.point((1, 4))])
    fan = Fan.make(lat, [c1, c2])
    d = cones.discrepancies(fan, lat)
    assert all(v == 0 for v in d.values())
    assert cones.is_crepant(fan, lat)
    # blow-up ray (1,...,1)/l for the diagonal action has discrepancy r/l - 1
    lat3 = WeightLattice.cyclic(3, (1, 1, 1))
    c = Cone.make(
        lat3,
        [lat3.point((1, 1, 1)), lat3.point((3, 0, 0)), lat3.point((0, 3, 0))],
    )
    fan3 = Fan.make(lat3, [c])
    d3 = cones.discrepancies(fan3, lat3)
    assert d3[lat3.point((1, 1, 1))] == 0


def test_multiplicity_unimodular_invariance():
    import random

    rng = random.Random(5)
    lat = WeightLattice.standard(3)
    for _ in range(20):
        while True:
            pts = [[rng.randrange(0, 4) for _ in range(3)] for _ in range(3)]
            from crepanto import linalg

            if linalg.det_int(pts) != 0:
                break
        c = Cone.make(lat, [lat.point(p) for p in pts])
        # shear by a random unimodular transform
        u = [[1, rng.randrange(-2, 3), rng.randrange(-2, 3)], [0, 1, rng.randrange(-2, 3)], [0, 0, 1]]
        moved = []
        for p in pts:
            moved.append([sum(u[i][j] * p[j] for j in range(3)) for i in range(3)])
        if any(min(m) < -20 for m in moved):
            continue
        c2 = Cone.make(lat, [lat.point(m) for m in moved])
        assert c.multiplicity() == c2.multiplicity()
