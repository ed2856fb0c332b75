from fractions import Fraction

import pytest

from crepanto import hkbundles as hk
from crepanto import polytopes

# the anticanonical polytope of the twist-2 threefold bundle: a triangular
# prism-like solid with volume 31/3
PRISM = [
    (0, -1, -1),
    (-1, 0, -1),
    (-1, -1, -1),
    (-1, -1, 1),
    (4, -1, 1),
    (-1, 4, 1),
]


def test_unit_simplex_volume():
    for r in (2, 3, 4):
        pts = [tuple(0 for _ in range(r))]
        pts += [tuple(int(i == j) for i in range(r)) for j in range(r)]
        from math import factorial

        assert polytopes.polytope_volume(pts) == Fraction(1, factorial(r))


def test_unit_cube_volume_and_self_intersection():
    cube = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    assert polytopes.polytope_volume(cube) == 1
    assert hk.self_intersection_via_volume(cube, 3) == 6


def test_prism_volume_31_over_3():
    assert polytopes.polytope_volume(PRISM) == Fraction(31, 3)
    assert hk.self_intersection_via_volume(PRISM, 3) == 62


def test_mixed_volume_collapses_on_equal_arguments():
    tri = [(0, 0), (2, 0), (0, 2)]
    assert polytopes.mixed_volume([tri, tri]) == polytopes.polytope_volume(tri)


def test_mixed_volume_unit_segments():
    # normalization pinned by the self-intersection identity: the mixed
    # volume of the two axis segments is vol(unit square)/2 = 1/2
    s1 = [(0, 0), (1, 0)]
    s2 = [(0, 0), (0, 1)]
    assert polytopes.mixed_volume([s1, s2]) == Fraction(1, 2)


def test_mixed_volume_prism_three_times():
    got = polytopes.mixed_volume([PRISM, PRISM, PRISM])
    assert 6 * got == 62


def test_build_hirzebruch_surfaces():
    for twist in (0, 1, 2, 5):
        v = hk.build_hk_fan(2, (twist,))
        assert len(v.fan.maximal_cones) == 4
        colls = hk.primitive_collections(v.fan)
        assert len(colls) == 2
        assert not (colls[0] & colls[1])


def test_build_y32_has_six_cones():
    v = hk.build_hk_fan(3, (2,))
    assert len(v.fan.maximal_cones) == 6
    assert v.fan.is_smooth() and v.fan.is_complete()


def test_projective_space_detection():
    from crepanto.cones import Cone, Fan
    from crepanto.lattices import WeightLattice

    lat = WeightLattice.standard(2)
    rays = [lat.point((1, 0)), lat.point((0, 1)), lat.point((-1, -1))]
    cones = [
        Cone.make(lat, [rays[0], rays[1]]),
        Cone.make(lat, [rays[1], rays[2]]),
        Cone.make(lat, [rays[2], rays[0]]),
    ]
    fan = Fan.make(lat, cones)
    colls = hk.primitive_collections(fan)
    assert len(colls) == 1
    det = hk.detect(fan)
    assert det.kind == "projective_space"
    assert det.dim == 2


def test_detect_round_trip():
    cases = [(2, (0,)), (2, (1,)), (2, (3,)), (3, (2,)), (3, (1, 2)), (4, (2,))]
    for dim, twists in cases:
        v = hk.build_hk_fan(dim, twists)
        det = hk.detect(v.fan)
        assert det.kind == "hk_bundle"
        assert det.dim == dim
        assert det.twists == tuple(sorted(twists))


def test_formula_values():
    assert hk.canonical_self_intersection(3, 2) == -62
    for twist in range(1, 8):
        assert hk.canonical_self_intersection(2, twist) == 8
    assert hk.canonical_self_intersection(2, 5, printed=True) == 12
    # r = 4, twist 1: frozen by direct expansion of the closed form
    expected = sum(
        __import__("math").comb(4, i) * (-2) ** (4 - i) * (1 - 4) ** i * 1 ** (3 - i)
        for i in range(4)
    )
    assert hk.canonical_self_intersection(4, 1) == expected


def test_e_divisor_and_embedding_dimension():
    assert hk.e_divisor_self_intersection(3, 2) == 4
    assert hk.e_divisor_self_intersection(2, 1) == 1
    assert hk.e_divisor_self_intersection(5, 3) == 81
    assert hk.ews_embedding_dimension(3, (2,)) == 12
    assert hk.ews_embedding_dimension(2, (1,)) == 4
    # all-zero twists collapse to binomial(s+1, s) summands
    assert hk.ews_embedding_dimension(4, (0, 0)) == 2 + 2 * 3


def test_anticanonical_polytope_y32():
    v = hk.build_hk_fan(3, (2,))
    poly = hk.anticanonical_polytope(v.fan)
    assert polytopes.polytope_volume(poly) == Fraction(31, 3)
    assert hk.self_intersection_via_volume(poly, 3) == 62
    assert -hk.self_intersection_via_volume(poly, 3) == hk.canonical_self_intersection(3, 2)


def test_anticanonical_polytope_f1():
    v = hk.build_hk_fan(2, (1,))
    poly = hk.anticanonical_polytope(v.fan)
    assert 2 * polytopes.polytope_volume(poly) == 8


def test_anticanonical_not_ample_on_f2():
    v = hk.build_hk_fan(2, (2,))
    with pytest.raises(ValueError):
        hk.anticanonical_polytope(v.fan)
