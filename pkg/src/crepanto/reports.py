"""Report builders shared by the HTTP service and the CLI.

Every report is a JSON-ready dict. All numbers are exact: integers stay
integers, non-integral rationals are serialized as "p/q" strings, and
lattice points as numerator lists over the report's denominator.
"""

from fractions import Fraction
from math import factorial

from . import cones, cyclic, hilbert, hkbundles, series, triangulations
from .cyclic import CyclicQuotientType
from .errors import CrepantoError
from .lattices import LatticePoint, WeightLattice
from .series import SeriesType

SCHEMA_VERSION = "1"


def exact(x):
    f = Fraction(x)
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def point_nums(p: LatticePoint) -> list[int]:
    return list(p.nums)


def _envelope(command: str, inputs: dict, result: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "input": inputs,
        "result": result,
    }


def _parse_type(l: int, weights) -> CyclicQuotientType:
    return CyclicQuotientType(int(l), tuple(int(w) for w in weights))


def analyze_report(l: int, weights) -> dict:
    t = _parse_type(l, weights)
    result = {
        "gorenstein": t.is_gorenstein(),
        "isolated": t.is_isolated(),
        "splitting_codimension": t.splitting_codimension(),
        "msc": t.is_msc(),
        "normal_form": list(t.normal_form()),
        "group_order": t.lattice.group_order,
    }
    if t.is_gorenstein():
        juniors = cyclic.junior_points(t)
        crit = cyclic.necessary_criterion(t)
        coh = cyclic.cohomology_cyclic(t)
        result["junior"] = {
            "denominator": t.order,
            "count": len(juniors.points),
            "points": [point_nums(p) for p in juniors.points],
        }
        result["criterion"] = {
            "passes": crit.passes,
            "violators": [point_nums(p) for p in crit.violators],
            "hilbert_basis_size": crit.basis_size,
        }
        result["cohomology"] = {"dims": list(coh.dims), "euler": coh.euler}
    else:
        result["junior"] = None
        result["criterion"] = None
        result["cohomology"] = None
    return _envelope("analyze", {"l": t.order, "weights": list(t.weights)}, result)


def hilbert_report(l: int, weights) -> dict:
    t = _parse_type(l, weights)
    basis = hilbert.hilbert_basis_orthant(t.lattice)
    result = {
        "denominator": t.order,
        "count": len(basis),
        "elements": [point_nums(p) for p in basis.elements],
    }
    return _envelope("hilbert", {"l": t.order, "weights": list(t.weights)}, result)


def criterion_report(l: int, weights) -> dict:
    t = _parse_type(l, weights)
    crit = cyclic.necessary_criterion(t)
    result = {
        "passes": crit.passes,
        "denominator": t.order,
        "violators": [point_nums(p) for p in crit.violators],
        "hilbert_basis_size": crit.basis_size,
    }
    return _envelope("criterion", {"l": t.order, "weights": list(t.weights)}, result)


def cohomology_report(l: int, weights) -> dict:
    t = _parse_type(l, weights)
    coh = cyclic.cohomology_cyclic(t)
    result = {"dims": list(coh.dims), "euler": coh.euler}
    if t.dim == 3:
        closed = cyclic.cohomology_3d_closed_form(t)
        result["closed_form_3d"] = {"dims": list(closed.dims), "agrees": closed == coh}
    return _envelope("cohomology", {"l": t.order, "weights": list(t.weights)}, result)


def triangulation_payload(tri: triangulations.LatticeTriangulation) -> dict:
    points = list(tri.points)
    index = {p: i for i, p in enumerate(points)}
    return {
        "denominator": tri.lattice.den,
        "points": [point_nums(p) for p in points],
        "simplices": [
            [index[v] for v in s.vertices] for s in tri.cells
        ],
    }


def resolve_series_report(l: int, r: int) -> dict:
    t = SeriesType(int(l), int(r))
    tri, cert, fan = series.resolve(t)
    unique = series.verify_uniqueness(t)
    basic = series.basicness(t)
    coh = cyclic.cohomology_cyclic(t.quotient_type())
    result = {
        "type": {
            "l": t.order,
            "r": t.dim,
            "weights": list(t.weights),
            "nu": t.nu,
            "remainder": t.remainder,
        },
        "gorenstein": True,
        "isolated": t.quotient_type().is_isolated(),
        "junior_count": len(t.junior_points()),
        "triangulation": triangulation_payload(tri),
        "unique": unique,
        "basic": basic,
        "coherent": {"found": True, "epsilon": exact(cert.epsilon)},
        "euler_characteristic": cones.euler_characteristic(fan),
        "cohomology": {"dims": list(coh.dims), "euler": coh.euler},
        "factorization_steps": {
            "speedy": series.speedy_step_count(t) if basic else None,
            "stepwise": series.stepwise_step_count(t) if basic else None,
        },
    }
    if basic:
        result["divisors"] = [
            {
                "index": d.index,
                "kind": d.kind,
                "twist": d.twist,
                "self_intersection": d.self_intersection,
                "self_intersection_printed": d.self_intersection_printed,
                "with_next": list(d.with_next) if d.with_next else None,
            }
            for d in series.divisor_reports(t)
        ]
        result["residual"] = None
    else:
        res = series.residual_singularities(t)
        result["divisors"] = None
        result["residual"] = {
            "kind": res.kind,
            "order": res.order,
            "weights": list(res.weights),
        }
    return _envelope("resolve-series", {"l": t.order, "r": t.dim}, result)


def series_scan_report(l_min: int, l_max: int, r: int) -> dict:
    rows = []
    for l in range(max(l_min, r), l_max + 1):
        t = SeriesType(l, r)
        rows.append(
            {
                "l": l,
                "remainder": t.remainder,
                "basic": t.is_basic(),
                "euler_characteristic": series.euler_characteristic_of_series(t),
            }
        )
    return _envelope(
        "resolve-series-scan",
        {"l_min": l_min, "l_max": l_max, "r": r},
        {"rows": rows},
    )


def factorize_report(l: int, r: int, mode: str) -> dict:
    t = SeriesType(int(l), int(r))
    plan = series.factorize(t, mode)
    steps = []
    for step in plan.steps:
        steps.append(
            {
                "index": step.index,
                "center": step.center,
                "inserted_points": [point_nums(p) for p in step.inserted],
                "triangulation": triangulation_payload(step.triangulation),
            }
        )
    result = {"mode": plan.mode, "step_count": plan.step_count, "steps": steps}
    return _envelope("factorize", {"l": t.order, "r": t.dim, "mode": mode}, result)


def bundle_report(r: int, twists) -> dict:
    twists = tuple(int(x) for x in twists)
    variety = hkbundles.build_hk_fan(int(r), twists)
    result = {
        "dim": variety.dim,
        "fiber_dim": variety.fiber_dim,
        "base_dim": variety.base_dim,
        "twists": list(twists),
        "maximal_cones": len(variety.fan.maximal_cones),
        "embedding_dimension": hkbundles.ews_embedding_dimension(int(r), twists),
    }
    if len(twists) == 1 and twists[0] >= 1:
        k_self = hkbundles.canonical_self_intersection(int(r), twists[0])
        result["canonical_self_intersection"] = k_self
        result["e_self_intersection"] = hkbundles.e_divisor_self_intersection(
            int(r), twists[0]
        )
        try:
            poly = hkbundles.anticanonical_polytope(variety.fan)
        except ValueError:
            result["anticanonical"] = {"ample": False}
        else:
            via_volume = hkbundles.self_intersection_via_volume(poly, int(r))
            result["anticanonical"] = {
                "ample": True,
                "polytope_vertices": [[exact(x) for x in v] for v in poly],
                "volume": exact(via_volume / factorial(int(r))),
                "self_intersection_via_volume": exact(via_volume),
                "agrees_with_formula": via_volume == -k_self,
            }
    return _envelope("bundle", {"r": int(r), "twists": list(twists)}, result)


def triangulation_from_payload(data: dict) -> triangulations.LatticeTriangulation:
    den = int(data["denominator"])
    raw_points = [tuple(int(x) for x in p) for p in data["points"]]
    if not raw_points:
        raise CrepantoError("no points in triangulation payload")
    dim = len(raw_points[0])
    factors = []
    for nums in raw_points:
        if den >= 2 and any(n % den for n in nums):
            factors.append((den, tuple(n % den for n in nums)))
    lattice = WeightLattice(dim, tuple(factors))
    scale = lattice.den // den if den else 1
    if lattice.den % den:
        raise CrepantoError("points do not share the stated denominator")
    points = [LatticePoint(tuple(n * scale for n in nums), lattice.den) for nums in raw_points]
    cells = []
    for idxs in data["simplices"]:
        cells.append(triangulations.Simplex.make([points[i] for i in idxs]))
    return triangulations.LatticeTriangulation.make(lattice, points, cells)


def triangulate_check_report(data: dict) -> dict:
    tri = triangulation_from_payload(data)
    try:
        triangulations.validate(tri, pairwise="full")
    except ValueError as exc:
        result = {"valid": False, "reason": str(exc)}
        return _envelope("triangulate-check", {"points": len(tri.points)}, result)
    flags = triangulations.classify(tri, pairwise="skip")
    cert = triangulations.coherence_certificate(tri)
    coherent = isinstance(cert, triangulations.SupportHeights)
    result = {
        "valid": True,
        "maximal": flags["is_maximal"],
        "basic": flags["is_basic"],
        "crepant": flags["is_crepant"],
        "coherent": coherent,
        "epsilon": exact(cert.epsilon),
    }
    return _envelope("triangulate-check", {"points": len(tri.points)}, result)
