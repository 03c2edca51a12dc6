"""The full verification suite behind ``mereon verify``.

Each check rebuilds what it needs from the library and compares against reference values. A check that raises
is recorded as a failure carrying the exception, so one broken construction never hides the remaining results.
"""
import math
from collections import Counter
from dataclasses import replace
from fractions import Fraction
from typing import Callable, Iterable, List, Sequence

from mereon.cli.config import RunConfig
from mereon.cli.report import CheckResult, VerifyReport
from mereon.cliffknot import (
    KNOT_TOLERANCE,
    MERON_KNOT,
    STANDARD_KNOT,
    clifford_torus_membership,
    congruence_check,
    projection_residual,
    winding_numbers,
)
from mereon.goldfield import PHI, PHI_INVERSE, GoldenNum, QuadNum, gf_to_float
from mereon.mckay import CHARACTER_TOLERANCE, ADELabel, affine_kernel_check, finite_diagram, mckay_graph
from mereon.polytopes import (
    DISDYAKIS_RADII_SQ,
    M120P_RADII_SQ,
    VertexLabel,
    catalan_disdyakis_construct,
    disdyakis_construct,
    has_trinity,
    m120p_construct,
    m144p_construct,
    matches_appendix_a,
    mesh_integrity,
    polyhedron_hull,
    radius_ratio_report,
    shell_census,
    symmetry_report,
)
from mereon.quatgroup import (
    build_2I,
    build_2O,
    build_2T,
    closure,
    golden_quaternion,
    icosian_families,
    quad2_quaternion,
    subgroup_obstruction_2O_in_2I,
    tetrahedral_inclusions,
)
from mereon.shadow import (
    angular_alignment_check,
    cell24_shell_check,
    face_orbit_bijection,
    inner_icosahedron_check,
    phi_ladder_check,
    reciprocal_pair_check,
    shell_decompose,
    verify_62_match,
)
from mereon.utils import setup_logger

logger = setup_logger(__name__)

HALF = Fraction(1, 2)
TABLE_TOLERANCE = 5e-5
RADIUS_TOLERANCE = 5e-4
RATIO_TOLERANCE = 1e-3

M144P_SHELLS = {8: 12, 12: 8, 14: 48, 16: 6}
M120P_RADII = {VertexLabel.A: 4.535, VertexLabel.C: 4.980, VertexLabel.B: 5.236}
W_MULTIPLICITIES = {"1": 2, "φ/2": 24, "1/2": 40, "1/(2φ)": 24, "0": 30}
SHELL_RADII = (0.0, 0.3249, 0.5774, 0.7265, 1.0, 1.3764, 1.7321, 3.0777)
FACE_CENTROID_RADIUS_SQ = 11 * (8 * PHI + 5) / 9
# The reference table prints 4.6950; the exact centroid sphere gives 4.6832.
FACE_CENTROID_RADIUS = 4.6832
M120P_RATIOS = (1.0, 1.098, 1.155)
DISDYAKIS_RATIOS = (1.0, 1.618, 1.777)
CATALAN_RATIOS = (1.0, 1.0184, 1.0858)
MCKAY_EXPECTED = {
    "2T": (7, ADELabel.AFFINE_E6, ADELabel.E6),
    "2O": (8, ADELabel.AFFINE_E7, ADELabel.E7),
    "2I": (9, ADELabel.AFFINE_E8, ADELabel.E8),
}

Check = Callable[[RunConfig], Iterable[CheckResult]]


def result(name: str, expected: object, actual: object, passed: bool, exact: bool = True) -> CheckResult:
    return CheckResult(name=name, passed=bool(passed), expected=str(expected), actual=str(actual), exact=exact)


def equal(name: str, expected: object, actual: object) -> CheckResult:
    return result(name, expected, actual, expected == actual)


def close(name: str, expected: Sequence[float], actual: Sequence[float], tolerance: float) -> CheckResult:
    passed = len(expected) == len(actual) and all(abs(e - a) <= tolerance for e, a in zip(expected, actual))
    rendered = tuple(round(a, 4) for a in actual)
    return result(name, f"{tuple(expected)} ± {tolerance}", rendered, passed, exact=False)


def check_group_orders(config: RunConfig) -> Iterable[CheckResult]:
    half, i, j = golden_quaternion(HALF, HALF, HALF, HALF), golden_quaternion(0, 1, 0, 0), golden_quaternion(0, 0, 1, 0)
    five_fold = golden_quaternion(PHI * HALF, HALF, 0, PHI_INVERSE * HALF)
    octahedral = quad2_quaternion(QuadNum(2, 0, HALF), QuadNum(2, 0, HALF), 0, 0)
    tetrahedral_generators = [quad2_quaternion(*(c.a for c in g.components())) for g in (half, i, j)]
    yield equal("2T order by closure", 24, len(closure([half, i, j], cap=240)))
    yield equal("2O order by closure", 48, len(closure(tetrahedral_generators + [octahedral], cap=240)))
    icosahedral = closure([five_fold, half, i], cap=240)
    yield equal("2I order by closure", 120, len(icosahedral))
    yield equal("2I closure equals family union", True, set(icosahedral) == set(build_2I()))
    yield equal("built orders 2T/2O/2I", (24, 48, 120), (len(build_2T()), len(build_2O()), len(build_2I())))


def _w_key(w: GoldenNum) -> str:
    return {1: "1", PHI * HALF: "φ/2", HALF: "1/2", PHI_INVERSE * HALF: "1/(2φ)", 0: "0"}.get(w, str(w))


def check_families(config: RunConfig) -> Iterable[CheckResult]:
    counts = {name: len(family) for name, family in icosian_families().items()}
    yield equal("2I family census (a, b, c)", {"a": 8, "b": 16, "c": 96}, counts)
    census = Counter(_w_key(abs(q.w)) for q in build_2I())
    yield equal("2I |w| multiplicities", W_MULTIPLICITIES, {key: census[key] for key in W_MULTIPLICITIES})


def check_m144p(config: RunConfig) -> Iterable[CheckResult]:
    polyhedron = m144p_construct()
    yield equal("M144p vertex set equals reference table", True, matches_appendix_a(polyhedron))
    report = mesh_integrity(polyhedron)
    yield equal("M144p V/E/F", (74, 216, 144), (report.vertices, report.edges, report.faces))
    yield equal("M144p Euler characteristic", 2, report.euler_characteristic)
    census = {int(gf_to_float(r)): count for r, count in shell_census(polyhedron) if r.is_rational()}
    yield equal("M144p shell census r² → count", M144P_SHELLS, census)
    symmetry = symmetry_report(polyhedron, golden_quaternion(PHI * HALF, HALF, 0, PHI_INVERSE * HALF))
    yield equal("M144p crystallographic", True, symmetry.crystallographic)


def check_m120p(config: RunConfig) -> Iterable[CheckResult]:
    polyhedron = m120p_construct()
    report = mesh_integrity(polyhedron)
    yield equal("M120p V/E/F", (62, 180, 120), (report.vertices, report.edges, report.faces))
    yield equal("M120p Euler characteristic and manifold", (2, True), (report.euler_characteristic, report.manifold))
    yield equal("M120p trinity on every face", True, has_trinity(polyhedron))
    first = {label: polyhedron.indices_of_type(label)[0] for label in VertexLabel}
    radii = {label.value: str(polyhedron.radius_sq(index)) for label, index in first.items()}
    yield equal("M120p exact squared radii", {k.value: str(v) for k, v in M120P_RADII_SQ.items()}, radii)
    floats = [math.sqrt(gf_to_float(polyhedron.radius_sq(first[label]))) for label in M120P_RADII]
    yield close("M120p radii A/C/B", list(M120P_RADII.values()), floats, RADIUS_TOLERANCE)
    symmetry = symmetry_report(polyhedron, golden_quaternion(PHI * HALF, HALF, 0, PHI_INVERSE * HALF))
    yield equal("M120p 5-fold and 4-fold invariance", (True, False), (symmetry.five_fold, symmetry.four_fold))


def check_lift(config: RunConfig) -> Iterable[CheckResult]:
    report = verify_62_match()
    yield equal("62/62 lift match", (62, 62), (report.matched, report.total))
    yield equal("lift type counts", {"A": 20, "C": 12, "B": 30}, report.type_counts)
    census = {"poles": 2, "|w| = φ/2": 24, "lower mirrors": 32}
    yield equal("remainder census 58 = 2 + 24 + 32", census, report.remainder_census)


def check_shells(config: RunConfig) -> Iterable[CheckResult]:
    group = build_2I()
    shells = shell_decompose(group)
    yield equal("shell counts", (12, 20, 12, 30, 12, 20, 12), tuple(shell.count for shell in shells[1:8]))
    floats = [math.sqrt(gf_to_float(shell.radius_sq)) for shell in shells[:8] if shell.radius_sq is not None]
    yield close("shell radii", SHELL_RADII, floats, TABLE_TOLERANCE)
    types = tuple(shell.type.label.value for shell in shells[1:8] if shell.type is not None)
    yield equal("shell types", ("C", "A", "C", "B", "C", "A", "C"), types)
    reciprocal = reciprocal_pair_check(group, shells)
    yield equal("reciprocal pairs r²(q)·r²(−q) = 1", (118, True), (reciprocal.checked, reciprocal.all_reciprocal))


def check_alignment(config: RunConfig) -> Iterable[CheckResult]:
    report = angular_alignment_check()
    yield equal("aligned non-pole projections", 118, report.aligned)
    multiplicity = {label: sorted(counts) for label, counts in report.multiplicity_by_type.items()}
    yield equal("multiplicity per direction", {"A": [2], "B": [1], "C": [4]}, multiplicity)


def check_inner_icosahedron(config: RunConfig) -> Iterable[CheckResult]:
    report = inner_icosahedron_check()
    yield equal("inner icosahedron aligned with C", 12, report.aligned)
    yield equal("inner icosahedron squared ratio", str(PHI_INVERSE * PHI_INVERSE), str(report.ratio_sq))
    yield equal("inner icosahedron is φ·(0, ±1, ±φ)", True, report.on_reference_icosahedron)


def check_phi_ladder(config: RunConfig) -> Iterable[CheckResult]:
    report = phi_ladder_check()
    yield equal("φ-ladder steps exact", True, report.exact)


def check_face_orbit(config: RunConfig) -> Iterable[CheckResult]:
    orbit = face_orbit_bijection()
    yield equal("face orbit size and stabilizer", (120, 1), (orbit.orbit_size, orbit.stabilizer_size))
    yield equal("face centroid r² = 11(8φ+5)/9", str(FACE_CENTROID_RADIUS_SQ), str(orbit.centroid_radius_sq))
    yield close("face centroid radius", [FACE_CENTROID_RADIUS], [orbit.centroid_radius], 1e-4)


def check_cell24(config: RunConfig) -> Iterable[CheckResult]:
    report = cell24_shell_check()
    yield equal("24-cell strata", (1, 8, 6, 8, 1), report.counts)
    radii = tuple("∞" if shell.radius_sq is None else str(shell.radius_sq) for shell in report.strata)
    expected = tuple("∞" if r is None else str(GoldenNum(r)) for r in (0, Fraction(1, 3), 1, 3, None))
    yield equal("24-cell r²", expected, radii)
    yield equal("24-cell middle shell on the axes", True, report.middle_shell_on_axes)


def check_obstruction(config: RunConfig) -> Iterable[CheckResult]:
    report = subgroup_obstruction_2O_in_2I()
    yield equal("Lagrange: 120 mod 48 ≠ 0", False, report.lagrange_allows)
    yield equal("order-8 elements (2O, 2I)", (True, False), (report.has_order_8_in_2o, report.has_order_8_in_2i))
    yield equal("coordinate fields", {"2T": "Q", "2O": "Q(√2)", "2I": "Q(√5)"}, report.coordinate_fields)
    yield equal("2T inclusions", {"2T in 2I": True, "2T in 2O": True}, tetrahedral_inclusions())


def check_mckay(config: RunConfig) -> Iterable[CheckResult]:
    for group in (build_2T(), build_2O(), build_2I()):
        label = group.label.value
        nodes, affine, finite = MCKAY_EXPECTED[label]
        graph = mckay_graph(group, seed=config.seed)
        yield equal(f"{label} class count", nodes, graph.nodes)
        yield result(f"{label} adjacency integral", f"≤ {CHARACTER_TOLERANCE}", f"{graph.residual:.1e}",
                     graph.residual <= CHARACTER_TOLERANCE, exact=False)
        yield equal(f"{label} McKay graph", affine.value, graph.label.value)
        yield equal(f"{label} finite diagram", finite.value, finite_diagram(graph).value)
        kernel = affine_kernel_check(graph)
        yield result(f"{label} dimension vector spans ker(2I − A)", f"rank {nodes - 1}, ≤ {CHARACTER_TOLERANCE}",
                     f"rank {kernel.rank}, {kernel.residual:.1e}", kernel.ok, exact=False)


def check_knots(config: RunConfig) -> Iterable[CheckResult]:
    congruence = congruence_check(config.samples)
    yield equal("congruence matrix orthogonal, det +1", (True, 1), (congruence.orthogonal, congruence.determinant))
    yield result("congruence residual", f"≤ {KNOT_TOLERANCE}", f"{congruence.max_residual:.1e}",
                 congruence.max_residual <= KNOT_TOLERANCE, exact=False)
    for spec in (MERON_KNOT, STANDARD_KNOT):
        residual = projection_residual(spec, config.samples)
        yield result(f"{spec} ring-torus residual", f"≤ {KNOT_TOLERANCE}", f"{residual:.1e}",
                     residual <= KNOT_TOLERANCE, exact=False)
        yield equal(f"{spec} winding numbers", (spec.p, spec.q), winding_numbers(spec, config.samples))
    membership = clifford_torus_membership()
    yield equal("equatorial elements: w = 0, unit radius", (30, True, True),
                (membership.equatorial, membership.all_w_zero, membership.all_unit_radius))


def check_disdyakis(config: RunConfig) -> Iterable[CheckResult]:
    m120p, disdyakis = m120p_construct(), disdyakis_construct()
    yield close("M120p radius ratios", M120P_RATIOS, radius_ratio_report(m120p).ratios, RATIO_TOLERANCE)
    yield close("Disdyakis radius ratios", DISDYAKIS_RATIOS, radius_ratio_report(disdyakis).ratios, RATIO_TOLERANCE)
    yield equal("Disdyakis squared radii", {k.value: str(v) for k, v in DISDYAKIS_RADII_SQ.items()},
                {label.value: str(disdyakis.radius_sq(disdyakis.indices_of_type(label)[0])) for label in VertexLabel})
    interior = polyhedron_hull(m120p).interior_vertices
    yield equal("M120p hull interior = A vertices", sorted(m120p.indices_of_type(VertexLabel.A)), sorted(interior))
    yield equal("Disdyakis hull interior = A vertices", sorted(disdyakis.indices_of_type(VertexLabel.A)),
                sorted(polyhedron_hull(disdyakis).interior_vertices))
    catalan = catalan_disdyakis_construct()
    catalan_hull = polyhedron_hull(catalan)
    yield equal("Catalan disdyakis hull: interior, hull faces", (0, 120),
                (len(catalan_hull.interior_vertices), len(catalan_hull.faces)))
    hull_polyhedron = replace(catalan, faces=catalan_hull.faces)
    yield equal("Catalan disdyakis hull faces carry A, B, C", True, has_trinity(hull_polyhedron))
    yield close("Catalan disdyakis radius ratios", CATALAN_RATIOS, radius_ratio_report(catalan).ratios, RATIO_TOLERANCE)


CHECKS: List[Check] = [
    check_group_orders,
    check_families,
    check_m144p,
    check_m120p,
    check_lift,
    check_shells,
    check_alignment,
    check_inner_icosahedron,
    check_phi_ladder,
    check_face_orbit,
    check_cell24,
    check_obstruction,
    check_mckay,
    check_knots,
    check_disdyakis,
]


def _run(check: Check, config: RunConfig) -> List[CheckResult]:
    name = check.__name__.removeprefix("check_").replace("_", " ")
    try:
        return list(check(config))
    except Exception as e:  # noqa: B902
        logger.info(f"Check '{name}' raised {type(e).__name__}: {e}")
        return [result(name, "no error", f"{type(e).__name__}: {e}", passed=False)]


def run_verify(config: RunConfig, checks: Sequence[Check] = tuple(CHECKS)) -> VerifyReport:
    results: List[CheckResult] = []
    for check in checks:
        results.extend(_run(check, config))
    report = VerifyReport(checks=results)
    passed = sum(check.passed for check in report.checks)
    logger.info(f"Verify: {passed} of {len(report.checks)} checks passed")
    return report
