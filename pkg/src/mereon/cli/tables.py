"""Report tables regenerated from the library, one builder per ``mereon report`` name."""
import math
from fractions import Fraction
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence

from mereon.cliffknot import exponent_fold_table
from mereon.goldfield import PHI, PHI_INVERSE, GoldenNum, gf_to_float
from mereon.goldfield.vectors import norm_sq
from mereon.polytopes import (
    DISDYAKIS_RADII_SQ,
    M120P_RADII_SQ,
    VERTEX_TYPES,
    VertexLabel,
    disdyakis_construct,
    m120p_construct,
    m144p_construct,
    radius_ratio_report,
    shell_census,
)
from mereon.quatgroup import build_2I, rotation_angle_table
from mereon.shadow import LiftedVertex, cell24_shell_check, shell_decompose, type_from_w, verify_62_match

HALF = Fraction(1, 2)
LATITUDES = (GoldenNum(1), PHI * HALF, GoldenNum(HALF), PHI_INVERSE * HALF, GoldenNum(0))


class UnknownTableError(Exception):
    pass


class ReportTable(NamedTuple):
    name: str
    headers: Sequence[str]
    rows: List[Sequence[str]]


def decimal(value: Optional[GoldenNum], root: bool = False) -> str:
    """Four decimals; ``root`` prints √value."""
    if value is None:
        return "∞"
    number = gf_to_float(value)
    return f"{math.sqrt(number) if root else number:.4f}"


def exact(value: Optional[GoldenNum]) -> str:
    return "∞" if value is None else str(value)


def m144p_shells() -> ReportTable:
    rows = [[exact(r_sq), decimal(r_sq, root=True), str(count)] for r_sq, count in shell_census(m144p_construct())]
    return ReportTable("m144p-shells", ("r²", "r", "Count"), rows)


def m120p_types() -> ReportTable:
    polyhedron = m120p_construct()
    rows = []
    for label in (VertexLabel.A, VertexLabel.C, VertexLabel.B):
        vertex_type, r_sq = VERTEX_TYPES[label], M120P_RADII_SQ[label]
        count = len(polyhedron.indices_of_type(label))
        fold, role = str(vertex_type.fold), vertex_type.role.value
        rows.append([label.value, fold, role, str(count), exact(r_sq), decimal(r_sq, True)])
    return ReportTable("m120p-types", ("Type", "Fold", "Role", "Count", "r²", "r"), rows)


def scaled_radii() -> ReportTable:
    """M120p radii after shrinking the B shell to the unit sphere, and the lifted w = √(1 − r'²)."""
    rows = []
    for lifted in _first_per_type():
        scaled_sq = norm_sq(lifted.scaled)
        label = lifted.type.label.value
        rows.append([label, exact(scaled_sq), decimal(scaled_sq, True), exact(lifted.w), decimal(lifted.w)])
    return ReportTable("scaled-radii", ("Type", "r'²", "r'", "w", "w (decimal)"), rows)


def _first_per_type() -> List[LiftedVertex]:
    seen: Dict[VertexLabel, LiftedVertex] = {}
    for lifted in verify_62_match().lifted:
        seen.setdefault(lifted.type.label, lifted)
    return [seen[label] for label in (VertexLabel.A, VertexLabel.C, VertexLabel.B)]


def w_values() -> ReportTable:
    rows = []
    for lifted in _first_per_type():
        angle = math.degrees(2 * math.acos(gf_to_float(lifted.w)))
        rows.append([lifted.type.label.value, exact(lifted.w), decimal(lifted.w), f"{angle:.1f}"])
    return ReportTable("w-values", ("Type", "w", "w (decimal)", "Rotation angle (°)"), rows)


def latitudes() -> ReportTable:
    group = build_2I()
    rows = []
    for w in LATITUDES:
        count = sum(1 for q in group if abs(q.w) == w)
        vertex_type = type_from_w(w)
        rows.append([exact(w), decimal(w), vertex_type.label.value if vertex_type else "-", str(count)])
    rows.append(["total", "", "", str(len(group))])
    return ReportTable("latitudes", ("|w|", "|w| (decimal)", "Type", "Count"), rows)


def shells() -> ReportTable:
    rows = []
    for shell in shell_decompose(build_2I()):
        vertex_type = shell.type.label.value if shell.type else "-"
        radius = decimal(shell.radius_sq, True)
        rows.append([str(shell.index), exact(shell.w), radius, exact(shell.radius_sq), vertex_type, str(shell.count)])
    return ReportTable("shells", ("Shell", "w", "r", "Expression", "Type", "Count"), rows)


def cell24() -> ReportTable:
    report = cell24_shell_check()
    rows = [
        [str(position), exact(shell.w), exact(shell.radius_sq), decimal(shell.radius_sq, True), str(shell.count)]
        for position, shell in enumerate(report.strata)
    ]
    return ReportTable("cell24", ("Stratum", "w", "r²", "r", "Count"), rows)


def disdyakis() -> ReportTable:
    m120p_ratios = radius_ratio_report(m120p_construct()).ratios
    disdyakis_ratios = radius_ratio_report(disdyakis_construct()).ratios
    rows = []
    for position, label in enumerate((VertexLabel.A, VertexLabel.C, VertexLabel.B)):
        rows.append(
            [
                label.value,
                decimal(M120P_RADII_SQ[label], True),
                f"{m120p_ratios[position]:.4f}",
                decimal(DISDYAKIS_RADII_SQ[label], True),
                f"{disdyakis_ratios[position]:.4f}",
            ]
        )
    return ReportTable("disdyakis", ("Type", "M120p r", "M120p ratio", "Disdyakis r", "Disdyakis ratio"), rows)


def correspondence() -> ReportTable:
    polyhedron = m120p_construct()
    rows = []
    for lifted in verify_62_match().lifted:
        vertex = ", ".join(str(c) for c in polyhedron.vertices[lifted.source])
        quaternion = ", ".join(lifted.quaternion.to_exact_strings())
        label = lifted.type.label.value
        rows.append([str(lifted.source), label, f"({vertex})", f"({quaternion})", str(lifted.matched)])
    return ReportTable("correspondence", ("Vertex", "Type", "M120p coordinates", "2I element", "2I index"), rows)


def exponents() -> ReportTable:
    rows = [
        [str(row.exponent), row.label.value, str(row.fold), row.role.value, str(row.vertices)]
        for row in exponent_fold_table()
    ]
    return ReportTable("exponents", ("Exponent", "Type", "Fold", "Role", "Vertices"), rows)


def rotation_angles() -> ReportTable:
    rows = [
        [exact(row.abs_w), str(row.element_order), str(row.rotation_order), f"{row.angle_degrees:.1f}", str(row.count)]
        for row in rotation_angle_table(build_2I())
    ]
    return ReportTable("rotation-angles", ("w", "Element order", "Rotation order", "Angle (°)", "Count"), rows)


TABLES: Dict[str, Callable[[], ReportTable]] = {
    "m144p-shells": m144p_shells,
    "m120p-types": m120p_types,
    "scaled-radii": scaled_radii,
    "w-values": w_values,
    "latitudes": latitudes,
    "shells": shells,
    "cell24": cell24,
    "disdyakis": disdyakis,
    "correspondence": correspondence,
    "exponents": exponents,
    "rotation-angles": rotation_angles,
}


def build_table(name: str) -> ReportTable:
    if (builder := TABLES.get(name)) is None:
        raise UnknownTableError(f"Unknown table '{name}', expected one of {', '.join(TABLES)}")
    return builder()
