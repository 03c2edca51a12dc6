import argparse
import sys
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from mereon.cli import writers
from mereon.cli.config import DEFAULT_SAMPLES, DEFAULT_SEED, Command, OutputFormat, RunConfig, UsageError, build_config
from mereon.cli.meshes import MESH_NAMES, MeshData, UnknownMeshError, build_mesh
from mereon.cli.tables import TABLES, ReportTable, UnknownTableError, build_table
from mereon.cli.verify import run_verify
from mereon.cliffknot import (
    InsufficientSamplingError,
    InvalidKnotSpecError,
    TorusKnotSpec,
    knot_polyline,
    projection_residual,
    ring_torus_residual,
    winding_numbers,
)
from mereon.cliffknot.knot import sample_parameters
from mereon.mckay import character_table, mckay_graph
from mereon.quatgroup import build_2I, build_2O, build_2T
from mereon.utils import setup_logger

logger = setup_logger(__name__)

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2
USAGE_ERRORS = (UsageError, UnknownTableError, UnknownMeshError, InvalidKnotSpecError, InsufficientSamplingError)

GROUPS = {"2T": build_2T, "2O": build_2O, "2I": build_2I}

TABLE_WRITERS: Dict[OutputFormat, Callable[[ReportTable], str]] = {
    OutputFormat.CSV: writers.table_csv,
    OutputFormat.MD: writers.table_markdown,
    OutputFormat.JSON: writers.table_json,
}
MESH_WRITERS: Dict[OutputFormat, Callable[[MeshData], str]] = {
    OutputFormat.OBJ: writers.obj,
    OutputFormat.PLY: writers.ply,
    OutputFormat.JSON: writers.mesh_json,
    OutputFormat.CSV: writers.mesh_csv,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output directory (default: $MEREON_OUT, then the working directory)")
    common.add_argument("--format", choices=[f.value for f in OutputFormat])
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    parser = argparse.ArgumentParser(
        prog="mereon", description="Exact constructions and checks for the Mereon polyhedra and quaternion groups"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    subparsers.add_parser(Command.VERIFY.value, parents=[common], help="run every check, exit 1 on any failure")
    report = subparsers.add_parser(Command.REPORT.value, parents=[common], help="regenerate a reference table")
    report.add_argument("table", choices=list(TABLES))
    mesh = subparsers.add_parser(Command.MESH.value, parents=[common], help="export mesh data")
    mesh.add_argument("mesh", choices=list(MESH_NAMES))
    mesh.add_argument("--p", type=int, default=3)
    mesh.add_argument("--q", type=int, default=2)
    mckay = subparsers.add_parser(Command.MCKAY.value, parents=[common], help="character table and McKay graph")
    mckay.add_argument("group", choices=list(GROUPS))
    knot = subparsers.add_parser(Command.KNOT.value, parents=[common], help="sample a torus knot")
    knot.add_argument("--p", type=int, default=3)
    knot.add_argument("--q", type=int, default=2)
    return parser


def _format(config: RunConfig, allowed: Sequence[OutputFormat], default: OutputFormat) -> OutputFormat:
    chosen = config.format or default
    if chosen not in allowed:
        raise UsageError(f"'{config.command.value}' writes {', '.join(f.value for f in allowed)}, not {chosen.value}")
    return chosen


def cmd_verify(config: RunConfig) -> int:
    report = run_verify(config)
    markdown = report.to_markdown()
    writers.write_text(config.out / "verify.json", report.to_json())
    writers.write_text(config.out / "verify.md", markdown)
    sys.stdout.write(markdown)
    if failure := report.first_failure:
        sys.stderr.write(f"FAIL {failure.name}: expected {failure.expected}, got {failure.actual}\n")
        return EXIT_FAILURE
    return EXIT_OK


def cmd_report(config: RunConfig) -> int:
    output_format = _format(config, list(TABLE_WRITERS), OutputFormat.CSV)
    table = build_table(config.table or "")
    content = TABLE_WRITERS[output_format](table)
    writers.write_text(config.out / f"{table.name}.{output_format.value}", content)
    sys.stdout.write(content)
    return EXIT_OK


def cmd_mesh(config: RunConfig) -> int:
    output_format = _format(config, list(MESH_WRITERS), OutputFormat.OBJ)
    mesh = build_mesh(config.mesh or "", TorusKnotSpec(config.p, config.q), config.samples)
    path = writers.write_text(config.out / f"{mesh.name}.{output_format.value}", MESH_WRITERS[output_format](mesh))
    sys.stdout.write(f"{path.name}: {len(mesh.vertices)} vertices, {len(mesh.faces)} faces, {len(mesh.lines)} lines\n")
    return EXIT_OK


def cmd_mckay(config: RunConfig) -> int:
    _format(config, [OutputFormat.DOT, OutputFormat.CSV], OutputFormat.DOT)
    group = GROUPS[config.group or ""]()
    graph = mckay_graph(group, seed=config.seed)
    table = character_table(group, seed=config.seed)
    content = writers.dot(graph)
    writers.write_text(config.out / f"mckay-{graph.group}.dot", content)
    writers.write_text(config.out / f"characters-{graph.group}.csv", writers.characters_csv(table))
    sys.stdout.write(content)
    return EXIT_OK


def cmd_knot(config: RunConfig) -> int:
    output_format = _format(config, [OutputFormat.CSV, OutputFormat.OBJ], OutputFormat.CSV)
    spec = TorusKnotSpec(config.p, config.q)
    windings = winding_numbers(spec, config.samples)
    name = f"knot-{spec.p}-{spec.q}"
    if output_format is OutputFormat.OBJ:
        content = writers.obj(build_mesh("knot", spec, config.samples))
    else:
        points = knot_polyline(spec, config.samples)
        residuals = np.asarray(ring_torus_residual(points))
        t = sample_parameters(config.samples)
        rows = (
            [writers.format_float(v) for v in (t[i], *points[i], residuals[i])]
            for i in range(config.samples)
        )
        content = writers.csv_rows(("t", "x", "y", "z", "residual"), rows)
    writers.write_text(config.out / f"{name}.{output_format.value}", content)
    residual = projection_residual(spec, config.samples)
    sys.stdout.write(f"{spec}: windings {windings}, max ring-torus residual {residual:.1e}\n")
    return EXIT_OK


COMMANDS: Dict[Command, Callable[[RunConfig], int]] = {
    Command.VERIFY: cmd_verify,
    Command.REPORT: cmd_report,
    Command.MESH: cmd_mesh,
    Command.MCKAY: cmd_mckay,
    Command.KNOT: cmd_knot,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    values = {key: value for key, value in vars(args).items() if value is not None and key != "out"}
    try:
        config = build_config(args.out, **values)
        return COMMANDS[config.command](config)
    except USAGE_ERRORS as e:
        sys.stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE
    except Exception as e:  # noqa: B902
        logger.info(f"{type(e).__name__}: {e}")
        sys.stderr.write(f"FAIL: {type(e).__name__}: {e}\n")
        return EXIT_FAILURE
