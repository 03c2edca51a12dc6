"""Deterministic text renderings: OBJ, PLY, CSV, JSON, DOT and Markdown."""
import csv
import io
import json
from pathlib import Path
from typing import Iterable, List, Sequence

import numpy as np

from mereon.cli.meshes import MeshData
from mereon.cli.tables import ReportTable
from mereon.mckay import CharacterTable, McKayGraph


def format_float(value: float) -> str:
    text = f"{value:.12g}"
    return "0" if text == "-0" else text


def obj(mesh: MeshData) -> str:
    lines = [f"# {mesh.name}", f"o {mesh.name}"]
    lines.extend(f"v {' '.join(format_float(c) for c in vertex)}" for vertex in mesh.vertices)
    lines.extend(f"f {' '.join(str(i + 1) for i in face)}" for face in mesh.faces)
    lines.extend(f"l {' '.join(str(i + 1) for i in line)}" for line in mesh.lines)
    return "\n".join(lines) + "\n"


def ply(mesh: MeshData) -> str:
    # PLY has no polyline element, so lines are written as edges
    edges = [(line[i], line[i + 1]) for line in mesh.lines for i in range(len(line) - 1)]
    header = ["ply", "format ascii 1.0", f"comment {mesh.name}", f"element vertex {len(mesh.vertices)}"]
    header += ["property float x", "property float y", "property float z"]
    header += [f"element face {len(mesh.faces)}", "property list uchar int vertex_indices"]
    if edges:
        header += [f"element edge {len(edges)}", "property int vertex1", "property int vertex2"]
    body = [" ".join(format_float(c) for c in vertex) for vertex in mesh.vertices]
    body += [f"{len(face)} {' '.join(str(i) for i in face)}" for face in mesh.faces]
    body += [f"{u} {v}" for u, v in edges]
    return "\n".join(header + ["end_header"] + body) + "\n"


def csv_rows(headers: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buffer.getvalue()


def markdown_rows(headers: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    lines = [f"| {' | '.join(headers)} |", f"|{'---|' * len(headers)}"]
    lines.extend(f"| {' | '.join(str(cell) for cell in row)} |" for row in rows)
    return "\n".join(lines) + "\n"


def table_csv(table: ReportTable) -> str:
    return csv_rows(table.headers, table.rows)


def table_markdown(table: ReportTable) -> str:
    return f"# {table.name}\n\n" + markdown_rows(table.headers, table.rows)


def table_json(table: ReportTable) -> str:
    payload = {"table": table.name, "rows": [dict(zip(table.headers, row)) for row in table.rows]}
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def mesh_json(mesh: MeshData) -> str:
    payload = {
        "name": mesh.name,
        "vertices": mesh.exact if mesh.exact is not None else [[format_float(c) for c in v] for v in mesh.vertices],
        "faces": [list(face) for face in mesh.faces],
        "lines": [list(line) for line in mesh.lines],
    }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def mesh_csv(mesh: MeshData) -> str:
    return csv_rows(("index", "x", "y", "z"), ([i, *(format_float(c) for c in v)] for i, v in enumerate(mesh.vertices)))


def _complex(value: complex) -> str:
    real, imag = round(value.real, 6) + 0.0, round(value.imag, 6) + 0.0
    if imag == 0:
        return f"{real:.6f}"
    return f"{real:.6f}{imag:+.6f}i"


def characters_csv(table: CharacterTable) -> str:
    headers = ["irrep", "dimension"] + [f"class {i} (size {c.size})" for i, c in enumerate(table.classes)]
    rows: List[List[object]] = [
        [f"ρ{i}", dimension, *(_complex(complex(v)) for v in row)]
        for i, (dimension, row) in enumerate(zip(table.dimensions, table.characters))
    ]
    return csv_rows(headers, rows)


def dot(graph: McKayGraph) -> str:
    name = f"mckay_{graph.group}"
    lines = [f"graph {name} {{", f'  label="{graph.group}: {graph.label.value}";']
    lines.extend(f'  n{i} [label="{dimension}"];' for i, dimension in enumerate(graph.dimensions))
    for i, j in zip(*np.nonzero(np.triu(graph.adjacency))):
        multiplicity = int(graph.adjacency[i, j])
        suffix = f' [label="{multiplicity}"]' if multiplicity > 1 else ""
        lines.append(f"  n{i} -- n{j}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_text(path: Path, content: str) -> Path:
    with path.open("w", encoding="utf-8", newline="\n") as file:
        file.write(content)
    return path
