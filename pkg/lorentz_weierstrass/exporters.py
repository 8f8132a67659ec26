"""
Mesh files for sampled immersions.

OBJ files list the valid nodes as vertices in ambient coordinates and split
every grid quad whose four corners are valid into two triangles. The causal
type only appears in the `# eps=` header line. CSV files have one row per
valid node with the parameter, the immersion and its local invariants.
"""
import csv
import logging
from dataclasses import dataclass, replace

import numpy as np

from lorentz_weierstrass.exceptions import ContractViolation, DegenerateMetric, EmptyMesh
from lorentz_weierstrass.functions import format_number
from lorentz_weierstrass.geometry import shape_report
from lorentz_weierstrass.lorentz import rigid_motion
from lorentz_weierstrass.weierstrass import integrate_immersion

logger = logging.getLogger(__name__)

OBJ = "obj"
CSV = "csv"
FORMATS = (OBJ, CSV)

CSV_FIELDS = ["x", "y", "psi1", "psi2", "psi3", "E", "H", "K", "lambda"]


@dataclass(frozen=True)
class MeshSummary:
    path: str
    vertices: int
    faces: int
    valid_nodes: int


def sample_surface(entry_or_chart, grid, rotation=None, translation=None):
    """Integrate the chart over the grid and apply the rigid motion, if any."""
    chart = getattr(entry_or_chart, "chart", entry_or_chart)
    sample = chart.evaluate(grid.points(chart.eps))
    if not np.any(sample.valid):
        raise EmptyMesh(f"every node of the {grid.nx}x{grid.ny} grid is masked")
    surface = integrate_immersion(chart, grid)
    if rotation is None and translation is None:
        return surface
    psi = rigid_motion(surface.psi, rotation, translation)
    return replace(surface, psi=psi, notes=surface.notes + ("rigid motion applied",))


def triangles(mask):
    """Two triangles per grid quad with four valid corners, as node index pairs."""
    quads = mask[:-1, :-1] & mask[1:, :-1] & mask[1:, 1:] & mask[:-1, 1:]
    faces = []
    for i, j in zip(*np.nonzero(quads)):
        i, j = int(i), int(j)
        faces.append(((i, j), (i + 1, j), (i + 1, j + 1)))
        faces.append(((i, j), (i + 1, j + 1), (i, j + 1)))
    return faces


def _write_obj(surface, path):
    mask = surface.mask
    numbers = np.zeros(mask.shape, dtype=int)
    count = 0
    with open(path, "w", newline="\n") as obj:
        obj.write(f"# eps={surface.eps:+d}\n")
        obj.write(f"# grid {surface.grid.nx}x{surface.grid.ny}\n")
        for i, j in zip(*np.nonzero(mask)):
            count += 1
            numbers[i, j] = count
            obj.write("v " + " ".join(format_number(c) for c in surface.psi[i, j]) + "\n")
        faces = triangles(mask)
        for face in faces:
            obj.write("f " + " ".join(str(numbers[node]) for node in face) + "\n")
    return count, len(faces)


def _write_csv(surface, path):
    try:
        report = shape_report(surface)
    except DegenerateMetric:
        # grids too small for second differences still get their coordinates
        report = None
    x, y = surface.grid.mesh()
    count = 0
    with open(path, "w", newline="") as csvfile:
        writer = csv.DictWriter(csvfile, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for i, j in zip(*np.nonzero(surface.mask)):
            count += 1
            row = {"x": format_number(x[i, j]), "y": format_number(y[i, j])}
            for index, key in enumerate(("psi1", "psi2", "psi3")):
                row[key] = format_number(surface.psi[i, j, index])
            for key, values in (("E", "E"), ("H", "H"), ("K", "K"), ("lambda", "lam")):
                if report is None or not report.mask[i, j]:
                    row[key] = ""
                else:
                    row[key] = format_number(getattr(report, values)[i, j])
            writer.writerow(row)
    return count, 0


def render_mesh(entry_or_chart, grid, path, format=OBJ, rotation=None, translation=None):
    """
    Write the sampled immersion to `path` as OBJ or CSV and return a
    MeshSummary. Raises EmptyMesh when every node is masked.
    """
    if format not in FORMATS:
        raise ContractViolation(f"unknown mesh format {format!r}, choose from {', '.join(FORMATS)}")
    surface = sample_surface(entry_or_chart, grid, rotation, translation)
    if format == OBJ:
        vertices, faces = _write_obj(surface, path)
    else:
        vertices, faces = _write_csv(surface, path)
    logger.info("wrote %s mesh with %d vertices and %d faces to %s", format, vertices, faces, path)
    return MeshSummary(
        path=str(path), vertices=vertices, faces=faces, valid_nodes=surface.valid_count
    )
