"""Mesh, grade, and reduced-complex file input and output.

Meshes come in as ASCII OFF (canonical) or OBJ (v/f lines only);
triangles only. Vertex grades come from a preset on the coordinates or
from a values file with one line of k numbers per vertex. A reduced
complex is written as a small text format: a header with the grade arity
and cell count, one line per cell (id, dimension, grade components),
then the boundary entries. Grades survive a write/read round trip
bit-exactly because floats are printed in shortest-repr form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .complexes import SComplex, SimplicialComplex, build_simplicial
from .filtration import Grade, MeasuringFunction
from .rings import GF2, CoefficientRing


class MeshFormatError(ValueError):
    """Raised for malformed mesh, values, or reduced-complex files."""


@dataclass
class Mesh:
    """Triangle mesh: 3D vertex coordinates and vertex-index triples."""

    vertices: List[Tuple[float, float, float]]
    faces: List[Tuple[int, int, int]]


def _content_lines(text: str) -> List[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _parse_off(lines: List[str], name: str) -> Mesh:
    if not lines:
        raise MeshFormatError(f"mesh: {name}: empty file")
    head = lines[0].split()
    if head[0] != "OFF":
        raise MeshFormatError(f"mesh: {name}: missing OFF header")
    if len(head) > 1:
        counts, body = head[1:], lines[1:]
    else:
        if len(lines) < 2:
            raise MeshFormatError(f"mesh: {name}: missing count line")
        counts, body = lines[1].split(), lines[2:]
    try:
        nv, nf = int(counts[0]), int(counts[1])
    except (IndexError, ValueError):
        raise MeshFormatError(f"mesh: {name}: bad count line") from None
    if len(body) < nv + nf:
        raise MeshFormatError(
            f"mesh: {name}: expected {nv} vertices and {nf} faces")
    vertices = []
    for i in range(nv):
        parts = body[i].split()
        try:
            vertices.append((float(parts[0]), float(parts[1]), float(parts[2])))
        except (IndexError, ValueError):
            raise MeshFormatError(
                f"mesh: {name}: bad vertex line {i}") from None
    faces = []
    for i in range(nf):
        parts = body[nv + i].split()
        try:
            n = int(parts[0])
            idx = tuple(int(x) for x in parts[1:1 + n])
        except (IndexError, ValueError):
            raise MeshFormatError(f"mesh: {name}: bad face line {i}") from None
        faces.append(_checked_triangle(idx, n, nv, name))
    return Mesh(vertices, faces)


def _checked_triangle(idx: Tuple[int, ...], n: int, nv: int,
                      name: str) -> Tuple[int, int, int]:
    if n != 3 or len(idx) != 3:
        raise MeshFormatError(f"mesh: {name}: non-triangle face {idx}")
    if len(set(idx)) != 3:
        raise MeshFormatError(f"mesh: {name}: degenerate face {idx}")
    for v in idx:
        if not 0 <= v < nv:
            raise MeshFormatError(f"mesh: {name}: index out of range ({v})")
    return idx  # type: ignore[return-value]


def _parse_obj(lines: List[str], name: str) -> Mesh:
    vertices: List[Tuple[float, float, float]] = []
    raw_faces: List[Tuple[int, ...]] = []
    for line in lines:
        parts = line.split()
        if parts[0] == "v":
            try:
                vertices.append(
                    (float(parts[1]), float(parts[2]), float(parts[3])))
            except (IndexError, ValueError):
                raise MeshFormatError(
                    f"mesh: {name}: bad vertex line {line!r}") from None
        elif parts[0] == "f":
            refs = parts[1:]
            idx = []
            for ref in refs:
                head = ref.split("/", 1)[0]
                try:
                    i = int(head)
                except ValueError:
                    raise MeshFormatError(
                        f"mesh: {name}: bad face reference {ref!r}") from None
                if i < 1:
                    raise MeshFormatError(
                        f"mesh: {name}: index out of range ({i})")
                idx.append(i - 1)
            raw_faces.append(tuple(idx))
        # every other OBJ directive (vt, vn, usemtl, ...) is ignored
    faces = [_checked_triangle(idx, len(idx), len(vertices), name)
             for idx in raw_faces]
    return Mesh(vertices, faces)


def read_mesh(path: str) -> Mesh:
    """Parse an OFF or OBJ file, by extension with an OFF-header
    fallback."""
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as e:
        raise MeshFormatError(f"mesh: cannot read {path}: {e}") from None
    lines = _content_lines(text)
    name = str(path)
    if name.lower().endswith(".obj"):
        return _parse_obj(lines, name)
    if name.lower().endswith(".off") or (lines and lines[0].split()[0] == "OFF"):
        return _parse_off(lines, name)
    raise MeshFormatError(f"mesh: {name}: unrecognized format")


def read_values(path: str) -> MeasuringFunction:
    """Read a values file: one line per vertex, k numbers per line."""
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = _content_lines(fh.read())
    except OSError as e:
        raise MeshFormatError(f"mesh: cannot read {path}: {e}") from None
    grades = []
    for i, line in enumerate(lines):
        try:
            grades.append(tuple(float(x) for x in line.split()))
        except ValueError:
            raise MeshFormatError(
                f"mesh: {path}: bad values line {i}") from None
    return MeasuringFunction(grades)


def preset_abs_xy(mesh: Mesh) -> MeasuringFunction:
    """The coordinate preset: vertex (x, y, z) gets grade (|x|, |y|)."""
    return MeasuringFunction([(abs(x), abs(y)) for x, y, _ in mesh.vertices])


def mesh_complex(mesh: Mesh, ring: CoefficientRing = GF2
                 ) -> SimplicialComplex:
    """Simplicial complex of a triangle mesh: all vertices (isolated ones
    included), all edges and triangles from the face list."""
    return build_simplicial(len(mesh.vertices), mesh.faces, ring)


def write_reduced(path: str, S: SComplex, grades: Dict[int, Grade],
                  k: int) -> None:
    """Write a reduced complex with its carried grades."""
    cells = S.cells()
    entries = []
    for s in cells:
        for t in sorted(S.primary_faces(s)):
            entries.append((s, t, S.incidence(s, t)))
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"k {k}\n")
        fh.write(f"cells {len(cells)}\n")
        for c in cells:
            g = grades[c]
            if len(g) != k:
                raise MeshFormatError(
                    f"mesh: {path}: cell {c} grade arity {len(g)} != {k}")
            text = " ".join(repr(x) for x in g)
            fh.write(f"{c} {S.dim(c)} {text}\n")
        fh.write(f"boundary {len(entries)}\n")
        for s, t, v in entries:
            fh.write(f"{s} {t} {S.ring.format(v)}\n")


def read_reduced(path: str, ring: CoefficientRing = GF2
                 ) -> Tuple[SComplex, Dict[int, Grade]]:
    """Read a reduced-complex file back into a complex and its grades."""
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = _content_lines(fh.read())
    except OSError as e:
        raise MeshFormatError(f"mesh: cannot read {path}: {e}") from None

    def expect(i: int, tag: str) -> List[str]:
        if i >= len(lines) or not lines[i].startswith(tag + " "):
            raise MeshFormatError(f"mesh: {path}: expected '{tag}' line")
        return lines[i].split()

    k = int(expect(0, "k")[1])
    n_cells = int(expect(1, "cells")[1])
    S = SComplex(ring)
    grades: Dict[int, Grade] = {}
    for i in range(n_cells):
        parts = lines[2 + i].split()
        try:
            cid, dim = int(parts[0]), int(parts[1])
            grade = tuple(float(x) for x in parts[2:])
        except (IndexError, ValueError):
            raise MeshFormatError(
                f"mesh: {path}: bad cell line {lines[2 + i]!r}") from None
        if len(grade) != k:
            raise MeshFormatError(
                f"mesh: {path}: cell {cid} has {len(grade)} grade components")
        S.add_cell(dim, cid)
        grades[cid] = grade
    pos = 2 + n_cells
    n_entries = int(expect(pos, "boundary")[1])
    for i in range(n_entries):
        parts = lines[pos + 1 + i].split()
        try:
            s, t = int(parts[0]), int(parts[1])
            v = ring.parse(parts[2])
        except (IndexError, ValueError):
            raise MeshFormatError(
                f"mesh: {path}: bad boundary line {lines[pos + 1 + i]!r}"
            ) from None
        S.set_incidence(s, t, v)
    S.validate()
    return S, grades
