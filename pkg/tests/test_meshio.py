import math

import pytest

import multimorse as mm
from multimorse.meshio import MeshFormatError

import helpers

TRIANGLE_OFF = """OFF
# a single triangle
3 1 0
0.0 0.0 0.0
1.0 0.0 0.0
0.0 1.0 0.0
3 0 1 2
"""

TRIANGLE_OBJ = """# exported by hand
v 0.0 0.0 0.0
v 1.0 0.0 0.0
v 0.0 1.0 0.0
vn 0 0 1
f 1/1/1 2/2/1 3/3/1
"""


def test_read_off(tmp_path):
    path = tmp_path / "tri.off"
    path.write_text(TRIANGLE_OFF)
    mesh = mm.read_mesh(str(path))
    assert mesh.vertices == [(0.0, 0.0, 0.0), (1.0, 0.0, 0.0),
                             (0.0, 1.0, 0.0)]
    assert mesh.faces == [(0, 1, 2)]


def test_off_counts_on_header_line(tmp_path):
    path = tmp_path / "tri.off"
    path.write_text("OFF 3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n")
    assert mm.read_mesh(str(path)).faces == [(0, 1, 2)]


def test_read_obj(tmp_path):
    path = tmp_path / "tri.obj"
    path.write_text(TRIANGLE_OBJ)
    mesh = mm.read_mesh(str(path))
    assert len(mesh.vertices) == 3
    assert mesh.faces == [(0, 1, 2)]


def test_extension_fallback_sniffs_off(tmp_path):
    path = tmp_path / "mesh.txt"
    path.write_text(TRIANGLE_OFF)
    assert mm.read_mesh(str(path)).faces == [(0, 1, 2)]
    bad = tmp_path / "mesh.dat"
    bad.write_text("not a mesh at all\n")
    with pytest.raises(MeshFormatError, match="unrecognized"):
        mm.read_mesh(str(bad))


@pytest.mark.parametrize("body,complaint", [
    ("", "empty"),
    ("3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n", "OFF header"),
    ("OFF\n", "count line"),
    ("OFF\nx y\n", "bad count"),
    ("OFF\n3 1 0\n0 0 0\n1 0 0\n3 0 1 2\n", "expected 3 vertices"),
    ("OFF\n3 1 0\n0 0 zero\n1 0 0\n0 1 0\n3 0 1 2\n", "bad vertex"),
    ("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n4 0 1 2 2\n", "non-triangle"),
    ("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 1\n", "degenerate"),
    ("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 3\n", "out of range"),
])
def test_bad_off_files(tmp_path, body, complaint):
    path = tmp_path / "bad.off"
    path.write_text(body)
    with pytest.raises(MeshFormatError, match=complaint):
        mm.read_mesh(str(path))


@pytest.mark.parametrize("body,complaint", [
    ("v 0 0\nf 1 2 3\n", "bad vertex"),
    ("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2\n", "non-triangle"),
    ("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 4\n", "out of range"),
    ("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 0 1 2\n", "out of range"),
    ("v 0 0 0\nv 1 0 0\nv 0 1 0\nf a b c\n", "bad face reference"),
])
def test_bad_obj_files(tmp_path, body, complaint):
    path = tmp_path / "bad.obj"
    path.write_text(body)
    with pytest.raises(MeshFormatError, match=complaint):
        mm.read_mesh(str(path))


def test_missing_file():
    with pytest.raises(MeshFormatError, match="cannot read"):
        mm.read_mesh("/nonexistent/mesh.off")
    with pytest.raises(MeshFormatError, match="cannot read"):
        mm.read_values("/nonexistent/values.txt")


def test_preset_abs_xy():
    mesh = mm.Mesh([(-1.5, 2.0, 7.0), (0.0, 0.0, -3.0), (0.25, -0.5, 0.0)],
                   [])
    f = mm.preset_abs_xy(mesh)
    assert f.grades == [(1.5, 2.0), (0.0, 0.0), (0.25, 0.5)]
    mirrored = mm.Mesh([(1.5, -2.0, 0.0)], [])
    assert mm.preset_abs_xy(mirrored)[0] == (1.5, 2.0)


def test_read_values(tmp_path):
    path = tmp_path / "vals.txt"
    path.write_text("0 1\n# comment\n2 3\n\n4 5\n")
    f = mm.read_values(str(path))
    assert f.grades == [(0.0, 1.0), (2.0, 3.0), (4.0, 5.0)]
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\ntwo 3\n")
    with pytest.raises(MeshFormatError, match="bad values"):
        mm.read_values(str(bad))
    ragged = tmp_path / "ragged.txt"
    ragged.write_text("0 1\n2\n")
    with pytest.raises(mm.GradeError):
        mm.read_values(str(ragged))


def test_mesh_complex_counts():
    tri = mm.Mesh([(0.0, 0.0, 0.0)] * 3, [(0, 1, 2)])
    assert len(mm.mesh_complex(tri)) == 7
    octa = mm.Mesh(helpers.OCTAHEDRON_VERTICES, helpers.OCTAHEDRON_FACES)
    S = mm.mesh_complex(octa)
    assert (len(S.cells_of_dim(0)), len(S.cells_of_dim(1)),
            len(S.cells_of_dim(2))) == (6, 12, 8)
    assert mm.homology(S).betti == [1, 0, 1]


def test_sphere_meshes_grow_fourfold():
    m1 = helpers.sphere_mesh(1)
    assert len(m1.faces) == 32
    for x, y, z in m1.vertices:
        assert math.isclose(x * x + y * y + z * z, 1.0)
    assert len(helpers.sphere_mesh(2).faces) == 128


def test_reduced_round_trip(tmp_path):
    for ring in (mm.GF2, mm.RATIONALS, mm.INTEGERS):
        S = helpers.full_triangle(ring)
        f = helpers.grades_of(helpers.FULL_TRIANGLE_GRADES)
        grades = mm.entry_grades(S, f)
        path = tmp_path / f"{ring.name}.txt"
        mm.write_reduced(str(path), S, grades, f.k)
        back, back_grades = mm.read_reduced(str(path), ring)
        assert back.cells() == S.cells()
        assert back_grades == grades
        for c in S.cells():
            assert dict(back.boundary(c)) == dict(S.boundary(c))


def test_reduced_round_trip_fractions(tmp_path):
    from fractions import Fraction
    S = mm.SComplex(mm.RATIONALS)
    a = S.add_cell(0)
    b = S.add_cell(0)
    e = S.add_cell(1)
    S.set_incidence(e, a, Fraction(-3, 2))
    S.set_incidence(e, b, Fraction(3, 2))
    path = tmp_path / "frac.txt"
    grades = {a: (0.125,), b: (0.25,), e: (0.25,)}
    mm.write_reduced(str(path), S, grades, 1)
    back, back_grades = mm.read_reduced(str(path), mm.RATIONALS)
    assert back.incidence(e, a) == Fraction(-3, 2)
    assert back_grades == grades


def test_reduced_empty_complex(tmp_path):
    path = tmp_path / "empty.txt"
    mm.write_reduced(str(path), mm.SComplex(mm.GF2), {}, 2)
    back, grades = mm.read_reduced(str(path))
    assert back.cells() == [] and grades == {}


def test_reduced_bad_files(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("cells 0\n")
    with pytest.raises(MeshFormatError, match="expected 'k'"):
        mm.read_reduced(str(path))
    path.write_text("k 2\ncells 1\n0 0 1.0\nboundary 0\n")
    with pytest.raises(MeshFormatError, match="grade components"):
        mm.read_reduced(str(path))
    path.write_text("k 1\ncells 2\n0 0 1.0\n1 1 1.0\nboundary 1\n1 0 x\n")
    with pytest.raises(MeshFormatError, match="bad boundary"):
        mm.read_reduced(str(path), mm.INTEGERS)


def test_write_off_round_trip(tmp_path):
    mesh = helpers.sphere_mesh(1)
    path = tmp_path / "sphere.off"
    helpers.write_off(str(path), mesh)
    back = mm.read_mesh(str(path))
    assert back.vertices == mesh.vertices
    assert back.faces == list(mesh.faces)
