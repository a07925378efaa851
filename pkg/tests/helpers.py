"""Shared builders and invariant checkers for the test suite."""

from __future__ import annotations

import math
import random

import multimorse as mm

# -- worked examples ----------------------------------------------------

EDGE_GRADES = [(0.0, 0.0), (1.0, 1.0)]
TRIANGLE_BOUNDARY_GRADES = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]
FULL_TRIANGLE_GRADES = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0)]
PATH_GRADES = [(0.0, 2.0), (1.0, 1.0), (2.0, 0.0)]


def single_edge(ring=mm.GF2):
    """Cells: vertices 0, 1; edge (0,1) = 2."""
    return mm.build_simplicial(2, [[0, 1]], ring)


def triangle_boundary(ring=mm.GF2):
    """Cells: vertices 0..2; edges (0,1)=3, (0,2)=4, (1,2)=5."""
    return mm.build_simplicial(3, [[0, 1], [0, 2], [1, 2]], ring)


def full_triangle(ring=mm.GF2):
    """Cells: vertices 0..2; edges 3..5 as above; face (0,1,2)=6."""
    return mm.build_simplicial(3, [[0, 1, 2]], ring)


def path_two_edges(ring=mm.GF2):
    """Cells: vertices 0..2; edges (0,1)=3, (1,2)=4."""
    return mm.build_simplicial(3, [[0, 1], [1, 2]], ring)


def grades_of(values):
    return mm.MeasuringFunction([tuple(float(x) for x in g) for g in values])


# -- random corpus ------------------------------------------------------

def random_complex(seed, n_vertices=12, n_top=8, max_size=4, ring=mm.GF2):
    """Closure of a few random simplices; dimension < max_size."""
    rng = random.Random(seed)
    tops = []
    for _ in range(n_top):
        size = rng.randint(1, min(max_size, n_vertices))
        tops.append(rng.sample(range(n_vertices), size))
    return mm.build_simplicial(n_vertices, tops, ring)


def random_grades(seed, n, k=2, levels=2):
    """Vertex grades on a small integer grid, as floats."""
    rng = random.Random(seed)
    return mm.MeasuringFunction(
        [tuple(float(rng.randint(0, levels)) for _ in range(k))
         for _ in range(n)])


# -- invariant batteries ------------------------------------------------

def assert_matching_invariants(S, f, index, P):
    """The partition laws: disjoint cover, bijection onto primary
    cofaces with unit incidence, acyclic modified Hasse diagram, and
    sublevel compatibility of the pairing over the critical grid."""
    cells = set(S.cells())
    A, B, C = P.lower, P.upper, set(P.critical)
    assert A | B | C == cells
    assert not A & B and not A & C and not B & C
    assert len(P.matched) == len(A)
    assert len(set(P.matched.values())) == len(P.matched)
    for s, t in P.matched.items():
        assert t in S.primary_cofaces(s)
        assert S.ring.is_unit(S.incidence(t, s))
    assert mm.is_acyclic(mm.modified_hasse(S, P.matched))
    grades = mm.entry_grades(S, f)
    for s, t in P.matched.items():
        assert grades[s] == grades[t]
    for alpha in mm.critical_grades(grades):
        inside = mm.sublevel_cells(grades, alpha)
        for s, t in P.matched.items():
            if s in inside:
                assert t in inside


def assert_max_index_laws(S, index, P):
    """Vertex indices grow from faces to cofaces and the pairing keeps
    the maximum index unchanged."""
    for c in S.cells():
        top = mm.max_index(S, index, c)
        for t in S.primary_faces(c):
            assert mm.max_index(S, index, t) <= top
    for s, t in P.matched.items():
        assert mm.max_index(S, index, s) == mm.max_index(S, index, t)


def boundary_of_chain(S, chain):
    """Boundary of a sparse chain over S's ring."""
    ring = S.ring
    out = {}
    for g, c in chain.items():
        for t, v in S.boundary(g):
            nv = ring.add(out.get(t, ring.zero), ring.mul(c, v))
            if nv == ring.zero:
                out.pop(t, None)
            else:
                out[t] = nv
    return out


def chain_sub(ring, a, b):
    out = dict(a)
    for k, v in b.items():
        nv = ring.sub(out.get(k, ring.zero), v)
        if nv == ring.zero:
            out.pop(k, None)
        else:
            out[k] = nv
    return out


def chain_add(ring, a, b):
    out = dict(a)
    for k, v in b.items():
        nv = ring.add(out.get(k, ring.zero), v)
        if nv == ring.zero:
            out.pop(k, None)
        else:
            out[k] = nv
    return out


def assert_step_algebra(pre, post, step):
    """Exact chain-map identities of one elementary reduction step:
    projection . inclusion = id on the reduced complex, and
    id - inclusion . projection = dD + Dd cell by cell on the old one."""
    ring = pre.ring
    pi = mm.projection_map(step)
    iota = mm.inclusion_map(step)
    D = mm.homotopy_map(step)
    for g in post.cells():
        assert pi.apply(iota.image_of(g)) == {g: ring.one}
    for g in pre.cells():
        defect = chain_sub(ring, {g: ring.one}, iota.apply(pi.image_of(g)))
        dD = boundary_of_chain(pre, D.image_of(g))
        Dd = D.apply(dict(pre.boundary(g)))
        assert defect == chain_add(ring, dD, Dd)


# -- meshes -------------------------------------------------------------

OCTAHEDRON_VERTICES = [(1.0, 0.0, 0.0), (-1.0, 0.0, 0.0), (0.0, 1.0, 0.0),
                       (0.0, -1.0, 0.0), (0.0, 0.0, 1.0), (0.0, 0.0, -1.0)]
OCTAHEDRON_FACES = [(0, 2, 4), (2, 1, 4), (1, 3, 4), (3, 0, 4),
                    (2, 0, 5), (1, 2, 5), (3, 1, 5), (0, 3, 5)]


def subdivide(vertices, faces):
    """One 1-to-4 split of every triangle, new vertices at edge
    midpoints. Vertex degrees stay bounded (at most 6 for new vertices)."""
    vertices = list(vertices)
    mids = {}

    def midpoint(a, b):
        key = (a, b) if a < b else (b, a)
        if key not in mids:
            ax, ay, az = vertices[a]
            bx, by, bz = vertices[b]
            vertices.append(((ax + bx) / 2, (ay + by) / 2, (az + bz) / 2))
            mids[key] = len(vertices) - 1
        return mids[key]

    out = []
    for a, b, c in faces:
        ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
        out.extend([(a, ab, ca), (ab, b, bc), (ca, bc, c), (ab, bc, ca)])
    return vertices, out


def sphere_mesh(levels):
    """Octahedron subdivided `levels` times, pushed to the unit sphere
    so coordinate-derived grades are mostly distinct."""
    vertices, faces = OCTAHEDRON_VERTICES, OCTAHEDRON_FACES
    for _ in range(levels):
        vertices, faces = subdivide(vertices, faces)
    unit = []
    for x, y, z in vertices:
        n = math.sqrt(x * x + y * y + z * z)
        unit.append((x / n, y / n, z / n))
    return mm.Mesh(unit, [tuple(f) for f in faces])


def write_off(path, mesh):
    with open(path, "w", encoding="ascii") as fh:
        fh.write("OFF\n")
        fh.write(f"{len(mesh.vertices)} {len(mesh.faces)} 0\n")
        for x, y, z in mesh.vertices:
            fh.write(f"{x!r} {y!r} {z!r}\n")
        for a, b, c in mesh.faces:
            fh.write(f"3 {a} {b} {c}\n")
