"""End-to-end drivers shared by the command-line interface.

run() executes one of the five pipeline commands (sort, match, reduce,
verify, stats) against a mesh file and returns a process exit status:
0 for success, 1 for input or configuration errors (raised as
exceptions, mapped by the CLI), 2 for a failed verification. Complexes
small enough for the oracle are certified whole; larger ones are
certified on seeded vertex-star submeshes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .complexes import SComplex, SimplicialComplex, full_subcomplex, \
    vertex_neighbors
from .filtration import MeasuringFunction, entry_grades
from .indexing import build_dag, lex_indexing, topo_sort_kahn
from .matching import MatchPartition, is_acyclic, modified_hasse, partition
from .meshio import mesh_complex, preset_abs_xy, read_mesh, read_values, \
    write_reduced
from .oracle import verify_equivalence
from .reduction import reduce_all
from .rings import get_ring

# grade-pair grids are thinned to this many grades in CLI verification;
# mesh coordinates make nearly every cell grade distinct, and the oracle
# is cubic in cells per grade pair
VERIFY_GRID_LIMIT = 10
SAMPLE_COUNT = 20
SAMPLE_CELL_LIMIT = 800


class PipelineError(ValueError):
    """Raised for bad run configurations."""


@dataclass
class RunConfig:
    """Everything one CLI invocation needs."""

    command: str
    mesh_path: str
    values_path: Optional[str] = None
    preset: str = "abs-xy"
    variant: str = "strict"
    indexing: str = "lex"
    order: str = "generation"
    ring_name: str = "z2"
    q_max: Optional[int] = None
    verify: bool = False
    max_cells: int = 2000
    seed: int = 0
    out: Optional[str] = None
    threads: int = 1

    def validate(self) -> None:
        if self.command not in ("sort", "match", "reduce", "verify", "stats"):
            raise PipelineError(f"run: unknown command {self.command!r}")
        if self.preset != "abs-xy":
            raise PipelineError(f"run: unknown preset {self.preset!r}")
        if self.indexing not in ("lex", "kahn"):
            raise PipelineError(f"run: unknown indexing {self.indexing!r}")
        if self.max_cells < 0:
            raise PipelineError("run: --max-cells must be >= 0")
        if self.threads < 1:
            raise PipelineError("run: --threads must be >= 1")


def make_index(config: RunConfig, f: MeasuringFunction) -> List[int]:
    if config.indexing == "kahn":
        return topo_sort_kahn(build_dag(f))
    return lex_indexing(f)


def stats_table(S: SComplex, C: SComplex) -> str:
    """Per-dimension cell counts of a complex and its reduction, with
    percentages kept (one decimal) and a totals row."""

    def pct(c: int, s: int) -> str:
        return f"{(100.0 * c / s if s else 0.0):.1f}"

    top = max(S.max_dim, C.max_dim)
    rows = [("q", "#S", "#C", "%")]
    total_s = total_c = 0
    for q in range(top + 1):
        ns, nc = len(S.cells_of_dim(q)), len(C.cells_of_dim(q))
        total_s += ns
        total_c += nc
        rows.append((str(q), str(ns), str(nc), pct(nc, ns)))
    rows.append(("total", str(total_s), str(total_c),
                 pct(total_c, total_s)))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    return "\n".join(
        "  ".join(col.rjust(w) for col, w in zip(row, widths))
        for row in rows)


def match_table(S: SComplex, P: MatchPartition) -> str:
    """Per-dimension sizes of the matched and critical sets."""
    lower, upper = P.lower, P.upper
    rows = [("q", "#A", "#B", "#C")]
    totals = [0, 0, 0]
    for q in range(S.max_dim + 1):
        cells = S.cells_of_dim(q)
        na = sum(1 for c in cells if c in lower)
        nb = sum(1 for c in cells if c in upper)
        nc = sum(1 for c in cells if c in P.critical)
        totals = [totals[0] + na, totals[1] + nb, totals[2] + nc]
        rows.append((str(q), str(na), str(nb), str(nc)))
    rows.append(("total",) + tuple(str(t) for t in totals))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    return "\n".join(
        "  ".join(col.rjust(w) for col, w in zip(row, widths))
        for row in rows)


def _ball_submesh(S: SimplicialComplex, center: int,
                  cell_limit: int) -> SimplicialComplex:
    """Grow a vertex ball around center ring by ring, stopping before
    the induced subcomplex would exceed cell_limit cells."""
    inside = {center}
    frontier = {center}
    sub = full_subcomplex(S, inside)
    while frontier:
        ring_verts = set()
        for v in frontier:
            ring_verts |= vertex_neighbors(S, v)
        ring_verts -= inside
        if not ring_verts:
            break
        grown = full_subcomplex(S, inside | ring_verts)
        if len(grown) > cell_limit:
            break
        inside |= ring_verts
        frontier = ring_verts
        sub = grown
    return sub


def sample_star_submeshes(S: SimplicialComplex, count: int,
                          cell_limit: int, seed: int
                          ) -> List[Tuple[int, SimplicialComplex]]:
    """Seeded sample of vertex-star neighborhoods, one per drawn center,
    each at most cell_limit cells."""
    rng = random.Random(seed)
    vids = S.vertex_ids()
    out: List[Tuple[int, SimplicialComplex]] = []
    seen = set()
    while len(out) < count and len(seen) < len(vids):
        center = rng.choice(vids)
        if center in seen:
            continue
        seen.add(center)
        out.append((center, _ball_submesh(S, center, cell_limit)))
    return out


def _verify_one(S: SimplicialComplex, f: MeasuringFunction,
                index: List[int], config: RunConfig,
                max_grades: Optional[int]):
    grades = entry_grades(S, f)
    P = partition(S, f, index, config.variant, config.threads)
    result = reduce_all(S, P, grades=grades, order=config.order)
    return verify_equivalence(S, grades, result.complex, result.grades,
                              q_max=config.q_max, max_grades=max_grades)


def run_verification(S: SimplicialComplex, f: MeasuringFunction,
                     config: RunConfig) -> int:
    """Certify the reduction pipeline on S: whole-complex when it fits
    under the cell cap, else on sampled vertex-star submeshes (a valid
    indexing for f restricts to one for every submesh). Prints the
    report; returns 0 on PASS, 2 on any mismatch."""
    index = make_index(config, f)
    if len(S) <= config.max_cells:
        report = _verify_one(S, f, index, config, VERIFY_GRID_LIMIT)
        for line in report.lines():
            print(line)
        print(report.summary())
        return 0 if report.ok else 2
    cell_limit = min(config.max_cells, SAMPLE_CELL_LIMIT)
    samples = sample_star_submeshes(S, SAMPLE_COUNT, cell_limit, config.seed)
    all_ok = True
    for i, (center, sub) in enumerate(samples):
        report = _verify_one(sub, f, index, config, VERIFY_GRID_LIMIT)
        all_ok = all_ok and report.ok
        print(f"SAMPLE {i} center={center} cells={len(sub)} "
              f"{report.summary()}")
    print(f"PASS samples={len(samples)}" if all_ok
          else f"FAIL samples={len(samples)}")
    return 0 if all_ok else 2


def run(config: RunConfig) -> int:
    """Execute one pipeline command; returns the process exit status."""
    config.validate()
    ring = get_ring(config.ring_name)
    mesh = read_mesh(config.mesh_path)
    S = mesh_complex(mesh, ring)

    if not mesh.vertices:
        if config.command in ("stats", "reduce"):
            print(stats_table(S, S))
        elif config.command == "match":
            print(match_table(S, MatchPartition({}, set())))
        elif config.command == "verify":
            print("PASS checked=0 grades=0")
        return 0

    if config.command == "stats":
        print(stats_table(S, S))
        return 0

    f = read_values(config.values_path) if config.values_path \
        else preset_abs_xy(mesh)
    if len(f) != len(mesh.vertices):
        raise PipelineError(
            f"run: {len(f)} value lines for {len(mesh.vertices)} vertices")

    if config.command == "sort":
        index = make_index(config, f)
        order = sorted(range(len(f)), key=index.__getitem__)
        for v in order:
            text = " ".join(str(x) for x in f[v])
            print(f"{index[v]} {v} {text}")
        return 0

    if config.command == "verify":
        return run_verification(S, f, config)

    index = make_index(config, f)
    P = partition(S, f, index, config.variant, config.threads)

    if config.command == "match":
        print(match_table(S, P))
        acyclic = is_acyclic(modified_hasse(S, P.matched))
        print(f"acyclic {'yes' if acyclic else 'NO'}")
        return 0 if acyclic else 2

    grades = entry_grades(S, f)
    result = reduce_all(S, P, grades=grades, order=config.order)
    print(stats_table(S, result.complex))
    if config.out:
        write_reduced(config.out, result.complex, result.grades, f.k)
    if config.verify:
        return run_verification(S, f, config)
    return 0
