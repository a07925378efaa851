"""Brute-force homology and persistent-rank certification.

Everything here recomputes ranks directly from boundary matrices by
exact Gaussian elimination, deliberately sharing no code with the
matching or reduction machinery, so it can certify their output. The
rank of the map H_q(sublevel at alpha) -> H_q(sublevel at beta) over a
field equals the number of cycle-space basis vectors at alpha that stay
independent modulo the boundary space at beta; the implementation counts
exactly that, caching cycle bases per (alpha, q) and boundary echelons
per (beta, q). Integer homology (Betti numbers plus torsion) goes
through a Smith normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .complexes import SComplex
from .filtration import Grade, critical_grades, leq, sublevel_cells
from .rings import RATIONALS, CoefficientRing, Integers


class OracleError(ValueError):
    """Raised for unusable oracle inputs: non-field coefficients where a
    field is required, incomparable grades, or sublevel sets that are
    not closed under faces."""


def _axpy(target: Dict[int, object], c, source: Dict[int, object],
          fld: CoefficientRing) -> None:
    for k, v in source.items():
        nv = fld.add(target.get(k, fld.zero), fld.mul(c, v))
        if nv == fld.zero:
            target.pop(k, None)
        else:
            target[k] = nv


def _scaled(vec: Dict[int, object], c, fld: CoefficientRing) -> Dict[int, object]:
    return {k: fld.mul(c, v) for k, v in vec.items()}


class _Echelon:
    """Row space of inserted vectors; each stored row is normalized so
    its largest-key entry (the pivot) has coefficient one."""

    def __init__(self, fld: CoefficientRing):
        self.fld = fld
        self.rows: Dict[int, Dict[int, object]] = {}

    def insert(self, vec: Dict[int, object]) -> bool:
        """Add vec to the space; True when it was independent."""
        fld = self.fld
        vec = dict(vec)
        while vec:
            p = max(vec)
            row = self.rows.get(p)
            if row is None:
                self.rows[p] = _scaled(vec, fld.inv(vec[p]), fld)
                return True
            _axpy(vec, fld.neg(vec[p]), row, fld)
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def _independent_count(vectors: List[Dict[int, object]], base: _Echelon,
                       fld: CoefficientRing) -> int:
    """How many of the vectors are independent modulo base. The base
    echelon is read, never modified."""
    extra: Dict[int, Dict[int, object]] = {}
    count = 0
    for v in vectors:
        vec = dict(v)
        while vec:
            p = max(vec)
            row = base.rows.get(p)
            if row is None:
                row = extra.get(p)
            if row is None:
                extra[p] = _scaled(vec, fld.inv(vec[p]), fld)
                count += 1
                break
            _axpy(vec, fld.neg(vec[p]), row, fld)
    return count


def _field_view(S: SComplex, field: Optional[CoefficientRing]
                ) -> Tuple[CoefficientRing, Callable]:
    """Resolve the field to compute over and the coefficient coercion.

    Integer-coefficient complexes default to the rationals; a complex
    over a field must be computed over that same field."""
    ring = S.ring
    if field is None:
        fld = ring if ring.is_field else RATIONALS
    else:
        fld = field
    if not fld.is_field:
        raise OracleError("oracle: rank computations need field coefficients")
    if fld == ring:
        return fld, lambda v: v
    if isinstance(ring, Integers):
        return fld, fld.from_int
    raise OracleError(
        f"oracle: cannot view {ring.name} coefficients in {fld.name}")


def _restricted_column(S: SComplex, c: int, cell_set,
                       fld: CoefficientRing, conv) -> Dict[int, object]:
    col: Dict[int, object] = {}
    for t, v in S.boundary(c):
        if t not in cell_set:
            raise OracleError(
                f"oracle: face {t} of cell {c} missing from sublevel set")
        w = conv(v)
        if w != fld.zero:
            col[t] = w
    return col


def _cycle_basis(S: SComplex, cell_set, q: int, fld: CoefficientRing,
                 conv) -> List[Dict[int, object]]:
    """Basis of the q-cycles of the subcomplex on cell_set, each vector a
    combination of q-cells."""
    pivots: Dict[int, Tuple[Dict, Dict]] = {}
    kernel: List[Dict[int, object]] = []
    for c in sorted(x for x in cell_set if S.dim(x) == q):
        vec = _restricted_column(S, c, cell_set, fld, conv)
        comb = {c: fld.one}
        while vec:
            p = max(vec)
            if p not in pivots:
                inv = fld.inv(vec[p])
                pivots[p] = (_scaled(vec, inv, fld), _scaled(comb, inv, fld))
                break
            pv, pc = pivots[p]
            s = fld.neg(vec[p])
            _axpy(vec, s, pv, fld)
            _axpy(comb, s, pc, fld)
        if not vec:
            kernel.append(comb)
    return kernel


def _boundary_echelon(S: SComplex, cell_set, q: int, fld: CoefficientRing,
                      conv) -> _Echelon:
    """Echelon of the q-boundaries of the subcomplex on cell_set."""
    ech = _Echelon(fld)
    for c in sorted(x for x in cell_set if S.dim(x) == q + 1):
        ech.insert(_restricted_column(S, c, cell_set, fld, conv))
    return ech


@dataclass
class HomologyRanks:
    """Betti numbers by dimension; torsion coefficients by dimension when
    computed over the integers, else None."""

    betti: List[int]
    torsion: Optional[List[List[int]]] = None

    def betti_of(self, q: int) -> int:
        return self.betti[q] if 0 <= q < len(self.betti) else 0


def _integer_torsion(S: SComplex, q: int) -> List[int]:
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import invariant_factors

    rows = S.cells_of_dim(q)
    cols = S.cells_of_dim(q + 1)
    if not rows or not cols:
        return []
    row_pos = {c: i for i, c in enumerate(rows)}
    m = [[0] * len(cols) for _ in rows]
    for j, c in enumerate(cols):
        for t, v in S.boundary(c):
            m[row_pos[t]][j] = int(v)
    facs = invariant_factors(Matrix(m), domain=ZZ)
    return sorted(abs(int(d)) for d in facs if int(d) != 0 and abs(int(d)) != 1)


def homology(S: SComplex, ring: Optional[CoefficientRing] = None
             ) -> HomologyRanks:
    """Homology ranks of the whole complex over the given ring (default:
    the complex's own ring). Field coefficients give Betti numbers;
    integer coefficients also give torsion."""
    target = ring if ring is not None else S.ring
    with_torsion = isinstance(target, Integers)
    if with_torsion and not isinstance(S.ring, Integers):
        raise OracleError(
            f"oracle: cannot view {S.ring.name} coefficients in z")
    fld, conv = _field_view(S, None if with_torsion else target)
    top = S.max_dim
    if top < 0:
        return HomologyRanks([], [] if with_torsion else None)
    all_cells = set(S.cells())
    betti: List[int] = []
    torsion: Optional[List[List[int]]] = [] if with_torsion else None
    for q in range(top + 1):
        cycles = len(_cycle_basis(S, all_cells, q, fld, conv))
        borders = _boundary_echelon(S, all_cells, q, fld, conv).rank
        betti.append(cycles - borders)
        if with_torsion:
            torsion.append(_integer_torsion(S, q))
    return HomologyRanks(betti, torsion)


def persistent_rank(S: SComplex, grades: Dict[int, Grade], alpha: Grade,
                    beta: Grade, q: int,
                    field: Optional[CoefficientRing] = None) -> int:
    """Rank of H_q(sublevel at alpha) -> H_q(sublevel at beta)."""
    if not leq(alpha, beta):
        raise OracleError(f"oracle: grades {alpha} and {beta} are not ordered")
    fld, conv = _field_view(S, field)
    cells_a = sublevel_cells(grades, alpha)
    cells_b = sublevel_cells(grades, beta)
    cycles = _cycle_basis(S, cells_a, q, fld, conv)
    base = _boundary_echelon(S, cells_b, q, fld, conv)
    return _independent_count(cycles, base, fld)


def _thin(grid: List[Grade], max_grades: Optional[int]) -> List[Grade]:
    if max_grades is None or len(grid) <= max_grades:
        return list(grid)
    if max_grades < 1:
        raise OracleError("oracle: max_grades must be positive")
    if max_grades == 1:
        return [grid[-1]]
    picked = []
    for i in range(max_grades):
        j = round(i * (len(grid) - 1) / (max_grades - 1))
        if not picked or grid[j] != picked[-1]:
            picked.append(grid[j])
    return picked


def rank_table(S: SComplex, grades: Dict[int, Grade],
               field: Optional[CoefficientRing] = None,
               q_max: Optional[int] = None,
               grid: Optional[Sequence[Grade]] = None,
               max_grades: Optional[int] = None
               ) -> Dict[Tuple[int, Grade, Grade], int]:
    """Persistent ranks for every ordered pair of grid grades and every
    dimension up to q_max. The default grid is the complex's distinct
    entry grades; max_grades thins it to evenly spaced picks."""
    fld, conv = _field_view(S, field)
    if grid is None:
        grid = critical_grades(grades)
    grid = _thin(sorted(set(grid)), max_grades)
    q_hi = S.max_dim if q_max is None else q_max
    sublevels = {g: sublevel_cells(grades, g) for g in grid}
    cycles: Dict[Tuple[Grade, int], List[Dict[int, object]]] = {}
    borders: Dict[Tuple[Grade, int], _Echelon] = {}
    table: Dict[Tuple[int, Grade, Grade], int] = {}
    for alpha in grid:
        for beta in grid:
            if not leq(alpha, beta):
                continue
            for q in range(q_hi + 1):
                if (alpha, q) not in cycles:
                    cycles[alpha, q] = _cycle_basis(
                        S, sublevels[alpha], q, fld, conv)
                if (beta, q) not in borders:
                    borders[beta, q] = _boundary_echelon(
                        S, sublevels[beta], q, fld, conv)
                table[q, alpha, beta] = _independent_count(
                    cycles[alpha, q], borders[beta, q], fld)
    return table


def _grade_text(g: Grade) -> str:
    return ",".join(str(x) for x in g)


@dataclass
class EquivalenceReport:
    """Side-by-side persistent ranks of an original complex and its
    reduction over a shared grade grid."""

    ok: bool
    q_max: int
    grid: List[Grade]
    ranks_original: Dict[Tuple[int, Grade, Grade], int]
    ranks_reduced: Dict[Tuple[int, Grade, Grade], int]
    mismatches: List[Tuple[int, Grade, Grade]]

    def lines(self) -> List[str]:
        out = []
        for key in sorted(self.ranks_original):
            q, alpha, beta = key
            v = self.ranks_original[key]
            text = f"RANK {q} {_grade_text(alpha)} {_grade_text(beta)} {v}"
            if key in set(self.mismatches):
                text += f" != {self.ranks_reduced[key]} MISMATCH"
            out.append(text)
        return out

    def summary(self) -> str:
        checked = len(self.ranks_original)
        if self.ok:
            return f"PASS checked={checked} grades={len(self.grid)}"
        return (f"FAIL mismatches={len(self.mismatches)} "
                f"checked={checked} grades={len(self.grid)}")


def verify_equivalence(S: SComplex, grades_s: Dict[int, Grade],
                       reduced: SComplex, grades_r: Dict[int, Grade],
                       field: Optional[CoefficientRing] = None,
                       q_max: Optional[int] = None,
                       max_grades: Optional[int] = None
                       ) -> EquivalenceReport:
    """Compare persistent ranks of a complex and its reduction on the
    grid of the original's entry grades. Both tables are computed
    independently from boundary matrices."""
    grid = _thin(critical_grades(grades_s), max_grades)
    q_hi = max(S.max_dim, reduced.max_dim, 0) if q_max is None else q_max
    t_orig = rank_table(S, grades_s, field, q_hi, grid)
    t_red = rank_table(reduced, grades_r, field, q_hi, grid)
    mismatches = [k for k in sorted(t_orig) if t_red.get(k) != t_orig[k]]
    return EquivalenceReport(not mismatches, q_hi, list(grid),
                             t_orig, t_red, mismatches)
