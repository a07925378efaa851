"""Vector-valued grades, the componentwise order, and sublevel filtrations.

A grade is a tuple of k floats. Grades are compared componentwise: leq is
<= in every coordinate, lt is < in every coordinate, and le_neq is leq
together with inequality somewhere. A measuring function assigns a grade
to every vertex; a cell enters the filtration at the componentwise
maximum of its vertex grades, so sublevel sets are subcomplexes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from .complexes import SimplicialComplex

Grade = Tuple[float, ...]


class GradeError(ValueError):
    """Raised for grade arity mismatches and non-finite components."""


def _check_pair(a: Grade, b: Grade) -> None:
    if len(a) != len(b):
        raise GradeError(f"grades: arity mismatch {len(a)} vs {len(b)}")


def leq(a: Grade, b: Grade) -> bool:
    """a <= b in every component."""
    _check_pair(a, b)
    return all(x <= y for x, y in zip(a, b))


def lt(a: Grade, b: Grade) -> bool:
    """a < b in every component."""
    _check_pair(a, b)
    return all(x < y for x, y in zip(a, b))


def le_neq(a: Grade, b: Grade) -> bool:
    """a <= b in every component and a != b."""
    return leq(a, b) and a != b


def join(a: Grade, b: Grade) -> Grade:
    _check_pair(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass
class MeasuringFunction:
    """Grades indexed by vertex number (vertex v -> grades[v])."""

    grades: List[Grade]

    def __post_init__(self):
        if not self.grades:
            raise GradeError("grades: no vertices")
        k = len(self.grades[0])
        if k == 0:
            raise GradeError("grades: arity zero")
        for v, g in enumerate(self.grades):
            if len(g) != k:
                raise GradeError(
                    f"grades: vertex {v} has arity {len(g)}, expected {k}")
            if not all(math.isfinite(x) for x in g):
                raise GradeError(f"grades: non-finite component at vertex {v}")
        self.grades = [tuple(float(x) for x in g) for g in self.grades]

    @property
    def k(self) -> int:
        return len(self.grades[0])

    def __len__(self) -> int:
        return len(self.grades)

    def __getitem__(self, v: int) -> Grade:
        try:
            return self.grades[v]
        except IndexError:
            raise GradeError(f"grades: no vertex {v}") from None


def cell_grade(S: SimplicialComplex, f: MeasuringFunction, c: int) -> Grade:
    """Entry grade of a cell: componentwise max over its vertices."""
    w = S.verts[c]
    g = f[w[0]]
    for u in w[1:]:
        g = join(g, f[u])
    return g


def entry_grades(S: SimplicialComplex,
                 f: MeasuringFunction) -> Dict[int, Grade]:
    """Entry grade of every cell of S."""
    return {c: cell_grade(S, f, c) for c in S.cells()}


def sublevel_cells(grades: Dict[int, Grade], alpha: Grade) -> Set[int]:
    """Cells present at grade alpha."""
    return {c for c, g in grades.items() if leq(g, alpha)}


def sublevel_membership(grades: Dict[int, Grade], alpha: Grade):
    """Membership predicate for the sublevel set at alpha."""
    inside = sublevel_cells(grades, alpha)
    return inside.__contains__


def critical_grades(grades: Dict[int, Grade] | Iterable[Grade]) -> List[Grade]:
    """Distinct entry grades, lexicographically sorted."""
    values = grades.values() if isinstance(grades, dict) else grades
    return sorted(set(values))


def check_face_monotone(S: SimplicialComplex,
                        grades: Dict[int, Grade]) -> bool:
    """True when every cell's grade dominates all of its faces' grades,
    i.e. sublevel sets are closed under taking faces."""
    for c in S.cells():
        for t in S.primary_faces(c):
            if not leq(grades[t], grades[c]):
                return False
    return True
