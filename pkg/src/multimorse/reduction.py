"""Elementary reductions of matched pairs and chain homotopy bookkeeping.

Removing a matched pair (sigma, tau), where tau is a primary coface of
sigma with unit incidence, rewrites the remaining coefficients as

    new(eta, xi) = old(eta, xi) - old(eta, sigma) * old(tau, xi) / pivot

with pivot = old(tau, sigma), eta running over the other cofaces of
sigma and xi over the other faces of tau. The result is again a valid
complex, and the step comes with chain maps: a projection onto the
smaller complex, an inclusion back, and a degree +1 homotopy connecting
their composite to the identity. reduce_all applies every pair of a
matching and can accumulate the composed maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .complexes import SComplex, SimplicialComplex
from .filtration import Grade
from .matching import MatchPartition
from .rings import CoefficientRing


class ReductionError(ValueError):
    """Raised when a pair cannot be reduced (not incident, or the
    incidence coefficient is not a unit)."""


def _axpy(target: Dict[int, object], c, source: Dict[int, object],
          ring: CoefficientRing) -> None:
    """target += c * source, dropping entries that cancel to zero."""
    for k, v in source.items():
        nv = ring.add(target.get(k, ring.zero), ring.mul(c, v))
        if nv == ring.zero:
            target.pop(k, None)
        else:
            target[k] = nv


@dataclass
class ChainMap:
    """Sparse linear map given by columns for the generators where it
    differs from the default (identity when default_identity, else 0)."""

    ring: CoefficientRing
    columns: Dict[int, Dict[int, object]]
    default_identity: bool = False

    def image_of(self, g: int) -> Dict[int, object]:
        if g in self.columns:
            return dict(self.columns[g])
        if self.default_identity:
            return {g: self.ring.one}
        return {}

    def apply(self, chain: Dict[int, object]) -> Dict[int, object]:
        out: Dict[int, object] = {}
        for g, c in chain.items():
            _axpy(out, c, self.image_of(g), self.ring)
        return out


@dataclass
class ReductionStep:
    """Snapshot of one elementary reduction, taken before removal."""

    sigma: int
    tau: int
    dim_sigma: int
    pivot: object
    tau_faces: Dict[int, object]
    sigma_cofaces: Dict[int, object]
    ring: CoefficientRing


def reduce_pair(S: SComplex, sigma: int, tau: int,
                grades: Optional[Dict[int, Grade]] = None) -> ReductionStep:
    """Remove the pair (sigma, tau) from S in place and rewrite the
    surviving coefficients. tau must be a primary coface of sigma and
    their incidence must be a unit. Grades, when given, lose the two
    removed entries and keep every survivor's grade unchanged."""
    if tau not in S.primary_cofaces(sigma):
        raise ReductionError(
            f"reduction: {tau} is not a primary coface of {sigma}")
    ring = S.ring
    pivot = S.incidence(tau, sigma)
    if not ring.is_unit(pivot):
        raise ReductionError(
            f"reduction: incidence {ring.format(pivot)} of pair "
            f"({sigma}, {tau}) is not a unit in {ring.name}")
    tau_faces = {xi: b for xi, b in S.boundary(tau) if xi != sigma}
    sigma_cofaces = {eta: a for eta, a in S.coboundary(sigma) if eta != tau}
    step = ReductionStep(sigma, tau, S.dim(sigma), pivot,
                         tau_faces, sigma_cofaces, ring)
    S.remove_cell(sigma)
    S.remove_cell(tau)
    if grades is not None:
        grades.pop(sigma, None)
        grades.pop(tau, None)
    for eta, a in sigma_cofaces.items():
        correction = ring.div(a, pivot)
        for xi, b in tau_faces.items():
            value = ring.sub(S.incidence(eta, xi), ring.mul(correction, b))
            S.set_incidence(eta, xi, value)
    return step


def projection_map(step: ReductionStep) -> ChainMap:
    """Chain map from the pre-step complex onto the reduced one: kills
    tau, rewrites sigma over the other faces of tau, fixes the rest."""
    ring = step.ring
    col = {xi: ring.neg(ring.div(b, step.pivot))
           for xi, b in step.tau_faces.items()}
    return ChainMap(ring, {step.sigma: col, step.tau: {}},
                    default_identity=True)


def inclusion_map(step: ReductionStep) -> ChainMap:
    """Chain map from the reduced complex back: each surviving coface of
    sigma picks up a tau correction, the rest is fixed."""
    ring = step.ring
    cols = {
        eta: {eta: ring.one, step.tau: ring.neg(ring.div(a, step.pivot))}
        for eta, a in step.sigma_cofaces.items()
    }
    return ChainMap(ring, cols, default_identity=True)


def homotopy_map(step: ReductionStep) -> ChainMap:
    """Degree +1 map with inclusion . projection = id - (dD + Dd):
    sends sigma to tau / pivot and everything else to zero."""
    ring = step.ring
    col = {step.tau: ring.div(ring.one, step.pivot)}
    return ChainMap(ring, {step.sigma: col}, default_identity=False)


@dataclass
class ComposedMaps:
    """Composites over a whole reduction run. projection and homotopy are
    indexed by original generators, inclusion by surviving ones; the
    homotopy raises degree by one and satisfies
    id - inclusion . projection = boundary . homotopy + homotopy . boundary
    on the original complex."""

    ring: CoefficientRing
    projection: Dict[int, Dict[int, object]]
    inclusion: Dict[int, Dict[int, object]]
    homotopy: Dict[int, Dict[int, object]]


def _compose_step(maps: ComposedMaps, step: ReductionStep) -> None:
    ring = maps.ring
    proj, incl, homo = maps.projection, maps.inclusion, maps.homotopy
    i_tau = incl.pop(step.tau)
    # homotopy first: it needs the projection columns before this step
    for g, col in proj.items():
        c = col.get(step.sigma)
        if c is not None:
            target = homo.setdefault(g, {})
            _axpy(target, ring.div(c, step.pivot), i_tau, ring)
            if not target:
                del homo[g]
    for col in proj.values():
        col.pop(step.tau, None)
        c = col.pop(step.sigma, None)
        if c is not None:
            for xi, b in step.tau_faces.items():
                value = ring.sub(col.get(xi, ring.zero),
                                 ring.div(ring.mul(c, b), step.pivot))
                if value == ring.zero:
                    col.pop(xi, None)
                else:
                    col[xi] = value
    for eta, a in step.sigma_cofaces.items():
        _axpy(incl[eta], ring.neg(ring.div(a, step.pivot)), i_tau, ring)
    del incl[step.sigma]


@dataclass
class ReductionResult:
    complex: SComplex
    grades: Optional[Dict[int, Grade]]
    steps: List[ReductionStep]
    maps: Optional[ComposedMaps]


def reduce_all(S: SComplex, matching: MatchPartition,
               grades: Optional[Dict[int, Grade]] = None,
               order: str = "generation", with_maps: bool = False,
               inplace: bool = False) -> ReductionResult:
    """Reduce every matched pair of the matching.

    order selects the pair enumeration: "generation" keeps the order the
    matching emitted, "dim-desc" sorts by dimension of the lower cell,
    highest first (stable within a dimension). The target complex and the
    final critical counts are the same either way. By default the input
    complex is copied (as a bare cell complex); inplace=True mutates S.
    """
    if order not in ("generation", "dim-desc"):
        raise ReductionError(f"reduction: unknown order {order!r}")
    pairs: List[Tuple[int, int]] = matching.pairs()
    if order == "dim-desc":
        pairs.sort(key=lambda p: -S.dim(p[0]))
    if not inplace:
        S = S.plain_copy() if isinstance(S, SimplicialComplex) else S.copy()
        grades = dict(grades) if grades is not None else None
    maps = None
    if with_maps:
        maps = ComposedMaps(
            S.ring,
            projection={c: {c: S.ring.one} for c in S.cells()},
            inclusion={c: {c: S.ring.one} for c in S.cells()},
            homotopy={},
        )
    steps: List[ReductionStep] = []
    for sigma, tau in pairs:
        step = reduce_pair(S, sigma, tau, grades)
        if maps is not None:
            _compose_step(maps, step)
        steps.append(step)
    return ReductionResult(S, grades, steps, maps)
