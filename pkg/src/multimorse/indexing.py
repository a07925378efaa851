"""Vertex orderings compatible with the componentwise order.

An indexing is a bijection from vertices to 0..n-1 that increases along
the strict-but-unequal comparisons of the measuring function: whenever
f(u) <= f(w) componentwise with f(u) != f(w), vertex u gets the smaller
index. Two constructions are provided: a lexicographic sort (the default,
n log n) and Kahn's algorithm on the comparability digraph (linear in
vertices plus comparable pairs, and reusable for any DAG).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import List

from .filtration import MeasuringFunction, le_neq


class CycleError(ValueError):
    """Raised when a supposed DAG contains a directed cycle."""


@dataclass
class ComparabilityDag:
    """Successor lists of a digraph on nodes 0..n-1."""

    succ: List[List[int]]

    @property
    def n(self) -> int:
        return len(self.succ)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.succ)


def build_dag(f: MeasuringFunction) -> ComparabilityDag:
    """Comparability digraph of f: an edge u -> w whenever f(u) <= f(w)
    componentwise and f(u) != f(w). Quadratic in the vertex count."""
    n = len(f)
    succ: List[List[int]] = [[] for _ in range(n)]
    for u in range(n):
        gu = f[u]
        for w in range(n):
            if u != w and le_neq(gu, f[w]):
                succ[u].append(w)
    return ComparabilityDag(succ)


def topo_sort_kahn(dag: ComparabilityDag) -> List[int]:
    """Indices from a topological sort of dag, smallest node id first
    among the ready set. Returns index[node]; raises CycleError when the
    graph has a cycle."""
    n = dag.n
    indeg = [0] * n
    for u in range(n):
        for w in dag.succ[u]:
            indeg[w] += 1
    ready = [u for u in range(n) if indeg[u] == 0]
    heapq.heapify(ready)
    index = [-1] * n
    placed = 0
    while ready:
        u = heapq.heappop(ready)
        index[u] = placed
        placed += 1
        for w in dag.succ[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(ready, w)
    if placed != n:
        raise CycleError(f"indexing: digraph has a cycle ({n - placed} nodes unplaced)")
    return index


def lex_indexing(f: MeasuringFunction) -> List[int]:
    """Indices from sorting vertices by grade lexicographically, vertex
    id breaking ties."""
    order = sorted(range(len(f)), key=lambda v: (f[v], v))
    index = [0] * len(f)
    for i, v in enumerate(order):
        index[v] = i
    return index


def validate_indexing(f: MeasuringFunction, index: List[int]) -> bool:
    """Check bijectivity onto 0..n-1 and compatibility with the order:
    f(u) <= f(w), f(u) != f(w) forces index[u] < index[w]. Quadratic."""
    n = len(f)
    if len(index) != n or sorted(index) != list(range(n)):
        return False
    for u in range(n):
        gu = f[u]
        for w in range(n):
            if u != w and le_neq(gu, f[w]) and index[u] >= index[w]:
                return False
    return True
