"""Acyclic-matching reduction of multifiltered simplicial complexes.

Build a simplicial complex, grade its vertices with a vector-valued
measuring function, compute a filtration-compatible acyclic matching
from lower links, reduce the complex to its critical cells, and certify
with an independent homology oracle that every multidimensional
persistent homology rank survived.
"""

from .complexes import (Chain, ComplexError, SComplex, SimplicialComplex,
                        build_simplicial, complex_from_simplices,
                        full_subcomplex, vertex_neighbors)
from .filtration import (Grade, GradeError, MeasuringFunction, cell_grade,
                         check_face_monotone, critical_grades, entry_grades,
                         join, le_neq, leq, lt, sublevel_cells,
                         sublevel_membership)
from .indexing import (ComparabilityDag, CycleError, build_dag, lex_indexing,
                       topo_sort_kahn, validate_indexing)
from .matching import (LowerLink, MatchPartition, MatchingError, is_acyclic,
                       lower_link, max_index, modified_hasse, partition,
                       weak_lower_link)
from .meshio import (Mesh, MeshFormatError, mesh_complex, preset_abs_xy,
                     read_mesh, read_reduced, read_values, write_reduced)
from .oracle import (EquivalenceReport, HomologyRanks, OracleError, homology,
                     persistent_rank, rank_table, verify_equivalence)
from .pipeline import (PipelineError, RunConfig, match_table, run,
                       run_verification, sample_star_submeshes, stats_table)
from .reduction import (ChainMap, ComposedMaps, ReductionError,
                        ReductionResult, ReductionStep, homotopy_map,
                        inclusion_map, projection_map, reduce_all,
                        reduce_pair)
from .rings import (GF2, INTEGERS, RATIONALS, CoefficientRing, Integers,
                    PrimeField, Rationals, RingError, get_ring)

__version__ = "0.1.0"
