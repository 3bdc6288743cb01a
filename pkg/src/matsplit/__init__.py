"""Binary matroids, element splitting, and connectivity verification.

The package machine-checks how single-element coextensions built over a
subset T (and the matching n-point splitting of graphs) interact with
circuits, cocircuits, and Tutte connectivity.  Start with
`catalog.catalog_matroid`, `coextension.element_split`, and
`theorems.verify_equivalence`.
"""

from ._kernels import BACKEND as _BACKEND
from .catalog import (all_graphs, all_matroids, catalog_graph,
                      catalog_matroid, complete_bipartite, complete_graph,
                      fano, hypercube_graph, petersen_graph, wheel_graph)
from .coextension import (CircuitClassification, ClassViolation,
                          CocircuitClassification, ElementSplit,
                          classify_circuits, classify_cocircuits,
                          coextension_roundtrip, element_split,
                          find_rank_law_counterexample, rank_via_formula,
                          split_matrix)
from .connectivity import (Separation, check_size_bound, connectivity,
                           find_k_separation, is_n_connected)
from .errors import MatsplitError
from .formats import (parse_any, parse_graph, parse_matroid, serialize_graph,
                      serialize_matroid)
from .gf2 import Gf2Matrix, Gf2Vector
from .graphs import (SimpleGraph, SlaterReport, SplitResult, cycle_matroid,
                     graph_girth, point_split, reduce_to_cubic, slater_check,
                     to_dot, vertex_connectivity)
from .matroid import BinaryMatroid, SubsetWitness
from .theorems import (VerificationReport, check_circuit_condition,
                       check_cocircuit_condition, check_weak_condition,
                       verify_equivalence)

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Name of the active kernel implementation: compiled or pure."""
    return _BACKEND


__all__ = [
    "BinaryMatroid", "CircuitClassification", "ClassViolation",
    "CocircuitClassification", "ElementSplit", "Gf2Matrix", "Gf2Vector",
    "MatsplitError", "Separation", "SimpleGraph", "SlaterReport",
    "SplitResult", "SubsetWitness", "VerificationReport",
    "all_graphs", "all_matroids", "catalog_graph", "catalog_matroid",
    "check_circuit_condition", "check_cocircuit_condition",
    "check_size_bound", "check_weak_condition", "classify_circuits",
    "classify_cocircuits", "coextension_roundtrip", "complete_bipartite",
    "complete_graph", "connectivity", "cycle_matroid", "element_split",
    "fano", "find_k_separation", "find_rank_law_counterexample",
    "graph_girth", "hypercube_graph", "is_n_connected", "kernel_backend",
    "parse_any", "parse_graph", "parse_matroid", "petersen_graph",
    "point_split", "rank_via_formula", "reduce_to_cubic", "serialize_graph",
    "serialize_matroid", "slater_check", "split_matrix", "to_dot",
    "verify_equivalence", "vertex_connectivity", "wheel_graph",
]
