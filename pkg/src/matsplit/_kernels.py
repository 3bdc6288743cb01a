"""Kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
reference implementation.  Both expose the same functions with the same
deterministic output contract.
"""

try:
    from matsplit import _kernels_cy as _impl
except ImportError:
    from matsplit import _kernels_py as _impl

BACKEND = _impl.BACKEND_NAME

gf2_rref = _impl.gf2_rref
gf2_rank = _impl.gf2_rank
nullspace_masks = _impl.nullspace_masks
minimal_supports = _impl.minimal_supports
circuit_masks = _impl.circuit_masks
subset_rank_table = _impl.subset_rank_table
scan_k_separation = _impl.scan_k_separation
split_rank_law = _impl.split_rank_law
first_subset = _impl.first_subset
filter_within = _impl.filter_within
find_xor_pair = _impl.find_xor_pair
first_subset_many = _impl.first_subset_many
find_xor_pair_many = _impl.find_xor_pair_many
