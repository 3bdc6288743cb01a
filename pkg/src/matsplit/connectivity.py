"""Tutte connectivity of binary matroids by exhaustive separation search.

A k-separation is a bipartition (A, B) of the ground set with
min(|A|, |B|) >= k and r(A) + r(B) - r(M) <= k - 1; the connectivity
lambda(M) is the least k admitting one (infinity if none does), and M
is n-connected when no k-separation exists for any k < n.

The search walks all subsets once through a memoized subset-rank table
(2**|E| bytes), so the ground set is capped at 24 elements.  Witnesses
are deterministic: the first qualifying side in ascending bitmask order,
restricted to |A| <= |E|/2 with complement duplicates skipped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from . import _kernels as kern
from .errors import GroundSetTooLarge, InvalidArguments
from .matroid import BinaryMatroid

GROUND_CAP = 24


@dataclass(frozen=True)
class Separation:
    side_a: frozenset[str]
    side_b: frozenset[str]
    order: int


def _check_cap(M: BinaryMatroid):
    if M.size > GROUND_CAP:
        raise GroundSetTooLarge(
            f"{M.name}: {M.size} elements exceed the search cap {GROUND_CAP}")


def find_k_separation(M: BinaryMatroid, k: int) -> Optional[Separation]:
    """First k-separation in bitmask order, or None."""
    if k < 1:
        raise InvalidArguments(f"separation order must be >= 1, got {k}")
    _check_cap(M)
    table = M.subset_rank_table()
    mask = kern.scan_k_separation(table, M.size, M.rank, k)
    if mask < 0:
        return None
    full = (1 << M.size) - 1
    return Separation(side_a=M.labels_of(mask),
                      side_b=M.labels_of(full ^ mask),
                      order=k)


def is_n_connected(M: BinaryMatroid, n: int) -> bool:
    """Tutte connectivity >= n: no k-separation for any 1 <= k < n."""
    if n < 2:
        raise InvalidArguments(f"n must be >= 2, got {n}")
    _check_cap(M)
    table = M.subset_rank_table()
    for k in range(1, n):
        if kern.scan_k_separation(table, M.size, M.rank, k) >= 0:
            return False
    return True


def connectivity(M: BinaryMatroid) -> Union[int, float]:
    """lambda(M): least k with a k-separation; inf when none exists.

    Only k <= |E|/2 can have min(|A|,|B|) >= k, so the scan stops there.
    """
    _check_cap(M)
    table = M.subset_rank_table()
    for k in range(1, M.size // 2 + 1):
        if kern.scan_k_separation(table, M.size, M.rank, k) >= 0:
            return k
    return math.inf


def check_size_bound(M: BinaryMatroid, n: int) -> bool:
    """Girth and cogirth both at least n (vacuously for no circuits)."""
    return M.girth() >= n and M.cogirth() >= n
