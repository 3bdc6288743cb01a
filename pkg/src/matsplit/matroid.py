"""Binary matroids: rank oracle, circuits, cocircuits, duals, minors.

A matroid is stored through one canonical representation: the reduced
row echelon form of whatever matrix it was built from, zero rows
dropped, columns labeled by ground-set elements.  Representations are
not unique, so matroid equality is decided by circuit lists (under an
explicit label map), never by comparing matrices.

Circuits are the minimal nonzero supports of the null space of the
representation; cocircuits are the circuits of the dual, obtained by
the standard [I | D] -> [D^T | I] exchange read off the rref pivots.

Caches (circuits, dual, subset-rank table) are filled once on first
request; under CPython's execution model a duplicated fill computes the
same value, so concurrent readers are safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from . import _kernels as kern
from .errors import CorankTooLarge, UnknownLabel
from .gf2 import CORANK_CAP, Gf2Matrix, rref

# What a witness set certifies about itself.  "blocking" marks a set
# whose complement carries no circuit with odd T-overlap (the failure
# witness of the circuit condition).
WITNESS_KINDS = ("circuit", "cocircuit", "dependent", "separating", "blocking")


@dataclass(frozen=True)
class SubsetWitness:
    """A subset of a ground set together with what it demonstrates."""

    elements: frozenset[str]
    kind: str

    def __post_init__(self):
        if self.kind not in WITNESS_KINDS:
            raise ValueError(f"unknown witness kind {self.kind!r}")
        object.__setattr__(self, "elements", frozenset(self.elements))


def _drop_bit(mask: int, j: int) -> int:
    """Remove bit j and shift everything above it down one place."""
    return (mask & ((1 << j) - 1)) | ((mask >> (j + 1)) << j)


class BinaryMatroid:
    """Matroid of the columns of a GF(2) matrix.

    Construct via `from_matrix` (any representation; it is canonicalized
    on the way in) or the `from_rows` convenience.  `name` is a display
    string only and never takes part in equality.
    """

    __slots__ = ("matrix", "name", "_pivots", "_circuit_mask_cache",
                 "_circuit_cache", "_dual", "_rank_table")

    def __init__(self, matrix: Gf2Matrix, name: str = "M"):
        reduced, pivots = rref(matrix)
        self.matrix = reduced
        self.name = name
        self._pivots = pivots
        self._circuit_mask_cache: Optional[list[int]] = None
        self._circuit_cache: Optional[list[frozenset[str]]] = None
        self._dual: Optional["BinaryMatroid"] = None
        self._rank_table: Optional[bytearray] = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_matrix(cls, matrix: Gf2Matrix, name: str = "M") -> "BinaryMatroid":
        return cls(matrix, name)

    @classmethod
    def from_rows(cls, entries, labels, name: str = "M") -> "BinaryMatroid":
        return cls(Gf2Matrix.from_rows(entries, labels), name)

    # -- basics -----------------------------------------------------------

    @property
    def ground(self) -> tuple[str, ...]:
        return self.matrix.col_labels

    @property
    def rank(self) -> int:
        return len(self.matrix.rows)

    @property
    def size(self) -> int:
        return self.matrix.width

    def __repr__(self):
        return f"BinaryMatroid({self.name!r}, rank={self.rank}, size={self.size})"

    def element_mask(self, labels: Iterable[str]) -> int:
        return self.matrix.mask_of(labels)

    def labels_of(self, mask: int) -> frozenset[str]:
        return self.matrix.labels_of(mask)

    def rank_of(self, labels: Iterable[str]) -> int:
        """Rank of a subset of the ground set (GF(2) column rank)."""
        mask = self.matrix.mask_of(labels)
        return kern.gf2_rank([rv & mask for rv in self.matrix.row_masks()],
                             self.size)

    def rank_of_mask(self, mask: int) -> int:
        return kern.gf2_rank([rv & mask for rv in self.matrix.row_masks()],
                             self.size)

    # -- circuits ---------------------------------------------------------

    def _sort_key(self, mask: int):
        return (mask.bit_count(), tuple(sorted(self.labels_of(mask))))

    def circuit_bitmasks(self) -> list[int]:
        """Circuit supports as column masks, sorted by (size, labels)."""
        if self._circuit_mask_cache is None:
            corank = self.size - self.rank
            if corank > CORANK_CAP:
                raise CorankTooLarge(
                    f"{self.name}: corank {corank} exceeds cap {CORANK_CAP}")
            masks = kern.circuit_masks(self.matrix.row_masks(), self.size)
            masks.sort(key=self._sort_key)
            self._circuit_mask_cache = masks
        return list(self._circuit_mask_cache)

    def circuits(self) -> list[frozenset[str]]:
        """Minimal dependent sets, sorted by size then sorted-label order."""
        if self._circuit_cache is None:
            self._circuit_cache = [self.labels_of(m)
                                   for m in self.circuit_bitmasks()]
        return list(self._circuit_cache)

    def cocircuits(self) -> list[frozenset[str]]:
        """Circuits of the dual, same ordering contract as circuits()."""
        return self.dual().circuits()

    def cocircuit_bitmasks(self) -> list[int]:
        return self.dual().circuit_bitmasks()

    def girth(self):
        """Size of a smallest circuit; math.inf when independent."""
        cm = self.circuit_bitmasks()
        return cm[0].bit_count() if cm else math.inf

    def cogirth(self):
        cm = self.cocircuit_bitmasks()
        return cm[0].bit_count() if cm else math.inf

    # -- loops / coloops ----------------------------------------------------

    def is_loop(self, e: str) -> bool:
        return self.matrix.column_bits(e) == 0

    def is_coloop(self, e: str) -> bool:
        """True when e lies in every basis, i.e. deleting it drops the rank."""
        rest = [lab for lab in self.ground if lab != e]
        if len(rest) == len(self.ground):
            raise UnknownLabel(f"unknown element {e!r}")
        return self.rank_of(rest) == self.rank - 1

    def loops(self) -> frozenset[str]:
        return frozenset(e for e in self.ground if self.is_loop(e))

    def coloops(self) -> frozenset[str]:
        return frozenset(e for e in self.ground if self.is_coloop(e))

    # -- dual ---------------------------------------------------------------

    def dual(self) -> "BinaryMatroid":
        """Dual matroid on the same ground set.

        From the rref with pivot columns P and free columns F, the dual
        is represented by one row per free column f: a 1 in column f and
        the column-f entries copied into the pivot positions.  For a
        standard-form [I | D] this is exactly [D^T | I].
        """
        if self._dual is None:
            pivset = set(self._pivots)
            rows = self.matrix.row_masks()
            drows = []
            for f in range(self.size):
                if f in pivset:
                    continue
                fbit = 1 << f
                v = fbit
                for i, p in enumerate(self._pivots):
                    if rows[i] & fbit:
                        v |= 1 << p
                drows.append(v)
            d = BinaryMatroid(Gf2Matrix.from_masks(drows, self.ground),
                              name=f"{self.name}*")
            d._dual = self          # duality is an involution, share both ways
            self._dual = d
        return self._dual

    # -- minors ---------------------------------------------------------------

    def delete(self, e: str) -> "BinaryMatroid":
        """Single-element deletion M \\ e."""
        j = self.matrix.column_index(e)
        rows = [_drop_bit(rv, j) for rv in self.matrix.row_masks()]
        labels = tuple(lab for lab in self.ground if lab != e)
        return BinaryMatroid(Gf2Matrix.from_masks(rows, labels),
                             name=f"{self.name}\\{e}")

    def contract(self, e: str) -> "BinaryMatroid":
        """Single-element contraction M / e (loops contract by deletion)."""
        j = self.matrix.column_index(e)
        bit = 1 << j
        rows = self.matrix.row_masks()
        sel = next((i for i, rv in enumerate(rows) if rv & bit), None)
        labels = tuple(lab for lab in self.ground if lab != e)
        if sel is None:
            new_rows = [_drop_bit(rv, j) for rv in rows]
        else:
            base = rows[sel]
            new_rows = [_drop_bit(rv ^ base if rv & bit else rv, j)
                        for i, rv in enumerate(rows) if i != sel]
        return BinaryMatroid(Gf2Matrix.from_masks(new_rows, labels),
                             name=f"{self.name}/{e}")

    # -- equality --------------------------------------------------------------

    def equals(self, other: "BinaryMatroid",
               relabel: Optional[Mapping[str, str]] = None) -> bool:
        """Same matroid under the given label bijection (default identity).

        Compares ground sets and circuit collections; circuit lists
        determine the matroid, so nothing else is needed.
        """
        if relabel is None:
            ground = set(self.ground)
            circs = set(self.circuits())
        else:
            ground = {relabel.get(e, e) for e in self.ground}
            if len(ground) != len(self.ground):
                raise UnknownLabel("relabel map is not injective on the ground set")
            circs = {frozenset(relabel.get(e, e) for e in c)
                     for c in self.circuits()}
        return ground == set(other.ground) and circs == set(other.circuits())

    # -- internal plumbing -------------------------------------------------------

    def subset_rank_table(self) -> bytearray:
        """Rank of every column mask; cached, 2**size bytes."""
        if self._rank_table is None:
            self._rank_table = kern.subset_rank_table(
                self.matrix.row_masks(), self.size)
        return self._rank_table
