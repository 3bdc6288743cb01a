"""Dense GF(2) linear algebra on labeled bitmask matrices.

Vectors and matrix rows are stored as Python ints: bit j is the entry
in position/column j.  Matrices carry distinct string labels for their
columns; every higher layer talks about columns only through labels.
Width is capped at 64 so rows always fit one machine word in the
compiled backend.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import _kernels as kern
from .errors import (CorankTooLarge, DuplicateLabel, InvalidArguments,
                     UnknownLabel, WidthTooLarge)

MAX_WIDTH = 64

# Null-space enumeration materializes 2**corank vectors; past this cap
# that is no longer a desk-scale object.
CORANK_CAP = 20


@dataclass(frozen=True)
class Gf2Vector:
    """Fixed-width vector over GF(2); bit j of `bits` is coordinate j."""

    bits: int
    width: int

    def __post_init__(self):
        if not 0 <= self.width <= MAX_WIDTH:
            raise WidthTooLarge(f"width {self.width} outside 0..{MAX_WIDTH}")
        if not 0 <= self.bits < (1 << self.width):
            raise ValueError("bits outside vector width")

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.width:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __xor__(self, other: "Gf2Vector") -> "Gf2Vector":
        if other.width != self.width:
            raise ValueError("width mismatch")
        return Gf2Vector(self.bits ^ other.bits, self.width)

    def support(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.width) if (self.bits >> j) & 1)

    def weight(self) -> int:
        return self.bits.bit_count()

    def entries(self) -> tuple[int, ...]:
        return tuple((self.bits >> j) & 1 for j in range(self.width))

    def __str__(self):
        return "".join(str((self.bits >> j) & 1) for j in range(self.width))


@dataclass(frozen=True)
class Gf2Matrix:
    """Row-major GF(2) matrix with labeled columns.

    Zero rows and zero columns are allowed; labels must be distinct
    nonempty strings.  The all-rows-empty case (0 x n) is a valid
    matrix of rank 0.
    """

    rows: tuple[Gf2Vector, ...]
    col_labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))
        if len(self.col_labels) > MAX_WIDTH:
            raise WidthTooLarge(
                f"{len(self.col_labels)} columns exceed the {MAX_WIDTH}-column cap")
        seen = set()
        for lab in self.col_labels:
            if not isinstance(lab, str) or not lab or any(c.isspace() for c in lab):
                raise InvalidArguments(f"bad column label {lab!r}")
            if lab in seen:
                raise DuplicateLabel(f"duplicate column label {lab!r}")
            seen.add(lab)
        for row in self.rows:
            if row.width != len(self.col_labels):
                raise ValueError("row width does not match label count")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, entries: Iterable[Sequence[int]],
                  labels: Iterable[str]) -> "Gf2Matrix":
        """Build from explicit 0/1 entry lists (row major)."""
        labels = tuple(labels)
        width = len(labels)
        rows = []
        for entry_row in entries:
            if len(entry_row) != width:
                raise ValueError("row length does not match label count")
            bits = 0
            for j, e in enumerate(entry_row):
                if e not in (0, 1):
                    raise ValueError(f"entry {e!r} is not 0 or 1")
                bits |= e << j
            rows.append(Gf2Vector(bits, width))
        return cls(tuple(rows), labels)

    @classmethod
    def from_masks(cls, masks: Iterable[int], labels: Iterable[str]) -> "Gf2Matrix":
        labels = tuple(labels)
        width = len(labels)
        return cls(tuple(Gf2Vector(m, width) for m in masks), labels)

    # -- basic accessors ----------------------------------------------

    @property
    def width(self) -> int:
        return len(self.col_labels)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row_masks(self) -> list[int]:
        return [r.bits for r in self.rows]

    def column_index(self, label: str) -> int:
        try:
            return self.col_labels.index(label)
        except ValueError:
            raise UnknownLabel(f"unknown column label {label!r}") from None

    def column_bits(self, label: str) -> int:
        """Column as a mask over row indices (bit i = entry in row i)."""
        j = self.column_index(label)
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r.bits >> j) & 1) << i
        return out

    def mask_of(self, labels: Iterable[str]) -> int:
        mask = 0
        for lab in labels:
            mask |= 1 << self.column_index(lab)
        return mask

    def labels_of(self, mask: int) -> frozenset[str]:
        return frozenset(self.col_labels[j] for j in range(self.width)
                         if (mask >> j) & 1)

    def __str__(self):
        head = " ".join(self.col_labels)
        body = "\n".join(str(r) for r in self.rows)
        return head + "\n" + body if body else head


# -- operations -------------------------------------------------------


def rref(m: Gf2Matrix) -> tuple[Gf2Matrix, tuple[int, ...]]:
    """Reduced row echelon form; zero rows dropped, labels preserved.

    Returns the reduced matrix and the pivot column indices (one per
    surviving row, strictly increasing).  Idempotent, and row-space
    preserving, which makes its output the canonical representative of
    a row-equivalence class.
    """
    red, piv = kern.gf2_rref(m.row_masks(), m.width)
    return Gf2Matrix.from_masks(red, m.col_labels), tuple(piv)


def rank(m: Gf2Matrix) -> int:
    return kern.gf2_rank(m.row_masks(), m.width)


def column_rank_of_subset(m: Gf2Matrix, labels: Iterable[str]) -> int:
    """Rank of the submatrix made of the named columns."""
    mask = m.mask_of(labels)
    return kern.gf2_rank([rv & mask for rv in m.row_masks()], m.width)


def null_space_enumeration(m: Gf2Matrix,
                           corank_cap: int = CORANK_CAP) -> Iterator[Gf2Vector]:
    """Yield every x with M x = 0 in the deterministic kernel order.

    The first vector is always zero; order follows the binary counter
    over free-column coordinates (see kernel docs).  Raises
    CorankTooLarge when 2**corank would exceed the cap.
    """
    corank = m.width - rank(m)
    if corank > corank_cap:
        raise CorankTooLarge(
            f"corank {corank} exceeds cap {corank_cap} "
            f"({m.width} columns, rank {m.width - corank})")
    for bits in kern.nullspace_masks(m.row_masks(), m.width):
        yield Gf2Vector(bits, m.width)
