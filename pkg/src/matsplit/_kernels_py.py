"""Pure-Python GF(2) bitmask kernels.

A matrix is a list of row masks: bit j of a row holds the entry of
column j.  Everything is plain integer arithmetic, so this module doubles
as the reference implementation for the compiled extension; the two must
return identical values on identical input (the test suite compares
them).  `matsplit._kernels` re-exports whichever backend imports.
"""

from __future__ import annotations

from bisect import bisect_left

BACKEND_NAME = "pure"


def gf2_rref(rows, width):
    """Reduced row echelon form over GF(2).

    Args:
        rows: row masks (ints below 2**width).
        width: number of columns.

    Returns:
        (reduced, pivots) with zero rows dropped.  Row space is
        preserved; pivots lists the pivot column of each surviving row,
        strictly increasing.
    """
    work = list(rows)
    nrows = len(work)
    pivots = []
    top = 0
    for col in range(width):
        bit = 1 << col
        sel = -1
        for i in range(top, nrows):
            if work[i] & bit:
                sel = i
                break
        if sel < 0:
            continue
        work[top], work[sel] = work[sel], work[top]
        pivot_row = work[top]
        for i in range(nrows):
            if i != top and work[i] & bit:
                work[i] ^= pivot_row
        pivots.append(col)
        top += 1
        if top == nrows:
            break
    return work[:top], pivots


def gf2_rank(rows, width):
    return len(gf2_rref(rows, width)[1])


def nullspace_masks(rows, width):
    """All 2**corank solutions x of M x = 0, as column masks.

    Order contract: with free (non-pivot) columns f_0 < f_1 < ... the
    k-th returned mask is the solution whose free coordinates are the
    bits of k, so out[i ^ j] == out[i] ^ out[j] and out[0] == 0.
    """
    red, pivots = gf2_rref(rows, width)
    pivot_set = set(pivots)
    out = [0]
    for f in range(width):
        if f in pivot_set:
            continue
        fbit = 1 << f
        basis = fbit
        for i, p in enumerate(pivots):
            if red[i] & fbit:
                basis |= 1 << p
        out += [x ^ basis for x in out]
    return out


def minimal_supports(masks):
    """Nonzero masks of the input that contain no other nonzero input
    mask, sorted by (popcount, numeric value)."""
    nz = sorted((m for m in masks if m), key=lambda m: (m.bit_count(), m))
    keep = []
    for cand in nz:
        for small in keep:
            if small & cand == small:
                break
        else:
            keep.append(cand)
    return keep


def circuit_masks(rows, width):
    """Minimal nonzero supports of the null space, i.e. the circuits of
    the matroid represented by the columns."""
    return minimal_supports(nullspace_masks(rows, width))


def subset_rank_table(rows, width):
    """table[mask] = GF(2) rank of the column subset selected by mask.

    Fills all 2**width entries by depth-first search that adds one
    column at a time to an incremental echelon basis, so each entry
    costs O(rank) word operations instead of a fresh elimination.
    The basis is kept sorted descending; every vector carries a leading
    bit no other one has, which makes the single reduction pass exact.
    """
    cols = [0] * width
    for i, rv in enumerate(rows):
        j = 0
        while rv:
            if rv & 1:
                cols[j] |= 1 << i
            rv >>= 1
            j += 1
    table = bytearray(1 << width)
    basis = []

    def grow(mask, start):
        rk = len(basis)
        for j in range(start, width):
            v = cols[j]
            for b in basis:
                if (v ^ b) < v:
                    v ^= b
            child = mask | (1 << j)
            if v:
                pos = 0
                while pos < rk and basis[pos] > v:
                    pos += 1
                basis.insert(pos, v)
                table[child] = rk + 1
                grow(child, j + 1)
                basis.pop(pos)
            else:
                table[child] = rk
                grow(child, j + 1)

    grow(0, 0)
    return table


def scan_k_separation(table, width, full_rank, k):
    """First mask A (ascending numeric order) giving a k-separation.

    (A, complement) is a k-separation when min(|A|, |B|) >= k and
    r(A) + r(B) - r <= k - 1.  Only masks with popcount between k and
    floor(width/2) are tried; one side of any separation lands there.
    Returns -1 if none exists.
    """
    if k < 1 or width < 2 * k:
        return -1
    full = (1 << width) - 1
    half = width >> 1
    limit = k - 1 + full_rank
    even = width % 2 == 0
    for m in range(1, full):
        pc = m.bit_count()
        if pc < k or pc > half:
            continue
        if even and pc == half and m > full ^ m:
            continue                     # complement was already scanned
        if table[m] + table[full ^ m] <= limit:
            return m
    return -1


def first_subset(mask, candidates):
    """First candidate that is a subset of mask, 0 when none is.

    Candidates are scanned in list order, so callers control which
    witness comes back; masks are assumed nonzero.
    """
    for c in candidates:
        if c & ~mask == 0:
            return c
    return 0


def filter_within(masks, allowed):
    """The masks that fit inside allowed, keeping input order."""
    return [m for m in masks if m & ~allowed == 0]


def find_xor_pair(mask, parts_sorted):
    """A part c with mask == c | (mask ^ c) split inside parts_sorted.

    parts_sorted must be strictly increasing.  Looks for c in it with
    c a subset of mask and mask ^ c also a member; the two halves are
    automatically disjoint.  Returns the smaller half, 0 when mask has
    no such two-part split.
    """
    n = len(parts_sorted)
    for c in parts_sorted:
        if c & ~mask:
            continue
        rem = mask ^ c
        if rem <= c:
            continue                     # the pair was already tried
        i = bisect_left(parts_sorted, rem)
        if i < n and parts_sorted[i] == rem:
            return c
    return 0


def first_subset_many(targets, candidates):
    """first_subset for every target; lets a compiled backend convert
    the candidate list once instead of per call."""
    return [first_subset(t, candidates) for t in targets]


def find_xor_pair_many(targets, parts_sorted):
    """find_xor_pair for every target, same batching rationale."""
    return [find_xor_pair(t, parts_sorted) for t in targets]


def split_rank_law(rows, width):
    """Check r(split by T) == r + 1 for every nonempty T.

    The split appends the row (T-indicator | new column bit).  Reducing
    that row by the pivots of the rref leaves the new-column bit
    standing, so the rank must always grow by exactly one; any T where
    it does not is returned (first in numeric order), else -1.
    """
    red, pivots = gf2_rref(rows, width)
    abit = 1 << width
    pairs = [(1 << p, rv) for p, rv in zip(pivots, red)]
    for t in range(1, 1 << width):
        row = t | abit
        for pbit, rv in pairs:
            if row & pbit:
                row ^= rv
        if not row:
            return t
    return -1
