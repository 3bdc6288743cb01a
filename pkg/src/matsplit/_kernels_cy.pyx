# cython: language_level=3, boundscheck=False, wraparound=False
# cython: initializedcheck=False, cdivision=True
"""Compiled GF(2) bitmask kernels.

Same functions and output contract as _kernels_py; the test suite runs
both backends on identical input and requires identical results.  Masks
live in uint64, so at most 64 columns, and the fixed-array paths
(subset_rank_table, split_rank_law) also need at most 64 rows; the
callers in this package stay far below both limits.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc, qsort

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int ms_popcount(unsigned long long x)
    { return __builtin_popcountll(x); }
    #else
    static inline int ms_popcount(unsigned long long x)
    { int c = 0; while (x) { x &= x - 1; ++c; } return c; }
    #endif
    """
    int ms_popcount(unsigned long long x) nogil

BACKEND_NAME = "compiled"


cdef uint64_t* _to_arr(object masks, Py_ssize_t n) except NULL:
    cdef Py_ssize_t alloc_n = n if n > 0 else 1
    cdef uint64_t* arr = <uint64_t*>malloc(alloc_n * sizeof(uint64_t))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    try:
        for i in range(n):
            arr[i] = <uint64_t>masks[i]
    except BaseException:
        free(arr)
        raise
    return arr


cdef int _rref_c(uint64_t* work, int nrows, int width, int* pivots) nogil:
    cdef int top = 0, col, i, sel
    cdef uint64_t bit, pr
    for col in range(width):
        bit = (<uint64_t>1) << col
        sel = -1
        for i in range(top, nrows):
            if work[i] & bit:
                sel = i
                break
        if sel < 0:
            continue
        pr = work[sel]
        work[sel] = work[top]
        work[top] = pr
        for i in range(nrows):
            if i != top and (work[i] & bit):
                work[i] ^= pr
        pivots[top] = col
        top += 1
        if top == nrows:
            break
    return top


def gf2_rref(rows, width):
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return [], []
    cdef uint64_t* work = _to_arr(rows, n)
    cdef int* pivots = <int*>malloc(n * sizeof(int))
    if pivots == NULL:
        free(work)
        raise MemoryError()
    cdef int w = width
    cdef int top
    with nogil:
        top = _rref_c(work, <int>n, w, pivots)
    cdef Py_ssize_t i
    out = [work[i] for i in range(top)]
    piv = [pivots[i] for i in range(top)]
    free(work)
    free(pivots)
    return out, piv


def gf2_rank(rows, width):
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 0
    cdef uint64_t* work = _to_arr(rows, n)
    cdef int* pivots = <int*>malloc(n * sizeof(int))
    if pivots == NULL:
        free(work)
        raise MemoryError()
    cdef int w = width
    cdef int top
    with nogil:
        top = _rref_c(work, <int>n, w, pivots)
    free(work)
    free(pivots)
    return top


cdef Py_ssize_t _nullspace_c(uint64_t* red, int top, int* pivots, int width,
                             uint64_t* out) nogil:
    cdef uint64_t pivmask = 0
    cdef int i, f
    cdef uint64_t basis, fbit
    cdef Py_ssize_t cnt = 1, j
    for i in range(top):
        pivmask |= (<uint64_t>1) << pivots[i]
    out[0] = 0
    for f in range(width):
        fbit = (<uint64_t>1) << f
        if pivmask & fbit:
            continue
        basis = fbit
        for i in range(top):
            if red[i] & fbit:
                basis |= (<uint64_t>1) << pivots[i]
        for j in range(cnt):
            out[cnt + j] = out[j] ^ basis
        cnt <<= 1
    return cnt


def nullspace_masks(rows, width):
    cdef Py_ssize_t n = len(rows)
    cdef int w = width
    cdef uint64_t* work = NULL
    cdef int* pivots = NULL
    cdef int top = 0
    if n:
        work = _to_arr(rows, n)
        pivots = <int*>malloc(n * sizeof(int))
        if pivots == NULL:
            free(work)
            raise MemoryError()
        with nogil:
            top = _rref_c(work, <int>n, w, pivots)
    cdef Py_ssize_t total = (<Py_ssize_t>1) << (w - top)
    cdef uint64_t* out = <uint64_t*>malloc(total * sizeof(uint64_t))
    if out == NULL:
        free(work)
        free(pivots)
        raise MemoryError()
    cdef Py_ssize_t cnt
    with nogil:
        cnt = _nullspace_c(work, top, pivots, w, out)
    cdef Py_ssize_t i
    res = [out[i] for i in range(cnt)]
    free(work)
    free(pivots)
    free(out)
    return res


cdef int _cmp_mask(const void* a, const void* b) noexcept nogil:
    cdef uint64_t av = (<const uint64_t*>a)[0]
    cdef uint64_t bv = (<const uint64_t*>b)[0]
    cdef int pa = ms_popcount(av)
    cdef int pb = ms_popcount(bv)
    if pa != pb:
        return -1 if pa < pb else 1
    if av == bv:
        return 0
    return -1 if av < bv else 1


cdef Py_ssize_t _minimal_c(uint64_t* arr, Py_ssize_t n, uint64_t* kept) nogil:
    qsort(arr, <size_t>n, sizeof(uint64_t), _cmp_mask)
    cdef Py_ssize_t kc = 0, i, j
    cdef uint64_t cand
    cdef bint drop
    for i in range(n):
        cand = arr[i]
        drop = 0
        for j in range(kc):
            if kept[j] & cand == kept[j]:
                drop = 1
                break
        if not drop:
            kept[kc] = cand
            kc += 1
    return kc


def minimal_supports(masks):
    cdef Py_ssize_t n = len(masks)
    if n == 0:
        return []
    cdef uint64_t* arr = _to_arr(masks, n)
    cdef Py_ssize_t m = 0, i
    for i in range(n):
        if arr[i]:
            arr[m] = arr[i]
            m += 1
    if m == 0:
        free(arr)
        return []
    cdef uint64_t* kept = <uint64_t*>malloc(m * sizeof(uint64_t))
    if kept == NULL:
        free(arr)
        raise MemoryError()
    cdef Py_ssize_t kc
    with nogil:
        kc = _minimal_c(arr, m, kept)
    res = [kept[i] for i in range(kc)]
    free(arr)
    free(kept)
    return res


def circuit_masks(rows, width):
    cdef Py_ssize_t n = len(rows)
    cdef int w = width
    cdef uint64_t* work = NULL
    cdef int* pivots = NULL
    cdef int top = 0
    if n:
        work = _to_arr(rows, n)
        pivots = <int*>malloc(n * sizeof(int))
        if pivots == NULL:
            free(work)
            raise MemoryError()
        with nogil:
            top = _rref_c(work, <int>n, w, pivots)
    cdef Py_ssize_t total = (<Py_ssize_t>1) << (w - top)
    cdef uint64_t* out = <uint64_t*>malloc(total * sizeof(uint64_t))
    if out == NULL:
        free(work)
        free(pivots)
        raise MemoryError()
    cdef Py_ssize_t cnt, kc = 0
    cdef uint64_t* kept = NULL
    with nogil:
        cnt = _nullspace_c(work, top, pivots, w, out)
    free(work)
    free(pivots)
    if cnt > 1:
        # out[0] is the zero vector and the only zero entry
        kept = <uint64_t*>malloc((cnt - 1) * sizeof(uint64_t))
        if kept == NULL:
            free(out)
            raise MemoryError()
        with nogil:
            kc = _minimal_c(out + 1, cnt - 1, kept)
    cdef Py_ssize_t i
    res = [kept[i] for i in range(kc)]
    free(out)
    if kept != NULL:
        free(kept)
    return res


cdef void _grow_c(uint64_t* cols, int width, unsigned char* table,
                  uint64_t* basis, int rk, uint64_t mask, int start) nogil:
    cdef int j, pos, k
    cdef uint64_t v, child
    for j in range(start, width):
        v = cols[j]
        for pos in range(rk):
            if (v ^ basis[pos]) < v:
                v ^= basis[pos]
        child = mask | ((<uint64_t>1) << j)
        if v:
            pos = 0
            while pos < rk and basis[pos] > v:
                pos += 1
            for k in range(rk, pos, -1):
                basis[k] = basis[k - 1]
            basis[pos] = v
            table[child] = <unsigned char>(rk + 1)
            _grow_c(cols, width, table, basis, rk + 1, child, j + 1)
            for k in range(pos, rk):
                basis[k] = basis[k + 1]
        else:
            table[child] = <unsigned char>rk
            _grow_c(cols, width, table, basis, rk, child, j + 1)


def subset_rank_table(rows, width):
    cdef Py_ssize_t n = len(rows)
    if n > 64:
        raise ValueError("subset_rank_table supports at most 64 rows")
    cdef int w = width
    table = bytearray((<Py_ssize_t>1) << w)
    cdef unsigned char[::1] tv = table
    cdef uint64_t cols[64]
    cdef uint64_t basis[65]
    cdef int j
    for j in range(w):
        cols[j] = 0
    cdef Py_ssize_t i
    cdef uint64_t rv
    for i in range(n):
        rv = <uint64_t>rows[i]
        j = 0
        while rv:
            if rv & 1:
                cols[j] |= (<uint64_t>1) << i
            rv >>= 1
            j += 1
    if w > 0:
        with nogil:
            _grow_c(&cols[0], w, &tv[0], &basis[0], 0, 0, 0)
    return table


def scan_k_separation(table, width, full_rank, k):
    cdef int w = width
    cdef int kk = k
    cdef int fr = full_rank
    if kk < 1 or w < 2 * kk:
        return -1
    cdef const unsigned char[::1] tv = table
    cdef uint64_t full = ((<uint64_t>1) << w) - 1
    cdef int half = w >> 1
    cdef int limit = kk - 1 + fr
    cdef bint even = (w % 2 == 0)
    cdef uint64_t m, comp
    cdef int pc
    cdef int64_t found = -1
    with nogil:
        for m in range(1, full):
            pc = ms_popcount(m)
            if pc < kk or pc > half:
                continue
            comp = full ^ m
            if even and pc == half and m > comp:
                continue
            if tv[<Py_ssize_t>m] + tv[<Py_ssize_t>comp] <= limit:
                found = <int64_t>m
                break
    if found < 0:
        return -1
    return found


def split_rank_law(rows, width):
    cdef Py_ssize_t n = len(rows)
    cdef int w = width
    if n > 64:
        raise ValueError("split_rank_law supports at most 64 rows")
    if w >= 64:
        raise ValueError("split_rank_law needs width below 64")
    cdef uint64_t* work = NULL
    cdef int* pivots = NULL
    cdef int top = 0
    if n:
        work = _to_arr(rows, n)
        pivots = <int*>malloc(n * sizeof(int))
        if pivots == NULL:
            free(work)
            raise MemoryError()
        with nogil:
            top = _rref_c(work, <int>n, w, pivots)
    cdef uint64_t pb[64]
    cdef uint64_t rr[64]
    cdef int i
    for i in range(top):
        pb[i] = (<uint64_t>1) << pivots[i]
        rr[i] = work[i]
    free(work)
    free(pivots)
    cdef uint64_t abit = (<uint64_t>1) << w
    cdef uint64_t total = (<uint64_t>1) << w
    cdef uint64_t t, row
    cdef int64_t bad = -1
    with nogil:
        for t in range(1, total):
            row = t | abit
            for i in range(top):
                if row & pb[i]:
                    row ^= rr[i]
            if row == 0:
                bad = <int64_t>t
                break
    if bad < 0:
        return -1
    return bad


def first_subset(mask, candidates):
    cdef uint64_t m = <uint64_t>mask
    cdef Py_ssize_t n = len(candidates)
    cdef Py_ssize_t i
    cdef uint64_t c
    for i in range(n):
        c = <uint64_t>candidates[i]
        if c & ~m == 0:
            return candidates[i]
    return 0


def filter_within(masks, allowed):
    cdef uint64_t a = <uint64_t>allowed
    cdef Py_ssize_t n = len(masks)
    cdef Py_ssize_t i
    cdef uint64_t m
    out = []
    for i in range(n):
        m = <uint64_t>masks[i]
        if m & ~a == 0:
            out.append(masks[i])
    return out


cdef uint64_t _xor_pair_c(uint64_t mask, uint64_t* parts,
                          Py_ssize_t n) nogil:
    cdef Py_ssize_t i, lo, hi, mid
    cdef uint64_t c, rem
    for i in range(n):
        c = parts[i]
        if c & ~mask:
            continue
        rem = mask ^ c
        if rem <= c:
            continue
        lo = 0
        hi = n
        while lo < hi:
            mid = (lo + hi) >> 1
            if parts[mid] < rem:
                lo = mid + 1
            else:
                hi = mid
        if lo < n and parts[lo] == rem:
            return c
    return 0


def find_xor_pair(mask, parts_sorted):
    cdef Py_ssize_t n = len(parts_sorted)
    if n == 0:
        return 0
    cdef uint64_t m = <uint64_t>mask
    cdef uint64_t* arr = _to_arr(parts_sorted, n)
    cdef uint64_t res
    with nogil:
        res = _xor_pair_c(m, arr, n)
    free(arr)
    return res


def first_subset_many(targets, candidates):
    cdef Py_ssize_t nc = len(candidates)
    cdef Py_ssize_t nt = len(targets)
    cdef uint64_t* arr = NULL
    if nc:
        arr = _to_arr(candidates, nc)
    out = []
    cdef Py_ssize_t i, j
    cdef uint64_t t, hit
    for i in range(nt):
        t = <uint64_t>targets[i]
        hit = 0
        for j in range(nc):
            if arr[j] & ~t == 0:
                hit = arr[j]
                break
        out.append(hit)
    if arr != NULL:
        free(arr)
    return out


def find_xor_pair_many(targets, parts_sorted):
    cdef Py_ssize_t n = len(parts_sorted)
    cdef Py_ssize_t nt = len(targets)
    cdef uint64_t* arr = NULL
    if n:
        arr = _to_arr(parts_sorted, n)
    out = []
    cdef Py_ssize_t i
    cdef uint64_t t
    for i in range(nt):
        t = <uint64_t>targets[i]
        out.append(_xor_pair_c(t, arr, n) if n else 0)
    if arr != NULL:
        free(arr)
    return out
