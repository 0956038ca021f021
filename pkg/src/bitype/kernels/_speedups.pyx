# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled kernels for the hot enumeration loops.

Mirrors ``_pure`` exactly: same functions, same outputs, same enumeration
order.  Exponents must fit in int64; rank computations guard their
intermediates and raise OverflowError so the caller can retry with the
arbitrary-precision fallback.
"""

from libc.stdlib cimport calloc, free
from libc.stdint cimport int64_t

cdef extern from *:
    ctypedef long long int128 "__int128"


cdef class GenTable:
    """Scan-oriented view of a minimal generating set."""

    cdef int64_t* data
    cdef Py_ssize_t count, width

    def __cinit__(self, flat, Py_ssize_t count, Py_ssize_t width):
        cdef Py_ssize_t total = count * width
        if width > 64:
            raise OverflowError("width exceeds kernel limit")
        self.count = count
        self.width = width
        self.data = <int64_t*>calloc(total if total > 0 else 1, sizeof(int64_t))
        if self.data == NULL:
            raise MemoryError()
        cdef Py_ssize_t idx = 0
        for v in flat:
            self.data[idx] = v
            idx += 1

    def __dealloc__(self):
        if self.data != NULL:
            free(self.data)

    cdef int _fill(self, f, int64_t* buf) except -1:
        cdef Py_ssize_t k
        for k in range(self.width):
            buf[k] = f[k]
        return 0

    cdef bint _contains(self, int64_t* fbuf):
        cdef Py_ssize_t r, k
        cdef int64_t* row
        for r in range(self.count):
            row = self.data + r * self.width
            for k in range(self.width):
                if row[k] > fbuf[k]:
                    break
            else:
                return True
        return False

    def contains(self, f):
        """True iff some row divides f componentwise."""
        cdef int64_t fbuf[64]
        self._fill(f, fbuf)
        return self._contains(fbuf)

    def deficit_masks(self, a):
        """For each row dividing ``a``: bitmask of positions where a exceeds it.

        These masks are the facet candidates of the multigraded Koszul complex
        at ``a``; an empty list means ``a`` is not in the ideal.
        """
        cdef int64_t abuf[64]
        self._fill(a, abuf)
        cdef list out = []
        cdef Py_ssize_t r, k
        cdef int64_t* row
        cdef int64_t diff
        cdef unsigned long long mask
        cdef bint ok
        for r in range(self.count):
            row = self.data + r * self.width
            mask = 0
            ok = True
            for k in range(self.width):
                diff = abuf[k] - row[k]
                if diff < 0:
                    ok = False
                    break
                if diff > 0:
                    mask |= (<unsigned long long>1) << k
            if ok:
                out.append(mask)
        return out

    cdef long long _colon_prime_mask(self, int64_t* fbuf):
        cdef Py_ssize_t r, k, over
        cdef int64_t* row
        cdef int64_t d, excess
        cdef int count
        cdef unsigned long long mask = 0
        cdef bint hit
        for r in range(self.count):
            row = self.data + r * self.width
            over = -1
            count = 0
            excess = 0
            for k in range(self.width):
                d = row[k] - fbuf[k]
                if d > 0:
                    count += 1
                    if count > 1:
                        break
                    over = k
                    excess = d
            if count == 0:
                return -1  # f lies in the ideal; colon is the unit ideal
            if count == 1 and excess == 1:
                mask |= (<unsigned long long>1) << over
        if mask == 0:
            return -1
        for r in range(self.count):
            row = self.data + r * self.width
            hit = False
            for k in range(self.width):
                if (mask >> k) & 1 and row[k] > fbuf[k]:
                    hit = True
                    break
            if not hit:
                return -1
        return <long long>mask

    def colon_prime_mask(self, f):
        """Bitmask F when the colon by ``f`` equals the prime on F, else -1."""
        cdef int64_t fbuf[64]
        self._fill(f, fbuf)
        return self._colon_prime_mask(fbuf)

    def ass_scan(self, bounds):
        """Exhaustive colon search over the box 0 <= f <= bounds.

        Returns prime-support bitmask -> first witness (lexicographic order).
        """
        cdef int64_t fbuf[64]
        cdef int64_t bbuf[64]
        cdef Py_ssize_t k
        for k in range(self.width):
            fbuf[k] = 0
            bbuf[k] = bounds[k]
        found = {}
        cdef long long mask
        cdef Py_ssize_t pos
        while True:
            mask = self._colon_prime_mask(fbuf)
            if mask >= 0 and mask not in found:
                found[mask] = tuple(fbuf[k] for k in range(self.width))
            # odometer, last coordinate fastest (lexicographic order)
            pos = self.width - 1
            while pos >= 0 and fbuf[pos] == bbuf[pos]:
                fbuf[pos] = 0
                pos -= 1
            if pos < 0:
                break
            fbuf[pos] += 1
        return found


def make_table(flat, count, width):
    return GenTable(flat, count, width)


def rank_int_rows(rows):
    """Exact rank of an integer matrix via fraction-free elimination.

    Raises OverflowError when intermediates pass the guard; the selector
    falls back to the pure big-int implementation in that case.
    """
    cdef Py_ssize_t n_rows = len(rows)
    cdef Py_ssize_t n_cols = len(rows[0]) if n_rows > 0 else 0
    if n_rows == 0 or n_cols == 0:
        return 0
    cdef int128* m = <int128*>calloc(n_rows * n_cols, sizeof(int128))
    if m == NULL:
        raise MemoryError()
    cdef int128 guard = (<int128>1) << 62
    cdef Py_ssize_t r, cidx, col, piv, j, rank
    cdef int128 p, prev, factor, val
    try:
        cidx = 0
        for row in rows:
            for v in row:
                m[cidx] = <long long>v
                cidx += 1
        rank = 0
        prev = 1
        for col in range(n_cols):
            piv = -1
            for r in range(rank, n_rows):
                if m[r * n_cols + col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(n_cols):
                    val = m[rank * n_cols + j]
                    m[rank * n_cols + j] = m[piv * n_cols + j]
                    m[piv * n_cols + j] = val
            p = m[rank * n_cols + col]
            for r in range(rank + 1, n_rows):
                factor = m[r * n_cols + col]
                for j in range(col + 1, n_cols):
                    val = (m[r * n_cols + j] * p - factor * m[rank * n_cols + j]) // prev
                    if val > guard or val < -guard:
                        raise OverflowError("rank intermediates exceed int64 guard")
                    m[r * n_cols + j] = val
                m[r * n_cols + col] = 0
            prev = p
            rank += 1
            if rank == n_rows:
                break
        return rank
    finally:
        free(m)


cdef bint _leaf_violation(int64_t* c, int* offsets, int* sizes, int n_blocks,
                          long t, long s) noexcept:
    """True when candidate pair-sum c violates closure under sorting."""
    cdef long tot_lo = 0, tot_hi = 0
    cdef long lo_sum, hi_sum, cb, lo_i, hi_i, prefix, ub
    cdef int i, k
    cdef int64_t ck
    cdef int64_t u[64]
    for i in range(n_blocks):
        lo_sum = 0
        hi_sum = 0
        cb = 0
        for k in range(offsets[i], offsets[i] + sizes[i]):
            ck = c[k]
            cb += ck
            if ck > s:
                lo_sum += ck - s
                hi_sum += s
            else:
                hi_sum += ck
        lo_i = lo_sum if lo_sum > 1 else 1
        hi_i = cb - 1 if cb - 1 < hi_sum else hi_sum
        if lo_i > hi_i:
            return False  # not a sum of two admissible vectors
        tot_lo += lo_i
        tot_hi += hi_i
    if tot_lo > t or t > tot_hi:
        return False
    # interleave split: the block of merged occurrences at k takes ceil(c_k/2)
    # odd slots when the running prefix is even, floor otherwise
    prefix = 0
    cdef int total_width = offsets[n_blocks - 1] + sizes[n_blocks - 1]
    for k in range(total_width):
        if prefix % 2 == 0:
            u[k] = (c[k] + 1) // 2
        else:
            u[k] = c[k] // 2
        prefix += c[k]
    for i in range(n_blocks):
        ub = 0
        cb = 0
        for k in range(offsets[i], offsets[i] + sizes[i]):
            if u[k] > s or c[k] - u[k] > s:
                return True
            ub += u[k]
            cb += c[k]
        if ub == 0 or ub == cb:
            return True
    return False


def sortable_box_scan(block_sizes, long t, long s):
    """First pair-sum whose interleave split leaves the generator set, or None.

    Same scan as the pure twin: candidates c of degree 2t with entries
    <= 2s and every block sum >= 2, depth-first in lexicographic order.
    """
    cdef int n_blocks = len(block_sizes)
    cdef int offsets[64]
    cdef int sizes[64]
    cdef int i, acc = 0
    if n_blocks > 64:
        raise OverflowError("too many blocks for kernel")
    for i in range(n_blocks):
        sizes[i] = block_sizes[i]
        offsets[i] = acc
        acc += sizes[i]
    cdef int n = acc
    if n > 64:
        raise OverflowError("too many variables for kernel")
    cdef bint is_end[64]
    cdef int k
    for k in range(n):
        is_end[k] = False
    for i in range(n_blocks):
        is_end[offsets[i] + sizes[i] - 1] = True

    cdef int64_t c[64]
    cdef long stack_rem[65]
    cdef long stack_bp[65]
    cdef long cursor[64]
    cdef long hibuf[64]
    cdef long cap = 2 * s
    cdef int pos = 0
    cdef long rem, bp, tail, lo, hi, v
    stack_rem[0] = 2 * t
    stack_bp[0] = 0
    cursor[0] = -2
    # iterative DFS mirroring the recursive pure twin
    while pos >= 0:
        if pos == n:
            if stack_rem[pos] == 0 and _leaf_violation(c, offsets, sizes, n_blocks, t, s):
                return tuple(c[k] for k in range(n))
            pos -= 1
            continue
        rem = stack_rem[pos]
        bp = stack_bp[pos]
        if cursor[pos] == -2:
            # first visit: compute the value range for this position
            tail = cap * (n - pos - 1)
            lo = rem - tail if rem > tail else 0
            if is_end[pos] and lo < 2 - bp:
                lo = 2 - bp
            if lo < 0:
                lo = 0
            hibuf[pos] = cap if cap < rem else rem
            cursor[pos] = lo
        else:
            cursor[pos] += 1
        v = cursor[pos]
        if v > hibuf[pos]:
            cursor[pos] = -2
            pos -= 1
            continue
        c[pos] = v
        stack_rem[pos + 1] = rem - v
        stack_bp[pos + 1] = 0 if is_end[pos] else bp + v
        if pos + 1 < n:
            cursor[pos + 1] = -2
        pos += 1
    return None
