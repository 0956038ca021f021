"""Pure-Python kernels.

These mirror the compiled extension ``_speedups`` one-to-one: same function
names, same argument conventions, same outputs (including enumeration order,
so first-witness results agree across implementations).  They are the
fallback when the extension is not built and the reference the extension is
tested against.

Conventions shared by both implementations:

* a generator table is ``count`` rows of ``width`` nonnegative ints, flat;
* exponent vectors are plain int tuples;
* variable subsets are bitmasks over flat variable indices;
* boxes are enumerated in lexicographic order (last coordinate fastest).
"""

from itertools import product


class GenTable:
    """Scan-oriented view of a minimal generating set."""

    __slots__ = ("count", "width", "rows")

    def __init__(self, flat, count, width):
        self.count = count
        self.width = width
        self.rows = [tuple(flat[r * width:(r + 1) * width]) for r in range(count)]

    def contains(self, f) -> bool:
        """True iff some row divides f componentwise."""
        for row in self.rows:
            if all(a <= b for a, b in zip(row, f)):
                return True
        return False

    def deficit_masks(self, a) -> list[int]:
        """For each row dividing ``a``: bitmask of positions where a exceeds it.

        These masks are the facet candidates of the multigraded Koszul complex
        at ``a``; an empty list means ``a`` is not in the ideal.
        """
        out = []
        for row in self.rows:
            mask = 0
            ok = True
            for k in range(self.width):
                diff = a[k] - row[k]
                if diff < 0:
                    ok = False
                    break
                if diff > 0:
                    mask |= 1 << k
            if ok:
                out.append(mask)
        return out

    def colon_prime_mask(self, f) -> int:
        """Bitmask F when the colon by ``f`` equals the prime on F, else -1.

        The colon I : f is that prime exactly when f is outside the ideal,
        every variable of F pushes f in (each such row exceeds f in a single
        position, by exactly one), and every row exceeds f somewhere on F.
        """
        mask = 0
        for row in self.rows:
            over = -1
            count = 0
            excess = 0
            for k in range(self.width):
                d = row[k] - f[k]
                if d > 0:
                    count += 1
                    if count > 1:
                        break
                    over = k
                    excess = d
            if count == 0:
                return -1  # f lies in the ideal; colon is the unit ideal
            if count == 1 and excess == 1:
                mask |= 1 << over
        if mask == 0:
            return -1
        for row in self.rows:
            hit = False
            for k in range(self.width):
                if (mask >> k) & 1 and row[k] > f[k]:
                    hit = True
                    break
            if not hit:
                return -1
        return mask

    def ass_scan(self, bounds) -> dict[int, tuple[int, ...]]:
        """Exhaustive colon search over the box 0 <= f <= bounds.

        Returns prime-support bitmask -> first witness (lexicographic order).
        """
        found: dict[int, tuple[int, ...]] = {}
        for f in product(*(range(b + 1) for b in bounds)):
            mask = self.colon_prime_mask(f)
            if mask >= 0 and mask not in found:
                found[mask] = f
        return found


def make_table(flat, count, width) -> GenTable:
    return GenTable(flat, count, width)


def rank_int_rows(rows) -> int:
    """Exact rank of an integer matrix via fraction-free elimination."""
    m = [list(r) for r in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    rank = 0
    prev = 1
    for col in range(n_cols):
        piv = None
        for r in range(rank, n_rows):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, n_rows):
            row = m[r]
            factor = row[col]
            top = m[rank]
            for j in range(col + 1, n_cols):
                row[j] = (row[j] * p - factor * top[j]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def _split_parity(c):
    """Interleave the 2t merged variable occurrences; odd slots vs even slots."""
    u = []
    prefix = 0
    for ck in c:
        u.append((ck + 1) // 2 if prefix % 2 == 0 else ck // 2)
        prefix += ck
    return u


def _leaf_violation(c, offsets, sizes, t, s):
    """Check one candidate pair-sum ``c``; return c if it violates closure."""
    # Is c a sum of two admissible vectors?  Per variable the summand is
    # boxed in [max(0, c_k - s), min(s, c_k)]; per block its total must
    # leave degree >= 1 on both sides; the grand total must reach t.
    tot_lo = 0
    tot_hi = 0
    for i, m in enumerate(sizes):
        lo_sum = 0
        hi_sum = 0
        cb = 0
        for k in range(offsets[i], offsets[i] + m):
            ck = c[k]
            cb += ck
            lo_sum += ck - s if ck > s else 0
            hi_sum += s if ck > s else ck
        lo_i = max(1, lo_sum)
        hi_i = min(cb - 1, hi_sum)
        if lo_i > hi_i:
            return None
        tot_lo += lo_i
        tot_hi += hi_i
    if not (tot_lo <= t <= tot_hi):
        return None
    u = _split_parity(c)
    for i, m in enumerate(sizes):
        ub = 0
        cb = 0
        for k in range(offsets[i], offsets[i] + m):
            if u[k] > s or c[k] - u[k] > s:
                return tuple(c)
            ub += u[k]
            cb += c[k]
        if ub == 0 or ub == cb:
            return tuple(c)
    return None


def sortable_box_scan(block_sizes, t, s):
    """First pair-sum whose interleave split leaves the generator set, or None.

    The sort of a pair depends only on its exponent sum, so closure under
    sorting is checked by scanning candidate sums c (degree 2t, entries
    <= 2s, every block >= 2) that decompose into two generators.
    """
    sizes = tuple(block_sizes)
    offsets = []
    acc = 0
    for m in sizes:
        offsets.append(acc)
        acc += m
    n = acc
    is_end = [False] * n
    for i in range(len(sizes)):
        is_end[offsets[i] + sizes[i] - 1] = True

    c = [0] * n
    cap = 2 * s

    def rec(k, rem, block_partial):
        if k == n:
            return _leaf_violation(c, offsets, sizes, t, s) if rem == 0 else None
        tail = cap * (n - k - 1)
        lo = rem - tail if rem > tail else 0
        hi = cap if cap < rem else rem
        if is_end[k] and lo < 2 - block_partial:
            lo = 2 - block_partial
        if lo < 0:
            lo = 0
        for v in range(lo, hi + 1):
            c[k] = v
            nxt = 0 if is_end[k] else block_partial + v
            bad = rec(k + 1, rem - v, nxt)
            if bad is not None:
                return bad
        c[k] = 0
        return None

    return rec(0, 2 * t, 0)
