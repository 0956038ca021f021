"""Construction of Veronese-type and generalized Veronese bi-type ideals.

A Veronese-type ideal on one block collects all monomials of a fixed degree
with every exponent capped.  The generalized bi-type ideal of degree t with
cap s is the sum, over compositions (q_1..q_n) of t with q_i >= 1, of
products of per-block Veronese-type ideals of degrees q_i.  Equivalently it
is generated by all degree-t monomials with entries <= s that touch every
block; the direct characterization is the production path and the literal
composition sum is kept as a cross-check oracle.
"""

from dataclasses import dataclass

from .core import BlockStructure, Monomial, MonomialIdeal, ideal_product, ideal_sum
from .errors import ParameterRangeError


@dataclass(frozen=True)
class IdealParameters:
    """Validated (blocks, t, s) triple for the bi-type construction.

    Requires s <= t (standing hypothesis), t >= n (every block contributes
    degree at least one) and t <= s*N (otherwise no generator exists).
    Out-of-range parameters are rejected rather than mapped to the zero
    ideal so that grid sweeps cannot silently go empty.
    """

    blocks: BlockStructure
    t: int
    s: int

    def __post_init__(self):
        n, big_n = self.blocks.n_blocks, self.blocks.n_vars
        if self.s < 1 or self.t < 1:
            raise ParameterRangeError(f"t and s must be positive, got t={self.t}, s={self.s}")
        if self.s > self.t:
            raise ParameterRangeError(f"cap s={self.s} must not exceed degree t={self.t}")
        if self.t < n:
            raise ParameterRangeError(f"degree t={self.t} below block count n={n}")
        if self.t > self.s * big_n:
            raise ParameterRangeError(
                f"degree t={self.t} exceeds s*N={self.s * big_n}; no generator exists"
            )

    @property
    def deficit(self) -> int:
        """r = s*N - t, the slack below the maximal possible degree."""
        return self.s * self.blocks.n_vars - self.t


def _bounded_compositions(total: int, bounds: list[int]):
    """All tuples 0 <= c_k <= bounds[k] with sum(c) == total, lexicographic."""
    n = len(bounds)
    out: list[int] = [0] * n
    tails = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        tails[k] = tails[k + 1] + bounds[k]

    def rec(k, rem):
        if k == n:
            if rem == 0:
                yield tuple(out)
            return
        lo = max(0, rem - tails[k + 1])
        hi = min(bounds[k], rem)
        for v in range(lo, hi + 1):
            out[k] = v
            yield from rec(k + 1, rem - v)
        out[k] = 0

    yield from rec(0, total)


def veronese_type_ideal(blocks: BlockStructure, block_index: int, degree: int, cap: int) -> MonomialIdeal:
    """All monomials of the given degree supported on one block, entries <= cap.

    With degree <= cap this is the full Veronese slice of the block; with
    cap 1 it is the squarefree one.
    """
    if not (0 <= block_index < blocks.n_blocks):
        raise ParameterRangeError(f"block index {block_index} out of range")
    m = blocks.block_sizes[block_index]
    if not (1 <= degree <= cap * m):
        raise ParameterRangeError(
            f"degree {degree} not in [1, {cap * m}] for block of size {m} with cap {cap}"
        )
    offset = blocks.offsets[block_index]
    big_n = blocks.n_vars
    gens = []
    for comp in _bounded_compositions(degree, [cap] * m):
        entries = [0] * big_n
        entries[offset:offset + m] = comp
        gens.append(Monomial(blocks, tuple(entries)))
    return MonomialIdeal.from_generators(blocks, gens)


def bitype_ideal(params: IdealParameters) -> MonomialIdeal:
    """Direct characterization: degree t, entries <= s, every block touched."""
    blocks, t, s = params.blocks, params.t, params.s
    gens = []
    for v in _bounded_compositions(t, [s] * blocks.n_vars):
        mono = Monomial(blocks, v)
        if all(mono.block_degree(i) >= 1 for i in range(blocks.n_blocks)):
            gens.append(mono)
    return MonomialIdeal.from_generators(blocks, gens)


def bitype_ideal_by_compositions(params: IdealParameters) -> MonomialIdeal:
    """Literal construction: sum over compositions of products of block slices.

    Kept as an internal oracle for :func:`bitype_ideal`.  Blocks live in
    disjoint variables, so each product of per-block Veronese slices is the
    cartesian concatenation of their exponent vectors; the sum over
    compositions is minimalized once at the end.  Compositions with an
    unreachable per-block degree contribute nothing and are skipped.
    """
    blocks, t, s = params.blocks, params.t, params.s
    n = blocks.n_blocks
    per_block_max = [s * m for m in blocks.block_sizes]
    slices: dict[tuple[int, int], list[tuple[int, ...]]] = {}

    def block_slice(i: int, q: int) -> list[tuple[int, ...]]:
        if (i, q) not in slices:
            slices[(i, q)] = list(_bounded_compositions(q, [s] * blocks.block_sizes[i]))
        return slices[(i, q)]

    collected: set[tuple[int, ...]] = set()
    for q in _bounded_compositions(t, per_block_max):
        if any(qi < 1 for qi in q):
            continue
        partial: list[tuple[int, ...]] = [()]
        for i in range(n):
            partial = [head + tail for head in partial for tail in block_slice(i, q[i])]
        collected.update(partial)
    return MonomialIdeal.from_generators(
        blocks, (Monomial(blocks, v) for v in collected)
    )


def make_params(block_sizes, t: int, s: int) -> IdealParameters:
    """Convenience constructor from raw block sizes."""
    return IdealParameters(BlockStructure(tuple(block_sizes)), t, s)
