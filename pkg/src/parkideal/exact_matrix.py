"""Exact integer linear algebra on small square matrices.

Matrices are tuples of row tuples of Python ints. Nothing here touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]

PSD_MAX_ORDER = 20


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if any(len(row) != len(m) for row in m):
        raise ValueError("matrix must be square")
    return m


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination; every division is exact."""
    a = [list(row) for row in as_matrix(m)]
    t = len(a)
    if t == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(t - 1):
        if a[k][k] == 0:
            for p in range(k + 1, t):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, t):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, t):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[t - 1][t - 1]


def principal_submatrix(m: Matrix, idx: Sequence[int]) -> Matrix:
    return tuple(tuple(m[i][j] for j in idx) for i in idx)


def is_symmetric(m: Matrix) -> bool:
    return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(i))


def is_positive_semidefinite(m: Sequence[Sequence[int]]) -> bool:
    """Exact PSD test: a symmetric matrix is PSD iff all 2^t principal minors are >= 0."""
    m = as_matrix(m)
    t = len(m)
    if t > PSD_MAX_ORDER:
        raise ValueError(
            f"order {t} exceeds the principal-minor limit of {PSD_MAX_ORDER} (2^t determinants)"
        )
    if not is_symmetric(m):
        return False
    for size in range(1, t + 1):
        for idx in combinations(range(t), size):
            if determinant(principal_submatrix(m, idx)) < 0:
                return False
    return True


def in_Gn(m: Sequence[Sequence[int]]) -> bool:
    """Symmetric, nonnegative, and each diagonal entry dominates its row."""
    m = as_matrix(m)
    t = len(m)
    if not is_symmetric(m):
        return False
    for i in range(t):
        for j in range(t):
            if m[i][j] < 0 or m[i][j] > m[i][i]:
                return False
    return True


def build_uniform_offdiag(diag: Sequence[int], b: int) -> Matrix:
    if b < 0:
        raise ValueError("off-diagonal value must be nonnegative")
    for i, a in enumerate(diag):
        if a < b:
            raise ValueError(f"diagonal entry {i + 1} is {a} < off-diagonal {b}")
    n = len(diag)
    if n == 0:
        raise ValueError("need at least one diagonal entry")
    return tuple(tuple(diag[i] if i == j else b for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class Block:
    """One diagonal block: diagonal entries and the uniform off-diagonal value.

    ``b`` is irrelevant (and may be None) for a block of size one.
    """

    diag: tuple[int, ...]
    b: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(self.diag))
        if not self.diag:
            raise ValueError("empty block")
        if len(self.diag) > 1 and self.b is None:
            raise ValueError("blocks of size >= 2 need an off-diagonal value b")

    @property
    def size(self) -> int:
        return len(self.diag)


def check_block_join(blocks: Sequence[Block], cross: Sequence[int]) -> None:
    """Raise ValueError naming the first failing hypothesis of the block join."""
    r = len(blocks)
    if r == 0:
        raise ValueError("need at least one block")
    if len(cross) != r - 1:
        raise ValueError(f"{r} blocks need {r - 1} cross values, got {len(cross)}")
    for k, d in enumerate(cross, start=1):
        if d < 0:
            raise ValueError(f"d_{k} = {d} is negative")
    for k in range(1, len(cross)):
        if cross[k - 1] < cross[k]:
            raise ValueError(f"d_{k} >= d_{k + 1} violated: {cross[k - 1]} < {cross[k]}")
    for i, blk in enumerate(blocks, start=1):
        if blk.b is not None and blk.b < 0:
            raise ValueError(f"b_{i} = {blk.b} is negative")
        if any(a < 0 for a in blk.diag):
            raise ValueError(f"block {i} has a negative diagonal entry")
        if blk.size > 1:
            for j, a in enumerate(blk.diag, start=1):
                if a < blk.b:
                    raise ValueError(f"alpha_{i},{j} >= b_{i} violated: {a} < {blk.b}")
        if r > 1 and blk.size > 1:
            d = cross[0] if i == 1 else cross[i - 2]
            name = "b_1 >= d_1" if i == 1 else f"b_{i} >= d_{i - 1}"
            if blk.b < d:
                raise ValueError(f"{name} violated: {blk.b} < {d}")
        if r > 1:
            # singleton blocks carry no b; their diagonal must still dominate the row
            top = cross[0] if i == 1 else cross[i - 2]
            for j, a in enumerate(blk.diag, start=1):
                if a < top:
                    raise ValueError(f"alpha_{i},{j} >= {top} (row dominance) violated: {a}")


def build_block_join(blocks: Sequence[Block], cross: Sequence[int]) -> Matrix:
    """Block matrix with uniform diagonal blocks; the block between block s and
    block t (s < t) is the constant ``cross[t - 2]`` (1-based s, t)."""
    blocks = [b if isinstance(b, Block) else Block(*b) for b in blocks]
    check_block_join(blocks, cross)
    owner = []
    diag = []
    for k, blk in enumerate(blocks):
        owner.extend([k] * blk.size)
        diag.extend(blk.diag)
    n = len(diag)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            s, t = owner[i], owner[j]
            if i == j:
                row.append(diag[i])
            elif s == t:
                row.append(blocks[s].b)
            else:
                row.append(cross[max(s, t) - 1])
        rows.append(tuple(row))
    return tuple(rows)
