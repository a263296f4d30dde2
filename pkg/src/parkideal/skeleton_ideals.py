"""Monomial ideals built from rooted multigraphs and from matrices in G_n."""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Sequence

from .exact_matrix import as_matrix, in_Gn
from .monomial_ideal import MonomialIdeal
from .multigraph import Multigraph, degree

MAX_SUBSET_VERTICES = 20
MAX_SUBSETS = 1 << 20


def _subset_generator(g: Multigraph, S: Sequence[int]) -> tuple[int, ...]:
    inside = set(S)
    exps = [0] * g.n
    for i in S:
        row = g.adj[i]
        exps[i - 1] = sum(row[j] for j in range(g.n + 1) if j not in inside)
    return tuple(exps)


def parking_ideal(g: Multigraph) -> MonomialIdeal:
    """The G-parking function ideal: one generator per nonempty S of [n]."""
    n = g.n
    if n > MAX_SUBSET_VERTICES:
        raise ValueError(f"n = {n} exceeds the 2^n subset guard ({MAX_SUBSET_VERTICES})")
    deg = [degree(g, i) for i in range(n + 1)]
    # into[i] = number of edges from i into the current S; Gray code flips one vertex per step
    into = [0] * (n + 1)
    in_s = [False] * (n + 1)
    gens = []
    for step in range(1, 1 << n):
        v = (step & -step).bit_length()  # vertex whose bit flips (1-based)
        sign = -1 if in_s[v] else 1
        in_s[v] = not in_s[v]
        for i in range(1, n + 1):
            into[i] += sign * g.adj[i][v]
        gens.append(tuple(deg[i] - into[i] if in_s[i] else 0 for i in range(1, n + 1)))
    return MonomialIdeal(n, tuple(gens))


def skeleton_ideal(g: Multigraph, k: int) -> MonomialIdeal:
    """M_G^(k): generators from the nonempty S with |S| <= k + 1."""
    n = g.n
    if not 0 <= k <= n - 1:
        raise ValueError(f"skeleton index k = {k} outside 0..{n - 1}")
    total = sum(comb(n, s) for s in range(1, k + 2))
    if total > MAX_SUBSETS:
        raise ValueError(f"{total} subsets exceed the guard of {MAX_SUBSETS}")
    gens = [
        _subset_generator(g, S)
        for size in range(1, k + 2)
        for S in combinations(range(1, n + 1), size)
    ]
    return MonomialIdeal(n, tuple(gens))


def one_skeleton(g: Multigraph) -> MonomialIdeal:
    """M_G^(1); for n = 1 this is M_G^(0) = M_G."""
    return skeleton_ideal(g, min(1, g.n - 1))


def matrix_ideal(H: Sequence[Sequence[int]]) -> MonomialIdeal:
    """J_H: pure powers x_t^{h_tt} and x_i^{h_ii - h_ij} x_j^{h_jj - h_ij} for i < j."""
    H = as_matrix(H)
    if not in_Gn(H):
        raise ValueError("matrix is not in G_n (symmetric, nonnegative, diagonally row-dominant)")
    n = len(H)
    gens = []
    for t in range(n):
        gens.append(tuple(H[t][t] if k == t else 0 for k in range(n)))
    for i, j in combinations(range(n), 2):
        e = [0] * n
        e[i] = H[i][i] - H[i][j]
        e[j] = H[j][j] - H[i][j]
        gens.append(tuple(e))
    return MonomialIdeal(n, tuple(gens))
