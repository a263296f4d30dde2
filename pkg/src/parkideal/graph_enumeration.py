"""Exhaustive subgraph oracles over labeled edges.

Parallel edges are distinguishable here: a double edge {1, 2} contributes
two labels, and choosing either copy gives a different subgraph. A pair of
parallel edges inside one subgraph closes a cycle of length 2, which is even.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from itertools import combinations

from .exact_matrix import determinant
from .monomial_ideal import MAX_BOX, Monomial, std_enumerate
from .multigraph import Multigraph, laplacian_truncated, signless_laplacian_truncated
from .skeleton_ideals import parking_ideal

MAX_EDGES = 18


class EdgeGuardExceeded(RuntimeError):
    pass


def labeled_edges(g: Multigraph) -> list[tuple[int, int]]:
    """One ``(u, v)`` entry per edge copy, u < v, in row-major order."""
    out = []
    for u, v, mult in g.edges():
        out.extend([(u, v)] * mult)
    return out


def _check_guard(g: Multigraph, max_edges: int) -> list[tuple[int, int]]:
    edges = labeled_edges(g)
    if len(edges) > max_edges:
        raise EdgeGuardExceeded(
            f"graph has {len(edges)} edges; subset enumeration is capped at --max-edges {max_edges}"
        )
    return edges


def _components(size: int, chosen) -> tuple[list[int], dict[int, int], dict[int, bool]]:
    """Union-find with parity. Returns (root of each vertex, cycle count per root,
    odd-cycle flag per root)."""
    parent = list(range(size))
    parity = [0] * size  # parity relative to parent

    def find(x):
        p = 0
        path = []
        while parent[x] != x:
            path.append(x)
            p ^= parity[x]
            x = parent[x]
        # compress
        acc = p
        for y in path:
            old = parity[y]
            parity[y] = acc
            parent[y] = x
            acc ^= old
        return x, p

    cycles = dict.fromkeys(range(size), 0)
    odd = dict.fromkeys(range(size), False)
    for u, v in chosen:
        ru, pu = find(u)
        rv, pv = find(v)
        if ru == rv:
            cycles[ru] += 1
            if pu == pv:
                odd[ru] = True
        else:
            parent[rv] = ru
            parity[rv] = pu ^ pv ^ 1
            cycles[ru] += cycles.pop(rv)
            odd[ru] = odd[ru] or odd.pop(rv)
    roots = [find(x)[0] for x in range(size)]
    return roots, cycles, odd


def spanning_trees_enumerate(g: Multigraph, max_edges: int = MAX_EDGES) -> int:
    """Count labeled-edge spanning trees by checking every n-edge subset."""
    edges = _check_guard(g, max_edges)
    size = g.n + 1
    count = 0
    for chosen in combinations(edges, g.n):
        roots, cycles, _ = _components(size, chosen)
        if len(cycles) == 1:
            count += 1
    return count


def spanning_trees_count(g: Multigraph) -> int:
    return determinant(laplacian_truncated(g))


@dataclass
class TUReport:
    census: dict[int, int] = field(default_factory=dict)

    @property
    def weighted_sum(self) -> int:
        return sum(4**c * k for c, k in self.census.items())

    def merge(self, other: "TUReport") -> "TUReport":
        out = dict(self.census)
        for c, k in other.census.items():
            out[c] = out.get(c, 0) + k
        return TUReport(out)

    def to_csv(self, det: int | None = None) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["c", "count"])
        for c in sorted(self.census):
            w.writerow([c, self.census[c]])
        w.writerow(["weighted_sum", self.weighted_sum])
        if det is not None:
            w.writerow(["det_q", det])
            w.writerow(["match", self.weighted_sum == det])
        return buf.getvalue()

    def to_text(self, det: int | None = None) -> str:
        parts = [f"c={c}:{self.census[c]}" for c in sorted(self.census)]
        line = ", ".join(parts + [f"weighted {self.weighted_sum}"])
        if det is not None:
            line += f", det {det}, {'MATCH' if det == self.weighted_sum else 'MISMATCH'}"
        return line


def tu_enumerate(g: Multigraph, max_edges: int = MAX_EDGES) -> TUReport:
    """Census of spanning TU-subgraphs with one tree component, containing the
    root, and every other component unicyclic with an odd cycle.

    Such a subgraph has exactly n edges (the tree has one edge fewer than
    vertices, each unicyclic component as many as vertices), so only n-edge
    subsets are inspected.
    """
    edges = _check_guard(g, max_edges)
    size = g.n + 1
    census: dict[int, int] = {}
    for chosen in combinations(edges, g.n):
        roots, cycles, odd = _components(size, chosen)
        root0 = roots[0]
        if cycles[root0] != 0:
            continue
        if all(cycles[r] == 1 and odd[r] for r in cycles if r != root0):
            c = len(cycles) - 1
            census[c] = census.get(c, 0) + 1
    return TUReport(census)


def parking_functions(g: Multigraph, max_box: int = MAX_BOX) -> list[Monomial]:
    """G-parking functions, i.e. the standard monomials of the parking ideal."""
    return std_enumerate(parking_ideal(g), max_box)


def tu_check(g: Multigraph, max_edges: int = MAX_EDGES) -> tuple[TUReport, int]:
    return tu_enumerate(g, max_edges), determinant(signless_laplacian_truncated(g))
