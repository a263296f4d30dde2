"""Rooted loopless multigraphs on the vertex set {0, 1, ..., n}.

Vertex 0 is the root. Edges are stored as a dense symmetric matrix of
multiplicities; parallel edges are counted, never labeled (see
:mod:`parkideal.graph_enumeration` for the labeled view).

Graph files are JSON documents::

    {"n": 3, "edges": [[0, 1, 2], [1, 2, 1], [2, 3, 1]]}

Each edge is ``[u, v, multiplicity]`` with 0-indexed endpoints; repeated
pairs accumulate. See README.md for the full grammar.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

Matrix = tuple[tuple[int, ...], ...]


class GraphFormatError(ValueError):
    """Raised for malformed graph documents. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Multigraph:
    adj: Matrix

    def __post_init__(self):
        adj = tuple(tuple(int(x) for x in row) for row in self.adj)
        size = len(adj)
        if size < 2:
            raise ValueError("a rooted multigraph needs n >= 1 non-root vertices")
        for i, row in enumerate(adj):
            if len(row) != size:
                raise ValueError("adjacency matrix must be square")
            if row[i] != 0:
                raise ValueError(f"loop at vertex {i}: multigraphs are loopless")
            for j, x in enumerate(row):
                if x < 0:
                    raise ValueError(f"negative multiplicity at ({i}, {j})")
                if x != adj[j][i]:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")
        object.__setattr__(self, "adj", adj)

    @property
    def n(self) -> int:
        return len(self.adj) - 1

    @property
    def num_edges(self) -> int:
        return sum(self.adj[i][j] for i in range(self.n + 1) for j in range(i + 1, self.n + 1))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Multigraph":
        """Build from ``(u, v)`` or ``(u, v, multiplicity)`` items; duplicates add up."""
        if n < 1:
            raise ValueError("n must be >= 1")
        adj = [[0] * (n + 1) for _ in range(n + 1)]
        for e in edges:
            u, v = e[0], e[1]
            mult = e[2] if len(e) > 2 else 1
            if not (0 <= u <= n and 0 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if mult < 0:
                raise ValueError(f"negative multiplicity on edge ({u}, {v})")
            adj[u][v] += mult
            adj[v][u] += mult
        return cls(tuple(map(tuple, adj)))

    def edges(self) -> list[tuple[int, int, int]]:
        """Nonzero ``(u, v, multiplicity)`` triples with u < v."""
        size = self.n + 1
        return [
            (i, j, self.adj[i][j])
            for i in range(size)
            for j in range(i + 1, size)
            if self.adj[i][j]
        ]

    def inner_edges(self) -> list[tuple[int, int, int]]:
        return [e for e in self.edges() if e[0] != 0]


def complete_multigraph(n: int, a: int, b: int) -> Multigraph:
    """K_{n+1}^{a,b}: ``a`` edges from the root to every vertex, ``b`` between other pairs."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if a < 0 or b < 0:
        raise ValueError("multiplicities must be nonnegative")
    adj = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        adj[0][i] = adj[i][0] = a
        for j in range(1, n + 1):
            if i != j:
                adj[i][j] = b
    return Multigraph(tuple(map(tuple, adj)))


def delete_rooted_edges(g: Multigraph, removals: Mapping[int, int]) -> Multigraph:
    adj = [list(row) for row in g.adj]
    for v, count in removals.items():
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} is not a non-root vertex")
        if count < 0 or count > adj[0][v]:
            raise ValueError(
                f"cannot remove {count} rooted edges at vertex {v} (multiplicity {adj[0][v]})"
            )
        adj[0][v] -= count
        adj[v][0] -= count
    return Multigraph(tuple(map(tuple, adj)))


def d_fold_product(g1: Multigraph, g2: Multigraph, d: int) -> Multigraph:
    """Join ``g1`` and ``g2`` over a shared root with ``d`` edges between every
    non-root vertex of ``g1`` and every non-root vertex of ``g2``.

    Vertices of ``g2`` are shifted by ``g1.n``.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    n, m = g1.n, g2.n
    size = n + m + 1
    adj = [[0] * size for _ in range(size)]
    for i in range(n + 1):
        for j in range(n + 1):
            adj[i][j] = g1.adj[i][j]
    for i in range(m + 1):
        for j in range(m + 1):
            if i == 0 and j == 0:
                continue
            ii = 0 if i == 0 else i + n
            jj = 0 if j == 0 else j + n
            adj[ii][jj] = g2.adj[i][j]
    for i in range(1, n + 1):
        for j in range(n + 1, size):
            adj[i][j] = adj[j][i] = d
    return Multigraph(tuple(map(tuple, adj)))


def _check_vertex(g: Multigraph, i: int) -> None:
    if not 0 <= i <= g.n:
        raise IndexError(f"vertex {i} out of range 0..{g.n}")


def degree(g: Multigraph, i: int) -> int:
    _check_vertex(g, i)
    return sum(g.adj[i])


def d_S(g: Multigraph, S: Iterable[int], i: int) -> int:
    """Number of edges at ``i`` whose other endpoint lies outside ``S``."""
    S = frozenset(S)
    if not S:
        raise ValueError("S must be nonempty")
    if 0 in S:
        raise ValueError("S must not contain the root")
    if any(not 1 <= v <= g.n for v in S):
        raise ValueError("S must be a subset of the non-root vertices")
    if i not in S:
        raise ValueError(f"vertex {i} is not in S")
    row = g.adj[i]
    return sum(row[j] for j in range(g.n + 1) if j not in S)


def signless_laplacian_truncated(g: Multigraph) -> Matrix:
    """D + A with the root row and column removed."""
    n = g.n
    return tuple(
        tuple(degree(g, i) if i == j else g.adj[i][j] for j in range(1, n + 1))
        for i in range(1, n + 1)
    )


def laplacian_truncated(g: Multigraph) -> Matrix:
    """D - A with the root row and column removed."""
    n = g.n
    return tuple(
        tuple(degree(g, i) if i == j else -g.adj[i][j] for j in range(1, n + 1))
        for i in range(1, n + 1)
    )


def induced_rooted_subgraph(g: Multigraph, vertices: Sequence[int]) -> Multigraph:
    """Induced subgraph on ``{0} + vertices``, relabeled 1..k in the given order."""
    keep = (0, *vertices)
    return Multigraph(tuple(tuple(g.adj[u][v] for v in keep) for u in keep))


class Component(NamedTuple):
    graph: Multigraph
    vertices: tuple[int, ...]  # original labels; new label k+1 <-> vertices[k]


def inner_components(g: Multigraph) -> list[tuple[int, ...]]:
    """Connected components of the graph with the root removed, each sorted,
    ordered by smallest vertex."""
    seen: set[int] = set()
    comps = []
    for start in range(1, g.n + 1):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in range(1, g.n + 1):
                if g.adj[u][v] and v not in seen:
                    seen.add(v)
                    stack.append(v)
        comps.append(tuple(sorted(comp)))
    return comps


def essential_components(g: Multigraph) -> list[Component]:
    return [Component(induced_rooted_subgraph(g, vs), vs) for vs in inner_components(g)]


def is_essentially_connected(g: Multigraph) -> bool:
    return len(inner_components(g)) == 1


# -- graph files -------------------------------------------------------------

def graph_from_dict(doc: object) -> Multigraph:
    if not isinstance(doc, dict):
        raise GraphFormatError("top level must be an object with 'n' and 'edges'")
    if "n" not in doc or "edges" not in doc:
        raise GraphFormatError("missing required field 'n' or 'edges'")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise GraphFormatError(f"'n' must be an integer >= 1, got {n!r}")
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise GraphFormatError("'edges' must be a list")
    triples = []
    for k, e in enumerate(edges):
        if (
            not isinstance(e, list)
            or len(e) != 3
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise GraphFormatError(f"edge #{k} must be [u, v, multiplicity], got {e!r}")
        triples.append(e)
    try:
        return Multigraph.from_edges(n, triples)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def loads_graph(text: str) -> Multigraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(exc.msg, exc.lineno) from exc
    return graph_from_dict(doc)


def dumps_graph(g: Multigraph) -> str:
    lines = [f"    [{u}, {v}, {m}]" for u, v, m in g.edges()]
    body = ",\n".join(lines)
    return f'{{\n  "n": {g.n},\n  "edges": [\n{body}\n  ]\n}}\n' if lines else f'{{"n": {g.n}, "edges": []}}\n'


def load_graph(path) -> Multigraph:
    with open(path, encoding="utf-8") as fh:
        return loads_graph(fh.read())


def save_graph(g: Multigraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_graph(g))
