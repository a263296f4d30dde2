from itertools import combinations

import pytest
from hypothesis import given

from oracles import brute_d_S
from parkideal.multigraph import (
    GraphFormatError,
    Multigraph,
    complete_multigraph,
    d_fold_product,
    d_S,
    degree,
    delete_rooted_edges,
    dumps_graph,
    essential_components,
    is_essentially_connected,
    laplacian_truncated,
    loads_graph,
    signless_laplacian_truncated,
)
from strategies import multigraphs

K3 = complete_multigraph(2, 1, 1)
K4 = complete_multigraph(3, 1, 1)


def test_complete_multigraph_instances():
    assert K3.adj == ((0, 1, 1), (1, 0, 1), (1, 1, 0))
    g = complete_multigraph(2, 1, 2)
    assert g.edges() == [(0, 1, 1), (0, 2, 1), (1, 2, 2)]
    g = complete_multigraph(3, 2, 1)
    assert all(g.adj[0][i] == 2 for i in (1, 2, 3))
    assert all(g.adj[i][j] == 1 for i, j in combinations((1, 2, 3), 2))


def test_complete_multigraph_rejects_n0():
    with pytest.raises(ValueError):
        complete_multigraph(0, 1, 1)


def test_multigraph_invariants_enforced():
    with pytest.raises(ValueError, match="symmetric"):
        Multigraph(((0, 1), (0, 0)))
    with pytest.raises(ValueError, match="loop"):
        Multigraph(((0, 1), (1, 1)))
    with pytest.raises(ValueError):
        Multigraph(((0,),))


def test_delete_rooted_edges():
    g = delete_rooted_edges(K3, {1: 1})
    assert (g.adj[0][1], g.adj[0][2], g.adj[1][2]) == (0, 1, 1)
    g = delete_rooted_edges(complete_multigraph(3, 2, 1), {1: 2})
    assert g.adj[0][1] == 0 and g.adj[1][2] == 1 and g.adj[0][2] == 2
    assert delete_rooted_edges(K4, {}) == K4
    with pytest.raises(ValueError):
        delete_rooted_edges(K3, {1: 2})


def test_d_fold_product_fixture(data_dir):
    from parkideal.multigraph import load_graph

    g1 = load_graph(data_dir / "product_g1.json")
    g2 = load_graph(data_dir / "product_g2.json")
    g = d_fold_product(g1, g2, 1)
    # read off the 5-vertex picture
    expected = Multigraph.from_edges(
        4,
        [(1, 2, 3), (3, 4, 2), (0, 1, 2), (0, 2, 3), (0, 3, 2), (0, 4, 2),
         (1, 3, 1), (1, 4, 1), (2, 3, 1), (2, 4, 1)],
    )
    assert g == expected


def test_d_fold_product_small_cases():
    k2 = complete_multigraph(1, 1, 1)
    assert d_fold_product(k2, k2, 1) == K3
    g = d_fold_product(K3, K4, 0)
    assert g.n == 5
    assert all(g.adj[i][j] == 0 for i in (1, 2) for j in (3, 4, 5))


@given(multigraphs(max_n=3), multigraphs(max_n=3))
def test_d_fold_product_counts(g1, g2):
    for d in (0, 2):
        g = d_fold_product(g1, g2, d)
        assert g.n == g1.n + g2.n
        assert g.num_edges == g1.num_edges + g2.num_edges + d * g1.n * g2.n


def test_degree(two_components):
    assert degree(two_components, 3) == 3
    assert degree(K3, 1) == 2
    g = Multigraph.from_edges(2, [(0, 1)])
    assert degree(g, 2) == 0
    with pytest.raises(IndexError):
        degree(K3, 3)


def test_d_S(two_components):
    assert d_S(K3, {1, 2}, 1) == 1
    assert d_S(two_components, {3, 4}, 3) == 2
    assert d_S(two_components, {3}, 3) == degree(two_components, 3)
    for bad in [(set(), 1), ({0, 1}, 1), ({1}, 2)]:
        with pytest.raises(ValueError):
            d_S(K3, *bad)


@given(multigraphs(max_n=4, max_mult=3))
def test_d_S_monotone_and_matches_brute(g):
    n = g.n
    for i in range(1, n + 1):
        assert d_S(g, {i}, i) == degree(g, i)
        others = [v for v in range(1, n + 1) if v != i]
        for size in range(len(others) + 1):
            for extra in combinations(others, size):
                S = {i, *extra}
                assert d_S(g, S, i) == brute_d_S(g.adj, S, i)
                for w in others:
                    if w not in S:
                        assert d_S(g, S | {w}, i) <= d_S(g, S, i)


def test_truncated_matrices(two_components):
    assert signless_laplacian_truncated(K3) == ((2, 1), (1, 2))
    assert signless_laplacian_truncated(K4) == ((3, 1, 1), (1, 3, 1), (1, 1, 3))
    comp = essential_components(two_components)[1].graph
    assert signless_laplacian_truncated(comp) == ((3, 1, 1), (1, 3, 1), (1, 1, 2))
    assert laplacian_truncated(K3) == ((2, -1), (-1, 2))
    assert laplacian_truncated(K4) == ((3, -1, -1), (-1, 3, -1), (-1, -1, 3))
    assert laplacian_truncated(Multigraph.from_edges(1, [(0, 1)])) == ((1,),)


@given(multigraphs(max_n=5, max_mult=3))
def test_signless_diagonal_dominates_each_entry(g):
    q = signless_laplacian_truncated(g)
    for i in range(g.n):
        assert all(q[i][i] >= q[i][j] for j in range(g.n))


def test_essential_components(two_components):
    comps = essential_components(two_components)
    assert [c.vertices for c in comps] == [(1, 2), (3, 4, 5)]
    assert comps[0].graph == K3
    assert essential_components(K4)[0].graph == K4
    edgeless = Multigraph.from_edges(3, [(0, 1), (0, 2), (0, 3)])
    assert [c.vertices for c in essential_components(edgeless)] == [(1,), (2,), (3,)]
    assert is_essentially_connected(K4) and not is_essentially_connected(two_components)


@given(multigraphs(max_n=5, max_mult=2))
def test_essential_components_partition(g):
    comps = essential_components(g)
    seen = [v for c in comps for v in c.vertices]
    assert sorted(seen) == list(range(1, g.n + 1))
    inner = sum(m for _, _, m in g.inner_edges())
    assert inner == sum(sum(m for _, _, m in c.graph.inner_edges()) for c in comps)
    for c in comps:
        for k, v in enumerate(c.vertices, start=1):
            assert c.graph.adj[0][k] == g.adj[0][v]


def test_graph_file_round_trip(two_components):
    assert loads_graph(dumps_graph(two_components)) == two_components
    g = loads_graph('{"n": 2, "edges": [[0, 1, 1], [1, 0, 2], [1, 2, 1]]}')
    assert g.adj[0][1] == 3


@pytest.mark.parametrize(
    "text",
    [
        '{"n": 2, "edges": [[0, 1]]}',
        '{"n": 0, "edges": []}',
        '{"edges": []}',
        '{"n": 2, "edges": [[0, 3, 1]]}',
        '{"n": 2, "edges": [[1, 1, 1]]}',
        '[1, 2]',
        '{"n": 2,\n "edges": [[0, 1, 1],]}',
    ],
)
def test_graph_file_errors(text):
    with pytest.raises(GraphFormatError):
        loads_graph(text)


def test_graph_file_error_has_line():
    with pytest.raises(GraphFormatError, match="line 3"):
        loads_graph('{\n"n": 2,\n"edges": [[0, 1, 1],]}')
