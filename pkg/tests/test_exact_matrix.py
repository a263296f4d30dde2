import random

import hypothesis.strategies as st
import pytest
from hypothesis import given

from oracles import cofactor_det
from parkideal.exact_matrix import (
    Block,
    build_block_join,
    build_uniform_offdiag,
    determinant,
    in_Gn,
    is_positive_semidefinite,
)
from parkideal.multigraph import (
    complete_multigraph,
    d_fold_product,
    delete_rooted_edges,
    laplacian_truncated,
    load_graph,
    signless_laplacian_truncated,
)
from strategies import multigraphs


def test_determinant_examples():
    assert determinant([[2, 1], [1, 2]]) == 3
    assert cofactor_det([[3, 1, 1], [1, 3, 1], [1, 1, 3]]) == 20
    assert determinant([[3, 1, 1], [1, 3, 1], [1, 1, 3]]) == 20
    # a1*a2 - b^2 with (a1, a2, b) = (3, 2, 1)
    assert determinant([[3, 1], [1, 2]]) == 5
    assert determinant([]) == 1
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[0, 0], [0, 5]]) == 0


def test_determinant_matches_cofactor_oracle():
    rng = random.Random(2024)
    for _ in range(500):
        t = rng.randint(1, 6)
        m = [[rng.randint(-5, 5) for _ in range(t)] for _ in range(t)]
        assert determinant(m) == cofactor_det(m)


def test_determinant_big_integers():
    m = [[10**30 + i * j for j in range(4)] for i in range(4)]
    m[0][0] += 7
    assert determinant(m) == cofactor_det(m)


def test_psd_examples():
    assert is_positive_semidefinite([[2, 1], [1, 2]])
    assert not is_positive_semidefinite([[1, 2], [2, 1]])
    # leading minors nonnegative but not PSD
    assert not is_positive_semidefinite([[0, 0], [0, -1]])
    assert not is_positive_semidefinite([[1, 0], [1, 1]])


def test_psd_order_limit():
    with pytest.raises(ValueError, match="limit"):
        is_positive_semidefinite([[1 if i == j else 0 for j in range(21)] for i in range(21)])


@given(multigraphs(max_n=5, max_mult=3))
def test_truncated_laplacians_psd_and_in_Gn(g):
    q = signless_laplacian_truncated(g)
    assert is_positive_semidefinite(q)
    assert in_Gn(q)
    assert determinant(q) >= 0
    assert determinant(laplacian_truncated(g)) >= 0


def test_in_Gn(two_components):
    assert in_Gn([[2, 1], [1, 2]])
    assert not in_Gn([[1, 2], [2, 3]])
    assert not in_Gn([[2, 1], [0, 2]])
    assert not in_Gn([[2, -1], [-1, 2]])
    assert in_Gn(signless_laplacian_truncated(two_components))


def test_build_uniform_offdiag():
    assert build_uniform_offdiag([3, 2], 1) == ((3, 1), (1, 2))
    H = build_uniform_offdiag([2, 2, 2], 2)
    assert H == ((2, 2, 2),) * 3 and determinant(H) == 0
    n, a, b = 4, 2, 3
    H = build_uniform_offdiag([a + (n - 1) * b] * n, b)
    assert H == signless_laplacian_truncated(complete_multigraph(n, a, b))
    with pytest.raises(ValueError):
        build_uniform_offdiag([1, 3], 2)


def test_build_block_join_examples():
    assert build_block_join([Block((3, 2), 1)], []) == build_uniform_offdiag([3, 2], 1)
    H = build_block_join([Block((3, 3), 1), Block((3,))], [1])
    assert H == ((3, 1, 1), (1, 3, 1), (1, 1, 3))
    H = build_block_join([Block((5, 5), 2), Block((4, 4), 1), Block((3,))], [1, 0])
    assert H[0][2] == H[2][0] == 1
    assert H[0][4] == H[2][4] == H[4][0] == 0
    assert H[2][3] == 1


def test_build_block_join_matches_product_graph(data_dir):
    g1 = load_graph(data_dir / "product_g1.json")
    g2 = load_graph(data_dir / "product_g2.json")
    q = signless_laplacian_truncated(d_fold_product(g1, g2, 1))
    H = build_block_join([Block((7, 8), 3), Block((6, 6), 2)], [1])
    assert H == q


@pytest.mark.parametrize(
    "blocks, cross, fragment",
    [
        ([Block((3, 3), 1), Block((3,))], [2], "b_1 >= d_1"),
        ([Block((3, 3), 3), Block((3, 3), 1)], [2], "b_2 >= d_1"),
        ([Block((3,)), Block((3,)), Block((3,))], [1, 2], "d_1 >= d_2"),
        ([Block((1, 3), 2)], [], "alpha_1,1 >= b_1"),
        ([Block((3, 3), 2), Block((1,))], [2], "row dominance"),
        ([Block((3,)), Block((3,))], [], "cross values"),
    ],
)
def test_build_block_join_names_failing_hypothesis(blocks, cross, fragment):
    with pytest.raises(ValueError, match=fragment):
        build_block_join(blocks, cross)


@given(st.data())
def test_rooted_deletions_stay_uniform(data):
    n = data.draw(st.integers(2, 4))
    a = data.draw(st.integers(0, 3))
    b = data.draw(st.integers(0, 3))
    g = complete_multigraph(n, a, b)
    removals = {i: data.draw(st.integers(0, a)) for i in range(1, n + 1)}
    q = signless_laplacian_truncated(delete_rooted_edges(g, removals))
    diag = [q[i][i] for i in range(n)]
    assert q == build_uniform_offdiag(diag, b)
