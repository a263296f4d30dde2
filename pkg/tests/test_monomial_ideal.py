import random

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from oracles import brute_standard
from parkideal.monomial_ideal import (
    GuardExceeded,
    MonomialIdeal,
    NotArtinianError,
    add_pure_power,
    colon_pure_power,
    contains,
    format_ideal,
    format_monomial,
    is_artinian,
    minimalize,
    parse_ideal,
    parse_monomial,
    std_count_enum,
    std_count_recursive,
    std_enumerate,
)
from parkideal.verification import random_artinian_ideal
from strategies import artinian_ideals


def ideal(*terms, nvars=None):
    return parse_ideal("\n".join(terms), nvars)


def test_minimalize_examples():
    assert minimalize([(2, 0, 0), (2, 0, 2)]).gens == ((2, 0, 0),)
    assert set(minimalize([(1, 0), (0, 3), (0, 1)]).gens) == {(1, 0), (0, 1)}
    I = minimalize([(0, 0), (3, 1), (1, 1)])
    assert I.gens == ((0, 0),) and I.is_unit
    with pytest.raises(ValueError, match="inconsistent"):
        minimalize([(1, 0), (1,)])


@given(artinian_ideals())
def test_minimalize_idempotent_and_order_free(case):
    n, gens = case
    I = minimalize(gens, n)
    assert minimalize(I.gens, n) == I
    assert minimalize(list(reversed(gens)), n) == I
    for g in I.gens:
        assert not any(h != g and all(x <= y for x, y in zip(h, g)) for h in I.gens)


def test_contains():
    I = ideal("x1*x2")
    assert contains(I, (2, 1))
    assert not contains(I, (2, 0))
    G1 = ideal("x1^2", "x2^2", "x1*x2")
    assert not contains(G1, (1, 0))
    with pytest.raises(ValueError):
        contains(G1, (1, 0, 0))


def test_colon_pure_power():
    I = ideal("x1^3", "x2^3", "x1*x2")
    assert colon_pure_power(I, 0, 2) == ideal("x1", "x2")
    J = ideal("x1^2", "x2^3", nvars=3)
    assert colon_pure_power(J, 2, 4) == J
    assert colon_pure_power(J, 0, 0) == J


def test_colon_and_sum_follow_uniform_matrix_recursion():
    from parkideal.skeleton_ideals import matrix_ideal
    from parkideal.exact_matrix import build_uniform_offdiag

    a, b = [5, 4, 3], 2
    H = build_uniform_offdiag(a, b)
    J = matrix_ideal(H)
    r = a[0] - b
    diag = [b] + [x - b for x in a[1:]]
    assert colon_pure_power(J, 0, r) == matrix_ideal(build_uniform_offdiag(diag, 0))
    H2 = tuple(row[1:] for row in H[1:])
    lifted = tuple((0,) + g for g in matrix_ideal(H2).gens) + ((r, 0, 0),)
    assert add_pure_power(J, 0, r) == MonomialIdeal(3, lifted)


def test_add_pure_power():
    assert add_pure_power(ideal("x1^2"), 0, 1) == ideal("x1")
    assert add_pure_power(ideal("x1^2", "x2"), 1, 0).is_unit


def test_is_artinian():
    assert is_artinian(ideal("x1^2", "x2^2", "x1*x2"))
    assert not is_artinian(ideal("x1*x2"))
    assert is_artinian(ideal("1", nvars=3))


@pytest.mark.parametrize(
    "terms, expected",
    [
        (["x1^2", "x2^2", "x1*x2"], 3),
        (["x1^3", "x2^3", "x3^2", "x1^2*x2^2", "x1^2*x3", "x2^2*x3"], 12),
        (["x1", "x2", "x3", "x4"], 1),
        (["x1^3", "x2^3", "x1*x2"], 5),
        (["x1^3", "x2^2", "x1^2*x2"], 5),  # a1 a2 - b^2 with (3, 2, 1)
        (["1"], 0),
    ],
)
def test_counts(terms, expected):
    I = ideal(*terms)
    assert len(brute_standard(I.gens, I.nvars)) == expected
    assert std_count_enum(I) == expected
    assert std_count_recursive(I) == expected


def test_counts_reject_non_artinian():
    for f in (std_count_enum, std_count_recursive, std_enumerate):
        with pytest.raises(NotArtinianError):
            f(ideal("x1*x2", "x1^3"))


def test_box_guard():
    I = ideal("x1^100", "x2^100", "x3^100")
    with pytest.raises(GuardExceeded):
        std_count_enum(I, max_box=10**5)
    assert std_count_recursive(I) == 10**6


def test_std_enumerate():
    assert std_enumerate(ideal("x1^2", "x2^2", "x1*x2")) == [(0, 0), (0, 1), (1, 0)]
    assert std_enumerate(ideal("x1", "x2")) == [(0, 0)]
    out = std_enumerate(ideal("x1^3", "x2^2", "x1^2*x2"))
    assert out == sorted(out, key=lambda m: (sum(m), m))
    assert len(out) == 5


@settings(max_examples=300)
@given(artinian_ideals(max_vars=4, max_exp=4))
def test_counters_agree_with_box_scan(case):
    n, gens = case
    I = minimalize(gens, n)
    std = brute_standard(I.gens, n)
    assert std_count_enum(I) == len(std)
    assert std_count_recursive(I) == len(std)
    assert std_enumerate(I) == sorted(std, key=lambda m: (sum(m), m))


@given(artinian_ideals(max_vars=3, max_exp=4))
def test_contains_iff_not_standard(case):
    n, gens = case
    I = minimalize(gens, n)
    std = set(std_enumerate(I))
    from itertools import product

    bounds = [max(g[k] for g in I.gens) + 1 for k in range(n)]
    for m in product(*(range(b) for b in bounds)):
        assert contains(I, m) == (m not in std)


@given(artinian_ideals(max_vars=4, max_exp=5), st.data())
def test_short_exact_sequence_identity(case, data):
    n, gens = case
    I = minimalize(gens, n)
    i = data.draw(st.integers(0, n - 1))
    r = data.draw(st.integers(1, 6))
    assert std_count_enum(I) == (
        std_count_enum(colon_pure_power(I, i, r)) + std_count_enum(add_pure_power(I, i, r))
    )


def test_recursive_equals_enum_random():
    rng = random.Random(7)
    for _ in range(300):
        I = random_artinian_ideal(rng, 4, 5)
        assert std_count_recursive(I) == std_count_enum(I)


def test_monomial_syntax():
    assert parse_monomial("x1^2*x3") == (2, 0, 1)
    assert parse_monomial("x1 * x1", 2) == (2, 0)
    assert parse_monomial("1", 2) == (0, 0)
    assert format_monomial((2, 0, 1)) == "x1^2*x3"
    assert format_monomial((0, 0)) == "1"
    for bad in ["", "y1", "x0", "x1^", "x1**2"]:
        with pytest.raises(ValueError):
            parse_monomial(bad)
    with pytest.raises(ValueError):
        parse_monomial("x3", 2)


def test_ideal_text_round_trip(data_dir):
    text = (data_dir / "triangle_component.ideal").read_text()
    I = parse_ideal(text)
    assert I.nvars == 3 and len(I.gens) == 6
    assert parse_ideal(format_ideal(I)) == I
    with pytest.raises(ValueError, match="line 2"):
        parse_ideal("x1\nx1^^2")
