from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twotrees import (
    ChainState,
    CyclicRequirementError,
    ForeignEdgeError,
    OutOfRangeError,
    SimpleGraph,
    TooLargeError,
    book,
    brute_force_count,
    chain_edge_counts,
    chain_step,
    count_book,
    count_containing,
    count_two_simplicial,
    count_via_construction,
    fibonacci,
    kirchhoff_count,
    path_square,
    random_two_tree,
    verify_bounds,
)
from twotrees.counting import _det_bareiss
from twotrees.graph import edge

from oracle import det_by_cofactors, fib_by_recurrence, tree_count_by_enumeration

seeds = st.integers(0, 2**32 - 1)


def test_fibonacci_values():
    assert fibonacci(0) == 0
    assert fibonacci(1) == 1
    assert fibonacci(-1) == 1
    assert fibonacci(10) == 55
    assert [fibonacci(k) for k in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]
    with pytest.raises(OutOfRangeError):
        fibonacci(-2)


@given(st.integers(-1, 200))
def test_fibonacci_matches_recurrence(k):
    assert fibonacci(k) == fib_by_recurrence(k)


def test_count_book_values():
    assert count_book(2) == 1
    assert count_book(3) == 3
    assert count_book(4) == 8
    assert count_book(10) == 1280
    assert count_book(20) == 2_621_440
    with pytest.raises(OutOfRangeError):
        count_book(1)


def test_count_two_simplicial_values():
    assert count_two_simplicial(2) == 1
    assert count_two_simplicial(4) == 8
    assert count_two_simplicial(5) == 21
    assert count_two_simplicial(6) == 55
    assert count_two_simplicial(16) == 832_040  # F(30)
    with pytest.raises(OutOfRangeError):
        count_two_simplicial(1)


def test_chain_state_seeding_and_step():
    s = ChainState.start(1, 1)
    s = chain_step(s)
    assert (s.total, s.tip) == (3, 2)

    s = chain_step(ChainState.start(3, 2))
    assert (s.total, s.tip) == (8, 5)

    assert ChainState.start(3, 2).steps == 0  # zero steps change nothing


def test_chain_state_rejects_inconsistency():
    with pytest.raises(ValueError):
        ChainState(1, 1, 1, 99, 2)
    with pytest.raises(OutOfRangeError):
        ChainState(1, 2, 0, 1, 2)  # beta > alpha


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 10**6), st.integers(1, 10**6))
def test_chain_closed_form_to_fifty_steps(a, b):
    alpha, beta = max(a, b), min(a, b)
    state = ChainState.start(alpha, beta)
    for p in range(1, 51):
        state = chain_step(state)
        assert state.total == fibonacci(2 * p + 1) * alpha + fibonacci(2 * p) * beta
        assert state.tip == fibonacci(2 * p) * alpha + fibonacci(2 * p - 1) * beta


def test_chain_edge_counts_examples():
    assert chain_edge_counts(1, 1, 1) == (2, 2, 2)
    assert chain_edge_counts(3, 2, 1) == (4, 5, 5)
    through_start, through_side, through_tip = chain_edge_counts(3, 2, 2)
    assert (through_start, through_side, through_tip) == (10, 12, 13)
    assert through_tip > through_start and through_tip > through_side
    with pytest.raises(OutOfRangeError):
        chain_edge_counts(3, 2, 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 10**4), st.integers(1, 10**4), st.integers(1, 12))
def test_chain_edge_count_comparisons(alpha, delta, p):
    beta = max(alpha - delta, 1)
    through_start, through_side, through_tip = chain_edge_counts(alpha, beta, p)
    if alpha > beta:
        assert through_tip > through_start
        if p >= 2:
            assert through_tip > through_side
        else:
            assert through_tip == through_side
    else:
        assert through_tip == through_start == through_side


def test_kirchhoff_small():
    k3 = SimpleGraph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    assert kirchhoff_count(k3) == 3
    assert kirchhoff_count(SimpleGraph.from_edges(1, [])) == 1
    assert kirchhoff_count(SimpleGraph.from_edges(2, [(0, 1)])) == 1
    assert kirchhoff_count(book(8).realize()) == 256
    assert kirchhoff_count(path_square(7).realize()) == 144  # F(12)
    # disconnected input counts zero rather than erroring
    assert kirchhoff_count(SimpleGraph.from_edges(4, [(0, 1), (2, 3)])) == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), seeds)
def test_kirchhoff_matches_enumeration_oracle(n, seed):
    g = random_two_tree(n, seed).realize()
    assert kirchhoff_count(g) == tree_count_by_enumeration(g.n, g.edges())


@settings(max_examples=200, deadline=None)
@given(
    st.integers(1, 5).flatmap(
        lambda k: st.lists(
            st.lists(st.integers(-9, 9), min_size=k, max_size=k),
            min_size=k,
            max_size=k,
        )
    )
)
def test_bareiss_matches_cofactor_expansion(rows):
    assert _det_bareiss([r[:] for r in rows]) == det_by_cofactors(rows)


def test_count_containing_examples():
    k3 = SimpleGraph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    assert count_containing(k3, [(0, 1)]) == 2
    assert count_containing(k3, []) == kirchhoff_count(k3)
    b4 = book(4).realize()
    assert count_containing(b4, [(0, 1)]) == 4  # 2^(4-2) through the spine
    with pytest.raises(CyclicRequirementError):
        count_containing(k3, [(0, 1), (0, 2), (1, 2)])
    with pytest.raises(ForeignEdgeError):
        count_containing(b4, [(2, 3)])


def test_edge_count_query_type():
    from twotrees import EdgeCountQuery

    k3 = SimpleGraph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    q = EdgeCountQuery(k3, ((1, 0),))
    assert q.required == ((0, 1),)
    assert q.count() == 2
    with pytest.raises(CyclicRequirementError):
        EdgeCountQuery(k3, ((0, 1), (0, 2), (1, 2)))
    with pytest.raises(ForeignEdgeError):
        EdgeCountQuery(book(4).realize(), ((2, 3),))


def test_brute_matches_kirchhoff_n10():
    for seed in (0, 1, 2):
        g = random_two_tree(10, seed).realize()
        assert brute_force_count(g) == kirchhoff_count(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 10), seeds)
def test_count_containing_matches_enumeration(n, seed):
    from oracle import spanning_trees_by_enumeration

    rng = random.Random(seed)
    g = random_two_tree(n, seed).realize()
    all_trees = spanning_trees_by_enumeration(g.n, g.edges())
    e = g.edges()[rng.randrange(g.m)]
    f = g.edges()[rng.randrange(g.m)]
    assert count_containing(g, [e]) == sum(1 for t in all_trees if e in t)
    required = {e, f}
    if e != f and not _is_cyclic_pair(g, required):
        by_filter = sum(1 for t in all_trees if required <= t)
        assert count_containing(g, list(required)) == by_filter


def _is_cyclic_pair(g, required):
    from twotrees.graph import spanning_forest_components

    return spanning_forest_components(g.n, required) is None


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 12), seeds)
def test_deletion_contraction(n, seed):
    rng = random.Random(seed)
    g = random_two_tree(n, seed).realize()
    e = g.edges()[rng.randrange(g.m)]
    without = SimpleGraph.from_edges(g.n, [f for f in g.edges() if f != e])
    assert kirchhoff_count(g) == count_containing(g, [e]) + kirchhoff_count(without)


def test_brute_force_values_and_guard():
    assert brute_force_count(SimpleGraph.from_edges(2, [(0, 1)])) == 1
    k3 = SimpleGraph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    assert brute_force_count(k3) == 3
    assert brute_force_count(book(6).realize()) == 48 == count_book(6)
    with pytest.raises(TooLargeError):
        brute_force_count(book(15).realize())  # 27 edges


def test_count_via_construction_families():
    assert count_via_construction(book(2)) == 1
    assert count_via_construction(book(3)) == 3
    assert count_via_construction(book(5)) == 20
    assert count_via_construction(path_square(5)) == 21


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 12), seeds)
def test_count_via_construction_matches_kirchhoff(n, seed):
    c = random_two_tree(n, seed)
    assert count_via_construction(c) == kirchhoff_count(c.realize())


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 10), seeds)
def test_count_via_construction_on_recognized_labels(n, seed):
    from twotrees import recognize

    g = random_two_tree(n, seed).realize()
    relabeled = SimpleGraph.from_edges(
        g.n, [edge(g.n - 1 - u, g.n - 1 - v) for u, v in g.edges()]
    )
    c = recognize(relabeled)
    assert count_via_construction(c) == kirchhoff_count(relabeled)


def test_verify_bounds_examples():
    assert verify_bounds(book(5).realize()) == (True, True)  # 8 <= 20 <= 27
    assert verify_bounds(path_square(5).realize()) == (True, True)  # 8 <= 21 <= 27
    k3 = SimpleGraph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    assert verify_bounds(k3) == (True, True)  # 2 <= 3 <= 3


def test_golden_ratio_square_limit():
    # F(2n-2)/F(2n-4) at n=30 sits within 1e-6 of (3+sqrt(5))/2, checked in
    # integers: |a/b - phi^2| < eps iff |d^2 - 5 b^2| < eps*2b*(d + sqrt5 b),
    # and d + sqrt5 b > 2b makes 250000*|d^2-5b^2| < b*b sufficient.
    a, b = fibonacci(58), fibonacci(56)
    d = 2 * a - 3 * b
    assert 250_000 * abs(d * d - 5 * b * b) < b * b
