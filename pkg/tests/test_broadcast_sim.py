import pytest
from hypothesis import given, settings, strategies as st

from aqedst.broadcast_sim import (
    BudgetExceeded, Broadcaster, deliver, exhaustive_fault_check, failure_set, monte_carlo, simulate,
)
from conftest import b, cached_aq, cached_build, e


def test_deliver_no_failures(base):
    assert deliver(base.trees[0], 0) == frozenset(range(8))


def test_deliver_cut(base):
    reached = deliver(base.trees[0], b("000"), [e("010-110")])
    assert reached == {b(s) for s in ["000", "100", "010", "011", "111"]}


def test_deliver_unaffected_tree(base):
    assert deliver(base.trees[1], b("000"), [e("010-110")]) == frozenset(range(8))


def test_deliver_bad_source(base):
    with pytest.raises(ValueError):
        deliver(base.trees[0], 9)


def test_simulate_clean(base):
    out = simulate(base, 0)
    assert out.intact == [True, True] and out.delivered and out.union_delivered


def test_simulate_single_failures(base):
    for edge in base.trees[0].tolist():
        out = simulate(base, 0, [tuple(edge)])
        assert out.intact == [False, True]
        assert out.delivered
        assert out.reached[1] == frozenset(range(8))


def test_simulate_bad_source(base):
    with pytest.raises(ValueError):
        simulate(base, 8)


def test_exhaustive_n3_k1():
    res = exhaustive_fault_check(cached_build(3), 1)
    assert res.ok and res.subsets == 20 and res.sources == 8 and res.cases == 160


def test_exhaustive_n4_k2():
    res = exhaustive_fault_check(cached_build(4), 2)
    assert res.ok and res.subsets == 1540 and res.cases == 1540 * 16


def test_exhaustive_n3_k2_reports_outcome():
    res = exhaustive_fault_check(cached_build(3), 2)
    # one failed link in each tree: 7 * 7 subsets cut both trees
    assert res.subsets_cutting_every_tree == 49
    assert not res.ok
    assert res.first_failure is not None
    assert res.union_undelivered_cases <= res.undelivered_cases


def test_exhaustive_budget():
    with pytest.raises(BudgetExceeded):
        exhaustive_fault_check(cached_build(5), 3, budget=1000)


def test_monte_carlo_guarantee():
    stats = monte_carlo(cached_build(5), 3, trials=2000, seed=42)
    assert stats.intact_fraction == 1.0 and stats.delivered_fraction == 1.0


def test_monte_carlo_reproducible():
    d = cached_build(5)
    s1 = monte_carlo(d, 4, trials=500, seed=42)
    s2 = monte_carlo(d, 4, trials=500, seed=42)
    assert s1.to_dict() == s2.to_dict()
    assert s1.intact_fraction <= 1.0
    assert monte_carlo(d, 4, trials=500, seed=43).to_dict() != s1.to_dict()


def test_monte_carlo_errors(base):
    with pytest.raises(ValueError):
        monte_carlo(base, 25, trials=10, seed=1)
    with pytest.raises(ValueError):
        monte_carlo(base, 1, trials=0, seed=1)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_pigeonhole_sampled(n):
    stats = monte_carlo(cached_build(n), n - 2, trials=300, seed=n)
    assert stats.with_intact_tree == stats.trials


edge_index = st.integers(0, 55)


@settings(max_examples=60, deadline=None)
@given(st.lists(edge_index, max_size=10, unique=True), st.lists(edge_index, max_size=10, unique=True),
       st.integers(0, 15), st.integers(0, 2))
def test_deliver_monotone(small, extra, source, tree):
    d = cached_build(4)
    edges = [tuple(p) for p in cached_aq(4).edges.tolist()]
    f1 = failure_set(edges[i] for i in small)
    f2 = f1 | failure_set(edges[i] for i in extra)
    t = d.trees[tree]
    assert deliver(t, source, f2) <= deliver(t, source, f1)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(0, 19), max_size=5, unique=True), st.integers(0, 7))
def test_simulate_deterministic_and_intact_spans(idx, source):
    d = cached_build(3)
    edges = [tuple(p) for p in cached_aq(3).edges.tolist()]
    failed = [edges[i] for i in idx]
    b1 = Broadcaster(d)
    o1, o2 = b1.simulate(source, failed), Broadcaster(d).simulate(source, failed)
    assert o1 == o2
    for intact, reached in zip(o1.intact, o1.reached):
        if intact:
            assert reached == frozenset(range(8))
