import dataclasses
import random
from itertools import combinations

import numpy as np
import pytest

from aqedst.aq_graph import canonical_array
from aqedst.edst_builder import Labeling
from aqedst.verifier import (
    DisjointSet, check_disjoint, check_internal_vertices, check_leftover, check_partition,
    check_spanning_tree, max_edst_upper_bound, tree_adjacency, tree_path, verify_all,
)
from conftest import b, cached_aq, cached_build, e
from oracles import adjacency, all_simple_paths


def with_edge(arr, edge):
    return canonical_array(np.vstack([arr, [edge]]))


def without_edge(arr, edge):
    return canonical_array([p for p in arr.tolist() if tuple(p) != edge])


def test_disjoint_set_detects_cycle():
    dsu = DisjointSet(3)
    assert dsu.union(0, 1) and dsu.union(1, 2)
    assert not dsu.union(0, 2)


def test_spanning_tree_pass(aq3, base):
    v = check_spanning_tree(aq3, base.trees[0])
    assert v.ok and v.data["edge_count"] == 7


def test_spanning_tree_missing_leaf(aq3, base):
    v = check_spanning_tree(aq3, without_edge(base.trees[0], e("000-100")))
    assert not v.ok
    assert v.data["unreached_vertex"] == b("100")


def test_spanning_tree_extra_edge(aq3, base):
    v = check_spanning_tree(aq3, with_edge(base.trees[0], e("000-111")))
    assert not v.ok
    assert v.data["edge_count"] == 8
    assert not v.data["acyclic"]


def test_spanning_tree_foreign_edge(aq3, base):
    v = check_spanning_tree(aq3, with_edge(base.trees[0], e("001-100")))
    assert not v.ok and v.data["foreign_edge"] == list(e("001-100"))


def test_disjoint_examples(base):
    t1, t2 = base.trees
    assert check_disjoint([t1, t2]).ok
    assert not check_disjoint([t1, t1]).ok
    v = check_disjoint([t1, with_edge(t2, e("000-010"))])
    assert not v.ok and v.data["edge"] == list(e("000-010"))


def test_partition_examples(aq3, base):
    v = check_partition(aq3, base)
    assert v.ok and v.data["leftover_size"] == 6
    v4 = check_partition(cached_aq(4), cached_build(4))
    assert v4.ok and v4.data["leftover_size"] == 11
    gap = dataclasses.replace(base, leftover=without_edge(base.leftover, e("000-011")))
    v = check_partition(aq3, gap)
    assert not v.ok and v.data["uncovered"] == [list(e("000-011"))]


def test_leftover_examples(base):
    v = check_leftover(base)
    assert v.ok and v.data["support_size"] == 7
    assert check_leftover(cached_build(4)).data["support_size"] == 12
    d4 = cached_build(4)
    x = d4.labeling.v[0]
    bad = dataclasses.replace(d4, leftover=with_edge(d4.leftover, (x, x + 8) if x < 8 else (x - 8, x)))
    assert not check_leftover(bad).ok


def test_leftover_excludes_100(base):
    support = set(np.unique(base.leftover).tolist())
    assert b("100") not in support and len(support) == 7


def test_internal_examples(base):
    v = check_internal_vertices(base)
    assert v.ok and v.data["degrees"] == [2, 3]
    v_list = list(base.labeling.v)
    u_list = list(base.labeling.u)
    i = u_list.index(b("111"))
    u_list[i], v_list[0] = v_list[0], b("111")
    swapped = dataclasses.replace(base, labeling=Labeling(tuple(u_list), tuple(v_list)))
    v = check_internal_vertices(swapped)
    assert not v.ok and v.data["failing_indices"] == [1]


@pytest.mark.parametrize("n", range(4, 9))
def test_internal_builds(n):
    assert check_internal_vertices(cached_build(n)).ok


def test_tree_path_examples(base):
    t1, t2 = base.trees
    assert tree_path(t1, b("001"), b("111")) == [
        e("001-101"), e("101-110"), e("110-010"), e("010-011"), e("011-111")]
    assert tree_path(t2, b("000"), b("001")) == [e("000-001")]
    with pytest.raises(ValueError):
        tree_path(t1, 0, 0)
    with pytest.raises(ValueError):
        tree_path(base.leftover, b("100"), 0)


@pytest.mark.parametrize("n", [3, 4])
def test_tree_path_matches_simple_path_oracle(n):
    for t in cached_build(n).trees:
        adj = adjacency(t.tolist())
        for a_, c in combinations(range(2 ** n), 2):
            (walk,) = all_simple_paths(adj, a_, c)
            want = [tuple(sorted(p)) for p in zip(walk, walk[1:])]
            assert tree_path(t, a_, c) == want


@pytest.mark.parametrize("n,expected", [(3, 2), (5, 4), (10, 9)])
def test_upper_bound_examples(n, expected):
    assert max_edst_upper_bound(n) == expected


def test_upper_bound_formula():
    assert max_edst_upper_bound(5) == 144 // 31
    assert max_edst_upper_bound(10) == 9728 // 1023
    assert max_edst_upper_bound(2) == 2  # K_4 holds 2 disjoint spanning paths
    with pytest.raises(ValueError):
        max_edst_upper_bound(1)


@pytest.mark.parametrize("n", [3, 8])
def test_verify_all_pass(n):
    r = verify_all(cached_aq(n), cached_build(n))
    assert r.ok, r.summary()
    assert r.to_dict()["ok"] is True


def test_verify_all_reordered_trees(aq3, base):
    r = verify_all(aq3, dataclasses.replace(base, trees=base.trees[::-1]))
    assert not r.ok
    assert [f.check for f in r.failures()] == ["internal"]
    assert r.internal.data["failing_indices"][0] == 1


def test_verify_all_dimension_mismatch(base):
    with pytest.raises(ValueError):
        verify_all(cached_aq(4), base)


def _mutants(d):
    """Every single-edge deletion, insertion, and move between parts."""
    parts = [*d.trees, d.leftover]
    g = cached_aq(d.n)
    all_edges = [tuple(p) for p in g.edges.tolist()]

    def rebuild(new_parts):
        return dataclasses.replace(d, trees=tuple(new_parts[:-1]), leftover=new_parts[-1])

    for i, part in enumerate(parts):
        members = [tuple(p) for p in part.tolist()]
        for edge in members:
            deleted = list(parts)
            deleted[i] = without_edge(part, edge)
            yield rebuild(deleted)
            for j in range(len(parts)):
                if j != i:
                    moved = list(deleted)
                    moved[j] = with_edge(parts[j], edge)
                    yield rebuild(moved)
        for edge in all_edges:
            if edge not in members:
                added = list(parts)
                added[i] = with_edge(part, edge)
                yield rebuild(added)


@pytest.mark.parametrize("n", [3, 4])
def test_every_single_edge_mutation_caught(n):
    d = cached_build(n)
    g = cached_aq(n)
    count = 0
    for m in _mutants(d):
        assert not verify_all(g, m).ok
        count += 1
    assert count > 0


def test_tree_adjacency_shape(base):
    adj = tree_adjacency(base.trees[0])
    assert sorted(adj) == list(range(8))
    assert sum(map(len, adj.values())) == 14


@pytest.mark.parametrize("n", [8])
def test_sampled_path_disjointness(n):
    d = cached_build(n)
    adjs = [tree_adjacency(t) for t in d.trees]
    rng = random.Random(8)
    for _ in range(100):
        a_, c = rng.sample(range(2 ** n), 2)
        paths = [set(tree_path(adj, a_, c)) for adj in adjs]
        for p, q in combinations(paths, 2):
            assert not p & q
