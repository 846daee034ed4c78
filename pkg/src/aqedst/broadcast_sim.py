"""Broadcast over edge-disjoint spanning trees under link failures.

A source floods a message along each tree separately. With m pairwise
edge-disjoint spanning trees, any m-1 failed links leave at least one tree
intact, so the message still reaches everyone.

Sampling uses numpy's PCG64 generator seeded through ``SeedSequence``, which
is splittable; a given seed always produces the same failure sets.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .aq_graph import build_aq, canonical
from .edst_builder import Decomposition
from .verifier import tree_adjacency

DEFAULT_BUDGET = 2_000_000


class BudgetExceeded(ValueError):
    """Exhaustive enumeration would exceed the configured budget."""


def failure_set(edges: Iterable) -> frozenset[tuple[int, int]]:
    return frozenset(canonical(int(a), int(b)) for a, b in edges)


def _flood(adj: dict[int, list[int]], source: int, failed: frozenset) -> set[int]:
    seen = {source}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in adj.get(x, ()):
            if y not in seen and canonical(x, y) not in failed:
                seen.add(y)
                queue.append(y)
    return seen


def deliver(tree, source: int, failed: Iterable = ()) -> frozenset[int]:
    """Vertices reached from ``source`` along ``tree`` with the failed links removed."""
    adj = tree if isinstance(tree, dict) else tree_adjacency(tree)
    if source not in adj:
        raise ValueError(f"source {source} is not a vertex of the tree")
    failed = failed if isinstance(failed, frozenset) else failure_set(failed)
    return frozenset(_flood(adj, source, failed))


@dataclass
class BroadcastOutcome:
    source: int
    reached: list[frozenset[int]]
    intact: list[bool]
    delivered: bool
    union_delivered: bool

    @property
    def intact_count(self) -> int:
        return sum(self.intact)


class Broadcaster:
    """Caches per-tree adjacency for repeated simulations on one decomposition."""

    def __init__(self, d: Decomposition):
        self.d = d
        self.num_vertices = 1 << d.n
        self.adj = [tree_adjacency(t) for t in d.trees]
        self.tree_sets = d.tree_sets()
        union: dict[int, list[int]] = {}
        for a in self.adj:
            for x, ys in a.items():
                union.setdefault(x, []).extend(ys)
        self.union_adj = union

    def simulate(self, source: int, failed: Iterable = ()) -> BroadcastOutcome:
        if not 0 <= source < self.num_vertices:
            raise ValueError(f"source {source} out of range for AQ_{self.d.n}")
        failed = failed if isinstance(failed, frozenset) else failure_set(failed)
        reached = [frozenset(_flood(a, source, failed)) for a in self.adj]
        intact = [not (ts & failed) for ts in self.tree_sets]
        everyone = self.num_vertices
        delivered = any(len(r) == everyone for r in reached)
        union_delivered = delivered or len(_flood(self.union_adj, source, failed)) == everyone
        return BroadcastOutcome(source, reached, intact, delivered, union_delivered)


def simulate(d: Decomposition, source: int, failed: Iterable = ()) -> BroadcastOutcome:
    return Broadcaster(d).simulate(source, failed)


@dataclass
class FaultCheckResult:
    n: int
    k: int
    ok: bool
    subsets: int
    sources: int
    cases: int
    undelivered_cases: int = 0
    union_undelivered_cases: int = 0
    subsets_cutting_every_tree: int = 0
    first_failure: dict | None = None

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def exhaustive_fault_check(d: Decomposition, k: int, budget: int = DEFAULT_BUDGET) -> FaultCheckResult:
    """Fail every k-subset of links and broadcast from every source."""
    g = build_aq(d.n, max_dim=max(d.n, 20))
    m = g.num_edges
    if not 0 <= k <= m:
        raise ValueError(f"k={k} outside 0..{m}")
    subsets = math.comb(m, k)
    if subsets > budget:
        raise BudgetExceeded(
            f"C({m}, {k}) = {subsets} failure sets exceeds budget {budget}; use monte_carlo")
    b = Broadcaster(d)
    edges = [tuple(e) for e in g.edges.tolist()]
    res = FaultCheckResult(d.n, k, True, subsets, b.num_vertices, subsets * b.num_vertices)
    for combo in combinations(edges, k):
        failed = frozenset(combo)
        cut_all = True
        for s in range(b.num_vertices):
            out = b.simulate(s, failed)
            cut_all = cut_all and out.intact_count == 0
            if not out.delivered:
                res.undelivered_cases += 1
                if res.first_failure is None:
                    res.first_failure = {"source": s, "failed": [list(e) for e in combo]}
            if not out.union_delivered:
                res.union_undelivered_cases += 1
        res.subsets_cutting_every_tree += cut_all
    res.ok = res.undelivered_cases == 0
    return res


@dataclass
class ReliabilityStats:
    n: int
    k: int
    trials: int
    seed: int
    source: int
    delivered: int = 0
    union_delivered: int = 0
    with_intact_tree: int = 0
    intact_histogram: dict[int, int] = field(default_factory=dict)

    @property
    def delivered_fraction(self) -> float:
        return self.delivered / self.trials

    @property
    def union_delivered_fraction(self) -> float:
        return self.union_delivered / self.trials

    @property
    def intact_fraction(self) -> float:
        return self.with_intact_tree / self.trials

    def to_dict(self) -> dict:
        out = dict(self.__dict__)
        out["intact_histogram"] = {str(k): v for k, v in sorted(self.intact_histogram.items())}
        out["delivered_fraction"] = self.delivered_fraction
        out["union_delivered_fraction"] = self.union_delivered_fraction
        out["intact_fraction"] = self.intact_fraction
        return out


def monte_carlo(d: Decomposition, k: int, trials: int, seed: int, source: int = 0) -> ReliabilityStats:
    """Broadcast under ``trials`` uniformly sampled k-link failure sets."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    g = build_aq(d.n, max_dim=max(d.n, 20))
    m = g.num_edges
    if not 0 <= k <= m:
        raise ValueError(f"k={k} outside 0..{m} (AQ_{d.n} has {m} edges)")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    edges = [tuple(e) for e in g.edges.tolist()]
    b = Broadcaster(d)
    stats = ReliabilityStats(d.n, k, trials, seed, source)
    for _ in range(trials):
        picked = rng.choice(m, size=k, replace=False)
        out = b.simulate(source, frozenset(edges[i] for i in picked.tolist()))
        stats.delivered += out.delivered
        stats.union_delivered += out.union_delivered
        stats.with_intact_tree += out.intact_count > 0
        stats.intact_histogram[out.intact_count] = stats.intact_histogram.get(out.intact_count, 0) + 1
    return stats
