"""Independent checks for edge-disjoint spanning tree decompositions of AQ_n.

Nothing here trusts the builder: every verdict is recomputed from edge arrays
with a disjoint-set forest, sorting, and breadth-first search.
"""

from __future__ import annotations

from collections import deque
from dataclasses import asdict, dataclass, field
from typing import TYPE_CHECKING, Any, Sequence

import numpy as np

from .aq_graph import AugmentedCube, canonical, edge_keys, keys_to_edges

if TYPE_CHECKING:
    from .edst_builder import Decomposition


class DisjointSet:
    """Union-find with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """Merge the sets of x and y; False if they were already joined (a cycle)."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True


@dataclass
class Verdict:
    check: str
    ok: bool
    message: str = ""
    data: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class VerificationReport:
    n: int
    tree_count: Verdict
    trees: list[Verdict]
    disjoint: Verdict
    partition: Verdict
    leftover: Verdict
    internal: Verdict

    @property
    def ok(self) -> bool:
        parts = [self.tree_count, *self.trees, self.disjoint, self.partition,
                 self.leftover, self.internal]
        return all(p.ok for p in parts)

    def failures(self) -> list[Verdict]:
        parts = [self.tree_count, *self.trees, self.disjoint, self.partition,
                 self.leftover, self.internal]
        return [p for p in parts if not p.ok]

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["ok"] = self.ok
        return d

    def summary(self) -> str:
        lines = [f"AQ_{self.n}: {'PASS' if self.ok else 'FAIL'}"]
        for v in [self.tree_count, *self.trees, self.disjoint, self.partition,
                  self.leftover, self.internal]:
            lines.append(f"  [{'ok' if v.ok else 'FAIL'}] {v.check}: {v.message}")
        return "\n".join(lines)


def _as_edges(edges) -> np.ndarray:
    return np.asarray(edges, dtype=np.int64).reshape(-1, 2)


def _pair(e) -> list[int]:
    return [int(e[0]), int(e[1])]


def check_spanning_tree(g: AugmentedCube, edges, name: str = "tree") -> Verdict:
    arr = _as_edges(edges)
    nv = g.num_vertices
    count = len(arr)
    data: dict[str, Any] = {"edge_count": count, "expected_edge_count": nv - 1}

    keys = edge_keys(np.sort(arr, axis=1))
    foreign = arr[~np.isin(keys, g.keys)]
    if len(foreign):
        data["foreign_edge"] = _pair(foreign[0])
        return Verdict(name, False, f"edge {data['foreign_edge']} is not an edge of AQ_{g.n}", data)

    dsu = DisjointSet(nv)
    cycle_edge = None
    for a, b in arr.tolist():
        if not dsu.union(a, b) and cycle_edge is None:
            cycle_edge = canonical(a, b)
    root = dsu.find(0)
    unreached = next((x for x in range(nv) if dsu.find(x) != root), None)

    problems = []
    if count != nv - 1:
        problems.append(f"edge count {count} != {nv - 1}")
    if cycle_edge is not None:
        data["cycle_edge"] = list(cycle_edge)
        problems.append(f"cycle closed by edge {list(cycle_edge)}")
    if unreached is not None:
        data["unreached_vertex"] = unreached
        problems.append(f"vertex {unreached} unreachable")
    data["acyclic"] = cycle_edge is None
    data["spanning"] = unreached is None
    if problems:
        return Verdict(name, False, "; ".join(problems), data)
    return Verdict(name, True, f"spanning tree with {count} edges", data)


def check_disjoint(trees: Sequence) -> Verdict:
    if not trees:
        return Verdict("disjoint", True, "no trees")
    keys = np.concatenate([edge_keys(np.sort(_as_edges(t), axis=1)) for t in trees])
    owner = np.concatenate([np.full(len(t), i) for i, t in enumerate(trees)])
    order = np.argsort(keys, kind="stable")
    ks, ow = keys[order], owner[order]
    dup = np.nonzero(ks[1:] == ks[:-1])[0]
    if len(dup):
        j = dup[0]
        edge = _pair(keys_to_edges(ks[j:j + 1])[0])
        i1, i2 = int(ow[j]), int(ow[j + 1])
        msg = f"edge {edge} shared by parts {i1 + 1} and {i2 + 1}"
        if i1 == i2:
            msg = f"edge {edge} repeated inside part {i1 + 1}"
        return Verdict("disjoint", False, msg, {"edge": edge, "parts": [i1 + 1, i2 + 1]})
    return Verdict("disjoint", True, f"{len(trees)} parts pairwise edge-disjoint")


def check_partition(g: AugmentedCube, d: Decomposition) -> Verdict:
    parts = [*d.trees, d.leftover]
    keys = np.concatenate([edge_keys(np.sort(_as_edges(p), axis=1)) for p in parts])
    uniq, counts = np.unique(keys, return_counts=True)
    doubly = keys_to_edges(uniq[counts > 1])
    uncovered = keys_to_edges(g.keys[~np.isin(g.keys, uniq)])
    foreign = keys_to_edges(uniq[~np.isin(uniq, g.keys)])
    expected_left = (1 << (g.n - 1)) + g.n - 1
    data: dict[str, Any] = {
        "graph_edges": g.num_edges,
        "covered_edges": int(len(keys)),
        "leftover_size": int(len(d.leftover)),
        "expected_leftover_size": expected_left,
        "uncovered": [_pair(e) for e in uncovered[:10]],
        "doubly_covered": [_pair(e) for e in doubly[:10]],
        "foreign": [_pair(e) for e in foreign[:10]],
    }
    problems = []
    if len(uncovered):
        problems.append(f"{len(uncovered)} uncovered edge(s), first {data['uncovered'][0]}")
    if len(doubly):
        problems.append(f"{len(doubly)} doubly covered edge(s), first {data['doubly_covered'][0]}")
    if len(foreign):
        problems.append(f"{len(foreign)} foreign edge(s), first {data['foreign'][0]}")
    if len(d.leftover) != expected_left:
        problems.append(f"leftover size {len(d.leftover)} != {expected_left}")
    if problems:
        return Verdict("partition", False, "; ".join(problems), data)
    return Verdict("partition", True,
                   f"{len(d.trees)} trees + leftover({len(d.leftover)}) = {g.num_edges} edges", data)


def check_leftover(d: Decomposition) -> Verdict:
    arr = _as_edges(d.leftover)
    support = np.unique(arr)
    expected = np.unique(np.asarray(list(d.labeling.u) + list(d.labeling.v[:d.n]), dtype=np.int64))
    extra = np.setdiff1d(support, expected)
    missing = np.setdiff1d(expected, support)

    index = {int(x): i for i, x in enumerate(support.tolist())}
    dsu = DisjointSet(len(support))
    cycle_edge = None
    for a, b in arr.tolist():
        if not dsu.union(index[a], index[b]) and cycle_edge is None:
            cycle_edge = canonical(a, b)
    roots = {dsu.find(i) for i in range(len(support))}

    data: dict[str, Any] = {
        "support_size": int(len(support)),
        "expected_support_size": (1 << (d.n - 1)) + d.n,
        "extra_vertices": extra[:10].tolist(),
        "missing_vertices": missing[:10].tolist(),
        "components": len(roots),
    }
    problems = []
    if cycle_edge is not None:
        data["cycle_edge"] = list(cycle_edge)
        problems.append(f"cycle closed by edge {list(cycle_edge)}")
    if len(roots) > 1:
        problems.append(f"support splits into {len(roots)} components")
    if len(extra):
        problems.append(f"touches vertex {int(extra[0])} outside u ∪ {{v_1..v_{d.n}}}")
    if len(missing):
        problems.append(f"misses vertex {int(missing[0])}")
    if problems:
        return Verdict("leftover", False, "; ".join(problems), data)
    return Verdict("leftover", True, f"tree on {len(support)} vertices", data)


def check_internal_vertices(d: Decomposition) -> Verdict:
    degrees = []
    failing = []
    for i, tree in enumerate(d.trees, start=1):
        vi = d.labeling.v[i - 1]
        deg = int(np.count_nonzero(_as_edges(tree) == vi))
        degrees.append(deg)
        if deg < 2:
            failing.append(i)
    data = {"degrees": degrees, "failing_indices": failing}
    if failing:
        i = failing[0]
        return Verdict("internal", False,
                       f"v_{i} = {d.labeling.v[i - 1]} has degree {degrees[i - 1]} in T_{i}", data)
    return Verdict("internal", True, f"v_i internal in T_i for i = 1..{len(d.trees)}", data)


def tree_adjacency(tree) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for a, b in _as_edges(tree).tolist():
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    return adj


def tree_path(tree, a: int, b: int) -> list[tuple[int, int]]:
    """Edges of the unique a-b path in ``tree``, in walking order, each canonical."""
    if a == b:
        raise ValueError("tree_path needs two distinct vertices")
    adj = tree if isinstance(tree, dict) else tree_adjacency(tree)
    for x in (a, b):
        if x not in adj:
            raise ValueError(f"vertex {x} is not in the tree")
    prev = {a: a}
    queue = deque([a])
    while queue and b not in prev:
        x = queue.popleft()
        for y in adj[x]:
            if y not in prev:
                prev[y] = x
                queue.append(y)
    if b not in prev:
        raise ValueError(f"no path from {a} to {b}")
    path = []
    x = b
    while x != a:
        path.append(canonical(prev[x], x))
        x = prev[x]
    path.reverse()
    return path


def max_edst_upper_bound(n: int) -> int:
    """Edge-count bound on pairwise edge-disjoint spanning trees in AQ_n."""
    if n < 2:
        raise ValueError("upper bound defined for n >= 2")
    return ((2 * n - 1) << (n - 1)) // ((1 << n) - 1)


def verify_all(g: AugmentedCube, d: Decomposition) -> VerificationReport:
    if g.n != d.n:
        raise ValueError(f"dimension mismatch: graph AQ_{g.n}, decomposition n={d.n}")
    bound = max_edst_upper_bound(g.n)
    count_ok = len(d.trees) == g.n - 1 == bound
    tree_count = Verdict("tree_count", count_ok,
                         f"{len(d.trees)} trees, n-1 = {g.n - 1}, bound = {bound}",
                         {"trees": len(d.trees), "bound": bound})
    trees = [check_spanning_tree(g, t, name=f"T_{i}") for i, t in enumerate(d.trees, start=1)]
    return VerificationReport(
        n=g.n,
        tree_count=tree_count,
        trees=trees,
        disjoint=check_disjoint([*d.trees, d.leftover]),
        partition=check_partition(g, d),
        leftover=check_leftover(d),
        internal=check_internal_vertices(d),
    )
