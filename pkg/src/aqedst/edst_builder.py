"""Inductive construction of n-1 edge-disjoint spanning trees in AQ_n.

A :class:`Decomposition` carries the n-1 trees, the leftover tree made of
every edge the trees do not use, and a u/v labeling of the vertices:

* the leftover tree spans exactly ``u_1..u_{2^{n-1}}`` and ``v_1..v_n``,
* ``v_i`` has degree at least 2 in ``T_i`` for ``i <= n-1``.

``extend`` turns a decomposition of AQ_n into one of AQ_{n+1} by working on
the two copies ``0·AQ_n`` and ``1·AQ_n`` (``1·x`` sets bit n of ``x``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .aq_graph import DEFAULT_MAX_DIM, build_aq, canonical_array, check_dimension, from_bits
from .verifier import VerificationReport, verify_all


class ConstructionError(RuntimeError):
    """The builder produced (or was handed) a decomposition that fails verification."""

    def __init__(self, message: str, report: VerificationReport | None = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class Labeling:
    u: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        if len(self.u) != len(self.v):
            raise ValueError("u and v must have the same length")
        if len(set(self.u) | set(self.v)) != 2 * len(self.u):
            raise ValueError("u and v must be disjoint lists of distinct vertices")


@dataclass(frozen=True, eq=False)
class Decomposition:
    n: int
    trees: tuple[np.ndarray, ...]
    leftover: np.ndarray
    labeling: Labeling

    def __eq__(self, other) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return (
            self.n == other.n
            and self.labeling == other.labeling
            and len(self.trees) == len(other.trees)
            and all(np.array_equal(a, b) for a, b in zip(self.trees, other.trees))
            and np.array_equal(self.leftover, other.leftover)
        )

    __hash__ = None

    def tree_sets(self) -> list[set[tuple[int, int]]]:
        return [{(a, b) for a, b in t.tolist()} for t in self.trees]

    def leftover_set(self) -> set[tuple[int, int]]:
        return {(a, b) for a, b in self.leftover.tolist()}

    def __repr__(self) -> str:
        sizes = ", ".join(str(len(t)) for t in self.trees)
        return f"Decomposition(n={self.n}, trees=[{sizes}], leftover={len(self.leftover)})"


def _edges(*pairs: str) -> np.ndarray:
    return canonical_array([[from_bits(a), from_bits(b)] for a, b in (p.split("-") for p in pairs)])


BASE_T1 = ("000-010", "010-011", "010-110", "110-101", "011-111", "000-100", "001-101")
BASE_T2 = ("000-001", "001-011", "001-010", "011-100", "100-110", "100-101", "100-111")
BASE_T3 = ("101-111", "110-111", "000-111", "001-110", "010-101", "000-011")
BASE_V = ("000", "001", "010", "100")
BASE_U = ("011", "101", "110", "111")


def _verified(d: Decomposition, what: str) -> Decomposition:
    report = verify_all(build_aq(d.n, max_dim=max(d.n, DEFAULT_MAX_DIM)), d)
    if not report.ok:
        first = report.failures()[0]
        raise ConstructionError(f"{what} failed verification: {first.check}: {first.message}", report)
    return d


def base_decomposition() -> Decomposition:
    """The hand-built decomposition of AQ_3: two spanning trees plus a 6-edge leftover tree."""
    d = Decomposition(
        n=3,
        trees=(_edges(*BASE_T1), _edges(*BASE_T2)),
        leftover=_edges(*BASE_T3),
        labeling=Labeling(u=tuple(map(from_bits, BASE_U)), v=tuple(map(from_bits, BASE_V))),
    )
    return _verified(d, "base decomposition")


def _extend(d: Decomposition) -> Decomposition:
    n = d.n
    half = 1 << n  # size of each copy in AQ_{n+1}
    u = np.asarray(d.labeling.u, dtype=np.int64)
    v = np.asarray(d.labeling.v, dtype=np.int64)

    def rung(xs) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        return np.stack([xs, xs + half], axis=1)

    t = d.trees
    trees = []
    # copies of T_i joined by the hypercube rung at v_i
    for i in range(n - 2):
        trees.append(np.concatenate([t[i], t[i] + half, rung([v[i]])]))
    # copy 0 of T_{n-1} plus every complement cross edge
    c0 = np.arange(half, dtype=np.int64)
    trees.append(np.concatenate([t[n - 2], np.stack([c0, c0 ^ (2 * half - 1)], axis=1)]))
    # copy 1 of T_{n-1}, rungs at v_n..v_{2^{n-1}}, and copy 0 of the leftover tree
    trees.append(np.concatenate([t[n - 2] + half, rung(v[n - 1:]), d.leftover]))
    leftover = np.concatenate([d.leftover + half, rung([v[n - 2]]), rung(u)])

    v1 = v + half
    head = [*v1[: n - 2].tolist(), int(v[n - 2]), int(v1[n - 2]), int(v1[n - 1])]
    rest = sorted([int(x) for i, x in enumerate(v.tolist()) if i != n - 2] + v1[n:].tolist())
    labeling = Labeling(
        u=tuple(u.tolist()) + tuple((u + half).tolist()),
        v=tuple(head + rest),
    )
    return Decomposition(
        n=n + 1,
        trees=tuple(canonical_array(x) for x in trees),
        leftover=canonical_array(leftover),
        labeling=labeling,
    )


def extend(d: Decomposition, max_dim: int = DEFAULT_MAX_DIM) -> Decomposition:
    """Lift a verified decomposition of AQ_n to one of AQ_{n+1}."""
    check_dimension(d.n + 1, max_dim, min_dim=4)
    report = verify_all(build_aq(d.n, max_dim=max_dim), d)
    if not report.ok:
        first = report.failures()[0]
        raise ConstructionError(f"input decomposition invalid: {first.check}: {first.message}", report)
    return _verified(_extend(d), f"extension to AQ_{d.n + 1}")


def build(n: int, max_dim: int = DEFAULT_MAX_DIM, verify: bool = True) -> Decomposition:
    """Decomposition of AQ_n for ``n >= 3``: the base case extended n-3 times.

    With ``verify`` every intermediate result is checked; each check also
    serves as the precondition of the next step.
    """
    check_dimension(n, max_dim, min_dim=3)
    d = base_decomposition()
    for _ in range(n - 3):
        d = _extend(d)
        if verify:
            _verified(d, f"extension to AQ_{d.n}")
    return d
