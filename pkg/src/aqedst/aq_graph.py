"""The n-dimensional augmented cube AQ_n.

Vertices are integers ``0 .. 2**n - 1``. The leftmost character of a vertex's
bit string is its most significant bit, so the outermost copy selector is the
MSB and copy 0 of AQ_n is exactly the vertices below ``2**(n-1)``.

Every edge is introduced by exactly one recursion level ``l``:

* hypercube edge at level ``l``: the endpoints differ only in bit ``l - 1``
  (counting from the least significant bit),
* complement edge at level ``l >= 2``: the endpoints differ in bits
  ``0 .. l - 1`` and agree above them.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple

import numpy as np

DEFAULT_MAX_DIM = 20


class SizeLimitError(ValueError):
    """Requested dimension is outside the supported range."""


class Kind(enum.Enum):
    HYPERCUBE = "hypercube"
    COMPLEMENT = "complement"


@dataclass(frozen=True, order=True)
class EdgeKind:
    kind: Kind
    level: int

    def __str__(self) -> str:
        return f"{self.kind.value}({self.level})"


Edge = tuple[int, int]


def check_dimension(n: int, max_dim: int = DEFAULT_MAX_DIM, min_dim: int = 1) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise TypeError(f"dimension must be an integer, got {n!r}")
    if n < min_dim:
        raise SizeLimitError(f"dimension {n} below minimum {min_dim}")
    if n > max_dim:
        raise SizeLimitError(f"dimension {n} exceeds configured maximum {max_dim}")


def _check_vertex(n: int, x: int) -> None:
    if not 0 <= x < (1 << n):
        raise ValueError(f"vertex {x} out of range for AQ_{n}")


def to_bits(x: int, n: int) -> str:
    return format(x, f"0{n}b")


def from_bits(s: str, n: int | None = None) -> int:
    if not s or any(c not in "01" for c in s):
        raise ValueError(f"malformed bit string {s!r}")
    if n is not None and len(s) != n:
        raise ValueError(f"bit string {s!r} has length {len(s)}, expected {n}")
    return int(s, 2)


def canonical(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def edge_keys(edges: np.ndarray) -> np.ndarray:
    """Pack an ``(m, 2)`` edge array into sortable int64 keys."""
    edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    return (edges[:, 0] << 32) | edges[:, 1]


def keys_to_edges(keys: np.ndarray) -> np.ndarray:
    keys = np.asarray(keys, dtype=np.int64)
    return np.stack([keys >> 32, keys & 0xFFFFFFFF], axis=1)


def canonical_array(edges) -> np.ndarray:
    """Return edges as a sorted, read-only ``(m, 2)`` int64 array with a < b."""
    arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    arr = np.sort(arr, axis=1)
    arr = arr[np.argsort(edge_keys(arr), kind="stable")]
    arr.setflags(write=False)
    return arr


def hypercube_partner(n: int, x: int, level: int) -> int:
    _check_vertex(n, x)
    if not 1 <= level <= n:
        raise ValueError(f"hypercube level {level} out of range 1..{n}")
    return x ^ (1 << (level - 1))


def complement_partner(n: int, x: int, level: int) -> int:
    _check_vertex(n, x)
    if not 2 <= level <= n:
        raise ValueError(f"complement level {level} out of range 2..{n}")
    return x ^ ((1 << level) - 1)


def classify_pair(n: int, x: int, y: int) -> EdgeKind | None:
    """Classify the pair ``{x, y}`` in AQ_n; ``None`` when not adjacent."""
    _check_vertex(n, x)
    _check_vertex(n, y)
    if x == y:
        raise ValueError(f"classify_pair needs distinct vertices, got {x} twice")
    d = x ^ y
    level = d.bit_length()
    if d == 1 << (level - 1):
        return EdgeKind(Kind.HYPERCUBE, level)
    if level >= 2 and d == (1 << level) - 1:
        return EdgeKind(Kind.COMPLEMENT, level)
    return None


def neighbor_masks(n: int) -> list[int]:
    """XOR masks generating every neighbour of a vertex in AQ_n."""
    masks = [1 << (lv - 1) for lv in range(1, n + 1)]
    masks += [(1 << lv) - 1 for lv in range(2, n + 1)]
    return masks


class CopySplit(NamedTuple):
    copy0: range
    copy1: range
    hypercube_cross: np.ndarray
    complement_cross: np.ndarray


@dataclass(frozen=True, eq=False)
class AugmentedCube:
    """Immutable AQ_n with edges sorted canonically and classified.

    ``edges[i]`` has kind ``kinds[i]`` (0 hypercube, 1 complement) introduced
    at recursion level ``levels[i]``.
    """

    n: int
    edges: np.ndarray
    kinds: np.ndarray
    levels: np.ndarray

    @property
    def num_vertices(self) -> int:
        return 1 << self.n

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.num_vertices)

    @cached_property
    def keys(self) -> np.ndarray:
        k = edge_keys(self.edges)
        k.setflags(write=False)
        return k

    @cached_property
    def _masks(self) -> list[int]:
        return neighbor_masks(self.n) if self.n >= 2 else [1]

    def neighbors(self, x: int) -> list[int]:
        _check_vertex(self.n, x)
        return sorted(x ^ m for m in self._masks)

    def degree(self, x: int) -> int:
        return len(self.neighbors(x))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        # materialised on demand only; neighbors() is cheaper at large n
        return {x: frozenset(self.neighbors(x)) for x in self.vertices()}

    def has_edge(self, a: int, b: int) -> bool:
        if a == b or not (0 <= a < self.num_vertices and 0 <= b < self.num_vertices):
            return False
        return classify_pair(self.n, a, b) is not None

    def edge_kind(self, a: int, b: int) -> EdgeKind | None:
        return classify_pair(self.n, a, b)

    def iter_edges(self) -> Iterator[tuple[Edge, EdgeKind]]:
        for (a, b), k, lv in zip(self.edges.tolist(), self.kinds.tolist(), self.levels.tolist()):
            yield (a, b), EdgeKind(Kind.COMPLEMENT if k else Kind.HYPERCUBE, lv)

    def edge_set(self) -> set[Edge]:
        return {(a, b) for a, b in self.edges.tolist()}

    def class_counts(self) -> dict[EdgeKind, int]:
        out: dict[EdgeKind, int] = {}
        for k, lv in zip(self.kinds.tolist(), self.levels.tolist()):
            ek = EdgeKind(Kind.COMPLEMENT if k else Kind.HYPERCUBE, lv)
            out[ek] = out.get(ek, 0) + 1
        return out

    def __repr__(self) -> str:
        return f"AugmentedCube(n={self.n}, vertices={self.num_vertices}, edges={self.num_edges})"


def _cross_edges(n: int, level: int, complement: bool) -> np.ndarray:
    xs = np.arange(1 << n, dtype=np.int64)
    low = xs[((xs >> (level - 1)) & 1) == 0]
    mask = (1 << level) - 1 if complement else 1 << (level - 1)
    # flipped bit level-1 goes 0 -> 1 and is the highest changed bit, so low < partner
    return np.stack([low, low ^ mask], axis=1)


def build_aq(n: int, max_dim: int = DEFAULT_MAX_DIM) -> AugmentedCube:
    """Build AQ_n level by level: level ``l`` joins the two AQ_{l-1} copies
    inside every AQ_l block."""
    check_dimension(n, max_dim)
    parts, kinds, levels = [], [], []
    for level in range(1, n + 1):
        for complement in (False, True) if level >= 2 else (False,):
            e = _cross_edges(n, level, complement)
            parts.append(e)
            kinds.append(np.full(len(e), int(complement), dtype=np.int8))
            levels.append(np.full(len(e), level, dtype=np.int8))
    edges = np.concatenate(parts)
    kind_arr = np.concatenate(kinds)
    level_arr = np.concatenate(levels)
    order = np.argsort(edge_keys(edges), kind="stable")
    edges, kind_arr, level_arr = edges[order], kind_arr[order], level_arr[order]
    for arr in (edges, kind_arr, level_arr):
        arr.setflags(write=False)
    return AugmentedCube(n, edges, kind_arr, level_arr)


def split_copies(g: AugmentedCube) -> CopySplit:
    """Split AQ_n into its two AQ_{n-1} copies and the E^h_n / E^c_n cross edges."""
    if g.n < 2:
        raise ValueError("split_copies needs n >= 2")
    half = 1 << (g.n - 1)
    top = g.levels == g.n
    return CopySplit(
        range(0, half),
        range(half, 2 * half),
        g.edges[top & (g.kinds == 0)],
        g.edges[top & (g.kinds == 1)],
    )


def diameter(g: AugmentedCube, block: int = 1024) -> int:
    """Exact diameter by breadth-first search from every source.

    Sources are processed in blocks as rows of a boolean reachability matrix;
    one BFS round ORs in the matrix permuted by each neighbour mask.
    """
    nv = g.num_vertices
    if nv == 1:
        return 0
    xs = np.arange(nv)
    perms = [xs ^ m for m in g._masks]
    best = 0
    for start in range(0, nv, block):
        src = np.arange(start, min(start + block, nv))
        reach = np.zeros((len(src), nv), dtype=bool)
        reach[np.arange(len(src)), src] = True
        depth = 0
        while not reach.all():
            nxt = reach.copy()
            for p in perms:
                nxt |= reach[:, p]
            if (nxt == reach).all():
                raise RuntimeError("graph is disconnected")
            reach = nxt
            depth += 1
        best = max(best, depth)
    return best
