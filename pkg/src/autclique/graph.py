"""Undirected simple graphs on vertices 0..n-1 backed by a boolean adjacency matrix."""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

#: Largest vertex count accepted by any constructor or parser.
MAX_VERTICES = 4096


class GraphError(ValueError):
    """Raised for malformed graphs or invalid vertex references."""


class Graph:
    """Immutable undirected simple graph.

    The adjacency matrix is symmetric with a false diagonal; it is stored
    read-only so a ``Graph`` can be shared freely.
    """

    def __init__(self, adj: np.ndarray, *, max_vertices: int | None = None) -> None:
        a = np.array(adj, dtype=bool, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphError(f"adjacency must be square, got shape {a.shape}")
        cap = MAX_VERTICES if max_vertices is None else max_vertices
        if a.shape[0] > cap:
            raise GraphError(f"{a.shape[0]} vertices exceeds the limit of {cap}")
        if a.diagonal().any():
            raise GraphError("loops are not allowed")
        if not np.array_equal(a, a.T):
            raise GraphError("adjacency must be symmetric")
        a.setflags(write=False)
        self.n: int = int(a.shape[0])
        self.adj: np.ndarray = a

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        if n > MAX_VERTICES:
            raise GraphError(f"{n} vertices exceeds the limit of {MAX_VERTICES}")
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            a[u, v] = a[v, u] = True
        return cls(a)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.adj, other.adj))

    def __hash__(self) -> int:
        return hash((self.n, np.packbits(self.adj).tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"

    @cached_property
    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(int(d) for d in self.adj.sum(axis=1))

    @cached_property
    def rows(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitsets: bit ``v`` of ``rows[u]`` is set iff u~v."""
        packed = np.packbits(self.adj, axis=1, bitorder="little")
        return tuple(int.from_bytes(row.tobytes(), "little") for row in packed)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def neighbors(self, v: int) -> list[int]:
        return np.flatnonzero(self.adj[v]).tolist()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        us, vs = np.nonzero(np.triu(self.adj, 1))
        return zip(us.tolist(), vs.tolist())


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    return Graph(~np.eye(n, dtype=bool))


def empty_graph(n: int) -> Graph:
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    return Graph(np.zeros((n, n), dtype=bool))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("a path needs at least one vertex")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least three vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complement(g: Graph) -> Graph:
    a = ~g.adj
    np.fill_diagonal(a, False)
    return Graph(a)


def is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = np.zeros(g.n, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        fresh = g.adj[u] & ~seen
        seen |= fresh
        queue.extend(np.flatnonzero(fresh).tolist())
    return bool(seen.all())


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled in increasing order."""
    s = sorted(set(vertices))
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    idx = np.asarray(s, dtype=np.intp)
    return Graph(g.adj[np.ix_(idx, idx)])


def relabel(g: Graph, images: Iterable[int]) -> Graph:
    """Graph whose edge ``images[u] images[v]`` exists iff ``uv`` is an edge of ``g``."""
    p = np.asarray(list(images), dtype=np.intp)
    if sorted(p.tolist()) != list(range(g.n)):
        raise GraphError("relabelling must be a permutation of the vertices")
    inv = np.empty_like(p)
    inv[p] = np.arange(g.n)
    return Graph(g.adj[np.ix_(inv, inv)])
