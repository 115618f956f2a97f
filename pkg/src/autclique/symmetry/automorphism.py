"""Automorphism groups of graphs.

Two independent routes are provided: :func:`aut_brute_force` filters every
permutation of a small vertex set, and :func:`aut_group` runs an
individualization-refinement search that returns a strong generating set
together with the group order (product of basic orbit lengths).
"""

from __future__ import annotations

from collections import deque
from itertools import islice, permutations
from typing import Iterable, Sequence

import numpy as np

from .._util import recursion_headroom
from ..graph import Graph
from .groups import PermGroup
from .perm import Permutation, PermutationError, identity

#: Largest vertex count accepted by :func:`aut_brute_force`.
BRUTE_FORCE_CAP = 8


class GraphTooLarge(ValueError):
    pass


def is_automorphism(g: Graph, p: Permutation) -> bool:
    if p.degree != g.n:
        raise PermutationError(f"permutation degree {p.degree} != vertex count {g.n}")
    idx = np.asarray(p.images, dtype=np.intp)
    return bool(np.array_equal(g.adj[np.ix_(idx, idx)], g.adj))


def aut_brute_force(g: Graph, cap: int = BRUTE_FORCE_CAP) -> PermGroup:
    """Every automorphism of ``g``, found by testing all ``n!`` permutations."""
    n = g.n
    if n > cap:
        raise GraphTooLarge(f"brute force is limited to {cap} vertices, got {n}")
    if n == 0:
        return PermGroup(0, (identity(0),), 1)
    adj = g.adj
    found: list[Permutation] = []
    perms = permutations(range(n))
    while True:
        chunk = np.array(list(islice(perms, 4096)), dtype=np.intp).reshape(-1, n)
        if len(chunk) == 0:
            break
        mapped = adj[chunk[:, :, None], chunk[:, None, :]]
        ok = (mapped == adj).reshape(len(chunk), -1).all(axis=1)
        found.extend(Permutation(tuple(row)) for row in chunk[ok].tolist())
    return PermGroup(n, tuple(found), len(found))


class _Partition:
    """Ordered partition stored nauty-style.

    ``lab`` lists the vertices so that each cell is a contiguous segment;
    a cell is named by its start position, which is what makes cell order
    independent of vertex labels. ``cell[v]`` is the start of v's cell and
    ``end[s]`` is one past the last position of the cell starting at ``s``.
    """

    __slots__ = ("lab", "cell", "end", "count")

    def __init__(self, lab: np.ndarray, cell: np.ndarray, end: np.ndarray, count: int) -> None:
        self.lab = lab
        self.cell = cell
        self.end = end
        self.count = count

    @classmethod
    def from_cells(cls, n: int, cells: Sequence[Sequence[int]]) -> _Partition:
        lab = np.empty(n, dtype=np.intp)
        cell = np.empty(n, dtype=np.intp)
        end = np.zeros(n + 1, dtype=np.intp)
        pos = 0
        for members in cells:
            members = sorted(members)
            if not members:
                continue
            lab[pos:pos + len(members)] = members
            cell[members] = pos
            end[pos] = pos + len(members)
            pos += len(members)
        if pos != n or len(set(lab.tolist())) != n:
            raise ValueError("coloring must cover every vertex exactly once")
        return cls(lab, cell, end, sum(1 for c in cells if len(c)))

    def copy(self) -> _Partition:
        return _Partition(self.lab.copy(), self.cell.copy(), self.end.copy(), self.count)

    @property
    def discrete(self) -> bool:
        return self.count == len(self.lab)

    def starts(self) -> list[int]:
        return sorted(set(self.cell.tolist()))

    def members(self, start: int) -> np.ndarray:
        return self.lab[start:self.end[start]]

    def cells(self) -> list[list[int]]:
        return [sorted(self.members(s).tolist()) for s in self.starts()]

    def shape(self) -> bytes:
        return self.end.tobytes()

    def target_cell(self) -> int:
        """Start of the first smallest non-singleton cell."""
        best, best_size = -1, None
        for s in self.starts():
            size = self.end[s] - s
            if size > 1 and (best_size is None or size < best_size):
                best, best_size = s, size
        return best


def _refine(adj: np.ndarray, part: _Partition, splitters: Iterable[int]) -> _Partition:
    """Refine ``part`` in place to the coarsest equitable partition below it.

    Each splitter cell splits every other cell by neighbour count; fragments
    are ordered by increasing count and re-queued as splitters.
    """
    n = len(part.lab)
    queue = deque(splitters)
    queued = set(queue)
    lab, cell, end = part.lab, part.cell, part.end
    while queue and part.count < n:
        s = queue.popleft()
        queued.discard(s)
        counts = adj[:, lab[s:end[s]]].sum(axis=1)
        starts = np.flatnonzero(np.bincount(cell, minlength=n))
        in_order = counts[lab]
        lo = np.minimum.reduceat(in_order, starts)
        hi = np.maximum.reduceat(in_order, starts)
        for x in starts[lo != hi].tolist():
            e = int(end[x])
            seg = lab[x:e]
            c = counts[seg]
            order = np.lexsort((seg, c))
            seg, c = seg[order], c[order]
            lab[x:e] = seg
            breaks = (np.flatnonzero(np.diff(c)) + 1 + x).tolist()
            bounds = [x] + breaks + [e]
            for a, b in zip(bounds, bounds[1:]):
                cell[lab[a:b]] = a
                end[a] = b
                if a not in queued:
                    queue.append(a)
                    queued.add(a)
            part.count += len(breaks)
    return part


def _individualize(adj: np.ndarray, part: _Partition, v: int) -> _Partition:
    child = part.copy()
    s = int(child.cell[v])
    e = int(child.end[s])
    seg = child.lab[s:e]
    rest = seg[seg != v]
    child.lab[s] = v
    child.lab[s + 1:e] = rest
    child.end[s] = s + 1
    child.end[s + 1] = e
    child.cell[rest] = s + 1
    child.count += 1
    return _refine(adj, child, [s])


def equitable_refinement(g: Graph, coloring: Sequence[Sequence[int]] | None = None) -> list[list[int]]:
    """Coarsest equitable partition refining ``coloring`` (unit partition by default).

    Cells come back in a label-independent order with their members sorted.
    """
    if coloring is None:
        coloring = [range(g.n)] if g.n else []
    part = _Partition.from_cells(g.n, [list(c) for c in coloring])
    adj = g.adj.astype(np.int32)
    return _refine(adj, part, part.starts()).cells()


def _orbit(v: int, gens: Sequence[Permutation]) -> set[int]:
    orbit = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for x in frontier:
            for p in gens:
                y = p.images[x]
                if y not in orbit:
                    orbit.add(y)
                    nxt.append(y)
        frontier = nxt
    return orbit


class _Search:
    def __init__(self, g: Graph) -> None:
        self.g = g
        self.adj = g.adj.astype(np.int32)
        root = _Partition.from_cells(g.n, [range(g.n)])
        root = _refine(self.adj, root, root.starts())
        self.path = [root]
        self.fixed: list[int] = []
        node = root
        while not node.discrete:
            t = node.target_cell()
            v = int(node.members(t).min())
            node = _individualize(self.adj, node, v)
            self.fixed.append(v)
            self.path.append(node)
        self.leaf = node.lab.copy()

    def _leaf_map(self, lab: np.ndarray) -> Permutation:
        images = np.empty(self.g.n, dtype=np.intp)
        images[self.leaf] = lab
        return Permutation(tuple(images.tolist()))

    def _descend(self, node: _Partition, depth: int) -> Permutation | None:
        if node.shape() != self.path[depth].shape():
            return None
        if node.discrete:
            gamma = self._leaf_map(node.lab)
            return gamma if is_automorphism(self.g, gamma) else None
        t = node.target_cell()
        for w in sorted(node.members(t).tolist()):
            found = self._descend(_individualize(self.adj, node, w), depth + 1)
            if found is not None:
                return found
        return None

    def run(self) -> tuple[list[Permutation], int]:
        gens: list[Permutation] = []
        order = 1
        for level in reversed(range(len(self.fixed))):
            parent = self.path[level]
            v = self.fixed[level]
            candidates = sorted(parent.members(int(parent.cell[v])).tolist())
            orbit = _orbit(v, gens)
            ruled_out: set[int] = set()
            for w in candidates:
                if w in orbit or w in ruled_out:
                    continue
                gamma = self._descend(_individualize(self.adj, parent, w), level + 1)
                if gamma is None:
                    ruled_out |= _orbit(w, gens)
                else:
                    gens.append(gamma)
                    orbit = _orbit(v, gens)
            order *= len(orbit)
        return gens, order


def aut_group(g: Graph) -> PermGroup:
    """Automorphism group of ``g`` as a strong generating set and its order.

    The search follows one root-to-leaf path of individualizations (first
    smallest non-singleton cell, lowest vertex) and, level by level from the
    bottom, looks for automorphisms mapping the fixed vertex to each other
    member of its cell that is not already in the known orbit.
    """
    if g.n == 0:
        return PermGroup(0, (identity(0),), 1)
    with recursion_headroom(2 * g.n):
        gens, order = _Search(g).run()
    return PermGroup(g.n, tuple(gens) or (identity(g.n),), order)
