"""Exact clique and chromatic number solvers plus a consolidated invariant report."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Optional

from ._util import recursion_headroom
from .graph import Graph, is_connected

#: Largest vertex count accepted by :func:`omega_brute`.
OMEGA_BRUTE_CAP = 16
#: Largest vertex count for which :func:`chromatic_number` runs.
CHROMATIC_CAP = 64


class SolverCapExceeded(ValueError):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _static_order(g: Graph) -> list[int]:
    """Vertices by descending degree, lower index first on ties."""
    return sorted(range(g.n), key=lambda v: (-g.degrees[v], v))


def max_clique(g: Graph) -> frozenset[int]:
    """A maximum clique, by branch and bound with greedy-colouring bounds.

    Vertices are renumbered into a static descending-degree order so that
    the lowest set bit of a candidate bitset is the earliest vertex in that
    order; every node recolours its candidate set and prunes on
    ``|current| + colour <= |best|``.
    """
    if g.n == 0:
        return frozenset()
    order = _static_order(g)
    pos = {v: i for i, v in enumerate(order)}
    nbr = []
    for v in order:
        m = 0
        for u in g.neighbors(v):
            m |= 1 << pos[u]
        nbr.append(m)

    best: list[int] = [0]
    current: list[int] = []

    def colour_sort(p: int) -> tuple[list[int], list[int]]:
        verts, colours = [], []
        uncoloured, k = p, 0
        while uncoloured:
            k += 1
            q = uncoloured
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~nbr[v] & ~low
                uncoloured ^= low
                verts.append(v)
                colours.append(k)
        return verts, colours

    def expand(p: int) -> None:
        verts, colours = colour_sort(p)
        for i in range(len(verts) - 1, -1, -1):
            if len(current) + colours[i] <= len(best):
                return
            v = verts[i]
            current.append(v)
            q = p & nbr[v]
            if q:
                expand(q)
            elif len(current) > len(best):
                best[:] = current
            current.pop()
            p &= ~(1 << v)

    with recursion_headroom(g.n):
        expand((1 << g.n) - 1)
    return frozenset(order[i] for i in best)


def omega_brute(g: Graph, cap: int = OMEGA_BRUTE_CAP) -> int:
    """Clique number by checking every vertex subset."""
    n = g.n
    if n > cap:
        raise SolverCapExceeded(f"subset enumeration is limited to {cap} vertices, got {n}")
    rows = g.rows
    is_clique = bytearray(1 << n)
    is_clique[0] = 1
    size = [0] * (1 << n)
    best = 0
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        if is_clique[rest] and rest & ~rows[v] == 0:
            is_clique[s] = 1
            size[s] = size[rest] + 1
            if size[s] > best:
                best = size[s]
    return best


def count_cliques_of_size(g: Graph, k: int) -> int:
    """Number of k-vertex subsets that induce complete subgraphs."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    rows = g.rows

    def count(cand: int, need: int) -> int:
        if need == 0:
            return 1
        if bin(cand).count("1") < need:
            return 0
        total = 0
        for v in _bits(cand):
            # only extend with higher-numbered vertices so each clique is counted once
            higher = cand & ~((1 << (v + 1)) - 1)
            total += count(higher & rows[v], need - 1)
        return total

    with recursion_headroom(k):
        return count((1 << g.n) - 1, k)


def _dsatur_greedy(g: Graph) -> int:
    n = g.n
    colour = [-1] * n
    neighbour_colours = [set() for _ in range(n)]
    used = 0
    for _ in range(n):
        v = max((u for u in range(n) if colour[u] < 0),
                key=lambda u: (len(neighbour_colours[u]), g.degrees[u], -u))
        c = 0
        while c in neighbour_colours[v]:
            c += 1
        colour[v] = c
        used = max(used, c + 1)
        for u in g.neighbors(v):
            neighbour_colours[u].add(c)
    return used


def chromatic_number(g: Graph, cap: int = CHROMATIC_CAP) -> int:
    """Exact chromatic number by DSATUR branch and bound.

    The clique number is the lower bound and a DSATUR greedy colouring the
    initial upper bound; search stops as soon as the two meet.
    """
    n = g.n
    if n > cap:
        raise SolverCapExceeded(f"exact colouring is limited to {cap} vertices, got {n}")
    if n == 0:
        return 0
    lower = len(max_clique(g))
    best = [_dsatur_greedy(g)]
    if best[0] == lower:
        return lower
    nbrs = [g.neighbors(v) for v in range(n)]
    colour = [-1] * n
    # sat[v][c] = number of coloured neighbours of v using colour c
    sat = [[0] * n for _ in range(n)]
    satdeg = [0] * n

    def assign(v: int, c: int, delta: int) -> None:
        for u in nbrs[v]:
            before = sat[u][c]
            sat[u][c] = before + delta
            if delta > 0 and before == 0:
                satdeg[u] += 1
            elif delta < 0 and before == 1:
                satdeg[u] -= 1

    def search(coloured: int, used: int) -> bool:
        if used >= best[0]:
            return False
        if coloured == n:
            best[0] = used
            return best[0] == lower
        v = max((u for u in range(n) if colour[u] < 0),
                key=lambda u: (satdeg[u], len(nbrs[u]), -u))
        for c in range(min(used + 1, best[0] - 1)):
            if sat[v][c]:
                continue
            colour[v] = c
            assign(v, c, 1)
            done = search(coloured + 1, max(used, c + 1))
            assign(v, c, -1)
            colour[v] = -1
            if done:
                return True
        return False

    with recursion_headroom(n):
        search(0, 0)
    return best[0]


def genus_lower_bound(omega: int) -> int:
    """Genus of the complete graph on ``omega`` vertices, a lower bound for any supergraph."""
    if omega < 1:
        raise ValueError("clique number must be at least 1")
    if omega <= 4:
        return 0
    return -(-(omega - 3) * (omega - 4) // 12)


@dataclass(frozen=True)
class InvariantReport:
    n: int
    edge_count: int
    omega: int
    chi: Optional[int]
    aut_order: int
    connected: bool
    genus_lb: int

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        rows = [(k, "-" if v is None else str(v).lower() if isinstance(v, bool) else str(v))
                for k, v in self.to_dict().items()]
        width = max(len(k) for k, _ in rows)
        return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def invariant_report(g: Graph, chi_cap: int = CHROMATIC_CAP) -> InvariantReport:
    from .symmetry import aut_group

    omega = len(max_clique(g))
    return InvariantReport(
        n=g.n,
        edge_count=g.edge_count,
        omega=omega,
        chi=chromatic_number(g, chi_cap) if g.n <= chi_cap else None,
        aut_order=aut_group(g).order,
        connected=is_connected(g),
        genus_lb=genus_lower_bound(max(omega, 1)),
    )
