from __future__ import annotations

import random
from itertools import combinations, permutations

import networkx as nx
import numpy as np
import pytest

from autclique import Graph


def labeled_graphs(n: int):
    """Every labeled simple graph on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


def atlas_graphs(max_n: int = 7):
    """One graph per isomorphism class on 0..7 vertices (networkx graph atlas)."""
    for G in nx.graph_atlas_g():
        if G.number_of_nodes() <= max_n:
            yield Graph.from_edges(G.number_of_nodes(), G.edges())


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def brute_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.edge_count != b.edge_count:
        return False
    for perm in permutations(range(a.n)):
        idx = np.array(perm, dtype=np.intp).reshape(-1)
        if np.array_equal(a.adj[np.ix_(idx, idx)], b.adj):
            return True
    return False


def brute_colourable(g: Graph, k: int) -> bool:
    """Exhaustive search for a proper k-colouring, vertex by vertex."""
    colour = [-1] * g.n
    nbrs = [g.neighbors(v) for v in range(g.n)]

    def go(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(k):
            if all(colour[u] != c for u in nbrs[v] if u < v):
                colour[v] = c
                if go(v + 1):
                    return True
        colour[v] = -1
        return False

    return go(0)


def brute_chromatic(g: Graph) -> int:
    k = 0
    while not brute_colourable(g, k):
        k += 1
    return k


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261015)


_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not report.failed:
        return
    for name, value in report.user_properties:
        if name == "criterion":
            number, title = value
            failed = report.failed or _criteria.get(number, ("", "PASS"))[1] == "FAIL"
            _criteria[number] = (title, "FAIL" if failed else "PASS")


@pytest.fixture(autouse=True)
def _record_criterion(request):
    marker = request.node.get_closest_marker("criterion")
    if marker is not None:
        request.node.user_properties.append(("criterion", tuple(marker.args)))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome = _criteria[number]
        terminalreporter.write_line(f"{outcome}  criterion {number}: {title}")
