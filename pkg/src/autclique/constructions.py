"""Clique-boosting constructions and their verification.

``clique_boost`` glues a fresh clique onto a non-complete graph through a
perfect matching. The automorphism group is unchanged while the clique
number becomes the old vertex count, so iterating it gives graphs with any
prescribed automorphism group and arbitrarily large cliques.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Optional

import numpy as np

from .graph import (
    Graph,
    complete_graph,
    empty_graph,
    induced_subgraph,
    is_complete,
    is_connected,
    path_graph,
)
from .invariants import max_clique
from .symmetry import (
    ISOMORPHISM_CAP,
    GroupSpec,
    PermGroup,
    Permutation,
    aut_group,
    compose,
    group_from_spec,
    groups_isomorphic,
    identity,
    is_automorphism,
)
from .symmetry.perm import PermutationError


class ConstructionError(ValueError):
    pass


class RealizationError(RuntimeError):
    """The realized graph failed validation against the requested group."""


@dataclass(frozen=True)
class BoostCertificate:
    """Layout of one boost step: base on ``0..n-1``, clique on ``n..2n-1``, ``i ~ n+i``."""

    n: int

    @property
    def v1(self) -> range:
        return range(self.n)

    @property
    def v2(self) -> range:
        return range(self.n, 2 * self.n)

    @property
    def matching(self) -> list[tuple[int, int]]:
        return [(i, self.n + i) for i in range(self.n)]

    def to_text(self) -> str:
        return f"n={self.n}\n" + "".join(f"{a} {b}\n" for a, b in self.matching)

    @classmethod
    def from_text(cls, text: str) -> BoostCertificate:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("n="):
            raise ConstructionError("certificate must start with 'n=<n>'")
        cert = cls(int(lines[0][2:]))
        pairs = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
        if pairs != cert.matching:
            raise ConstructionError("certificate matching does not follow the i <-> n+i layout")
        return cert


def clique_boost(g: Graph) -> tuple[Graph, BoostCertificate]:
    """Add a disjoint ``K_n`` and the perfect matching ``i ~ n+i``."""
    n = g.n
    if n < 2:
        raise ConstructionError("boost needs at least 2 vertices; use corollary_base for K_1")
    if is_complete(g):
        raise ConstructionError(
            "boost needs a non-complete graph; corollary_base(g) gives a "
            "non-complete graph with the same automorphism group")
    adj = np.zeros((2 * n, 2 * n), dtype=bool)
    adj[:n, :n] = g.adj
    adj[n:, n:] = ~np.eye(n, dtype=bool)
    i = np.arange(n)
    adj[i, n + i] = adj[n + i, i] = True
    return Graph(adj), BoostCertificate(n)


def lift_automorphism(cert: BoostCertificate, psi: Permutation) -> Permutation:
    """Extend ``psi`` on the base to the boosted graph via ``n+v -> n+psi(v)``."""
    if psi.degree != cert.n:
        raise PermutationError(f"expected degree {cert.n}, got {psi.degree}")
    n = cert.n
    return Permutation(psi.images + tuple(n + x for x in psi.images))


def iterate_boost(g: Graph, k: int) -> Graph:
    if k < 0:
        raise ConstructionError("iteration count must be non-negative")
    for _ in range(k):
        g, _ = clique_boost(g)
    return g


def iterate_boost_with_certificates(g: Graph, k: int) -> tuple[Graph, list[BoostCertificate]]:
    certs = []
    for _ in range(k):
        g, cert = clique_boost(g)
        certs.append(cert)
    return g, certs


def asymmetric_six() -> Graph:
    """Path 0-1-2-3-4-5 plus the chord 1-3; the only automorphism is the identity."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 3)])


def corollary_base(g: Graph) -> Graph:
    """A non-complete graph whose automorphism group is isomorphic to that of ``g``."""
    if not is_complete(g):
        return g
    if g.n >= 2:
        return empty_graph(g.n)
    return asymmetric_six()


def frucht_graph(elements: list[Permutation], generators: list[Permutation]) -> Graph:
    """Gadget-replaced Cayley digraph of a permutation group.

    Element ``x`` is vertex ``elements.index(x)``. The arc ``x -> x*s`` of the
    i-th generator (1-based) becomes a path ``x - a - b - x*s`` with a pendant
    path of ``2i-1`` vertices on ``a`` and one of ``2i`` vertices on ``b``.
    """
    index = {x.images: j for j, x in enumerate(elements)}
    edges: list[tuple[int, int]] = []
    nxt = len(elements)

    def tail(root: int, length: int) -> None:
        nonlocal nxt
        prev = root
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1

    for i, s in enumerate(generators, start=1):
        for x in elements:
            head = index[compose(x, s).images]
            a, b = nxt, nxt + 1
            nxt += 2
            edges += [(index[x.images], a), (a, b), (b, head)]
            tail(a, 2 * i - 1)
            tail(b, 2 * i)
    return Graph.from_edges(nxt, edges)


def _cayley_generators(group: PermGroup) -> list[Permutation]:
    gens: list[Permutation] = []
    for s in group.generators:
        if not s.is_identity() and s not in gens:
            gens.append(s)
    return gens


def _same_group(aut: PermGroup, target: PermGroup, cap: int) -> bool:
    if aut.order > cap or target.order > cap:
        return aut.order == target.order
    return groups_isomorphic(aut, target, cap)


def realize_group(spec: GroupSpec, iso_cap: int = ISOMORPHISM_CAP) -> Graph:
    """A connected graph whose automorphism group is isomorphic to ``spec``.

    Trivial group: the asymmetric 6-vertex graph. ``symmetric:n``: ``K_n``.
    Any other group of order 2: the path on 3 vertices. Everything else: the
    gadget-replaced Cayley digraph from :func:`frucht_graph`. The result is
    checked with :func:`aut_group` before it is returned.
    """
    group = group_from_spec(spec)
    if group.order == 1:
        g = asymmetric_six()
    elif spec.kind == "named" and spec.family == "symmetric":
        g = complete_graph(spec.parameter)
    elif group.order == 2:
        g = path_graph(3)
    else:
        g = frucht_graph(group.elements(), _cayley_generators(group))
    aut = aut_group(g)
    if not (is_connected(g) and _same_group(aut, group, iso_cap)):
        raise RealizationError(
            f"realization of {spec} has automorphism group of order {aut.order}, "
            f"expected a group isomorphic to one of order {group.order}")
    return g


@dataclass
class VerificationReport:
    """Outcome of checking one boost step, optionally with family-level checks."""

    base_order: int
    boosted_order: int
    structural_ok: bool
    partition_preserved: bool
    restrictions_valid: bool
    lift_homomorphism_ok: bool
    reasons: list[str] = field(default_factory=list)
    omega: Optional[int] = None
    clique_target: Optional[int] = None
    connected: Optional[bool] = None
    aut_order: Optional[int] = None
    group_isomorphic: Optional[bool] = None

    @property
    def passed(self) -> bool:
        checks = [self.base_order == self.boosted_order, self.structural_ok,
                  self.partition_preserved, self.restrictions_valid,
                  self.lift_homomorphism_ok]
        checks += [c for c in (self.connected, self.group_isomorphic) if c is not None]
        if self.clique_target is not None:
            checks.append(self.omega is not None and self.omega >= self.clique_target)
        return all(checks)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict
        return {k: v for k, v in d.items() if v is not None}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        lines = [f"verdict: {self.verdict}"]
        for k, v in self.to_dict().items():
            if k in ("verdict", "reasons"):
                continue
            lines.append(f"{k}: {str(v).lower() if isinstance(v, bool) else v}")
        lines += [f"reason: {r}" for r in self.reasons]
        return "\n".join(lines) + "\n"


def _lift_pairs(gens: tuple[Permutation, ...], n: int) -> list[tuple[Permutation, Permutation]]:
    """Deterministic sample of automorphism pairs: generators, identity and their products."""
    pool = [identity(n)] + [p for p in gens if not p.is_identity()]
    pool += [compose(a, b) for a in pool[1:] for b in pool[1:]][:16]
    return [(a, b) for a in pool for b in pool]


def verify_boost(base: Graph, boosted: Graph, cert: BoostCertificate) -> VerificationReport:
    """Check one boost step against the argument that it preserves the automorphism group.

    The checks run in order: the certificate's layout against both graphs;
    every automorphism generator of ``boosted`` maps the clique side onto
    itself; its restriction to the base side is an automorphism of ``base``;
    both groups have the same order; lifting is multiplicative on a sample
    of pairs and lands in the automorphism group of ``boosted``.
    """
    return _verify_boost(base, boosted, cert)[0]


def _verify_boost(base: Graph, boosted: Graph,
                  cert: BoostCertificate) -> tuple[VerificationReport, PermGroup]:
    n = cert.n
    if base.n != n or boosted.n != 2 * n:
        raise ConstructionError(
            f"certificate for n={n} does not fit base n={base.n}, boosted n={boosted.n}")
    reasons = []

    structural = True
    if induced_subgraph(boosted, cert.v1) != base:
        structural = False
        reasons.append("base side does not induce the base graph")
    if not is_complete(induced_subgraph(boosted, cert.v2)):
        structural = False
        reasons.append("clique side is not complete")
    missing = [(a, b) for a, b in cert.matching if not boosted.has_edge(a, b)]
    if missing:
        structural = False
        reasons.append(f"matching edges missing: {missing}")
    expected_edges = base.edge_count + comb(n, 2) + n
    if boosted.edge_count != expected_edges:
        structural = False
        reasons.append(f"boosted graph has {boosted.edge_count} edges, expected {expected_edges}")

    base_aut = aut_group(base)
    boosted_aut = aut_group(boosted)
    v2 = set(cert.v2)

    preserved = True
    restrictions = True
    for phi in boosted_aut.generators:
        if {phi.images[v] for v in v2} != v2:
            preserved = False
            reasons.append(f"automorphism does not fix the clique side: {phi}")
            continue
        try:
            restricted = Permutation(phi.images[:n])
        except PermutationError:
            restrictions = False
            reasons.append(f"restriction to the base side is not a permutation: {phi}")
            continue
        if not is_automorphism(base, restricted):
            restrictions = False
            reasons.append(f"restriction is not a base automorphism: {restricted}")

    if base_aut.order != boosted_aut.order:
        reasons.append(f"group orders differ: {base_aut.order} vs {boosted_aut.order}")

    lift_ok = True
    for a, b in _lift_pairs(base_aut.generators, n):
        la, lb = lift_automorphism(cert, a), lift_automorphism(cert, b)
        if lift_automorphism(cert, compose(a, b)) != compose(la, lb):
            lift_ok = False
            reasons.append(f"lift is not multiplicative on ({a}, {b})")
            break
        if not (is_automorphism(boosted, la) and is_automorphism(boosted, lb)):
            lift_ok = False
            reasons.append(f"lift is not an automorphism of the boosted graph: ({a}, {b})")
            break

    report = VerificationReport(
        base_order=base_aut.order,
        boosted_order=boosted_aut.order,
        structural_ok=structural,
        partition_preserved=preserved,
        restrictions_valid=restrictions,
        lift_homomorphism_ok=lift_ok,
        reasons=reasons,
    )
    return report, boosted_aut


def unbounded_family(spec: GroupSpec, k: int, iso_cap: int = ISOMORPHISM_CAP) -> tuple[Graph, VerificationReport]:
    """Connected graph with automorphism group ``spec`` and clique number at least ``k``.

    Boosting an m-vertex graph yields clique number m, so the base is boosted
    until it has at least ``k`` vertices and then once more. The final clique
    number is measured rather than assumed.
    """
    if k < 1:
        raise ConstructionError("clique target must be at least 1")
    target = group_from_spec(spec)
    g = corollary_base(realize_group(spec, iso_cap))
    while g.n < k:
        g, _ = clique_boost(g)
    boosted, cert = clique_boost(g)

    report, aut = _verify_boost(g, boosted, cert)
    report.omega = len(max_clique(boosted))
    report.clique_target = k
    report.connected = is_connected(boosted)
    report.aut_order = aut.order
    report.group_isomorphic = _same_group(aut, target, iso_cap)
    if report.omega < k:
        report.reasons.append(f"clique number {report.omega} is below the target {k}")
    if not report.connected:
        report.reasons.append("graph is not connected")
    if not report.group_isomorphic:
        report.reasons.append(f"automorphism group (order {aut.order}) is not isomorphic to {spec}")
    return boosted, report
