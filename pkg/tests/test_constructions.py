import numpy as np
import pytest

from autclique import (
    BoostCertificate,
    ConstructionError,
    Graph,
    GroupSpec,
    aut_brute_force,
    aut_group,
    asymmetric_six,
    clique_boost,
    complete_graph,
    compose,
    corollary_base,
    count_cliques_of_size,
    cycle_graph,
    empty_graph,
    group_from_spec,
    groups_isomorphic,
    identity,
    induced_subgraph,
    is_automorphism,
    is_complete,
    is_connected,
    iterate_boost,
    lift_automorphism,
    max_clique,
    omega_brute,
    path_graph,
    realize_group,
    unbounded_family,
    verify_boost,
)
from autclique.constructions import RealizationError, frucht_graph
from autclique.symmetry import Permutation

from conftest import brute_isomorphic, labeled_graphs


def test_boost_of_two_isolated_vertices_is_p4():
    boosted, cert = clique_boost(empty_graph(2))
    assert sorted(boosted.edges()) == [(0, 2), (1, 3), (2, 3)]
    assert brute_isomorphic(boosted, path_graph(4))
    assert aut_brute_force(boosted).order == 2


def test_boost_of_p3():
    boosted, _ = clique_boost(path_graph(3))
    assert (boosted.n, boosted.edge_count) == (6, 8)
    assert aut_brute_force(boosted).order == 2
    assert omega_brute(boosted) == 3


def test_boost_of_c5():
    boosted, cert = clique_boost(cycle_graph(5))
    assert (boosted.n, boosted.edge_count) == (10, 20)
    group = aut_group(boosted)
    assert group.order == 10
    assert all(is_automorphism(boosted, p) for p in group.generators)
    assert len(max_clique(boosted)) == 5 == omega_brute(boosted)
    assert cert.matching == [(i, i + 5) for i in range(5)]


def test_boost_rejects_complete_and_tiny():
    with pytest.raises(ConstructionError, match="corollary_base"):
        clique_boost(complete_graph(4))
    with pytest.raises(ConstructionError):
        clique_boost(complete_graph(1))


def test_certificate_text_round_trip():
    cert = BoostCertificate(3)
    assert cert.to_text() == "n=3\n0 3\n1 4\n2 5\n"
    assert BoostCertificate.from_text(cert.to_text()) == cert
    with pytest.raises(ConstructionError):
        BoostCertificate.from_text("n=3\n0 3\n")


def test_lift_examples():
    cert = BoostCertificate(5)
    assert lift_automorphism(cert, identity(5)) == identity(10)
    rotation = Permutation.from_cycles(5, range(5))
    boosted, _ = clique_boost(cycle_graph(5))
    assert is_automorphism(boosted, lift_automorphism(cert, rotation))

    p3_boost, p3_cert = clique_boost(path_graph(3))
    swap = Permutation.from_cycles(3, (0, 2))
    lifted = lift_automorphism(p3_cert, swap)
    assert lifted.images == (2, 1, 0, 5, 4, 3)
    assert is_automorphism(p3_boost, lifted)
    with pytest.raises(ValueError):
        lift_automorphism(cert, identity(4))


def test_iterate_boost():
    c5 = cycle_graph(5)
    assert iterate_boost(c5, 0) == c5
    assert iterate_boost(c5, 1).n == 10
    g = iterate_boost(c5, 3)
    assert g.n == 40
    assert len(max_clique(g)) == 20
    assert aut_group(g).order == 10


def test_asymmetric_six():
    g = asymmetric_six()
    assert (g.n, g.edge_count) == (6, 6)
    assert sorted(g.edges()) == [(0, 1), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]
    assert aut_brute_force(g).order == 1
    assert is_connected(g)


def test_corollary_base():
    assert corollary_base(complete_graph(4)) == empty_graph(4)
    assert corollary_base(complete_graph(1)) == asymmetric_six()
    assert corollary_base(cycle_graph(5)) == cycle_graph(5)
    for n in range(1, 6):
        base = corollary_base(complete_graph(n))
        assert not is_complete(base)
        assert aut_brute_force(base).order == aut_brute_force(complete_graph(n)).order


@pytest.mark.parametrize("spec, order", [
    (GroupSpec.named("trivial"), 1),
    (GroupSpec.named("cyclic", 3), 3),
    (GroupSpec.named("cyclic", 7), 7),
    (GroupSpec.named("dihedral", 5), 10),
    (GroupSpec.named("symmetric", 4), 24),
    (GroupSpec.named("klein_four"), 4),
])
def test_realize_group(spec, order):
    g = realize_group(spec)
    aut = aut_group(g)
    assert aut.order == order
    assert is_connected(g)
    assert groups_isomorphic(aut, group_from_spec(spec))


def test_realize_trivial_is_the_six_vertex_graph():
    assert realize_group(GroupSpec.named("trivial")) == asymmetric_six()
    assert realize_group(GroupSpec.named("cyclic", 2)) == path_graph(3)


def test_realize_from_cayley_table_of_s3():
    s3 = group_from_spec(GroupSpec.named("symmetric", 3))
    elems = s3.elements()
    index = {p.images: i for i, p in enumerate(elems)}
    table = [[index[compose(a, b).images] for b in elems] for a in elems]
    g = realize_group(GroupSpec.from_cayley_table(table))
    aut = aut_group(g)
    assert aut.order == 6
    assert groups_isomorphic(aut, s3)


def test_realize_from_perm_generators():
    # Z_2 x Z_3 given by two commuting generators on 5 points
    spec = GroupSpec.from_generators(5, [Permutation.from_cycles(5, (0, 1)),
                                         Permutation.from_cycles(5, (2, 3, 4))])
    aut = aut_group(realize_group(spec))
    assert aut.order == 6
    assert groups_isomorphic(aut, group_from_spec(GroupSpec.named("cyclic", 6)))


def test_frucht_gadget_shape():
    z3 = group_from_spec(GroupSpec.named("cyclic", 3))
    g = frucht_graph(z3.elements(), list(z3.generators))
    # 3 element vertices + 3 arcs * (2 internal + 1 + 2 tail vertices)
    assert g.n == 18 and g.edge_count == 3 * 6


def test_realization_failure_is_surfaced(monkeypatch):
    import autclique.constructions as constructions

    monkeypatch.setattr(constructions, "frucht_graph", lambda *a: cycle_graph(3 * 4))
    with pytest.raises(RealizationError):
        realize_group(GroupSpec.named("cyclic", 3))


def test_verify_boost_pass():
    for base in (cycle_graph(5), empty_graph(2)):
        boosted, cert = clique_boost(base)
        report = verify_boost(base, boosted, cert)
        assert report.verdict == "pass", report.reasons
        assert report.base_order == report.boosted_order
    assert verify_boost(cycle_graph(5), *clique_boost(cycle_graph(5))).base_order == 10
    assert verify_boost(empty_graph(2), *clique_boost(empty_graph(2))).base_order == 2


def test_verify_boost_detects_deleted_matching_edge():
    base = cycle_graph(5)
    boosted, cert = clique_boost(base)
    adj = np.array(boosted.adj)
    adj[0, 5] = adj[5, 0] = False
    report = verify_boost(base, Graph(adj), cert)
    assert report.verdict == "fail"
    assert not report.structural_ok


def test_verify_boost_detects_wrong_base():
    boosted, cert = clique_boost(cycle_graph(5))
    report = verify_boost(path_graph(5), boosted, cert)
    assert report.verdict == "fail"
    assert report.base_order != report.boosted_order


def test_verify_boost_malformed_certificate():
    boosted, _ = clique_boost(cycle_graph(5))
    with pytest.raises(ConstructionError):
        verify_boost(cycle_graph(5), boosted, BoostCertificate(4))


def test_verification_report_serialisation():
    report = verify_boost(cycle_graph(5), *clique_boost(cycle_graph(5)))
    d = report.to_dict()
    assert d["verdict"] == "pass" and d["base_order"] == 10
    assert "omega" not in d
    assert report.to_text().startswith("verdict: pass\n")


@pytest.mark.parametrize("spec, k, order", [
    (GroupSpec.named("cyclic", 3), 10, 3),
    (GroupSpec.named("trivial"), 7, 1),
    (GroupSpec.named("symmetric", 2), 2, 2),
])
def test_unbounded_family(spec, k, order):
    g, report = unbounded_family(spec, k)
    assert report.verdict == "pass", report.reasons
    assert report.omega >= k and len(max_clique(g)) == report.omega
    assert aut_group(g).order == order
    assert is_connected(g)


def test_family_for_s2_starts_from_two_isolated_vertices():
    g, report = unbounded_family(GroupSpec.named("symmetric", 2), 2)
    assert brute_isomorphic(g, path_graph(4))
    assert report.omega == 2


# --- properties over every labeled non-complete graph on 2..5 vertices ---------

def _corpus(max_n=5):
    for n in range(2, max_n + 1):
        for g in labeled_graphs(n):
            if not is_complete(g):
                yield g


def test_boost_properties_on_labeled_corpus():
    for g in _corpus():
        boosted, cert = clique_boost(g)
        n = g.n
        assert induced_subgraph(boosted, cert.v1) == g
        assert is_complete(induced_subgraph(boosted, cert.v2))
        assert boosted.edge_count == g.edge_count + n * (n - 1) // 2 + n
        assert is_connected(boosted) and not is_complete(boosted)
        assert len(max_clique(boosted)) == n
        if n >= 3:
            assert count_cliques_of_size(boosted, n) == 1


def test_lift_is_multiplicative_and_injective_on_corpus():
    for g in _corpus(4):
        boosted, cert = clique_boost(g)
        elems = aut_brute_force(g).generators
        lifts = {a: lift_automorphism(cert, a) for a in elems}
        assert len(set(lifts.values())) == len(elems)
        for a in elems:
            assert is_automorphism(boosted, lifts[a])
            for b in elems:
                assert lift_automorphism(cert, compose(a, b)) == compose(lifts[a], lifts[b])


@pytest.mark.slow
def test_boost_preserves_group_on_all_labeled_six_vertex_graphs():
    for g in labeled_graphs(6):
        if is_complete(g):
            continue
        boosted, cert = clique_boost(g)
        aut = aut_group(boosted)
        assert aut.order == aut_group(g).order
        v2 = set(cert.v2)
        for phi in aut.generators:
            assert {phi(v) for v in v2} == v2
            assert is_automorphism(g, Permutation(phi.images[:6]))
        assert count_cliques_of_size(boosted, 6) == 1
