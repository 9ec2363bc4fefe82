import itertools

import pytest

from multiex.errors import OutOfRange
from multiex.extremal_construct import build_erdos_graph, build_lower_bound_graph, certify
from multiex.graph_core import complete_multipartite, find_disjoint_cliques, remove_edges
from multiex.partition_opt import f_general
from multiex.turan_formulas import conjecture_value


def test_octahedron_construction():
    g, plan = build_lower_bound_graph([2, 2, 2], 3, 2)
    assert g.edge_count == 4 + 6 == 10
    assert plan.v0_size == 1
    assert find_disjoint_cliques(g, 3, 2) is None
    assert certify(g, 3, 2, 10).passed


def test_main_instance_construction():
    g, plan = build_lower_bound_graph([8, 16, 16, 16], 3, 2)
    assert g.n == 56
    assert g.edge_count == 784
    assert plan.reduced_sizes == (7, 16, 16, 16)
    assert find_disjoint_cliques(g, 3, 2) is None


@pytest.mark.parametrize("ns,t", [((2, 3, 4), 3), ((1, 2, 2, 5), 4), ((3, 3), 2)])
def test_k1_is_complete_partite_realization(ns, t):
    g, plan = build_lower_bound_graph(ns, t, 1)
    assert plan.v0_size == 0
    assert g.edge_count == f_general(ns, t).value


def test_guards():
    with pytest.raises(OutOfRange):
        build_lower_bound_graph([1, 3, 3], 3, 2)
    with pytest.raises(OutOfRange):
        build_lower_bound_graph([3, 3], 3, 1)


def _structure_holds(g, plan):
    """Outside V_0 the graph is complete multipartite on the witness groups."""
    k = plan.params.k
    part_of = g.part_of
    group = {}
    for b, block in enumerate(plan.witness_partition or ((i,) for i in range(len(g.part_sizes)))):
        for p in block:
            group[p] = b
    for u, v in itertools.combinations(range(k - 1, g.n), 2):
        same = group[part_of[u]] == group[part_of[v]]
        if g.has_edge(u, v) == same:
            return False
    return all(g.has_edge(a, v) == (part_of[v] != 0) for a in range(k - 1) for v in range(g.n) if v != a)


def test_structure_on_sweep():
    for r in range(2, 5):
        for ns in itertools.combinations_with_replacement(range(1, 6), r):
            for t in range(3, r + 1):
                for k in range(1, ns[0] + 1):
                    g, plan = build_lower_bound_graph(ns, t, k)
                    assert _structure_holds(g, plan), (ns, t, k)
                    assert g.edge_count == conjecture_value(ns, t, k).value
                    assert g.is_spanning_subgraph()


class TestErdos:
    def test_mantel(self):
        g = build_erdos_graph(5, 1)
        assert g.edge_count == 6
        assert find_disjoint_cliques(g, 3, 1) is None

    def test_apex_plus_bipartite(self):
        assert build_erdos_graph(4, 2).edge_count == 5
        assert build_erdos_graph(6, 1).edge_count == 9

    def test_free_of_k_triangles(self):
        for n, k in [(7, 2), (9, 3), (8, 2)]:
            g = build_erdos_graph(n, k)
            assert find_disjoint_cliques(g, 3, k) is None
            assert find_disjoint_cliques(g, 3, k - 1) is not None or k == 1

    def test_guard(self):
        with pytest.raises(OutOfRange):
            build_erdos_graph(2, 2)


class TestCertify:
    def test_octahedron_fails_freeness(self):
        cert = certify(complete_multipartite([2, 2, 2]), 3, 2)
        assert not cert.free and not cert.passed
        assert cert.to_dict()["witness"] is not None

    def test_edgeless(self):
        g = complete_multipartite([2, 3])
        g = remove_edges(g, g.edges())
        assert certify(g, 2, 1, 0).passed

    def test_wrong_claim(self):
        g, _ = build_lower_bound_graph([2, 2, 2], 3, 2)
        cert = certify(g, 3, 2, 11)
        assert cert.free and not cert.edges_ok and not cert.passed
