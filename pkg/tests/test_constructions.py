import pytest

from minclique import (
    CapacityError,
    IntInterval,
    PreconditionError,
    build_extremal,
    chromatic_gap,
    chromatic_number,
    clique_number,
    complete_graph,
    compose_alpha2,
    disjoint_union,
    independence_number,
    induced_subgraph,
    q_value,
)
from minclique.constructions import ComposeInput, eq4_upper_bound
from minclique.oracle import brute_gap


def test_compose_c5_c5(c5, catalog):
    h = compose_alpha2(ComposeInput.build(c5, c5))
    assert h.n == 12
    assert clique_number(h) == 4
    assert independence_number(h) <= 2
    assert h.n <= eq4_upper_bound(2, 2).lo == 13


def test_compose_w8_c5(c5, catalog):
    w8 = catalog.witness_alpha2(8)
    h = compose_alpha2(ComposeInput.build(w8, c5))
    assert h.n == 15
    assert clique_number(h) == 5
    assert independence_number(h) <= 2
    assert h.n <= eq4_upper_bound(3, 2).lo == 17


def test_compose_k2_k2():
    k2 = complete_graph(2)
    h = compose_alpha2(ComposeInput.build(k2, k2, (0, 1), (0, 1)))
    assert h.n == 6
    assert clique_number(h) == 4
    assert independence_number(h) <= 2


def test_compose_restricts_to_factors(c5):
    inp = ComposeInput.build(c5, c5)
    h = compose_alpha2(inp)
    assert induced_subgraph(h, range(5)) == c5
    assert induced_subgraph(h, range(5, 10)) == c5
    # R u V1 and R u U2 are cliques of size 2 * omega2
    r = set(range(10, 12))
    for clique_part, offset in ((inp.clique1, 0), (inp.clique2, 5)):
        block = r | {offset + v for v in clique_part}
        sub = induced_subgraph(h, block)
        assert sub == complete_graph(4)
    # V1 x U2 edges are absent
    for a in inp.clique1:
        for b in inp.clique2:
            assert not h.has_edge(a, 5 + b)


def test_compose_input_errors(c5):
    with pytest.raises(PreconditionError):
        ComposeInput.build(c5, complete_graph(3))  # omega1 < omega2
    with pytest.raises(PreconditionError):
        ComposeInput.build(disjoint_union([complete_graph(3)] * 3), c5)  # alpha 3
    with pytest.raises(PreconditionError):
        ComposeInput.build(c5, c5, (0, 2), (0, 1))  # not a clique
    with pytest.raises(PreconditionError):
        ComposeInput.build(c5, c5, (0,), (0, 1))  # wrong size


def test_build_extremal_examples(catalog):
    w = build_extremal(7, 2, catalog)
    assert (w.omega, w.chi) == (4, 5)
    assert w.certificate.parts == (2,)

    w = build_extremal(5, 1, catalog)
    assert (w.omega, w.chi) == (4, 4)

    w = build_extremal(9, 3, catalog)
    assert (w.omega, w.chi) == (5, 6)

    w = build_extremal(5, 0, catalog)
    assert w.graph == complete_graph(5)


def test_build_extremal_verified_by_solvers(catalog):
    for n, k in [(7, 2), (8, 2), (9, 3), (10, 3), (11, 4)]:
        w = build_extremal(n, k, catalog)
        assert chromatic_number(w.graph) == n - k == w.chi
        assert clique_number(w.graph) == n - 2 * k + q_value(k).lo == w.omega
        assert w.graph.n == n


def test_build_extremal_join_identity(catalog):
    # before deletion, the clique number of the join is the sum of the
    # dominating-vertex count and the block clique numbers
    for n, k in [(9, 3), (11, 4)]:
        w = build_extremal(n, k, catalog)
        blocks = [catalog.witness_alpha2(2 * p + 1) for p in w.certificate.parts]
        expected = n - sum(b.n for b in blocks) + sum(clique_number(b) for b in blocks)
        assert w.omega == expected


def test_build_extremal_errors(catalog):
    with pytest.raises(PreconditionError):
        build_extremal(6, 2, catalog)
    with pytest.raises(PreconditionError):
        build_extremal(4, 1, catalog)
    with pytest.raises(PreconditionError):
        build_extremal(43, 20, catalog)  # q(20) not exact
    with pytest.raises(CapacityError):
        build_extremal(65, 0, catalog)
    with pytest.raises(PreconditionError):
        build_extremal(7, -1, catalog)


def test_edge_deletion_loop():
    from minclique.constructions import delete_edges_until_chi

    g, deleted = delete_edges_until_chi(complete_graph(5), 3)
    assert chromatic_number(g) == 3
    assert clique_number(g) == 3  # deletion never increases the clique number
    assert len(deleted) == len(set(deleted)) > 0
    # deterministic: lexicographically first viable edge each round
    g2, deleted2 = delete_edges_until_chi(complete_graph(5), 3)
    assert deleted2 == deleted and g2 == g

    g, deleted = delete_edges_until_chi(complete_graph(4), 4)
    assert deleted == () and g == complete_graph(4)

    with pytest.raises(PreconditionError):
        delete_edges_until_chi(complete_graph(3), 4)


def test_gap_oracle_small():
    assert chromatic_gap(3, "oracle") == IntInterval.point(0)
    assert chromatic_gap(5, "oracle") == IntInterval.point(1)
    with pytest.raises(CapacityError):
        chromatic_gap(9, "oracle")


def test_gap_formula():
    assert chromatic_gap(9, "formula") == IntInterval.point(1)
    assert chromatic_gap(13, "formula") == IntInterval.point(3)
    for n in range(3, 9):
        assert chromatic_gap(n, "formula") == IntInterval.point(brute_gap(n))


def test_gap_auto_mode():
    assert chromatic_gap(7) == IntInterval.point(brute_gap(7))
    assert chromatic_gap(9) == chromatic_gap(9, "formula")


def test_gap_formula_is_monotone():
    prev = IntInterval.point(0)
    for n in range(1, 40):
        cur = chromatic_gap(n, "formula")
        assert cur.lo >= prev.lo and cur.hi >= prev.hi
        prev = cur
