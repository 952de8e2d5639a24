import pytest

from minclique import (
    CapacityError,
    brute_Q,
    brute_gap,
    canonical_form,
    chromatic_number,
    circulant,
    clique_number,
    complete_graph,
    count_graphs,
    enumerate_graphs,
    relabel,
)
from minclique.oracle import (
    KNOWN_CLASS_COUNTS,
    export_q_table_csv,
    level_stats,
    verify_clique_formula,
)

import brute


def test_counts_small():
    assert count_graphs(0) == 1
    assert count_graphs(4) == 11
    assert count_graphs(5) == 34


def test_counts_match_published_sequence():
    for n, expected in enumerate(KNOWN_CLASS_COUNTS):
        assert count_graphs(n) == expected


def test_capacity_error():
    with pytest.raises(CapacityError):
        count_graphs(9)
    with pytest.raises(CapacityError):
        list(enumerate_graphs(-1))


def test_representatives_are_pairwise_nonisomorphic():
    forms = [canonical_form(g) for g in enumerate_graphs(5)]
    assert len(set(forms)) == len(forms) == 34


def test_canonical_form_invariance():
    import random

    rng = random.Random(31)
    for g in list(enumerate_graphs(5)) + list(enumerate_graphs(6))[:40]:
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(relabel(g, perm)) == canonical_form(g)


def test_canonical_form_separates():
    assert canonical_form(circulant(5, {1})) != canonical_form(complete_graph(5))


def test_brute_q_examples():
    assert brute_Q(5, 5) == 5
    assert brute_Q(6, 5) == 5
    assert brute_Q(7, 5) == 4
    assert brute_Q(5, 3) == 2


def test_brute_q_exact_small_rows():
    for n in range(2, 9):
        assert brute_Q(n, n) == n
        assert brute_Q(n, n - 1) == n - 1
    for n in range(5, 9):
        assert brute_Q(n, n - 2) <= n - 3


def test_brute_q_attained_by_witness():
    for n in range(1, 8):
        stats = level_stats(n)
        for c, omega in stats.min_clique_by_chi.items():
            g = stats.witness_by_chi[c]
            assert chromatic_number(g) == c
            assert clique_number(g) == omega


def test_brute_q_range_errors():
    with pytest.raises(ValueError):
        brute_Q(5, 0)
    with pytest.raises(ValueError):
        brute_Q(5, 6)
    with pytest.raises(CapacityError):
        brute_Q(9, 3)


def test_gap_values_and_identity():
    expected = {0: 0, 1: 0, 2: 0, 3: 0, 4: 0, 5: 1, 6: 1, 7: 1, 8: 1}
    for n, gap in expected.items():
        assert brute_gap(n) == gap
    for n in range(1, 9):
        table = level_stats(n).min_clique_by_chi
        assert brute_gap(n) == max(c - q for c, q in table.items())


def test_formula_verification():
    report = verify_clique_formula(8)
    assert report.passed
    names = {e.name for e in report.entries}
    assert names == {
        f"n={n},k={k}" for n in range(9) for k in range((n - 3) // 2 + 1)
    }
    assert "n=7,k=2" in names

    small = verify_clique_formula(3)
    assert small.passed and {e.name for e in small.entries} == {"n=3,k=0"}


def test_enumeration_agrees_with_brute_on_level_4():
    # spot check the level stats against the independent brute oracles
    for g in enumerate_graphs(4):
        assert chromatic_number(g) == brute.chromatic_number(g)
        assert clique_number(g) == brute.clique_number(g)


def test_csv_export():
    text = export_q_table_csv(4)
    lines = text.strip().splitlines()
    assert lines[0] == "n,c,min_clique"
    assert "4,4,4" in lines
    assert "3,2,2" in lines
