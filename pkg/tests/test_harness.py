import itertools

import pytest

from cck.algebra import serialize
from cck.expansion import expand_principal
from cck.harness import (
    ANNULUS_ARC,
    OCTAGON_ARC,
    OCTAGON_EXPANSION,
    OracleError,
    annulus_arcs,
    compare_corpus,
    oracle_expand,
    polygon_chords,
    polygon_corpus,
    polygon_triangulations,
    run_selftest,
)


def test_selftest_is_clean():
    assert run_selftest() == []


def test_oracle_matches_fixtures(octagon, annulus):
    assert serialize(oracle_expand(octagon, OCTAGON_ARC).value) == OCTAGON_EXPANSION
    assert oracle_expand(annulus, ANNULUS_ARC).value == expand_principal(
        annulus, ANNULUS_ARC
    )


def test_oracle_flip_count_equals_crossing_number(octagon):
    # on a disc the greedy strategy flips once per crossing
    result = oracle_expand(octagon, OCTAGON_ARC)
    assert len(result.flip_sequence) == 3
    assert result.seeds_visited == 3


def test_oracle_budget_enforced(annulus):
    with pytest.raises(OracleError):
        oracle_expand(annulus, ANNULUS_ARC, budget=1)


def test_oracle_on_triangulation_arc(octagon):
    from cck.arcs import PolygonChord

    result = oracle_expand(octagon, PolygonChord(2, 6))
    assert serialize(result.value) == "x3"
    assert result.flip_sequence == ()


def test_triangulation_counts_are_catalan():
    catalan = {4: 2, 5: 5, 6: 14, 7: 42, 8: 132}
    for m, c in catalan.items():
        tris = list(polygon_triangulations(m))
        assert len(tris) == c
        assert len({tuple(t) for t in tris}) == c


def test_polygon_chord_counts():
    # m(m-3)/2 diagonals of the m-gon
    for m in range(4, 9):
        assert len(polygon_chords(m)) == m * (m - 3) // 2


def test_annulus_arc_family(annulus):
    arcs = annulus_arcs(annulus, max_winding=2)
    assert len(arcs) == 24
    keys = {annulus.geometry.canonical(
        annulus.geometry.chord_of_arc((a.a, a.b, a.winding))
    ) for a in arcs}
    assert len(keys) == len(arcs)


def test_compare_corpus_on_a_slice():
    cases = list(itertools.islice(polygon_corpus(max_m=6), 60))
    n, mismatches = compare_corpus(cases)
    assert n == 60 and mismatches == []
