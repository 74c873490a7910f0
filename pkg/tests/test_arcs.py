import pytest

from cck.arcs import (
    AnnulusArc,
    ArcError,
    ExplicitBand,
    PolygonChord,
    alpha_zero,
    crossing_band,
    enumerate_paths,
    gamma_oriented,
)
from cck.harness import ANNULUS_ARC, OCTAGON_ARC


def test_octagon_band_structure(octagon):
    band = crossing_band(octagon, OCTAGON_ARC)
    assert band.d == 3
    assert band.crossed == (1, 3, 5)
    assert band.third_side(-1) == 7
    assert band.third_side(band.d + 1) == 11


def test_annulus_band_structure(annulus):
    band = crossing_band(annulus, ANNULUS_ARC)
    assert band.d == 5
    assert band.crossed == (1, 2, 3, 4, 1)
    assert band.third_side(-1) == 5
    assert band.third_side(band.d + 1) == 8


def test_path_counts(octagon, annulus):
    assert len(enumerate_paths(crossing_band(octagon, OCTAGON_ARC))) == 5
    assert len(enumerate_paths(crossing_band(annulus, ANNULUS_ARC))) == 13


def path_invariants(band):
    paths = enumerate_paths(band)
    for path in paths:
        # (T1): length 2d+1, even steps are the crossed arcs in order
        assert len(path) == 2 * band.d + 1
        for k in range(1, band.d + 1):
            assert path.steps[2 * k - 1].edge == band.crossed[k - 1]
        # consecutive steps share a strip vertex; ends at the target
        assert path.steps[0].frm == band.source
        assert path.steps[-1].to == band.target
        for a, b in zip(path.steps, path.steps[1:]):
            assert a.to == b.frm
    # paths are pairwise distinct and sorted
    keys = [tuple((s.edge, s.frm, s.to) for s in p.steps) for p in paths]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


def test_path_invariants(octagon, annulus):
    path_invariants(crossing_band(octagon, OCTAGON_ARC))
    path_invariants(crossing_band(annulus, ANNULUS_ARC))


def test_alpha_zero_is_the_unoriented_path(octagon, annulus):
    for T, arc in ((octagon, OCTAGON_ARC), (annulus, ANNULUS_ARC)):
        band = crossing_band(T, arc)
        a0 = alpha_zero(band)
        assert a0 in enumerate_paths(band)
        assert not any(
            gamma_oriented(band, a0, k) for k in range(1, band.d + 1)
        )
        # and it is the only such path
        count = sum(
            1
            for p in enumerate_paths(band)
            if not any(gamma_oriented(band, p, k) for k in range(1, band.d + 1))
        )
        assert count == 1


def test_annulus_alpha_zero_arc_sequence(annulus):
    band = crossing_band(annulus, ANNULUS_ARC)
    assert alpha_zero(band).arcs == (5, 1, 1, 2, 3, 3, 3, 4, 1, 1, 8)


def test_reversed_band_has_same_path_count(octagon, annulus):
    for T, arc in ((octagon, OCTAGON_ARC), (annulus, ANNULUS_ARC)):
        band = crossing_band(T, arc)
        assert len(enumerate_paths(band.reversed())) == len(
            enumerate_paths(band)
        )


def test_crossing_free_band(octagon):
    band = crossing_band(octagon, PolygonChord(2, 6))
    assert band.d == 0
    paths = enumerate_paths(band)
    assert len(paths) == 1 and paths[0].arcs == (band.arc_edge,)


def test_explicit_band_matches_geometry(octagon):
    geo = octagon.geometry
    ids, triples = geo.crossed_walk((3, 7))
    explicit = ExplicitBand(tuple(ids), tuple(triples))
    a = enumerate_paths(crossing_band(octagon, explicit))
    b = enumerate_paths(crossing_band(octagon, OCTAGON_ARC))
    assert a == b


def test_explicit_band_validation(octagon):
    with pytest.raises(ArcError):
        crossing_band(octagon, ExplicitBand((3,), ((1, 2, 3), (3, 9, 9))))
    with pytest.raises(ArcError):
        crossing_band(octagon, ExplicitBand((), (), 7))  # boundary edge


def test_arc_type_must_match_surface(octagon, annulus):
    with pytest.raises(ArcError):
        crossing_band(octagon, AnnulusArc(1, 2, 0))
    with pytest.raises(ArcError):
        crossing_band(annulus, PolygonChord(1, 3))
