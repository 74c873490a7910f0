"""
Mutation-based oracle and test corpus.

The oracle computes a cluster variable without enumerating paths: it
flips crossed arcs so that the crossing number of the target arc
strictly decreases, mirroring each flip by a symbolic seed mutation,
until the arc is an edge of the current triangulation; the variable is
then read off the seed.  Only the algebra, seed and surface primitives
are used, so agreement with the path expansion is genuine
cross-validation, not shared code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arcs import AnnulusArc, PolygonChord
from .seeds import Seed, mutate_seed
from .surface import (
    AnnulusGeometry,
    PolygonGeometry,
    SurfaceError,
    build_BT,
    build_annulus,
    build_polygon,
    flip,
)


class OracleError(RuntimeError):
    pass


@dataclass(frozen=True)
class OracleResult:
    value: object  # LaurentPolynomial
    flip_sequence: tuple
    seeds_visited: int


def _arc_spec(geometry, gamma):
    if isinstance(gamma, PolygonChord):
        if not isinstance(geometry, PolygonGeometry):
            raise OracleError("chord arc on a non-polygon triangulation")
        return (gamma.a, gamma.b)
    if isinstance(gamma, AnnulusArc):
        if not isinstance(geometry, AnnulusGeometry):
            raise OracleError("winding arc on a non-annulus triangulation")
        return (gamma.a, gamma.b, gamma.winding)
    raise OracleError(
        "the oracle needs a geometric arc (chord or winding spec)"
    )


def _edge_of(T, spec):
    return T.geometry.arc_edge(spec)

def _crossing_count(T, spec):
    return T.geometry.crossing_count(spec)


def _crossed_sequence(T, spec):
    geo = T.geometry
    if isinstance(geo, AnnulusGeometry):
        ids, _ = geo.crossed_walk(spec, geo.boundary_map)
    else:
        ids, _ = geo.crossed_walk(spec)
    return ids


def oracle_expand(T, gamma, budget=None):
    """
    Expand the cluster variable of an arc by seed mutation along a
    crossing-number-decreasing flip sequence.  The primary strategy
    flips the last crossed arc (which always works on a disc); if that
    fails to decrease the crossing number, the search backtracks over
    the other crossed arcs.  `budget` caps the number of seed
    mutations, default 10 * (initial crossing number).
    """
    if T.geometry is None:
        raise OracleError("the oracle needs a triangulation with geometry")
    spec = _arc_spec(T.geometry, gamma)
    d0 = _crossing_count(T, spec)
    if budget is None:
        budget = max(10 * d0, 1)
    seed = Seed.initial(build_BT(T))
    counter = [0]

    def search(cur, cur_seed, count, flips):
        if count == 0:
            slot = _edge_of(cur, spec)
            if slot is None:
                raise OracleError(
                    "crossing number is zero but the arc is not an edge"
                )
            return OracleResult(cur_seed.value(slot), tuple(flips), counter[0])
        ids = _crossed_sequence(cur, spec)
        # last crossed arc first, then the remaining crossed arcs
        candidates = [ids[-1]]
        for e in reversed(ids[:-1]):
            if e not in candidates:
                candidates.append(e)
        for k in candidates:
            try:
                flipped = flip(cur, k)
            except SurfaceError:
                continue
            new_count = _crossing_count(flipped, spec)
            if new_count >= count:
                continue
            if counter[0] >= budget:
                raise OracleError(
                    f"flip search exceeded the mutation budget ({budget})"
                )
            counter[0] += 1
            result = search(flipped, mutate_seed(cur_seed, k), new_count, flips + [k])
            if result is not None:
                return result
        return None

    result = search(T, seed, d0, [])
    if result is None:
        raise OracleError(
            "no crossing-number-decreasing flip sequence found"
        )
    return result


# ---------------------------------------------------------------------
# corpus
# ---------------------------------------------------------------------


def polygon_triangulations(m):
    """All triangulations of the convex m-gon, as diagonal lists."""

    def rec(vs):
        if len(vs) <= 3:
            yield []
            return
        v0, vlast = vs[0], vs[-1]
        for i in range(1, len(vs) - 1):
            for left in rec(vs[: i + 1]):
                for right in rec(vs[i:]):
                    extra = []
                    if i != 1:
                        extra.append((v0, vs[i]))
                    if i != len(vs) - 2:
                        extra.append((vs[i], vlast))
                    yield left + right + extra

    for diags in rec(list(range(1, m + 1))):
        yield sorted(tuple(sorted(d)) for d in diags)


def polygon_chords(m):
    """All arcs of the m-gon (non-adjacent vertex pairs)."""
    out = []
    for a in range(1, m + 1):
        for b in range(a + 2, m + 1):
            if a == 1 and b == m:
                continue
            out.append((a, b))
    return out


def polygon_corpus(max_m=8):
    """(triangulation, arc) pairs: every diagonal of every
    triangulation of every polygon with at most max_m vertices."""
    for m in range(4, max_m + 1):
        for diags in polygon_triangulations(m):
            T = build_polygon(m, diags)
            for a, b in polygon_chords(m):
                yield T, PolygonChord(a, b)


def annulus_fixture():
    """The built-in annulus triangulation (two marked points on each
    boundary circle)."""
    boundary_ids = {
        ("outer", 1): 8,
        ("outer", 2): 7,
        ("inner", 1): 5,
        ("inner", 2): 6,
    }
    return build_annulus(
        2, 2, [(1, 4, 0), (2, 4, 0), (2, 3, 1), (1, 3, 0)], boundary_ids
    )


def annulus_arcs(T, max_winding=2):
    """All arcs of the annulus of T with |winding| <= max_winding,
    deduplicated up to reversal and translation."""
    geo = T.geometry
    total = geo.p + geo.q
    seen = set()
    out = []
    for a in range(1, total + 1):
        for b in range(1, total + 1):
            for w in range(-max_winding, max_winding + 1):
                try:
                    chord = geo.chord_of_arc((a, b, w))
                except SurfaceError:
                    continue
                if _self_crossing(geo, chord):
                    continue
                key = geo.canonical(chord)
                if key in seen:
                    continue
                seen.add(key)
                out.append(AnnulusArc(a, b, w))
    return out


def _self_crossing(geo, chord):
    span = abs(chord[0][1]) + abs(chord[1][1]) + geo.p + geo.q + 2
    translates = [geo.translate(chord, s) for s in range(1, span)]
    disc = geo._window([chord] + translates)
    return any(disc.crosses(chord, t) for t in translates)


def annulus_corpus(max_winding=2):
    T = annulus_fixture()
    for arc in annulus_arcs(T, max_winding):
        yield T, arc


# ---------------------------------------------------------------------
# built-in fixtures
# ---------------------------------------------------------------------


def octagon_fixture():
    """The built-in octagon triangulation (disc, 8 marked points)."""
    return build_polygon(8, [(2, 4), (4, 6), (2, 6), (2, 8), (6, 8)])


OCTAGON_ARC = PolygonChord(3, 7)
OCTAGON_EXPANSION = (
    "x3^-1"
    " + y3 * x1^-1 * x2 * x3^-1 * x4 * x5^-1"
    " + y3 * y5 * x1^-1 * x2 * x5^-1"
    " + y1 * y3 * x1^-1 * x4 * x5^-1"
    " + y1 * y3 * y5 * x1^-1 * x3 * x5^-1"
)
OCTAGON_PATH_COUNT = 5
OCTAGON_G_VECTOR = (0, 0, -1, 0, 0)
OCTAGON_I_MINUS = frozenset({3})

ANNULUS_ARC = AnnulusArc(3, 2, 1)
ANNULUS_PATH_COUNT = 13
ANNULUS_G_VECTOR = (0, -1, 1, -1)
ANNULUS_I_MINUS = frozenset({2, 4})
ANNULUS_I_PLUS = frozenset({3, 5, 8})
# the coefficient-2 term x2^2 x4^2 y1 y2 y3 y4 / (x1^2 x2 x3 x4)
ANNULUS_DOUBLE_TERM = ((-2, 1, -1, 1), (1, 1, 1, 1))
ANNULUS_CHI_DIMENSION = (1, 1, 1, 1)


def run_selftest():
    """Verify the built-in fixtures; returns a list of mismatch
    descriptions (empty on success)."""
    from .algebra import serialize
    from .arcs import crossing_band, enumerate_paths
    from .expansion import chi_table, expand_principal, g_vector

    failures = []

    def check(label, got, want):
        if got != want:
            failures.append(f"{label}: got {got!r}, want {want!r}")

    T = octagon_fixture()
    band = crossing_band(T, OCTAGON_ARC)
    check("octagon path count", len(enumerate_paths(band)), OCTAGON_PATH_COUNT)
    check(
        "octagon expansion",
        serialize(expand_principal(T, OCTAGON_ARC)),
        OCTAGON_EXPANSION,
    )
    gv = g_vector(T, OCTAGON_ARC)
    check("octagon g-vector", gv.entries, OCTAGON_G_VECTOR)
    check("octagon I-", gv.i_minus, OCTAGON_I_MINUS)

    TA = annulus_fixture()
    bandA = crossing_band(TA, ANNULUS_ARC)
    check("annulus path count", len(enumerate_paths(bandA)), ANNULUS_PATH_COUNT)
    poly = expand_principal(TA, ANNULUS_ARC)
    check("annulus double term", poly.terms.get(ANNULUS_DOUBLE_TERM), 2)
    gvA = g_vector(TA, ANNULUS_ARC)
    check("annulus g-vector", gvA.entries, ANNULUS_G_VECTOR)
    check("annulus I-", gvA.i_minus, ANNULUS_I_MINUS)
    check("annulus I+", gvA.i_plus, ANNULUS_I_PLUS)
    check(
        "annulus chi multiplicity",
        chi_table(TA, ANNULUS_ARC).value(ANNULUS_CHI_DIMENSION),
        2,
    )

    ora = oracle_expand(T, OCTAGON_ARC)
    check("octagon oracle", serialize(ora.value), OCTAGON_EXPANSION)
    return failures


def compare_corpus(cases=None):
    """Exact oracle/path-expansion comparison; returns (n_cases,
    mismatches)."""
    from .expansion import expand_principal

    if cases is None:
        cases = list(polygon_corpus()) + list(annulus_corpus())
    mismatches = []
    count = 0
    for T, arc in cases:
        count += 1
        expected = expand_principal(T, arc)
        got = oracle_expand(T, arc).value
        if got != expected:
            mismatches.append((T, arc))
    return count, mismatches
