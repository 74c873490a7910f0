"""
Arcs, crossing bands, and complete path enumeration.

An arc gamma that crosses the triangulation in arcs tau_{i_1}..tau_{i_d}
traverses a band of triangles D_0..D_d.  Unfolding that band gives a
triangulated (d+3)-gon, the *strip*, with vertices numbered 0..d+2:
vertex 0 is the start point of gamma, vertex d+2 its end point, and
vertex k+2 is the vertex of D_k not on the shared edge tau_{i_k}.
Working in the strip makes the homotopy condition on paths a purely
local matter: a complete path is any edge walk of length 2d+1 from 0 to
d+2 whose even steps traverse the strip chords of tau_{i_1}..tau_{i_d}
in order.

Path steps record strip vertices, so loops and repeated crossings of
the same arc (possible on the annulus) stay unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass

from .surface import (
    AnnulusGeometry,
    PolygonGeometry,
    SurfaceError,
    Triangulation,
)


class ArcError(ValueError):
    pass


@dataclass(frozen=True)
class PolygonChord:
    a: int
    b: int


@dataclass(frozen=True)
class AnnulusArc:
    a: int
    b: int
    winding: int


@dataclass(frozen=True)
class ExplicitBand:
    """A crossing band given directly: the crossed edge ids and the
    clockwise edge triples of the traversed triangles.  For d = 0 the
    band is just the edge id of the arc itself."""

    crossed: tuple
    triangles: tuple
    arc_edge: int = None


@dataclass(frozen=True)
class PathStep:
    edge: int
    frm: int  # strip vertex
    to: int  # strip vertex


@dataclass(frozen=True)
class CompletePath:
    steps: tuple

    @property
    def arcs(self):
        """Edge-id sequence of the path's steps."""
        return tuple(s.edge for s in self.steps)

    def __len__(self):
        return len(self.steps)


class CrossingBand:
    """
    The band of an arc gamma: crossed edges i_1..i_d, triangles
    D_0..D_d as clockwise edge triples, the strip unfolding, third
    sides [gamma_-1]..[gamma_d+1] and crossing endpoint labels
    s_k / t_k (strip vertices; the even step of a path is gamma-oriented
    when it runs t_k -> s_k).
    """

    __slots__ = (
        "d",
        "crossed",
        "triangles",
        "arc_edge",
        "third",
        "s_tokens",
        "t_tokens",
        "strip_edges",
        "source",
        "target",
        "n",
    )

    def __init__(self, crossed, triangles, arc_edge=None, n=None):
        object.__setattr__(self, "n", n)
        crossed = tuple(crossed)
        triangles = tuple(tuple(t) for t in triangles)
        d = len(crossed)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "crossed", crossed)
        object.__setattr__(self, "triangles", triangles)
        object.__setattr__(self, "arc_edge", arc_edge)
        object.__setattr__(self, "source", 0)
        object.__setattr__(self, "target", d + 2 if d else 1)
        if d == 0:
            if arc_edge is None or triangles:
                raise ArcError("a crossing-free band is a single edge")
            object.__setattr__(self, "third", {})
            object.__setattr__(self, "s_tokens", ())
            object.__setattr__(self, "t_tokens", ())
            object.__setattr__(self, "strip_edges", {frozenset((0, 1)): arc_edge})
            return
        if len(triangles) != d + 1:
            raise ArcError(f"need {d + 1} triangles for {d} crossings")
        self._unfold()

    def __setattr__(self, name, value):
        raise AttributeError("CrossingBand is immutable")

    @staticmethod
    def _rotate(triple, e, position):
        if len(set(triple)) != 3:
            raise ArcError(f"triangle {triple} has repeated sides")
        if e not in triple:
            raise ArcError(f"edge {e} is not a side of triangle {triple}")
        i = (triple.index(e) - position) % 3
        return triple[i:] + triple[:i]

    def _unfold(self):
        d, crossed, triangles = self.d, self.crossed, self.triangles
        third = {}
        edges = {}
        s_tokens, t_tokens = [], []
        # D_0 with clockwise vertex cycle (0, 1, 2); rotate its edge
        # triple so tau_{i_1} (the side 1->2, opposite vertex 0) comes
        # second: ([gamma_-1], i_1, [gamma_0]).
        e_sx, i1, e_ys = self._rotate(triangles[0], crossed[0], 1)
        edges[frozenset((0, 1))] = e_sx
        edges[frozenset((1, 2))] = i1
        edges[frozenset((2, 0))] = e_ys
        third[-1] = e_sx
        third[0] = e_ys
        p, q = 1, 2  # tau_{i_k} ran p -> q in D_{k-1}
        for k in range(1, d + 1):
            # D_k has clockwise vertex cycle (q, p, new): the shared
            # edge reverses orientation.  Rotating its triple to start
            # with i_k gives (i_k, g, h) with g = p->new, h = new->q.
            new = k + 2
            ik, g, h = self._rotate(triangles[k], crossed[k - 1], 0)
            edges[frozenset((p, new))] = g
            edges[frozenset((new, q))] = h
            s_tokens.append(p)
            t_tokens.append(q)
            if k < d:
                nxt = crossed[k]
                if nxt == g:
                    third[k] = h
                    p, q = p, new
                elif nxt == h:
                    third[k] = g
                    p, q = new, q
                else:
                    raise ArcError(
                        f"crossing {k + 1} (edge {nxt}) is not a side of"
                        f" triangle {triangles[k]}"
                    )
            else:
                third[d] = g
                third[d + 1] = h
        object.__setattr__(self, "third", third)
        object.__setattr__(self, "s_tokens", tuple(s_tokens))
        object.__setattr__(self, "t_tokens", tuple(t_tokens))
        object.__setattr__(self, "strip_edges", edges)

    # -- accessors ----------------------------------------------------

    def third_side(self, k):
        """[gamma_k] for k in -1..d+1."""
        if k not in self.third:
            raise ArcError(f"third-side index {k} out of range -1..{self.d + 1}")
        return self.third[k]

    def s_label(self, k):
        return self.s_tokens[k - 1]

    def t_label(self, k):
        return self.t_tokens[k - 1]

    def crossing_chord(self, k):
        """Strip vertex pair of tau_{i_k} (1-based k)."""
        return (self.s_tokens[k - 1], self.t_tokens[k - 1])

    def reversed(self):
        """The band of the same arc traversed backwards."""
        if self.d == 0:
            return CrossingBand((), (), self.arc_edge, n=self.n)
        return CrossingBand(self.crossed[::-1], self.triangles[::-1], n=self.n)


# ---------------------------------------------------------------------
# band construction
# ---------------------------------------------------------------------


def crossing_band(T, gamma):
    """The crossing band of an arc in a triangulation."""
    geo = T.geometry
    if isinstance(gamma, PolygonChord):
        if not isinstance(geo, PolygonGeometry):
            raise ArcError("chord arcs need a polygon triangulation")
        e = geo.arc_edge((gamma.a, gamma.b))
        if e is not None:
            return CrossingBand((), (), e, n=T.n)
        ids, triples = geo.crossed_walk((gamma.a, gamma.b))
        return CrossingBand(ids, triples, n=T.n)
    if isinstance(gamma, AnnulusArc):
        if not isinstance(geo, AnnulusGeometry):
            raise ArcError("winding arcs need an annulus triangulation")
        spec = (gamma.a, gamma.b, gamma.winding)
        e = geo.arc_edge(spec)
        if e is not None:
            return CrossingBand((), (), e, n=T.n)
        ids, triples = geo.crossed_walk(spec, geo.boundary_map)
        return CrossingBand(ids, triples, n=T.n)
    if isinstance(gamma, ExplicitBand):
        band = CrossingBand(gamma.crossed, gamma.triangles, gamma.arc_edge, n=T.n)
        _validate_band_against(T, band)
        return band
    raise ArcError(f"unsupported arc spec {gamma!r}")


def _validate_band_against(T, band):
    if band.d == 0:
        if not T.is_interior(band.arc_edge):
            raise ArcError(f"edge {band.arc_edge} is not an interior edge")
        return
    rotations = {
        tri[i:] + tri[:i] for tri in T.triangles for i in range(3)
    }
    for tri in band.triangles:
        if tuple(tri) not in rotations:
            raise ArcError(
                f"triple {tri} is not an oriented triangle of the"
                " triangulation"
            )
    for e in band.crossed:
        if not T.is_interior(e):
            raise ArcError(f"cannot cross non-interior edge {e}")


# ---------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------


def enumerate_paths(band):
    """
    All complete paths of the band, sorted by the sequence of
    (edge id, from, to) step triples.

    Walks the strip: from a position before crossing k, the admissible
    odd step is any strip edge into an endpoint of the next crossing
    chord; the even step then crosses the chord.  These odd steps are
    exactly the sides of the triangle D_{k-1}, so the branching is 2 at
    a non-shared endpoint and 1 at a shared endpoint.
    """
    if band.d == 0:
        return [CompletePath((PathStep(band.arc_edge, 0, 1),))]
    out = []
    edges = band.strip_edges

    def rec(pos, k, steps):
        if k > band.d:
            e = edges.get(frozenset((pos, band.target)))
            if e is not None:
                out.append(CompletePath(tuple(steps + [PathStep(e, pos, band.target)])))
            return
        p, q = band.crossing_chord(k)
        chord_edge = band.crossed[k - 1]
        for nxt, other in ((p, q), (q, p)):
            if nxt == pos:
                continue
            e = edges.get(frozenset((pos, nxt)))
            if e is None:
                continue
            rec(
                other,
                k + 1,
                steps + [PathStep(e, pos, nxt), PathStep(chord_edge, nxt, other)],
            )

    rec(band.source, 1, [])
    out.sort(key=lambda path: tuple((s.edge, s.frm, s.to) for s in path.steps))
    return out


def gamma_oriented(band, path, k):
    """Whether even step 2k runs tau_{i_k} against its orientation in
    D_{k-1} (i.e. t_k -> s_k, the orientation induced by D_k)."""
    if not 1 <= k <= band.d:
        raise ArcError(f"crossing index {k} out of range 1..{band.d}")
    step = path.steps[2 * k - 1]
    s, t = band.s_label(k), band.t_label(k)
    if (step.frm, step.to) == (t, s):
        return True
    if (step.frm, step.to) == (s, t):
        return False
    raise ArcError(f"step {2 * k} does not traverse crossing {k}")


def alpha_zero(band):
    """
    The unique complete path with no gamma-oriented even step, built
    directly: even steps run s_k -> t_k; the odd step between
    crossings k and k+1 backtracks tau_{i_k} when the s-labels agree
    and pre-traverses tau_{i_{k+1}} when the t-labels agree; the first
    and last steps are [gamma_-1] and [gamma_d+1].
    """
    if band.d == 0:
        return CompletePath((PathStep(band.arc_edge, 0, 1),))
    steps = [PathStep(band.third_side(-1), 0, band.s_label(1))]
    for k in range(1, band.d + 1):
        s, t = band.s_label(k), band.t_label(k)
        steps.append(PathStep(band.crossed[k - 1], s, t))
        if k < band.d:
            s2, t2 = band.s_label(k + 1), band.t_label(k + 1)
            if s == s2:
                steps.append(PathStep(band.crossed[k - 1], t, s))
            elif t == t2:
                steps.append(PathStep(band.crossed[k], t2, s2))
            else:
                raise ArcError("consecutive crossings share no endpoint")
    steps.append(PathStep(band.third_side(band.d + 1), band.t_label(band.d), band.target))
    return CompletePath(tuple(steps))
