"""
Unpunctured marked surfaces and their triangulations.

Triangulations are stored as oriented edge-triple complexes: each
triangle is a cyclic triple of edge ids whose cyclic order is the
clockwise orientation of the triangle (looking at the surface from
outside).  Interior edges carry ids 1..n, boundary edges n+1..n+m.

Polygons and annuli additionally carry a chord geometry that realises
every arc as a chord of a convex vertex arrangement (for the annulus,
of a universal-cover window), which is what powers crossing counts,
crossing sequences and flips.  Two chords cross if and only if their
endpoints interleave in the boundary cyclic order, so all of this is
exact integer combinatorics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .seeds import ExtendedMatrix


class SurfaceError(ValueError):
    """Invalid surface/triangulation data; carries a line number when
    raised by the file parser."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class SurfaceDescriptor:
    genus: int
    boundary_components: int
    marked_counts: tuple

    def __post_init__(self):
        object.__setattr__(self, "marked_counts", tuple(self.marked_counts))
        if self.genus < 0:
            raise SurfaceError("genus must be >= 0")
        if self.boundary_components < 1:
            raise SurfaceError("need at least one boundary component")
        if len(self.marked_counts) != self.boundary_components:
            raise SurfaceError("need one marked count per boundary component")
        if any(c < 1 for c in self.marked_counts):
            raise SurfaceError("each boundary component needs a marked point")
        if self.rank < 1:
            raise SurfaceError(f"rank {self.rank} < 1: degenerate surface")

    @property
    def marked_total(self):
        return sum(self.marked_counts)

    @property
    def rank(self):
        """n = 6g + 3b + m - 6."""
        return (
            6 * self.genus
            + 3 * self.boundary_components
            + self.marked_total
            - 6
        )

    @property
    def triangle_count(self):
        """n - 2(g-1) - b."""
        return self.rank - 2 * (self.genus - 1) - self.boundary_components


# ---------------------------------------------------------------------
# convex chord model
# ---------------------------------------------------------------------


class _Disc:
    """
    A set of labelled, pairwise non-crossing chords of a convex vertex
    arrangement.  `order` lists the vertex tokens counter-clockwise;
    `chords` maps frozenset({a, b}) -> edge id.  Boundary segments
    (consecutive vertices) are chords too.
    """

    def __init__(self, order, chords):
        self.order = list(order)
        self.pos = {v: i for i, v in enumerate(self.order)}
        self.chords = dict(chords)
        self.neighbors = {}
        for pair in self.chords:
            a, b = tuple(pair)
            self.neighbors.setdefault(a, set()).add(b)
            self.neighbors.setdefault(b, set()).add(a)

    def crosses(self, pair1, pair2):
        """Open-interval interleaving of endpoints in the cyclic order."""
        a, b = (self.pos[v] for v in pair1)
        c, d = (self.pos[v] for v in pair2)
        if len({a, b, c, d}) < 4:
            return False

        def between(x, lo, hi):
            if lo < hi:
                return lo < x < hi
            return x > lo or x < hi

        return between(c, a, b) != between(d, a, b)

    def cw_triangle(self, tokens):
        """Vertex triple of a face in clockwise cyclic order."""
        a, b, c = sorted(tokens, key=lambda v: self.pos[v])
        return (c, b, a)  # counter-clockwise is (a, b, c)

    def edges_cw(self, tokens):
        """Edge-id triple of a face in clockwise cyclic order."""
        p, q, r = self.cw_triangle(tokens)
        return (
            self.chords[frozenset((p, q))],
            self.chords[frozenset((q, r))],
            self.chords[frozenset((r, p))],
        )

    def faces(self):
        """All pairwise-adjacent vertex triples (= faces, since the
        chords are non-crossing and the vertices are in convex
        position)."""
        out = []
        verts = self.order
        for i, a in enumerate(verts):
            na = self.neighbors.get(a, set())
            for b in verts[i + 1 :]:
                if b not in na:
                    continue
                nb = self.neighbors.get(b, set())
                for c in verts:
                    if self.pos[c] <= self.pos[b]:
                        continue
                    if c in na and c in nb:
                        out.append((a, b, c))
        return out

    def _sides(self, a, b):
        """Vertex tokens strictly between a..b and b..a (ccw)."""
        ia, ib = self.pos[a], self.pos[b]
        m = len(self.order)
        side1 = [self.order[(ia + k) % m] for k in range(1, (ib - ia) % m)]
        side2 = [self.order[(ib + k) % m] for k in range(1, (ia - ib) % m)]
        return side1, side2

    def face_beyond(self, chord_pair, away_from):
        """The third vertex of the face adjacent to chord_pair on the
        side not containing `away_from`."""
        a, b = tuple(chord_pair)
        side1, side2 = self._sides(a, b)
        far = side2 if away_from in side1 else side1
        common = [
            v
            for v in far
            if v in self.neighbors.get(a, ()) and v in self.neighbors.get(b, ())
        ]
        if len(common) != 1:
            raise SurfaceError(
                f"chord {a}-{b} does not bound a unique triangle"
            )
        return common[0]

    def crossed_chords(self, u, v):
        """Chords crossing the chord u-v, in crossing order from u."""
        gamma = (u, v)
        hits = []
        side_a, side_b = self._sides(u, v)
        rank_a = {t: i for i, t in enumerate(side_a)}
        rank_b = {t: i for i, t in enumerate(reversed(side_b))}
        for pair in self.chords:
            if self.crosses(gamma, tuple(pair)):
                x, y = tuple(pair)
                if x in rank_b:
                    x, y = y, x
                hits.append(((rank_a[x], rank_b[y]), pair))
        hits.sort(key=lambda h: h[0])
        return [pair for _, pair in hits]

    def walk(self, u, v):
        """
        The band of faces traversed by the chord u-v: returns the pair
        (crossed chord pairs in order, face vertex-triples D_0..D_d).
        """
        crossed = self.crossed_chords(u, v)
        if not crossed:
            return [], []
        first = tuple(crossed[0])
        faces = [(first[0], first[1], u)]
        for k, pair in enumerate(crossed):
            # `away_from` must be a near-side vertex not on the chord;
            # the previous face has exactly one such vertex.
            near = [t for t in faces[-1] if t not in pair]
            if len(near) != 1:
                raise SurfaceError("crossing sequence inconsistent with faces")
            third = self.face_beyond(pair, near[0])
            a, b = tuple(pair)
            faces.append((a, b, third))
            if k + 1 < len(crossed):
                nxt = crossed[k + 1]
                if not nxt <= {a, b, third}:
                    raise SurfaceError(
                        "crossing sequence inconsistent with faces"
                    )
        if faces[-1][2] != v:
            raise SurfaceError("band does not end at the target point")
        return crossed, faces


# ---------------------------------------------------------------------
# polygon geometry
# ---------------------------------------------------------------------


class PolygonGeometry:
    """
    Disc with m marked points 1..m in counter-clockwise order.
    Boundary edge n+j joins vertices j and j+1 (cyclically).
    """

    kind = "polygon"

    def __init__(self, m, edge_chords):
        self.m = m
        self.edge_chords = dict(edge_chords)  # edge id -> frozenset pair

    def disc(self):
        chords = {pair: e for e, pair in self.edge_chords.items()}
        return _Disc(range(1, self.m + 1), chords)

    def chord_of_arc(self, arc):
        a, b = arc
        m = self.m
        if not (1 <= a <= m and 1 <= b <= m) or a == b:
            raise SurfaceError(f"invalid chord endpoints ({a},{b})")
        if (a % m) + 1 == b or (b % m) + 1 == a:
            raise SurfaceError(f"chord ({a},{b}) is a boundary arc")
        return frozenset((a, b))

    def arc_edge(self, arc):
        """Edge id if the arc is an edge of the triangulation, else None."""
        pair = self.chord_of_arc(arc)
        for e, ch in self.edge_chords.items():
            if ch == pair:
                return e
        return None

    def crossing_count(self, arc):
        pair = self.chord_of_arc(arc)
        disc = self.disc()
        return sum(
            1 for ch in disc.chords if disc.crosses(tuple(pair), tuple(ch))
        )

    def crossed_walk(self, arc):
        """(crossed edge ids, cw edge triples of D_0..D_d, cw vertex faces)."""
        a, b = arc
        self.chord_of_arc(arc)
        disc = self.disc()
        crossed, faces = disc.walk(a, b)
        ids = [disc.chords[pair] for pair in crossed]
        triples = [disc.edges_cw(face) for face in faces]
        return ids, triples


# ---------------------------------------------------------------------
# annulus geometry
# ---------------------------------------------------------------------
#
# Universal-cover tokens are ('o', j) on the outer line and ('i', j) on
# the inner line, j in Z; the deck translation adds p to outer indices
# and q to inner indices.  Outer marked point a in 1..p has base token
# ('o', a-1); inner marked point p+a has base token ('i', a-1).
# An arc (a, b, w) is the chord from the base token of a to the base
# token of b translated w periods; the implied reference cut runs
# between index -1 and index 0 on both lines.
#
# Window boundary cyclic order (counter-clockwise): outer tokens by
# increasing index, then inner tokens by decreasing index.  This is the
# orientation for which triangle cw-cycles match the clockwise
# convention used for polygons.


class AnnulusGeometry:
    kind = "annulus"

    def __init__(self, p, q, edge_chords):
        self.p = p
        self.q = q
        self.edge_chords = {e: self.canonical(ch) for e, ch in edge_chords.items()}

    # -- token helpers ------------------------------------------------

    def period(self, row):
        return self.p if row == "o" else self.q

    def translate_token(self, tok, s):
        row, j = tok
        return (row, j + s * self.period(row))

    def translate(self, chord, s):
        return (self.translate_token(chord[0], s), self.translate_token(chord[1], s))

    def canonical(self, chord):
        """Canonical representative of a chord modulo deck translation
        and endpoint order."""
        best = None
        for a, b in (chord, (chord[1], chord[0])):
            row, j = a
            per = self.period(row)
            s = -(j // per)
            cand = (self.translate_token(a, s), self.translate_token(b, s))
            if best is None or cand < best:
                best = cand
        return best

    def marked_token(self, marked):
        if 1 <= marked <= self.p:
            return ("o", marked - 1)
        if self.p < marked <= self.p + self.q:
            return ("i", marked - self.p - 1)
        raise SurfaceError(f"marked point {marked} out of range")

    def token_marked(self, tok):
        row, j = tok
        if row == "o":
            return (j % self.p) + 1
        return self.p + (j % self.q) + 1

    def chord_of_arc(self, arc):
        a, b, w = arc
        ta = self.marked_token(a)
        tb = self.translate_token(self.marked_token(b), w)
        if ta == tb:
            raise SurfaceError(f"arc ({a},{b},{w}) is contractible")
        if ta[0] == tb[0] and abs(ta[1] - tb[1]) == 1:
            raise SurfaceError(f"arc ({a},{b},{w}) is a boundary arc")
        return (ta, tb)

    def arc_of_chord(self, chord):
        """(a, b, w) spec of a canonical chord."""
        (ra, ja), (rb, jb) = self.canonical(chord)
        a = self.token_marked((ra, ja))
        b = self.token_marked((rb, jb % self.period(rb)))
        w = jb // self.period(rb)
        return (a, b, w)

    def arc_edge(self, arc):
        key = self.canonical(self.chord_of_arc(arc))
        for e, ch in self.edge_chords.items():
            if ch == key:
                return e
        return None

    # -- window construction ------------------------------------------

    def _window(self, extra_chords=()):
        """A _Disc materialising all lifts near the given chords."""
        idx = {"o": [0, self.p], "i": [0, self.q]}
        for ch in list(self.edge_chords.values()) + list(extra_chords):
            for row, j in ch:
                idx[row][0] = min(idx[row][0], j)
                idx[row][1] = max(idx[row][1], j)
        pad_o = 2 * self.p + 1
        pad_i = 2 * self.q + 1
        o_range = range(idx["o"][0] - pad_o, idx["o"][1] + pad_o + 1)
        i_range = range(idx["i"][0] - pad_i, idx["i"][1] + pad_i + 1)
        order = [("o", j) for j in o_range] + [
            ("i", j) for j in reversed(i_range)
        ]
        chords = {}
        # boundary segments
        for j in o_range[:-1]:
            seg = (j % self.p) + 1
            chords[frozenset((("o", j), ("o", j + 1)))] = ("outer", seg)
        for j in i_range[:-1]:
            seg = (j % self.q) + 1
            chords[frozenset((("i", j), ("i", j + 1)))] = ("inner", seg)
        # arc lifts
        span = len(o_range) // self.p + len(i_range) // self.q + 2
        inside = set(o_range), set(i_range)

        def in_window(ch):
            for row, j in ch:
                if j not in (inside[0] if row == "o" else inside[1]):
                    return False
            return True

        for e, base in self.edge_chords.items():
            for s in range(-span, span + 1):
                ch = self.translate(base, s)
                if in_window(ch):
                    chords[frozenset(ch)] = e
        return _Disc(order, chords)

    def resolve_boundary(self, disc, boundary_map):
        """Replace ('outer', j)/('inner', j) chord labels by edge ids."""
        for pair, label in list(disc.chords.items()):
            if isinstance(label, tuple) and label[0] in ("outer", "inner"):
                disc.chords[pair] = boundary_map[label]

    def crossing_count(self, arc, chord=None):
        """Total number of crossings of the arc with the triangulation
        (boundary segments never cross)."""
        gamma = chord if chord is not None else self.chord_of_arc(arc)
        disc = self._window([gamma])
        count = 0
        for pair, label in disc.chords.items():
            if isinstance(label, tuple):
                continue
            if disc.crosses(gamma, tuple(pair)):
                count += 1
        return count

    def crossed_walk(self, arc, boundary_map):
        gamma = self.chord_of_arc(arc)
        disc = self._window([gamma])
        self.resolve_boundary(disc, boundary_map)
        u, v = gamma
        crossed, faces = disc.walk(u, v)
        ids = [disc.chords[pair] for pair in crossed]
        triples = [disc.edges_cw(face) for face in faces]
        return ids, triples

    def window_faces(self, boundary_map):
        """Canonical faces (edge-id cw triples), one per orbit of the
        deck translation; used to build the triangle list."""
        disc = self._window()
        self.resolve_boundary(disc, boundary_map)
        seen = {}
        for face in disc.faces():
            canon = self._canonical_face(face)
            if canon in seen:
                continue
            seen[canon] = disc.edges_cw(face)
        return seen

    def _canonical_face(self, face):
        tok = min(face)
        row, j = tok
        s = -(j // self.period(row))
        return tuple(sorted(self.translate_token(t, s) for t in face))


# ---------------------------------------------------------------------
# triangulation
# ---------------------------------------------------------------------


def _rotate_min(triple):
    i = triple.index(min(triple))
    return triple[i:] + triple[:i]


class Triangulation:
    """Immutable oriented triangulation."""

    __slots__ = ("n", "m", "triangles", "descriptor", "geometry")

    def __init__(self, n, m, triangles, descriptor=None, geometry=None):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        tris = tuple(sorted(_rotate_min(tuple(t)) for t in triangles))
        object.__setattr__(self, "triangles", tris)
        object.__setattr__(self, "descriptor", descriptor)
        object.__setattr__(self, "geometry", geometry)
        self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("Triangulation is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Triangulation)
            and (self.n, self.m, self.triangles)
            == (other.n, other.m, other.triangles)
        )

    def __hash__(self):
        return hash((self.n, self.m, self.triangles))

    def is_interior(self, e):
        return 1 <= e <= self.n

    def is_boundary(self, e):
        return self.n < e <= self.n + self.m

    def _validate(self):
        counts = {}
        for tri in self.triangles:
            if len(set(tri)) != 3:
                raise SurfaceError(f"triangle {tri} has repeated sides")
            for e in tri:
                if not 1 <= e <= self.n + self.m:
                    raise SurfaceError(f"edge id {e} out of range")
                counts[e] = counts.get(e, 0) + 1
        for e in range(1, self.n + 1):
            if counts.get(e, 0) != 2:
                raise SurfaceError(
                    f"interior edge {e} lies in {counts.get(e, 0)} triangles,"
                    " expected 2"
                )
        for e in range(self.n + 1, self.n + self.m + 1):
            if counts.get(e, 0) != 1:
                raise SurfaceError(
                    f"boundary edge {e} lies in {counts.get(e, 0)} triangles,"
                    " expected 1"
                )
        if self.descriptor is not None:
            d = self.descriptor
            if d.rank != self.n or d.marked_total != self.m:
                raise SurfaceError("descriptor does not match edge counts")
            if len(self.triangles) != d.triangle_count:
                raise SurfaceError(
                    f"{len(self.triangles)} triangles, expected"
                    f" {d.triangle_count}"
                )
            self._check_euler()

    def _check_euler(self):
        """Corner-gluing Euler characteristic check (raw complexes)."""
        find = _corner_classes(self.triangles)
        vertices = {find((t, i)) for t in range(len(self.triangles)) for i in range(3)}
        chi = len(vertices) - (self.n + self.m) + len(self.triangles)
        d = self.descriptor
        if chi != 2 - 2 * d.genus - d.boundary_components:
            raise SurfaceError(
                f"Euler characteristic {chi} does not match surface"
                f" (expected {2 - 2 * d.genus - d.boundary_components})"
            )
        if len(vertices) != d.marked_total:
            raise SurfaceError(
                f"{len(vertices)} vertex classes for {d.marked_total} marked"
                " points (punctures are not supported)"
            )

    def triangles_containing(self, e):
        return [tri for tri in self.triangles if e in tri]


def _corner_classes(triangles):
    """
    Union-find over triangle corners glued along shared edges.  A
    triangle with clockwise edge cycle (e1, e2, e3) has clockwise
    vertex cycle (V0, V1, V2) with ei running from corner i-1 to
    corner i mod 3; gluing reverses the shared edge.  Returns the find
    function over corners (triangle index, 0..2).
    """
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    occur = {}
    for t, tri in enumerate(triangles):
        for i, e in enumerate(tri):
            # edge e runs from corner (t, i) to corner (t, (i+1)%3)
            occur.setdefault(e, []).append((t, i))
    for occ in occur.values():
        if len(occ) == 2:
            (t1, i1), (t2, i2) = occ
            union((t1, i1), (t2, (i2 + 1) % 3))
            union((t1, (i1 + 1) % 3), (t2, i2))
    return find


# ---------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------


def build_polygon(m, diagonals):
    """Triangulated convex m-gon; the i-th diagonal gets edge id i."""
    if m < 4:
        raise SurfaceError("polygon needs at least 4 marked points")
    n = m - 3
    if len(diagonals) != n:
        raise SurfaceError(f"need exactly {n} diagonals, got {len(diagonals)}")
    descriptor = SurfaceDescriptor(0, 1, (m,))
    edge_chords = {}
    probe = PolygonGeometry(m, {})
    for i, diag in enumerate(diagonals, start=1):
        pair = probe.chord_of_arc(tuple(diag))
        if pair in edge_chords.values():
            raise SurfaceError(f"repeated diagonal {tuple(diag)}")
        edge_chords[i] = pair
    for j in range(1, m + 1):
        edge_chords[n + j] = frozenset((j, (j % m) + 1))
    geometry = PolygonGeometry(m, edge_chords)
    disc = geometry.disc()
    pairs = [tuple(edge_chords[i]) for i in range(1, n + 1)]
    for c1, c2 in itertools.combinations(pairs, 2):
        if disc.crosses(c1, c2):
            raise SurfaceError(f"diagonals {c1} and {c2} cross")
    triangles = [disc.edges_cw(face) for face in disc.faces()]
    return Triangulation(n, m, triangles, descriptor, geometry)


def default_annulus_boundary_ids(p, q):
    out = {("outer", j): p + q + j for j in range(1, p + 1)}
    out.update({("inner", j): p + q + p + j for j in range(1, q + 1)})
    return out


def build_annulus(p, q, arcs, boundary_ids=None):
    """
    Triangulated annulus with p outer and q inner marked points.

    arcs: n = p+q triples (a, b, w); the i-th arc gets edge id i.
    boundary_ids: optional map ('outer'|'inner', segment) -> edge id in
    n+1..n+m; segment j joins marked point j and j+1 on its circle.
    """
    if p < 1 or q < 1:
        raise SurfaceError("annulus needs a marked point on each circle")
    n, m = p + q, p + q
    if len(arcs) != n:
        raise SurfaceError(f"need exactly {n} arcs, got {len(arcs)}")
    descriptor = SurfaceDescriptor(0, 2, (p, q))
    boundary_map = dict(boundary_ids or default_annulus_boundary_ids(p, q))
    expect_ids = set(range(n + 1, n + m + 1))
    if set(boundary_map.values()) != expect_ids:
        raise SurfaceError("boundary ids must be n+1..n+m, each once")
    probe = AnnulusGeometry(p, q, {})
    edge_chords = {}
    for i, arc in enumerate(arcs, start=1):
        ch = probe.canonical(probe.chord_of_arc(tuple(arc)))
        if ch in edge_chords.values():
            raise SurfaceError(f"repeated arc {tuple(arc)}")
        edge_chords[i] = ch
    geometry = AnnulusGeometry(p, q, edge_chords)
    # non-crossing check over all lift pairs
    disc = geometry._window()
    lifts = [(pair, e) for pair, e in disc.chords.items() if not isinstance(e, tuple)]
    for (pair1, e1), (pair2, e2) in itertools.combinations(lifts, 2):
        if disc.crosses(tuple(pair1), tuple(pair2)):
            raise SurfaceError(f"arcs {e1} and {e2} cross")
    faces = geometry.window_faces(boundary_map)
    if len(faces) != descriptor.triangle_count:
        raise SurfaceError(
            f"arcs do not triangulate the annulus ({len(faces)} faces,"
            f" expected {descriptor.triangle_count})"
        )
    geometry.boundary_map = boundary_map
    return Triangulation(n, m, list(faces.values()), descriptor, geometry)


def from_triangles(descriptor, triangles):
    """Raw oriented complex (any genus); validated, no geometry."""
    n = descriptor.rank
    m = descriptor.marked_total
    return Triangulation(n, m, triangles, descriptor, None)


# ---------------------------------------------------------------------
# B_T and flips
# ---------------------------------------------------------------------


def build_BT(T, principal=True):
    """
    The (2n) x n extended matrix of a triangulation: for each triangle
    with clockwise edge cycle (e1, e2, e3), each clockwise-consecutive
    pair (a, b) of interior edges contributes b_{ba} += 1, b_{ab} -= 1
    (i.e. tau_b follows tau_a counter-clockwise gives b_{ab} = +1 read
    the other way).  Principal coefficient rows are the identity.
    """
    n = T.n
    top = [[0] * n for _ in range(n)]
    for tri in T.triangles:
        for i in range(3):
            a, b = tri[i], tri[(i + 1) % 3]
            if T.is_interior(a) and T.is_interior(b):
                top[b - 1][a - 1] += 1
                top[a - 1][b - 1] -= 1
    matrix = ExtendedMatrix(n, 0, top)
    return matrix.with_principal_rows() if principal else matrix


def flip(T, k):
    """
    Flip interior edge k: the new diagonal of the quadrilateral keeps
    the id k.  Works on any oriented complex; geometry (when present)
    is updated alongside and the two computations are cross-checked.
    """
    if not T.is_interior(k):
        raise SurfaceError(f"cannot flip boundary edge {k}")
    t1, t2 = T.triangles_containing(k)
    r1 = t1[t1.index(k) :] + t1[: t1.index(k)]
    r2 = t2[t2.index(k) :] + t2[: t2.index(k)]
    _, x, y = r1
    _, z, w = r2
    new_triangles = [tri for tri in T.triangles if tri not in (t1, t2)]
    new_triangles += [(k, y, z), (k, w, x)]

    geometry = _flip_geometry(T, k)
    if isinstance(geometry, AnnulusGeometry):
        # rebuild triangles from geometry; must agree with the
        # combinatorial flip
        faces = geometry.window_faces(geometry.boundary_map)
        rebuilt = Triangulation(T.n, T.m, list(faces.values()), T.descriptor, geometry)
        combinatorial = Triangulation(T.n, T.m, new_triangles, T.descriptor, geometry)
        if rebuilt.triangles != combinatorial.triangles:
            raise SurfaceError("flip geometry/combinatorics mismatch")
        return rebuilt
    return Triangulation(T.n, T.m, new_triangles, T.descriptor, geometry)


def _flip_geometry(T, k):
    if isinstance(T.geometry, PolygonGeometry):
        geo = T.geometry
        disc = geo.disc()
        pair = geo.edge_chords[k]
        a, b = tuple(pair)
        side1, side2 = disc._sides(a, b)
        thirds = []
        for side in (side1, side2):
            common = [
                v
                for v in side
                if v in disc.neighbors[a] and v in disc.neighbors[b]
            ]
            if len(common) != 1:
                raise SurfaceError(f"edge {k} has no flip quadrilateral")
            thirds.append(common[0])
        chords = dict(geo.edge_chords)
        chords[k] = frozenset(thirds)
        return PolygonGeometry(geo.m, chords)
    if isinstance(T.geometry, AnnulusGeometry):
        geo = T.geometry
        disc = geo._window()
        base = geo.edge_chords[k]
        a, b = base
        pair = frozenset(base)
        side1, side2 = disc._sides(a, b)
        thirds = []
        for side in (side1, side2):
            common = [
                v
                for v in side
                if v in disc.neighbors[a] and v in disc.neighbors[b]
            ]
            if len(common) != 1:
                raise SurfaceError(f"edge {k} has no flip quadrilateral")
            thirds.append(common[0])
        chords = dict(geo.edge_chords)
        chords[k] = geo.canonical(tuple(thirds))
        geometry = AnnulusGeometry(geo.p, geo.q, chords)
        geometry.boundary_map = geo.boundary_map
        return geometry
    return None


# ---------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------
#
#   cck/1
#   surface g b m1 m2 ...
#   edges n m
#   tri e1 e2 e3          (one per triangle, clockwise edge cycle)
#   arc i a b w           (annulus only: geometry of interior edge i)
#   bnd e outer|inner j   (annulus only: boundary edge e = segment j)
#
# Interior edges are 1..n, boundary edges n+1..n+m.  For the disc the
# chord geometry is reconstructed from the triangles: boundary edge
# n+j joins marked points j and j+1.  The annulus geometry cannot be
# recovered from the gluing alone (windings matter), so arc/bnd lines
# carry it; the reference cut of the winding coordinates runs between
# index -1 and 0 on both boundary lines.

FORMAT_VERSION = "cck/1"


def _polygon_geometry_from_triangles(n, m, triangles):
    """Recover the chord geometry of a disc triangulation.  Boundary
    edge n+j runs from marked point j+1 to j inside its clockwise
    triangle, which pins every corner class to a marked point."""
    find = _corner_classes(triangles)
    marked = {}

    def assign(corner, vertex):
        root = find(corner)
        if marked.setdefault(root, vertex) != vertex:
            raise SurfaceError(
                "triangle gluing is inconsistent with a disc boundary"
            )

    for t, tri in enumerate(triangles):
        for i, e in enumerate(tri):
            if e > n:
                j = e - n
                assign((t, i), (j % m) + 1)
                assign((t, (i + 1) % 3), j)
    edge_chords = {}
    for t, tri in enumerate(triangles):
        for i, e in enumerate(tri):
            try:
                a = marked[find((t, i))]
                b = marked[find((t, (i + 1) % 3))]
            except KeyError:
                raise SurfaceError(
                    f"edge {e} has an endpoint not on the boundary"
                ) from None
            pair = frozenset((a, b))
            if len(pair) != 2:
                raise SurfaceError(f"edge {e} degenerates to a point")
            if edge_chords.setdefault(e, pair) != pair:
                raise SurfaceError(f"edge {e} has inconsistent endpoints")
    return PolygonGeometry(m, edge_chords)


def attach_polygon_geometry(T):
    """Triangulation of a disc with reconstructed chord geometry,
    cross-checked by re-triangulating the chords."""
    geometry = _polygon_geometry_from_triangles(T.n, T.m, T.triangles)
    disc = geometry.disc()
    rebuilt = tuple(sorted(_rotate_min(disc.edges_cw(f)) for f in disc.faces()))
    if rebuilt != T.triangles:
        raise SurfaceError(
            "reconstructed disc geometry does not reproduce the triangles"
        )
    return Triangulation(T.n, T.m, T.triangles, T.descriptor, geometry)


def write_surface_file(T):
    lines = [FORMAT_VERSION]
    d = T.descriptor
    if d is None:
        raise SurfaceError("cannot serialize a triangulation without descriptor")
    lines.append(
        "surface "
        + f"{d.genus} {d.boundary_components} "
        + " ".join(str(c) for c in d.marked_counts)
    )
    lines.append(f"edges {T.n} {T.m}")
    for tri in T.triangles:
        lines.append("tri " + " ".join(str(e) for e in tri))
    if isinstance(T.geometry, AnnulusGeometry):
        geo = T.geometry
        for e in range(1, T.n + 1):
            a, b, w = geo.arc_of_chord(geo.edge_chords[e])
            lines.append(f"arc {e} {a} {b} {w}")
        for (circle, seg), e in sorted(geo.boundary_map.items()):
            lines.append(f"bnd {e} {circle} {seg}")
    return "\n".join(lines) + "\n"


def read_surface_file(text):
    """Parse a surface file; raises SurfaceError with the offending
    line number on malformed input."""

    def fail(msg, no):
        raise SurfaceError(msg, line=no)

    def ints(parts, no):
        try:
            return [int(p) for p in parts]
        except ValueError:
            fail(f"expected integers, got {parts!r}", no)

    lines = text.splitlines()
    descriptor = None
    n = m = None
    triangles = []
    arc_lines = {}
    bnd_lines = {}
    saw_version = False
    for no, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not saw_version:
            if line != FORMAT_VERSION:
                fail(f"expected version line {FORMAT_VERSION!r}", no)
            saw_version = True
            continue
        parts = line.split()
        kind, rest = parts[0], parts[1:]
        if kind == "surface":
            if descriptor is not None:
                fail("duplicate surface line", no)
            vals = ints(rest, no)
            if len(vals) < 3:
                fail("surface line needs: g b m1 [m2 ...]", no)
            try:
                descriptor = SurfaceDescriptor(vals[0], vals[1], tuple(vals[2:]))
            except SurfaceError as exc:
                fail(str(exc), no)
        elif kind == "edges":
            vals = ints(rest, no)
            if len(vals) != 2:
                fail("edges line needs: n m", no)
            n, m = vals
        elif kind == "tri":
            vals = ints(rest, no)
            if len(vals) != 3:
                fail("tri line needs three edge ids", no)
            triangles.append(tuple(vals))
        elif kind == "arc":
            vals = ints(rest, no)
            if len(vals) != 4:
                fail("arc line needs: edge a b w", no)
            arc_lines[vals[0]] = (vals[1], vals[2], vals[3], no)
        elif kind == "bnd":
            if len(rest) != 3 or rest[1] not in ("outer", "inner"):
                fail("bnd line needs: edge outer|inner segment", no)
            e = ints([rest[0]], no)[0]
            seg = ints([rest[2]], no)[0]
            bnd_lines[(rest[1], seg)] = (e, no)
        else:
            fail(f"unknown directive {kind!r}", no)
    if not saw_version:
        fail("empty file", 1)
    if descriptor is None:
        fail("missing surface line", len(lines))
    if n is None:
        fail("missing edges line", len(lines))
    if descriptor.rank != n or descriptor.marked_total != m:
        fail(
            f"edges {n} {m} contradict the surface type"
            f" (expected {descriptor.rank} {descriptor.marked_total})",
            len(lines),
        )
    try:
        if (
            descriptor.genus == 0
            and descriptor.boundary_components == 2
            and arc_lines
        ):
            p, q = descriptor.marked_counts
            arcs = []
            for e in range(1, n + 1):
                if e not in arc_lines:
                    raise SurfaceError(f"missing arc line for edge {e}")
                a, b, w, _ = arc_lines[e]
                arcs.append((a, b, w))
            boundary_ids = {key: e for key, (e, _) in bnd_lines.items()}
            T = build_annulus(p, q, arcs, boundary_ids or None)
            given = Triangulation(n, m, triangles, descriptor, None)
            if given.triangles != T.triangles:
                raise SurfaceError(
                    "tri lines disagree with the geometry of the arc lines"
                )
            return T
        if arc_lines or bnd_lines:
            raise SurfaceError("arc/bnd lines are only valid for an annulus")
        T = Triangulation(n, m, triangles, descriptor, None)
        if descriptor.genus == 0 and descriptor.boundary_components == 1:
            return attach_polygon_geometry(T)
        return T
    except SurfaceError as exc:
        if exc.line is None:
            raise SurfaceError(str(exc), line=len(lines)) from None
        raise
