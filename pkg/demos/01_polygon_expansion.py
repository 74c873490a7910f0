"""
Laurent expansion of a cluster variable on a triangulated polygon.

We triangulate an octagon, pick the arc between marked points 3 and 7,
enumerate its complete paths, and sum their weights into the principal
Laurent expansion.
"""

from cck.algebra import serialize
from cck.arcs import PolygonChord, crossing_band, enumerate_paths
from cck.expansion import expand_principal
from cck.surface import build_polygon

# An octagon with diagonals (2,4), (4,6), (2,6), (2,8), (6,8).  The
# five diagonals are the mutable edges x1..x5 (in sorted order); the
# eight boundary segments are the frozen edges 6..13.
T = build_polygon(8, [(2, 4), (4, 6), (2, 6), (2, 8), (6, 8)])
print(f"rank n = {T.n}, triangles = {len(T.triangles)}")

gamma = PolygonChord(3, 7)
band = crossing_band(T, gamma)
print(f"\narc 3-7 crosses edges {band.crossed} (d = {band.d})")

print("\ncomplete paths (edge-id sequences, odd steps multiply,")
print("even steps divide and may carry a coefficient y):")
for path in enumerate_paths(band):
    print("  ", path.arcs)

poly = expand_principal(T, gamma)
print("\nLaurent expansion of x_gamma:")
print("  ", serialize(poly))

# every path contributes one monomial; the expansion has positive
# coefficients and a single denominator x1 * x3 * x5
assert sum(poly.terms.values()) == len(enumerate_paths(band))
