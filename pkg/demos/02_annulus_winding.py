"""
An annulus arc that winds around the core curve.

On surfaces with non-trivial topology an arc can cross the same
triangulation edge several times, and distinct paths can contribute the
same monomial: the expansion has a coefficient 2.
"""

from cck.algebra import serialize
from cck.arcs import AnnulusArc, crossing_band, enumerate_paths
from cck.expansion import expand_principal
from cck.surface import build_annulus

# Annulus with two marked points on each boundary circle, triangulated
# by four arcs (the third number is the winding of each arc).
T = build_annulus(
    2,
    2,
    [(1, 4, 0), (2, 4, 0), (2, 3, 1), (1, 3, 0)],
    {("outer", 1): 8, ("outer", 2): 7, ("inner", 1): 5, ("inner", 2): 6},
)

gamma = AnnulusArc(3, 2, 1)  # from point 3 to point 2, winding once
band = crossing_band(T, gamma)
print(f"arc crosses {band.crossed}: edge 1 is crossed twice")

paths = enumerate_paths(band)
print(f"\n{len(paths)} complete paths:")
for path in paths:
    print("  ", path.arcs)

poly = expand_principal(T, gamma)
print("\nexpansion:", serialize(poly))
doubles = {k: c for k, c in poly.terms.items() if c > 1}
print(f"\n{len(doubles)} monomials are hit by two different paths:")
for (xa, ya), c in sorted(doubles.items()):
    print(f"   coefficient {c} at x-exponents {xa}, y-exponents {ya}")
