"""
F-polynomials and g-vectors.

The F-polynomial is the expansion with every cluster variable set
to 1; the g-vector is the common multidegree of the (homogeneous)
principal expansion, computed combinatorially from two index sets of
the crossing band and verified against the grading.
"""

from cck.algebra import serialize
from cck.arcs import PolygonChord
from cck.expansion import f_polynomial, g_vector
from cck.harness import octagon_fixture

T = octagon_fixture()

for arc in (PolygonChord(3, 7), PolygonChord(1, 4), PolygonChord(2, 7)):
    F = f_polynomial(T, arc)
    gv = g_vector(T, arc)  # verify=True re-checks homogeneity
    print(f"arc {arc.a}-{arc.b}:")
    print("   F =", serialize(F))
    print(f"   g = {gv.entries}   I+ = {sorted(gv.i_plus)}"
          f"   I- = {sorted(gv.i_minus)}")
    # structure theorems: constant term 1, and a unique maximal
    # monomial divisible by all others
    assert F.constant_term() == 1
    print()
