"""
Coefficient specialization and Euler-characteristic tables.

Arbitrary geometric coefficients are tropical-semifield elements
substituted for the principal y-variables; the chi table histograms
paths by their coefficient degree and computes Euler characteristics of
submodule Grassmannians for disc and annulus surfaces.
"""

from cck.algebra import TropicalSemifield, serialize
from cck.expansion import chi_table, expand_principal, expand_with_coefficients
from cck.harness import ANNULUS_ARC, annulus_fixture

T = annulus_fixture()
gamma = ANNULUS_ARC

# chi table: the entry at dimension vector e counts complete paths
# whose oriented crossings realize e
table = chi_table(T, gamma)
print(f"theorematic: {table.theorematic}, total paths: {table.path_count}")
for e in sorted(table.table):
    print(f"   chi(Gr_{e}) = {table.table[e]}")

# principal generators reproduce the principal expansion exactly
P = TropicalSemifield(T.n)
principal = {i: P.generator(i) for i in range(1, T.n + 1)}
assert expand_with_coefficients(T, gamma, P, principal) == expand_principal(T, gamma)

# a one-generator semifield: y1 = y4 = u, y2 = y3 = 1
Q = TropicalSemifield(1)
assign = {1: Q.element((1,)), 2: Q.one(), 3: Q.one(), 4: Q.element((1,))}
print("\nspecialized to y1 = y4 = u, y2 = y3 = 1:")
print("  ", serialize(expand_with_coefficients(T, gamma, Q, assign)))
