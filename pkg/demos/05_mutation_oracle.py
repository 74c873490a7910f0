"""
Cross-validation against seed mutation.

The oracle computes the same cluster variable without enumerating any
path: it flips crossed edges (decreasing the crossing number), mirrors
each flip by a symbolic seed mutation, and reads the variable off the
final seed.  Agreement over the whole corpus is the package's central
correctness evidence.
"""

import time

from cck.algebra import serialize
from cck.harness import (
    OCTAGON_ARC,
    compare_corpus,
    octagon_fixture,
    oracle_expand,
)
from cck.expansion import expand_principal

T = octagon_fixture()
result = oracle_expand(T, OCTAGON_ARC)
print("flip sequence:", result.flip_sequence)
print("oracle value: ", serialize(result.value))
assert result.value == expand_principal(T, OCTAGON_ARC)
print("matches the path expansion exactly\n")

start = time.monotonic()
n_cases, mismatches = compare_corpus()
elapsed = time.monotonic() - start
print(f"full corpus: {n_cases} cases, {len(mismatches)} mismatches,"
      f" {elapsed:.1f} s")
