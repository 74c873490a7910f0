import random

import pytest
from hypothesis import given, strategies as st

from cck.algebra import serialize
from cck.seeds import (
    ExtendedMatrix,
    Seed,
    matrix_of,
    mutate_matrix,
    mutate_quiver,
    mutate_seed,
    quiver_of,
)
from cck.surface import build_BT


def random_extended(rng, n, ell):
    rows = [[0] * n for _ in range(n + ell)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(-3, 3)
            rows[i][j] = v
            rows[j][i] = -v
    for i in range(ell):
        for j in range(n):
            rows[n + i][j] = rng.randint(-3, 3)
    return ExtendedMatrix(n, ell, tuple(tuple(r) for r in rows))


@given(st.integers(0, 10**6), st.integers(2, 5), st.integers(0, 3))
def test_mutation_is_an_involution(seed, n, ell):
    rng = random.Random(seed)
    B = random_extended(rng, n, ell)
    k = rng.randint(1, n)
    assert mutate_matrix(mutate_matrix(B, k), k) == B


def test_matrix_text_roundtrip():
    rng = random.Random(7)
    B = random_extended(rng, 4, 2)
    assert ExtendedMatrix.parse(str(B)) == B


def test_entry_indexing_is_one_based():
    B = ExtendedMatrix(2, 0, ((0, 3), (-3, 0)))
    assert B.entry(1, 2) == 3
    assert B.entry(2, 1) == -3


def test_with_principal_rows(octagon):
    B = build_BT(octagon, principal=False)
    Bp = B.with_principal_rows()
    assert Bp.ell == B.n
    for i in range(1, B.n + 1):
        for j in range(1, B.n + 1):
            assert Bp.entry(B.n + i, j) == (1 if i == j else 0)


def test_seed_mutation_involution(octagon):
    seed = Seed.initial(build_BT(octagon))
    for k in (1, 3, 5):
        back = mutate_seed(mutate_seed(seed, k), k)
        assert back.matrix == seed.matrix
        assert all(
            back.value(i) == seed.value(i) for i in range(1, octagon.n + 1)
        )


def test_exchange_relation_on_octagon(octagon):
    # flipping arc 3 in the octagon: x3 * x3' = x1 x5 + y3 x2 x4
    seed = mutate_seed(Seed.initial(build_BT(octagon)), 3)
    assert (
        serialize(seed.value(3))
        == "x1 * x3^-1 * x5 + y3 * x2 * x3^-1 * x4"
    )


def test_quiver_matrix_consistency():
    rng = random.Random(11)
    for _ in range(25):
        B = random_extended(rng, 4, 2)
        k = rng.randint(1, 4)
        assert matrix_of(mutate_quiver(quiver_of(B), k)) == mutate_matrix(B, k)


def test_mutation_rejects_frozen_direction():
    B = ExtendedMatrix(2, 1, ((0, 1), (-1, 0), (1, 0)))
    with pytest.raises(ValueError):
        mutate_matrix(B, 3)
