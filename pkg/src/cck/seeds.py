"""
Seeds and mutation: extended exchange matrices, symbolic exchange
relations of geometric type, and the quiver view with coefficient
vertices.

All direction indices k are 1-based (matching edge ids elsewhere).
An ExtendedMatrix has n exchange columns and n+ell rows; the rows
beyond n are the coefficient rows, e.g. the identity block for
principal coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import LaurentPolynomial


def _pos(v):
    return v if v > 0 else 0


class ExtendedMatrix:
    """(n+ell) x n integer matrix; immutable."""

    __slots__ = ("n", "ell", "rows")

    def __init__(self, n, ell, rows):
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != n + ell or any(len(r) != n for r in rows):
            raise ValueError("matrix shape mismatch")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "ell", ell)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("ExtendedMatrix is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, ExtendedMatrix)
            and (self.n, self.ell, self.rows) == (other.n, other.ell, other.rows)
        )

    def __hash__(self):
        return hash((self.n, self.ell, self.rows))

    def entry(self, i, j):
        """b_{ij} with 1-based indices, i up to n+ell, j up to n."""
        return self.rows[i - 1][j - 1]

    def top_block(self):
        return self.rows[: self.n]

    def is_skew_symmetric_top(self):
        top = self.top_block()
        return all(
            top[i][j] == -top[j][i] for i in range(self.n) for j in range(self.n)
        )

    def with_principal_rows(self):
        """Append an identity coefficient block (principal coefficients)."""
        ident = tuple(
            tuple(1 if i == j else 0 for j in range(self.n)) for i in range(self.n)
        )
        return ExtendedMatrix(self.n, self.n, self.top_block() + ident)

    def __str__(self):
        head = f"{self.n} {self.ell}"
        body = "\n".join(" ".join(str(v) for v in row) for row in self.rows)
        return head + "\n" + body

    @staticmethod
    def parse(text):
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        n, ell = map(int, lines[0].split())
        rows = [[int(v) for v in ln.split()] for ln in lines[1:]]
        return ExtendedMatrix(n, ell, rows)


def mutate_matrix(matrix, k):
    """
    Matrix mutation in direction k (1-based), applied to all n+ell rows:

        b'_ij = -b_ij                      if i = k or j = k,
                b_ij + [-b_ik]_+ b_kj + b_ik [b_kj]_+   otherwise.
    """
    n, ell = matrix.n, matrix.ell
    if not 1 <= k <= n:
        raise ValueError(f"direction {k} out of range 1..{n}")
    b = matrix.rows
    kk = k - 1
    new_rows = []
    for i in range(n + ell):
        row = []
        for j in range(n):
            if i == kk or j == kk:
                row.append(-b[i][j])
            else:
                row.append(
                    b[i][j] + _pos(-b[i][kk]) * b[kk][j] + b[i][kk] * _pos(b[kk][j])
                )
        new_rows.append(row)
    return ExtendedMatrix(n, ell, new_rows)


@dataclass(frozen=True)
class Seed:
    """
    A seed of geometric type: extended matrix, cluster labels and the
    cluster variables written as Laurent polynomials in the initial
    cluster (x-variables) and the coefficient generators (y-variables).
    """

    matrix: ExtendedMatrix
    cluster_labels: tuple
    cluster_values: tuple

    @staticmethod
    def initial(matrix, labels=None):
        n, ell = matrix.n, matrix.ell
        if labels is None:
            labels = tuple(f"x{i}" for i in range(1, n + 1))
        values = tuple(
            LaurentPolynomial.x_var(n, ell, i) for i in range(1, n + 1)
        )
        return Seed(matrix, tuple(labels), values)

    def value(self, k):
        """Cluster variable at slot k (1-based)."""
        return self.cluster_values[k - 1]


def _exchange_monomials(seed, k):
    """The two monomials of the exchange binomial at direction k."""
    matrix = seed.matrix
    n, ell = matrix.n, matrix.ell
    plus = LaurentPolynomial.one(n, ell)
    minus = LaurentPolynomial.one(n, ell)
    for i in range(1, n + 1):
        b = matrix.entry(i, k)
        if b > 0:
            plus = plus * seed.cluster_values[i - 1] ** b
        elif b < 0:
            minus = minus * seed.cluster_values[i - 1] ** (-b)
    for i in range(1, ell + 1):
        b = matrix.entry(n + i, k)
        if b > 0:
            plus = plus * LaurentPolynomial.y_var(n, ell, i) ** b
        elif b < 0:
            minus = minus * LaurentPolynomial.y_var(n, ell, i) ** (-b)
    return plus, minus


def mutate_seed(seed, k):
    """
    Seed mutation in direction k: the geometric-type exchange relation

        x_k x_k' = prod x_i^{[b_ik]_+} prod u_i^{[b_(n+i)k]_+}
                 + prod x_i^{[-b_ik]_+} prod u_i^{[-b_(n+i)k]_+}

    solved for x_k' by exact division in the Laurent ring.
    """
    n = seed.matrix.n
    if not 1 <= k <= n:
        raise ValueError(f"direction {k} out of range 1..{n}")
    plus, minus = _exchange_monomials(seed, k)
    new_value = (plus + minus).divide_exact(seed.cluster_values[k - 1])
    values = list(seed.cluster_values)
    values[k - 1] = new_value
    labels = list(seed.cluster_labels)
    labels[k - 1] = f"mu{k}({labels[k - 1]})"
    return Seed(mutate_matrix(seed.matrix, k), tuple(labels), tuple(values))


# ---------------------------------------------------------------------
# quiver view
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class QuiverView:
    """
    Arrow multiset of an extended matrix: vertices 1..n are mutable,
    n+1..n+ell are coefficient (frozen) vertices.  arrows maps the pair
    (i, j) to the number of arrows i -> j (always > 0 when present).
    """

    n: int
    ell: int
    arrows: tuple  # sorted tuple of ((i, j), count)

    def arrow_count(self, i, j):
        return dict(self.arrows).get((i, j), 0)


def quiver_of(matrix):
    """b_ij > 0 gives b_ij arrows i -> j (coefficient rows included)."""
    n, ell = matrix.n, matrix.ell
    arrows = {}
    for i in range(1, n + ell + 1):
        for j in range(1, n + 1):
            b = matrix.entry(i, j)
            if b > 0:
                arrows[(i, j)] = b
            elif b < 0 and i > n:
                # no exchange column for a coefficient vertex: record the
                # reversed arrow j -> i explicitly
                arrows[(j, i)] = -b
    return QuiverView(n, ell, tuple(sorted(arrows.items())))


def matrix_of(quiver):
    """Inverse of quiver_of (exact reconstruction)."""
    n, ell = quiver.n, quiver.ell
    rows = [[0] * n for _ in range(n + ell)]
    for (i, j), count in quiver.arrows:
        if j <= n:
            rows[i - 1][j - 1] = count
            if i <= n:
                rows[j - 1][i - 1] = -count
        else:
            rows[j - 1][i - 1] = -count
    return ExtendedMatrix(n, ell, rows)


def mutate_quiver(quiver, k):
    """
    Quiver mutation at a mutable vertex k, implemented directly on the
    arrow multiset (independent of the matrix formula):

      1. for every path i -> k -> j add an arrow i -> j,
      2. reverse all arrows at k,
      3. cancel 2-cycles maximally.
    """
    if not 1 <= k <= quiver.n:
        raise ValueError("can only mutate at a mutable vertex")
    counts = dict(quiver.arrows)

    into_k = {i: c for (i, j), c in counts.items() if j == k}
    out_k = {j: c for (i, j), c in counts.items() if i == k}

    # step 1: compose through k (never between two frozen vertices)
    for i, ci in into_k.items():
        for j, cj in out_k.items():
            if i > quiver.n and j > quiver.n:
                continue
            counts[(i, j)] = counts.get((i, j), 0) + ci * cj
    # step 2: reverse at k
    for i, c in into_k.items():
        del counts[(i, k)]
        counts[(k, i)] = counts.get((k, i), 0) + c
    for j, c in out_k.items():
        del counts[(k, j)]
        counts[(j, k)] = counts.get((j, k), 0) + c
    # step 3: cancel 2-cycles
    for (i, j) in list(counts):
        if i < j and (j, i) in counts:
            a, b = counts[(i, j)], counts[(j, i)]
            m = min(a, b)
            for key, v in (((i, j), a - m), ((j, i), b - m)):
                if v:
                    counts[key] = v
                else:
                    del counts[key]
    arrows = {pair: c for pair, c in counts.items() if c}
    return QuiverView(quiver.n, quiver.ell, tuple(sorted(arrows.items())))
