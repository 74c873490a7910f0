"""
Laurent expansions of cluster variables from path enumeration.

Every arc gamma of the surface determines a cluster variable whose
expansion in the initial cluster of a triangulation T is

    x_gamma = sum over complete paths alpha of  x(alpha) * y(alpha),

with x(alpha) = (product of odd-step variables) / (product of crossed
variables) and y(alpha) the product of y_{i_k} over gamma-oriented even
steps.  Everything here is derived from that single enumeration:
F-polynomials (set all x_i = 1), g-vectors (degree of the unique
y-free term, with an independent index-set computation), coefficient
specializations (substitute tropical-semifield elements for the y's),
and the Euler-characteristic table (histogram of y-weights).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ExponentVector, LaurentPolynomial, tropical_eval
from .arcs import alpha_zero, crossing_band, enumerate_paths, gamma_oriented
from .surface import build_BT


class ExpansionError(ValueError):
    pass


def _band_n(band):
    if band.n is None:
        raise ExpansionError("band does not carry the interior edge count")
    return band.n


def x_weight(band, path):
    """x-exponent vector of a path: +1 per interior odd-step edge,
    -1 per crossing; boundary edges contribute nothing."""
    n = _band_n(band)
    exps = [0] * n
    for step in path.steps[::2]:
        if step.edge <= n:
            exps[step.edge - 1] += 1
    for e in band.crossed:
        exps[e - 1] -= 1
    return ExponentVector(tuple(exps), (0,) * n)


def y_weight(band, path):
    """y-exponent vector: one y_{i_k} per gamma-oriented even step."""
    n = _band_n(band)
    exps = [0] * n
    for k in range(1, band.d + 1):
        if gamma_oriented(band, path, k):
            exps[band.crossed[k - 1] - 1] += 1
    return ExponentVector((0,) * n, tuple(exps))


def _expansion_from_band(band):
    n = _band_n(band)
    poly = LaurentPolynomial.zero(n, n)
    for path in enumerate_paths(band):
        xw = x_weight(band, path)
        yw = y_weight(band, path)
        poly = poly + LaurentPolynomial.monomial(
            n, n, 1, xw.x_exponents, yw.y_exponents
        )
    return poly


def expand_principal(T, gamma):
    """The principal-coefficient Laurent expansion of x_gamma."""
    return _expansion_from_band(crossing_band(T, gamma))


def f_polynomial(T, gamma):
    """F_gamma: the expansion with every x_i set to 1 (a y-polynomial
    with positive coefficients and constant term 1)."""
    return expand_principal(T, gamma).eval_x_one()


@dataclass(frozen=True)
class GVector:
    entries: tuple
    i_plus: frozenset
    i_minus: frozenset


def g_vector(T, gamma, verify=True):
    """
    The g-vector of x_gamma, via the index sets

      I^- = { i_k : s_{k-1} = s_k != s_{k+1} },
      I^+ = { i_k : s_{k-1} != s_k = s_{k+1} } + { [gamma_-1], [gamma_d+1] },

    (conventions s_0 = s_1 and s_{d+1} != s_d), with g = sum over I^+ of
    e_h minus sum over I^- of e_h and e_h = 0 for boundary edges.

    With verify=True the result is cross-checked against the grading
    deg(x_i) = e_i, deg(y_i) = B_T e_i, under which the expansion must
    be homogeneous of degree g.
    """
    band = crossing_band(T, gamma)
    n = T.n
    if band.d == 0:
        plus, minus = [band.arc_edge], []
    else:
        plus, minus = [], []
        s = band.s_tokens
        for k in range(1, band.d + 1):
            prev_eq = (k == 1) or (s[k - 2] == s[k - 1])
            next_eq = (k < band.d) and (s[k - 1] == s[k])
            if prev_eq and not next_eq:
                minus.append(band.crossed[k - 1])
            if not prev_eq and next_eq:
                plus.append(band.crossed[k - 1])
        plus.append(band.third_side(-1))
        plus.append(band.third_side(band.d + 1))
    # the index sets range over crossing positions, so an edge crossed
    # several times can contribute with multiplicity
    entries = [0] * n
    for h in plus:
        if h <= n:
            entries[h - 1] += 1
    for h in minus:
        if h <= n:
            entries[h - 1] -= 1
    result = GVector(tuple(entries), frozenset(plus), frozenset(minus))
    if verify:
        _verify_homogeneous(T, band, result)
    return result


def _verify_homogeneous(T, band, gvec):
    """The expansion must be homogeneous of degree gvec.entries under
    deg(x_i) = e_i and deg(y_j) = -(j-th column of B_T), the grading
    that makes the hatted coefficients yhat_j = y_j prod x_i^{b_ij}
    degree-free."""
    n = T.n
    B = build_BT(T, principal=False)
    poly = _expansion_from_band(band)
    degrees = set()
    for (xa, ya) in poly.terms:
        deg = tuple(
            xa[i] - sum(B.entry(i + 1, j + 1) * ya[j] for j in range(n))
            for i in range(n)
        )
        degrees.add(deg)
    if degrees != {gvec.entries}:
        raise ExpansionError(
            f"expansion not homogeneous of degree {gvec.entries}:"
            f" found degrees {sorted(degrees)}"
        )


def expand_with_coefficients(T, gamma, semifield, y_assign):
    """
    Specialize the coefficients: y_assign maps each initial y-index
    1..n to an element of the tropical semifield.  Returns the Laurent
    polynomial in x_1..x_n with coefficient monomials u^e:

      x_gamma = (sum_alpha x(alpha) yhat(alpha)) / (F_gamma tropically
                evaluated),

    where the denominator is a single coefficient monomial, so the
    division is an exact exponent shift.
    """
    band = crossing_band(T, gamma)
    n = _band_n(band)
    ell = semifield.ell
    poly = LaurentPolynomial.zero(n, ell)
    fpoly = LaurentPolynomial.zero(n, n)
    for path in enumerate_paths(band):
        xw = x_weight(band, path)
        yw = y_weight(band, path)
        coeff = semifield.one()
        for i, e in enumerate(yw.y_exponents, start=1):
            if e:
                if i not in y_assign:
                    raise ExpansionError(f"no assignment for y{i}")
                coeff = semifield.times(coeff, semifield.power(y_assign[i], e))
        poly = poly + LaurentPolynomial.monomial(n, ell, 1, xw.x_exponents, coeff)
        fpoly = fpoly + LaurentPolynomial.monomial(
            n, n, 1, None, yw.y_exponents
        )
    denom = tropical_eval(fpoly.eval_x_one(), semifield, y_assign)
    return poly.shift(y_shift=tuple(-e for e in denom))


@dataclass(frozen=True)
class ChiTable:
    """Histogram of y-weight vectors over all complete paths: the entry
    at dimension vector e counts the paths whose gamma-oriented
    crossings realize e.  Theorematic (an Euler characteristic of a
    quiver Grassmannian) only for disc and annulus surfaces."""

    table: dict
    theorematic: bool

    def value(self, e):
        return self.table.get(tuple(e), 0)

    @property
    def path_count(self):
        return sum(self.table.values())


def chi_table(T, gamma):
    band = crossing_band(T, gamma)
    hist = {}
    for path in enumerate_paths(band):
        key = y_weight(band, path).y_exponents
        hist[key] = hist.get(key, 0) + 1
    d = T.descriptor
    theorematic = d is not None and d.genus == 0 and d.boundary_components <= 2
    return ChiTable(hist, theorematic)


def alpha_zero_term(T, gamma):
    """The x-monomial of the unique coefficient-free path."""
    band = crossing_band(T, gamma)
    return x_weight(band, alpha_zero(band))
