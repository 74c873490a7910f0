"""
Exact sparse arithmetic: multivariate Laurent polynomials over arbitrary
precision integers, and tropical (min-plus) semifield evaluation.

A polynomial lives in the ring  Z[y1..y_ny][x1, 1/x1, .., x_nx, 1/x_nx]:
x-exponents may be negative, y-exponents are ordinarily non-negative
(coefficient specialisation may produce negative y-exponents; the class
itself does not forbid them).  Terms are keyed by an (x, y) exponent
pair and iterated in lexicographic order on (y, x), which makes the
text form canonical.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ExponentVector:
    """A single monomial: x-exponents (any sign) and y-exponents."""

    x_exponents: tuple
    y_exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, "x_exponents", tuple(self.x_exponents))
        object.__setattr__(self, "y_exponents", tuple(self.y_exponents))


def _add_tuples(a, b):
    return tuple(i + j for i, j in zip(a, b))


def _sub_tuples(a, b):
    return tuple(i - j for i, j in zip(a, b))


class LaurentPolynomial:
    """
    Immutable sparse Laurent polynomial.

    terms maps (x_exponents, y_exponents) -> nonzero int coefficient.
    """

    __slots__ = ("nx", "ny", "terms")

    def __init__(self, nx, ny, terms=None):
        object.__setattr__(self, "nx", nx)
        object.__setattr__(self, "ny", ny)
        clean = {}
        for key, coeff in (terms or {}).items():
            if isinstance(key, ExponentVector):
                key = (key.x_exponents, key.y_exponents)
            xs, ys = tuple(key[0]), tuple(key[1])
            if len(xs) != nx or len(ys) != ny:
                raise ValueError("exponent vector rank mismatch")
            if coeff:
                clean[(xs, ys)] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(nx, ny):
        return LaurentPolynomial(nx, ny, {})

    @staticmethod
    def one(nx, ny):
        return LaurentPolynomial.monomial(nx, ny, 1)

    @staticmethod
    def monomial(nx, ny, coeff, x_exponents=None, y_exponents=None):
        xs = tuple(x_exponents) if x_exponents is not None else (0,) * nx
        ys = tuple(y_exponents) if y_exponents is not None else (0,) * ny
        return LaurentPolynomial(nx, ny, {(xs, ys): coeff})

    @staticmethod
    def x_var(nx, ny, i):
        """The generator x_i (1-based)."""
        xs = tuple(1 if j == i - 1 else 0 for j in range(nx))
        return LaurentPolynomial.monomial(nx, ny, 1, xs)

    @staticmethod
    def y_var(nx, ny, i):
        """The generator y_i (1-based)."""
        ys = tuple(1 if j == i - 1 else 0 for j in range(ny))
        return LaurentPolynomial.monomial(nx, ny, 1, None, ys)

    # -- basics -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {((0,) * self.nx, (0,) * self.ny): 1}

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPolynomial)
            and self.nx == other.nx
            and self.ny == other.ny
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nx, self.ny, frozenset(self.terms.items())))

    def _check_rank(self, other):
        if self.nx != other.nx or self.ny != other.ny:
            raise ValueError("rank mismatch")

    def canonical_terms(self):
        """Terms sorted lexicographically on (y_exponents, x_exponents)."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        self._check_rank(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            new = terms.get(key, 0) + coeff
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
        return LaurentPolynomial(self.nx, self.ny, terms)

    def __neg__(self):
        return LaurentPolynomial(
            self.nx, self.ny, {k: -c for k, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_rank(other)
        terms = {}
        for (xa, ya), ca in self.terms.items():
            for (xb, yb), cb in other.terms.items():
                key = (_add_tuples(xa, xb), _add_tuples(ya, yb))
                new = terms.get(key, 0) + ca * cb
                if new:
                    terms[key] = new
                else:
                    terms.pop(key, None)
        return LaurentPolynomial(self.nx, self.ny, terms)

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = LaurentPolynomial.one(self.nx, self.ny)
        for _ in range(exponent):
            result = result * self
        return result

    def scalar_mul(self, c):
        return LaurentPolynomial(
            self.nx, self.ny, {k: c * v for k, v in self.terms.items()}
        )

    def shift(self, x_shift=None, y_shift=None):
        """Multiply by the monomial x^x_shift * y^y_shift (exponent shift)."""
        xs = tuple(x_shift) if x_shift is not None else (0,) * self.nx
        ys = tuple(y_shift) if y_shift is not None else (0,) * self.ny
        return LaurentPolynomial(
            self.nx,
            self.ny,
            {
                (_add_tuples(xa, xs), _add_tuples(ya, ys)): c
                for (xa, ya), c in self.terms.items()
            },
        )

    def x_degree(self):
        """Sum over x of exponent-weighted ... no: the common multidegree
        check helper: returns the set of distinct x exponent vectors."""
        return {xa for (xa, _) in self.terms}

    def constant_term(self):
        return self.terms.get(((0,) * self.nx, (0,) * self.ny), 0)

    def eval_x_one(self):
        """Substitute every x_i := 1 (collapse to a y-polynomial)."""
        terms = {}
        zero_x = (0,) * self.nx
        for (_, ya), c in self.terms.items():
            key = (zero_x, ya)
            new = terms.get(key, 0) + c
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
        return LaurentPolynomial(self.nx, self.ny, terms)

    def eval_y_one(self):
        """Substitute every y_i := 1 (collapse to an x-polynomial)."""
        terms = {}
        zero_y = (0,) * self.ny
        for (xa, _), c in self.terms.items():
            key = (xa, zero_y)
            new = terms.get(key, 0) + c
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
        return LaurentPolynomial(self.nx, self.ny, terms)

    # -- division -----------------------------------------------------

    def divide_monomial(self, monomial):
        """Exact division by a unit-coefficient monomial (always exact)."""
        if isinstance(monomial, ExponentVector):
            xs, ys = monomial.x_exponents, monomial.y_exponents
        else:
            xs, ys = tuple(monomial[0]), tuple(monomial[1])
        return self.shift(tuple(-e for e in xs), tuple(-e for e in ys))

    def divide_exact(self, divisor, max_steps=100000):
        """
        Exact division by another polynomial.

        Raises ValueError if the division is not exact (in context this
        signals a genuine bug: the Laurent phenomenon guarantees
        exactness for every exchange-relation division).
        """
        self._check_rank(divisor)
        if divisor.is_zero():
            raise ValueError("division by zero polynomial")
        remainder = dict(self.terms)
        quotient = {}

        def lead(terms):
            return max(terms, key=lambda k: (k[1], k[0]))

        lead_d = lead(divisor.terms)
        coeff_d = divisor.terms[lead_d]
        steps = 0
        while remainder:
            steps += 1
            if steps > max_steps:
                raise ValueError("non-exact division (no termination)")
            lead_r = lead(remainder)
            coeff_r = remainder[lead_r]
            if coeff_r % coeff_d:
                raise ValueError("non-exact division (coefficient)")
            q_key = (
                _sub_tuples(lead_r[0], lead_d[0]),
                _sub_tuples(lead_r[1], lead_d[1]),
            )
            q_coeff = coeff_r // coeff_d
            quotient[q_key] = quotient.get(q_key, 0) + q_coeff
            for (xd, yd), cd in divisor.terms.items():
                key = (_add_tuples(q_key[0], xd), _add_tuples(q_key[1], yd))
                new = remainder.get(key, 0) - q_coeff * cd
                if new:
                    remainder[key] = new
                else:
                    remainder.pop(key, None)
        return LaurentPolynomial(self.nx, self.ny, quotient)

    # -- text form ----------------------------------------------------

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"LaurentPolynomial({self.nx}, {self.ny}, {serialize(self)!r})"


def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


def poly_divide_exact(a, b_monomial):
    return a.divide_monomial(b_monomial)


# ---------------------------------------------------------------------
# canonical text form
# ---------------------------------------------------------------------
#
# Grammar:  poly  := "0" | term (" + " term)*
#           term  := factor (" * " factor)*
#           factor:= integer | var | var "^" integer
#           var   := ("y" | "x") positive-integer
# The integer coefficient factor is omitted when it equals 1 and the
# term has at least one variable factor; exponent "^1" is omitted.
# y-factors precede x-factors; within each block variables appear in
# increasing index order.  Terms appear in lexicographic order on the
# (y_exponents, x_exponents) pair.


def serialize(p):
    if p.is_zero():
        return "0"
    chunks = []
    for (xs, ys), coeff in p.canonical_terms():
        factors = []
        if coeff != 1:
            factors.append(str(coeff))
        for name, exps in (("y", ys), ("x", xs)):
            for i, e in enumerate(exps, start=1):
                if e == 0:
                    continue
                factors.append(f"{name}{i}" if e == 1 else f"{name}{i}^{e}")
        if not factors:
            factors.append("1")
        chunks.append(" * ".join(factors))
    return " + ".join(chunks)


def parse(text, nx, ny):
    """Inverse of serialize (accepts any term/factor order)."""
    text = text.strip()
    if text == "0":
        return LaurentPolynomial.zero(nx, ny)
    terms = {}
    for chunk in text.split(" + "):
        coeff = 1
        xs = [0] * nx
        ys = [0] * ny
        for factor in chunk.split(" * "):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in term {chunk!r}")
            if factor[0] in "xy":
                if "^" in factor:
                    var, exp = factor.split("^", 1)
                    e = int(exp)
                else:
                    var, e = factor, 1
                idx = int(var[1:]) - 1
                if var[0] == "x":
                    if not 0 <= idx < nx:
                        raise ValueError(f"bad variable {var!r}")
                    xs[idx] += e
                else:
                    if not 0 <= idx < ny:
                        raise ValueError(f"bad variable {var!r}")
                    ys[idx] += e
            else:
                coeff *= int(factor)
        key = (tuple(xs), tuple(ys))
        terms[key] = terms.get(key, 0) + coeff
    return LaurentPolynomial(nx, ny, terms)


# ---------------------------------------------------------------------
# tropical semifield
# ---------------------------------------------------------------------


class TropicalSemifield:
    """
    Trop(u_1, ..., u_ell): elements are integer exponent vectors of
    length ell; multiplication is componentwise addition and the
    auxiliary addition u^a (+) u^b = u^min(a,b) componentwise.
    """

    def __init__(self, ell):
        if ell < 0:
            raise ValueError("ell must be >= 0")
        self.ell = ell

    def one(self):
        return (0,) * self.ell

    def element(self, exponents):
        exps = tuple(exponents)
        if len(exps) != self.ell:
            raise ValueError("wrong element length")
        return exps

    def times(self, a, b):
        return _add_tuples(a, b)

    def power(self, a, k):
        return tuple(e * k for e in a)

    def oplus(self, a, b):
        return tuple(min(i, j) for i, j in zip(a, b))

    def generator(self, i):
        """u_i (1-based)."""
        return tuple(1 if j == i - 1 else 0 for j in range(self.ell))


def tropical_eval(p, semifield, assignment):
    """
    Evaluate a coefficient polynomial (all x-exponents zero) in the
    tropical semifield: + becomes componentwise min, each y_i is
    replaced by its assigned semifield element.

    assignment maps the 1-based y-index to a semifield element.
    """
    if p.is_zero():
        raise ValueError("tropical evaluation of zero is undefined")
    best = None
    for (xs, ys), _ in p.terms.items():
        if any(xs):
            raise ValueError("polynomial has x-variables; not a coefficient")
        value = semifield.one()
        for i, e in enumerate(ys, start=1):
            if e == 0:
                continue
            if i not in assignment:
                raise ValueError(f"unassigned variable y{i}")
            value = semifield.times(value, semifield.power(assignment[i], e))
        best = value if best is None else semifield.oplus(best, value)
    return best
