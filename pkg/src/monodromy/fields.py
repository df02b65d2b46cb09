"""Exact scalar fields: the rationals and cyclotomic extensions Q(zeta_n).

Rationals are plain ``gmpy2.mpq`` values.  Elements of a cyclotomic field of
degree > 1 are :class:`CyclotomicNumber` instances holding their coefficients
with respect to the power basis 1, z, ..., z^(d-1), reduced modulo the n-th
cyclotomic polynomial.
"""

from __future__ import annotations

from functools import lru_cache

from gmpy2 import mpq

from .errors import DivisionByZero, FieldMismatch

__all__ = [
    "Field",
    "QQ",
    "CyclotomicNumber",
    "cyclotomic_polynomial",
    "parse_scalar",
    "format_scalar",
]


def _poly_divmod(num, den):
    """Divide integer/rational polynomials given as coefficient lists (low degree first)."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1] / mpq(lead)
        q[shift] = c
        if c:
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients (low degree first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = [mpq(-1)] + [mpq(0)] * (n - 1) + [mpq(1)]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    return tuple(mpq(c) for c in poly)


class Field:
    """FieldSpec: either the rationals or the cyclotomic field Q(zeta_n).

    ``Field.cyclotomic(1)`` and ``Field.cyclotomic(2)`` have degree one and
    produce plain rationals, so they behave exactly like ``Field.rationals()``.
    """

    __slots__ = ("n", "minpoly", "degree")

    def __init__(self, n=1):
        if n < 1:
            raise ValueError("cyclotomic index must be positive")
        self.n = n
        self.minpoly = cyclotomic_polynomial(n)
        self.degree = len(self.minpoly) - 1

    @classmethod
    def rationals(cls):
        return QQ

    @classmethod
    def cyclotomic(cls, n):
        return _field_cache(n)

    @property
    def is_rational(self):
        return self.degree == 1

    @property
    def kind(self):
        return "rationals" if self.n == 1 else "cyclotomic"

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        # Q(zeta_1) == Q(zeta_2) == Q as scalar domains
        if self.is_rational and other.is_rational:
            return True
        return self.n == other.n

    def __hash__(self):
        return hash(1 if self.is_rational else self.n)

    def __repr__(self):
        return "Field.rationals()" if self.n == 1 else f"Field.cyclotomic({self.n})"

    @property
    def zero(self):
        return mpq(0)

    @property
    def one(self):
        return mpq(1)

    @property
    def gen(self):
        """A primitive n-th root of unity."""
        if self.degree == 1:
            return mpq(1) if self.n == 1 else mpq(-1)
        return CyclotomicNumber(self, (0, 1) + (0,) * (self.degree - 2))

    def __call__(self, x):
        """Coerce an int, rational, string or coefficient sequence into this field."""
        if isinstance(x, CyclotomicNumber):
            if x.field != self:
                raise FieldMismatch(f"{x.field!r} element used in {self!r}")
            return x
        if isinstance(x, (list, tuple)):
            if self.degree == 1:
                if len(x) != 1:
                    raise ValueError(f"expected 1 coefficient, got {len(x)}")
                return mpq(x[0])
            return CyclotomicNumber(self, x)
        return mpq(x)

    def root_of_unity(self, k):
        return self.gen ** (k % self.n) if self.n > 1 else mpq(1)


@lru_cache(maxsize=None)
def _field_cache(n):
    return Field(n)


QQ = _field_cache(1)


def _reduce(coeffs, minpoly):
    """Reduce a coefficient list modulo a monic polynomial."""
    coeffs = list(coeffs)
    d = len(minpoly) - 1
    for top in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[top]
        if c:
            for i in range(d):
                coeffs[top - d + i] -= c * minpoly[i]
        coeffs[top] = 0
    return coeffs[:d] + [mpq(0)] * (d - len(coeffs))


class CyclotomicNumber:
    """An element of Q(zeta_n), n with phi(n) > 1."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = [mpq(c) for c in coeffs]
        if len(coeffs) != field.degree:
            coeffs = _reduce(coeffs, field.minpoly)
        self.field = field
        self.coeffs = tuple(coeffs)

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine {self.field!r} and {other.field!r}")
            return other
        try:
            q = mpq(other)
        except (TypeError, ValueError):
            return None
        return CyclotomicNumber(self.field, (q,) + (0,) * (self.field.degree - 1))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.field, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.field, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.field, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        prod = [mpq(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CyclotomicNumber(self.field, _reduce(prod, self.field.minpoly))

    __rmul__ = __mul__

    def _mul_matrix(self):
        d = self.field.degree
        cols = []
        basis = [0] * d
        for j in range(d):
            e = list(basis)
            e[j] = 1
            cols.append((self * CyclotomicNumber(self.field, e)).coeffs)
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    def inverse(self):
        if not self:
            raise DivisionByZero("inverse of zero")
        # solve (multiplication by self) x = 1 by Gauss-Jordan
        d = self.field.degree
        m = self._mul_matrix()
        aug = [row + [mpq(1) if i == 0 else mpq(0)] for i, row in enumerate(m)]
        for col in range(d):
            piv = next(r for r in range(col, d) if aug[r][col])
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            aug[col] = [v / p for v in aug[col]]
            for r in range(d):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return CyclotomicNumber(self.field, [aug[i][d] for i in range(d)])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber(self.field, (1,) + (0,) * (self.field.degree - 1))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def __eq__(self, other):
        if isinstance(other, CyclotomicNumber):
            return self.field == other.field and self.coeffs == other.coeffs
        try:
            q = mpq(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.is_rational() and self.coeffs[0] == q

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field.n, self.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*z^{i}")
        return " + ".join(terms) if terms else "0"


def is_zero(x):
    return not x


def parse_scalar(text, field=QQ):
    """Parse "p/q" strings (or a list of them for cyclotomic coefficients)."""
    if isinstance(text, list):
        return field([_parse_rational(t) for t in text])
    return field(_parse_rational(text))


def _parse_rational(text):
    if isinstance(text, int):
        return mpq(text)
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {text!r}")
    try:
        return mpq(text.strip())
    except ZeroDivisionError:
        raise DivisionByZero(f"zero denominator in {text!r}") from None


def format_scalar(x):
    if isinstance(x, CyclotomicNumber):
        return [str(c) for c in x.coeffs]
    return str(mpq(x))
