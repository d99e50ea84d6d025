"""Exact Laurent polynomials and rational functions in ``u = q**(1/2)``.

Every exponent that shows up in the open-string and quiver series lives in
``(1/2)Z`` as a power of ``q``, so everything here is written in the single
variable ``u`` with integer exponents: ``u**e`` stands for ``q**(e/2)``.

Coefficients are arbitrary precision integers.  Dense polynomial arithmetic
and gcds are delegated to FLINT's ``fmpz_poly``; this module owns the
Laurent shifts, the canonical form of quotients and the JSON encoding.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Integral, Rational

from flint import fmpz_poly

from .errors import DivisionByZero, NotLaurent

__all__ = [
    "IntLaurent",
    "RationalFn",
    "ratfn_arith",
    "adams_subst",
    "to_laurent",
    "eval_at_one",
    "qpoch",
]

_ZERO_POLY = fmpz_poly([])
_ONE_POLY = fmpz_poly([1])


def _strip_low(val, poly):
    # Move low-order zero coefficients of ``poly`` into the shift ``val``.
    if poly.is_zero():
        return 0, _ZERO_POLY
    t = 0
    while poly[t] == 0:
        t += 1
    if t:
        poly = poly.right_shift(t)
    return val + t, poly


class IntLaurent:
    """Laurent polynomial ``sum c_e u**e`` with integer coefficients.

    Stored as ``u**valuation * poly`` where ``poly`` has a nonzero constant
    term (or is zero, in which case the valuation is 0).  Instances are
    immutable and hashable.
    """

    __slots__ = ("_val", "_poly")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            acc = {}
            for e, c in terms:
                acc[e] = acc.get(e, 0) + c
            terms = acc
        terms = {int(e): int(c) for e, c in terms.items() if c}
        if not terms:
            self._val, self._poly = 0, _ZERO_POLY
            return
        lo = min(terms)
        coeffs = [0] * (max(terms) - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] = c
        self._val, self._poly = lo, fmpz_poly(coeffs)

    @classmethod
    def _make(cls, val, poly):
        self = object.__new__(cls)
        self._val, self._poly = _strip_low(val, poly)
        return self

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls({exponent: coeff})

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self):
        """Dictionary ``{u-exponent: coefficient}`` without zero entries."""
        return {self._val + i: int(c) for i, c in enumerate(self._poly.coeffs()) if c}

    def items(self):
        return sorted(self.terms.items())

    @property
    def valuation(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no valuation")
        return self._val

    @property
    def degree(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no degree")
        return self._val + self._poly.degree()

    def coefficient(self, exponent):
        i = exponent - self._val
        if i < 0 or i > self._poly.degree():
            return 0
        return int(self._poly[i])

    def is_zero(self):
        return self._poly.is_zero()

    def is_constant(self):
        return self.is_zero() or (self._val == 0 and self._poly.degree() == 0)

    def eval_at_one(self):
        return sum(int(c) for c in self._poly.coeffs())

    def exponents_all_even(self):
        return all(e % 2 == 0 for e in self.terms)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntLaurent):
            return other
        if isinstance(other, Integral):
            return IntLaurent.constant(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self._val, other._val)
        a = self._poly.left_shift(self._val - lo)
        b = other._poly.left_shift(other._val - lo)
        return IntLaurent._make(lo, a + b)

    __radd__ = __add__

    def __neg__(self):
        return IntLaurent._make(self._val, -self._poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return IntLaurent._make(self._val + other._val, self._poly * other._poly)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            # only the units +-u^e can be inverted
            if self._poly.degree() != 0 or abs(int(self._poly[0])) != 1:
                raise ValueError("negative power of a non-unit Laurent polynomial")
            return IntLaurent._make(self._val * n, self._poly**-n)
        return IntLaurent._make(self._val * n, self._poly**n)

    def shift(self, k):
        """Multiply by ``u**k``."""
        if self.is_zero():
            return self
        return IntLaurent._make(self._val + k, self._poly)

    def adams(self, d):
        """Substitute ``u -> u**d``."""
        if d < 1:
            raise ValueError("Adams index must be positive")
        if d == 1 or self.is_zero():
            return self
        return IntLaurent._make(self._val * d, self._poly.inflate(d))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._val == other._val and self._poly == other._poly

    def __hash__(self):
        return hash((self._val, tuple(int(c) for c in self._poly.coeffs())))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"IntLaurent({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                mono = str(abs(c))
            else:
                power = "u" if e == 1 else f"u^{e}"
                mono = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {m}" for s, m in parts[1:])

    # -- serialization ------------------------------------------------------

    def to_json(self):
        return [[e, str(c)] for e, c in self.items()]

    @classmethod
    def from_json(cls, data):
        return cls({int(e): int(c) for e, c in data})


class RationalFn:
    """Quotient ``num/den`` of integral Laurent polynomials in canonical form.

    Canonical means: ``den`` is a polynomial with nonzero constant term and
    positive leading coefficient, every power of ``u`` sits in ``num``, and
    ``num`` and ``den`` share no nonunit common factor over ``Z`` (integer
    content included).  Two canonical forms are equal iff the functions are.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if isinstance(num, Rational) and not isinstance(num, Integral):
            num, den = Fraction(num).numerator, Fraction(num).denominator * den
        num = num if isinstance(num, IntLaurent) else IntLaurent.constant(int(num))
        den = den if isinstance(den, IntLaurent) else IntLaurent.constant(int(den))
        self.num, self.den = self._canonical(num, den)

    @staticmethod
    def _canonical(num, den):
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            return num, _ONE
        val = num._val - den._val
        n, d = num._poly, den._poly
        g = n.gcd(d)
        if not g.is_one():
            n, d = n // g, d // g
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return IntLaurent._make(val, n), IntLaurent._make(0, d)

    @classmethod
    def _raw(cls, num, den):
        self = object.__new__(cls)
        self.num, self.den = cls._canonical(num, den)
        return self

    @classmethod
    def coerce(cls, value):
        if isinstance(value, RationalFn):
            return value
        if isinstance(value, IntLaurent):
            return cls._raw(value, _ONE)
        if isinstance(value, Rational):
            return cls(value)
        raise TypeError(f"cannot convert {type(value).__name__} to RationalFn")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return RationalFn._raw(self.num + other.num, self.den)
        return RationalFn._raw(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RationalFn)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFn._raw(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RationalFn._raw(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RationalFn.coerce(other) / self

    def __pow__(self, n):
        if n >= 0:
            return RationalFn._raw(self.num**n, self.den**n)
        return 1 / (self ** (-n))

    def adams(self, d):
        return RationalFn._raw(self.num.adams(d), self.den.adams(d))

    def shift(self, k):
        return RationalFn._raw(self.num.shift(k), self.den)

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_laurent(self):
        return self.den == _ONE

    def exponents_all_even(self):
        return self.num.exponents_all_even() and self.den.exponents_all_even()

    def __eq__(self, other):
        try:
            other = RationalFn.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"RationalFn({self})"

    def __str__(self):
        if self.is_laurent():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(IntLaurent.from_json(data["num"]), IntLaurent.from_json(data["den"]))


_ONE = IntLaurent.constant(1)


def ratfn_arith(a, b, op):
    """Apply ``op`` in {'add', 'sub', 'mul', 'div'} to two rational functions."""
    a, b = RationalFn.coerce(a), RationalFn.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def adams_subst(f, d):
    """The Adams operation ``u -> u**d`` (that is ``q -> q**d``)."""
    if d < 1:
        raise ValueError("Adams index must be positive")
    return RationalFn.coerce(f).adams(d)


def to_laurent(f):
    """Return ``f`` as an IntLaurent, or raise NotLaurent.

    This is the single place where integrality of a computed quantity is
    decided: the canonical denominator has to be exactly 1.
    """
    f = RationalFn.coerce(f)
    if not f.is_laurent():
        raise NotLaurent(f)
    return f.num


def eval_at_one(p):
    return p.eval_at_one()


def qpoch(n, step=1):
    """``(1 - q**step)(1 - q**(2*step))...(1 - q**(n*step))`` as an IntLaurent."""
    out = _ONE
    for j in range(1, n + 1):
        out = out * IntLaurent({0: 1, 2 * j * step: -1})
    return out
