"""Ooguri-Vafa invariants of the open topological string on (C^3, D_tau).

The partition function of C^3 with one framed Aganagic-Vafa brane is the
Marino-Vafa sum ``Z = sum_lam H_lam(q; tau) s_lam``.  Its plethystic
logarithm, multiplied by ``q^(1/2) - q^(-1/2)``, is expected to be an
integral Laurent polynomial in ``q^(1/2)`` in every Schur direction.  The
coefficients of those polynomials are the invariants ``N_{m,k}(tau)``.

On the one-variable specialisation ``x = (x, 0, 0, ...)``

    f_m^tau(q) = (u - 1/u) [x^m] Log Z(x) = sum_k N_{m,k}(tau) u^k,

with ``u = q^(1/2)``; :func:`ov_table` computes these rows.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import IntLaurent, RationalFn, qpoch, to_laurent
from .errors import (
    IntegralityViolation,
    NonIntegerResult,
    NotLaurent,
    NotPrime,
    TruncationTooTight,
)
from .partitions import (
    Partition,
    binomial,
    divisors,
    enumerate_partitions,
    is_prime,
    mobius,
)
from .plethysm import PSeries, XSeries, schur_pairing, schur_expansion
from .truncated import Grid, laurent_over_qpoch

__all__ = [
    "OVTable",
    "marino_vafa",
    "z_series",
    "ov_table",
    "ov_f_mu",
    "product_verify",
    "ProductReport",
    "f_at_one",
    "disk_gw",
    "fp_function",
    "divisibility_checks",
    "DivisibilityReport",
]

EXPONENT_NOTE = "exponent e means q^(e/2)"

# u - 1/u, the factor q^(1/2) - q^(-1/2)
_U_MINUS_INV = RationalFn(IntLaurent({1: 1, -1: -1}))


@dataclass(frozen=True)
class OVTable:
    """Nonzero invariants ``N_{m,k}(tau)`` for ``1 <= m <= max_degree``."""

    tau: int
    max_degree: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (m, k), n in self.entries.items():
            if not 1 <= m <= self.max_degree:
                raise ValueError(f"degree {m} outside 1..{self.max_degree}")
            if n:
                clean[(int(m), int(k))] = int(n)
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def row(self, m):
        """``f_m^tau`` as an IntLaurent in ``u``."""
        return IntLaurent({k: n for (mm, k), n in self.entries.items() if mm == m})

    def support(self, m):
        return sorted(k for (mm, k) in self.entries if mm == m)

    def get(self, m, k):
        return self.entries.get((m, k), 0)

    def to_json(self):
        return {
            "tau": self.tau,
            "max_degree": self.max_degree,
            "note": EXPONENT_NOTE,
            "entries": [[m, k, str(n)] for (m, k), n in self.entries.items()],
        }

    @classmethod
    def from_json(cls, data):
        entries = {(int(m), int(k)): int(n) for m, k, n in data["entries"]}
        return cls(int(data["tau"]), int(data["max_degree"]), entries)

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "k", "N"])
        for (m, k), n in self.entries.items():
            writer.writerow([m, k, n])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text, tau, max_degree):
        reader = csv.DictReader(io.StringIO(text))
        entries = {(int(r["m"]), int(r["k"])): int(r["N"]) for r in reader}
        return cls(tau, max_degree, entries)


def marino_vafa(lam, tau):
    """The framed hook-content amplitude ``H_lam(q; tau)``.

    ``(-1)^{|lam| tau} q^{kappa tau / 2} prod_x q^{c(x)/2} / (q^{h(x)/2} - q^{-h(x)/2})``
    """
    lam = lam if isinstance(lam, Partition) else Partition.from_parts(lam)
    # q^{c/2}/(q^{h/2} - q^{-h/2}) = u^{c+h}/(u^{2h} - 1)
    exponent = lam.kappa * tau
    den = IntLaurent.constant(1)
    for i, j in lam.cells():
        h = lam.hook(i, j)
        exponent += (j - i) + h
        den = den * IntLaurent({2 * h: 1, 0: -1})
    sign = -1 if (lam.size * tau) % 2 else 1
    return RationalFn(IntLaurent.monomial(exponent, sign), den)


def z_coefficient(n, tau):
    """``[x^n] Z`` on the single-variable specialisation."""
    sign = -1 if (n * (tau - 1)) % 2 else 1
    return RationalFn(IntLaurent.monomial(n * (n - 1) * tau + n * n, sign), qpoch(n))


def z_series(tau, max_degree):
    if max_degree < 1:
        raise ValueError("max_degree must be positive")
    return XSeries(max_degree, [z_coefficient(n, tau) for n in range(max_degree + 1)])


@lru_cache(maxsize=64)
def _log_z(tau, max_degree):
    return z_series(tau, max_degree).pleth_log()


@lru_cache(maxsize=64)
def ov_table(tau, max_degree):
    """Rows ``f_m^tau`` for ``m <= max_degree``, asserted integral."""
    log_z = _log_z(tau, max_degree)
    entries = {}
    for m in range(1, max_degree + 1):
        value = _U_MINUS_INV * log_z.coefficient(m)
        try:
            poly = to_laurent(value)
        except NotLaurent:
            raise IntegralityViolation(
                f"f_{m}^{tau} is not an integral Laurent polynomial",
                tau=tau,
                m=m,
                value=value,
            ) from None
        for k, n in poly.terms.items():
            entries[(m, k)] = n
    return OVTable(tau, max_degree, entries)


@lru_cache(maxsize=32)
def _log_full_z(tau, cap):
    coeffs = {}
    for n in range(cap + 1):
        for lam in enumerate_partitions(n):
            h = marino_vafa(lam, tau)
            for nu, c in schur_expansion(lam).items():
                term = h * c
                coeffs[nu] = coeffs[nu] + term if nu in coeffs else term
    return PSeries(cap, coeffs).pleth_log()


def ov_f_mu(tau, mu, cap=None):
    """``(u - 1/u) <Log Z, s_mu>`` on the full symmetric-function partition function."""
    mu = mu if isinstance(mu, Partition) else Partition.from_parts(mu)
    cap = mu.size if cap is None else cap
    log_z = _log_full_z(tau, cap)
    value = _U_MINUS_INV * schur_pairing(log_z, mu)
    try:
        return to_laurent(value)
    except NotLaurent:
        raise IntegralityViolation(
            f"f_{mu}^{tau} is not an integral Laurent polynomial", tau=tau, mu=str(mu), value=value
        ) from None


@dataclass(frozen=True)
class ProductReport:
    tau: int
    max_degree: int
    u_order: int
    l_order: int
    mismatch: object = None

    @property
    def ok(self):
        return self.mismatch is None

    def to_json(self):
        return {
            "tau": self.tau,
            "max_degree": self.max_degree,
            "u_order": self.u_order,
            "l_order": self.l_order,
            "status": "verified" if self.ok else "mismatch",
            "mismatch": None if self.ok else self.mismatch.to_json(),
            "note": EXPONENT_NOTE,
        }


def required_l_order(table, max_degree, u_order):
    """Smallest L such that factors with l >= L cannot reach ``u**u_order``.

    A term at x-degree <= M is a product of factors whose x-degrees sum to
    at most M, each with u-exponent >= the smallest ``k + 1`` in the table.
    """
    entries = [(m, k) for (m, k) in table.entries if m <= max_degree]
    if not entries:
        return 0
    floor = min(0, min(k + 1 for _, k in entries))
    need = 0
    for m, k in entries:
        slack = u_order - (max_degree - m) * floor - k - 1
        if slack >= 0:
            need = max(need, slack // 2 + 1)
    return need


def product_verify(table, max_degree=None, u_order=40, l_order=None):
    """Compare ``Z`` with ``prod (1 - q^{k/2} q^{1/2 + l} x^n)^{N_{n,k}}``.

    Both sides are expanded as integer series in ``x`` and ``u`` using
    ``1/(1-q) = 1 + q + q^2 + ...`` and compared for x-degree <= M and
    u-exponent <= ``u_order``.
    """
    m_top = table.max_degree if max_degree is None else max_degree
    if m_top > table.max_degree:
        raise ValueError(f"table only reaches degree {table.max_degree}")
    need = required_l_order(table, m_top, u_order)
    if l_order is None:
        l_order = need
    elif l_order < need:
        raise TruncationTooTight(f"l_order {l_order} < {need} needed for u-exponents <= {u_order}")

    factors = [(m, k, n) for (m, k), n in table.entries.items() if m <= m_top]
    floor = min([0] + [k + 1 for _, k, _ in factors])
    low = min(m_top * floor, min(n * (n - 1) * table.tau + n * n for n in range(m_top + 1)))
    low = min(low, 0)

    # factors with negative exponents can pull terms back below u_order, so
    # keep headroom while multiplying and compare on the window only
    high = u_order - m_top * floor
    product = Grid.one(m_top, low, high)
    for m, k, n in factors:
        for l in range(l_order):
            product.mul_power(m, k + 1 + 2 * l, n)

    series = Grid(m_top, low, high)
    for n in range(m_top + 1):
        sign = -1 if (n * (table.tau - 1)) % 2 else 1
        laurent_over_qpoch(series, n, [(n * (n - 1) * table.tau + n * n, sign)], n)

    mismatch = series.first_mismatch(product, upto=u_order)
    return ProductReport(table.tau, m_top, u_order, l_order, mismatch)


def f_at_one(m, tau):
    """``f_m^tau(1) = m^-2 sum_{d|m} mu(m/d) (-1)^{d tau} C(d(tau+1)-1, d-1)``.

    The binomial uses the falling-product convention for negative tops.
    """
    if m < 1:
        raise ValueError("m must be positive")
    total = 0
    for d in divisors(m):
        mu = mobius(m // d)
        if mu:
            total += mu * (-1) ** ((d * tau) % 2) * binomial(d * (tau + 1) - 1, d - 1)
    value = Fraction(total, m * m)
    if value.denominator != 1:
        raise NonIntegerResult(f"f_{m}^{tau}(1) = {value} is not an integer", m=m, tau=tau, value=str(value))
    return int(value)


def disk_gw(m, tau):
    """Genus-zero disk invariant ``(-1)^{m tau}/m^2 C(m(tau+1)-1, m-1)``."""
    if m < 1:
        raise ValueError("m must be positive")
    return Fraction((-1) ** ((m * tau) % 2) * binomial(m * (tau + 1) - 1, m - 1), m * m)


def fp_function(n, p):
    """Product of the integers in ``1..n`` not divisible by the prime ``p``."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return math.prod(i for i in range(1, n + 1) if i % p)


@dataclass(frozen=True)
class DivisibilityReport:
    p: int
    alpha: int
    n: int
    tau: int
    power_congruence: bool
    binomial_congruence: object  # bool, or None when the hypotheses fail

    @property
    def ok(self):
        return self.power_congruence and self.binomial_congruence is not False

    def to_json(self):
        return {
            "p": self.p,
            "alpha": self.alpha,
            "n": self.n,
            "tau": self.tau,
            "power_congruence": self.power_congruence,
            "binomial_congruence": self.binomial_congruence,
        }


def power_congruence(p, alpha, n):
    """``p^{2 alpha} | f_p(p^alpha n) - f_p(p^alpha)^n``.

    For ``p = 2, alpha = 1`` the statement is replaced by
    ``f_2(2n) = (-1)^{floor(n/2)} mod 4``.
    """
    if p == 2 and alpha == 1:
        return (fp_function(2 * n, 2) - (-1) ** (n // 2)) % 4 == 0
    q = p**alpha
    return (fp_function(q * n, p) - fp_function(q, p) ** n) % (p ** (2 * alpha)) == 0


def binomial_congruence(p, alpha, a, tau):
    """For ``n = p^alpha a`` with ``p`` not dividing ``a`` and ``tau >= 0``:

    ``p^{2 alpha}`` divides
    ``(-1)^{tau n} C((tau+1)n-1, n-1) - (-1)^{tau n/p} C((tau+1)n/p-1, n/p-1)``.
    """
    n = p**alpha * a
    np_ = n // p
    lhs = (-1) ** ((tau * n) % 2) * binomial((tau + 1) * n - 1, n - 1)
    rhs = (-1) ** ((tau * np_) % 2) * binomial((tau + 1) * np_ - 1, np_ - 1)
    return (lhs - rhs) % (p ** (2 * alpha)) == 0


def divisibility_checks(p, alpha, n, tau=0):
    """Both congruences behind the integrality of ``f_m^tau(1)``.

    ``n`` is the multiplier in the power congruence and the cofactor ``a`` in
    the binomial one; the latter is reported as None when ``p | n`` or
    ``tau < 0``.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if alpha < 1 or n < 1:
        raise ValueError("alpha and n must be positive")
    binom = None
    if n % p and tau >= 0:
        binom = binomial_congruence(p, alpha, n, tau)
    return DivisibilityReport(p, alpha, n, tau, power_congruence(p, alpha, n), binom)
