"""Truncated series with rational-function coefficients and plethystic Exp/Log.

Three regimes share one implementation.  A series is a finite map from
monomial keys to :class:`RationalFn` coefficients, and the kinds differ only
in what a key is:

* :class:`XSeries` - key ``n`` is the monomial ``x**n``;
* :class:`PSeries` - key ``mu`` is the power sum ``p_mu``;
* :class:`TSeries` - key ``v`` is ``T_1**v_1 ... T_r**v_r``.

Each kind supplies the grading, key multiplication, the Adams action on keys
(``x -> x**d``, ``p_j -> p_{jd}``, ``T_i -> T_i**d``) and the truncation
test.  Truncation is an order ideal, so the degree-by-degree recursions for
``log`` and ``exp`` below are exact on every key that survives.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import RationalFn
from .errors import BadConstantTerm, CapExceeded
from .partitions import Partition, enumerate_partitions, mn_character, mobius

__all__ = [
    "XSeries",
    "PSeries",
    "TSeries",
    "pleth_log",
    "pleth_exp",
    "specialize_single",
    "schur_pairing",
    "schur_series",
    "schur_expansion",
]


class _Series:
    """Shared machinery; subclasses define the key structure."""

    __slots__ = ("_coeffs",)

    # subclass hooks ---------------------------------------------------------

    def _degree(self, key):
        raise NotImplementedError

    def _mul_keys(self, a, b):
        raise NotImplementedError

    def _adams_key(self, key, d):
        raise NotImplementedError

    def _fits(self, key):
        raise NotImplementedError

    @property
    def _unit_key(self):
        raise NotImplementedError

    @property
    def max_degree(self):
        raise NotImplementedError

    def _new(self, coeffs):
        raise NotImplementedError

    def _same_shape(self, other):
        raise NotImplementedError

    # common -----------------------------------------------------------------

    def _set_coeffs(self, coeffs):
        clean = {}
        for key, value in coeffs.items():
            if not self._fits(key):
                continue
            value = RationalFn.coerce(value)
            if not value.is_zero():
                clean[key] = value
        self._coeffs = clean

    def coefficient(self, key):
        return self._coeffs.get(key, RationalFn(0))

    def __getitem__(self, key):
        return self.coefficient(key)

    def items(self):
        return sorted(self._coeffs.items(), key=lambda kv: (self._degree(kv[0]), kv[0]))

    def support(self):
        return [k for k, _ in self.items()]

    @property
    def constant_term(self):
        return self.coefficient(self._unit_key)

    def _components(self):
        comps = [dict() for _ in range(self.max_degree + 1)]
        for key, value in self._coeffs.items():
            comps[self._degree(key)][key] = value
        return comps

    def _check_compatible(self, other):
        if type(self) is not type(other) or not self._same_shape(other):
            raise ValueError("series of different kinds or truncations")

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self._coeffs)
        for key, value in other._coeffs.items():
            out[key] = out[key] + value if key in out else value
        return self._new(out)

    def __neg__(self):
        return self._new({k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, _Series):
            self._check_compatible(other)
            out = {}
            for ka, va in self._coeffs.items():
                for kb, vb in other._coeffs.items():
                    key = self._mul_keys(ka, kb)
                    if self._fits(key):
                        term = va * vb
                        out[key] = out[key] + term if key in out else term
            return self._new(out)
        scalar = RationalFn.coerce(other)
        return self._new({k: v * scalar for k, v in self._coeffs.items()})

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return self._same_shape(other) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self.items()))

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self.items())
        return f"{type(self).__name__}({{{body}}})"

    def adams(self, d):
        out = {}
        for key, value in self._coeffs.items():
            new_key = self._adams_key(key, d)
            if self._fits(new_key):
                out[new_key] = value.adams(d)
        return self._new(out)

    def _convolve_into(self, acc, left, right, weight):
        for ka, va in left.items():
            for kb, vb in right.items():
                key = self._mul_keys(ka, kb)
                if self._fits(key):
                    term = va * vb * weight
                    acc[key] = acc[key] + term if key in acc else term

    def log(self):
        """Ordinary logarithm of a series with constant term 1."""
        if self.constant_term != 1:
            raise BadConstantTerm(f"log needs constant term 1, got {self.constant_term}")
        a = self._components()
        top = self.max_degree
        logs = [dict() for _ in range(top + 1)]
        # n L_n = n A_n - sum_{k<n} k L_k A_{n-k}, from E(F) = E(log F) F
        for n in range(1, top + 1):
            acc = {}
            for k in range(1, n):
                if logs[k] and a[n - k]:
                    self._convolve_into(acc, logs[k], a[n - k], k)
            comp = dict(a[n])
            for key, value in acc.items():
                term = value * Fraction(-1, n)
                comp[key] = comp[key] + term if key in comp else term
            logs[n] = {k: v for k, v in comp.items() if not v.is_zero()}
        return self._new({k: v for comp in logs for k, v in comp.items()})

    def exp(self):
        """Ordinary exponential of a series with zero constant term."""
        if not self.constant_term.is_zero():
            raise BadConstantTerm(f"exp needs constant term 0, got {self.constant_term}")
        h = self._components()
        top = self.max_degree
        g = [dict() for _ in range(top + 1)]
        g[0] = {self._unit_key: RationalFn(1)}
        # n G_n = sum_{k=1}^n k H_k G_{n-k}
        for n in range(1, top + 1):
            acc = {}
            for k in range(1, n + 1):
                if h[k] and g[n - k]:
                    self._convolve_into(acc, h[k], g[n - k], Fraction(k, n))
            g[n] = {k: v for k, v in acc.items() if not v.is_zero()}
        return self._new({k: v for comp in g for k, v in comp.items()})

    def pleth_log(self):
        """Plethystic logarithm ``sum_d mu(d)/d Psi_d(log F)``."""
        if self.constant_term != 1:
            raise BadConstantTerm(f"Log needs constant term 1, got {self.constant_term}")
        base = self.log()
        out = base
        for d in range(2, self.max_degree + 1):
            mu = mobius(d)
            if mu:
                out = out + base.adams(d) * Fraction(mu, d)
        return out

    def pleth_exp(self):
        """Plethystic exponential ``exp(sum_d Psi_d(f)/d)``."""
        if not self.constant_term.is_zero():
            raise BadConstantTerm(f"Exp needs constant term 0, got {self.constant_term}")
        total = self
        for d in range(2, self.max_degree + 1):
            total = total + self.adams(d) * Fraction(1, d)
        return total.exp()


class XSeries(_Series):
    """Series in one variable ``x``, truncated above ``x**cap``."""

    __slots__ = ("cap",)

    def __init__(self, cap, coeffs=None):
        if cap < 1:
            raise ValueError("cap must be positive")
        self.cap = cap
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, dict):
            coeffs = dict(enumerate(coeffs))
        self._set_coeffs(coeffs)

    def _degree(self, key):
        return key

    def _mul_keys(self, a, b):
        return a + b

    def _adams_key(self, key, d):
        return key * d

    def _fits(self, key):
        return 0 <= key <= self.cap

    @property
    def _unit_key(self):
        return 0

    @property
    def max_degree(self):
        return self.cap

    def _new(self, coeffs):
        return XSeries(self.cap, coeffs)

    def _same_shape(self, other):
        return self.cap == other.cap

    @property
    def coeffs(self):
        return [self.coefficient(n) for n in range(self.cap + 1)]

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(len(data) - 1, [RationalFn.from_json(c) for c in data])


class PSeries(_Series):
    """Series in power sums ``p_mu``, truncated above degree ``cap``."""

    __slots__ = ("cap",)

    def __init__(self, cap, coeffs=None):
        if cap < 1:
            raise ValueError("cap must be positive")
        self.cap = cap
        coeffs = {} if coeffs is None else coeffs
        keyed = {}
        for key, value in coeffs.items():
            key = key if isinstance(key, Partition) else Partition.from_parts(key)
            keyed[key] = value
        self._set_coeffs(keyed)

    def _degree(self, key):
        return key.size

    def _mul_keys(self, a, b):
        return a.union(b)

    def _adams_key(self, key, d):
        return key.scaled(d)

    def _fits(self, key):
        return key.size <= self.cap

    @property
    def _unit_key(self):
        return Partition(())

    @property
    def max_degree(self):
        return self.cap

    def _new(self, coeffs):
        return PSeries(self.cap, coeffs)

    def _same_shape(self, other):
        return self.cap == other.cap


class TSeries(_Series):
    """Series in ``T_1..T_r``, truncated componentwise at ``bound``.

    Coefficients must be pure ``q``-series (even ``u`` exponents only).
    """

    __slots__ = ("bound",)

    def __init__(self, bound, coeffs=None):
        bound = tuple(int(b) for b in bound)
        if not bound or any(b < 0 for b in bound):
            raise ValueError("bound must be a nonempty vector of nonnegative integers")
        self.bound = bound
        coeffs = {} if coeffs is None else coeffs
        self._set_coeffs({tuple(k): v for k, v in coeffs.items()})
        for key, value in self._coeffs.items():
            if not value.exponents_all_even():
                raise ValueError(f"odd power of q^(1/2) in TSeries coefficient at {key}: {value}")

    @property
    def rank(self):
        return len(self.bound)

    def _degree(self, key):
        return sum(key)

    def _mul_keys(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _adams_key(self, key, d):
        return tuple(x * d for x in key)

    def _fits(self, key):
        return len(key) == len(self.bound) and all(0 <= x <= b for x, b in zip(key, self.bound))

    @property
    def _unit_key(self):
        return (0,) * len(self.bound)

    @property
    def max_degree(self):
        return sum(self.bound)

    def _new(self, coeffs):
        return TSeries(self.bound, coeffs)

    def _same_shape(self, other):
        return self.bound == other.bound


def pleth_log(series):
    return series.pleth_log()


def pleth_exp(series):
    return series.pleth_exp()


def specialize_single(series):
    """Set ``x = (x, 0, 0, ...)``: every ``p_mu`` becomes ``x**|mu|``."""
    out = {}
    for mu, value in series.items():
        n = mu.size
        out[n] = out[n] + value if n in out else value
    return XSeries(series.cap, out)


def schur_expansion(lam):
    """Power-sum expansion ``s_lam = sum_nu chi_lam(nu)/z_nu p_nu``."""
    out = {}
    for nu in enumerate_partitions(lam.size):
        chi = mn_character(lam, nu)
        if chi:
            out[nu] = Fraction(chi, nu.z)
    return out


def schur_series(lam, cap, coeff=1):
    """``coeff * s_lam`` as a PSeries."""
    coeff = RationalFn.coerce(coeff)
    return PSeries(cap, {nu: coeff * c for nu, c in schur_expansion(lam).items()})


def schur_pairing(series, mu):
    """Hall inner product ``<F, s_mu>`` using ``<p_nu, s_mu> = chi_mu(nu)``."""
    mu = mu if isinstance(mu, Partition) else Partition.from_parts(mu)
    if mu.size > series.cap:
        raise CapExceeded(f"|mu| = {mu.size} exceeds the series cap {series.cap}")
    total = RationalFn(0)
    for nu in enumerate_partitions(mu.size):
        coeff = series.coefficient(nu)
        if not coeff.is_zero():
            chi = mn_character(mu, nu)
            if chi:
                total = total + coeff * chi
    return total
