"""Kac polynomials via Hua's formula and the quiver reading of f_n^tau, tau <= 0.

For framing ``tau <= 0`` put ``k = 1 - tau`` and consider the one-vertex
quiver with ``k`` infinite legs, with dimension ``n`` at the vertex and
``n-1, n-2, ..., 1`` along every leg.  Its quiver variety has complex
dimension ``2d`` with ``d = 1 - n^2 + k n (n-1)/2``, and the coefficients of
``f_n^tau`` are (up to one global sign) the dimensions of the
``S_n``-invariant compactly supported cohomology, with ``N_{n,j}`` sitting in
degree ``1 - n + 2d - j``.  The variety is a smooth affine GIT quotient, so
``H_c`` lives in degrees ``[2d, 4d]``; hence ``j`` ranges over
``[1 - n - 2d, 1 - n]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import IntLaurent, RationalFn, to_laurent
from .errors import (
    IndexOutOfRange,
    IntegralityViolation,
    InvalidTau,
    MismatchAt,
    NotLaurent,
    ParityViolation,
    QuiverFormatError,
    SignViolation,
    SupportViolation,
)
from .ov import ov_table
from .partitions import Partition, enumerate_partitions
from .plethysm import TSeries

__all__ = [
    "Quiver",
    "KacTable",
    "partition_pairing",
    "hua_kac",
    "leg_quiver_dim",
    "support_window",
    "check_theorem_structure",
    "betti_extract",
    "hlrv_special_check",
    "HLRVReport",
]

MAX_TOTAL_DIMENSION = 8


@dataclass(frozen=True)
class Quiver:
    """Vertices ``1..vertex_count``; ``edges`` are (tail, head) pairs."""

    vertex_count: int
    edges: tuple = ()

    def __post_init__(self):
        if not isinstance(self.vertex_count, int) or self.vertex_count < 1:
            raise QuiverFormatError(f"vertices: expected a positive integer, got {self.vertex_count!r}")
        edges = tuple((int(t), int(h)) for t, h in self.edges)
        for idx, (t, h) in enumerate(edges):
            for pos, v in enumerate((t, h)):
                if not 1 <= v <= self.vertex_count:
                    raise IndexOutOfRange(
                        f"edges[{idx}][{pos}]: vertex index {v} out of range 1..{self.vertex_count}"
                    )
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise QuiverFormatError("top level: expected an object with 'vertices' and 'edges'")
        unknown = set(data) - {"vertices", "edges"}
        if unknown:
            raise QuiverFormatError(f"unknown field(s): {', '.join(sorted(unknown))}")
        if "vertices" not in data:
            raise QuiverFormatError("missing field 'vertices'")
        vertices = data["vertices"]
        if isinstance(vertices, bool) or not isinstance(vertices, int):
            raise QuiverFormatError(f"vertices: expected a positive integer, got {vertices!r}")
        raw_edges = data.get("edges", [])
        if not isinstance(raw_edges, list):
            raise QuiverFormatError("edges: expected a list of [tail, head] pairs")
        edges = []
        for idx, e in enumerate(raw_edges):
            if (
                not isinstance(e, list)
                or len(e) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in e)
            ):
                raise QuiverFormatError(f"edges[{idx}]: expected [tail, head] integers, got {e!r}")
            edges.append(tuple(e))
        return cls(vertices, tuple(edges))

    def to_dict(self):
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}

    def reversed(self):
        return Quiver(self.vertex_count, tuple((h, t) for t, h in self.edges))


@dataclass(frozen=True)
class KacTable:
    """``A_v(q)`` for every ``0 < v <= bound``; values are IntLaurent in ``u``."""

    quiver: Quiver
    bound: tuple
    values: dict = field(default_factory=dict)

    def q_coefficients(self, v):
        """Coefficients of ``A_v`` as a list indexed by the power of ``q``."""
        poly = self.values[tuple(v)]
        if poly.is_zero():
            return []
        return [poly.coefficient(2 * i) for i in range(poly.degree // 2 + 1)]

    def to_json(self):
        return {
            "quiver": self.quiver.to_dict(),
            "bound": list(self.bound),
            "note": "coefficients listed by ascending power of q",
            "values": [
                {"v": list(v), "coefficients": [str(c) for c in self.q_coefficients(v)]}
                for v in sorted(self.values)
            ],
        }


def partition_pairing(lam, mu):
    """``<lam, mu> = sum_{i,j} min(i, j) m_i(lam) m_j(mu)``."""
    return sum(
        min(i, j) * mi * mj for i, mi in lam.multiplicities.items() for j, mj in mu.multiplicities.items()
    )


def _hua_weight(quiver, tup):
    # prod_edges q^<pi^t, pi^h> / prod_i (q^<pi^i, pi^i> prod_k prod_{j<=m_k} (1 - q^-j)),
    # with 1/(1 - q^-j) = q^j / (q^j - 1)
    exponent = 0
    for t, h in quiver.edges:
        exponent += partition_pairing(tup[t - 1], tup[h - 1])
    den = IntLaurent.constant(1)
    for pi in tup:
        exponent -= partition_pairing(pi, pi)
        for m in pi.multiplicities.values():
            for j in range(1, m + 1):
                exponent += j
                den = den * IntLaurent({2 * j: 1, 0: -1})
    return RationalFn(IntLaurent.monomial(2 * exponent), den)


def hua_kac(quiver, bound, max_total=MAX_TOTAL_DIMENSION):
    """Kac polynomials ``A_v(q)`` for all ``0 < v <= bound`` from Hua's formula."""
    bound = tuple(int(b) for b in bound)
    if len(bound) != quiver.vertex_count:
        raise ValueError(f"bound has {len(bound)} entries, quiver has {quiver.vertex_count} vertices")
    if any(b < 0 for b in bound):
        raise ValueError("bound entries must be nonnegative")
    if sum(bound) > max_total:
        raise ValueError(f"total dimension {sum(bound)} exceeds the cost guard {max_total}")

    per_vertex = [[p for n in range(b + 1) for p in enumerate_partitions(n)] for b in bound]
    coeffs = {}
    for tup in itertools.product(*per_vertex):
        key = tuple(p.size for p in tup)
        w = _hua_weight(quiver, tup)
        coeffs[key] = coeffs[key] + w if key in coeffs else w
    log = TSeries(bound, coeffs).pleth_log()

    q_minus_one = RationalFn(IntLaurent({2: 1, 0: -1}))
    values = {}
    for v in itertools.product(*(range(b + 1) for b in bound)):
        if not any(v):
            continue
        value = q_minus_one * log.coefficient(v)
        try:
            poly = to_laurent(value)
        except NotLaurent:
            raise IntegralityViolation(f"A_{v} is not an integral polynomial", v=list(v), value=value) from None
        if not poly.is_zero() and (poly.valuation < 0 or not poly.exponents_all_even()):
            raise IntegralityViolation(f"A_{v} is not a polynomial in q", v=list(v), value=value)
        values[v] = poly
    return KacTable(quiver, bound, values)


def leg_quiver_dim(n, k):
    """``d = 1 - v^T C v / 2`` for one vertex of dimension ``n`` with ``k`` legs.

    Legs carry ``n-1, ..., 1`` (the trailing zeros of an infinite leg do not
    contribute).  Computed from the Cartan matrix ``C = 2I - A - A^T``.
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    dims = [n]
    edges = []
    for _ in range(k):
        prev = 0
        for dim in range(n - 1, 0, -1):
            dims.append(dim)
            edges.append((len(dims) - 1, prev))  # oriented toward the centre
            prev = len(dims) - 1
    size = len(dims)
    cartan = [[2 * (i == j) for j in range(size)] for i in range(size)]
    for t, h in edges:
        cartan[t][h] -= 1
        cartan[h][t] -= 1
    form = sum(dims[i] * cartan[i][j] * dims[j] for i in range(size) for j in range(size))
    d = 1 - form // 2
    assert form % 2 == 0 and d == 1 - n * n + k * n * (n - 1) // 2
    return d


def support_window(n, tau):
    """Inclusive range of ``k`` allowed for ``N_{n,k}(tau)``, tau <= 0; None if empty."""
    d = leg_quiver_dim(n, 1 - tau)
    if d < 0:
        return None
    return 1 - n - 2 * d, 1 - n


def _expected_sign(n, tau):
    # (-1)^{(tau-1)n + 1} N >= 0
    return -1 if ((tau - 1) * n + 1) % 2 else 1


def check_theorem_structure(n, tau, row):
    """Raise if row ``f_n^tau`` breaks parity, sign or support for tau <= 0."""
    if tau > 0:
        raise InvalidTau(f"structure only applies to tau <= 0, got {tau}")
    terms = row.terms
    sign = _expected_sign(n, tau)
    for k, value in sorted(terms.items()):
        if (k - (n - 1)) % 2:
            raise ParityViolation(f"N_{{{n},{k}}}({tau}) = {value} has the wrong parity", n=n, k=k, tau=tau, value=value)
        if sign * value < 0:
            raise SignViolation(f"N_{{{n},{k}}}({tau}) = {value} has the wrong sign", n=n, k=k, tau=tau, value=value)
    window = support_window(n, tau)
    for k, value in sorted(terms.items()):
        if window is None or not window[0] <= k <= window[1]:
            raise SupportViolation(
                f"N_{{{n},{k}}}({tau}) = {value} outside the allowed support {window}",
                n=n,
                k=k,
                tau=tau,
                value=value,
                window=list(window) if window else None,
            )


def betti_extract(n, tau, table):
    """``[(2j, dim H_c^{2j}(Q)^{S_n}), ...]`` read off ``f_n^tau`` for tau <= 0.

    Degrees run over ``2d, 2d + 2, ..., 4d``; the list is empty when the row
    vanishes.
    """
    if tau > 0:
        raise InvalidTau(f"Betti reading needs tau <= 0, got {tau}")
    if table.tau != tau:
        raise ValueError(f"table is for tau = {table.tau}, not {tau}")
    if n > table.max_degree:
        raise ValueError(f"table only reaches degree {table.max_degree}")
    row = table.row(n)
    check_theorem_structure(n, tau, row)
    if row.is_zero():
        return []
    d = leg_quiver_dim(n, 1 - tau)
    sign = _expected_sign(n, tau)
    out = []
    for degree in range(2 * d, 4 * d + 1, 2):
        k = 1 - n + 2 * d - degree
        out.append((degree, sign * row.coefficient(k)))
    return out


@dataclass(frozen=True)
class HLRVReport:
    legs: int
    max_degree: int
    rows: tuple  # (n, f_n, rescaled series coefficient, H_n(1/q))

    @property
    def ok(self):
        return True

    def to_json(self):
        return {
            "legs": self.legs,
            "tau": 1 - self.legs,
            "max_degree": self.max_degree,
            "status": "verified",
            "note": "exponent e means q^(e/2)",
            "rows": [
                {"n": n, "f": f.to_json(), "series": c.to_json(), "H_at_inverse_q": h.to_json()}
                for n, f, c, h in self.rows
            ],
        }


def hlrv_special_check(legs, max_degree):
    """Match ``f_n^{1-k}`` against the one-vertex k-leg generating series.

    With ``S(T) = sum_n (-1)^{kn} q^{((2-k)n^2 + kn)/2} T^n / (q;q)_n`` and
    ``C_n = (q^-1 - 1) [T^n] Log S``, the substitution ``x = q^(1/2) T``
    gives ``f_n^{1-k} = -u^{1-n} C_n``.  ``C_n (-1)^{kn}`` is the
    invariant part ``H_n(q^-1)``, which must be a polynomial in ``1/q`` with
    nonnegative coefficients and degree at most ``d``.
    """
    if legs < 1 or max_degree < 1:
        raise ValueError("legs and max_degree must be positive")
    tau = 1 - legs
    coeffs = {}
    for n in range(max_degree + 1):
        sign = -1 if (legs * n) % 2 else 1
        exponent = (2 - legs) * n * n + legs * n
        den = IntLaurent.constant(1)
        for j in range(1, n + 1):
            den = den * IntLaurent({0: 1, 2 * j: -1})
        coeffs[(n,)] = RationalFn(IntLaurent.monomial(exponent, sign), den)
    log = TSeries((max_degree,), coeffs).pleth_log()
    inv_q_minus_one = RationalFn(IntLaurent({-2: 1, 0: -1}))
    table = ov_table(tau, max_degree)

    rows = []
    for n in range(1, max_degree + 1):
        series = inv_q_minus_one * log.coefficient((n,))
        f = RationalFn(table.row(n))
        predicted = -series.shift(1 - n)
        if predicted != f:
            raise MismatchAt(f"n = {n}: f_n^{tau} != -u^(1-n) C_n", n=n, f=f, predicted=predicted)
        h = series * (-1 if (legs * n) % 2 else 1)
        d = leg_quiver_dim(n, legs)
        try:
            h_poly = to_laurent(h)
        except NotLaurent:
            raise MismatchAt(f"n = {n}: H_n(1/q) is not a Laurent polynomial", n=n, value=h) from None
        if not h_poly.is_zero():
            terms = h_poly.terms
            if any(e % 2 or e > 0 or e < -2 * d for e in terms) or any(c < 0 for c in terms.values()):
                raise MismatchAt(
                    f"n = {n}: H_n(1/q) = {h_poly} is not a Poincare polynomial in 1/q of degree <= {d}",
                    n=n,
                    value=h_poly,
                )
        rows.append((n, table.row(n), series, h_poly))
    return HLRVReport(legs, max_degree, tuple(rows))
