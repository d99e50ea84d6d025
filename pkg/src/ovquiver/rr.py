"""Framing one: the polynomials g_m and the Rogers-Ramanujan connection.

With ``n_{m,k} = (-1)^m N_{m,k}(1)`` put ``g_m(q) = sum_k n_{m,k} q^k``.
The product formula at ``tau = 1`` reads

    sum_n q^{n^2} (q^{-1/2} x)^n / (q;q)_n
        = prod_{m,k,l} (1 - q^{(k+1)/2 + l} x^m)^{(-1)^m n_{m,k}},

and the specialisations ``x = q^{1/2}`` and ``x = q^{3/2}`` collapse the
right side to ``prod_i prod_l (1 - q^{i+l})^{n_i}`` (resp. ``r_i``), which
should reproduce the two Rogers-Ramanujan products.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import IntLaurent
from .errors import IncompleteExponents, MismatchAt, SignViolation, SupportViolation
from .ov import ov_table
from .truncated import Grid, laurent_over_qpoch

__all__ = [
    "GPoly",
    "support_set",
    "g_poly",
    "g_table",
    "rr_exponents",
    "RRExponents",
    "expected_exponent",
    "rr_verify",
    "RRReport",
    "classical_rr_check",
    "deformed_product_check",
    "DeformedReport",
]


@dataclass(frozen=True)
class GPoly:
    """``g_m`` stored in ``u = q^(1/2)``: coefficient ``n_{m,k}`` at ``u^{2k}``."""

    m: int
    poly: IntLaurent

    @property
    def coefficients(self):
        """``{k: n_{m,k}}``, keyed by the power of ``q``."""
        return {e // 2: c for e, c in self.poly.terms.items()}

    def __str__(self):
        if self.poly.is_zero():
            return "0"
        parts = []
        for k, c in sorted(self.coefficients.items()):
            mono = "1" if k == 0 else ("q" if k == 1 else f"q^{k}")
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)

    def to_json(self):
        return {"m": self.m, "coefficients": [[k, str(c)] for k, c in sorted(self.coefficients.items())]}


def support_set(m):
    """The set ``I_m`` that should contain the support of ``g_m``."""
    if m < 1:
        raise ValueError("m must be positive")
    small = {1: {0}, 2: {1}, 3: {4}}
    if m in small:
        return small[m]
    return set(range(m + 1, m * m - 2 * m - 2, 2)) | {(m - 1) ** 2}


def _gpoly_from_row(m, row):
    terms = {}
    for k, value in row.terms.items():
        n = value if m % 2 == 0 else -value
        if n < 0:
            raise SignViolation(f"n_{{{m},{k}}} = {n} < 0", m=m, k=k, value=n)
        terms[2 * k] = n
    allowed = support_set(m)
    for k in sorted(row.terms):
        if k not in allowed:
            raise SupportViolation(f"g_{m} has q^{k} outside I_{m}", m=m, k=k, allowed=sorted(allowed))
    return GPoly(m, IntLaurent(terms))


def g_poly(m):
    """``g_m`` with its sign and support checked."""
    return _gpoly_from_row(m, ov_table(1, m).row(m))


def g_table(max_m):
    table = ov_table(1, max_m)
    return [_gpoly_from_row(m, table.row(m)) for m in range(1, max_m + 1)]


def _min_k(m):
    # smallest element of I_m
    return {1: 0, 2: 1, 3: 4}.get(m, m + 1)


def _threshold(variant, m):
    # smallest 2i that row m can contribute to
    return (1 if variant == 1 else 3) * m + _min_k(m) + 1


def complete_up_to(variant, max_m):
    """Largest index i whose exponent is fully determined by rows m <= max_m.

    Row m only reaches indices with 2i >= m + min I_m + 1 (variant 1) or
    3m + min I_m + 1 (variant 2); that bound increases with m, so the first
    missing row decides.
    """
    _check_variant(variant)
    return (_threshold(variant, max_m + 1) - 1) // 2


def _check_variant(variant):
    if variant not in (1, 2):
        raise ValueError(f"variant must be 1 or 2, got {variant!r}")


@dataclass(frozen=True)
class RRExponents:
    variant: int
    max_m: int
    values: dict = field(default_factory=dict)
    complete: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "variant": self.variant,
            "rows": self.max_m,
            "exponents": [
                {"i": i, "value": self.values[i], "complete": self.complete[i]} for i in sorted(self.values)
            ],
        }


def rr_exponents(variant, rows):
    """Collapse ``(-1)^m n_{m,k}`` onto ``i = (m + k + 1)/2`` or ``(3m + k + 1)/2``."""
    _check_variant(variant)
    rows = list(rows)
    max_m = max((g.m for g in rows), default=0)
    weight = 1 if variant == 1 else 3
    values = {}
    for g in rows:
        sign = -1 if g.m % 2 else 1
        for k, n in g.coefficients.items():
            twice = weight * g.m + k + 1
            if twice % 2:
                # half-integral i never occurs when the parity pattern holds;
                # keep it visible instead of dropping it
                raise SupportViolation(f"n_{{{g.m},{k}}} lands on half-integral index", m=g.m, k=k)
            i = twice // 2
            values[i] = values.get(i, 0) + sign * n
    top = max([complete_up_to(variant, max_m)] + list(values))
    limit = complete_up_to(variant, max_m)
    values = {i: values.get(i, 0) for i in range(1, top + 1)}
    complete = {i: i <= limit for i in values}
    return RRExponents(variant, max_m, values, complete)


def expected_exponent(variant, i):
    """The mod-5 pattern of the collapsed exponents."""
    r = i % 5
    if variant == 1:
        return {1: -1, 4: -1, 2: 1, 0: 1}.get(r, 0)
    return {2: -1, 4: 1}.get(r, 0)


def _sum_side(variant, order):
    grid = Grid(0, 0, order)
    n = 0
    while n * n + (n if variant == 2 else 0) <= order:
        laurent_over_qpoch(grid, 0, [(n * n + (n if variant == 2 else 0), 1)], n, step=1)
        n += 1
    return grid


def _classical_product(variant, order):
    grid = Grid.one(0, 0, order)
    residues = (1, 4) if variant == 1 else (2, 3)
    for j in range(1, order + 1):
        if j % 5 in residues:
            grid.div_binomial(0, j)
    return grid


def _collapsed_product(exponents, order):
    grid = Grid.one(0, 0, order)
    for i, n in exponents.items():
        if n and i <= order:
            for j in range(i, order + 1):
                grid.mul_power(0, j, n)
    return grid


@dataclass(frozen=True)
class RRReport:
    variant: int
    order: int
    rows: int
    status: str
    mismatch: dict = None
    exponents: RRExponents = None

    @property
    def ok(self):
        return self.status == "verified"

    def to_json(self):
        out = {"variant": self.variant, "order": self.order, "rows": self.rows, "status": self.status}
        if self.mismatch is not None:
            out["mismatch"] = self.mismatch
        return out


def rows_needed(variant, order):
    """Fewest rows making every exponent with index <= order complete."""
    _check_variant(variant)
    m = 1
    while complete_up_to(variant, m) < order:
        m += 1
    return m


def rr_verify(variant, order, max_m=None):
    """Sum side, collapsed product and classical product agree through ``q^order``."""
    _check_variant(variant)
    need = rows_needed(variant, order)
    if max_m is None:
        max_m = need
    elif max_m < need:
        raise IncompleteExponents(
            f"exponents up to index {order} need rows m <= {need}, only {max_m} requested"
        )
    exps = rr_exponents(variant, g_table(max_m))
    used = {i: n for i, n in exps.values.items() if i <= order}

    sums = _sum_side(variant, order)
    collapsed = _collapsed_product(used, order)
    classical = _classical_product(variant, order)
    for label, grid in (("collapsed product", collapsed), ("classical product", classical)):
        bad = sums.first_mismatch(grid)
        if bad is not None:
            mismatch = {
                "against": label,
                "q_power": bad.exponent,
                "sum_side": str(bad.expected),
                "product_side": str(bad.actual),
            }
            return RRReport(variant, order, max_m, "mismatch", mismatch, exps)
    return RRReport(variant, order, max_m, "verified", None, exps)


def classical_rr_check(variant, order=50):
    """Sum against product alone, independent of any g_m."""
    _check_variant(variant)
    bad = _sum_side(variant, order).first_mismatch(_classical_product(variant, order))
    if bad is None:
        return RRReport(variant, order, 0, "verified")
    mismatch = {"q_power": bad.exponent, "sum_side": str(bad.expected), "product_side": str(bad.actual)}
    return RRReport(variant, order, 0, "mismatch", mismatch)


@dataclass(frozen=True)
class DeformedReport:
    max_m: int
    u_order: int
    status: str = "verified"

    def to_json(self):
        return {"max_m": self.max_m, "u_order": self.u_order, "status": self.status, "note": "exponent e means q^(e/2)"}


def _flat_product(gpolys, max_m, u_order):
    # prod_{m,k,l} (1 - u^{k+1+2l} x^m)^{(-1)^m n_{m,k}}
    grid = Grid.one(max_m, 0, u_order)
    for g in gpolys:
        sign = -1 if g.m % 2 else 1
        for k, n in g.coefficients.items():
            e = k + 1
            while e <= u_order:
                grid.mul_power(g.m, e, sign * n)
                e += 2
    return grid


def _split_product(gpolys, max_m, q_order):
    # in (a, q): even rows in the numerator, odd rows in the denominator
    grid = Grid.one(max_m, 0, q_order)
    for g in gpolys:
        for kk, n in g.coefficients.items():
            if g.m % 2 == 0:
                half = g.m // 2
                if (kk - 2 * half + 1) % 2:
                    continue
                k = (kk - 2 * half + 1) // 2
                base, power = k + 2 * half, n
            else:
                half = (g.m + 1) // 2
                if (kk - 2 * half + 2) % 2:
                    continue
                k = (kk - 2 * half + 2) // 2
                base, power = k + 2 * half - 1, -n
            for c in range(base, q_order + 1):
                grid.mul_power(g.m, c, power)
    return grid


def deformed_product_check(max_m, u_order):
    """Check the deformed identity in both product arrangements.

    The flat arrangement is expanded in ``(x, u)``; the parity-split one in
    ``(a, q)`` with ``a = q^{-1/2} x`` and mapped back, so ``a^n q^c`` lands
    on ``x^n u^{2c - n}``.
    """
    gpolys = g_table(max_m)

    lhs = Grid(max_m, 0, u_order)
    for n in range(max_m + 1):
        laurent_over_qpoch(lhs, n, [(2 * n * n - n, 1)], n)
    flat = _flat_product(gpolys, max_m, u_order)
    bad = lhs.first_mismatch(flat)
    if bad is not None:
        raise MismatchAt(
            f"flat product differs at x^{bad.x_degree} u^{bad.exponent}",
            m=bad.x_degree,
            exponent=bad.exponent,
            expected=bad.expected,
            actual=bad.actual,
        )

    q_order = (u_order + max_m) // 2 + 1
    split = _split_product(gpolys, max_m, q_order)
    mapped = Grid(max_m, 0, u_order)
    for n in range(max_m + 1):
        for c in range(q_order + 1):
            value = split.get(n, c)
            if value:
                mapped.add_term(n, 2 * c - n, value)
    bad = flat.first_mismatch(mapped)
    if bad is not None:
        raise MismatchAt(
            f"split arrangement differs at x^{bad.x_degree} u^{bad.exponent}",
            m=bad.x_degree,
            exponent=bad.exponent,
            expected=bad.expected,
            actual=bad.actual,
        )
    return DeformedReport(max_m, u_order)
