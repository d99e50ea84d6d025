"""Dense integer series in two variables, truncated in both.

A :class:`Grid` holds the coefficients of ``x**n * u**e`` for
``0 <= n <= max_x`` and ``low <= e <= high``.  It exists to expand infinite
products of the shape ``prod (1 - u**a x**n)**N`` and the matching sums
independently of the rational-function machinery, so product identities can
be checked coefficient by coefficient.  With ``max_x = 0`` it is a plain
truncated Laurent series in one variable.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Mismatch:
    x_degree: int
    exponent: int
    expected: int
    actual: int

    def to_json(self):
        return {
            "x_degree": self.x_degree,
            "exponent": self.exponent,
            "expected": str(self.expected),
            "actual": str(self.actual),
        }


class Grid:
    def __init__(self, max_x, low, high):
        if high < low:
            raise ValueError("empty exponent window")
        self.max_x, self.low, self.high = max_x, low, high
        self.width = high - low + 1
        self.rows = [[0] * self.width for _ in range(max_x + 1)]

    @classmethod
    def one(cls, max_x, low, high):
        g = cls(max_x, low, high)
        if low <= 0 <= high:
            g.rows[0][-low] = 1
        return g

    def get(self, n, e):
        if 0 <= n <= self.max_x and self.low <= e <= self.high:
            return self.rows[n][e - self.low]
        return 0

    def add_term(self, n, e, c):
        if 0 <= n <= self.max_x and self.low <= e <= self.high:
            self.rows[n][e - self.low] += c

    def mul_binomial(self, x_deg, exponent, sign=-1):
        """Multiply in place by ``1 + sign * u**exponent * x**x_deg``."""
        for n in range(self.max_x, x_deg - 1, -1):
            self._axpy(n, n - x_deg, exponent, sign, descending=True)

    def div_binomial(self, x_deg, exponent, sign=-1):
        """Multiply in place by ``1 / (1 + sign * u**exponent * x**x_deg)``."""
        if x_deg == 0 and exponent <= 0:
            raise ValueError("geometric series in u needs a positive exponent")
        for n in range(x_deg, self.max_x + 1):
            self._axpy(n, n - x_deg, exponent, -sign, descending=False)

    def _axpy(self, n, src, shift, factor, descending):
        dst_row, src_row = self.rows[n], self.rows[src]
        idx = range(self.width - 1, -1, -1) if descending else range(self.width)
        for i in idx:
            j = i - shift
            if 0 <= j < self.width:
                c = src_row[j]
                if c:
                    dst_row[i] += factor * c

    def mul_power(self, x_deg, exponent, power):
        """Multiply in place by ``(1 - u**exponent * x**x_deg)**power``."""
        if power >= 0:
            for _ in range(power):
                self.mul_binomial(x_deg, exponent)
        else:
            for _ in range(-power):
                self.div_binomial(x_deg, exponent)

    def first_mismatch(self, other, upto=None):
        """First differing coefficient, scanning exponents up to ``upto``."""
        if (self.max_x, self.low, self.high) != (other.max_x, other.low, other.high):
            raise ValueError("grids have different windows")
        width = self.width if upto is None else min(self.width, upto - self.low + 1)
        for n in range(self.max_x + 1):
            for i in range(width):
                a, b = self.rows[n][i], other.rows[n][i]
                if a != b:
                    return Mismatch(n, i + self.low, a, b)
        return None

    def __eq__(self, other):
        return isinstance(other, Grid) and self.first_mismatch(other) is None


def laurent_over_qpoch(grid, n, numerator_terms, pochhammer_length, step=2):
    """Add ``x**n * N(u) / prod_{j<=len} (1 - u**(step*j))`` into ``grid``.

    ``numerator_terms`` is an iterable of ``(exponent, coefficient)``.
    """
    row = Grid(0, grid.low, grid.high)
    for e, c in numerator_terms:
        row.add_term(0, e, c)
    for j in range(1, pochhammer_length + 1):
        row.div_binomial(0, step * j)
    for i, c in enumerate(row.rows[0]):
        if c:
            grid.rows[n][i] += c
