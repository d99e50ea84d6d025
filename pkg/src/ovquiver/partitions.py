"""Partitions, their hook/content statistics and symmetric group characters."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache, total_ordering

__all__ = [
    "Partition",
    "PartitionStats",
    "enumerate_partitions",
    "stats",
    "mn_character",
    "mobius",
    "divisors",
    "binomial",
    "is_prime",
]


@total_ordering
@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Ordering is lexicographic on the parts, so sorting a list of partitions
    of the same size in reverse gives the reverse lexicographic order used
    everywhere in this package.
    """

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text):
        """Parse ``"2,1"`` style input; an empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = [int(t) for t in text.split(",")]
        except ValueError as exc:
            raise ValueError(f"cannot parse partition {text!r}") from exc
        return cls(tuple(parts))

    @classmethod
    def from_parts(cls, parts):
        """Build from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    def __lt__(self, other):
        return self.parts < other.parts

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    @property
    def size(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    @cached_property
    def multiplicities(self):
        """``{i: m_i}`` for the parts that occur."""
        out = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    @cached_property
    def conjugate(self):
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def cells(self):
        """Cells ``(i, j)``, 1-based row and column."""
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                yield i, j

    def hook(self, i, j):
        return self.parts[i - 1] + self.conjugate.parts[j - 1] - i - j + 1

    @cached_property
    def kappa(self):
        return sum(p * (p - 2 * i + 1) for i, p in enumerate(self.parts, start=1))

    @cached_property
    def z(self):
        out = 1
        for part, mult in self.multiplicities.items():
            out *= math.factorial(mult) * part**mult
        return out

    def scaled(self, d):
        """Multiply every part by ``d`` (the Adams action on ``p_mu``)."""
        return Partition(tuple(p * d for p in self.parts))

    def union(self, other):
        """Concatenate parts: ``p_lambda * p_mu = p_{lambda U mu}``."""
        return Partition.from_parts(self.parts + other.parts)


@dataclass(frozen=True)
class PartitionStats:
    hooks: tuple
    contents: tuple
    kappa: int
    z: int


def stats(lam):
    """Hook lengths, contents, framing weight kappa and centralizer order z."""
    hooks = tuple(sorted(lam.hook(i, j) for i, j in lam.cells()))
    contents = tuple(sorted(j - i for i, j in lam.cells()))
    return PartitionStats(hooks=hooks, contents=contents, kappa=lam.kappa, z=lam.z)


@lru_cache(maxsize=None)
def _partitions(n, largest):
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n):
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        return []
    return [Partition(p) for p in _partitions(n, n)]


def mn_character(lam, mu):
    """Irreducible character value chi_lam(mu) by the Murnaghan-Nakayama rule."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    mu = mu if isinstance(mu, Partition) else Partition(tuple(mu))
    if lam.size != mu.size:
        return 0
    return _mn(lam.parts, mu.parts)


@lru_cache(maxsize=None)
def _mn(lam, mu):
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    # Beta-set: beads at lam_i + (l - i); removing an r-rim hook moves one
    # bead down by r, with sign given by the beads jumped over.
    l = len(lam)
    beta = [lam[i] + (l - 1 - i) for i in range(l)]
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        new_beta = sorted((c if c != b else target for c in beta), reverse=True)
        new_lam = tuple(p for p in (new_beta[i] - (l - 1 - i) for i in range(l)) if p > 0)
        total += (-1) ** jumped * _mn(new_lam, rest)
    return total


def mobius(n):
    if n < 1:
        raise ValueError("Mobius function needs n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def divisors(n):
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def is_prime(n):
    if n < 2:
        return False
    return all(n % p for p in range(2, math.isqrt(n) + 1))


def binomial(a, b):
    """Binomial coefficient with the falling-product convention.

    ``binomial(a, b) = a (a-1) ... (a-b+1) / b!`` for ``b >= 0`` and any
    integer ``a``; zero for ``b < 0``.  For ``a >= 0`` this is ``math.comb``
    (zero when ``b > a``); for ``a < 0`` it equals ``(-1)**b C(b-a-1, b)``.
    """
    if b < 0:
        return 0
    if a >= 0:
        return math.comb(a, b)
    return (-1) ** b * math.comb(b - a - 1, b)
