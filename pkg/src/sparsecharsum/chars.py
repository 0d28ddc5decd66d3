"""Additive and multiplicative character evaluation, exact term accumulation.

Character values are kept symbolic as residue pairs (a mod q^r-1, b mod p)
meaning e^{2*pi*i*(a/(q^r-1) + b/p)}.  A UnitAccumulator counts how often
each pair occurs, so a sum of millions of unit vectors stays exactly
representable and bit-reproducible; the float magnitude is taken once at
the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dfield

from .ff import FieldDesc, LogTable


class _ChiZero:
    """Multiplicative character at 0: the chi(0)=0 convention."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "CHI_ZERO"


CHI_ZERO = _ChiZero()


@dataclass(frozen=True)
class AddChar:
    """psi(x) = e_p(Tr(zeta * x)); principal iff zeta == 0."""

    field: FieldDesc
    zeta: int

    def is_principal(self) -> bool:
        return self.zeta == 0

    def residue(self, x: int) -> int:
        """b in [0, p) with psi(x) = e^{2 pi i b / p}."""
        return self.field.trace(self.field.mul(self.zeta, x))


@dataclass(frozen=True)
class MultChar:
    """chi(gamma^j) = e_{q^r-1}(j*k); principal iff k == 0; chi(0) = 0."""

    table: LogTable
    k: int

    @property
    def field(self) -> FieldDesc:
        return self.table.field

    def is_principal(self) -> bool:
        return self.k == 0

    def order(self) -> int:
        n = self.field.order - 1
        if n == 0:
            return 1
        return n // math.gcd(self.k, n)

    def residue(self, x: int):
        """a in [0, q^r-1) with chi(x) = e^{2 pi i a / (q^r-1)}, or CHI_ZERO."""
        if x == 0:
            return CHI_ZERO
        n = self.field.order - 1
        return (self.k * self.table.logs[x]) % n if n else 0

    def __pow__(self, e: int) -> "MultChar":
        n = self.field.order - 1
        return MultChar(self.table, (self.k * e) % n if n else 0)


@dataclass
class UnitAccumulator:
    """Exact multiset of roots of unity, plus a count of excluded terms.

    counts maps (a, b) residue pairs to multiplicities; dropped counts the
    summation points excluded by the pole and chi(0)=0 conventions, so
    total() + dropped always equals the number of points visited.  merge()
    is associative and commutative, which is what makes chunked concurrent
    accumulation deterministic.
    """

    root_order: int          # q^r - 1 (1 for the two-element field)
    char_p: int
    counts: dict = dfield(default_factory=dict)
    dropped: int = 0

    def add(self, a: int, b: int, mult: int = 1) -> None:
        key = (a % self.root_order if self.root_order > 1 else 0, b % self.char_p)
        self.counts[key] = self.counts.get(key, 0) + mult

    def drop(self, n: int = 1) -> None:
        self.dropped += n

    def total(self) -> int:
        return sum(self.counts.values())

    def merge(self, other: "UnitAccumulator") -> "UnitAccumulator":
        if (self.root_order, self.char_p) != (other.root_order, other.char_p):
            raise ValueError("accumulators disagree on root orders")
        for key, n in other.counts.items():
            self.counts[key] = self.counts.get(key, 0) + n
        self.dropped += other.dropped
        return self

    def as_complex(self) -> complex:
        re = 0.0
        im = 0.0
        tau = 2.0 * math.pi
        n_root = self.root_order
        p = self.char_p
        for (a, b) in sorted(self.counts):
            n = self.counts[(a, b)]
            ang = tau * (a / n_root + b / p)
            re += n * math.cos(ang)
            im += n * math.sin(ang)
        return complex(re, im)

    def magnitude(self) -> float:
        """|sum|; absolute error at most total() * 2^-45."""
        z = self.as_complex()
        return math.hypot(z.real, z.imag)


def accumulator_for(field: FieldDesc) -> UnitAccumulator:
    return UnitAccumulator(root_order=max(field.order - 1, 1), char_p=field.p)
