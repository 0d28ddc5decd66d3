"""Polynomials and reduced rational functions over F_{q^r}.

Poly stores coefficients constant-term first with no trailing zeros; the
zero polynomial has an empty tuple and degree() == -1 (standing in for
-infinity).  RatFn keeps gcd(num, den) == 1 with a monic denominator, so
re-reduction is idempotent and pole detection is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import _fieldmath as fm
from .ff import FieldDesc


class _Pole:
    """Evaluation hit a pole; a value, not an error."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "POLE"


POLE = _Pole()


@dataclass(frozen=True)
class Poly:
    field: FieldDesc
    coeffs: tuple[int, ...]

    @staticmethod
    def make(field: FieldDesc, coeffs: Iterable[int]) -> "Poly":
        c = list(coeffs)
        if any(not 0 <= v < field.order for v in c):
            raise ValueError("coefficient out of range for the field")
        return Poly(field, tuple(fm.trim(c)))

    @staticmethod
    def zero(field: FieldDesc) -> "Poly":
        return Poly(field, ())

    @staticmethod
    def const(field: FieldDesc, c: int) -> "Poly":
        return Poly.make(field, [c])

    @staticmethod
    def x(field: FieldDesc) -> "Poly":
        return Poly(field, (0, 1))

    @staticmethod
    def monomial(field: FieldDesc, e: int, c: int = 1) -> "Poly":
        if c == 0:
            return Poly.zero(field)
        return Poly.make(field, [0] * e + [c])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "Poly") -> "Poly":
        return Poly(self.field, tuple(fm.padd(self.field._ext, list(self.coeffs), list(other.coeffs))))

    def __sub__(self, other: "Poly") -> "Poly":
        return Poly(self.field, tuple(fm.psub(self.field._ext, list(self.coeffs), list(other.coeffs))))

    def __mul__(self, other: "Poly") -> "Poly":
        return Poly(self.field, tuple(fm.pmul(self.field._ext, list(self.coeffs), list(other.coeffs))))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        q, rem = fm.pdivmod(self.field._ext, list(self.coeffs), list(other.coeffs))
        return Poly(self.field, tuple(q)), Poly(self.field, tuple(rem))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def scale(self, c: int) -> "Poly":
        return Poly(self.field, tuple(fm.pscale(self.field._ext, list(self.coeffs), c)))

    def monic(self) -> "Poly":
        return Poly(self.field, tuple(fm.pmonic(self.field._ext, list(self.coeffs))))

    def eval(self, x: int) -> int:
        return fm.peval(self.field._ext, list(self.coeffs), x)

    def derivative(self) -> "Poly":
        return Poly(self.field, tuple(fm.pderiv(self.field._ext, list(self.coeffs))))

    def shift(self, omega: int) -> "Poly":
        """Compose with X + omega."""
        return Poly(self.field, tuple(fm.pshift(self.field._ext, list(self.coeffs), omega)))

    def __repr__(self) -> str:
        from .specparse import poly_to_str
        return f"Poly({poly_to_str(self)})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    if a.is_zero() and b.is_zero():
        raise ZeroDivisionError("gcd(0, 0) is undefined")
    g = fm.pgcd(a.field._ext, list(a.coeffs), list(b.coeffs))
    return Poly(a.field, tuple(g))


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic pairwise-coprime squarefree factors with multiplicities.

    Handles the characteristic-p degenerate branch (vanishing derivative)
    by descending through coefficient p-th roots.
    """
    if f.is_zero():
        raise ZeroDivisionError("squarefree decomposition of zero")
    parts = fm.p_squarefree_decomposition(f.field._ext, list(f.coeffs))
    return [(Poly(f.field, g), e) for g, e in parts]


def is_pth_power_free(f: Poly) -> bool:
    """True iff no nonconstant p-th power divides f."""
    if f.is_zero():
        raise ZeroDivisionError("zero polynomial")
    p = f.field.p
    return all(e < p for _, e in squarefree_decomposition(f))


def has_simple_root(f: Poly) -> bool:
    """True iff f has a root of multiplicity exactly 1 in the closure."""
    if f.is_zero():
        raise ZeroDivisionError("zero polynomial")
    return any(e == 1 for _, e in squarefree_decomposition(f))


def is_irreducible(f: Poly) -> bool:
    if f.degree() < 1:
        raise ValueError("irreducibility is undefined for constants")
    return fm.p_is_irreducible(f.field._ext, list(f.coeffs))


@dataclass(frozen=True)
class RatFn:
    num: Poly
    den: Poly

    @staticmethod
    def make(num: Poly, den: Poly) -> "RatFn":
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        field = num.field
        if num.is_zero():
            return RatFn(num, Poly.const(field, 1))
        g = poly_gcd(num, den)
        if g.degree() > 0:
            num = num // g
            den = den // g
        lead_inv = field.inv(den.lead())
        if lead_inv != 1:
            num = num.scale(lead_inv)
            den = den.scale(lead_inv)
        return RatFn(num, den)

    @staticmethod
    def from_poly(f: Poly) -> "RatFn":
        return RatFn(f, Poly.const(f.field, 1))

    @property
    def field(self) -> FieldDesc:
        return self.num.field

    def degree(self) -> int:
        """max(deg num, deg den); the zero function has degree 0."""
        return max(self.num.degree(), self.den.degree(), 0)

    def is_poly(self) -> bool:
        return self.den.degree() == 0

    def eval(self, x: int):
        """Value at x, or POLE exactly when the denominator vanishes."""
        d = self.den.eval(x)
        if d == 0:
            return POLE
        n = self.num.eval(x)
        if n == 0:
            return 0
        return self.field.mul(n, self.field.inv(d))

    def shift(self, omega: int) -> "RatFn":
        """Compose with X + omega; the degree is preserved."""
        return RatFn.make(self.num.shift(omega), self.den.shift(omega))

    def __sub__(self, other: "RatFn") -> "RatFn":
        a = self.num * other.den - other.num * self.den
        return RatFn.make(a, self.den * other.den)

    def __repr__(self) -> str:
        from .specparse import ratfn_to_str
        return f"RatFn({ratfn_to_str(self)})"


def distinct_roots_poles_count(f: RatFn) -> int:
    """Number of distinct zeros and poles in the closure: the degree of the
    squarefree part of num*den, computed without finding any root."""
    if f.num.is_zero():
        raise ZeroDivisionError("zero function")
    prod = f.num * f.den
    return sum(g.degree() for g, _ in squarefree_decomposition(prod))
