"""Membership decisions for the class of functions whose shifted differences
f(X+w) - f(X) never degenerate into a(g^p - g) + b*X.

Additive character sums over such functions admit the sparse-sum bound; the
module offers closed-form rules (monomials, reciprocal monomials, degree
residues, denominator structure), an exact exhaustive oracle for polynomials
over small fields, and the certification helpers the sum bounds rely on.

The oracle does not loop over a literally: for a fixed shift w the greedy
reduction of a^{-1} * f_w settles each coefficient independently, and the
settled value of the coefficient at exponent j*p^i is a p-linear function of
a^{-1}.  Stacking those linear conditions turns "does some nonzero a work"
into a kernel computation over F_p, and a nontrivial kernel vector is the
witness.  For pure monomials the substitution X -> w*X maps the shift-1
difference onto every other shift, so a single w decides all of them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import polyrat as pr
from .errors import GuardViolation
from .ff import FieldDesc
from .guards import DEFAULT, Guards
from .polyrat import Poly, RatFn


class Status(enum.Enum):
    IN = "in"
    NOT_IN = "not_in"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    status: Status
    rule: str
    witness: tuple[int, int] | None = None   # (shift, scale) for NOT_IN


def lucas_binomial_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p via digit-wise binomials of the base-p expansions."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    out = 1
    while k or n:
        n, nd = divmod(n, p)
        k, kd = divmod(k, p)
        if kd > nd:
            return 0
        out = out * math.comb(nd, kd) % p
    return out


def normalize_exponent(d: int, p: int) -> int:
    """Strip every factor p from d; sums with exponent d and d*p share maxima."""
    if d < 1:
        raise ValueError("exponent must be positive")
    while d % p == 0:
        d //= p
    return d


def classify_monomial(d: int, p: int) -> Verdict:
    """X^d membership: out exactly for d in {1, 2} or d = p^k + 1."""
    if math.gcd(d, p) != 1:
        raise ValueError("normalize the exponent first: gcd(d, p) must be 1")
    if d in (1, 2):
        return Verdict(Status.NOT_IN, "monomial")
    e = d - 1
    while e % p == 0:
        e //= p
    if e == 1:   # d - 1 is a power of p
        return Verdict(Status.NOT_IN, "monomial")
    return Verdict(Status.IN, "monomial")


def classify_reciprocal(d: int, p: int) -> Verdict:
    """X^{-d} membership: always in, given gcd(d, p) = 1."""
    if math.gcd(d, p) != 1:
        raise ValueError("normalize the exponent first: gcd(d, p) must be 1")
    if d < 1:
        raise ValueError("exponent must be positive")
    return Verdict(Status.IN, "reciprocal")


def classify_degree_residue(f: Poly, p: int) -> Verdict:
    """Any polynomial of degree d >= 3 with d mod p in [2, p-1] is in.

    Vacuous for p = 2 (the residue window is empty), hence UNKNOWN there.
    """
    d = f.degree()
    if d < 1:
        raise ValueError("need a nonconstant polynomial")
    if d >= 3 and 2 <= d % p <= p - 1:
        return Verdict(Status.IN, "degree_residue")
    return Verdict(Status.UNKNOWN, "degree_residue")


def classify_rational_denominator(f: RatFn, mode: str = "shortcut") -> Verdict:
    """Sufficient condition through the denominator v of f = u/v:
    deg u <= deg v + 1, gcd(deg v, p) = 1, and v(X)v(X+w) free of p-th powers
    for every w != 0.

    "shortcut" replaces the w-loop by deg v < p/2 or irreducibility of v;
    "exhaustive" walks every nonzero w of the field.
    """
    field = f.field
    p = field.p
    u, v = f.num, f.den
    dv = v.degree()
    if dv < 1:
        return Verdict(Status.UNKNOWN, "denominator")
    if u.degree() > dv + 1 or math.gcd(dv, p) != 1:
        return Verdict(Status.UNKNOWN, "denominator")
    if mode == "shortcut":
        if dv < p / 2:
            return Verdict(Status.IN, "denominator")
        if pr.is_irreducible(v):
            return Verdict(Status.IN, "denominator")
        return Verdict(Status.UNKNOWN, "denominator")
    if mode == "exhaustive":
        for w in field.nonzero_elements():
            if not pr.is_pth_power_free(v * v.shift(w)):
                return Verdict(Status.UNKNOWN, "denominator")
        return Verdict(Status.IN, "denominator")
    raise ValueError(f"unknown mode {mode!r}")


def artin_schreier_membership(h: Poly) -> bool:
    """Does polynomial h equal g^p - g + b*X + c for a polynomial g (over the
    closure) and scalars b, c?

    Greedy top-down reduction: a degree-e leading term with e >= 2 must have
    p | e, and then stripping t^p - t with t = pth_root(lead) * X^{e/p} is
    forced; anything of degree <= 1 is absorbed by b*X and by c = mu^p - mu.
    """
    field = h.field
    p = field.p
    coeffs = {e: c for e, c in enumerate(h.coeffs) if c}
    while True:
        deg = max(coeffs, default=-1)
        if deg <= 1:
            return True
        if deg % p:
            return False
        c = coeffs.pop(deg)
        root = field.pth_root(c)
        e2 = deg // p
        merged = field.add(coeffs.get(e2, 0), root)
        if merged:
            coeffs[e2] = merged
        else:
            coeffs.pop(e2, None)


# -- the settled-coefficient linear systems ---------------------------------


def _chains(h: Poly, skip_linear_chain: bool):
    """Group nonzero coefficients by the p-free part j of their exponent.

    chain[j][i] holds pth_root^i(h[j * p^i]); the settled value of the
    coefficient at exponent j after full reduction of a^{-1} h is
    sum_i pth_root^i(a^{-1}) * chain[j][i], which must vanish whenever
    p does not divide j.  Exponents 0 (constants) are always absorbable;
    the j = 1 chain is absorbable exactly when a b*X term is available.
    """
    field = h.field
    chains: dict[int, list[tuple[int, int]]] = {}
    p = field.p
    for e, c in enumerate(h.coeffs):
        if c == 0 or e == 0:
            continue
        j, i = e, 0
        while j % p == 0:
            j //= p
            i += 1
        if j == 1 and skip_linear_chain:
            continue
        v = c
        for _ in range(i):
            v = field.pth_root(v)
        chains.setdefault(j, []).append((i, v))
    return chains


def _fp_digits(field: FieldDesc, x: int) -> list[int]:
    """Canonical integers are base-p digit vectors of length r*m."""
    n = field.r * field.m
    p = field.p
    out = [0] * n
    for t in range(n):
        x, out[t] = divmod(x, p)
    return out


class _FpSolver:
    """Incremental row reduction over F_p with kernel extraction."""

    def __init__(self, p: int, n: int):
        self.p = p
        self.n = n
        self.rows: dict[int, list[int]] = {}   # pivot column -> reduced row

    def rank(self) -> int:
        return len(self.rows)

    def insert(self, row: list[int]) -> None:
        p = self.p
        row = list(row)
        for col, pivot in self.rows.items():
            c = row[col]
            if c:
                row = [(a - c * b) % p for a, b in zip(row, pivot)]
        lead = next((i for i, v in enumerate(row) if v), None)
        if lead is None:
            return
        inv = pow(row[lead], p - 2, p)
        row = [v * inv % p for v in row]
        for col, pivot in self.rows.items():
            c = pivot[lead]
            if c:
                self.rows[col] = [(a - c * b) % p for a, b in zip(pivot, row)]
        self.rows[lead] = row

    def kernel_vector(self) -> list[int] | None:
        if self.rank() >= self.n:
            return None
        free = next(i for i in range(self.n) if i not in self.rows)
        vec = [0] * self.n
        vec[free] = 1
        for col, row in self.rows.items():
            vec[col] = (-row[free]) % self.p
        return vec


def _alpha_kernel(h: Poly, skip_linear_chain: bool = True) -> int | None:
    """A nonzero x with x = a^{-1} making a^{-1} h reducible, or None.

    Each chain condition is F_p-linear in x (x -> x^{p^t} is additive), so
    the scales that work form the joint kernel of the stacked conditions.
    """
    field = h.field
    chains = _chains(h, skip_linear_chain)
    n = field.r * field.m
    p = field.p
    solver = _FpSolver(p, n)
    roots = field.pth_root_table()
    for j in sorted(chains, reverse=True):
        if j == 1 and skip_linear_chain:
            continue
        terms = chains[j]
        images = []
        for t in range(n):
            e_t = pow(p, t)            # canonical int of the t-th F_p basis vector
            acc = 0
            for i, v in terms:
                x = e_t
                for _ in range(i):
                    x = roots[x]
                acc = field.add(acc, field.mul(v, x))
            images.append(acc)
        digit_rows = [_fp_digits(field, img) for img in images]
        for out_digit in range(n):
            solver.insert([dr[out_digit] for dr in digit_rows])
        if solver.rank() >= n:
            return None
    vec = solver.kernel_vector()
    if vec is None:
        return None
    x = 0
    for t in range(n - 1, -1, -1):
        x = x * p + vec[t]
    return x


def expressible_with_some_scale(h: Poly, allow_linear_term: bool = True) -> bool:
    """Is a^{-1} h reducible for some nonzero field scalar a?"""
    if h.degree() <= 1:
        return True
    return _alpha_kernel(h, skip_linear_chain=allow_linear_term) is not None


def expressible_over_closure(h: Poly, allow_linear_term: bool) -> bool:
    """Like expressible_with_some_scale, but the scale may come from any
    extension: each chain condition, rewritten as a polynomial in x via a
    Frobenius twist, is an additive polynomial, and a common nonzero root
    exists in the closure iff the gcd of those polynomials is not a pure
    power of X.
    """
    if h.degree() <= 1:
        return True
    field = h.field
    chains = _chains(h, skip_linear_chain=allow_linear_term)
    if not chains:
        return True
    k = field._ext
    from . import _fieldmath as fm
    gcd: list[int] | None = None
    for j, terms in chains.items():
        depth = max(i for i, _ in terms)
        poly = [0] * (field.p ** depth + 1)
        for i, v in terms:
            # condition sum_i pth_root^i(x) * v_i = 0, raised to Frobenius^depth
            coeff = v
            for _ in range(depth):
                coeff = field.frobenius(coeff)
            poly[field.p ** (depth - i)] = k.add(poly[field.p ** (depth - i)], coeff)
        poly = fm.trim(poly)
        gcd = poly if gcd is None else fm.pgcd(k, gcd, poly)
        if fm.pdeg(gcd) <= 0:
            return False
    while gcd and gcd[0] == 0:
        gcd = gcd[1:]          # strip X factors: only the root 0 lives there
    return fm.pdeg(gcd) > 0


# -- the exhaustive oracle ----------------------------------------------------


def _monomial_difference(field: FieldDesc, c: int, d: int, w: int) -> Poly:
    """c * ((X+w)^d - X^d) via digit binomials, avoiding a Horner compose."""
    p = field.p
    pows = [1] * (d + 1)
    for i in range(1, d + 1):
        pows[i] = field.mul(pows[i - 1], w)
    coeffs = [0] * d
    for j in range(d):
        b = lucas_binomial_mod_p(d, j, p)
        if b:
            scaled = pows[d - j]
            if b > 1:
                acc = 0
                for _ in range(b):
                    acc = field.add(acc, scaled)
                scaled = acc
            coeffs[j] = field.mul(c, scaled)
    return Poly.make(field, coeffs)


def oracle_classify_poly(f: Poly, guards: Guards = DEFAULT) -> Verdict:
    """Exact membership for a polynomial by exhausting shifts (and scales,
    via the settled-coefficient kernel).

    A shifted difference of degree <= 1 is degenerate outright; otherwise a
    nontrivial kernel vector x gives the witness scale a = x^{-1}.  Sound
    for polynomials because a rational g in the degenerate form is forced to
    be a polynomial by clearing denominators.
    """
    field = f.field
    if field.order > guards.oracle_field_max:
        raise GuardViolation("field too large for the exhaustive oracle",
                             "oracle_field_max", guards.oracle_field_max, field.order)

    nonconst = [(e, c) for e, c in enumerate(f.coeffs) if c and e >= 1]
    pure_monomial = len(nonconst) == 1
    if pure_monomial:
        # X -> w*X carries the shift-1 difference onto the shift-w one,
        # rescaling by w^d: one shift decides every shift
        shifts = [1]
    else:
        shifts = list(field.nonzero_elements())

    for w in shifts:
        if pure_monomial:
            e, c = nonconst[0]
            fw = _monomial_difference(field, c, e, w)
        else:
            fw = f.shift(w) - f
        if fw.degree() <= 1:
            scale = 0 if (fw.is_zero() or (fw.degree() == 1 and fw.coeffs[0] == 0)) else 1
            return Verdict(Status.NOT_IN, "oracle", (w, scale))
        x = _alpha_kernel(fw, skip_linear_chain=True)
        if x is not None:
            return Verdict(Status.NOT_IN, "oracle", (w, field.inv(x)))
    return Verdict(Status.IN, "oracle", None)


# -- certification for the Weil-type bounds ----------------------------------


def certify_multiplicative(chi_order: int, f1: RatFn) -> str | None:
    """A reason the multiplicative argument is not an e-th power, or None.

    An e-th power has every zero and pole multiplicity divisible by e, and
    degree divisible by e.
    """
    if chi_order <= 1 or f1.num.is_zero():
        return None
    if f1.num.degree() >= 1 and any(e == 1 for _, e in pr.squarefree_decomposition(f1.num)):
        return "multiplicative argument has a simple zero"
    if f1.den.degree() >= 1 and any(e == 1 for _, e in pr.squarefree_decomposition(f1.den)):
        return "multiplicative argument has a simple pole"
    if f1.degree() % chi_order:
        return "character order does not divide the argument degree"
    return None


def certify_additive(f2: RatFn, allow_linear_term: bool) -> str | None:
    """A reason the additive argument avoids the degenerate form, or None.

    allow_linear_term selects the subspace-flavored form with the b*X slack
    (needed for sparse and subspace sums) over the plain full-field form.
    """
    p = f2.field.p
    if not f2.is_poly():
        # poles of a(g^p - g) + b*X have order divisible by p
        if any(e % p for _, e in pr.squarefree_decomposition(f2.den)):
            return "additive argument has a pole of order not divisible by p"
        return None
    h = f2.num  # den is the constant 1 after reduction
    d = h.degree()
    if d < 1:
        return None
    if not allow_linear_term and d >= 1 and d % p:
        return "additive argument degree is not divisible by p"
    if allow_linear_term and d >= 2 and d % p:
        return "additive argument degree is >= 2 and not divisible by p"
    if not expressible_over_closure(h, allow_linear_term):
        return "additive argument fails the reduction over the closure"
    return None
