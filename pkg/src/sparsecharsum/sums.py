"""Enumeration of fixed-weight sets, coordinate subspaces and the full field,
with exact mixed character sums over each.

Enumeration order is pinned (support sets in colexicographic order, values
in canonical order) so that CSV outputs are byte-stable; sparse enumeration
streams and never materializes the set.  Sums accumulate symbolically in a
UnitAccumulator; chunked accumulation merges associatively, so the result
is independent of the worker count.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import bounds, classify
from .chars import CHI_ZERO, AddChar, MultChar, UnitAccumulator, accumulator_for
from .errors import GuardViolation, NotCertified
from .ff import FieldDesc
from .polyrat import POLE, Poly, RatFn


@dataclass(frozen=True)
class Domain:
    kind: str                 # "sparse" | "subspace" | "full"
    param: int | None = None

    @staticmethod
    def sparse(s: int) -> "Domain":
        return Domain("sparse", s)

    @staticmethod
    def subspace(k: int) -> "Domain":
        return Domain("subspace", k)

    @staticmethod
    def full() -> "Domain":
        return Domain("full")

    def label(self) -> str:
        return self.kind if self.param is None else f"{self.kind}:{self.param}"


def domain_size(field: FieldDesc, domain: Domain) -> int:
    if domain.kind == "sparse":
        s = _check_range(field, domain.param, "s")
        return math.comb(field.r, s) * (field.q - 1) ** s
    if domain.kind == "subspace":
        k = _check_range(field, domain.param, "k")
        return field.q**k
    if domain.kind == "full":
        return field.order
    raise ValueError(f"unknown domain kind {domain.kind!r}")


def _check_range(field: FieldDesc, v, name: str) -> int:
    if v is None or not 0 <= v <= field.r:
        raise ValueError(f"{name} must lie in [0, r={field.r}], got {v}")
    return v


def _colex_supports(r: int, s: int):
    """s-subsets of {0..r-1} in colexicographic order."""
    if s == 0:
        yield ()
        return
    for top in range(s - 1, r):
        for rest in _colex_supports(top, s - 1):
            yield rest + (top,)


def enumerate_sparse(field: FieldDesc, s: int):
    """Stream the weight-s elements: C(r,s)(q-1)^s of them, each exactly
    weight s, supports colex, coordinate values counting in canonical order
    with the last support position fastest."""
    s = _check_range(field, s, "s")
    if s == 0:
        yield 0
        return
    r, q = field.r, field.q
    values = range(1, q)
    for support in _colex_supports(r, s):
        for combo in itertools.product(values, repeat=s):
            u = [0] * r
            for pos, val in zip(support, combo):
                u[pos] = val
            yield field.from_basis_coords(u)


def enumerate_subspace(field: FieldDesc, k: int):
    """Stream the q^k combinations of the first k basis vectors."""
    k = _check_range(field, k, "k")
    r, q = field.r, field.q
    for code in range(q**k):
        u = [0] * r
        c = code
        for i in range(k):
            c, u[i] = divmod(c, q)
        yield field.from_basis_coords(u)


def enumerate_domain(field: FieldDesc, domain: Domain):
    if domain.kind == "sparse":
        return enumerate_sparse(field, domain.param)
    if domain.kind == "subspace":
        return enumerate_subspace(field, domain.param)
    if domain.kind == "full":
        return iter(field.elements())
    raise ValueError(f"unknown domain kind {domain.kind!r}")


@dataclass(frozen=True)
class SumReport:
    domain: Domain
    point_count: int
    dropped: int
    abs_value: float
    trivial_log2: float
    sparse_weil_log2: float | None    # sparse domains, certified instances only
    weil_bound: float | None          # full field, certified instances only
    certified: bool
    certificate: str


def default_threads() -> int:
    env = os.environ.get("SPARSECHARSUM_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _accumulate(field: FieldDesc, points, psi: AddChar, f2: RatFn,
                chi: MultChar | None, f1: RatFn | None) -> UnitAccumulator:
    acc = accumulator_for(field)
    for nu in points:
        x2 = f2.eval(nu)
        if x2 is POLE:
            acc.drop()
            continue
        a = 0
        if chi is not None:
            x1 = f1.eval(nu)
            if x1 is POLE:
                acc.drop()
                continue
            res = chi.residue(x1)
            if res is CHI_ZERO:
                acc.drop()
                continue
            a = res
        acc.add(a, psi.residue(x2))
    return acc


def _chunks(iterable, size):
    it = iter(iterable)
    while True:
        block = list(itertools.islice(it, size))
        if not block:
            return
        yield block


def compute_accumulator(field: FieldDesc, domain: Domain, psi: AddChar, f2: RatFn,
                        chi: MultChar | None = None, f1: RatFn | None = None,
                        threads: int | None = None) -> UnitAccumulator:
    """Exact accumulation over the domain, optionally chunked across workers.

    Chunk merges commute, so the accumulated counts are identical for every
    worker count.
    """
    if (chi is None) != (f1 is None):
        raise ValueError("a multiplicative factor needs both chi and f1")
    n_points = domain_size(field, domain)
    if n_points > field.guards.enumeration_max:
        raise GuardViolation("domain too large to enumerate", "enumeration_max",
                             field.guards.enumeration_max, n_points)
    threads = threads if threads and threads > 0 else default_threads()
    points = enumerate_domain(field, domain)
    if threads == 1 or n_points < 4096:
        return _accumulate(field, points, psi, f2, chi, f1)
    acc = accumulator_for(field)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futs = [pool.submit(_accumulate, field, block, psi, f2, chi, f1)
                for block in _chunks(points, 8192)]
        for fut in futs:
            acc.merge(fut.result())
    return acc


def mixed_sum(field: FieldDesc, domain: Domain, psi: AddChar, f2: RatFn,
              chi: MultChar | None = None, f1: RatFn | None = None,
              threads: int | None = None) -> SumReport:
    """Exact |sum over the domain of chi(f1(nu)) psi(f2(nu))| with the pole
    and chi(0)=0 conventions, plus every applicable bound.

    Passing the principal character object applies chi(0)=0 literally;
    passing chi=None means no multiplicative factor at all, and zeros of f1
    are then not dropped (there is no f1).
    """
    acc = compute_accumulator(field, domain, psi, f2, chi, f1, threads)
    n_points = domain_size(field, domain)
    cert = weil_certificate(field, psi, f2, chi, f1,
                            allow_linear_term=domain.kind != "full")
    d1 = f1.degree() if f1 is not None else 0
    d2 = f2.degree()

    if domain.kind == "sparse":
        trivial = bounds.trivial_bound_log2(field.q, field.r, domain.param)
        sparse_weil = (bounds.sparse_weil_bound_log2(field.q, field.r, domain.param, d1, d2)
                       if cert else None)
        weil = None
    elif domain.kind == "subspace":
        trivial = domain.param * math.log2(field.q)
        sparse_weil = None
        weil = (bounds.weil_subspace_bound(field.q, field.r, d1, d2)
                if cert else None)
    else:
        trivial = field.r * math.log2(field.q)
        sparse_weil = None
        weil = bounds.weil_full_bound(field.q, field.r, d1, d2) if cert else None

    return SumReport(
        domain=domain,
        point_count=n_points,
        dropped=acc.dropped,
        abs_value=acc.magnitude(),
        trivial_log2=trivial,
        sparse_weil_log2=sparse_weil,
        weil_bound=weil,
        certified=cert is not None,
        certificate=cert or "",
    )


def weil_certificate(field: FieldDesc, psi: AddChar, f2: RatFn,
                     chi: MultChar | None, f1: RatFn | None,
                     allow_linear_term: bool) -> str | None:
    """A reason the character/function pair satisfies the bound hypotheses,
    or None when nothing certifies it."""
    if chi is not None and not chi.is_principal() and f1 is not None:
        reason = classify.certify_multiplicative(chi.order(), f1)
        if reason:
            return reason
    if not psi.is_principal():
        reason = classify.certify_additive(f2, allow_linear_term)
        if reason:
            return reason
    return None


@dataclass(frozen=True)
class WeilCheck:
    abs_value: float
    bound: float
    holds: bool
    certificate: str


def weil_check(field: FieldDesc, psi: AddChar, f2: RatFn,
               chi: MultChar | None = None, f1: RatFn | None = None,
               threads: int | None = None) -> WeilCheck:
    """Full-field sum against 2(D1+D2)q^{r/2}; refuses uncertified instances
    rather than reporting a vacuous check."""
    cert = weil_certificate(field, psi, f2, chi, f1, allow_linear_term=False)
    if cert is None:
        raise NotCertified("no hypothesis certificate for this instance")
    acc = compute_accumulator(field, Domain.full(), psi, f2, chi, f1, threads)
    d1 = f1.degree() if f1 is not None else 0
    bound = bounds.weil_full_bound(field.q, field.r, d1, f2.degree())
    value = acc.magnitude()
    return WeilCheck(value, bound, value <= bound + 1e-6, cert)


def degenerate_subspace_sum(field: FieldDesc, alpha: int, beta: int, h: Poly,
                            threads: int | None = None) -> float:
    """The sharpness example for the subspace bound: with
    g2 = alpha*(h^p - h) + beta*X and the character matched to alpha, the sum
    over the kernel of nu -> Tr(alpha^{-1} beta nu) (an (r-1)-dimensional
    space; any coordinate hyperplane when beta = 0) equals q^{r-1} exactly.

    Restricted to prime q: for q = p^m with m > 1 the trace kernel is not an
    F_q-space of dimension r-1.
    """
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    if field.m != 1:
        raise ValueError("the construction needs a prime ground field (m = 1)")
    p = field.p
    # g2 = alpha * (h(X)^p - h(X)) + beta * X
    g2 = (_poly_pow(h, p) - h).scale(alpha)
    if beta:
        g2 = g2 + Poly.make(field, [0, beta])

    inv_alpha = field.inv(alpha)
    psi = AddChar(field, inv_alpha)

    # kernel of the F_p-linear form nu -> Tr(inv_alpha * beta * nu)
    r = field.r
    c = field.mul(inv_alpha, beta)
    t = [field.trace(field.mul(c, field.from_coords_unchecked([0] * i + [1])))
         for i in range(r)]
    pivot = next((i for i, v in enumerate(t) if v), None)
    basis = []
    if pivot is None:
        basis = [[1 if j == i else 0 for j in range(r)] for i in range(r - 1)]
    else:
        inv_piv = pow(t[pivot], p - 2, p)
        for i in range(r):
            if i == pivot:
                continue
            vec = [0] * r
            vec[i] = 1
            vec[pivot] = (-t[i] * inv_piv) % p
            basis.append(vec)

    acc = accumulator_for(field)
    for combo in itertools.product(range(p), repeat=r - 1):
        u = [0] * r
        for coeff, vec in zip(combo, basis):
            if coeff:
                for j in range(r):
                    u[j] = (u[j] + coeff * vec[j]) % p
        nu = field.from_coords_unchecked(u)
        acc.add(0, psi.residue(g2.eval(nu)))
    return acc.magnitude()


def _poly_pow(f: Poly, e: int) -> Poly:
    out = Poly.const(f.field, 1)
    base = f
    while e:
        if e & 1:
            out = out * base
        base = base * base
        e >>= 1
    return out
