"""Self-check suites tying sums, classifiers and bounds together.

Each check returns (ok, detail); run_suite prints one line per check and
reports overall success.  The "small" suite is a fast subset of the same
checks; "full" runs everything at acceptance scale.  Checks reach their
subjects through module attributes (bounds.entropy_H, not a local alias) so
test doubles injected by monkeypatching are honored.
"""

from __future__ import annotations

import math
import random
import time
from typing import Callable

from . import bounds, classify, polyrat, sums
from .chars import AddChar, MultChar
from .errors import NotCertified
from .ff import find_primitive, make_field
from .polyrat import Poly, RatFn


def check_entropy_eta_constants(suite: str) -> tuple[bool, str]:
    """Reference constants of the exponent machinery."""
    if bounds.entropy_H(0.5) != 1.0 or bounds.entropy_H(0.0) != 0.0 or bounds.entropy_H(1.0) != 0.0:
        return False, "entropy endpoints are off"
    h = bounds.entropy_H(0.2)
    e = bounds.eta(0.2).eta
    ok = h > 0.7219 and e < 0.7208
    return ok, f"H(0.2)={h:.6f} (>0.7219), eta(0.2)={e:.6f} (<0.7208)"


def check_entropy_inverse_root(suite: str) -> tuple[bool, str]:
    rho0 = bounds.entropy_inverse(0.75)
    ok = abs(rho0 - 0.2145) <= 5e-4
    return ok, f"H(rho)=3/4 at rho={rho0:.6f} (0.2145 +- 5e-4)"


def check_simplified_bound_grid(suite: str) -> tuple[bool, str]:
    step = 1 if suite == "full" else 5
    worst = ""
    for i in range(5, 51, step):
        rho = i / 100
        e = bounds.eta(rho).eta
        h = bounds.entropy_H(rho)
        s = bounds.simplified_eta(rho)
        if e > s + 1e-6:
            return False, f"eta({rho}) above H/2+3/8"
        if rho <= 0.275 and e > s - 1e-4:
            return False, f"eta({rho}) not strictly below H/2+3/8 by 1e-4"
        if rho >= 0.2 and not e < h:
            return False, f"eta({rho}) not below H({rho})"
        worst = f"last rho={rho}"
    return True, f"grid 0.05..0.50 step {step/100}: all inequalities hold ({worst})"


def check_oracle_matches_monomial_rule(suite: str) -> tuple[bool, str]:
    max_r = 10 if suite == "full" else 6
    n = 0
    for r in range(4, max_r + 1):
        field = make_field(2, 1, r)
        for d in range(3, 2**r, 2):
            got = classify.oracle_classify_poly(Poly.monomial(field, d)).status
            want = classify.classify_monomial(d, 2).status
            n += 1
            if got != want:
                return False, f"disagreement at r={r}, d={d}: oracle {got}, rule {want}"
    return True, f"{n} odd exponents, r in 4..{max_r}: zero disagreements"


def check_frobenius_difference_identity(suite: str) -> tuple[bool, str]:
    """(X+1)^{p^k+1} - X^{p^k+1} == X^{p^k} + X + 1, and the reduction
    accepts it once the linear part is gone."""
    for p in (2, 3, 5):
        for k in (1, 2):
            field = make_field(p, 1, 1)
            d = p**k + 1
            f = Poly.monomial(field, d)
            diff = f.shift(1) - f
            expect = Poly.make(field, [1, 1] + [0] * (p**k - 2) + [1])
            if diff != expect:
                return False, f"identity fails for p={p}, k={k}"
            without_linear = diff - Poly.make(field, [0, 1])
            if not classify.artin_schreier_membership(without_linear):
                return False, f"reduction rejects p={p}, k={k}"
            if not classify.artin_schreier_membership(diff):
                return False, f"reduction rejects full difference p={p}, k={k}"
    return True, "p in {2,3,5}, k in {1,2}: identity and reduction agree"


def check_degenerate_subspace_sum(suite: str) -> tuple[bool, str]:
    rng = random.Random(20260810)
    trials = 10 if suite == "full" else 3
    for q, r in ((2, 4), (2, 6), (3, 3)):
        field = make_field(q, 1, r)
        expect = float(q ** (r - 1))
        for _ in range(trials):
            alpha = rng.randrange(1, field.order)
            beta = rng.randrange(field.order)
            deg = rng.randint(1, 4)
            h = Poly.make(field, [rng.randrange(field.order) for _ in range(deg)]
                          + [rng.randrange(1, field.order)])
            got = sums.degenerate_subspace_sum(field, alpha, beta, h)
            if got != expect:
                return False, f"q={q}, r={r}: sum {got} != {expect}"
    return True, f"q^(r-1) met exactly for (2,4),(2,6),(3,3) x {trials} draws"


def _random_certified_instance(field, table, rng):
    """A (psi, f2, chi, f1) tuple certified for both bound flavors."""
    for _ in range(400):
        kind = rng.choice(("psi", "chi", "both"))
        chi = f1 = None
        zeta = 0
        if kind in ("chi", "both"):
            chi = MultChar(table, rng.randrange(1, field.order - 1))
            a = rng.randrange(field.order)
            g = Poly.make(field, [rng.randrange(field.order) for _ in range(2)]
                          + [rng.randrange(1, field.order)])
            f1 = RatFn.from_poly(Poly.make(field, [field.neg(a), 1]) * g)
        if kind in ("psi", "both"):
            zeta = rng.randrange(1, field.order)
        psi = AddChar(field, zeta)
        if kind == "chi":
            f2 = RatFn.from_poly(Poly.zero(field))
        else:
            den_kind = rng.randrange(3)
            num = Poly.make(field, [rng.randrange(field.order) for _ in range(rng.randint(1, 3))]
                            + [rng.randrange(1, field.order)])
            if den_kind == 0:
                f2 = RatFn.from_poly(num)
            else:
                b = rng.randrange(field.order)
                den = Poly.make(field, [field.neg(b), 1])
                if den_kind == 2:
                    c = rng.randrange(field.order)
                    den = den * Poly.make(field, [field.neg(c), 1])
                f2 = RatFn.make(num, den)
        strong = sums.weil_certificate(field, psi, f2, chi, f1, allow_linear_term=True)
        weak = sums.weil_certificate(field, psi, f2, chi, f1, allow_linear_term=False)
        if strong and weak:
            return psi, f2, chi, f1
    raise AssertionError("could not draw a certified instance")


def check_weil_bounds(suite: str) -> tuple[bool, str]:
    rng = random.Random(771)
    trials = 50 if suite == "full" else 10
    checked = 0
    for p, m, r in ((2, 1, 8), (3, 1, 2)):
        field = make_field(p, m, r)
        table = find_primitive(field)
        for _ in range(trials):
            psi, f2, chi, f1 = _random_certified_instance(field, table, rng)
            res = sums.weil_check(field, psi, f2, chi=chi, f1=f1)
            if not res.holds:
                return False, f"full-field bound violated: |S|={res.abs_value} > {res.bound}"
            d1 = f1.degree() if f1 is not None else 0
            sub_bound = bounds.weil_subspace_bound(field.q, field.r, d1, f2.degree())
            for k in range(field.r + 1):
                acc = sums.compute_accumulator(field, sums.Domain.subspace(k), psi, f2, chi, f1)
                if acc.magnitude() > sub_bound + 1e-6:
                    return False, f"subspace bound violated at k={k}"
            checked += 1
    return True, f"{checked} certified instances on F_2^8 and F_9, full-field and all subspaces"


def check_sparse_bound_rows(suite: str) -> tuple[bool, str]:
    field = make_field(2, 3, 3)   # q = 8, r = 3, 512 elements
    table = find_primitive(field)
    chi = MultChar(table, 1)
    psi = AddChar(field, 1)
    f1 = RatFn.from_poly(Poly.make(field, [0, 1, 1]))   # X^2 + X, simple roots
    f2 = RatFn.from_poly(Poly.monomial(field, 3))
    for s in range(field.r + 1):
        rep = sums.mixed_sum(field, sums.Domain.sparse(s), psi, f2, chi=chi, f1=f1)
        if not rep.certified or rep.sparse_weil_log2 is None:
            return False, f"s={s}: instance unexpectedly uncertified"
        cap = min(2.0**rep.trivial_log2, 2.0**rep.sparse_weil_log2)
        if rep.abs_value > cap + 1e-6:
            return False, f"s={s}: |S|={rep.abs_value} above min bound {cap}"
    return True, "q=8, r=3: every s-row below min(trivial, sparse bound)"


def check_counting_orthogonality(suite: str) -> tuple[bool, str]:
    max_r = 10 if suite == "full" else 6
    for q, p, m in ((2, 2, 1), (3, 3, 1), (4, 2, 2)):
        for r in range(1, max_r + 1):
            field = make_field(p, m, r)
            total = 0
            for s in range(r + 1):
                n = sum(1 for _ in sums.enumerate_sparse(field, s))
                if n != math.comb(r, s) * (q - 1) ** s:
                    return False, f"#G_{r}({s}) wrong for q={q}"
                total += n
            if total != q**r:
                return False, f"weight classes do not partition F_{q}^{r}"
    for p, m, r in ((2, 1, 8), (3, 1, 4), (2, 2, 3)):
        field = make_field(p, m, r)
        psi = AddChar(field, 1)
        rep = sums.mixed_sum(field, sums.Domain.full(), psi, RatFn.from_poly(Poly.x(field)))
        if rep.abs_value > 1e-9:
            return False, f"additive orthogonality fails for p={p}, m={m}, r={r}"
        table = find_primitive(field)
        chi = MultChar(table, 1)
        rep = sums.mixed_sum(field, sums.Domain.full(), AddChar(field, 0),
                             RatFn.from_poly(Poly.zero(field)),
                             chi=chi, f1=RatFn.from_poly(Poly.x(field)))
        if rep.abs_value > 1e-9:
            return False, f"multiplicative orthogonality fails for p={p}, m={m}, r={r}"
    rng = random.Random(99)
    for _ in range(100):
        r = rng.randint(1, 40)
        s = rng.randint(0, r)
        k = rng.randint(0, r)
        lhs = sum(math.comb(k, t) * math.comb(r - k, s - t)
                  for t in range(max(0, s - (r - k)), min(k, s) + 1))
        if lhs != math.comb(r, s):
            return False, f"partition identity fails at r={r}, s={s}, k={k}"
    return True, f"counts to r<={max_r} for q in 2,3,4; orthogonality; 100 partition identities"


def check_binomial_lemmas(suite: str) -> tuple[bool, str]:
    hi = 100 if suite == "full" else 40
    for p in (2, 3, 5, 7):
        for n in range(hi + 1):
            for k in range(hi + 1):
                if classify.lucas_binomial_mod_p(n, k, p) != math.comb(n, k) % p:
                    return False, f"digit binomial wrong at n={n}, k={k}, p={p}"
    n_max = 60 if suite == "full" else 30
    for n in range(1, n_max + 1):
        for g10 in range(1, 11):
            if not bounds.binomial_sum_entropy_bound(n, g10 / 20):
                return False, f"entropy tail bound fails at n={n}, gamma={g10/20}"
    rng = random.Random(5)
    trials = 100 if suite == "full" else 20
    for _ in range(trials):
        rho = rng.uniform(0.01, 0.5)
        kappa = rng.uniform(0.01, 0.99)
        if not bounds.split_entropy_unimodal(rho, kappa):
            return False, f"split profile not unimodal at rho={rho}, kappa={kappa}"
    return True, f"digit binomials to {hi}; tail bounds to n={n_max}; {trials} unimodality draws"


CHECKS: list[tuple[str, Callable[[str], tuple[bool, str]]]] = [
    ("entropy-eta-constants", check_entropy_eta_constants),
    ("entropy-inverse-root", check_entropy_inverse_root),
    ("simplified-bound-grid", check_simplified_bound_grid),
    ("oracle-matches-monomial-rule", check_oracle_matches_monomial_rule),
    ("frobenius-difference-identity", check_frobenius_difference_identity),
    ("degenerate-subspace-sum", check_degenerate_subspace_sum),
    ("weil-bounds", check_weil_bounds),
    ("sparse-bound-rows", check_sparse_bound_rows),
    ("counting-orthogonality", check_counting_orthogonality),
    ("binomial-lemmas", check_binomial_lemmas),
]


def run_suite(suite: str = "small", write=print) -> int:
    """Run every check; zero exit iff all pass."""
    if suite not in ("small", "full"):
        raise ValueError(f"unknown suite {suite!r}")
    failures = 0
    for name, fn in CHECKS:
        t0 = time.time()
        try:
            ok, detail = fn(suite)
        except NotCertified as exc:
            ok, detail = False, f"refused: {exc}"
        except Exception as exc:  # a crashed check is a failed check
            ok, detail = False, f"error: {exc!r}"
        dt = time.time() - t0
        write(f"{'ok  ' if ok else 'FAIL'} {name} ({dt:.2f}s): {detail}")
        if not ok:
            failures += 1
    write(f"{'all checks passed' if not failures else f'{failures} check(s) failed'} [{suite} suite]")
    return 0 if failures == 0 else 1
