"""Generic polynomial arithmetic over integer-encoded coefficient fields.

Every coefficient field in this package (F_p, F_q, F_{q^r}) presents its
elements as canonical integers and its arithmetic as a ScalarOps bundle.
Polynomials here are plain lists of coefficients, constant term first,
with no trailing zeros; the zero polynomial is the empty list.  The same
routines therefore serve modulus selection over F_p/F_q and the public
polynomial layer over F_{q^r}.
"""

from dataclasses import dataclass
from typing import Callable, Iterable


@dataclass(frozen=True)
class ScalarOps:
    """Field arithmetic on canonical-integer elements."""

    size: int
    char: int
    add: Callable[[int, int], int]
    sub: Callable[[int, int], int]
    neg: Callable[[int], int]
    mul: Callable[[int, int], int]
    inv: Callable[[int], int]
    pth_root: Callable[[int], int]   # exact inverse of x -> x^char


def trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def pdeg(c: list[int]) -> int:
    # -1 stands in for the degree of the zero polynomial
    return len(c) - 1


def padd(k: ScalarOps, a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = k.add(x, y)
    return trim(out)


def psub(k: ScalarOps, a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = k.sub(x, y)
    return trim(out)


def pscale(k: ScalarOps, a: list[int], c: int) -> list[int]:
    if c == 0:
        return []
    return trim([k.mul(x, c) for x in a])


def pmul(k: ScalarOps, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = k.add(out[i + j], k.mul(x, y))
    return trim(out)


def pdivmod(k: ScalarOps, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    lead_inv = k.inv(b[-1])
    while len(a) >= len(b) and a:
        c = k.mul(a[-1], lead_inv)
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            if y:
                a[d + i] = k.sub(a[d + i], k.mul(c, y))
        trim(a)
    return trim(q), a


def pdiv_exact(k: ScalarOps, a: list[int], b: list[int]) -> list[int]:
    q, r = pdivmod(k, a, b)
    if r:
        raise ArithmeticError("division was not exact")
    return q


def pmonic(k: ScalarOps, a: list[int]) -> list[int]:
    if not a:
        return []
    if a[-1] == 1:
        return list(a)
    return pscale(k, a, k.inv(a[-1]))


def pgcd(k: ScalarOps, a: list[int], b: list[int]) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, pdivmod(k, a, b)[1]
    return pmonic(k, a)


def ppowmod(k: ScalarOps, base: list[int], e: int, mod: list[int]) -> list[int]:
    result = [1]
    base = pdivmod(k, base, mod)[1]
    while e > 0:
        if e & 1:
            result = pdivmod(k, pmul(k, result, base), mod)[1]
        base = pdivmod(k, pmul(k, base, base), mod)[1]
        e >>= 1
    return result


def peval(k: ScalarOps, a: list[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = k.add(k.mul(acc, x), c)
    return acc


def pderiv(k: ScalarOps, a: list[int]) -> list[int]:
    out = []
    for e in range(1, len(a)):
        c = a[e]
        # e*c in characteristic char: add c to itself e mod char times
        em = e % k.char
        acc = 0
        for _ in range(em):
            acc = k.add(acc, c)
        out.append(acc)
    return trim(out)


def pshift(k: ScalarOps, a: list[int], w: int) -> list[int]:
    """Compose with X + w (Horner)."""
    if w == 0:
        return list(a)
    out: list[int] = []
    for c in reversed(a):
        # out = out*(X+w) + c
        nxt = [0] + out
        for i, y in enumerate(out):
            if y:
                nxt[i] = k.add(nxt[i], k.mul(y, w))
        if nxt:
            nxt[0] = k.add(nxt[0], c)
        else:
            nxt = [c]
        out = trim(nxt)
    return out


def p_poly_pth_root(k: ScalarOps, a: list[int]) -> list[int]:
    """Inverse of g -> g^p on polynomials with all exponents divisible by p."""
    p = k.char
    out = [0] * (pdeg(a) // p + 1)
    for e, c in enumerate(a):
        if c == 0:
            continue
        if e % p:
            raise ArithmeticError("polynomial is not a p-th power")
        out[e // p] = k.pth_root(c)
    return trim(out)


def p_squarefree_decomposition(k: ScalarOps, f: list[int]) -> list[tuple[tuple[int, ...], int]]:
    """Squarefree decomposition, correct in characteristic p.

    Returns monic pairwise-coprime squarefree factors with multiplicities;
    their product reconstructs monic(f).  When the derivative vanishes the
    input is a polynomial in X^p and the decomposition descends through
    coefficient p-th roots.
    """
    if not f:
        raise ZeroDivisionError("squarefree decomposition of the zero polynomial")
    f = pmonic(k, f)
    if pdeg(f) == 0:
        return []
    fp = pderiv(k, f)
    if not fp:
        root = p_poly_pth_root(k, f)
        return sorted(
            [(g, e * k.char) for g, e in p_squarefree_decomposition(k, root)],
            key=lambda t: (t[1], t[0]),
        )
    out: list[tuple[tuple[int, ...], int]] = []
    c = pgcd(k, f, fp)
    w = pdiv_exact(k, f, c)
    i = 1
    while pdeg(w) > 0:
        y = pgcd(k, w, c)
        z = pdiv_exact(k, w, y)
        if pdeg(z) > 0:
            out.append((tuple(z), i))
        w = y
        c = pdiv_exact(k, c, y)
        i += 1
    if pdeg(c) > 0:
        root = p_poly_pth_root(k, c)
        out.extend((g, e * k.char) for g, e in p_squarefree_decomposition(k, root))
    return sorted(out, key=lambda t: (t[1], t[0]))


def p_is_irreducible(k: ScalarOps, f: list[int]) -> bool:
    """Irreducibility over the coefficient field of size k.size.

    gcd test against X^{Q^i} - X for i up to deg(f)/2: any factor of degree
    i would divide that difference.
    """
    n = pdeg(f)
    if n < 1:
        raise ValueError("irreducibility is undefined for constants")
    if n == 1:
        return True
    q = k.size
    x = [0, 1]
    h = list(x)
    for _ in range(n // 2):
        h = ppowmod(k, h, q, f)
        if pdeg(pgcd(k, psub(k, h, x), f)) > 0:
            return False
    return True


def p_first_irreducible(k: ScalarOps, degree: int) -> list[int]:
    """Deterministic modulus choice: scan monic polynomials of the given
    degree in ascending canonical-integer order, return the first irreducible."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    q = k.size
    for code in range(q**degree):
        coeffs = []
        c = code
        for _ in range(degree):
            c, d = divmod(c, q)
            coeffs.append(d)
        coeffs.append(1)
        if p_is_irreducible(k, coeffs):
            return coeffs
    raise AssertionError("no irreducible polynomial found")  # impossible


def pfrom_pairs(pairs: Iterable[tuple[int, int]]) -> list[int]:
    """Build a coefficient list from (exponent, coefficient) pairs."""
    pairs = list(pairs)
    if not pairs:
        return []
    out = [0] * (max(e for e, _ in pairs) + 1)
    for e, c in pairs:
        out[e] = c
    return trim(out)
