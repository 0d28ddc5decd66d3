"""Arithmetic in F_p, F_q = F_p[y]/(h) and F_{q^r} = F_q[x]/(g).

Elements live as canonical integers: an element with coordinates
c_0, ..., c_{r-1} over F_q (each coordinate itself a base-p digit vector)
encodes as sum_i c_i q^i, coordinate 0 least significant.  Because
q = p^m this is exactly the base-p expansion, which keeps encoding,
digit extraction and map keys bit-exact and cheap.

A FieldDesc is immutable after construction (internal lookup tables are
filled lazily but never change); all element operations are pure, so
descriptors can be shared freely across workers.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _fieldmath as fm
from .errors import FieldConstructionError, GuardViolation
from .guards import DEFAULT, Guards

_FQ_TABLE_MAX = 512  # build q x q multiplication tables up to this q


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_ops(p: int) -> fm.ScalarOps:
    def inv(a: int) -> int:
        a %= p
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        return pow(a, p - 2, p)

    return fm.ScalarOps(
        size=p,
        char=p,
        add=lambda a, b: (a + b) % p,
        sub=lambda a, b: (a - b) % p,
        neg=lambda a: (-a) % p,
        mul=lambda a, b: (a * b) % p,
        inv=inv,
        pth_root=lambda a: a,
    )


def _extension_ops(sub: fm.ScalarOps, modulus: list[int], use_tables: bool) -> fm.ScalarOps:
    """Arithmetic in sub[x]/(modulus) on canonical-integer elements."""
    w = sub.size
    n = len(modulus) - 1
    size = w**n

    def decode(x: int) -> list[int]:
        out = [0] * n
        for i in range(n):
            x, out[i] = divmod(x, w)
        return out

    def encode(digits: list[int]) -> int:
        x = 0
        for d in reversed(digits):
            x = x * w + d
        return x

    # reduction rows: X^{n+t} mod modulus, 0 <= t <= n-2
    red = []
    cur = [sub.neg(c) for c in modulus[:n]]  # X^n mod modulus
    red.append(list(cur))
    for _ in range(n - 2):
        cur = [0] + cur
        top = cur.pop()
        if top:
            for j in range(n):
                cur[j] = sub.add(cur[j], sub.mul(top, red[0][j]))
        red.append(list(cur))

    def add(a: int, b: int) -> int:
        da, db = decode(a), decode(b)
        return encode([sub.add(x, y) for x, y in zip(da, db)])

    def subtract(a: int, b: int) -> int:
        da, db = decode(a), decode(b)
        return encode([sub.sub(x, y) for x, y in zip(da, db)])

    def neg(a: int) -> int:
        return encode([sub.neg(x) for x in decode(a)])

    def mul(a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        da, db = decode(a), decode(b)
        conv = [0] * (2 * n - 1)
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j, y in enumerate(db):
                if y:
                    conv[i + j] = sub.add(conv[i + j], sub.mul(x, y))
        for t in range(n - 2, -1, -1):
            c = conv[n + t]
            if c:
                row = red[t]
                for j in range(n):
                    conv[j] = sub.add(conv[j], sub.mul(c, row[j]))
        return encode(conv[:n])

    def inv(a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        out = 1
        e = size - 2
        base = a
        while e:
            if e & 1:
                out = mul(out, base)
            base = mul(base, base)
            e >>= 1
        return out

    root_exp = size // sub.char  # p^{K-1} where size = p^K

    def pth_root(a: int) -> int:
        out = 1
        e = root_exp
        base = a
        while e:
            if e & 1:
                out = mul(out, base)
            base = mul(base, base)
            e >>= 1
        return out

    ops = fm.ScalarOps(size=size, char=sub.char, add=add, sub=subtract,
                       neg=neg, mul=mul, inv=inv, pth_root=pth_root)
    if not (use_tables and size <= _FQ_TABLE_MAX):
        return ops

    add_t = [0] * (size * size)
    mul_t = [0] * (size * size)
    for a in range(size):
        for b in range(a, size):
            s = add(a, b)
            m = mul(a, b)
            add_t[a * size + b] = add_t[b * size + a] = s
            mul_t[a * size + b] = mul_t[b * size + a] = m
    inv_t = [0] * size
    for a in range(1, size):
        inv_t[a] = inv(a)
    neg_t = [subtract(0, a) for a in range(size)]
    root_t = [pth_root(a) for a in range(size)]

    def inv_fast(a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        return inv_t[a]

    return fm.ScalarOps(
        size=size,
        char=sub.char,
        add=lambda a, b: add_t[a * size + b],
        sub=lambda a, b: add_t[a * size + neg_t[b]],
        neg=lambda a: neg_t[a],
        mul=lambda a, b: mul_t[a * size + b],
        inv=inv_fast,
        pth_root=lambda a: root_t[a],
    )


def _gf2_ext_ops(modulus: list[int], r: int) -> fm.ScalarOps:
    """F_{2^r} on bit-packed integers: xor addition, shift-xor multiplication."""
    size = 1 << r
    mod_int = 0
    for i, c in enumerate(modulus):
        if c:
            mod_int |= 1 << i

    def mul(a: int, b: int) -> int:
        res = 0
        while b:
            if b & 1:
                res ^= a
            b >>= 1
            a <<= 1
            if a >> r & 1:
                a ^= mod_int
        return res

    def inv(a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        out = 1
        e = size - 2
        while e:
            if e & 1:
                out = mul(out, a)
            a = mul(a, a)
            e >>= 1
        return out

    def pth_root(a: int) -> int:
        # square r-1 times: a^(2^(r-1))
        for _ in range(r - 1):
            a = mul(a, a)
        return a

    return fm.ScalarOps(size=size, char=2,
                        add=lambda a, b: a ^ b,
                        sub=lambda a, b: a ^ b,
                        neg=lambda a: a,
                        mul=mul, inv=inv, pth_root=pth_root)


@dataclass(frozen=True)
class LogTable:
    """Discrete logs for a primitive element gamma: gamma^logs[x] == x."""

    field: "FieldDesc"
    gamma: int
    pows: tuple[int, ...]   # pows[j] = gamma^j, j in [0, q^r-1)
    logs: tuple[int, ...]   # logs[x] for x in [0, q^r); logs[0] = -1

    def log(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("discrete log of zero")
        return self.logs[x]

    def exp(self, j: int) -> int:
        return self.pows[j % len(self.pows)]


class FieldDesc:
    """Parameters and arithmetic of F_{q^r} over F_q = F_p[y]/(base_modulus).

    Use make_field() rather than calling this directly.
    """

    def __init__(self, p: int, m: int, r: int,
                 base_modulus: list[int], ext_modulus: list[int],
                 basis: list[list[int]] | None, guards: Guards):
        self.p = p
        self.m = m
        self.r = r
        self.q = p**m
        self.order = self.q**r
        self.guards = guards
        self.base_modulus = tuple(base_modulus)
        self.ext_modulus = tuple(ext_modulus)

        self._fp = _prime_ops(p)
        if m == 1:
            self._fq = self._fp
        else:
            self._fq = _extension_ops(self._fp, list(base_modulus), use_tables=True)
        if p == 2 and m == 1:
            self._ext = _gf2_ext_ops(list(ext_modulus), r)
        else:
            self._ext = _extension_ops(self._fq, list(ext_modulus), use_tables=False)

        self.basis = None
        self._basis_inv = None
        if basis is not None:
            self.basis = tuple(tuple(col) for col in basis)
            self._basis_inv = _invert_matrix(self._fq, basis)

        # trace of c * x^i for each coordinate slot and coordinate value;
        # makes trace linear-time per element
        self._trace_rows = []
        for i in range(r):
            row = [0] * self.q
            for c in range(1, self.q):
                row[c] = self._trace_slow(self.from_coords_unchecked([0] * i + [c]))
            self._trace_rows.append(row)
        self._log_table: LogTable | None = None
        self._pth_root_all: list[int] | None = None

    # -- element codecs ---------------------------------------------------

    def coords(self, x: int) -> tuple[int, ...]:
        """Coordinates in the internal polynomial basis (length r, F_q ints)."""
        out = [0] * self.r
        for i in range(self.r):
            x, out[i] = divmod(x, self.q)
        return tuple(out)

    def from_coords(self, coords) -> int:
        coords = list(coords)
        if len(coords) != self.r:
            raise ValueError(f"expected {self.r} coordinates, got {len(coords)}")
        if any(not 0 <= c < self.q for c in coords):
            raise ValueError("coordinate out of range")
        return self.from_coords_unchecked(coords)

    def from_coords_unchecked(self, coords) -> int:
        x = 0
        for c in reversed(coords):
            x = x * self.q + c
        return x

    def elements(self):
        return range(self.order)

    def nonzero_elements(self):
        return range(1, self.order)

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return self._ext.add(a, b)

    def sub(self, a: int, b: int) -> int:
        return self._ext.sub(a, b)

    def neg(self, a: int) -> int:
        return self._ext.neg(a)

    def mul(self, a: int, b: int) -> int:
        return self._ext.mul(a, b)

    def inv(self, a: int) -> int:
        return self._ext.inv(a)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out = 1
        mul = self._ext.mul
        while e:
            if e & 1:
                out = mul(out, a)
            a = mul(a, a)
            e >>= 1
        return out

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def pth_root(self, a: int) -> int:
        return self._ext.pth_root(a)

    def pth_root_table(self) -> list[int]:
        """Full p-th-root lookup; only for fields small enough to tabulate."""
        if self._pth_root_all is None:
            if self.order > self.guards.oracle_field_max:
                raise GuardViolation("field too large to tabulate p-th roots",
                                     "oracle_field_max", self.guards.oracle_field_max,
                                     self.order)
            self._pth_root_all = [self._ext.pth_root(x) for x in range(self.order)]
        return self._pth_root_all

    # -- trace and weight ---------------------------------------------------

    def _trace_slow(self, x: int) -> int:
        acc = x
        y = x
        for _ in range(self.r * self.m - 1):
            y = self.frobenius(y)
            acc = self._ext.add(acc, y)
        # the absolute trace lands in the prime subfield
        if acc >= self.p:
            raise AssertionError("trace left the prime subfield")
        return acc

    def trace(self, x: int) -> int:
        total = 0
        q = self.q
        for i in range(self.r):
            x, d = divmod(x, q)
            if d:
                total += self._trace_rows[i][d]
        return total % self.p

    def basis_coords(self, x: int) -> tuple[int, ...]:
        """Coordinates with respect to the configured ordered basis."""
        c = self.coords(x)
        if self._basis_inv is None:
            return c
        return _mat_vec(self._fq, self._basis_inv, c)

    def from_basis_coords(self, u) -> int:
        u = list(u)
        if len(u) != self.r:
            raise ValueError(f"expected {self.r} coordinates, got {len(u)}")
        if self.basis is None:
            return self.from_coords(u)
        cols = self.basis
        fq = self._fq
        acc = [0] * self.r
        for j, uj in enumerate(u):
            if uj:
                col = cols[j]
                for i in range(self.r):
                    if col[i]:
                        acc[i] = fq.add(acc[i], fq.mul(uj, col[i]))
        return self.from_coords_unchecked(acc)

    def weight(self, x: int) -> int:
        """Number of nonzero coordinates in the ordered basis."""
        if self._basis_inv is None:
            q = self.q
            w = 0
            while x:
                x, d = divmod(x, q)
                if d:
                    w += 1
            return w
        return sum(1 for c in self.basis_coords(x) if c)

    # -- misc ----------------------------------------------------------------

    def spec_string(self) -> str:
        from .specparse import canonical_field_spec
        return canonical_field_spec(self)

    def __repr__(self) -> str:
        return f"FieldDesc(p={self.p}, m={self.m}, r={self.r}, order={self.order})"

    # FieldDesc identity is by parameters; arbitrary instances of the same
    # field interoperate because elements are canonical integers.
    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldDesc)
                and (self.p, self.m, self.r) == (other.p, other.m, other.r)
                and self.base_modulus == other.base_modulus
                and self.ext_modulus == other.ext_modulus
                and self.basis == other.basis)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.r, self.base_modulus,
                     self.ext_modulus, self.basis))


def _mat_vec(fq: fm.ScalarOps, mat: list[list[int]], vec) -> tuple[int, ...]:
    n = len(mat)
    out = []
    for i in range(n):
        acc = 0
        row = mat[i]
        for j in range(n):
            if row[j] and vec[j]:
                acc = fq.add(acc, fq.mul(row[j], vec[j]))
        out.append(acc)
    return tuple(out)


def _invert_matrix(fq: fm.ScalarOps, cols: list[list[int]]) -> list[list[int]]:
    """Invert a matrix given by columns; raises on singular input."""
    n = len(cols)
    if any(len(c) != n for c in cols):
        raise FieldConstructionError("basis matrix must be square r x r")
    # work on rows of [A | I] where A[i][j] = cols[j][i]
    a = [[cols[j][i] for j in range(n)] for i in range(n)]
    aug = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            raise FieldConstructionError("basis matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        aug[col], aug[piv] = aug[piv], aug[col]
        s = fq.inv(a[col][col])
        a[col] = [fq.mul(s, v) for v in a[col]]
        aug[col] = [fq.mul(s, v) for v in aug[col]]
        for i in range(n):
            if i != col and a[i][col]:
                c = a[i][col]
                a[i] = [fq.sub(x, fq.mul(c, y)) for x, y in zip(a[i], a[col])]
                aug[i] = [fq.sub(x, fq.mul(c, y)) for x, y in zip(aug[i], aug[col])]
    return aug


def make_field(p: int, m: int = 1, r: int = 1,
               base_modulus=None, ext_modulus=None, basis=None,
               guards: Guards = DEFAULT) -> FieldDesc:
    """Construct and validate a field descriptor.

    Omitted moduli are chosen deterministically: the monic irreducible of
    the required degree whose coefficient vector has the smallest canonical
    integer encoding.
    """
    if not is_prime(p):
        raise FieldConstructionError(f"p={p} is not prime")
    if m < 1 or r < 1:
        raise FieldConstructionError("m and r must be positive")
    if p**(m * r) > guards.field_max:
        raise GuardViolation("field exceeds the configured size budget",
                             "field_max", guards.field_max, p**(m * r))

    fp = _prime_ops(p)
    if base_modulus is None:
        base_modulus = fm.p_first_irreducible(fp, m)
    else:
        base_modulus = list(base_modulus)
        _validate_modulus(fp, base_modulus, m, "base_modulus")

    if m == 1:
        fq = fp
    else:
        fq = _extension_ops(fp, base_modulus, use_tables=True)
    if ext_modulus is None:
        ext_modulus = fm.p_first_irreducible(fq, r)
    else:
        ext_modulus = list(ext_modulus)
        _validate_modulus(fq, ext_modulus, r, "ext_modulus")

    if basis is not None:
        basis = [list(col) for col in basis]
        if len(basis) != r or any(len(col) != r for col in basis):
            raise FieldConstructionError("basis must be an r x r matrix")
        if any(not 0 <= v < fq.size for col in basis for v in col):
            raise FieldConstructionError("basis entries must be F_q elements")

    return FieldDesc(p, m, r, base_modulus, ext_modulus, basis, guards)


def _validate_modulus(k: fm.ScalarOps, mod: list[int], degree: int, name: str) -> None:
    if fm.pdeg(mod) != degree:
        raise FieldConstructionError(f"{name} must have degree {degree}")
    if mod[-1] != 1:
        raise FieldConstructionError(f"{name} must be monic")
    if any(not 0 <= c < k.size for c in mod):
        raise FieldConstructionError(f"{name} coefficients out of range")
    if degree >= 1 and not fm.p_is_irreducible(k, mod):
        raise FieldConstructionError(f"{name} is reducible")


def _factorize(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def find_primitive(field: FieldDesc, guards: Guards | None = None) -> LogTable:
    """Smallest-encoding primitive element with full exp/log tables.

    The result is cached on the field; tables bind memory, hence the guard.
    """
    if field._log_table is not None:
        return field._log_table
    guards = guards or field.guards
    if field.order > guards.log_table_max:
        raise GuardViolation("field too large for a discrete-log table",
                             "log_table_max", guards.log_table_max, field.order)
    n = field.order - 1
    if n == 0:
        raise FieldConstructionError("trivial field has no multiplicative group")
    primes = _factorize(n) if n > 1 else []
    gamma = None
    for cand in field.nonzero_elements():
        if all(field.pow(cand, n // ell) != 1 for ell in primes):
            gamma = cand
            break
    assert gamma is not None  # a primitive element always exists
    pows = [1] * n
    for j in range(1, n):
        pows[j] = field.mul(pows[j - 1], gamma)
    logs = [-1] * field.order
    for j, x in enumerate(pows):
        logs[x] = j
    table = LogTable(field, gamma, tuple(pows), tuple(logs))
    field._log_table = table
    return table
