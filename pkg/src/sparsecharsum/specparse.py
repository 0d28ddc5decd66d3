"""Text formats for fields, polynomials, rational functions and domains.

Field specs look like "p=2,m=1,r=4,ext_mod=x^4+x+1"; polynomials join terms
with '+', each term "c*x^e" with c a canonical integer (omitted when 1);
rational functions are "(<poly>)/(<poly>)".  Parsed specs round-trip to a
canonical string, which is what makes run configs reproducible keys.
"""

from __future__ import annotations

import re

from .errors import SpecParseError
from .ff import FieldDesc, make_field
from .guards import DEFAULT, Guards
from .polyrat import Poly, RatFn

_TERM = re.compile(r"^(?:(\d+)\*)?x(?:\^(\d+))?$|^(\d+)$")


def parse_poly_coeffs(text: str, size: int):
    """Coefficient list (constant first) from caret syntax; coefficients are
    canonical integers of the coefficient field of the given size."""
    s = text.strip().replace(" ", "")
    if not s:
        raise SpecParseError("empty polynomial", text, 0)
    coeffs: dict[int, int] = {}
    pos = 0
    for part in s.split("+"):
        if not part:
            raise SpecParseError("empty term", text, pos)
        m = _TERM.match(part)
        if not m:
            raise SpecParseError(f"bad term {part!r}", text, pos)
        if m.group(3) is not None:
            c, e = int(m.group(3)), 0
        else:
            c = int(m.group(1)) if m.group(1) else 1
            e = int(m.group(2)) if m.group(2) else 1
        if not 0 <= c < size:
            raise SpecParseError(f"coefficient {c} out of range [0, {size})", text, pos)
        if e in coeffs:
            raise SpecParseError(f"repeated exponent {e}", text, pos)
        coeffs[e] = c
        pos += len(part) + 1
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_coeffs_to_str(coeffs) -> str:
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        elif e == 1:
            terms.append("x" if c == 1 else f"{c}*x")
        else:
            terms.append(f"x^{e}" if c == 1 else f"{c}*x^{e}")
    return "+".join(terms) if terms else "0"


def parse_field_spec(text: str, guards: Guards = DEFAULT) -> FieldDesc:
    """"p=<int>,m=<int>,r=<int>[,ext_mod=<poly>][,base_mod=<poly>]"."""
    fields: dict[str, str] = {}
    pos = 0
    for part in text.strip().split(","):
        if "=" not in part:
            raise SpecParseError("expected key=value", text, pos)
        key, _, value = part.partition("=")
        key = key.strip()
        if key in fields:
            raise SpecParseError(f"duplicate key {key!r}", text, pos)
        fields[key] = value.strip()
        pos += len(part) + 1
    unknown = set(fields) - {"p", "m", "r", "ext_mod", "base_mod"}
    if unknown:
        raise SpecParseError(f"unknown keys {sorted(unknown)}", text, 0)
    try:
        p = int(fields["p"])
        m = int(fields.get("m", "1"))
        r = int(fields.get("r", "1"))
    except (KeyError, ValueError) as exc:
        raise SpecParseError(f"bad integer parameter ({exc})", text, 0) from None
    base = parse_poly_coeffs(fields["base_mod"], p) if "base_mod" in fields else None
    ext = parse_poly_coeffs(fields["ext_mod"], p**m) if "ext_mod" in fields else None
    return make_field(p, m, r, base_modulus=base, ext_modulus=ext, guards=guards)


def canonical_field_spec(field: FieldDesc) -> str:
    parts = [f"p={field.p}", f"m={field.m}", f"r={field.r}"]
    parts.append(f"ext_mod={poly_coeffs_to_str(field.ext_modulus)}")
    if field.m > 1:
        parts.append(f"base_mod={poly_coeffs_to_str(field.base_modulus)}")
    return ",".join(parts)


def parse_poly(text: str, field: FieldDesc) -> Poly:
    return Poly.make(field, parse_poly_coeffs(text, field.order))


def parse_ratfn(text: str, field: FieldDesc) -> RatFn:
    s = text.strip()
    m = re.match(r"^\((?P<num>[^()]*)\)\s*/\s*\((?P<den>[^()]*)\)$", s)
    if m:
        num = parse_poly(m.group("num"), field)
        den = parse_poly(m.group("den"), field)
        return RatFn.make(num, den)
    return RatFn.from_poly(parse_poly(s, field))


def poly_to_str(f: Poly) -> str:
    return poly_coeffs_to_str(f.coeffs)


def ratfn_to_str(f: RatFn) -> str:
    if f.den.degree() == 0 and not f.den.is_zero() and f.den.coeffs == (1,):
        return poly_to_str(f.num)
    return f"({poly_to_str(f.num)})/({poly_to_str(f.den)})"


def parse_domains(text: str):
    """--domain values: sparse:<s>, sparse:<a>..<b>, subspace:<k>, full."""
    from .sums import Domain

    s = text.strip()
    if s == "full":
        return [Domain.full()]
    kind, sep, arg = s.partition(":")
    if not sep or kind not in ("sparse", "subspace"):
        raise SpecParseError("expected sparse:<s>, subspace:<k> or full", text, 0)
    if ".." in arg and kind == "sparse":
        lo_s, _, hi_s = arg.partition("..")
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise SpecParseError("bad sweep bounds", text, len(kind) + 1) from None
        if lo > hi:
            raise SpecParseError("sweep lower bound exceeds upper", text, len(kind) + 1)
        return [Domain.sparse(s) for s in range(lo, hi + 1)]
    try:
        v = int(arg)
    except ValueError:
        raise SpecParseError("bad domain parameter", text, len(kind) + 1) from None
    return [Domain.sparse(v) if kind == "sparse" else Domain.subspace(v)]
