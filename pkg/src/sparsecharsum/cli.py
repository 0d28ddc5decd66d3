"""Command-line entry point.

Subcommands: field, sum, classify, eta, figure1, verify.  Exit codes:
0 ok, 1 check failure, 2 usage or parse error, 3 guard violation.  Outputs
are byte-stable for a fixed config regardless of worker count.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import bounds, classify, specparse, sums, verify
from .chars import AddChar, MultChar
from .errors import GuardViolation, SparseCharSumError, SpecParseError
from .ff import find_primitive
from .polyrat import RatFn

SUM_CSV_HEADER = "q,r,s,domain,f1,f2,k,zeta,abs_sum,points,dropped,trivial_log2,thm1_log2"
FIGURE1_CSV_HEADER = "rho,H,eta,kappa_opt,lambda_opt,simplified"


@dataclass(frozen=True)
class RunConfig:
    """Canonical description of one sum run; round-trips through its string."""

    field_spec: str
    f2: str
    f1: str | None
    k: int | None
    zeta: int
    domains: tuple[str, ...]
    threads: int

    def canonical_string(self) -> str:
        parts = [
            f"field={self.field_spec}",
            f"f2={self.f2}",
            f"f1={self.f1 if self.f1 is not None else '-'}",
            f"k={self.k if self.k is not None else '-'}",
            f"zeta={self.zeta}",
            f"domain={'|'.join(self.domains)}",
            f"threads={self.threads}",
        ]
        return ";".join(parts)

    @staticmethod
    def parse(text: str) -> "RunConfig":
        kv = {}
        for part in text.split(";"):
            key, sep, value = part.partition("=")
            if not sep:
                raise SpecParseError("expected key=value", text, 0)
            kv[key] = value
        return RunConfig(
            field_spec=kv["field"],
            f2=kv["f2"],
            f1=None if kv["f1"] == "-" else kv["f1"],
            k=None if kv["k"] == "-" else int(kv["k"]),
            zeta=int(kv["zeta"]),
            domains=tuple(kv["domain"].split("|")),
            threads=int(kv["threads"]),
        )


def _write_out(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_field(args) -> int:
    field = specparse.parse_field_spec(args.field)
    info = {
        "spec": specparse.canonical_field_spec(field),
        "p": field.p, "m": field.m, "r": field.r,
        "q": field.q, "order": field.order,
        "base_mod": specparse.poly_coeffs_to_str(field.base_modulus),
        "ext_mod": specparse.poly_coeffs_to_str(field.ext_modulus),
    }
    _write_out(json.dumps(info, indent=2) + "\n", args.out)
    return 0


def cmd_sum(args) -> int:
    field = specparse.parse_field_spec(args.field)
    f2 = specparse.parse_ratfn(args.f2, field)
    f1 = specparse.parse_ratfn(args.f1, field) if args.f1 else None
    chi = None
    k = None
    if args.k != "-":
        k = int(args.k)
        chi = MultChar(find_primitive(field), k % max(field.order - 1, 1))
    if (chi is None) != (f1 is None):
        raise SpecParseError("--k and --f1 must be supplied together", args.k or "-", 0)
    psi = AddChar(field, args.zeta)
    domains = specparse.parse_domains(args.domain)
    threads = args.threads or sums.default_threads()

    config = RunConfig(
        field_spec=specparse.canonical_field_spec(field),
        f2=specparse.ratfn_to_str(f2),
        f1=specparse.ratfn_to_str(f1) if f1 is not None else None,
        k=k, zeta=args.zeta,
        domains=tuple(d.label() for d in domains),
        threads=threads,
    )
    assert RunConfig.parse(config.canonical_string()) == config

    lines = [SUM_CSV_HEADER]
    for domain in domains:
        rep = sums.mixed_sum(field, domain, psi, f2, chi=chi, f1=f1, threads=threads)
        s_col = str(domain.param) if domain.kind == "sparse" else ""
        thm1 = f"{rep.sparse_weil_log2:.6f}" if rep.sparse_weil_log2 is not None else ""
        lines.append(",".join([
            str(field.q), str(field.r), s_col, domain.label(),
            config.f1 if config.f1 is not None else "-", config.f2,
            str(k) if k is not None else "-", str(args.zeta),
            f"{rep.abs_value:.9f}", str(rep.point_count), str(rep.dropped),
            f"{rep.trivial_log2:.6f}", thm1,
        ]))
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


def _verdict_json(v: classify.Verdict) -> dict:
    out = {"rule": v.rule, "status": v.status.value}
    if v.witness is not None:
        out["witness"] = list(v.witness)
    return out


def cmd_classify(args) -> int:
    field = specparse.parse_field_spec(args.field)
    f = specparse.parse_ratfn(args.f, field)
    p = field.p
    mode = args.mode

    if mode in ("shortcut", "exhaustive"):
        verdict = classify.classify_rational_denominator(f, mode)
        _write_out(json.dumps(_verdict_json(verdict)) + "\n", args.out)
        return 0
    if mode == "oracle":
        if not f.is_poly():
            raise SpecParseError("the oracle handles polynomials only", args.f, 0)
        verdict = classify.oracle_classify_poly(f.num)
        _write_out(json.dumps(_verdict_json(verdict)) + "\n", args.out)
        return 0

    # auto: aggregate every applicable rule
    verdicts = []
    if f.is_poly():
        h = f.num
        nonzero = [(e, c) for e, c in enumerate(h.coeffs) if c]
        mono = [(e, c) for e, c in nonzero if e >= 1]
        if len(mono) == 1:
            d = classify.normalize_exponent(mono[0][0], p)
            if d > 1 or mono[0][0] == d:
                verdicts.append(classify.classify_monomial(d, p))
        if h.degree() >= 1:
            verdicts.append(classify.classify_degree_residue(h, p))
        if field.order <= field.guards.oracle_field_max:
            verdicts.append(classify.oracle_classify_poly(h))
    else:
        num_terms = [(e, c) for e, c in enumerate(f.num.coeffs) if c]
        den_terms = [(e, c) for e, c in enumerate(f.den.coeffs) if c]
        if len(num_terms) == 1 and num_terms[0][0] == 0 and len(den_terms) == 1:
            d = den_terms[0][0]
            if d >= 1:
                d = classify.normalize_exponent(d, p)
                verdicts.append(classify.classify_reciprocal(d, p))
        verdicts.append(classify.classify_rational_denominator(f, "shortcut"))
    payload = {
        "field": specparse.canonical_field_spec(field),
        "f": specparse.ratfn_to_str(f),
        "verdicts": [_verdict_json(v) for v in verdicts],
    }
    _write_out(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _parse_grid(text: str) -> list[float]:
    try:
        a_s, b_s, n_s = text.split(":")
        a, b, n = float(a_s), float(b_s), int(n_s)
    except ValueError:
        raise SpecParseError("expected a:b:n", text, 0) from None
    if n < 1 or not 0.0 < a <= b <= 0.5:
        raise SpecParseError("grid must satisfy 0 < a <= b <= 0.5, n >= 1", text, 0)
    if n == 1:
        return [a]
    return [a + (b - a) * i / (n - 1) for i in range(n)]


def cmd_eta(args) -> int:
    rhos = [args.rho] if args.rho is not None else _parse_grid(args.grid)
    lines = ["rho,eta,kappa_opt,lambda_opt"]
    for rho in rhos:
        res = bounds.eta(rho, args.tol)
        lines.append(f"{rho:.6f},{res.eta:.9f},{res.kappa_opt:.9f},{res.lambda_opt:.9f}")
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


def cmd_figure1(args) -> int:
    rhos = _parse_grid(args.grid)
    lines = [FIGURE1_CSV_HEADER]
    for rho in rhos:
        res = bounds.eta(rho, args.tol)
        lines.append(",".join([
            f"{rho:.6f}",
            f"{bounds.entropy_H(rho):.9f}",
            f"{res.eta:.9f}",
            f"{res.kappa_opt:.9f}",
            f"{res.lambda_opt:.9f}",
            f"{bounds.simplified_eta(rho):.9f}",
        ]))
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    return verify.run_suite(args.suite)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparsecharsum",
        description="exact character sums over sparse finite-field elements",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_field = sub.add_parser("field", help="resolve and print a field spec")
    p_field.add_argument("--field", required=True)
    p_field.add_argument("--out")
    p_field.set_defaults(fn=cmd_field)

    p_sum = sub.add_parser("sum", help="compute exact sums and bounds as CSV")
    p_sum.add_argument("--field", required=True)
    p_sum.add_argument("--f2", required=True, help="additive-character argument")
    p_sum.add_argument("--f1", help="multiplicative-character argument")
    p_sum.add_argument("--k", default="-", help="multiplicative character exponent, '-' for none")
    p_sum.add_argument("--zeta", type=int, default=0, help="additive character element (canonical integer)")
    p_sum.add_argument("--domain", default="full",
                       help="sparse:<s>, sparse:<a>..<b>, subspace:<k>, or full")
    p_sum.add_argument("--threads", type=int)
    p_sum.add_argument("--out")
    p_sum.set_defaults(fn=cmd_sum)

    p_cls = sub.add_parser("classify", help="membership verdicts for a function")
    p_cls.add_argument("--field", required=True)
    p_cls.add_argument("--f", required=True)
    p_cls.add_argument("--mode", choices=("auto", "shortcut", "exhaustive", "oracle"),
                       default="auto")
    p_cls.add_argument("--out")
    p_cls.set_defaults(fn=cmd_classify)

    p_eta = sub.add_parser("eta", help="optimized exponent values")
    g = p_eta.add_mutually_exclusive_group(required=True)
    g.add_argument("--rho", type=float)
    g.add_argument("--grid", help="a:b:n")
    p_eta.add_argument("--tol", type=float, default=1e-5)
    p_eta.add_argument("--out")
    p_eta.set_defaults(fn=cmd_eta)

    p_fig = sub.add_parser("figure1", help="entropy-vs-exponent CSV")
    p_fig.add_argument("--grid", default="0.01:0.50:50")
    p_fig.add_argument("--tol", type=float, default=1e-5)
    p_fig.add_argument("--out")
    p_fig.set_defaults(fn=cmd_figure1)

    p_ver = sub.add_parser("verify", help="run the self-check suite")
    p_ver.add_argument("--suite", choices=("small", "full"), default="small")
    p_ver.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardViolation as exc:
        print(f"guard violation: {exc}", file=sys.stderr)
        return 3
    except SparseCharSumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
