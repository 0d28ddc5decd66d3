import json

import pytest

from sparsecharsum import bounds, cli, verify
from sparsecharsum.cli import RunConfig, main
from sparsecharsum.errors import SpecParseError
from sparsecharsum.ff import make_field
from sparsecharsum.specparse import (canonical_field_spec, parse_domains,
                                     parse_field_spec, parse_poly, parse_ratfn,
                                     poly_to_str, ratfn_to_str)


class TestSpecParsing:
    def test_field_spec_roundtrip(self):
        field = parse_field_spec("p=2,m=1,r=4")
        assert canonical_field_spec(field) == "p=2,m=1,r=4,ext_mod=x^4+x+1"
        again = parse_field_spec(canonical_field_spec(field))
        assert again == field

    def test_field_spec_with_modulus(self):
        field = parse_field_spec("p=2,m=1,r=4,ext_mod=x^4+x^3+1")
        assert field.ext_modulus == (1, 0, 0, 1, 1)

    def test_field_spec_errors(self):
        with pytest.raises(SpecParseError):
            parse_field_spec("p=2,m=1,r=4,bogus=1")
        with pytest.raises(SpecParseError):
            parse_field_spec("p=x")
        with pytest.raises(SpecParseError):
            parse_field_spec("m=1,r=4")

    def test_poly_roundtrip(self, f16):
        for text in ("x^3+5*x+1", "x", "1", "0", "7*x^2"):
            f = parse_poly(text, f16)
            assert poly_to_str(f) == text

    def test_poly_errors(self, f16):
        with pytest.raises(SpecParseError):
            parse_poly("x^2+x^2", f16)     # repeated exponent
        with pytest.raises(SpecParseError):
            parse_poly("99*x", f16)        # coefficient out of range
        with pytest.raises(SpecParseError):
            parse_poly("x**2", f16)

    def test_ratfn_roundtrip(self, f16):
        f = parse_ratfn("(x^3+1)/(x^2+x)", f16)
        # common factor x+1 is reduced away; the canonical string is reduced
        assert ratfn_to_str(f) == "(x^2+x+1)/(x)"
        assert parse_ratfn(ratfn_to_str(f), f16) == f
        g = parse_ratfn("x^3+1", f16)
        assert ratfn_to_str(g) == "x^3+1"
        assert parse_ratfn(ratfn_to_str(g), f16) == g

    def test_domains(self):
        assert [d.label() for d in parse_domains("sparse:2")] == ["sparse:2"]
        assert [d.label() for d in parse_domains("sparse:0..3")] == [
            "sparse:0", "sparse:1", "sparse:2", "sparse:3"]
        assert [d.label() for d in parse_domains("subspace:4")] == ["subspace:4"]
        assert [d.label() for d in parse_domains("full")] == ["full"]
        with pytest.raises(SpecParseError):
            parse_domains("sparse:3..1")
        with pytest.raises(SpecParseError):
            parse_domains("smooth:1")


class TestRunConfig:
    def test_roundtrip(self):
        cfg = RunConfig(field_spec="p=2,m=1,r=4,ext_mod=x^4+x+1", f2="x^3",
                        f1=None, k=None, zeta=1,
                        domains=("sparse:0", "sparse:1"), threads=2)
        assert RunConfig.parse(cfg.canonical_string()) == cfg
        cfg2 = RunConfig(field_spec="p=3,m=1,r=2,ext_mod=x^2+1", f2="(1)/(x)",
                         f1="x^2+x", k=3, zeta=0, domains=("full",), threads=1)
        assert RunConfig.parse(cfg2.canonical_string()) == cfg2


class TestCommands:
    def test_field_command(self, capsys):
        assert main(["field", "--field", "p=2,m=1,r=4"]) == 0
        info = json.loads(capsys.readouterr().out)
        assert info["order"] == 16
        assert info["ext_mod"] == "x^4+x+1"

    def test_sum_sweep_rows(self, capsys):
        rc = main(["sum", "--field", "p=2,m=1,r=4", "--f2", "x", "--zeta", "1",
                   "--domain", "sparse:0..4", "--threads", "1"])
        assert rc == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines[0] == cli.SUM_CSV_HEADER
        assert len(lines) == 6
        for line, s in zip(lines[1:], range(5)):
            cols = line.split(",")
            assert cols[2] == str(s)
            import math
            assert float(cols[8]) <= math.comb(4, s) + 1e-9

    def test_sum_full_field_orthogonality_row(self, capsys):
        main(["sum", "--field", "p=2,m=1,r=4", "--f2", "x", "--zeta", "3",
              "--domain", "full", "--threads", "1"])
        line = capsys.readouterr().out.strip().split("\n")[1]
        assert float(line.split(",")[8]) < 1e-9

    def test_sum_s0_principal(self, capsys):
        main(["sum", "--field", "p=2,m=1,r=4", "--f2", "x",
              "--domain", "sparse:0", "--threads", "1"])
        line = capsys.readouterr().out.strip().split("\n")[1]
        assert float(line.split(",")[8]) == pytest.approx(1.0)

    def test_sum_byte_determinism_across_threads(self, capsys):
        argv = ["sum", "--field", "p=2,m=1,r=8", "--f2", "x^3+x", "--zeta", "5",
                "--domain", "sparse:0..8"]
        main(argv + ["--threads", "1"])
        out1 = capsys.readouterr().out
        main(argv + ["--threads", "4"])
        out2 = capsys.readouterr().out
        # thread count is not echoed in rows, so the bytes must match exactly
        assert out1 == out2

    def test_sum_k_requires_f1(self, capsys):
        assert main(["sum", "--field", "p=2,m=1,r=4", "--f2", "x", "--k", "1"]) == 2

    def test_classify_monomial_json(self, capsys):
        assert main(["classify", "--field", "p=2,m=1,r=4", "--f", "x^3"]) == 0
        payload = json.loads(capsys.readouterr().out)
        rules = {v["rule"]: v["status"] for v in payload["verdicts"]}
        assert rules["monomial"] == "not_in"
        assert rules["oracle"] == "not_in"

    def test_classify_reciprocal_json(self, capsys):
        assert main(["classify", "--field", "p=2,m=1,r=4", "--f", "(1)/(x^3)"]) == 0
        payload = json.loads(capsys.readouterr().out)
        rules = {v["rule"]: v["status"] for v in payload["verdicts"]}
        assert rules["reciprocal"] == "in"

    def test_classify_explicit_mode(self, capsys):
        assert main(["classify", "--field", "p=2,m=1,r=4", "--f", "(1)/(x)",
                     "--mode", "exhaustive"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"rule": "denominator", "status": "in"}

    def test_classify_oracle_mode_rejects_rational(self, capsys):
        assert main(["classify", "--field", "p=2,m=1,r=4", "--f", "(1)/(x)",
                     "--mode", "oracle"]) == 2

    def test_eta_command(self, capsys):
        assert main(["eta", "--rho", "0.2"]) == 0
        out = capsys.readouterr().out.strip().split("\n")
        assert out[0] == "rho,eta,kappa_opt,lambda_opt"
        assert float(out[1].split(",")[1]) < 0.7208

    def test_figure1_csv(self, tmp_path, capsys):
        out = tmp_path / "figure1.csv"
        assert main(["figure1", "--grid", "0.05:0.5:10", "--out", str(out)]) == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == cli.FIGURE1_CSV_HEADER
        assert len(lines) == 11
        rhos = [float(ln.split(",")[0]) for ln in lines[1:]]
        assert rhos == sorted(rhos)
        row02 = [ln for ln in lines[1:] if ln.startswith("0.200000")]
        assert row02, "grid must contain rho = 0.2"
        cols = row02[0].split(",")
        assert float(cols[1]) > 0.7219 and float(cols[2]) < 0.7208

    def test_figure1_rho_half_row(self, tmp_path):
        out = tmp_path / "f.csv"
        main(["figure1", "--grid", "0.5:0.5:1", "--out", str(out)])
        cols = out.read_text().strip().split("\n")[1].split(",")
        assert float(cols[1]) == pytest.approx(1.0)
        assert float(cols[2]) <= 0.875 + 1e-9

    def test_parse_error_exit_code(self, capsys):
        assert main(["sum", "--field", "p=2,m=1,r=4", "--f2", "x**3"]) == 2

    def test_guard_violation_exit_code(self, capsys):
        # a multiplicative character on a field beyond the log-table budget
        rc = main(["sum", "--field", "p=2,m=1,r=31", "--f2", "x",
                   "--f1", "x", "--k", "1"])
        assert rc == 3

    def test_bad_grid(self, capsys):
        assert main(["eta", "--grid", "0.6:0.7:3"]) == 2


class TestVerify:
    def test_small_suite_passes(self, capsys):
        assert main(["verify", "--suite", "small"]) == 0
        out = capsys.readouterr().out
        assert out.count("ok  ") == len(verify.CHECKS)

    def test_negative_control_corrupted_entropy(self, monkeypatch, capsys):
        real = bounds.entropy_H

        def corrupted(g):
            return 0.9 if g == 0.5 else real(g)

        monkeypatch.setattr(bounds, "entropy_H", corrupted)
        assert verify.run_suite("small", write=lambda *_: None) != 0
