import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sparsecharsum import bounds


class TestEntropy:
    def test_endpoints(self):
        assert bounds.entropy_H(0.0) == 0.0
        assert bounds.entropy_H(1.0) == 0.0
        assert bounds.entropy_H(0.5) == 1.0

    def test_reference_value(self):
        assert bounds.entropy_H(0.2) > 0.7219

    def test_capped_plateau(self):
        assert bounds.entropy_Hstar(0.8) == 1.0
        assert bounds.entropy_Hstar(0.3) == bounds.entropy_H(0.3)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            bounds.entropy_H(-0.1)
        with pytest.raises(ValueError):
            bounds.entropy_H(1.1)
        with pytest.raises(ValueError):
            bounds.entropy_Hstar(-0.01)

    @settings(max_examples=80, deadline=None)
    @given(st.floats(0.001, 0.999))
    def test_symmetry(self, g):
        assert bounds.entropy_H(g) == pytest.approx(bounds.entropy_H(1 - g), abs=1e-12)

    @settings(max_examples=80, deadline=None)
    @given(st.floats(0.01, 0.99), st.floats(0.01, 0.99))
    def test_concavity(self, a, b):
        mid = bounds.entropy_H((a + b) / 2)
        assert mid >= (bounds.entropy_H(a) + bounds.entropy_H(b)) / 2 - 1e-12

    def test_derivative_matches_closed_form(self):
        # finite differences against -log2(g/(1-g))
        h = 1e-6
        for g in (0.1, 0.25, 0.4, 0.6, 0.9):
            fd = (bounds.entropy_H(g + h) - bounds.entropy_H(g - h)) / (2 * h)
            assert fd == pytest.approx(-math.log2(g / (1 - g)), abs=1e-6)


class TestExponentPieces:
    def test_diag_value(self):
        assert bounds.exponent_diag_pairs(0.5, 0.5, 0.1) == pytest.approx(0.75)

    def test_small_weight_value(self):
        assert bounds.exponent_small_weight(0.5, 0.5, 0.25) == pytest.approx(1.0)

    def test_cross_pairs_value(self):
        assert bounds.exponent_cross_pairs(0.5, 0.5, 0.25) == pytest.approx(1.0)

    def test_constraint_violations(self):
        with pytest.raises(ValueError):
            bounds.exponent_small_weight(0.5, 0.5, 0.3)   # lambda > kappa*rho
        with pytest.raises(ValueError):
            bounds.exponent_small_weight(0.6, 0.5, 0.1)   # rho > 1/2
        with pytest.raises(ValueError):
            bounds.exponent_cross_pairs(0.5, 1.0, 0.1)    # kappa = 1


class TestEta:
    def test_paper_constants(self):
        assert bounds.eta(0.2).eta < 0.7208

    def test_envelope_dominates_diag(self):
        res = bounds.eta(0.3)
        assert res.eta >= bounds.exponent_diag_pairs(0.3, res.kappa_opt, res.lambda_opt) - 1e-12

    def test_result_is_envelope_value(self):
        for rho in (0.1, 0.25, 0.45):
            res = bounds.eta(rho)
            val = max(
                bounds.exponent_small_weight(rho, res.kappa_opt, res.lambda_opt),
                bounds.exponent_cross_pairs(rho, res.kappa_opt, res.lambda_opt),
                bounds.exponent_diag_pairs(rho, res.kappa_opt, res.lambda_opt),
            )
            assert res.eta == pytest.approx(val, abs=res.tol)

    def test_perturbation_never_beats_optimum(self):
        for rho in (0.1, 0.2, 0.27, 0.4):
            res = bounds.eta(rho)
            for dk in (-res.tol, 0, res.tol):
                for dl in (-res.tol, 0, res.tol):
                    k = min(max(res.kappa_opt + dk, 1e-9), 1 - 1e-9)
                    lam = min(max(res.lambda_opt + dl, 1e-12), k * rho)
                    val = max(
                        bounds.exponent_small_weight(rho, k, lam),
                        bounds.exponent_cross_pairs(rho, k, lam),
                        bounds.exponent_diag_pairs(rho, k, lam),
                    )
                    assert val >= res.eta - res.tol

    def test_simplified_bound_holds(self):
        for i in range(5, 51):
            rho = i / 100
            assert bounds.eta(rho).eta <= bounds.simplified_eta(rho) + 1e-6

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            bounds.eta(0.0)
        with pytest.raises(ValueError):
            bounds.eta(0.6)


class TestSplitProfile:
    def test_peak_locations(self):
        assert bounds.split_entropy_unimodal(0.5, 0.5)
        assert bounds.split_entropy_unimodal(0.3, 0.6)

    def test_random_draws(self):
        rng = random.Random(31)
        for _ in range(30):
            assert bounds.split_entropy_unimodal(rng.uniform(0.02, 0.5), rng.uniform(0.02, 0.98))

    def test_peak_dominates(self):
        rho, kappa = 0.3, 0.6
        peak = kappa * rho
        e_peak = (kappa * bounds.entropy_Hstar(peak / kappa)
                  + (1 - kappa) * bounds.entropy_Hstar((rho - peak) / (1 - kappa)))
        for i in range(1, 100):
            lam = rho * i / 100
            e = (kappa * bounds.entropy_Hstar(lam / kappa)
                 + (1 - kappa) * bounds.entropy_Hstar((rho - lam) / (1 - kappa)))
            assert e <= e_peak + 1e-12


class TestBoundFormulas:
    def test_trivial_bound(self):
        assert bounds.trivial_bound_log2(2, 4, 2) == pytest.approx(math.log2(6))

    def test_sparse_weil_bound(self):
        # (1+3) * 2^3 * C(4,2) * 8^2 = 12288
        val = bounds.sparse_weil_bound_log2(8, 4, 2, 1, 3)
        assert val == pytest.approx(math.log2(12288))

    def test_mult_bound_below_mixed(self):
        for q, r, s in ((2, 8, 3), (4, 6, 2), (8, 4, 1)):
            assert (bounds.mult_sparse_bound_log2(q, r, s, 1)
                    < bounds.sparse_weil_bound_log2(q, r, s, 1, 0))

    def test_sqrt_count_bound(self):
        v = bounds.sqrt_count_bound_log2(2, 10, 3)
        assert v == pytest.approx(0.5 * math.log2(math.comb(10, 3)) + 0.375 * 10)

    def test_weil_values(self):
        assert bounds.weil_full_bound(2, 8, 2, 3) == pytest.approx(2 * 5 * 16)
        assert bounds.weil_subspace_bound(3, 2, 2, 0) == pytest.approx(2 * 4 * 3)

    def test_sparse_exponent(self):
        r, s = 100, 20
        assert bounds.sparse_exponent(r, s) == pytest.approx(bounds.eta(0.2).eta * 100)
        assert bounds.sparse_exponent(r, 80) == bounds.sparse_exponent(r, 20)
        with pytest.raises(ValueError):
            bounds.sparse_exponent(10, 0)

    def test_range_errors(self):
        with pytest.raises(ValueError):
            bounds.trivial_bound_log2(2, 4, 5)
        with pytest.raises(ValueError):
            bounds.mult_sparse_bound_log2(2, 4, 2, 0)


class TestThreshold:
    def test_q7(self):
        value, nontrivial = bounds.nontrivial_threshold(7)
        assert value == pytest.approx(math.log2(7) / (2 * math.log2(3)), abs=1e-12)
        assert value < 1 and nontrivial

    def test_q4(self):
        value, nontrivial = bounds.nontrivial_threshold(4)
        assert value == pytest.approx(1.7095, abs=5e-4)
        assert not nontrivial

    def test_q3_rejected(self):
        with pytest.raises(ValueError):
            bounds.nontrivial_threshold(3)


class TestEntropyInverse:
    def test_full_entropy(self):
        assert bounds.entropy_inverse(1.0) == pytest.approx(0.5, abs=1e-9)

    def test_three_quarters(self):
        assert bounds.entropy_inverse(0.75) == pytest.approx(0.2145, abs=5e-4)

    @settings(max_examples=50, deadline=None)
    @given(st.floats(0.01, 1.0))
    def test_inverse_property(self, c):
        assert bounds.entropy_H(bounds.entropy_inverse(c)) == pytest.approx(c, abs=1e-8)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            bounds.entropy_inverse(0.0)
        with pytest.raises(ValueError):
            bounds.entropy_inverse(1.5)


class TestBinomialTail:
    def test_small_cases(self):
        # n=10, gamma=1/2: 638 <= 1024
        assert sum(math.comb(10, k) for k in range(6)) == 638
        assert bounds.binomial_sum_entropy_bound(10, 0.5)

    def test_n20_quarter(self):
        assert sum(math.comb(20, k) for k in range(6)) == 21700
        assert bounds.binomial_sum_entropy_bound(20, 0.25)

    def test_sweep(self):
        for n in range(1, 61):
            for g in range(1, 11):
                assert bounds.binomial_sum_entropy_bound(n, g / 20)
