import math
import random

import pytest

from sparsecharsum.chars import AddChar, MultChar
from sparsecharsum.errors import NotCertified
from sparsecharsum.ff import find_primitive, make_field
from sparsecharsum.polyrat import Poly, RatFn
from sparsecharsum.sums import (Domain, compute_accumulator, degenerate_subspace_sum,
                                domain_size, enumerate_domain, enumerate_sparse,
                                enumerate_subspace, mixed_sum, weil_check)


class TestEnumeration:
    def test_weight_zero_is_origin(self, f16):
        assert list(enumerate_sparse(f16, 0)) == [0]

    def test_counts_small(self, f16, f27):
        assert sum(1 for _ in enumerate_sparse(f16, 2)) == 6
        assert sum(1 for _ in enumerate_sparse(f27, 2)) == 12

    def test_counts_formula_and_distinct(self):
        for p, m, r in ((2, 1, 6), (3, 1, 4), (2, 2, 3)):
            field = make_field(p, m, r)
            q = field.q
            seen_all = set()
            for s in range(r + 1):
                elems = list(enumerate_sparse(field, s))
                assert len(elems) == math.comb(r, s) * (q - 1) ** s
                assert len(set(elems)) == len(elems)
                assert all(field.weight(x) == s for x in elems)
                seen_all.update(elems)
            assert len(seen_all) == q**r

    def test_out_of_range(self, f16):
        with pytest.raises(ValueError):
            list(enumerate_sparse(f16, 5))
        with pytest.raises(ValueError):
            list(enumerate_subspace(f16, -1))

    def test_subspace_sizes(self, f9):
        assert list(enumerate_subspace(f9, 0)) == [0]
        assert sorted(enumerate_subspace(f9, f9.r)) == list(f9.elements())
        assert len(list(enumerate_subspace(f9, 1))) == 3

    def test_sparse_within_subspace_prefix(self, f16):
        # weight-s elements supported on the first k coordinates lie in L_k
        k = 2
        subspace = set(enumerate_subspace(f16, k))
        for s in range(k + 1):
            for x in enumerate_sparse(f16, s):
                coords = f16.basis_coords(x)
                if all(c == 0 for c in coords[k:]):
                    assert x in subspace

    def test_enumeration_order_is_stable(self, f16):
        first = list(enumerate_sparse(f16, 2))
        second = list(enumerate_sparse(f16, 2))
        assert first == second
        # colex supports: {0,1} before {0,2} before {1,2} before {0,3} ...
        assert first[:3] == [f16.from_coords([1, 1, 0, 0]),
                             f16.from_coords([1, 0, 1, 0]),
                             f16.from_coords([0, 1, 1, 0])]

    def test_domain_size(self, f16):
        assert domain_size(f16, Domain.sparse(2)) == 6
        assert domain_size(f16, Domain.subspace(3)) == 8
        assert domain_size(f16, Domain.full()) == 16


class TestMixedSum:
    def test_principal_characters_count_points(self, f16):
        psi = AddChar(f16, 0)
        rep = mixed_sum(f16, Domain.sparse(2), psi, RatFn.from_poly(Poly.x(f16)))
        assert rep.abs_value == pytest.approx(6.0, abs=1e-9)
        assert rep.point_count == 6 and rep.dropped == 0

    def test_weight_two_trace_sum_matches_hand_count(self, f16):
        # six weight-2 points, psi(nu) = (-1)^Tr(nu)
        psi = AddChar(f16, 1)
        rep = mixed_sum(f16, Domain.sparse(2), psi, RatFn.from_poly(Poly.x(f16)))
        direct = sum((-1) ** f16.trace(nu) for nu in enumerate_sparse(f16, 2))
        assert rep.abs_value == pytest.approx(abs(direct), abs=1e-9)

    def test_full_field_orthogonality(self, f16):
        psi = AddChar(f16, 1)
        rep = mixed_sum(f16, Domain.full(), psi, RatFn.from_poly(Poly.x(f16)))
        assert rep.abs_value < 1e-9

    def test_pole_dropping(self, f16):
        psi = AddChar(f16, 1)
        f2 = RatFn.make(Poly.const(f16, 1), Poly.make(f16, [0, 1, 1]))  # poles at 0, 1
        rep = mixed_sum(f16, Domain.full(), psi, f2)
        assert rep.dropped == 2
        assert rep.point_count == 16

    def test_chi_zero_dropping(self, f16):
        table = find_primitive(f16)
        chi = MultChar(table, 0)   # principal object: chi(0) = 0 applies literally
        psi = AddChar(f16, 0)
        f1 = RatFn.from_poly(Poly.x(f16))
        rep = mixed_sum(f16, Domain.full(), psi, RatFn.from_poly(Poly.zero(f16)),
                        chi=chi, f1=f1)
        assert rep.dropped == 1            # the zero of f1 at nu = 0
        assert rep.abs_value == pytest.approx(15.0, abs=1e-9)

    def test_f1_without_chi_rejected(self, f16):
        psi = AddChar(f16, 0)
        with pytest.raises(ValueError):
            mixed_sum(f16, Domain.full(), psi, RatFn.from_poly(Poly.x(f16)),
                      f1=RatFn.from_poly(Poly.x(f16)))

    def test_weight_symmetry_via_all_ones_shift(self):
        # q=2: complementing coordinates maps weight s to r-s, so the direct
        # (r-s)-sum equals the s-sum of the shifted function
        field = make_field(2, 1, 6)
        psi = AddChar(field, 3)
        f2 = RatFn.from_poly(Poly.make(field, [0, 5, 0, 1]))
        all_ones = field.from_basis_coords([1] * field.r)
        for s in (1, 2):
            direct = mixed_sum(field, Domain.sparse(field.r - s), psi, f2)
            shifted = mixed_sum(field, Domain.sparse(s), psi, f2.shift(all_ones))
            assert direct.abs_value == pytest.approx(shifted.abs_value, abs=1e-9)

    def test_merge_determinism_across_worker_counts(self, f256):
        psi = AddChar(f256, 7)
        f2 = RatFn.from_poly(Poly.make(f256, [1, 0, 0, 1]))
        reports = [
            compute_accumulator(f256, Domain.full(), psi, f2, threads=t)
            for t in (1, 2, 5)
        ]
        assert reports[0].counts == reports[1].counts == reports[2].counts
        assert len({r.magnitude() for r in reports}) == 1

    def test_thread_env_override(self, monkeypatch, f16):
        from sparsecharsum import sums as sums_mod
        monkeypatch.setenv("SPARSECHARSUM_THREADS", "3")
        assert sums_mod.default_threads() == 3
        monkeypatch.setenv("SPARSECHARSUM_THREADS", "bogus")
        assert sums_mod.default_threads() >= 1


class TestDegenerateSubspaceSum:
    def test_reference_cases(self, f16, f27):
        assert degenerate_subspace_sum(f16, 1, 1, Poly.x(f16)) == 8.0
        f9 = make_field(3, 1, 2)
        assert degenerate_subspace_sum(f9, 1, 2, Poly.make(f9, [0, 0, 1])) == 3.0

    def test_beta_zero_still_maximal(self, f16):
        assert degenerate_subspace_sum(f16, 5, 0, Poly.make(f16, [1, 3, 1])) == 8.0

    def test_alpha_zero_rejected(self, f16):
        with pytest.raises(ValueError):
            degenerate_subspace_sum(f16, 0, 1, Poly.x(f16))

    def test_nonprime_ground_field_rejected(self, f4):
        field = make_field(2, 2, 2)
        with pytest.raises(ValueError):
            degenerate_subspace_sum(field, 1, 1, Poly.x(field))

    def test_random_draws_exact(self):
        rng = random.Random(61)
        for q, r in ((2, 4), (2, 6), (3, 3)):
            field = make_field(q, 1, r)
            for _ in range(5):
                alpha = rng.randrange(1, field.order)
                beta = rng.randrange(field.order)
                h = Poly.make(field, [rng.randrange(field.order) for _ in range(3)]
                              + [rng.randrange(1, field.order)])
                assert degenerate_subspace_sum(field, alpha, beta, h) == float(q ** (r - 1))


class TestWeilCheck:
    def test_odd_degree_polynomial_certifies(self, f256):
        psi = AddChar(f256, 1)
        rep = weil_check(f256, psi, RatFn.from_poly(Poly.monomial(f256, 3)))
        assert rep.holds
        assert rep.bound == pytest.approx(2 * 3 * 16.0)

    def test_quadratic_character_with_simple_roots(self):
        f9 = make_field(3, 1, 2)
        table = find_primitive(f9)
        chi = MultChar(table, 4)   # order 2
        psi = AddChar(f9, 0)
        f1 = RatFn.from_poly(Poly.make(f9, [0, 1, 1]))
        rep = weil_check(f9, psi, RatFn.from_poly(Poly.zero(f9)), chi=chi, f1=f1)
        assert rep.holds
        assert rep.bound == pytest.approx(2 * 2 * 3.0)

    def test_refuses_both_principal(self, f16):
        psi = AddChar(f16, 0)
        with pytest.raises(NotCertified):
            weil_check(f16, psi, RatFn.from_poly(Poly.monomial(f16, 3)))

    def test_refuses_degenerate_f2(self, f16):
        # X^2 + X = g^2 - g is exactly the excluded shape
        psi = AddChar(f16, 1)
        with pytest.raises(NotCertified):
            weil_check(f16, psi, RatFn.from_poly(Poly.make(f16, [0, 1, 1])))

    def test_certifies_pole_order(self, f256):
        psi = AddChar(f256, 9)
        f2 = RatFn.make(Poly.const(f256, 1), Poly.x(f256))
        rep = weil_check(f256, psi, f2)
        assert rep.holds


class TestVandermonde:
    def test_partition_identity(self):
        rng = random.Random(62)
        for _ in range(100):
            r = rng.randint(1, 30)
            s = rng.randint(0, r)
            k = rng.randint(0, r)
            total = sum(math.comb(k, t) * math.comb(r - k, s - t)
                        for t in range(max(0, s - (r - k)), min(k, s) + 1))
            assert total == math.comb(r, s)
