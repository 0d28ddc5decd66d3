import random

import pytest

from sparsecharsum.ff import make_field
from sparsecharsum.polyrat import (POLE, Poly, RatFn, distinct_roots_poles_count,
                                   has_simple_root, is_irreducible,
                                   is_pth_power_free, poly_gcd,
                                   squarefree_decomposition)


def rand_poly(field, rng, max_deg, nonzero=False):
    deg = rng.randint(0, max_deg)
    coeffs = [rng.randrange(field.order) for _ in range(deg + 1)]
    f = Poly.make(field, coeffs)
    if nonzero and f.is_zero():
        return Poly.const(field, 1)
    return f


class TestGcd:
    def test_gcd_with_zero(self, f16):
        a = Poly.make(f16, [3, 0, 5])
        assert poly_gcd(a, Poly.zero(f16)) == a.monic()

    def test_char2_square(self, f16):
        # X^2 + 1 = (X+1)^2 in characteristic 2
        a = Poly.make(f16, [1, 0, 1])
        b = Poly.make(f16, [1, 1])
        assert poly_gcd(a, b) == Poly.make(f16, [1, 1])

    def test_gcd_multiplicativity(self, f9):
        rng = random.Random(11)
        for _ in range(40):
            a = rand_poly(f9, rng, 4, nonzero=True)
            b = rand_poly(f9, rng, 4, nonzero=True)
            w = rand_poly(f9, rng, 3, nonzero=True)
            left = poly_gcd(a * w, b * w)
            right = (w.monic() * poly_gcd(a, b)).monic()
            assert left == right

    def test_both_zero_rejected(self, f16):
        with pytest.raises(ZeroDivisionError):
            poly_gcd(Poly.zero(f16), Poly.zero(f16))


class TestShiftEval:
    def test_shift_by_zero(self, f16):
        f = Poly.make(f16, [2, 3, 0, 7])
        assert f.shift(0) == f

    def test_cube_shift_char2(self, f16):
        # (X+1)^3 = X^3 + X^2 + X + 1 over F_2
        f = Poly.monomial(f16, 3)
        assert f.shift(1) == Poly.make(f16, [1, 1, 1, 1])

    def test_shift_group_action(self, f16):
        rng = random.Random(12)
        for _ in range(40):
            f = rand_poly(f16, rng, 5)
            w = rng.randrange(16)
            assert f.shift(w).shift(f16.neg(w)) == f

    def test_ratfn_shift_preserves_degree(self, f9):
        rng = random.Random(13)
        for _ in range(30):
            num = rand_poly(f9, rng, 4, nonzero=True)
            den = rand_poly(f9, rng, 3, nonzero=True)
            f = RatFn.make(num, den)
            w = rng.randrange(9)
            assert f.shift(w).degree() == f.degree()

    def test_pole_detection(self, f16):
        inv_x = RatFn.make(Poly.const(f16, 1), Poly.x(f16))
        assert inv_x.eval(0) is POLE
        assert inv_x.eval(1) == 1

    def test_eval_vanishing_on_subfield(self, f16):
        f = Poly.make(f16, [0, 1, 1])  # X^2 + X
        assert f.eval(0) == 0 and f.eval(1) == 0

    def test_pole_count_exhaustive(self, f16):
        f = RatFn.make(Poly.const(f16, 1), Poly.make(f16, [0, 1, 1]))
        poles = sum(1 for x in f16.elements() if f.eval(x) is POLE)
        assert poles == 2


class TestDerivative:
    def test_char2_square_vanishes(self, f16):
        assert Poly.make(f16, [0, 0, 1]).derivative().is_zero()

    def test_termwise(self, f16):
        f = Poly.make(f16, [0, 1, 0, 1])  # X^3 + X
        assert f.derivative() == Poly.make(f16, [1, 0, 1])

    def test_constant(self, f16):
        assert Poly.const(f16, 9).derivative().is_zero()

    def test_sum_and_product_rules(self, f9):
        rng = random.Random(14)
        for _ in range(50):
            f = rand_poly(f9, rng, 5)
            g = rand_poly(f9, rng, 5)
            assert (f + g).derivative() == f.derivative() + g.derivative()
            assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


class TestSquarefree:
    def test_squarefree_input(self, f16):
        f = Poly.make(f16, [0, 1, 1]).scale(5)   # 5 * X(X+1)
        assert squarefree_decomposition(f) == [(f.monic(), 1)]

    def test_hand_factorization(self, f16):
        # (X+1)^2 * X
        f = Poly.make(f16, [1, 1]) * Poly.make(f16, [1, 1]) * Poly.x(f16)
        assert squarefree_decomposition(f) == [
            (Poly.x(f16), 1),
            (Poly.make(f16, [1, 1]), 2),
        ]

    def test_pure_pth_power(self):
        for p in (2, 3, 5):
            field = make_field(p, 1, 1)
            f = Poly.monomial(field, p)
            assert squarefree_decomposition(f) == [(Poly.x(field), p)]

    @pytest.mark.parametrize("fieldname", ["f16", "f9"])
    def test_reconstruction_random(self, fieldname, request):
        field = request.getfixturevalue(fieldname)
        rng = random.Random(15)
        for _ in range(200):
            f = rand_poly(field, rng, 8, nonzero=True)
            parts = squarefree_decomposition(f)
            prod = Poly.const(field, 1)
            for g, e in parts:
                assert is_pth_power_free(g) and all(m == 1 for _, m in squarefree_decomposition(g))
                for _ in range(e):
                    prod = prod * g
            assert prod == f.monic()
            for i in range(len(parts)):
                for j in range(i + 1, len(parts)):
                    assert poly_gcd(parts[i][0], parts[j][0]).degree() == 0

    def test_derivative_zero_branch(self, f9):
        # (X^3 - c)^3-style inputs exercise the p-th-root descent
        base = Poly.make(f9, [5, 1])
        f = base
        for _ in range(8):
            f = f * base   # base^9
        assert squarefree_decomposition(f) == [(base, 9)]


class TestPthPowerFree:
    def test_squarefree_is_free(self, f16):
        assert is_pth_power_free(Poly.make(f16, [0, 1, 1]))

    def test_square_is_not(self, f16):
        assert not is_pth_power_free(Poly.make(f16, [0, 0, 1]))

    def test_cube_times_irreducible(self, f16):
        x1 = Poly.make(f16, [1, 1])
        f = x1 * x1 * x1 * Poly.make(f16, [1, 1, 1])
        assert not is_pth_power_free(f)


class TestStructure:
    def test_distinct_roots_monomial(self, f16):
        f = RatFn.from_poly(Poly.monomial(f16, 5))
        assert distinct_roots_poles_count(f) == 1

    def test_distinct_roots_reciprocal(self, f16):
        f = RatFn.make(Poly.const(f16, 1), Poly.make(f16, [0, 1, 1]))
        assert distinct_roots_poles_count(f) == 2

    def test_distinct_roots_with_multiplicity(self, f16):
        x1 = Poly.make(f16, [1, 1])
        num = x1 * x1 * x1 * x1
        f = RatFn.make(num, Poly.x(f16))
        assert distinct_roots_poles_count(f) == 2

    def test_bound_by_total_degree(self, f9):
        rng = random.Random(16)
        for _ in range(40):
            num = rand_poly(f9, rng, 4, nonzero=True)
            den = rand_poly(f9, rng, 4, nonzero=True)
            f = RatFn.make(num, den)
            assert distinct_roots_poles_count(f) <= f.num.degree() + f.den.degree() + 1

    def test_irreducibility(self):
        f2 = make_field(2, 1, 1)
        assert is_irreducible(Poly.make(f2, [1, 1, 1]))
        assert not is_irreducible(Poly.make(f2, [1, 0, 1]))

    def test_squares_in_char2_always_reduce(self, f16):
        # X^2 + c has a double root for every c: Frobenius is onto
        for c in f16.elements():
            assert not is_irreducible(Poly.make(f16, [c, 0, 1]))

    def test_constant_rejected(self, f16):
        with pytest.raises(ValueError):
            is_irreducible(Poly.const(f16, 1))

    def test_simple_root(self, f16):
        x1 = Poly.make(f16, [1, 1])
        assert has_simple_root(Poly.x(f16) * x1 * x1)
        assert not has_simple_root(Poly.make(f16, [0, 0, 1]))
        assert has_simple_root(Poly.make(f16, [1, 3, 0, 1]))


class TestReduction:
    def test_reduction_invariant(self, f9):
        rng = random.Random(17)
        for _ in range(60):
            num = rand_poly(f9, rng, 5)
            den = rand_poly(f9, rng, 4, nonzero=True)
            f = RatFn.make(num, den)
            assert f.den.lead() == 1
            if not f.num.is_zero():
                assert poly_gcd(f.num, f.den).degree() == 0
            again = RatFn.make(f.num, f.den)
            assert again == f

    def test_zero_denominator(self, f16):
        with pytest.raises(ZeroDivisionError):
            RatFn.make(Poly.x(f16), Poly.zero(f16))
