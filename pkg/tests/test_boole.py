import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from boolesum import (DegreeOverflowError, InvalidStepError, NodeGrid, OutOfRangeError,
                      Polynomial, boole_classic, boole_sum, fuzz_verify, poly_linear_combine,
                      predicted_value, random_instance, vanishing_sum, verify_proposition)
from oracles import brute_boole_sum
from strategies import grids, polynomials, rationals

F = Fraction
P = Polynomial([2, 3, 1])


class TestBooleSum:
    def test_quadratic_on_odd_grid(self):
        assert boole_sum(P, NodeGrid(1, 2, 2)) == 16

    def test_low_degree_vanishes(self):
        assert boole_sum(Polynomial([1, 1]), NodeGrid(0, 1, 2)) == 0

    def test_single_term(self):
        assert boole_sum(Polynomial([F(-5, 3)]), NodeGrid(F(9, 2), 7, 0)) == F(-5, 3)

    def test_degree_overflow(self):
        with pytest.raises(DegreeOverflowError):
            boole_sum(Polynomial([1, 0, 0, 0]), NodeGrid(0, 1, 2))
        with pytest.raises(DegreeOverflowError):
            predicted_value(Polynomial([1, 0, 0, 0]), NodeGrid(0, 1, 2))

    def test_zero_step_at_grid(self):
        with pytest.raises(InvalidStepError):
            NodeGrid(1, 0, 2)


class TestPredicted:
    def test_examples(self):
        assert predicted_value(P, NodeGrid(1, 2, 2)) == 16
        assert predicted_value(Polynomial([1, 1]), NodeGrid(0, 1, 2)) == 0
        assert predicted_value(Polynomial.monomial(3), NodeGrid(0, 1, 3)) == 6


class TestVerify:
    def test_reports(self):
        r = verify_proposition(P, NodeGrid(1, 2, 2))
        assert r.holds and r.residual == 0 and r.computed == r.predicted == 16
        assert r.mode == "exact" and r.n == 2

        r = verify_proposition(Polynomial.monomial(3), NodeGrid(0, 1, 3))
        assert (r.computed, r.predicted, r.holds) == (6, 6, True)

        r = verify_proposition(Polynomial(), NodeGrid(F(1, 3), F(-2, 5), 4))
        assert (r.computed, r.predicted, r.holds) == (0, 0, True)

    @given(grids(max_n=8), st.data())
    def test_main_identity(self, grid, data):
        p = data.draw(polynomials(max_degree=grid.n))
        r = verify_proposition(p, grid)
        assert r.holds
        assert r.computed == brute_boole_sum(p.coeffs, grid.a, grid.b, grid.n)

    @given(grids(max_n=8), rationals(), st.data())
    def test_shift_invariance(self, grid, other_a, data):
        p = data.draw(polynomials(max_degree=grid.n))
        assert boole_sum(p, grid) == boole_sum(p, grid.with_offset(other_a))

    @given(grids(max_n=8), rationals(nonzero=True), st.data())
    def test_step_scaling(self, grid, lam, data):
        p = data.draw(polynomials(max_degree=grid.n))
        scaled = grid.with_step(lam * grid.b)
        assert predicted_value(p, scaled) == lam ** grid.n * predicted_value(p, grid)
        assert boole_sum(p, scaled) == lam ** grid.n * boole_sum(p, grid)

    @given(grids(max_n=8), rationals(), rationals(), st.data())
    def test_linearity(self, grid, alpha, beta, data):
        p = data.draw(polynomials(max_degree=grid.n))
        q = data.draw(polynomials(max_degree=grid.n))
        lhs = boole_sum(poly_linear_combine(alpha, p, beta, q), grid)
        assert lhs == alpha * boole_sum(p, grid) + beta * boole_sum(q, grid)


class TestClassic:
    @pytest.mark.parametrize("n, expected", [(1, 1), (3, 6), (10, 3628800)])
    def test_examples(self, n, expected):
        assert boole_classic(n) == expected

    def test_direct_summation_n3(self):
        assert 3 - 3 * 2 ** 3 + 3 ** 3 == 6

    def test_matches_factorial(self):
        for n in range(1, 31):
            assert boole_classic(n) == math.factorial(n)

    def test_rejects_zero(self):
        with pytest.raises(OutOfRangeError):
            boole_classic(0)


class TestVanishing:
    def test_examples(self):
        assert vanishing_sum(3, 2) == 0
        assert vanishing_sum(1, 0) == 1
        assert vanishing_sum(1, 0, include_zero=True) == 0
        assert vanishing_sum(4, 4) == 24

    def test_inclusive_vanishes(self):
        for n in range(1, 26):
            for m in range(n):
                assert vanishing_sum(n, m, include_zero=True) == 0
            assert vanishing_sum(n, n, include_zero=True) == math.factorial(n)

    def test_conventions_differ_only_at_m0(self):
        for n in range(1, 15):
            for m in range(1, n + 1):
                assert vanishing_sum(n, m) == vanishing_sum(n, m, include_zero=True)
            assert vanishing_sum(n, 0) == -(-1) ** n

    @pytest.mark.parametrize("n, m", [(3, 4), (0, 0), (2, -1)])
    def test_range(self, n, m):
        with pytest.raises(OutOfRangeError):
            vanishing_sum(n, m)


class TestFuzz:
    def test_zero_failures(self):
        rep = fuzz_verify(8, 100, 42, 50)
        assert rep.failures == 0 and rep.trials == 100 and rep.seed == 42

    def test_degree_zero_edge(self):
        rep = fuzz_verify(0, 10, 1, 5)
        assert rep.failures == 0
        assert all(random_instance(1, i, 0, 5)[1].n == 0 for i in range(10))

    def test_deterministic(self):
        assert fuzz_verify(6, 50, 7, 20) == fuzz_verify(6, 50, 7, 20)
        assert [random_instance(7, i, 6, 20) for i in range(20)] == \
               [random_instance(7, i, 6, 20) for i in range(20)]

    def test_instances_depend_on_seed(self):
        assert [random_instance(1, i, 6, 20) for i in range(10)] != \
               [random_instance(2, i, 6, 20) for i in range(10)]

    def test_instance_bounds(self):
        for i in range(200):
            p, g = random_instance(3, i, 5, 9)
            assert g.n <= 5 and g.b != 0
            assert p.is_zero() or p.degree <= g.n
            for c in p.coeffs + (g.a, g.b):
                assert abs(c.numerator) <= 9 and c.denominator <= 9

    def test_parallel_matches_serial(self):
        assert fuzz_verify(5, 40, 99, 10, workers=2) == fuzz_verify(5, 40, 99, 10)

    @pytest.mark.parametrize("kwargs", [
        dict(max_degree=-1, trials=1, seed=0),
        dict(max_degree=2, trials=0, seed=0),
        dict(max_degree=2, trials=1, seed=-1),
        dict(max_degree=2, trials=1, seed=1 << 64),
        dict(max_degree=2, trials=1, seed=0, coeff_bound=0),
    ])
    def test_argument_checks(self, kwargs):
        with pytest.raises(OutOfRangeError):
            fuzz_verify(**kwargs)
