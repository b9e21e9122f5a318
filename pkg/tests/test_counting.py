import cmath
import math
from fractions import Fraction

import pytest

from breakpark import counting
from breakpark.errors import BudgetExceededError, PreconditionError
from breakpark.series import ExactSeries, one_minus_power


def ramanujan_numeric(b, a):
    """Exponential-sum definition, test-only numeric oracle."""
    total = sum(
        cmath.exp(2j * cmath.pi * k * a / b)
        for k in range(1, b + 1)
        if math.gcd(k, b) == 1
    )
    assert abs(total.imag) < 1e-6
    return total.real


class TestMoebiusPhi:
    @pytest.mark.parametrize(
        "k,mu,phi", [(1, 1, 1), (2, -1, 1), (4, 0, 2), (6, 1, 2), (30, -1, 8)]
    )
    def test_small_values(self, k, mu, phi):
        assert counting.moebius(k) == mu
        assert counting.euler_phi(k) == phi

    def test_phi_divisor_sum(self):
        for k in range(1, 50):
            assert sum(counting.euler_phi(d) for d in counting.divisors(k)) == k

    def test_moebius_divisor_sum(self):
        for k in range(2, 50):
            assert sum(counting.moebius(d) for d in counting.divisors(k)) == 0


class TestRamanujanSum:
    def test_c1_always_one(self):
        for a in range(10):
            assert counting.ramanujan_sum(1, a) == 1

    def test_c2_at_zero(self):
        assert counting.ramanujan_sum(2, 0) == 1

    def test_c4_at_two(self):
        assert counting.ramanujan_sum(4, 2) == -2

    def test_zero_argument_gives_phi(self):
        for b in range(1, 20):
            assert counting.ramanujan_sum(b, 0) == counting.euler_phi(b)

    def test_matches_exponential_sum(self):
        for b in range(1, 31):
            for a in range(31):
                assert (
                    abs(counting.ramanujan_sum(b, a) - ramanujan_numeric(b, a))
                    < 1e-6
                )


class TestVonSterneck:
    def test_derived_example(self):
        # multisets of size 3 from {0..5} with sum = 4 mod 6
        assert counting.von_sterneck(6, 3, 4) == 9
        assert counting.von_sterneck_bruteforce(6, 3, 4) == 9

    def test_singletons(self):
        for a in range(1, 8):
            for b in range(a):
                assert counting.von_sterneck(a, 1, b) == 1

    def test_pairs_mod_two(self):
        assert counting.von_sterneck(2, 2, 0) == 2

    def test_matches_bruteforce(self):
        for a in range(1, 9):
            for k in range(7):
                for b in range(a):
                    assert counting.von_sterneck(
                        a, k, b
                    ) == counting.von_sterneck_bruteforce(a, k, b)


class TestOrbitCounts:
    def test_23(self):
        assert counting.orbit_count_D(2, 3) == 9

    def test_12(self):
        assert counting.orbit_count_D(1, 2) == 2

    def test_24(self):
        assert counting.orbit_count_D(2, 4) == 40

    def test_three_routes_agree(self):
        for m in range(1, 5):
            for n in range(1, 13):
                assert (
                    counting.orbit_count_D(m, n)
                    == counting.orbit_count_D_von_sterneck(m, n)
                    == counting.orbit_count_D_split(m, n)
                )


class TestDTInvariant:
    def test_24_paper_value(self):
        assert counting.dt_invariant(2, 4) == 10

    def test_n1_always_one(self):
        for m in range(1, 8):
            assert counting.dt_invariant(m, 1) == 1

    def test_23(self):
        assert counting.dt_invariant(2, 3) == 3


class TestFussCatalan:
    def test_empty_tree(self):
        for m in range(1, 5):
            assert counting.fuss_catalan(m, 0) == 1

    def test_catalan(self):
        assert [counting.fuss_catalan(1, k) for k in range(6)] == [
            1, 1, 2, 5, 14, 42,
        ]

    def test_ternary(self):
        assert counting.fuss_catalan(2, 2) == 3


class TestSeries:
    def test_mul_and_reciprocal(self):
        f = ExactSeries([1, 2, 3, 4], 3)
        assert f * f.reciprocal() == ExactSeries([1], 3)

    def test_pow_negative(self):
        f = one_minus_power(1, 5)
        geom = f.pow_int(-1)
        assert [geom[k] for k in range(6)] == [1] * 6

    def test_log_of_geometric(self):
        f = one_minus_power(1, 5).pow_int(-1)
        logs = f.log()
        assert [logs[k] for k in range(1, 6)] == [
            Fraction(1, k) for k in range(1, 6)
        ]

    def test_catalan_tree_series(self):
        f = counting.tree_series(1, 5)
        assert [f[k] for k in range(6)] == [1, 1, 2, 5, 14, 42]


class TestEulerProduct:
    def test_dt1_is_one(self):
        for m in range(1, 4):
            assert counting.dt_via_euler_product(m, 1)[1] == 1

    def test_24_via_product(self):
        assert counting.dt_via_euler_product(2, 4)[4] == 10

    def test_two_routes_match_closed_form(self):
        for m in range(1, 4):
            product = counting.dt_via_euler_product(m, 10)
            logs = counting.dt_via_formal_log(m, 10)
            for n in range(1, 11):
                assert product[n] == logs[n] == counting.dt_invariant(m, n)

    def test_order_cap(self):
        with pytest.raises(BudgetExceededError):
            counting.dt_via_euler_product(1, 25)

    def test_rejects_zero(self):
        with pytest.raises(PreconditionError):
            counting.dt_via_euler_product(1, 0)
