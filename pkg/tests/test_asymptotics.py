import math

import numpy as np
import pytest

from hankelmb.asymptotics import (
    DerivativeTable, RegimeWarning, a6_large_q, hankel0_odd_series,
    willis_j0_series, willis_j1_series,
)
from hankelmb.coefficient_catalog import a6_series_psi
from hankelmb.errors import DomainError
from hankelmb.special_functions import bessel_k0

# f(x) = e^{-x}: f^(k)(0) = (-1)^k; the three expansions then re-expand
#   int J0(qx) e^{-x} dx   = (1+q^2)^{-1/2}
#   int J1(qx) e^{-x} dx   = (1 - (1+q^2)^{-1/2}) / q
#   int x J0(qx) e^{-x} dx = (1+q^2)^{-3/2}
EXP_TABLE = DerivativeTable([(-1.0) ** k for k in range(24)], origin="exp(-x)")


class TestWillisJ0:
    def test_against_laplace_oracle(self):
        for q in (5.0, 10.0):
            res = willis_j0_series(EXP_TABLE, q, 8)
            exact = 1.0 / math.sqrt(1.0 + q * q)
            assert abs(res.value - exact) <= res.first_omitted

    def test_single_term(self):
        res = willis_j0_series(EXP_TABLE, 5.0, 1)
        assert res.value == pytest.approx(1.0 / 5.0)

    def test_third_coefficient_is_three_eighths(self):
        q = 3.0
        res = willis_j0_series(EXP_TABLE, q, 4)
        term2 = res.partial_sums[2] - res.partial_sums[1]
        # (+3/8) f''''(0) / q^5 with f''''(0) = 1
        assert term2 * q ** 5 == pytest.approx(3.0 / 8.0, rel=1e-13)

    def test_insufficient_table(self):
        with pytest.raises(DomainError):
            willis_j0_series(DerivativeTable([1.0, -1.0]), 5.0, 4)


class TestWillisJ1:
    def test_against_laplace_oracle(self):
        for q in (5.0, 10.0):
            res = willis_j1_series(EXP_TABLE, q, 8)
            exact = (1.0 - 1.0 / math.sqrt(1.0 + q * q)) / q
            assert abs(res.value - exact) <= res.first_omitted

    def test_leading_two_terms(self):
        q = 7.0
        res = willis_j1_series(EXP_TABLE, q, 2)
        assert res.partial_sums[1] == pytest.approx(1.0 / q - 1.0 / q ** 2, rel=1e-14)

    def test_zero_function(self):
        res = willis_j1_series(DerivativeTable([0.0] * 12), 5.0, 5)
        assert res.value == 0.0


class TestHankelOddSeries:
    def test_against_laplace_oracle(self):
        for q in (5.0, 10.0):
            res = hankel0_odd_series(EXP_TABLE, q, 8)
            exact = (1.0 + q * q) ** -1.5
            assert abs(res.value - exact) <= res.first_omitted

    def test_leading_terms(self):
        q = 5.0
        res = hankel0_odd_series(EXP_TABLE, q, 2)
        # 1/q^3 - (3/2)/q^5 for f = e^{-x}
        assert res.partial_sums[0] == pytest.approx(q ** -3, rel=1e-14)
        assert res.partial_sums[1] == pytest.approx(q ** -3 - 1.5 * q ** -5, rel=1e-13)

    def test_even_function_annihilates(self):
        even = DerivativeTable([1.0 if k % 2 == 0 else 0.0 for k in range(16)])
        res = hankel0_odd_series(even, 3.0, 6)
        assert res.value == 0.0
        assert res.first_omitted == 0.0

    def test_m0_coefficient(self):
        res = hankel0_odd_series(EXP_TABLE, 2.0, 1)
        # -Gamma(2)/Gamma(1)^2 f'(0)/q^3 = -f'(0)/q^3 = +1/q^3
        assert res.partial_sums[0] == pytest.approx(1.0 / 8.0, rel=1e-14)


class TestOptimalTruncation:
    def test_error_bounded_by_next_term_for_all_series(self):
        for q in (5.0, 10.0):
            exacts = {
                "j0": 1.0 / math.sqrt(1.0 + q * q),
                "j1": (1.0 - 1.0 / math.sqrt(1.0 + q * q)) / q,
                "odd": (1.0 + q * q) ** -1.5,
            }
            fns = {"j0": willis_j0_series, "j1": willis_j1_series,
                   "odd": hankel0_odd_series}
            for name, fn in fns.items():
                for m in range(1, 7):
                    res = fn(EXP_TABLE, q, m + 1)
                    upto = min(m - 1, res.truncation_index)
                    err = abs(res.partial_sums[upto] - exacts[name])
                    nxt = abs(res.partial_sums[upto + 1] - res.partial_sums[upto]) \
                        if upto + 1 < len(res.partial_sums) else res.first_omitted
                    assert err <= nxt + 1e-16

    def test_never_truncates_past_first_term_minimum(self):
        # at q ~ 0.9 the J0 term magnitudes dip and then grow again
        res = willis_j0_series(EXP_TABLE, 0.9, 10)
        terms = np.abs(np.diff([0.0] + list(res.partial_sums)))
        first_min = next(m for m in range(len(terms) - 1) if terms[m + 1] > terms[m])
        assert res.truncation_index <= first_min
        assert res.first_omitted == pytest.approx(terms[res.truncation_index + 1])

    def test_value_is_the_truncated_partial_sum(self):
        res = willis_j0_series(EXP_TABLE, 5.0, 7)
        assert res.value == res.partial_sums[res.truncation_index]


class TestA6LargeQ:
    def test_matches_psi_series_at_large_qc(self):
        ratio = a6_series_psi(15.0, 1.0, 1.0).value / a6_large_q(15.0, 1.0, 1.0)
        assert ratio == pytest.approx(1.0, abs=1e-3)

    def test_small_a_reduces_to_macdonald(self):
        assert a6_large_q(6.0, 1e-9, 1.0) == pytest.approx(bessel_k0(6.0), rel=1e-12)

    def test_monotone_decay_in_q(self):
        vals = [a6_large_q(q, 1.0, 1.0) for q in (6.0, 8.0, 12.0, 20.0)]
        assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_regime_warning_below_qc_five(self):
        with pytest.warns(RegimeWarning):
            a6_large_q(2.0, 1.0, 1.0)
