import math

import numpy as np
import pytest

from hankelmb.coefficient_catalog import a6_series_psi
from hankelmb.complex_kernel import gamma_c
from hankelmb.errors import ContourError, DomainError
from hankelmb.quadrature_oracle import hankel0_direct, mellin_forward
from hankelmb.special_functions import bessel_j0, bessel_k0


class TestHankelDirect:
    def test_gaussian_case(self):
        res = hankel0_direct(lambda x: math.exp(-x * x), 2.0, tol=1e-10, x_cap=7.0,
                             tail_bound=1e-19)
        exact = math.exp(-1.0) / 2.0
        assert res.value == pytest.approx(exact, rel=1e-9)
        assert abs(res.value - exact) <= res.error_estimate

    def test_lorentzian_gives_macdonald(self):
        res = hankel0_direct(lambda x: 1.0 / (x * x + 1.0), 1.0, tol=1e-8)
        assert res.value == pytest.approx(bessel_k0(1.0), rel=1e-6)
        assert abs(res.value - bessel_k0(1.0)) <= res.error_estimate
        assert res.segments > 100  # algebraic decay: the cell cap does the work

    def test_a6_integrand_matches_series(self):
        a, c, q = 1.0, 1.0, 2.0
        res = hankel0_direct(lambda x: math.exp(-(a * x) ** 2) / (x * x + c * c),
                             q, tol=1e-9, x_cap=6.5, tail_bound=1e-18)
        assert res.value == pytest.approx(a6_series_psi(q, a, c).value, rel=1e-6)

    def test_zero_function(self):
        res = hankel0_direct(lambda x: 0.0, 3.0)
        assert res.value == 0.0
        assert res.error_estimate == 0.0

    def test_halving_tol_stays_within_previous_estimate(self):
        f = lambda x: 1.0 / (x * x + 1.0)
        coarse = hankel0_direct(f, 1.0, tol=1e-6)
        fine = hankel0_direct(f, 1.0, tol=5e-7)
        assert abs(fine.value - coarse.value) <= coarse.error_estimate

    def test_partition_count_stability_for_even_decaying_integrand(self):
        # Gaussian decay: the cell loop converges on its own, so raising the
        # partition cap cannot move the result
        f = lambda x: math.exp(-x * x)
        base = hankel0_direct(f, 2.0, tol=1e-9, max_cells=200)
        more = hankel0_direct(f, 2.0, tol=1e-9, max_cells=300)
        assert abs(base.value - more.value) <= base.error_estimate + 1e-16

    def test_q_must_be_positive(self):
        with pytest.raises(DomainError):
            hankel0_direct(lambda x: math.exp(-x), 0.0)

    def test_phase_locked_integrand_rejected(self):
        # x J0(qx)^2/(1+x) produces one-signed, slowly decaying cells
        with pytest.raises(ContourError, match="alternating"):
            hankel0_direct(lambda x: bessel_j0(2.0 * x) / (1.0 + x), 2.0, max_cells=60)


class TestMellinForward:
    def test_gamma_function_instance(self):
        res = mellin_forward(lambda x: math.exp(-x), 0.3, upper=200.0)
        assert res.value == pytest.approx(math.gamma(0.3), rel=1e-10)

    def test_master_theorem_phi_one(self):
        # sum (-x)^m = 1/(1+x): Mellin transform is pi/sin(pi s)
        res = mellin_forward(lambda x: 1.0 / (1.0 + x), 0.5, upper=1e40)
        assert res.value == pytest.approx(math.pi, rel=1e-9)

    def test_reflection_consistency_with_gamma(self):
        # for g = e^{-x} (A.1's generating function in z), the master-theorem
        # right side pi/(sin(pi s) Gamma(1-s)) is again Gamma(s)
        s = 0.3
        lhs = mellin_forward(lambda x: math.exp(-x), s, upper=200.0).value
        rhs = math.pi / (math.sin(math.pi * s) * gamma_c(1.0 - s).real)
        assert lhs == pytest.approx(rhs, rel=1e-10)

    def test_tail_estimate_enters_error(self):
        res = mellin_forward(lambda x: 1.0 / (1.0 + x), 0.5, upper=1e8)
        # truncation at 1e8 leaves a ~2e-4 tail; the estimate must carry it
        assert abs(res.value - math.pi) <= res.error_estimate
        assert res.error_estimate > 1e-5

    def test_too_slow_tail_rejected(self):
        with pytest.raises(ContourError, match="decays"):
            mellin_forward(lambda x: 1.0 / (1.0 + math.sqrt(x)), 0.8, upper=1e30)

    def test_domain(self):
        with pytest.raises(DomainError):
            mellin_forward(lambda x: math.exp(-x), 0.0)
