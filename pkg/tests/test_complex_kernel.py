import math

import mpmath as mp
import numpy as np
import pytest

from hankelmb.complex_kernel import digamma_r, gamma_c, log_gamma_c
from hankelmb.errors import DomainError, PoleProximityError
from hankelmb.special_functions import incomplete_gamma_upper0

mp.mp.dps = 30

EULER_GAMMA = 0.5772156649015328606


def test_gamma_at_one():
    assert gamma_c(1.0 + 0.0j) == pytest.approx(1.0, rel=1e-14)


def test_gamma_at_half():
    assert gamma_c(0.5 + 0.0j).real == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_gamma_modulus_identity_on_critical_line():
    # |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
    g = gamma_c(0.5 + 10.0j)
    assert abs(g) ** 2 == pytest.approx(math.pi / math.cosh(10 * math.pi), rel=1e-12)


def test_gamma_reflection_value():
    assert gamma_c(-0.5 + 0.0j).real == pytest.approx(-2.0 * math.sqrt(math.pi), rel=1e-13)


def test_gamma_against_mpmath_grid():
    # contract: <= 1e-13 relative for |Im| <= 200, Re in [-60, 60]
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(400):
        v = rng.uniform(-60, 60)
        w = rng.uniform(-200, 200)
        if abs(w) < 1e-2 and v < 0.5 and abs(v - round(v)) < 1e-2:
            continue
        ref = complex(mp.gamma(mp.mpc(v, w)))
        if not np.isfinite(abs(ref)) or not 1e-280 < abs(ref) < 1e280:
            continue
        got = gamma_c(complex(v, w))
        worst = max(worst, abs(got - ref) / abs(ref))
    assert worst <= 1e-13


def test_overflow_is_flagged():
    with pytest.raises(OverflowError):
        gamma_c(200.0 + 0.0j)
    assert abs(gamma_c(171.0 + 0.0j)) > 1e306  # just inside the double range


def test_pole_proximity_raises():
    with pytest.raises(PoleProximityError):
        gamma_c(0.0 + 0.0j)
    with pytest.raises(PoleProximityError):
        gamma_c(-3.0 + 1e-13j)
    with pytest.raises(PoleProximityError):
        log_gamma_c(-1.0 + 0.0j)


def test_log_gamma_basic_values():
    assert abs(log_gamma_c(1.0 + 0.0j)) < 1e-14
    assert log_gamma_c(10.0 + 0.0j).real == pytest.approx(math.log(362880.0), rel=1e-14)


def test_log_gamma_matches_exp_of_gamma():
    for s in (3.7 + 41.0j, 0.6 - 12.3j, 8.0 + 0.5j):
        assert np.exp(log_gamma_c(s)) == pytest.approx(gamma_c(s), rel=1e-12)


def test_log_gamma_branch_continuity_vs_wrapped_arg():
    # walk up Re s = 2 tracking the cumulative argument; the principal-value
    # angle wraps many times while Im log_gamma_c must match the unwrapped sum
    ws = np.arange(0.0, 30.0 + 1e-9, 0.05)
    args = np.angle(gamma_c(2.0 + 1j * ws))
    unwrapped = np.unwrap(args)
    lg_im = log_gamma_c(2.0 + 30.0j).imag
    assert lg_im == pytest.approx(unwrapped[-1], abs=1e-9)
    assert lg_im > np.pi  # the naive principal angle cannot represent it
    steps = np.abs(np.diff(log_gamma_c(2.0 + 1j * ws).imag))
    assert steps.max() < 0.5


def test_schwarz_reflection():
    rng = np.random.default_rng(3)
    s = rng.uniform(-8, 8, 200) + 1j * rng.uniform(0.3, 60, 200)
    vals = gamma_c(s)
    conj_vals = gamma_c(np.conj(s))
    assert np.allclose(conj_vals, np.conj(vals), rtol=1e-12, atol=0.0)


def test_recurrence_identity():
    # Gamma(s+1) = s Gamma(s) over the working strip
    rng = np.random.default_rng(11)
    v = rng.uniform(-10, 10, 500)
    w = rng.uniform(-100, 100, 500)
    s = v + 1j * w
    keep = np.abs(s - np.rint(s.real)) > 1e-2  # stay clear of poles
    s = s[keep]
    lhs = gamma_c(s + 1)
    rhs = s * gamma_c(s)
    assert np.max(np.abs(lhs - rhs) / np.abs(lhs)) < 1e-12


def test_reflection_identity_of_gamma_and_sine():
    # 1 / (sin(pi s) Gamma(-s)) = -Gamma(s+1) / pi
    rng = np.random.default_rng(5)
    pts = rng.uniform(-5, 5, 1000) + 1j * rng.uniform(-20, 20, 1000)
    pts = pts[np.abs(pts.imag) > 1e-3]
    lhs = 1.0 / (np.sin(np.pi * pts) * gamma_c(-pts))
    rhs = -gamma_c(pts + 1) / np.pi
    assert np.max(np.abs(lhs - rhs) / np.abs(rhs)) < 1e-11


@pytest.mark.parametrize("v", [-0.5, 0.3, 1.2])
@pytest.mark.parametrize("w", [50.0, 100.0])
def test_vertical_decay_law(v, w):
    # |Gamma(v+iw)| ~ sqrt(2 pi) |w|^{v-1/2} e^{-pi |w| / 2}; this rate is what
    # every contour-truncation heuristic leans on
    model = math.sqrt(2 * math.pi) * w ** (v - 0.5) * math.exp(-math.pi * w / 2)
    assert abs(gamma_c(complex(v, w))) / model == pytest.approx(1.0, rel=0.01)


def test_digamma_values():
    assert digamma_r(1.0) == pytest.approx(-EULER_GAMMA, rel=1e-12)
    assert digamma_r(2.0) == pytest.approx(1.0 - EULER_GAMMA, rel=1e-12)
    assert digamma_r(0.5) == pytest.approx(float(mp.digamma(0.5)), rel=1e-12)
    assert digamma_r(123.456) == pytest.approx(float(mp.digamma(123.456)), rel=1e-12)


def test_digamma_domain():
    with pytest.raises(DomainError):
        digamma_r(0.0)
    with pytest.raises(DomainError):
        digamma_r(-2.5)


def test_digamma_exponential_sum_identity():
    # sum_p psi(p+1) x^p / p! = e^x (Gamma(0,x) + ln x); at x = 1 the log drops
    total = math.fsum(digamma_r(p + 1.0) / math.factorial(p) for p in range(41))
    expected = math.e * incomplete_gamma_upper0(1.0)
    assert total == pytest.approx(expected, rel=1e-12)
    assert expected == pytest.approx(0.596347362323194074, rel=1e-12)
