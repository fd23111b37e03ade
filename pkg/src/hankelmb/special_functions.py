"""Real Bessel family, hypergeometric series with complex parameters,
Laguerre polynomials, Tricomi Psi and the incomplete gamma.

Real-argument Bessel functions are delegated to scipy.special behind the
domain/overflow contracts used elsewhere in the package; everything with
complex parameters (the coefficient continuations need Kummer and 1F2
series of complex order) and the asymptotic 2F0 is summed here directly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import special as _sp
from scipy.integrate import quad

from .errors import AsymptoticDivergenceError, ConvergenceError, DomainError

__all__ = [
    "AsymptoticValue",
    "bessel_j0", "bessel_j1", "bessel_i0", "bessel_i1",
    "bessel_k0", "bessel_k1", "bessel_kn", "bessel_k_half",
    "laguerre_gen", "hyp1f1_c", "hyp1f2_c", "hyp2f0_asymptotic",
    "tricomi_psi", "incomplete_gamma_upper0", "bessel_j0_zeros",
]

_SERIES_TOL = 1e-14
_SERIES_CAP = 100_000


@dataclass(frozen=True)
class AsymptoticValue:
    """Optimally truncated asymptotic sum with its first-omitted-term bound."""
    value: float
    error_bound: float
    terms_used: int


def _require_nonnegative(x, name):
    if np.any(np.asarray(x) < 0):
        raise DomainError(f"{name} requires x >= 0")


def _require_positive(x, name):
    if np.any(np.asarray(x) <= 0):
        raise DomainError(f"{name} requires x > 0")


def bessel_j0(x):
    """J0(x) for x >= 0."""
    _require_nonnegative(x, "bessel_j0")
    return _sp.j0(x)


def bessel_j1(x):
    """J1(x) for x >= 0."""
    _require_nonnegative(x, "bessel_j1")
    return _sp.j1(x)


def bessel_i0(x):
    """I0(x) for 0 <= x <= ~700; raises OverflowError past the double range."""
    _require_nonnegative(x, "bessel_i0")
    if np.any(np.asarray(x) > 700.0):
        raise OverflowError("bessel_i0 overflows for x > 700")
    return _sp.i0(x)


def bessel_i1(x):
    _require_nonnegative(x, "bessel_i1")
    if np.any(np.asarray(x) > 700.0):
        raise OverflowError("bessel_i1 overflows for x > 700")
    return _sp.i1(x)


def bessel_k0(x):
    """K0(x) for x > 0."""
    _require_positive(x, "bessel_k0")
    return _sp.k0(x)


def bessel_k1(x):
    _require_positive(x, "bessel_k1")
    return _sp.k1(x)


def bessel_kn(n: int, x):
    """K_n(x) for integer n >= 0, x > 0, by the forward recurrence
    K_{n+1} = K_{n-1} + (2n/x) K_n from K0, K1 (stable: K grows with n)."""
    if n < 0:
        raise DomainError("bessel_kn requires n >= 0")
    _require_positive(x, "bessel_kn")
    prev, cur = _sp.k0(x), _sp.k1(x)
    if n == 0:
        return prev
    for k in range(1, n):
        prev, cur = cur, prev + (2.0 * k / x) * cur
    return cur


def bessel_k_half(n: int, x: float) -> float:
    """K_{n+1/2}(x) from its closed finite sum, exact up to rounding:

        sqrt(pi/2x) e^{-x} sum_{k=0}^{n} (n+k)! / (k! (n-k)! (2x)^k)
    """
    if n < 0:
        raise DomainError("bessel_k_half requires n >= 0")
    _require_positive(x, "bessel_k_half")
    acc = 0.0
    term = 1.0
    for k in range(n + 1):
        acc += term
        # (n+k)!/(k!(n-k)!(2x)^k) ratio between successive k
        term *= (n + k + 1) * (n - k) / ((k + 1) * 2.0 * x)
    return float(np.sqrt(np.pi / (2.0 * x)) * np.exp(-x) * acc)


def laguerre_gen(n: int, alpha: float, x):
    """Generalized Laguerre polynomial L_n^alpha(x) via the three-term
    recurrence  (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}."""
    if n < 0:
        raise DomainError("laguerre_gen requires n >= 0")
    prev = np.ones_like(np.asarray(x, dtype=float))
    if n == 0:
        return prev if np.ndim(x) else float(prev)
    cur = 1.0 + alpha - np.asarray(x, dtype=float)
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
    return cur if np.ndim(x) else float(cur)


def _sum_series(step, shape):
    """Sum 1 + t1 + t2 + ... where step(term, k) -> next term (vectorized)."""
    term = np.ones(shape, dtype=complex)
    out = term.copy()
    for k in range(_SERIES_CAP):
        term = step(term, k)
        out = out + term
        if np.all(np.abs(term) <= _SERIES_TOL * np.maximum(np.abs(out), 1e-300)):
            return out
    raise ConvergenceError("hypergeometric series exceeded 1e5 terms")


def hyp1f1_c(a, b: float, z: float):
    """Kummer 1F1(a; b; z) for complex (scalar or array) a, real b, z.

    Convergent Taylor sum with term-ratio stopping at 1e-14 relative;
    valid for all finite z.  This is the analytic continuation in the
    first parameter used for Laguerre functions of complex degree:
    L_s(z) = 1F1(-s; 1; z).
    """
    if float(b) <= 0 and float(b) == int(b):
        raise DomainError("hyp1f1_c: b must not be a non-positive integer")
    a_arr = np.atleast_1d(np.asarray(a, dtype=complex))
    out = _sum_series(lambda t, k: t * (a_arr + k) * z / ((b + k) * (k + 1.0)),
                      a_arr.shape)
    return out if np.ndim(a) else complex(out[0])


def hyp1f2_c(a1: float, b1, b2, z: float):
    """1F2(a1; b1, b2; z) for real a1, complex (scalar or array) b1, b2."""
    b1_arr = np.atleast_1d(np.asarray(b1, dtype=complex))
    b2_arr = np.atleast_1d(np.asarray(b2, dtype=complex))
    for barr in (b1_arr, b2_arr):
        bad = (barr.imag == 0) & (barr.real <= 0) & (barr.real == np.rint(barr.real))
        if bad.any():
            raise DomainError("hyp1f2_c: b parameters must not be non-positive integers")
    b1_arr, b2_arr = np.broadcast_arrays(b1_arr, b2_arr)
    out = _sum_series(
        lambda t, k: t * (a1 + k) * z / ((b1_arr + k) * (b2_arr + k) * (k + 1.0)),
        b1_arr.shape)
    return out if (np.ndim(b1) or np.ndim(b2)) else complex(out[0])


def hyp2f0_asymptotic(a1: float, a2: float, z: float) -> AsymptoticValue:
    """2F0(a1, a2; z) for z < 0, summed to its smallest term.

    The series diverges for every z != 0; the sum is truncated at the
    first local minimum of the term magnitudes and the magnitude of the
    first omitted term is returned as the error bound.
    """
    if z > 0:
        raise DomainError("hyp2f0_asymptotic requires z <= 0")
    if z == 0.0:
        return AsymptoticValue(1.0, 0.0, 1)
    term = 1.0
    total = term
    k = 0
    while True:
        nxt = term * (a1 + k) * (a2 + k) * z / (k + 1.0)
        if abs(nxt) >= abs(term):
            if k == 0:
                raise AsymptoticDivergenceError(
                    "2F0: first term is already the smallest (|z| too large)")
            bound = abs(nxt) + 5e-16 * abs(total)
            return AsymptoticValue(float(total), float(bound), k + 1)
        term = nxt
        total += term
        k += 1
        if k > 10_000:
            raise ConvergenceError("2F0 truncation search ran away")


def tricomi_psi(a: int, x: float) -> float:
    """Tricomi Psi(a, 1; x) for integer a >= 1, x > 0.

    Evaluated from the integral representation

        Psi(a,1,x) = (1/Gamma(a)) int_0^inf e^{-xt} t^{a-1} (1+t)^{-a} dt,

    split at t = 1 with a logarithmic substitution t = e^u on the outer
    part, which keeps the quadrature stable down to x ~ 1e-300 where the
    integrand develops its ln(1/x) plateau.
    """
    if a < 1 or a != int(a):
        raise DomainError("tricomi_psi requires integer a >= 1")
    if not x > 0:
        raise DomainError("tricomi_psi requires x > 0")
    a = int(a)
    inner, _ = quad(lambda t: np.exp(-x * t) * t ** (a - 1) * (1.0 + t) ** (-a),
                    0.0, 1.0, epsabs=0.0, epsrel=1e-13, limit=200)
    u_hi = np.log(max(1.0, 1.0 / x)) + 36.0
    outer, _ = quad(lambda u: np.exp(-x * np.exp(u)) * (1.0 + np.exp(-u)) ** (-a),
                    0.0, u_hi, epsabs=0.0, epsrel=1e-13, limit=400)
    return float((inner + outer) / _sp.gamma(a))


def incomplete_gamma_upper0(x: float) -> float:
    """Gamma(0, x) = E1(x) for x > 0: continued fraction for x >= 1,
    the -gamma_E - ln x + sum (-1)^{k+1} x^k / (k k!) series below."""
    if not x > 0:
        raise DomainError("incomplete_gamma_upper0 requires x > 0")
    if x >= 1.0:
        # Lentz evaluation of e^{-x} * (1/(x+1- 1/(x+3- 4/(x+5- ...))))
        b = x + 1.0
        c = 1e308
        d = 1.0 / b
        h = d
        for k in range(1, 400):
            an = -k * k * 1.0
            b += 2.0
            d = an * d + b
            if abs(d) < 1e-300:
                d = 1e-300
            c = b + an / c
            if abs(c) < 1e-300:
                c = 1e-300
            d = 1.0 / d
            delta = d * c
            h *= delta
            if abs(delta - 1.0) < 1e-16:
                break
        return float(np.exp(-x) * h)
    total = -np.euler_gamma - np.log(x)
    term = 1.0
    for k in range(1, 60):
        term *= -x / k
        inc = -term / k
        total += inc
        if abs(inc) < 1e-17 * max(abs(total), 1e-300):
            break
    return float(total)


def bessel_j0_zeros(k: int) -> float:
    """k-th positive zero of J0 (McMahon expansion + Newton polish)."""
    if k < 1:
        raise DomainError("bessel_j0_zeros requires k >= 1")
    beta = (k - 0.25) * np.pi
    mu = beta - 1.0 / (8 * beta) * (1.0 - 124.0 / (3.0 * (8 * beta) ** 2))
    for _ in range(3):
        mu = mu + _sp.j0(mu) / _sp.j1(mu)  # J0' = -J1
    return float(mu)
