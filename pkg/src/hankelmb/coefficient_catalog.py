"""The worked examples as coefficient continuations, their closed forms,
and the two series representations of the new parametric integral (A.6).

Each entry interpolates the Taylor coefficients of a generating function
g(z) (with f(x) = g(x^2), or h(x^4) for the square-root example) to
complex order s, which is what the contour engine integrates against
the Gamma kernel.  ``generating`` carries f(x) itself so the oscillatory
quadrature oracle can cross-check every transform head-on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .asymptotics import SeriesResult
from .complex_kernel import gamma_c
from .errors import ConvergenceError, DomainError
from .special_functions import (
    bessel_i0, bessel_j0, bessel_k0, bessel_k_half, bessel_kn,
    hyp1f1_c, hyp1f2_c, hyp2f0_asymptotic, incomplete_gamma_upper0,
    laguerre_gen,
)

__all__ = [
    "CoefficientFn", "EXAMPLES", "get_coefficient", "generating_function",
    "coef_a1", "coef_a2", "coef_a3", "coef_a4", "coef_a5", "coef_a6", "coef_a7",
    "closed_form", "a6_series_psi", "a6_series_2f0", "a6_q_zero",
    "appendix_a_derivatives",
]


@dataclass
class CoefficientFn:
    """Analytic continuation s -> g^(s)(0) of a Taylor-coefficient sequence.

    evaluate accepts complex scalars or numpy arrays.  strip_min is the
    left edge of the regularity half-plane; every catalog continuation is
    regular on the entire half-plane right of it (right_regular), which
    lets the engine shift contours past 0 for conditioning.
    """
    label: str
    kind: str                      # "theorem1" | "theorem2"
    evaluate: Callable
    strip_min: float
    real_symmetric: bool = True
    params: dict = field(default_factory=dict)
    right_regular: bool = True
    growth_hint: float | None = None   # known |w|-rate, pi/2 for A.3-A.7
    generating: Callable | None = None  # f(x), for the quadrature oracle
    growth: object = field(default=None, repr=False)  # GrowthProfile cache


def _as_c(s):
    return np.asarray(s, dtype=complex)


def coef_a1(a: float) -> CoefficientFn:
    """g(z) = e^{-a^2 z}:  g^(m)(0) = a^{2m}, continued as a^{2s}."""
    if a <= 0:
        raise DomainError("coef_a1 requires a > 0")
    ln_a2 = 2.0 * math.log(a)
    return CoefficientFn(
        label="a1", kind="theorem1",
        evaluate=lambda s: np.exp(_as_c(s) * ln_a2),
        strip_min=-1.0, params={"a": a},
        generating=lambda x: np.exp(-(a * x) ** 2),
    )


def coef_a2(a: float, c: float) -> CoefficientFn:
    """g(z) = e^{-a^2 z} J0(c sqrt(z)):  g^(m)(0) = a^{2m} L_m(-c^2/4a^2),
    continued through the Kummer form L_s(z) = 1F1(-s; 1; z)."""
    if a <= 0 or c <= 0:
        raise DomainError("coef_a2 requires a, c > 0")
    z0 = -c * c / (4.0 * a * a)
    ln_a2 = 2.0 * math.log(a)

    def evaluate(s):
        s = _as_c(s)
        return np.exp(s * ln_a2) * hyp1f1_c(-s, 1.0, z0)

    return CoefficientFn(
        label="a2", kind="theorem1", evaluate=evaluate,
        strip_min=-1.0, params={"a": a, "c": c},
        generating=lambda x: np.exp(-(a * x) ** 2) * bessel_j0(c * x),
    )


def coef_a3(a: float, n: int) -> CoefficientFn:
    """g(z) = (z + a^2)^{-n-1}:  g^(s)(0) = a^{-2s-2n-2} Gamma(s+n+1)/Gamma(n+1).
    The Gamma factor sits exactly on the pi/2 growth boundary."""
    if a <= 0 or n < 0:
        raise DomainError("coef_a3 requires a > 0 and n >= 0")
    ln_a = math.log(a)
    gam_n1 = math.gamma(n + 1)

    def evaluate(s):
        s = _as_c(s)
        return np.exp((-2.0 * s - 2 * n - 2) * ln_a) * gamma_c(s + n + 1.0) / gam_n1

    return CoefficientFn(
        label="a3", kind="theorem1", evaluate=evaluate,
        strip_min=-1.0, params={"a": a, "n": n}, growth_hint=np.pi / 2,
        generating=lambda x: (x * x + a * a) ** (-(n + 1.0)),
    )


def coef_a4(a: float, n: int) -> CoefficientFn:
    """g(z) = (z + a^2)^{-n-3/2}:  half-integer shift of the A.3 family."""
    if a <= 0 or n < 0:
        raise DomainError("coef_a4 requires a > 0 and n >= 0")
    ln_a = math.log(a)
    gam_n32 = math.gamma(n + 1.5)

    def evaluate(s):
        s = _as_c(s)
        return np.exp((-2.0 * s - 2 * n - 3) * ln_a) * gamma_c(s + n + 1.5) / gam_n32

    return CoefficientFn(
        label="a4", kind="theorem1", evaluate=evaluate,
        strip_min=-1.0, params={"a": a, "n": n}, growth_hint=np.pi / 2,
        generating=lambda x: (x * x + a * a) ** (-(n + 1.5)),
    )


def coef_a5(a: float, c: float) -> CoefficientFn:
    """g(z) = J0(a sqrt(z)) / (z + c^2):

    g^(m)(0) = c^{-2m-2} Gamma(m+1) I0(ac)
               - (a/2)^{2m+2} 1F2(1; m+2, m+2; a^2c^2/4) / ((m+1) Gamma(m+2)).

    The transform is only used for q > a (the 1F2 piece then contributes
    an exactly vanishing contour integral)."""
    if a <= 0 or c <= 0:
        raise DomainError("coef_a5 requires a, c > 0")
    i0ac = bessel_i0(a * c)
    z14 = (a * c / 2.0) ** 2
    ln_c = math.log(c)
    ln_a2 = math.log(a / 2.0)

    def evaluate(s):
        s = _as_c(s)
        first = np.exp((-2.0 * s - 2.0) * ln_c) * gamma_c(s + 1.0) * i0ac
        second = (np.exp((2.0 * s + 2.0) * ln_a2) * hyp1f2_c(1.0, s + 2.0, s + 2.0, z14)
                  / ((s + 1.0) * gamma_c(s + 2.0)))
        return first - second

    return CoefficientFn(
        label="a5", kind="theorem1", evaluate=evaluate,
        strip_min=-1.0, params={"a": a, "c": c}, growth_hint=np.pi / 2,
        generating=lambda x: bessel_j0(a * x) / (x * x + c * c),
    )


def coef_a6(a: float, c: float) -> CoefficientFn:
    """g(z) = e^{-a^2 z} / (z + c^2):  g^(m)(0) = c^{-2m-2} Gamma(m+1)
    sum_{k<=m} (ac)^{2k}/k!, continued through

        sum_{k<=m} (ac)^{2k}/k! = e^{(ac)^2} - (ac)^{2(m+1)}
                                  sum_p (ac)^{2p}/Gamma(p+m+2).

    The p-series is summed in ascending order with compensated summation;
    it converges for every finite ac."""
    if a <= 0 or c <= 0:
        raise DomainError("coef_a6 requires a, c > 0")
    w2 = (a * c) ** 2
    e_w2 = math.exp(w2)
    ln_ac = math.log(a * c)
    ln_c = math.log(c)

    def evaluate(s):
        s = _as_c(s)
        term = np.exp((2.0 * s + 2.0) * ln_ac) / gamma_c(s + 2.0)
        total = term.copy()
        comp = np.zeros_like(term)
        for p in range(1, 600):
            term = term * w2 / (s + p + 1.0)
            y = term - comp
            t = total + y
            comp = (t - total) - y
            total = t
            if np.all(np.abs(term) <= 1e-15 * np.maximum(np.abs(total), 1e-300)):
                break
        else:
            raise ConvergenceError("a6 tail series did not converge")
        bracket = e_w2 - total
        return np.exp((-2.0 * s - 2.0) * ln_c) * gamma_c(s + 1.0) * bracket

    return CoefficientFn(
        label="a6", kind="theorem1", evaluate=evaluate,
        strip_min=-1.0, params={"a": a, "c": c}, growth_hint=np.pi / 2,
        generating=lambda x: np.exp(-(a * x) ** 2) / (x * x + c * c),
    )


def coef_a7(a: float) -> CoefficientFn:
    """h(z) = (z + a^4)^{-1/2} (so f(x) = 1/sqrt(x^4 + a^4), theorem 2):
    h^(m)(0) = pi^{-1/2} a^{-4m-2} Gamma(m+1/2)."""
    if a <= 0:
        raise DomainError("coef_a7 requires a > 0")
    ln_a = math.log(a)
    inv_sqrt_pi = 1.0 / math.sqrt(math.pi)

    def evaluate(s):
        s = _as_c(s)
        return inv_sqrt_pi * np.exp((-4.0 * s - 2.0) * ln_a) * gamma_c(s + 0.5)

    return CoefficientFn(
        label="a7", kind="theorem2", evaluate=evaluate,
        strip_min=-0.5, params={"a": a}, growth_hint=np.pi / 2,
        generating=lambda x: 1.0 / np.sqrt(x ** 4 + a ** 4),
    )


# required constructor arguments per label
EXAMPLES = {
    "a1": ("a",),
    "a2": ("a", "c"),
    "a3": ("a", "n"),
    "a4": ("a", "n"),
    "a5": ("a", "c"),
    "a6": ("a", "c"),
    "a7": ("a",),
}

_BUILDERS = {
    "a1": coef_a1, "a2": coef_a2, "a3": coef_a3, "a4": coef_a4,
    "a5": coef_a5, "a6": coef_a6, "a7": coef_a7,
}


def get_coefficient(label: str, **params) -> CoefficientFn:
    """Catalog entry by label ('a1'..'a7') with its named parameters."""
    if label not in _BUILDERS:
        raise DomainError(f"unknown example label {label!r}")
    needed = EXAMPLES[label]
    missing = [p for p in needed if params.get(p) is None]
    if missing:
        raise DomainError(f"example {label!r} requires parameters {needed}")
    return _BUILDERS[label](**{p: params[p] for p in needed})


def generating_function(label: str, **params) -> Callable:
    """f(x) for the oscillatory oracle, matching the catalog entry."""
    return get_coefficient(label, **params).generating


def closed_form(example: str, q: float, a: float | None = None,
                c: float | None = None, n: int | None = None) -> float:
    """Closed-form transform values.

    A.6 has no closed form (that is the point of the example); use
    a6_series_psi / a6_series_2f0.  The A.2 Bessel argument is qc/(2a^2):
    the qc/(4a^2) variant disagrees with direct quadrature of the
    integral at (a, c, q) = (1, 1, 2) by 16%, the 2a^2 one matches to
    twelve digits.
    """
    if q < 0:
        raise DomainError("closed_form requires q >= 0")
    if example == "a1":
        _need(a=a)
        return math.exp(-q * q / (4 * a * a)) / (2 * a * a)
    if example == "a2":
        _need(a=a, c=c)
        return (math.exp(-(q * q + c * c) / (4 * a * a))
                * bessel_i0(q * c / (2 * a * a)) / (2 * a * a))
    if example == "a3":
        _need(a=a, n=n)
        _need_positive_q(q)
        return (q / (2 * a)) ** n * bessel_kn(n, q * a) / math.gamma(n + 1)
    if example == "a4":
        _need(a=a, n=n)
        _need_positive_q(q)
        return (q / (2 * a)) ** (n + 0.5) * bessel_k_half(n, q * a) / math.gamma(n + 1.5)
    if example == "a5":
        _need(a=a, c=c)
        _need_positive_q(q)
        if q <= a:
            raise DomainError("A.5 closed form requires q > a > 0")
        return bessel_i0(a * c) * bessel_k0(q * c)
    if example == "a6":
        raise DomainError("A.6 has no closed form; use the series representations")
    if example == "a7":
        _need(a=a)
        _need_positive_q(q)
        arg = q * a / math.sqrt(2.0)
        return bessel_j0(arg) * bessel_k0(arg)
    raise DomainError(f"unknown example label {example!r}")


def _need(**kwargs):
    missing = [k for k, v in kwargs.items() if v is None]
    if missing:
        raise DomainError(f"missing parameter(s): {missing}")


def _need_positive_q(q):
    if q <= 0:
        raise DomainError("this closed form requires q > 0")


# ---------------------------------------------------------------------------
# A.6: the new parametric integral
# ---------------------------------------------------------------------------

def a6_series_psi(q: float, a: float, c: float, max_terms: int = 400) -> SeriesResult:
    """Tricomi-Psi representation of the A.6 integral:

        A6(q) = e^{(ac)^2} K0(qc)
                - (1/2) e^{-q^2/4a^2} sum_p (ac)^{2p} Psi(p+1, 1; q^2/4a^2)
    """
    from .special_functions import tricomi_psi

    if q <= 0 or a <= 0 or c <= 0:
        raise DomainError("a6_series_psi requires q, a, c > 0")
    head = math.exp((a * c) ** 2) * bessel_k0(q * c)
    x = q * q / (4 * a * a)
    if x > 700.0:
        # e^{-x} underflows; the correction is identically zero at double precision
        return SeriesResult(value=head, partial_sums=[head],
                            truncation_index=0, first_omitted=0.0)
    pref = 0.5 * math.exp(-x)
    w2 = (a * c) ** 2
    fac = 1.0
    psums = []
    total = 0.0
    term = math.inf
    for p in range(max_terms):
        term = pref * fac * tricomi_psi(p + 1, x)
        total += term
        psums.append(head - total)
        if abs(term) <= 1e-14 * max(abs(total), abs(head), 1e-300):
            return SeriesResult(value=head - total, partial_sums=psums,
                                truncation_index=p, first_omitted=abs(term))
        fac *= w2
    raise ConvergenceError(
        f"a6_series_psi: no convergence within {max_terms} terms (ac too large)")


def a6_series_2f0(q: float, a: float, c: float, max_terms: int = 400) -> SeriesResult:
    """Asymptotic 2F0 representation of the A.6 integral:

        A6(q) = e^{(ac)^2} K0(qc) - (2a^2/q^2) e^{-q^2/4a^2}
                sum_p (2a^2 c/q)^{2p} 2F0(p+1, p+1; -4a^2/q^2)

    Valid for q large against a; the returned bound combines the outer
    tail with the worst inner optimal-truncation bound."""
    if q <= 0 or a <= 0 or c <= 0:
        raise DomainError("a6_series_2f0 requires q, a, c > 0")
    head = math.exp((a * c) ** 2) * bessel_k0(q * c)
    x = q * q / (4 * a * a)
    if x > 700.0:
        return SeriesResult(value=head, partial_sums=[head],
                            truncation_index=0, first_omitted=0.0)
    z = -4.0 * a * a / (q * q)
    pref = (2.0 * a * a / (q * q)) * math.exp(-x)
    ratio = (2.0 * a * a * c / q) ** 2
    fac = 1.0
    total = 0.0
    worst_inner = 0.0
    psums = []
    for p in range(max_terms):
        try:
            inner = hyp2f0_asymptotic(p + 1.0, p + 1.0, z)
        except ConvergenceError:
            # inner series exhausted at this p; truncate the outer sum here
            # and charge its geometric tail to the composite bound
            if p == 0 or ratio >= 1.0:
                raise DomainError(
                    "a6_series_2f0: asymptotic regime violated (q too small against a)")
            bound = pref * (worst_inner + fac / (1.0 - ratio))
            return SeriesResult(value=head - pref * total, partial_sums=psums,
                                truncation_index=max(p - 1, 0), first_omitted=bound)
        total += fac * inner.value
        worst_inner = max(worst_inner, fac * inner.error_bound)
        psums.append(head - pref * total)
        if fac * abs(inner.value) <= 1e-15 * max(abs(total), 1e-300) and p > 0:
            tail = fac * ratio / (1.0 - ratio) if ratio < 1.0 else 0.0
            bound = pref * (worst_inner + tail)
            return SeriesResult(value=head - pref * total, partial_sums=psums,
                                truncation_index=p, first_omitted=bound)
        fac *= ratio
    raise ConvergenceError("a6_series_2f0: outer series did not converge")


def a6_q_zero(a: float, c: float) -> float:
    """q -> 0 value of the A.6 integral: (1/2) e^{(ac)^2} Gamma(0, (ac)^2)."""
    if a <= 0 or c <= 0:
        raise DomainError("a6_q_zero requires a, c > 0")
    w2 = (a * c) ** 2
    if w2 > 700.0:
        # e^{w2} Gamma(0, w2) = 1/w2 - 1/w2^2 + 2/w2^3 - ... stays finite
        return float((1.0 / w2 - 1.0 / w2 ** 2 + 2.0 / w2 ** 3) / 2.0)
    return 0.5 * math.exp(w2) * incomplete_gamma_upper0(w2)


def appendix_a_derivatives(m: int, n: int, a: float, c: float) -> float:
    """m-th derivative at 0 of g(z) = e^{-a^2 z} J_{2n}(c sqrt(z)):

        g^(m)(0) = (-1)^m m!/(m+n)! a^{2m} (c^2/4a^2)^n L_{m-n}^{2n}(-c^2/4a^2)

    and identically zero for m < n.  The sign of the (c^2/4a^2)^n factor
    is fixed by the defining binomial sum

        g^(m)(0) = (-1)^m a^{2m} sum_{p=n}^{m} C(m,p) p! / ((p-n)! (p+n)!)
                   (c^2/4a^2)^p,

    which this closed form reproduces exactly (a (-1)^n variant does not:
    at m=2, n=1, a=c=1 the sum gives +0.2708..., not its negative)."""
    if m < 0 or n < 0:
        raise DomainError("appendix_a_derivatives requires m, n >= 0")
    if a <= 0 or c <= 0:
        raise DomainError("appendix_a_derivatives requires a, c > 0")
    if m < n:
        return 0.0
    z0 = c * c / (4.0 * a * a)
    lag = laguerre_gen(m - n, 2 * n, -z0)
    val = ((-1.0) ** m * math.factorial(m) / math.factorial(m + n)
           * a ** (2 * m) * z0 ** n * lag)
    return float(val)
