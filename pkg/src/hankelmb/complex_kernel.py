"""Complex Gamma-family functions for contour integrands.

Every vertical-line integrand in this package is assembled from the
functions here.  They accept scalars or numpy arrays of complex values
and evaluate internally in extended precision (``np.clongdouble``) so
that the phase of ``log Gamma`` stays accurate far up the contour:
around ``|Im s| ~ 200`` the plain double evaluation of
``(s - 1/2) log(s + g - 1/2)`` already loses ~3e-13 relative accuracy,
which would dominate the contour error budget.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError, PoleProximityError

__all__ = ["gamma_c", "log_gamma_c", "digamma_r"]

# Godfrey's 15-term Lanczos coefficient set, g = 607/128.
_LANCZOS_G = np.longdouble(607) / np.longdouble(128)
_LANCZOS = np.array([
    "0.99999999999999709182",
    "57.156235665862923517",
    "-59.597960355475491248",
    "14.136097974741747174",
    "-0.49191381609762019978",
    "0.33994649984811888699e-4",
    "0.46523628927048575665e-4",
    "-0.98374475304879564677e-4",
    "0.15808870322491248884e-3",
    "-0.21026444172410488319e-3",
    "0.21743961811521264320e-3",
    "-0.16431810653676389022e-3",
    "0.84418223983852743293e-4",
    "-0.26190838401581408670e-4",
    "0.36899182659531622704e-5",
], dtype=np.longdouble)
_LOG_SQRT_2PI = np.longdouble("0.918938533204672741780329736405617639")
_PI_LD = np.longdouble("3.14159265358979323846264338327950288")

_POLE_TOL = 1e-12


def _as_complex_array(s):
    arr = np.atleast_1d(np.asarray(s, dtype=complex))
    return arr, np.isscalar(s) or getattr(s, "ndim", 0) == 0


def _check_poles(arr):
    near_real = np.abs(arr.imag) < _POLE_TOL
    if not near_real.any():
        return
    re = arr.real[near_real]
    k = np.rint(re)
    if np.any((k <= 0) & (np.abs(re - k) < _POLE_TOL)):
        raise PoleProximityError("argument within 1e-12 of a Gamma pole")


def _lanczos_log(z):
    # principal-branch log Gamma for Re z >= 0.5, longdouble arithmetic;
    # the log of the rational series never winds there, so the result is
    # continuous along vertical lines.
    z = np.asarray(z, dtype=np.clongdouble)
    acc = np.full(z.shape, _LANCZOS[0], dtype=np.clongdouble)
    for k in range(1, len(_LANCZOS)):
        acc = acc + _LANCZOS[k] / (z - 1.0 + k)
    t = z + (_LANCZOS_G - np.longdouble(0.5))
    return _LOG_SQRT_2PI + (z - np.longdouble(0.5)) * np.log(t) - t + np.log(acc)


def gamma_c(s):
    """Gamma function of a complex argument.

    Parameters
    ----------
    s : complex scalar or array
        Must stay at least 1e-12 away from the poles at 0, -1, -2, ...

    Returns
    -------
    complex scalar or array of the input shape.

    Notes
    -----
    Lanczos approximation for ``Re s >= 1/2`` and the reflection formula
    below, so poles are approached symmetrically.  Relative accuracy is
    a few 1e-15 for ``|Im s| <= 200``, ``Re s`` in [-60, 60]; values may
    underflow to 0 beyond ``|Im s| ~ 450`` where ``|Gamma| < 1e-4900``.
    """
    arr, scalar = _as_complex_array(s)
    _check_poles(arr)
    z = arr.astype(np.clongdouble)
    out = np.empty(z.shape, dtype=np.clongdouble)
    right = arr.real >= 0.5
    if right.any():
        out[right] = np.exp(_lanczos_log(z[right]))
    if (~right).any():
        zl = z[~right]
        out[~right] = _PI_LD / (np.sin(_PI_LD * zl) * np.exp(_lanczos_log(1.0 - zl)))
    with np.errstate(over="ignore"):
        res = out.astype(complex)
    if not np.all(np.isfinite(res)):
        raise OverflowError("gamma_c: |Gamma| exceeds the double range "
                            "(use log_gamma_c for ratios)")
    return complex(res[0]) if scalar else res


def log_gamma_c(s):
    """Principal-branch log-Gamma, continuous along vertical lines in the
    right half-plane (it is evaluated through the intrinsically continuous
    logarithmic form of the Lanczos sum, never as log(gamma_c(s))).

    For ``Re s < 1/2`` the reflection formula is used; continuity across
    branch cuts is only guaranteed for ``Re s >= 1/2``.
    """
    arr, scalar = _as_complex_array(s)
    _check_poles(arr)
    z = arr.astype(np.clongdouble)
    out = np.empty(z.shape, dtype=np.clongdouble)
    right = arr.real >= 0.5
    if right.any():
        out[right] = _lanczos_log(z[right])
    if (~right).any():
        zl = z[~right]
        out[~right] = (np.log(_PI_LD / np.sin(_PI_LD * zl))
                       - _lanczos_log(1.0 - zl))
    res = out.astype(complex)
    return complex(res[0]) if scalar else res


# psi(x) asymptotic tail: -sum B_{2n} / (2n x^{2n})
_PSI_TAIL = (
    (2, 1.0 / 12.0),
    (4, -1.0 / 120.0),
    (6, 1.0 / 252.0),
    (8, -1.0 / 240.0),
    (10, 1.0 / 132.0),
    (12, -691.0 / 32760.0),
    (14, 1.0 / 12.0),
)


def digamma_r(x: float) -> float:
    """psi(x) for real x > 0, via the recurrence up to x >= 12 followed by
    the Bernoulli asymptotic series (relative accuracy ~1e-13)."""
    if not x > 0.0:
        raise DomainError("digamma_r requires x > 0")
    acc = 0.0
    while x < 12.0:
        acc -= 1.0 / x
        x += 1.0
    result = np.log(x) - 0.5 / x
    x2 = 1.0 / (x * x)
    p = x2
    for _, coef in _PSI_TAIL:
        result -= coef * p
        p *= x2
    return float(result + acc)
