"""Paper-independent ground truth: direct oscillatory quadrature of the
Hankel integral and forward Mellin integrals.

The Hankel oracle partitions [0, inf) at the scaled J0 zeros, integrates
each cell adaptively, and accelerates the alternating cell sums with
iterated Shanks transforms.  It shares nothing with the contour engine
beyond the J0 evaluations themselves.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import special as _sp
from scipy.integrate import quad

from .errors import ContourError, DomainError
from .special_functions import bessel_j0_zeros

__all__ = ["RealResult", "hankel0_direct", "mellin_forward"]

_SHANKS_DEPTH = 12


@dataclass(frozen=True)
class RealResult:
    value: float
    error_estimate: float
    segments: int


def _iterated_shanks(psums):
    """Iterated Shanks; returns (best, residual between the last two depths)."""
    s = np.asarray(psums, dtype=float)
    bests = [s[-1]]
    for _ in range(_SHANKS_DEPTH):
        if len(s) < 3:
            break
        num = s[2:] * s[:-2] - s[1:-1] ** 2
        den = s[2:] + s[:-2] - 2.0 * s[1:-1]
        with np.errstate(divide="ignore", invalid="ignore"):
            t = np.where(np.abs(den) > 1e-300, num / den, s[1:-1])
        if not np.all(np.isfinite(t)):
            break
        s = t
        bests.append(s[-1])
    if len(bests) >= 3:
        resid = abs(bests[-1] - bests[-2]) + abs(bests[-2] - bests[-3])
    elif len(bests) == 2:
        resid = abs(bests[-1] - bests[-2])
    else:
        resid = abs(bests[-1])
    return bests[-1], resid


def hankel0_direct(f, q: float, tol: float = 1e-8, max_cells: int = 200,
                   x_cap: float | None = None, tail_bound: float = 0.0) -> RealResult:
    """int_0^inf x f(x) J0(qx) dx by partition extrapolation.

    Parameters
    ----------
    f : callable
        Continuous on [0, inf), decaying fast enough that the alternating
        cell sum converges.
    q : float
        Must be positive.
    tol : float
        Target accuracy; per-cell quadrature runs at tol/10.
    max_cells : int
        Cap on the number of J0-zero cells (default 200).
    x_cap : float, optional
        Truncate the domain here (e.g. where a known Gaussian factor is
        below 1e-18); `tail_bound` is then added to the error estimate.

    Returns
    -------
    RealResult
        Cell sums are accelerated only when they have not already
        converged on their own; the residual between the last two
        acceleration depths (times a safety factor) plus the per-cell
        quadrature errors form the error estimate.
    """
    if q <= 0:
        raise DomainError("hankel0_direct requires q > 0")
    bounds = [0.0]
    for k in range(1, max_cells + 1):
        edge = bessel_j0_zeros(k) / q
        if x_cap is not None and edge > x_cap:
            break
        bounds.append(edge)
    if x_cap is not None and (len(bounds) < 2 or bounds[-1] < x_cap):
        bounds.append(x_cap)

    cells = []
    quad_errs = 0.0
    scale = 0.0
    for i in range(len(bounds) - 1):
        v, e = quad(lambda x: x * f(x) * _sp.j0(q * x), bounds[i], bounds[i + 1],
                    epsabs=tol * 1e-3, epsrel=tol * 0.1, limit=200)
        cells.append(v)
        quad_errs += abs(e)
        scale = max(scale, abs(v))
        if i > 3 and abs(v) < 1e-17 * max(scale, 1e-300):
            break

    if not cells:
        return RealResult(0.0, 0.0, 0)
    psums = np.cumsum(cells)
    raw = float(psums[-1])
    last_cell = abs(cells[-1])

    if last_cell <= max(1e-15 * abs(raw), quad_errs, 1e-300):
        # the cell sequence converged by itself; acceleration would only add noise
        return RealResult(raw, last_cell + quad_errs + tail_bound, len(cells))

    signs = np.sign(cells[-8:])
    alternating = bool(np.all(signs[1:] * signs[:-1] < 0))
    if not alternating:
        # beat-structured kernels (e.g. two Bessel frequencies) break the
        # alternation the acceleration needs; fall back to the raw sum when
        # the cells are absolutely summable, with the fitted tail as error
        mags = np.abs(cells[len(cells) // 2:])
        ks = np.arange(len(cells) // 2, len(cells)) + 1.0
        good = mags > 0
        if good.sum() < 4:
            return RealResult(raw, last_cell + quad_errs + tail_bound, len(cells))
        slope = np.polyfit(np.log(ks[good]), np.log(mags[good]), 1)[0]
        if slope >= -1.05:
            raise ContourError(
                "hankel0_direct: cell sums not alternating within the cell cap "
                "and not absolutely summable; f decays too slowly for "
                "partition extrapolation")
        p = -slope
        tail = last_cell * len(cells) / (p - 1.0)
        return RealResult(raw, tail + quad_errs + tail_bound, len(cells))
    accel, resid = _iterated_shanks(psums)
    err = 3.0 * resid + quad_errs + tail_bound + 1e-15 * abs(accel)
    return RealResult(float(accel), float(err), len(cells))


def mellin_forward(g, s: float, upper: float = 1e40, tol: float = 1e-9) -> RealResult:
    """int_0^upper x^{s-1} g(x) dx for 0 < s < 1-ish exponents.

    The endpoint singularity at 0 is removed exactly by u = x^s; the
    outer part runs in log space, so `upper` may be astronomically large.
    A power-law tail estimate from the decay of g near `upper` is added
    to the error.
    """
    if s <= 0:
        raise DomainError("mellin_forward requires s > 0")
    if upper <= 1.0:
        inner, e1 = quad(lambda u: g(u ** (1.0 / s)) / s, 0.0, upper ** s,
                         epsabs=0.0, epsrel=tol * 0.1, limit=200)
        return RealResult(float(inner), float(e1), 1)
    inner, e1 = quad(lambda u: g(u ** (1.0 / s)) / s, 0.0, 1.0,
                     epsabs=0.0, epsrel=tol * 0.1, limit=200)
    outer, e2 = quad(lambda t: np.exp(s * t) * g(np.exp(t)), 0.0, np.log(upper),
                     epsabs=1e-15, epsrel=tol * 0.1, limit=400)

    # decay fit at the upper end -> analytic tail bound
    tail = 0.0
    x1, x2 = 0.8 * upper, upper
    g1, g2 = abs(g(x1)), abs(g(x2))
    if g2 > 0 and g1 > 0:
        p = np.log(g1 / g2) / np.log(x2 / x1)
        if p > s + 1e-3:
            tail = g2 * upper ** s / (p - s)
        else:
            raise ContourError(
                f"mellin_forward: tail of g decays like x^-{p:.3g}, too slowly "
                f"for exponent s={s}; the tail bound exceeds any tolerance")
    value = inner + outer
    return RealResult(float(value), float(e1 + e2 + tail), 2)
