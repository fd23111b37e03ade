"""Vertical-line contour engine for the two Hankel-transform representations.

Both transforms are inverse-Mellin integrals along ``Re s = alpha``:

    A(q) = (2/q^2)        * (1/2pi i) int g(s) Gamma(s+1) (q^2/4)^{-s} ds
    A(q) = (2 sqrt(pi)/q^2) * (1/2pi i) int h(s) Gamma(2s+1)/Gamma(1/2-s)
                                              2^{6s+1} q^{-4s} ds

with the coefficient continuation ``g``/``h`` supplied by the catalog.
Quadrature is the trapezoidal rule on a symmetric node grid (geometric
convergence for integrands analytic in a strip around the line), with
one step-halving refinement for the error estimate, longdouble
accumulation for the cancellation floor, and a first-order oscillatory
endpoint correction for integrands whose tails decay only algebraically.

The theorem statements put the contour inside ``(-1, 0)`` resp.
``(-1/2, 0)``, but every catalog continuation is regular on the whole
half-plane to the right of its strip edge, so the line may be shifted
right of 0 for numerical conditioning (Cauchy).  That is essential when
``q^2/4a^2`` is large: on a fixed line in ``(-1, 0)`` the value
``~e^{-q^2/4a^2}`` would be produced by catastrophic oscillatory
cancellation, while a line near the saddle of the integrand yields it
at full relative precision.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable, TYPE_CHECKING

import numpy as np

from .complex_kernel import log_gamma_c
from .errors import ContourError, DomainError, GrowthError

if TYPE_CHECKING:  # pragma: no cover
    from .coefficient_catalog import CoefficientFn

__all__ = [
    "ContourSpec", "GrowthProfile", "ContourIntegral", "TransformResult",
    "integrate_contour", "theorem1_transform", "theorem2_transform",
    "estimate_growth", "auto_contour", "ContourWarning",
]

_LD = np.clongdouble
_TWO_PI = 2.0 * np.pi
_T_CAP = 400.0          # |Im s| beyond ~450 overflows 1/Gamma factors in doubles
_H_MIN = 1.0 / 64.0
_GROWTH_MARGIN = 0.05   # admissible iff a_est < pi/2 - margin
_GROWTH_REJECT = np.pi / 2 + 0.1


class ContourWarning(UserWarning):
    pass


@dataclass
class ContourSpec:
    """Vertical-line contour: abscissa, truncation half-height, node step
    and the target relative tolerance of the quadrature."""
    alpha: float
    half_height: float
    step: float
    tolerance: float = 1e-8

    def __post_init__(self):
        if self.step <= 0 or self.half_height <= 0:
            raise DomainError("ContourSpec: step and half_height must be positive")
        if self.half_height < 10 * self.step:
            raise DomainError("ContourSpec: half_height must be >= 10 * step")
        if self.tolerance <= 0:
            raise DomainError("ContourSpec: tolerance must be positive")


@dataclass(frozen=True)
class GrowthProfile:
    """Fitted envelope ln|coef(v+iw)| ~ ln C + P v + A |w| over a sample grid."""
    a_est: float
    p_est: float
    c_est: float
    admissible: bool
    fit_residual: float


@dataclass(frozen=True)
class ContourIntegral:
    """(1/2pi i) of a contour integral plus its quadrature diagnostics."""
    value: complex
    error_estimate: float
    nodes: int
    tail_bound: float
    step_diff: float
    tail_correction: complex = 0.0 + 0.0j


@dataclass(frozen=True)
class TransformResult:
    value: float
    error_estimate: float
    imag_residue: float
    nodes: int
    tail_bound: float
    alpha: float
    warnings: tuple = ()


def _eval_nodes(integrand, s):
    try:
        vals = np.asarray(integrand(s), dtype=complex)
        if vals.shape != s.shape:
            raise ValueError
    except Exception:
        vals = np.array([complex(integrand(complex(si))) for si in s])
    if not np.all(np.isfinite(vals)):
        bad = s[~np.isfinite(vals)][0]
        raise ContourError(f"non-finite integrand value at contour node s={bad}")
    return vals


def _sweep(integrand, alpha, T, h):
    n = int(np.ceil(T / h))
    w = np.arange(-n, n + 1) * h
    vals = _eval_nodes(integrand, alpha + 1j * w)
    total = complex(np.sum(vals.astype(_LD)) * _LD(h)) / _TWO_PI
    return total, vals, w


def _endpoint_correction(vals, w, h):
    """First-order correction for the truncated oscillatory tails:
    int_T^inf f(w) e^{i lam w} dw ~= -F(T) / (i lam), and its mirror."""
    corr = 0.0 + 0.0j
    lam_abs = 0.0
    f_hi, f_hi_prev = vals[-1], vals[-2]
    if f_hi != 0 and f_hi_prev != 0:
        lam = np.angle(f_hi / f_hi_prev) / h
        if abs(lam) > 1e-6:
            corr += -f_hi / (1j * lam)
            lam_abs = abs(lam)
    f_lo, f_lo_next = vals[0], vals[1]
    if f_lo != 0 and f_lo_next != 0:
        lam = np.angle(f_lo / f_lo_next) / (-h)
        if abs(lam) > 1e-6:
            corr += f_lo / (1j * lam)
            lam_abs = max(lam_abs, abs(lam))
    return corr / _TWO_PI, lam_abs


def _truncated(vals, w, h, frac):
    """Corrected integral using only the nodes with |w| <= frac * T."""
    T = w[-1]
    keep = np.abs(w) <= frac * T + 1e-12
    sub = vals[keep]
    total = complex(np.sum(sub.astype(_LD)) * _LD(h)) / _TWO_PI
    corr, _ = _endpoint_correction(sub, w[keep], h)
    return total + corr


def integrate_contour(integrand, contour: ContourSpec,
                      tail_correction: bool = True) -> ContourIntegral:
    """Trapezoidal (1/2pi i) integral of `integrand` along the vertical line.

    Parameters
    ----------
    integrand : callable
        Map s -> complex, evaluated on complex numpy arrays when possible
        (falls back to scalar calls).  Must be finite at every node.
    contour : ContourSpec
    tail_correction : bool
        Apply the first-order oscillatory endpoint correction when the
        integrand has not decayed below the tolerance at |w| = T.

    Returns
    -------
    ContourIntegral
        value is (1/2pi i) * int; error_estimate combines the
        step-refinement difference, the tail bound and the accumulation
        rounding floor.
    """
    alpha, T, tol = contour.alpha, contour.half_height, contour.tolerance
    h = contour.step
    coarse, vals, w = _sweep(integrand, alpha, T, h)
    refined, vals, w = _sweep(integrand, alpha, T, h / 2)
    step_diff = abs(refined - coarse)
    halvings = 0
    scale = max(abs(refined), 1e-300)
    while step_diff > 0.25 * tol * scale and h / 2 > _H_MIN and halvings < 3:
        h /= 2
        coarse = refined
        refined, vals, w = _sweep(integrand, alpha, T, h / 2)
        step_diff = abs(refined - coarse)
        scale = max(abs(refined), 1e-300)
        halvings += 1

    abs_vals = np.abs(vals)
    peak = abs_vals.max()
    edge = max(abs_vals[0], abs_vals[-1])
    # node values carry ~1e-16 relative error each (double precision);
    # under heavy oscillatory cancellation that is the accuracy floor
    rounding_floor = 2e-16 * float(np.sum(abs_vals)) * (h / 2) / _TWO_PI

    value = refined
    corr = 0.0 + 0.0j
    tail_bound = edge * (h / 2)
    if peak > 0 and edge > 1e-20 * peak:
        corr, lam = _endpoint_correction(vals, w, h / 2)
        if lam == 0.0 and edge > tol * peak:
            raise ContourError(
                "tail not decaying: integrand at |w| = T exceeds tolerance * peak "
                "and shows no oscillation to correct against")
        if tail_correction and lam > 0.0:
            value = refined + corr
            shorter = _truncated(vals, w, h / 2, 0.75)
            tail_bound = 3.0 * abs(value - shorter) + edge * (h / 2)
        else:
            tail_bound = 2.0 * edge / max(lam, 1e-6)
            corr = 0.0 + 0.0j

    err = step_diff + tail_bound + rounding_floor
    return ContourIntegral(value=complex(value), error_estimate=float(err),
                           nodes=len(vals), tail_bound=float(tail_bound),
                           step_diff=float(step_diff), tail_correction=complex(corr))


# ---------------------------------------------------------------------------
# growth estimation and automatic contour sizing
# ---------------------------------------------------------------------------

def estimate_growth(coef, v_samples=None, w_max: float = 120.0) -> GrowthProfile:
    """Least-squares fit of ln|coef(v+iw)| against (1, v, |w|, ln|w|).

    The ln|w| regressor absorbs the algebraic |w|^{v-1/2} prefactor of
    Gamma-type continuations so that the exponential rate comes out
    clean; a_est is the magnitude of the fitted |w| slope.  admissible
    requires a_est < pi/2 - 0.05.
    """
    if v_samples is None:
        lo = max(coef.strip_min + 0.1, -0.4)
        v_samples = [lo, 0.5, 1.0, 2.0]
    rows, ys = [], []
    nw = 28
    for v in v_samples:
        wgrid = np.linspace(2.0, w_max, nw)
        try:
            cvals = np.asarray(coef.evaluate(v + 1j * wgrid), dtype=complex)
        except Exception as exc:
            raise ContourError(f"growth sampling failed at Re s = {v}: {exc}") from exc
        y = np.log(np.abs(cvals) + 1e-300)
        for wi, yi in zip(wgrid, y):
            rows.append([1.0, v, wi, np.log(wi)])
            ys.append(yi)
    design = np.asarray(rows)
    sol, *_ = np.linalg.lstsq(design, np.asarray(ys), rcond=None)
    resid = float(np.sqrt(np.mean((design @ sol - np.asarray(ys)) ** 2)))
    a_est = float(abs(sol[2]))
    profile = GrowthProfile(a_est=a_est, p_est=float(sol[1]),
                            c_est=float(np.exp(min(sol[0], 700.0))),
                            admissible=a_est < np.pi / 2 - _GROWTH_MARGIN,
                            fit_residual=resid)
    try:
        coef.growth = profile
    except Exception:
        pass
    return profile


def _cached_growth(coef) -> GrowthProfile:
    profile = getattr(coef, "growth", None)
    return profile if profile is not None else estimate_growth(coef)


_KIND_LOWER = {"theorem1": -1.0, "theorem2": -0.5}
_ALPHA_CANDIDATES = (-0.4, -0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 100.0)


def _integrand_for(coef, q: float) -> Callable:
    """Full contour integrand (coefficient times the theorem's Gamma kernel),
    assembled through log-gamma so intermediate magnitudes stay representable."""
    if coef.kind == "theorem1":
        ln_x = np.log(q * q / 4.0)

        def F(s):
            s = np.asarray(s, dtype=complex)
            return coef.evaluate(s) * np.exp(log_gamma_c(s + 1.0) - s * ln_x)
    elif coef.kind == "theorem2":
        ln_q = np.log(q)
        ln_2 = np.log(2.0)

        def F(s):
            s = np.asarray(s, dtype=complex)
            kernel = (log_gamma_c(2.0 * s + 1.0) - log_gamma_c(0.5 - s)
                      + (6.0 * s + 1.0) * ln_2 - 4.0 * s * ln_q)
            return coef.evaluate(s) * np.exp(kernel)
    else:
        raise DomainError(f"unknown coefficient kind {coef.kind!r}")
    return F


def _growth_gate(coef):
    """Returns (profile, warnings).  Hard-rejects growth clearly past pi/2;
    boundary cases pass with a recorded warning because the Gamma kernel
    still forces decay.  A coefficient may carry a `growth_hint` marking a
    known Gamma-type growth boundary that the finite-grid fit cannot see
    (internal cancellation can leave the sampled modulus flat)."""
    profile = _cached_growth(coef)
    if profile.a_est > _GROWTH_REJECT:
        raise GrowthError(
            f"coefficient growth a_est={profile.a_est:.3f} exceeds pi/2; "
            "the contour representation does not converge")
    hint = getattr(coef, "growth_hint", None)
    warns = ()
    if not profile.admissible:
        warns = (f"growth rate a_est={profile.a_est:.3f} at the pi/2 boundary; "
                 "using observed-decay truncation",)
    elif hint is not None and hint >= np.pi / 2 - _GROWTH_MARGIN:
        warns = (f"coefficient flagged with Gamma-type growth (hint {hint:.3f}) "
                 "at the pi/2 boundary; using observed-decay truncation",)
    return profile, warns


def auto_contour(coef, q: float, tol: float = 1e-8) -> ContourSpec:
    """Pick a contour for the given coefficient and q.

    The abscissa is taken at the integrand minimum over a candidate grid
    (midpoint of the admissible strip, plus saddle-ward shifts into the
    right half-plane for coefficients regular there); the half-height
    from the observed integrand decay along that line (hard cap 400,
    with a warning when the cap binds); the step from halving stability
    of the theorem's Gamma-kernel test integral.
    """
    if q <= 0:
        raise DomainError("auto_contour requires q > 0")
    profile, warns = _growth_gate(coef)
    lo = max(coef.strip_min, _KIND_LOWER[coef.kind])
    F = _integrand_for(coef, q)

    candidates = [lo / 2.0]
    for cand in _ALPHA_CANDIDATES:
        if cand > lo + 0.05 and (cand < 0.0 or getattr(coef, "right_regular", True)):
            candidates.append(cand)
    best_alpha, best_mag = None, np.inf
    for cand in candidates:
        with np.errstate(over="ignore", invalid="ignore", under="ignore"):
            try:
                mag = abs(complex(np.asarray(F(np.array([cand + 0.0j])))[0]))
            except Exception:
                continue
        if np.isfinite(mag) and 0.0 < mag < best_mag:
            best_alpha, best_mag = cand, mag
    if best_alpha is None:
        best_alpha, best_mag = lo / 2.0, 1.0

    # truncation height from observed decay of the actual integrand
    target = max(best_mag * tol * 1e-2, 1e-290)
    T = max(20.0, 2.0 * abs(best_alpha))
    while True:
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            mag_T = abs(complex(np.asarray(F(np.array([best_alpha + 1j * T])))[0]))
        if mag_T < target:
            break
        if T >= _T_CAP:
            warns = warns + (f"integrand not below target at the half-height cap {_T_CAP}; "
                             "relying on the oscillatory tail correction",)
            break
        T = min(2.0 * T, _T_CAP)

    # step from halving stability of the Gamma-kernel test integral
    if coef.kind == "theorem1":
        ln_x = np.log(q * q / 4.0)
        test = lambda s: np.exp(log_gamma_c(s + 1.0) - s * ln_x)
        h = 0.125
    else:
        test = _integrand_for(_UnitCoefficient(), q)
        h = 0.0625
    t_height = min(T, 60.0)
    prev, _, _ = _sweep(test, best_alpha, t_height, h)
    while h / 2 >= _H_MIN:
        cur, _, _ = _sweep(test, best_alpha, t_height, h / 2)
        if abs(cur - prev) <= 0.1 * tol * max(abs(cur), 1e-300):
            break
        prev, h = cur, h / 2

    for message in warns:
        warnings.warn(message, ContourWarning, stacklevel=2)
    return ContourSpec(alpha=float(best_alpha), half_height=float(T),
                       step=float(h), tolerance=float(tol))


class _UnitCoefficient:
    """h(s) = 1: the theorem-2 kernel alone, used for step calibration."""
    kind = "theorem2"
    strip_min = -0.5
    real_symmetric = True
    right_regular = True

    @staticmethod
    def evaluate(s):
        return np.ones_like(np.asarray(s, dtype=complex))


def _validate_contour(coef, contour: ContourSpec):
    lo = max(coef.strip_min, _KIND_LOWER[coef.kind])
    if contour.alpha <= lo:
        raise DomainError(
            f"contour.alpha={contour.alpha} is outside the regularity strip "
            f"(must exceed {lo})")
    if contour.alpha >= 0.0 and not getattr(coef, "right_regular", True):
        raise DomainError("alpha >= 0 requires a coefficient regular in the right half-plane")


def _run_transform(coef, q: float, contour, tol, prefactor: float) -> TransformResult:
    if q <= 0:
        raise DomainError("transform requires q > 0")
    recorded = []
    if contour is None:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", ContourWarning)
            contour = auto_contour(coef, q, tol if tol is not None else 1e-8)
        recorded = [str(c.message) for c in caught]
    else:
        _validate_contour(coef, contour)
        _, warns = _growth_gate(coef)
        recorded = list(warns)
    F = _integrand_for(coef, q)
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        integral = integrate_contour(F, contour)
    raw = prefactor * integral.value
    if not coef.real_symmetric:
        raise ContourError(
            "coefficient is not flagged real-symmetric; the transform value "
            f"is complex: {raw}")
    return TransformResult(
        value=float(raw.real),
        error_estimate=float(prefactor * integral.error_estimate),
        imag_residue=float(abs(raw.imag)),
        nodes=integral.nodes,
        tail_bound=float(prefactor * integral.tail_bound),
        alpha=contour.alpha,
        warnings=tuple(recorded),
    )


def theorem1_transform(coef, q: float, contour: ContourSpec | None = None,
                       tol: float | None = None) -> TransformResult:
    """Hankel transform of f(x) = g(x^2) from the coefficient continuation.

    A(q) = (1/pi i q^2) int g(s) Gamma(s+1) (q^2/4)^{-s} ds — twice the
    standard inverse-Mellin normalization, divided by q^2.
    """
    if coef.kind != "theorem1":
        raise DomainError("theorem1_transform requires a theorem1 coefficient")
    if q <= 0:
        raise DomainError("transform requires q > 0")
    return _run_transform(coef, q, contour, tol, 2.0 / (q * q))


def theorem2_transform(coef, q: float, contour: ContourSpec | None = None,
                       tol: float | None = None) -> TransformResult:
    """Hankel transform of f(x) = h(x^4) from the coefficient continuation.

    A(q) = (1/q^2 sqrt(pi) i) int h(s) Gamma(2s+1)/Gamma(1/2-s)
           2^{6s+1} q^{-4s} ds, contour in (-1/2, 0) or shifted right.
    """
    if coef.kind != "theorem2":
        raise DomainError("theorem2_transform requires a theorem2 coefficient")
    if q <= 0:
        raise DomainError("transform requires q > 0")
    return _run_transform(coef, q, contour, tol, 2.0 * np.sqrt(np.pi) / (q * q))
