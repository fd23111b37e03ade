"""Large-q asymptotic series for J0/J1 integrals and the odd-derivative
Hankel expansion, all with optimal truncation at the smallest term."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

from .errors import DomainError
from .special_functions import bessel_k0

__all__ = [
    "SeriesResult", "DerivativeTable",
    "willis_j0_series", "willis_j1_series", "hankel0_odd_series",
    "a6_large_q", "RegimeWarning",
]


class RegimeWarning(UserWarning):
    """Asymptotic formula used outside its comfortable regime."""


@dataclass(frozen=True)
class SeriesResult:
    """Optimally truncated partial sums: value = partial_sums[truncation_index],
    first_omitted is the magnitude of the next term beyond it."""
    value: float
    partial_sums: list = field(default_factory=list)
    truncation_index: int = 0
    first_omitted: float = 0.0


@dataclass(frozen=True)
class DerivativeTable:
    """f^(k)(0) for k = 0..K, supplied by the caller as plain numbers."""
    values: list
    origin: str = ""

    def require(self, k: int, series: str) -> float:
        if k >= len(self.values):
            raise DomainError(
                f"{series} needs f^({k})(0); the table only holds orders "
                f"0..{len(self.values) - 1}")
        return float(self.values[k])


def _truncate_optimally(terms):
    """Sum up to (and including) the last term before the first local
    minimum of term magnitudes; never past it."""
    stop = len(terms) - 1
    for m in range(len(terms) - 1):
        if abs(terms[m + 1]) > abs(terms[m]):
            stop = m
            break
    psums = []
    acc = 0.0
    for t in terms:
        acc += t
        psums.append(acc)
    first_omitted = abs(terms[stop + 1]) if stop + 1 < len(terms) else abs(terms[stop])
    return SeriesResult(value=psums[stop], partial_sums=psums,
                        truncation_index=stop, first_omitted=first_omitted)


def willis_j0_series(derivs: DerivativeTable, q: float, max_terms: int) -> SeriesResult:
    """int_0^inf J0(qx) f(x) dx ~ sum_m (-1)^m (2m-1)!!/(2^m m!) f^(2m)(0) / q^{2m+1}.

    The displayed expansion is f(0)/q - (1/2) f''(0)/q^3
    + (3/8) f''''(0)/q^5 - (15/48) f^(6)(0)/q^7 + ...
    """
    if q <= 0 or max_terms < 1:
        raise DomainError("willis_j0_series requires q > 0 and max_terms >= 1")
    terms = []
    coef = 1.0  # (2m-1)!!/(2^m m!)
    for m in range(max_terms):
        terms.append((-1.0) ** m * coef * derivs.require(2 * m, "willis_j0_series")
                     / q ** (2 * m + 1))
        coef *= (2 * m + 1) / (2.0 * (m + 1))
    return _truncate_optimally(terms)


def willis_j1_series(derivs: DerivativeTable, q: float, max_terms: int) -> SeriesResult:
    """int_0^inf J1(qx) f(x) dx ~ f(0)/q
    + sum_m (-1)^m (2m-1)!!/(2^m m!) f^(2m+1)(0) / q^{2m+2}.

    The constant head term f(0)/q is followed by the odd-derivative tail
    f'(0)/q^2 - (1/2) f'''(0)/q^4 + (3/8) f^(5)(0)/q^6 + ...; the
    coefficient law of the displayed terms was checked against the exact
    J1 Laplace-transform oracle before being extended.
    """
    if q <= 0 or max_terms < 1:
        raise DomainError("willis_j1_series requires q > 0 and max_terms >= 1")
    terms = [derivs.require(0, "willis_j1_series") / q]
    coef = 1.0
    for m in range(max_terms - 1):
        terms.append((-1.0) ** m * coef * derivs.require(2 * m + 1, "willis_j1_series")
                     / q ** (2 * m + 2))
        coef *= (2 * m + 1) / (2.0 * (m + 1))
    if len(terms) == 1:
        return SeriesResult(value=terms[0], partial_sums=terms[:],
                            truncation_index=0, first_omitted=0.0)
    # the head term is not part of the alternating tail; truncate the tail only
    tail = _truncate_optimally(terms[1:])
    psums = [terms[0]] + [terms[0] + p for p in tail.partial_sums]
    idx = tail.truncation_index + 1
    return SeriesResult(value=psums[idx], partial_sums=psums,
                        truncation_index=idx, first_omitted=tail.first_omitted)


def hankel0_odd_series(derivs: DerivativeTable, q: float, max_terms: int) -> SeriesResult:
    """int_0^inf J0(qx) f(x) x dx ~ (1/q^3) sum_m (-1)^{m+1}
    Gamma(2m+2)/Gamma^2(m+1) f^(2m+1)(0) (2q)^{-2m}.

    Only odd derivatives enter; an even f (all odd derivatives zero)
    yields exactly zero.
    """
    if q <= 0 or max_terms < 1:
        raise DomainError("hankel0_odd_series requires q > 0 and max_terms >= 1")
    terms = []
    coef = 1.0  # Gamma(2m+2)/Gamma(m+1)^2 = (2m+1)! / (m!)^2
    for m in range(max_terms):
        terms.append((-1.0) ** (m + 1) * coef * derivs.require(2 * m + 1, "hankel0_odd_series")
                     / q ** 3 * (2.0 * q) ** (-2 * m))
        coef *= (2 * m + 2) * (2 * m + 3) / float((m + 1) * (m + 1))
    if all(t == 0.0 for t in terms):
        return SeriesResult(value=0.0, partial_sums=[0.0] * len(terms),
                            truncation_index=0, first_omitted=0.0)
    return _truncate_optimally(terms)


def a6_large_q(q: float, a: float, c: float) -> float:
    """Leading large-q behavior of the A.6 integral: e^{(ac)^2} K0(qc)."""
    if q <= 0 or a <= 0 or c <= 0:
        raise DomainError("a6_large_q requires q, a, c > 0")
    if q * c < 5.0:
        warnings.warn(f"a6_large_q called at qc = {q * c:.3g} < 5; the leading "
                      "term is unreliable there", RegimeWarning, stacklevel=2)
    return math.exp((a * c) ** 2) * bessel_k0(q * c)
