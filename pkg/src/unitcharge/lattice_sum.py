"""Poisson summation checks on the two textbook families.

The Gaussian ``exp(-pi n^2)`` is its own Fourier transform, and the
Lorentzian ``1/(beta^2 + n^2)`` transforms into a two-sided geometric series
summing to ``(pi/beta) coth(pi beta)``. Both identities are checked here
numerically; the three-dimensional sum is reduced analytically elsewhere and
only the zero-index bookkeeping lives in this module.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np
from scipy import integrate

from . import _kernels
from .errors import DomainError, NumericError

__all__ = [
    "ModeIndex",
    "PoissonIndex",
    "SumCheckReport",
    "direct_sum_1d",
    "lorentzian_closed_form",
    "lorentzian_tail",
    "geometric_side_sum",
    "fourier_transform_numeric",
    "poisson_check",
    "identify_free_space",
    "FAMILIES",
    "DEFAULT_TRUNCATION",
]

FAMILIES = ("gaussian", "lorentzian")
DEFAULT_TRUNCATION = {"gaussian": 6, "lorentzian": 1_000_000}
DEFAULT_TOLERANCE = {"gaussian": 1e-14, "lorentzian": 1e-10}


@dataclass(frozen=True)
class ModeIndex:
    """Integer mode numbers; wave numbers are ``(pi/a) * n``."""

    n1: int
    n2: int
    n3: int

    @property
    def is_zero_mode(self) -> bool:
        return self.n1 == 0 and self.n2 == 0 and self.n3 == 0

    def wave_vector(self, diameter: float) -> tuple[float, float, float]:
        k = math.pi / diameter
        return (k * self.n1, k * self.n2, k * self.n3)


@dataclass(frozen=True)
class PoissonIndex:
    lambda1: int
    lambda2: int = 0
    lambda3: int = 0

    @property
    def xi(self) -> tuple[float, float, float]:
        return (2 * math.pi * self.lambda1, 2 * math.pi * self.lambda2, 2 * math.pi * self.lambda3)

    @property
    def xi_norm(self) -> float:
        return 2 * math.pi * math.sqrt(self.lambda1**2 + self.lambda2**2 + self.lambda3**2)

    @property
    def free_space(self) -> bool:
        return self.lambda1 == 0 and self.lambda2 == 0 and self.lambda3 == 0


def identify_free_space(index) -> bool:
    """True for the zero Poisson index, whose term is the free-space energy.

    Accepts a :class:`PoissonIndex`, a 3-tuple or a single integer (for the
    radially reduced sums that carry one scalar index).
    """
    if isinstance(index, PoissonIndex):
        return index.free_space
    if isinstance(index, (tuple, list)):
        return PoissonIndex(*index).free_space
    return PoissonIndex(int(index)).free_space


@dataclass(frozen=True)
class SumCheckReport:
    family: str
    param: float | None
    lhs_value: float
    rhs_value: float
    closed_form: float
    truncation_N: int
    rhs_terms: int
    tail_correction: float
    abs_diff: float
    tolerance: float
    converged: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _evaluate_summand(summand: Callable, n: np.ndarray) -> np.ndarray:
    try:
        values = np.asarray(summand(n), dtype=np.float64)
        if values.shape != n.shape:
            raise ValueError
    except (TypeError, ValueError):
        values = np.array([float(summand(int(k))) for k in n], dtype=np.float64)
    return values


def direct_sum_1d(summand: Callable, N: int) -> float:
    """Sum ``summand(n)`` for ``n = -N..N``.

    The summand is called once on the whole integer array if it vectorizes,
    otherwise element by element. The result is correctly rounded
    (``math.fsum``), so evaluation order does not matter.
    """
    if N < 1:
        raise DomainError(f"truncation bound must be >= 1, got {N}")
    n = np.arange(-N, N + 1, dtype=np.int64)
    values = _evaluate_summand(summand, n)
    bad = ~np.isfinite(values)
    if bad.any():
        first = int(n[np.argmax(bad)])
        raise NumericError(f"non-finite summand at n={first}", n=first)
    return math.fsum(values)


def _check_beta(beta: float) -> float:
    beta = float(beta)
    if not beta > 0 or not math.isfinite(beta):
        raise DomainError(f"beta must be a positive finite number, got {beta}")
    return beta


def lorentzian_closed_form(beta: float) -> float:
    """``(pi/beta) coth(pi beta)``, written with expm1 so large beta stays exact."""
    beta = _check_beta(beta)
    return (math.pi / beta) * (1.0 + 2.0 / math.expm1(2 * math.pi * beta))


def lorentzian_tail(beta: float, N: int) -> float:
    """Euler-Maclaurin estimate of the two tails ``|n| > N``.

    Integral, endpoint and first-derivative terms; the next term is of order
    ``N**-5`` and is dropped.
    """
    b2 = beta * beta
    f = 1.0 / (b2 + N * N)
    df = -2.0 * N * f * f
    one_side = math.atan(beta / N) / beta - 0.5 * f - df / 12.0
    return 2.0 * one_side


def geometric_side_sum(beta: float, S: int) -> float:
    """Transformed side, ``sum over |s| <= S of (pi/beta) exp(-2 pi beta |s|)``."""
    beta = _check_beta(beta)
    s = np.arange(S, 0, -1, dtype=np.float64)
    terms = np.exp(-2 * math.pi * beta * s)
    return (math.pi / beta) * (1.0 + 2.0 * math.fsum(terms))


def fourier_transform_numeric(family: str, s: int, param: float | None = None) -> float:
    """``integral of f(x) exp(i 2 pi s x) dx`` by adaptive quadrature.

    Both families are even, so only the cosine part survives.
    """
    xi = 2 * math.pi * s
    upper = np.inf
    if family == "gaussian":
        f = lambda x: math.exp(-math.pi * x * x)
        upper = 12.0  # exp(-144 pi) is far below double precision
    elif family == "lorentzian":
        beta = _check_beta(param)
        f = lambda x: 1.0 / (beta * beta + x * x)
    else:
        raise ValueError(f"unknown family {family!r}")
    # QUADPACK warns once it reaches the roundoff floor; callers check accuracy
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        if xi == 0:
            val, _ = integrate.quad(f, 0, upper, epsabs=0, epsrel=1e-13, limit=200)
        elif math.isinf(upper):
            val, _ = integrate.quad(f, 0, upper, weight="cos", wvar=xi, epsabs=1e-15, limlst=100)
        else:
            val, _ = integrate.quad(f, 0, upper, weight="cos", wvar=xi, epsabs=1e-16, epsrel=1e-13, limit=200)
    return 2.0 * val


def poisson_check(
    family: str,
    param: float | None = None,
    N: int | None = None,
    *,
    rhs_terms: int | None = None,
    tail_correction: bool = True,
    tolerance: float | None = None,
) -> SumCheckReport:
    """Evaluate both sides of the Poisson summation formula for one family.

    For the Lorentzian the direct sum's truncation tail (about ``2/N``) is
    added back through :func:`lorentzian_tail` unless ``tail_correction`` is
    off; without it ``abs_diff`` is the raw truncation error.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown summand family {family!r}; expected one of {FAMILIES}")
    N = DEFAULT_TRUNCATION[family] if N is None else int(N)
    if N < 1:
        raise DomainError(f"truncation bound must be >= 1, got {N}")
    tolerance = DEFAULT_TOLERANCE[family] if tolerance is None else float(tolerance)

    if family == "gaussian":
        param = None
        n = np.arange(N, 0, -1, dtype=np.float64)
        lhs = 1.0 + 2.0 * math.fsum(np.exp(-math.pi * n * n))
        tail = 0.0  # first omitted term is below exp(-49 pi)
        S = N if rhs_terms is None else int(rhs_terms)
        s = np.arange(S, 0, -1, dtype=np.float64)
        rhs = 1.0 + 2.0 * math.fsum(np.exp(-math.pi * s * s))
        closed = math.pi**0.25 / math.gamma(0.75)
    else:
        beta = _check_beta(param)
        param = beta
        lhs = float(_kernels.lorentzian_sum(beta, N))
        tail = lorentzian_tail(beta, N) if tail_correction else 0.0
        lhs += tail
        S = max(1, math.ceil(40.0 / (2 * math.pi * beta))) if rhs_terms is None else int(rhs_terms)
        rhs = geometric_side_sum(beta, S)
        closed = lorentzian_closed_form(beta)

    diff = abs(lhs - rhs)
    return SumCheckReport(
        family=family,
        param=param,
        lhs_value=lhs,
        rhs_value=rhs,
        closed_form=closed,
        truncation_N=N,
        rhs_terms=S,
        tail_correction=tail,
        abs_diff=diff,
        tolerance=tolerance,
        converged=bool(diff < tolerance),
    )
