"""Cutoff-regularized radial moments.

Both routes reduce to the integral

    M(eps, xi) = int_0^inf p^3 exp(-eps p) K(xi p) dp

with ``K = j0`` (angular average of a plane wave over the sphere) or
``K = cos`` (one-dimensional transform). The closed forms are rational in
``(eps, xi)``; their ``eps -> 0`` limits are ``-2/xi^4`` and ``+6/xi^4``.

The numerical oracle never touches the closed forms. On the real axis the
integrand oscillates with an envelope many orders above the result, so for
small ``eps`` it loses everything to cancellation. The default contour is
therefore the imaginary axis ``p = i t sign(xi)``, where the plane wave
becomes ``exp(-|xi| t)`` and the cutoff turns into ``cos(eps t)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import integrate, optimize, special

from . import _kernels
from .errors import DomainError, QuadratureError

__all__ = [
    "Kernel",
    "Contour",
    "RationalMoment",
    "QuadratureSpec",
    "QuadratureResult",
    "moment_closed_form",
    "moment_quadrature",
    "limit_eps_zero",
    "limit_coefficient",
    "j0",
    "sphere_plane_wave_integral",
]


class Kernel(str, enum.Enum):
    J0 = "j0"
    COSINE = "cosine"

    @classmethod
    def parse(cls, value) -> Kernel:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown kernel {value!r}; expected 'j0' or 'cosine'") from None


class Contour(str, enum.Enum):
    AUTO = "auto"
    REAL = "real"
    IMAGINARY = "imaginary"


_KERNEL_CODE = {Kernel.J0: _kernels.J0, Kernel.COSINE: _kernels.COSINE}
_LIMIT_COEFFICIENT = {Kernel.J0: Fraction(-2), Kernel.COSINE: Fraction(6)}


def _check_eps(eps: float) -> float:
    eps = float(eps)
    if not eps > 0 or not math.isfinite(eps):
        raise DomainError(f"cutoff eps must be positive and finite, got {eps}; use limit_eps_zero for eps -> 0")
    return eps


def moment_closed_form(kernel, eps: float, xi: float) -> float:
    kernel = Kernel.parse(kernel)
    eps = _check_eps(eps)
    e2, x2 = eps * eps, float(xi) * float(xi)
    r2 = e2 + x2
    if kernel is Kernel.J0:
        return 2.0 * (3.0 * e2 - x2) / r2**3
    return 6.0 * (e2 * e2 - 6.0 * e2 * x2 + x2 * x2) / r2**4


def limit_coefficient(kernel) -> Fraction:
    """Exact ``c`` with ``lim_{eps->0} M = c / xi^4``."""
    return _LIMIT_COEFFICIENT[Kernel.parse(kernel)]


def limit_eps_zero(kernel, xi: float) -> float:
    """Leading term of the rational form as ``eps -> 0``; taken symbolically."""
    xi = float(xi)
    if xi == 0:
        raise DomainError("moment diverges at xi = 0 (the free-space term)")
    return float(limit_coefficient(kernel)) / xi**4


@dataclass(frozen=True)
class RationalMoment:
    kernel: Kernel
    eps: float
    xi: float
    value: float

    @classmethod
    def evaluate(cls, kernel, eps: float, xi: float) -> RationalMoment:
        kernel = Kernel.parse(kernel)
        return cls(kernel, float(eps), float(xi), moment_closed_form(kernel, eps, xi))

    @property
    def limit(self) -> float:
        return limit_eps_zero(self.kernel, self.xi)


@dataclass(frozen=True)
class QuadratureSpec:
    """Controls for :func:`moment_quadrature`.

    ``upper_cutoff`` of None picks the point where the analytic tail bound
    of the envelope drops below ``tail_tol`` times the result's scale;
    ``panel_count`` is the panel budget, exceeding it is an error.
    """

    upper_cutoff: float | None = None
    panel_count: int = 200_000
    scheme: str = "fixed"
    contour: Contour = Contour.AUTO
    order: int = 20
    rtol: float = 1e-10
    tail_tol: float = 1e-14

    def __post_init__(self):
        if self.scheme not in ("fixed", "adaptive"):
            raise ValueError(f"scheme must be 'fixed' or 'adaptive', got {self.scheme!r}")
        object.__setattr__(self, "contour", Contour(self.contour))
        if self.panel_count < 1 or self.order < 2:
            raise ValueError("panel_count must be >= 1 and order >= 2")
        if self.upper_cutoff is not None and not self.upper_cutoff > 0:
            raise ValueError("upper_cutoff must be positive")


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    contour: Contour
    panels: int
    upper_cutoff: float


def _envelope_tail(decay: float, x: float, power: int = 3) -> float:
    # int_x^inf t^power exp(-decay t) dt
    k = power + 1
    return special.gammaincc(k, decay * x) * math.gamma(k) / decay**k


def _auto_cutoff(decay: float, target: float, power: int = 3) -> float:
    if _envelope_tail(decay, 0.0, power) <= target:
        return 1.0 / decay
    hi = 1.0 / decay
    while _envelope_tail(decay, hi, power) > target:
        hi *= 2.0
    return optimize.brentq(lambda x: _envelope_tail(decay, x, power) - target, 0.0, hi, xtol=1e-12 * hi)


def _panel_edges(contour: Contour, kernel: Kernel, eps: float, xi: float, cutoff: float, budget: int) -> np.ndarray:
    axi = abs(xi)
    if contour is Contour.REAL and axi > 0:
        # kernel zeros: j0 at k pi/xi, cos at (k + 1/2) pi/xi
        offset = 0.0 if kernel is Kernel.J0 else 0.5
        step = math.pi / axi
        n = math.ceil(cutoff / step - offset)
        if n > budget:
            raise QuadratureError(
                f"real-axis quadrature needs {n} panels, budget is {budget}",
                panels_needed=n,
                error_estimate=math.inf,
            )
        zeros = (np.arange(n, dtype=np.float64) + offset) * step
        zeros = zeros[(zeros > 0) & (zeros < cutoff)]
        return np.concatenate(([0.0], zeros, [cutoff]))
    decay = eps if contour is Contour.REAL else axi
    width = 2.0 / decay
    if contour is Contour.IMAGINARY:
        width = min(width, math.pi / (2 * eps))
    n = max(1, math.ceil(cutoff / width))
    if n > budget:
        raise QuadratureError(f"quadrature needs {n} panels, budget is {budget}", panels_needed=n, error_estimate=math.inf)
    return np.linspace(0.0, cutoff, n + 1)


def _sum_ascending(values: np.ndarray) -> float:
    return math.fsum(values[np.argsort(np.abs(values))])


def moment_quadrature(kernel, eps: float, xi: float, spec: QuadratureSpec | None = None) -> QuadratureResult:
    """Numerical value of the regularized moment, independent of the closed form.

    Raises :class:`QuadratureError` with the error estimate when the
    requested relative tolerance cannot be certified.
    """
    kernel = Kernel.parse(kernel)
    eps = _check_eps(eps)
    xi = float(xi)
    spec = spec or QuadratureSpec()
    contour = spec.contour
    if contour is Contour.AUTO:
        contour = Contour.IMAGINARY if xi != 0 else Contour.REAL
    if contour is Contour.IMAGINARY and xi == 0:
        raise DomainError("imaginary-axis contour needs xi != 0")

    decay = eps if contour is Contour.REAL else abs(xi)
    # scale of the answer; j0 carries an extra 1/|xi| on the rotated contour
    scale = 2.0 / (eps * eps + xi * xi) ** 2
    if contour is Contour.IMAGINARY and kernel is Kernel.J0:
        envelope_scale, power = 1.0 / abs(xi), 2
    else:
        envelope_scale, power = 1.0, 3
    if spec.upper_cutoff is None:
        cutoff = _auto_cutoff(decay, spec.tail_tol * scale / envelope_scale, power)
    else:
        cutoff = float(spec.upper_cutoff)
    tail_bound = envelope_scale * _envelope_tail(decay, cutoff, power)

    edges = _panel_edges(contour, kernel, eps, xi, cutoff, spec.panel_count)
    code = _KERNEL_CODE[kernel]
    ccode = _kernels.REAL if contour is Contour.REAL else _kernels.IMAGINARY

    if spec.scheme == "fixed":
        nodes, weights = np.polynomial.legendre.leggauss(spec.order)
        coarse_nodes, coarse_weights = np.polynomial.legendre.leggauss(max(2, spec.order * 3 // 4))
        panels = _kernels.panel_integrals(code, ccode, eps, xi, edges, nodes, weights)
        coarse = _kernels.panel_integrals(code, ccode, eps, xi, edges, coarse_nodes, coarse_weights)
        value = _sum_ascending(panels)
        discretization = abs(value - _sum_ascending(coarse))
    else:
        f = _scalar_integrand(code, ccode, eps, xi)
        panels = np.empty(len(edges) - 1)
        discretization = 0.0
        for i in range(len(edges) - 1):
            panels[i], err = integrate.quad(f, edges[i], edges[i + 1], epsabs=0.0, epsrel=1e-13, limit=100)
            discretization += err
        value = _sum_ascending(panels)

    # rounding in each panel is relative to the panel, not to the sum
    roundoff = np.finfo(float).eps * math.sqrt(len(panels)) * math.fsum(np.abs(panels)) * 4
    error = discretization + roundoff + tail_bound
    if not math.isfinite(value) or error > spec.rtol * abs(value):
        raise QuadratureError(
            f"quadrature error estimate {error:.3g} exceeds rtol {spec.rtol:g} of |value| {abs(value):.3g}",
            value=value,
            error_estimate=error,
            contour=contour.value,
        )
    return QuadratureResult(value, error, contour, len(panels), cutoff)


def _scalar_integrand(code, ccode, eps, xi):
    def f(p):
        return float(_kernels.numpy_backend._kernel_values(code, ccode, eps, xi, np.float64(p)))

    return f


def j0(x):
    """Spherical Bessel function of order zero, ``sin(x)/x``."""
    return np.sinc(np.asarray(x, dtype=np.float64) / np.pi)


def sphere_plane_wave_integral(xi: float, p: float, direction=(0.7, 1.3), n_theta=None, n_phi=None) -> complex:
    """Integrate ``exp(i xi p cos w)`` over the unit sphere of ``p`` directions.

    ``w`` is the angle between ``p`` at polar angles (theta, phi) and ``xi``
    at ``direction = (theta', phi')``. Gauss-Legendre in ``cos(theta)``,
    trapezoid (spectrally exact for periodic data) in ``phi``.
    """
    k = abs(xi * p)
    n_theta = n_theta or int(max(64, 1.5 * k + 40))
    n_phi = n_phi or int(max(64, 2 * k + 40))
    u, wu = np.polynomial.legendre.leggauss(n_theta)
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    tp, pp = direction
    sin_t = np.sqrt(1.0 - u * u)
    cos_w = sin_t[:, None] * math.sin(tp) * np.cos(phi[None, :] - pp) + u[:, None] * math.cos(tp)
    vals = np.exp(1j * xi * p * cos_w)
    return complex(wu @ vals.sum(axis=1) * (2 * np.pi / n_phi))
