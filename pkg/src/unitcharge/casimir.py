"""Casimir energy and pressure of a spherical cavity of diameter ``a``.

Both summation routes share one skeleton: the energy is
``(hbar c / 8)(pi / a) * sum over lambda != 0 of 4 pi * M(xi = 2 pi lambda)``
with the regulator removed. The three-dimensional route uses the ``j0``
moment and ends negative, the one-dimensional route the ``cos`` moment and
ends positive, three times larger.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .errors import ConsistencyError, DomainError, DimensionError
from .lattice_sum import identify_free_space
from .regmoments import Kernel, limit_coefficient, limit_eps_zero
from .units import LENGTH, Quantity, UnitSystem, convert, hbar_c, parse_length

__all__ = [
    "Route",
    "CavitySpec",
    "CasimirResult",
    "bernoulli",
    "zeta_even",
    "zeta_series",
    "assemble_series",
    "series_coefficient",
    "closed_coefficient",
    "casimir_energy",
    "casimir_pressure",
    "pressure_finite_difference",
]


class Route(str, enum.Enum):
    THREE_D = "3d"
    ONE_D = "1d"

    @classmethod
    def parse(cls, value) -> Route:
        if isinstance(value, cls):
            return value
        aliases = {"3d": cls.THREE_D, "three_d": cls.THREE_D, "1d": cls.ONE_D, "one_d": cls.ONE_D}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise ValueError(f"unknown route {value!r}; expected '3d' or '1d'") from None

    @property
    def kernel(self) -> Kernel:
        return Kernel.J0 if self is Route.THREE_D else Kernel.COSINE


@dataclass(frozen=True)
class CavitySpec:
    diameter: Quantity

    def __post_init__(self):
        if not isinstance(self.diameter, Quantity) or self.diameter.dimension != LENGTH:
            raise DimensionError("cavity diameter must be a length Quantity")
        if not self.diameter.value > 0:
            raise DomainError(f"cavity diameter must be positive, got {self.diameter}")

    @classmethod
    def from_text(cls, text: str, system=UnitSystem.GAUSSIAN) -> CavitySpec:
        return cls(parse_length(text, system))

    @classmethod
    def meters(cls, value: float) -> CavitySpec:
        return cls(Quantity(value, LENGTH, UnitSystem.SI))

    @property
    def system(self) -> UnitSystem:
        return self.diameter.system

    def in_system(self, system) -> CavitySpec:
        return CavitySpec(convert(self.diameter, system))

    def scaled(self, factor: float) -> CavitySpec:
        return CavitySpec(self.diameter * factor)

    @property
    def surface_area(self) -> Quantity:
        return 4 * math.pi * (self.diameter / 2) ** 2


@dataclass(frozen=True)
class CasimirResult:
    route: Route
    diameter: Quantity
    energy: Quantity
    pressure: Quantity | None
    series_coefficient: float
    zeta4: float
    lambda_max: int | None = None
    series_partial: float | None = None


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n (B_1 = +1/2) by the Akiyama-Tanigawa algorithm."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def zeta_even(s: int) -> float:
    """Riemann zeta at a positive even integer from the Bernoulli closed form."""
    if isinstance(s, bool) or int(s) != s or s < 2 or s % 2:
        raise DomainError(f"zeta_even needs an even integer >= 2, got {s}")
    s = int(s)
    k = s // 2
    b = bernoulli(s)
    coeff = (-1) ** (k + 1) * b / (2 * math.factorial(s))
    return float(coeff) * (2 * math.pi) ** s


def zeta_series(s: int, n_max: int = 10_000) -> tuple[float, float]:
    """Direct partial sum to ``n_max`` plus an Euler-Maclaurin tail.

    Returns ``(value, tail_bound)`` where ``tail_bound`` bounds the error of
    the corrected value by the first dropped correction term.
    """
    n = float(n_max)
    partial = float(_kernels.inverse_power_sum(float(s), int(n_max)))
    tail = n ** (1 - s) / (s - 1) - 0.5 * n**-s + s * n ** (-s - 1) / 12
    dropped = s * (s + 1) * (s + 2) * n ** (-s - 3) / 720
    return partial + tail, dropped


def assemble_series(route, lambda_max: int) -> float:
    """Partial coefficient of ``hbar c / a`` from the regulator-free moments.

    Sums every ``|lambda| <= lambda_max`` except the free-space index.
    """
    route = Route.parse(route)
    if lambda_max < 1:
        raise DomainError(f"lambda_max must be >= 1, got {lambda_max}")
    terms = []
    for lam in range(-lambda_max, lambda_max + 1):
        if identify_free_space(lam):
            continue
        terms.append(4 * math.pi * limit_eps_zero(route.kernel, 2 * math.pi * lam))
    terms.sort(key=abs)
    return (math.pi / 8) * math.fsum(terms)


def series_coefficient(route) -> float:
    """Full coefficient assembled through zeta(4).

    With ``M -> c/xi^4`` and both signs of lambda, the sum is
    ``(pi/8) * 4 pi * 2 c zeta(4) / (2 pi)^4 = c zeta(4) / (16 pi^2)``.
    """
    route = Route.parse(route)
    return float(limit_coefficient(route.kernel)) * zeta_even(4) / (16 * math.pi**2)


def closed_coefficient(route) -> float:
    """``-pi^2/720`` for the 3D route, ``+pi^2/240`` for the 1D route."""
    route = Route.parse(route)
    return -math.pi**2 / 720 if route is Route.THREE_D else math.pi**2 / 240


def _energy_value(coefficient: float, cavity: CavitySpec) -> Quantity:
    return coefficient * hbar_c(cavity.system) / cavity.diameter


def casimir_energy(cavity: CavitySpec, route=Route.THREE_D, lambda_max: int | None = None) -> CasimirResult:
    """Renormalized Casimir energy in the cavity's unit system.

    The free-space term is never represented numerically; it is excluded by
    index. The zeta-assembled coefficient is checked against the closed form.
    """
    route = Route.parse(route)
    coefficient = series_coefficient(route)
    closed = closed_coefficient(route)
    if abs(coefficient - closed) > 1e-13 * abs(closed):
        raise ConsistencyError(
            f"assembled coefficient {coefficient!r} disagrees with closed form {closed!r}",
            route=route.value,
        )
    partial = assemble_series(route, lambda_max) if lambda_max is not None else None
    pressure = casimir_pressure(cavity) if route is Route.THREE_D else None
    return CasimirResult(
        route=route,
        diameter=cavity.diameter,
        energy=_energy_value(coefficient, cavity),
        pressure=pressure,
        series_coefficient=coefficient,
        zeta4=zeta_even(4),
        lambda_max=lambda_max,
        series_partial=partial,
    )


def pressure_finite_difference(cavity: CavitySpec, rel_step: float = 1e-5) -> Quantity:
    """``-dE/da`` over the sphere's area, with a central difference in ``a``."""
    h = cavity.diameter * rel_step
    coefficient = series_coefficient(Route.THREE_D)
    e_plus = _energy_value(coefficient, CavitySpec(cavity.diameter + h))
    e_minus = _energy_value(coefficient, CavitySpec(cavity.diameter - h))
    force = -(e_plus - e_minus) / (2 * h)
    return force / cavity.surface_area


def casimir_pressure(cavity: CavitySpec, check: bool = True) -> Quantity:
    """Inward vacuum stress ``-pi hbar c / (720 a^4)``."""
    p = -math.pi * hbar_c(cavity.system) / (720 * cavity.diameter**4)
    if check:
        fd = pressure_finite_difference(cavity)
        if abs(fd.value - p.value) > 1e-8 * abs(p.value):
            raise ConsistencyError("closed-form pressure disagrees with the energy derivative", closed=p.value, fd=fd.value)
    return p
