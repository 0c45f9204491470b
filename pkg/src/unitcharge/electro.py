"""Surface stress of a charged sphere and the charge that balances the vacuum stress.

Everything here runs in Gaussian units, where the outward stress of a
normal field is ``E^2 / 8 pi`` and the fine-structure constant is
``Q^2 / (hbar c)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .casimir import CavitySpec, casimir_pressure
from .errors import ConsistencyError, DimensionError, UnitSystemError
from .units import CHARGE_GAUSSIAN, CONSTANTS, LENGTH, Quantity, UnitSystem, convert, hbar_c

__all__ = [
    "BalanceResult",
    "FineStructure",
    "surface_field",
    "electrostatic_stress",
    "balance_charge",
    "solve_balance_numeric",
    "fine_structure",
    "sweep",
]

BISECTION_BRACKET_ESU = 1e-8


@dataclass(frozen=True)
class BalanceResult:
    charge_gaussian: Quantity
    charge_si: Quantity
    alpha: float
    alpha_exp: float
    discrepancy_a: float
    discrepancy_b: float
    diameter: Quantity | None = None
    charge_numeric: Quantity | None = None

    @property
    def alpha_inverse(self) -> float:
        return 1.0 / self.alpha

    @property
    def discrepancy(self) -> float:
        return self.discrepancy_a


class FineStructure(NamedTuple):
    alpha: float
    inverse: float


def _gaussian_charge(Q: Quantity) -> Quantity:
    if Q.system is not UnitSystem.GAUSSIAN:
        raise UnitSystemError("charge must be in Gaussian units (esu); convert it first")
    if Q.dimension != CHARGE_GAUSSIAN:
        raise DimensionError(f"expected a charge, got dimension {Q.dimension}")
    return Q


def surface_field(Q: Quantity, cavity: CavitySpec) -> Quantity:
    """Normal field at the surface from Gauss's law, ``4 Q / a^2``."""
    Q = _gaussian_charge(Q)
    a = convert(cavity.diameter, UnitSystem.GAUSSIAN)
    return 4 * math.pi * Q / (4 * math.pi * (a / 2) ** 2)


def electrostatic_stress(Q: Quantity, cavity: CavitySpec) -> Quantity:
    """Outward Maxwell stress ``E_n^2 / 8 pi = 2 Q^2 / (pi a^4)``."""
    return surface_field(Q, cavity) ** 2 / (8 * math.pi)


def solve_balance_numeric(cavity: CavitySpec, rtol: float = 1e-15) -> Quantity:
    """Bisect on Q in [0, 1e-8 esu] for zero net stress on the surface."""
    gauss_cavity = cavity.in_system(UnitSystem.GAUSSIAN)
    p_vac = casimir_pressure(gauss_cavity, check=False)

    def net(q: float) -> float:
        p = p_vac + electrostatic_stress(Quantity(q, CHARGE_GAUSSIAN, UnitSystem.GAUSSIAN), gauss_cavity)
        return p.value

    lo, hi = 0.0, BISECTION_BRACKET_ESU
    if not (net(lo) < 0 < net(hi)):
        raise ConsistencyError("stress balance is not bracketed by [0, 1e-8 esu]")
    for _ in range(400):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi) or hi - lo <= rtol * hi:
            break
        if net(mid) < 0:
            lo = mid
        else:
            hi = mid
    return Quantity(0.5 * (lo + hi), CHARGE_GAUSSIAN, UnitSystem.GAUSSIAN)


def balance_charge(cavity: CavitySpec | None = None) -> BalanceResult:
    """Charge whose outward stress cancels the inward Casimir stress.

    The diameter cancels, so ``Q = sqrt(pi^2 hbar c / 1440)`` for any cavity;
    ``cavity`` only selects where the numeric cross-check is performed
    (1 cm when omitted).
    """
    check_cavity = cavity if cavity is not None else CavitySpec(Quantity(1.0, LENGTH, UnitSystem.GAUSSIAN))
    gauss_cavity = check_cavity.in_system(UnitSystem.GAUSSIAN)
    hc = hbar_c(UnitSystem.GAUSSIAN)
    Q = (math.pi**2 * hc / 1440).sqrt()

    p_c = casimir_pressure(gauss_cavity)
    p_e = electrostatic_stress(Q, gauss_cavity)
    if p_c.dimension != p_e.dimension:
        raise DimensionError("vacuum and electrostatic stresses are not commensurable")
    if abs((p_c + p_e).value) > 1e-12 * abs(p_c.value):
        raise ConsistencyError("closed-form charge does not balance the stresses", residual=(p_c + p_e).value)

    q_num = solve_balance_numeric(gauss_cavity)
    if abs(q_num.value - Q.value) > 1e-12 * Q.value:
        raise ConsistencyError("bisection and closed-form charges disagree", closed=Q.value, numeric=q_num.value)

    alpha_q = Q**2 / hc
    if not alpha_q.dimension.is_dimensionless:
        raise DimensionError("Q^2 / hbar c is not dimensionless")
    alpha = alpha_q.value
    alpha_exp = CONSTANTS.alpha_exp
    return BalanceResult(
        charge_gaussian=Q,
        charge_si=convert(Q, UnitSystem.SI),
        alpha=alpha,
        alpha_exp=alpha_exp,
        discrepancy_a=abs(alpha - alpha_exp) / alpha_exp,
        discrepancy_b=abs(1 / alpha - 1 / alpha_exp) / (1 / alpha_exp),
        diameter=cavity.diameter if cavity is not None else None,
        charge_numeric=q_num,
    )


def fine_structure(result: BalanceResult) -> FineStructure:
    return FineStructure(result.alpha, 1.0 / result.alpha)


def sweep(cavities, parallel: bool = False) -> list[BalanceResult]:
    """Balance charge at every cavity size, in input order."""
    cavities = list(cavities)
    if not cavities:
        raise ValueError("sweep needs at least one cavity")
    if parallel:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor() as pool:
            return list(pool.map(balance_charge, cavities))
    return [balance_charge(c) for c in cavities]
