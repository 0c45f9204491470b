"""Casimir stress of a spherical cavity and the surface charge that balances it."""
from .casimir import CasimirResult, CavitySpec, Route, casimir_energy, casimir_pressure, zeta_even
from .electro import BalanceResult, balance_charge, fine_structure
from .units import CONSTANTS, Quantity, UnitSystem, hbar_c

__version__ = "0.1.0"

__all__ = [
    "BalanceResult",
    "CONSTANTS",
    "CasimirResult",
    "CavitySpec",
    "Quantity",
    "Route",
    "UnitSystem",
    "balance_charge",
    "casimir_energy",
    "casimir_pressure",
    "fine_structure",
    "hbar_c",
    "zeta_even",
]
