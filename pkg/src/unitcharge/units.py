"""Dimension-checked quantities in Gaussian and SI units.

Exponents are exact fractions. In Gaussian units charge is not an
independent dimension, so an esu carries ``g^1/2 cm^3/2 s^-1`` and the
charge axis stays zero; in SI the charge axis counts coulombs.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ConversionError, DimensionError, UnitChargeError, UnitSystemError

__all__ = [
    "Dimension",
    "UnitSystem",
    "Quantity",
    "ConstantsTable",
    "CONSTANTS",
    "make_quantity",
    "convert",
    "hbar_c",
    "parse_length",
    "format_unit",
    "constants_records",
    "DIMENSIONLESS",
    "MASS",
    "LENGTH",
    "TIME",
    "VELOCITY",
    "FORCE",
    "ENERGY",
    "ACTION",
    "PRESSURE",
    "ENERGY_LENGTH",
    "CHARGE_SI",
    "CHARGE_GAUSSIAN",
    "FIELD_GAUSSIAN",
]


def _exp(value) -> Fraction:
    f = Fraction(value)
    if f.denominator > 2:
        raise DimensionError(f"exponent {value} is not a multiple of 1/2")
    return f


@dataclass(frozen=True)
class Dimension:
    mass_exp: Fraction = Fraction(0)
    length_exp: Fraction = Fraction(0)
    time_exp: Fraction = Fraction(0)
    charge_exp: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("mass_exp", "length_exp", "time_exp", "charge_exp"):
            object.__setattr__(self, name, _exp(getattr(self, name)))

    def _tuple(self):
        return (self.mass_exp, self.length_exp, self.time_exp, self.charge_exp)

    def __mul__(self, other: Dimension) -> Dimension:
        return Dimension(*(a + b for a, b in zip(self._tuple(), other._tuple())))

    def __truediv__(self, other: Dimension) -> Dimension:
        return Dimension(*(a - b for a, b in zip(self._tuple(), other._tuple())))

    def __pow__(self, power) -> Dimension:
        p = Fraction(power)
        return Dimension(*(a * p for a in self._tuple()))

    def inverse(self) -> Dimension:
        return self ** -1

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self._tuple())

    @property
    def is_dimensionless(self) -> bool:
        return not any(self._tuple())

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self._tuple()) + ")"


DIMENSIONLESS = Dimension()
MASS = Dimension(1, 0, 0)
LENGTH = Dimension(0, 1, 0)
TIME = Dimension(0, 0, 1)
VELOCITY = LENGTH / TIME
FORCE = Dimension(1, 1, -2)
ENERGY = Dimension(1, 2, -2)
ACTION = ENERGY * TIME
PRESSURE = Dimension(1, -1, -2)
ENERGY_LENGTH = ENERGY * LENGTH
CHARGE_SI = Dimension(0, 0, 0, 1)
CHARGE_GAUSSIAN = Dimension(Fraction(1, 2), Fraction(3, 2), -1)
FIELD_GAUSSIAN = CHARGE_GAUSSIAN / LENGTH**2


class UnitSystem(str, enum.Enum):
    GAUSSIAN = "gaussian"
    SI = "si"

    @classmethod
    def parse(cls, value) -> UnitSystem:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise UnitSystemError(f"unknown unit system {value!r}") from None


def _check_system_dimension(dim: Dimension, system: UnitSystem) -> None:
    if system is UnitSystem.GAUSSIAN and dim.charge_exp != 0:
        raise DimensionError("Gaussian quantities carry charge in mechanical exponents")
    if system is UnitSystem.SI and not dim.is_integral:
        raise DimensionError(f"SI dimension must have integer exponents, got {dim}")


@dataclass(frozen=True)
class Quantity:
    value: float
    dimension: Dimension = field(default=DIMENSIONLESS)
    system: UnitSystem = UnitSystem.SI

    def __post_init__(self):
        value = float(self.value)
        if not math.isfinite(value):
            raise UnitChargeError(f"quantity value must be finite, got {self.value!r}")
        object.__setattr__(self, "value", value)
        system = UnitSystem.parse(self.system)
        object.__setattr__(self, "system", system)
        _check_system_dimension(self.dimension, system)

    def _same_kind(self, other: Quantity, op: str) -> None:
        if not isinstance(other, Quantity):
            raise DimensionError(f"cannot {op} Quantity and {type(other).__name__}")
        if other.system is not self.system:
            raise UnitSystemError(f"cannot {op} {self.system.value} and {other.system.value} quantities")
        if other.dimension != self.dimension:
            raise DimensionError(f"cannot {op} dimensions {self.dimension} and {other.dimension}")

    def __add__(self, other: Quantity) -> Quantity:
        self._same_kind(other, "add")
        return Quantity(self.value + other.value, self.dimension, self.system)

    def __sub__(self, other: Quantity) -> Quantity:
        self._same_kind(other, "subtract")
        return Quantity(self.value - other.value, self.dimension, self.system)

    def __neg__(self) -> Quantity:
        return Quantity(-self.value, self.dimension, self.system)

    def __mul__(self, other) -> Quantity:
        if isinstance(other, Quantity):
            if other.system is not self.system:
                raise UnitSystemError("cannot multiply quantities from different unit systems")
            return Quantity(self.value * other.value, self.dimension * other.dimension, self.system)
        return Quantity(self.value * float(other), self.dimension, self.system)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Quantity:
        if isinstance(other, Quantity):
            if other.system is not self.system:
                raise UnitSystemError("cannot divide quantities from different unit systems")
            return Quantity(self.value / other.value, self.dimension / other.dimension, self.system)
        return Quantity(self.value / float(other), self.dimension, self.system)

    def __rtruediv__(self, other) -> Quantity:
        return Quantity(float(other) / self.value, self.dimension.inverse(), self.system)

    def __pow__(self, power) -> Quantity:
        p = Fraction(power)
        return Quantity(self.value ** float(p), self.dimension**p, self.system)

    def sqrt(self) -> Quantity:
        if self.value < 0:
            raise UnitChargeError("square root of a negative quantity")
        return Quantity(math.sqrt(self.value), self.dimension ** Fraction(1, 2), self.system)

    def _ordered(self, other: Quantity) -> tuple[float, float]:
        self._same_kind(other, "compare")
        return self.value, other.value

    def __lt__(self, other):
        a, b = self._ordered(other)
        return a < b

    def __le__(self, other):
        a, b = self._ordered(other)
        return a <= b

    def __gt__(self, other):
        a, b = self._ordered(other)
        return a > b

    def __ge__(self, other):
        a, b = self._ordered(other)
        return a >= b

    @property
    def unit(self) -> str:
        return format_unit(self.dimension, self.system)

    def to(self, system, charge_exp=None) -> Quantity:
        return convert(self, system, charge_exp=charge_exp)

    def __str__(self):
        return f"{self.value:.10g} {self.unit}"


def make_quantity(value: float, dimension: Dimension, system=UnitSystem.SI) -> Quantity:
    """Build a tagged quantity; raises for NaN or infinite values."""
    return Quantity(value, dimension, UnitSystem.parse(system))


@dataclass(frozen=True)
class ConstantsTable:
    """Fundamental constants frozen at the values quoted alongside the calculation."""

    c: Quantity
    h: Quantity
    hbar: Quantity
    e_exp: Quantity
    esu_per_coulomb: float
    alpha_exp: float

    def records(self) -> list[dict]:
        rows = []
        for name in ("c", "h", "hbar", "e_exp"):
            q = getattr(self, name)
            rows.append({"name": name, "value": q.value, "unit": q.unit, "system": q.system.value})
        rows.append({"name": "esu_per_coulomb", "value": self.esu_per_coulomb, "unit": "esu/C", "system": "conversion"})
        rows.append({"name": "alpha_exp", "value": self.alpha_exp, "unit": "1", "system": "dimensionless"})
        return rows


_C_SI = 2.997924562e8  # m/s
_H_SI = 6.6260755e-34  # J s

CONSTANTS = ConstantsTable(
    c=Quantity(_C_SI, VELOCITY, UnitSystem.SI),
    h=Quantity(_H_SI, ACTION, UnitSystem.SI),
    hbar=Quantity(_H_SI / (2 * math.pi), ACTION, UnitSystem.SI),
    e_exp=Quantity(1.60217733e-19, CHARGE_SI, UnitSystem.SI),
    # 1 C = (c in cm/s) / 10 esu
    esu_per_coulomb=_C_SI * 100 / 10,
    alpha_exp=1 / 137.035987,
)

_KG_TO_G = 1e3
_M_TO_CM = 1e2


def _si_to_gaussian_factor(dim: Dimension) -> float:
    # exponents are integers in SI, so float powers are exact up to rounding
    return (
        _KG_TO_G ** float(dim.mass_exp)
        * _M_TO_CM ** float(dim.length_exp)
        * CONSTANTS.esu_per_coulomb ** float(dim.charge_exp)
    )


def _gaussian_dimension(si_dim: Dimension) -> Dimension:
    q = si_dim.charge_exp
    return Dimension(si_dim.mass_exp + q / 2, si_dim.length_exp + 3 * q / 2, si_dim.time_exp - q, 0)


def _infer_charge_exp(dim: Dimension) -> Fraction:
    if dim == CHARGE_GAUSSIAN:
        return Fraction(1)
    if dim.is_integral:
        return Fraction(0)
    raise ConversionError(
        f"Gaussian dimension {dim} is ambiguous in SI; pass charge_exp explicitly"
    )


def convert(q: Quantity, target, charge_exp=None) -> Quantity:
    """Express ``q`` in the ``target`` unit system.

    Going from Gaussian to SI the coulomb exponent is not recoverable from
    mechanical exponents alone. Integral dimensions default to no charge and
    a bare esu dimension maps to coulombs; anything else needs ``charge_exp``.
    Only relations free of the vacuum permittivity (charge, force, F = qE
    fields, mechanical quantities) convert correctly this way.
    """
    target = UnitSystem.parse(target)
    if q.system is target:
        return q
    if target is UnitSystem.GAUSSIAN:
        factor = _si_to_gaussian_factor(q.dimension)
        return Quantity(q.value * factor, _gaussian_dimension(q.dimension), target)

    qexp = _infer_charge_exp(q.dimension) if charge_exp is None else Fraction(charge_exp)
    si_dim = Dimension(
        q.dimension.mass_exp - qexp / 2,
        q.dimension.length_exp - 3 * qexp / 2,
        q.dimension.time_exp + qexp,
        qexp,
    )
    if not si_dim.is_integral:
        raise ConversionError(f"charge exponent {qexp} does not fit Gaussian dimension {q.dimension}")
    return Quantity(q.value / _si_to_gaussian_factor(si_dim), si_dim, target)


def hbar_c(system=UnitSystem.SI) -> Quantity:
    """Product of the pinned hbar and c (J m in SI, erg cm in Gaussian)."""
    return convert(CONSTANTS.hbar * CONSTANTS.c, system)


_LENGTH_UNITS = {"m": 1.0, "cm": 1e-2, "mm": 1e-3, "um": 1e-6, "nm": 1e-9}
_LENGTH_RE = re.compile(r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*([a-z]*)\s*$")


def parse_length(text: str, system=UnitSystem.GAUSSIAN) -> Quantity:
    """Parse ``"<value><unit>"`` with unit in m, cm, mm, um, nm (default m)."""
    m = _LENGTH_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse length {text!r}")
    value, unit = float(m.group(1)), m.group(2) or "m"
    if unit not in _LENGTH_UNITS:
        raise ValueError(f"unknown length unit {unit!r} (expected one of {', '.join(_LENGTH_UNITS)})")
    return convert(Quantity(value * _LENGTH_UNITS[unit], LENGTH, UnitSystem.SI), system)


_NAMED_UNITS = {
    UnitSystem.SI: {
        DIMENSIONLESS: "1",
        LENGTH: "m",
        VELOCITY: "m/s",
        FORCE: "N",
        ENERGY: "J",
        ACTION: "J*s",
        PRESSURE: "Pa",
        ENERGY_LENGTH: "J*m",
        CHARGE_SI: "C",
        FORCE / CHARGE_SI: "V/m",
    },
    UnitSystem.GAUSSIAN: {
        DIMENSIONLESS: "1",
        LENGTH: "cm",
        VELOCITY: "cm/s",
        FORCE: "dyn",
        ENERGY: "erg",
        ACTION: "erg*s",
        PRESSURE: "dyn/cm^2",
        ENERGY_LENGTH: "erg*cm",
        CHARGE_GAUSSIAN: "esu",
        FIELD_GAUSSIAN: "statV/cm",
    },
}
_BASE_SYMBOLS = {
    UnitSystem.SI: ("kg", "m", "s", "C"),
    UnitSystem.GAUSSIAN: ("g", "cm", "s", "C"),
}


def format_unit(dim: Dimension, system) -> str:
    system = UnitSystem.parse(system)
    named = _NAMED_UNITS[system].get(dim)
    if named is not None:
        return named
    parts = []
    for sym, exp in zip(_BASE_SYMBOLS[system], dim._tuple()):
        if exp == 1:
            parts.append(sym)
        elif exp:
            parts.append(f"{sym}^{exp}")
    return "*".join(parts)


def constants_records() -> list[dict]:
    return CONSTANTS.records()
