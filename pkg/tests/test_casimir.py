import math

import pytest
from hypothesis import given, strategies as st

from unitcharge.casimir import (
    CavitySpec,
    Route,
    assemble_series,
    bernoulli,
    casimir_energy,
    casimir_pressure,
    closed_coefficient,
    pressure_finite_difference,
    series_coefficient,
    zeta_even,
    zeta_series,
)
from unitcharge.errors import DimensionError, DomainError
from unitcharge.regmoments import limit_coefficient
from unitcharge.units import ENERGY, PRESSURE, Quantity, UnitSystem, hbar_c
from fractions import Fraction

ZETA4 = 1.0823232337111381915


def test_bernoulli_numbers():
    assert [bernoulli(n) for n in range(7)] == [1, Fraction(1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42)]


@pytest.mark.parametrize("s, expected", [(2, math.pi**2 / 6), (4, math.pi**4 / 90), (6, math.pi**6 / 945)])
def test_zeta_even_closed_forms(s, expected):
    assert zeta_even(s) == pytest.approx(expected, rel=2e-16)


def test_zeta4_reference():
    assert zeta_even(4) == pytest.approx(ZETA4, rel=2e-16)


@pytest.mark.parametrize("s", [2, 4])
def test_zeta_series_oracle(s):
    value, bound = zeta_series(s, 10_000)
    assert abs(value - zeta_even(s)) < 1e-12
    assert bound < 1e-12


@pytest.mark.parametrize("s", [3, 0, -2, 2.5, True])
def test_zeta_even_domain(s):
    with pytest.raises(DomainError):
        zeta_even(s)


def test_coefficients():
    assert series_coefficient("3d") == pytest.approx(-ZETA4 / (8 * math.pi**2), rel=1e-15)
    assert series_coefficient("3d") == pytest.approx(-math.pi**2 / 720, rel=1e-15)
    assert series_coefficient("1d") == pytest.approx(math.pi**2 / 240, rel=1e-15)
    assert closed_coefficient("1d") / closed_coefficient("3d") == pytest.approx(-3, rel=1e-15)


def test_first_term_share():
    share = assemble_series("3d", 1) / series_coefficient("3d")
    assert share == pytest.approx(1 / ZETA4, rel=1e-14)
    assert share == pytest.approx(0.92393, rel=1e-5)


def test_series_at_100():
    rel = abs(assemble_series("3d", 100) / series_coefficient("3d") - 1)
    assert rel < 1e-6
    assert rel < 100**-3 / 3 / ZETA4


@pytest.mark.parametrize("n", [1, 2, 7, 50, 100])
def test_route_ratio_term_by_term(n):
    # exact in the rational kernel limits, to rounding in the float sums
    assert limit_coefficient("cosine") / limit_coefficient("j0") == -3
    assert assemble_series("1d", n) / assemble_series("3d", n) == pytest.approx(-3.0, rel=1e-15)


@given(st.integers(1, 300))
def test_series_within_tail_bound(n):
    full = series_coefficient("3d")
    # remainder of 2 * sum_{k>n} k^-4, scaled by |c|/(16 pi^2) per unit zeta
    bound = 2 * (n ** -3 / 3) * 2 / (16 * math.pi**2)
    part = assemble_series("3d", n)
    assert 0 < part - full <= bound * 1.0000001


def test_series_rejects_bad_cutoff():
    with pytest.raises(DomainError):
        assemble_series("3d", 0)


def test_energy_values():
    cav = CavitySpec(Quantity(1.0, CavitySpec.meters(1).diameter.dimension, UnitSystem.GAUSSIAN))
    hc = hbar_c(UnitSystem.GAUSSIAN).value
    e3 = casimir_energy(cav, "3d")
    e1 = casimir_energy(cav, "1d")
    assert e3.energy.dimension == ENERGY
    assert e3.energy.value == pytest.approx(-(math.pi**2 / 720) * hc, rel=1e-15)
    assert e3.series_coefficient == pytest.approx(-0.0137078, rel=1e-5)
    assert e1.energy.value == pytest.approx(math.pi**2 / 240 * hc, rel=1e-15)
    assert e1.energy.value / e3.energy.value == pytest.approx(-3.0, rel=1e-15)
    assert e1.pressure is None and e3.pressure is not None
    assert e3.zeta4 == zeta_even(4)


def test_energy_with_partial_series():
    res = casimir_energy(CavitySpec.meters(1.0), Route.ONE_D, lambda_max=100)
    assert res.lambda_max == 100
    assert res.series_partial == pytest.approx(res.series_coefficient, rel=1e-6)


@given(st.floats(1e-9, 1e4), st.sampled_from(["3d", "1d"]))
def test_route_signs(a, route):
    e = casimir_energy(CavitySpec.meters(a), route).energy.value
    assert (e < 0) if route == "3d" else (e > 0)


@pytest.mark.parametrize("route", ["3d", "1d"])
def test_energy_scaling(route):
    sizes = [1e-9, 1e-6, 1.0, 1e3]
    products = [casimir_energy(CavitySpec.meters(a), route).energy.value * a for a in sizes]
    for p in products:
        assert p == pytest.approx(products[0], rel=1e-12)


def test_pressure_values():
    p1 = casimir_pressure(CavitySpec.meters(1.0))
    assert p1.dimension == PRESSURE
    assert p1.value == pytest.approx(-math.pi * hbar_c("si").value / 720, rel=1e-15)
    assert p1.value == pytest.approx(-1.3794e-28, rel=1e-4)
    p_um = casimir_pressure(CavitySpec.meters(1e-6))
    assert p_um.value == pytest.approx(p1.value * 1e24, rel=1e-12)
    assert p_um.value == pytest.approx(-1.3794e-4, rel=1e-4)


@given(st.floats(1e-10, 1e5))
def test_pressure_negative_and_quartic(a):
    p = casimir_pressure(CavitySpec.meters(a), check=False).value
    assert p < 0
    assert p * a**4 == pytest.approx(-math.pi * hbar_c("si").value / 720, rel=1e-12)


@pytest.mark.parametrize("a", [1e-6, 1e-3, 1.0, 37.0])
@pytest.mark.parametrize("system", ["si", "gaussian"])
def test_pressure_matches_energy_derivative(a, system):
    cav = CavitySpec.meters(a).in_system(system)
    closed = casimir_pressure(cav, check=False)
    fd = pressure_finite_difference(cav)
    assert fd.value == pytest.approx(closed.value, rel=1e-8)


def test_cavity_validation():
    with pytest.raises(DomainError):
        CavitySpec.meters(0.0)
    with pytest.raises(DimensionError):
        CavitySpec(Quantity(1.0, ENERGY))
    assert CavitySpec.from_text("2cm").diameter.value == 2.0
