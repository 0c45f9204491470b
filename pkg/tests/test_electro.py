import math

import pytest
from hypothesis import given, strategies as st

from unitcharge.casimir import CavitySpec, casimir_pressure
from unitcharge.electro import (
    balance_charge,
    electrostatic_stress,
    fine_structure,
    solve_balance_numeric,
    surface_field,
    sweep,
)
from unitcharge.errors import UnitSystemError
from unitcharge.units import CHARGE_GAUSSIAN, CHARGE_SI, FIELD_GAUSSIAN, PRESSURE, Quantity, UnitSystem, hbar_c


def esu(q):
    return Quantity(q, CHARGE_GAUSSIAN, UnitSystem.GAUSSIAN)


def cm(a):
    return CavitySpec.from_text(f"{a}cm")


def test_surface_field():
    e = surface_field(esu(1.0), cm(2))
    assert e.dimension == FIELD_GAUSSIAN
    assert e.value == pytest.approx(1.0, rel=1e-15)
    assert surface_field(esu(0.0), cm(2)).value == 0.0


@given(st.floats(1e-6, 1e6), st.floats(1e-3, 1e3))
def test_field_inverse_square(q, a):
    assert surface_field(esu(q), cm(2 * a)).value == pytest.approx(surface_field(esu(q), cm(a)).value / 4, rel=1e-13)


def test_si_charge_rejected():
    with pytest.raises(UnitSystemError):
        surface_field(Quantity(1e-19, CHARGE_SI, UnitSystem.SI), cm(1))


def test_stress_from_field():
    # E_n = sqrt(8 pi) gives unit stress; pick Q so that 4Q/a^2 = sqrt(8 pi) at a = 2
    q = math.sqrt(8 * math.pi)
    assert electrostatic_stress(esu(q), cm(2)).value == pytest.approx(1.0, rel=1e-15)


def test_stress_closed_form():
    p = electrostatic_stress(esu(1.0), cm(1))
    assert p.value == pytest.approx(2 / math.pi, rel=1e-15)
    assert p.value == pytest.approx(0.63662, rel=1e-5)
    assert p.dimension == PRESSURE == casimir_pressure(cm(1)).dimension


@given(st.floats(1e-12, 1e3))
def test_stress_positive(q):
    assert electrostatic_stress(esu(q), cm(1)).value > 0


def test_balance_values():
    r = balance_charge()
    q_ref = math.sqrt(math.pi**2 * hbar_c("gaussian").value / 1440)
    assert r.charge_gaussian.value == pytest.approx(q_ref, rel=1e-15)
    assert r.charge_gaussian.value == pytest.approx(4.655e-10, rel=1e-3)
    assert r.charge_si.dimension == CHARGE_SI
    assert f"{r.charge_si.value:.3g}" == "1.55e-19"
    assert r.alpha == pytest.approx(math.pi**2 / 1440, rel=1e-12)
    assert r.alpha * 1440 / math.pi**2 == pytest.approx(1.0, rel=1e-15)


def test_fine_structure():
    fs = fine_structure(balance_charge())
    assert fs.alpha == pytest.approx(6.85389e-3, rel=1e-5)
    assert fs.inverse == pytest.approx(145.903, rel=1e-5)
    assert round(fs.inverse, 2) == 145.90


def test_discrepancy_conventions():
    r = balance_charge()
    assert r.alpha_exp == pytest.approx(1 / 137.035987, rel=1e-15)
    assert r.discrepancy_a == pytest.approx(1 - 137.035987 / (1440 / math.pi**2), rel=1e-12)
    assert r.discrepancy_b == pytest.approx((1440 / math.pi**2 - 137.035987) / 137.035987, rel=1e-12)
    assert round(100 * r.discrepancy_a) == 6
    assert round(100 * r.discrepancy_b, 1) == 6.5


@pytest.mark.parametrize("a", [1e-9, 1e-6, 1e-3, 1.0, 1e3])
def test_balance_holds(a):
    cav = CavitySpec.meters(a)
    r = balance_charge(cav)
    g = cav.in_system("gaussian")
    p_c = casimir_pressure(g)
    p_e = electrostatic_stress(r.charge_gaussian, g)
    assert abs((p_c + p_e).value) <= 1e-12 * abs(p_c.value)


def test_numeric_and_symbolic_agree():
    for a in (1e-9, 1.0):
        q_num = solve_balance_numeric(CavitySpec.meters(a))
        assert q_num.value == pytest.approx(balance_charge().charge_gaussian.value, rel=1e-12)


def test_size_independence():
    qs = [r.charge_gaussian.value for r in sweep(CavitySpec.meters(a) for a in (1e-9, 1e-6, 1e-3, 1.0, 1e3))]
    for q in qs:
        assert q == pytest.approx(qs[0], rel=1e-12)


def test_parallel_sweep_preserves_order():
    cavs = [CavitySpec.meters(a) for a in (1e-9, 1.0, 1e-3)]
    serial = sweep(cavs)
    parallel = sweep(cavs, parallel=True)
    assert [r.diameter for r in parallel] == [c.diameter for c in cavs]
    assert [r.charge_si for r in parallel] == [r.charge_si for r in serial]


def test_empty_sweep():
    with pytest.raises(ValueError):
        sweep([])
