"""Constants record invariants and dimensionless-momentum conversions."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vacuum_eps.constants import (
    DimensionlessMomentum,
    PhysicalConstants,
    SPACELIKE,
    TIMELIKE,
    constants,
    from_dimensionless,
    to_dimensionless,
)


def test_inverse_alpha_reference_value():
    cst = constants()
    assert 1.0 / cst.alpha == pytest.approx(137.035999084, abs=1e-8)


def test_alpha_consistency_identity():
    # Independent oracle: evaluate the defining combination directly.
    cst = constants()
    derived = cst.e**2 / (4.0 * math.pi * cst.eps0_ref * cst.hbar * cst.c)
    assert abs(derived / cst.alpha - 1.0) < 1e-9


def test_eps0_matches_published_rounding():
    assert constants().eps0_ref == pytest.approx(8.8541878128e-12, rel=1e-10)


def test_mu0_implied_identity():
    cst = constants()
    assert cst.mu0_ref == 1.0 / (cst.eps0_ref * cst.c**2)
    assert cst.eps0_ref * cst.mu0_ref * cst.c**2 == pytest.approx(1.0, rel=1e-15)


def test_all_fields_positive_enforced():
    cst = constants()
    with pytest.raises(ValueError):
        PhysicalConstants(
            hbar=-cst.hbar, c=cst.c, e=cst.e, eps0_ref=cst.eps0_ref,
            alpha=cst.alpha, m_e=cst.m_e, electron_rest_energy=cst.electron_rest_energy,
        )


def test_inconsistent_alpha_rejected():
    cst = constants()
    with pytest.raises(ValueError):
        PhysicalConstants(
            hbar=cst.hbar, c=cst.c, e=cst.e, eps0_ref=cst.eps0_ref,
            alpha=cst.alpha * 1.001, m_e=cst.m_e,
            electron_rest_energy=cst.electron_rest_energy,
        )


def test_zero_maps_to_zero_spacelike():
    q = to_dimensionless(0.0, constants().m_e)
    assert q.q2 == 0.0
    assert q.tag == SPACELIKE


def test_static_compton_wavevector_gives_unit_q2():
    # Static source at |kvec| = 1/lambda_C: k^2 = -(m c / hbar)^2.
    cst = constants()
    k2 = -((cst.m_e * cst.c / cst.hbar) ** 2)
    q = to_dimensionless(k2, cst.m_e)
    assert q.tag == SPACELIKE
    assert q.q2 == pytest.approx(1.0, rel=1e-12)


def test_pair_threshold_is_q2_of_four():
    cst = constants()
    k2 = 4.0 * (cst.m_e * cst.c / cst.hbar) ** 2
    q = to_dimensionless(k2, cst.m_e)
    assert q.tag == TIMELIKE
    assert q.q2 == pytest.approx(4.0, rel=1e-12)


def test_nonpositive_mass_rejected():
    with pytest.raises(ValueError):
        to_dimensionless(1.0, 0.0)
    with pytest.raises(ValueError):
        to_dimensionless(1.0, -1e-30)


def test_momentum_record_validation():
    m_e = constants().m_e
    with pytest.raises(ValueError):
        DimensionlessMomentum(-1.0, SPACELIKE, m_e)
    with pytest.raises(ValueError):
        DimensionlessMomentum(1.0, "lightlike", m_e)
    with pytest.raises(ValueError):
        DimensionlessMomentum(1.0, SPACELIKE, 0.0)


@settings(max_examples=200, deadline=None)
@given(
    magnitude=st.floats(min_value=1e4, max_value=1e40),
    timelike=st.booleans(),
    mass_factor=st.floats(min_value=1.0, max_value=1e6),
)
def test_round_trip_over_wide_magnitudes(magnitude, timelike, mass_factor):
    mass = constants().m_e * mass_factor
    k2 = magnitude if timelike else -magnitude
    back = from_dimensionless(to_dimensionless(k2, mass))
    assert back == pytest.approx(k2, rel=1e-12)
