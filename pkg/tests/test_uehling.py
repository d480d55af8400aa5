"""Screened Coulomb potential: transform accuracy and asymptotic branches.

The inverse-Fourier-transform result is validated against an independent
route: folding the absorptive part into a real Laplace-type spectral
integral,

    correction - 1 = (2/pi) int_1^inf dt Im chi(4 t^2) exp(-2 rho t) / t,

which never touches the oscillatory kernel or the Feynman-parameter
quadrature path being tested.
"""

import math

import numpy as np
import pytest

from vacuum_eps.constants import constants
from vacuum_eps.dispersion import im_chi
from vacuum_eps.particles import builtin_particle_set
from vacuum_eps.quadrature import ToleranceSpec, integrate_adaptive
from vacuum_eps.uehling import (
    LARGE_R_LIMIT,
    SMALL_R_LIMIT,
    potential_asymptotic,
    potential_kspace,
    potential_rspace,
)

CST = constants()
ALPHA = CST.alpha
EULER_GAMMA = float(np.euler_gamma)


def spectral_correction(rho: float) -> float:
    """Independent oracle for correction_factor - 1 (see module docstring)."""

    def integrand(t: np.ndarray) -> np.ndarray:
        shape = np.sqrt(1.0 - 1.0 / (t * t)) * (1.0 + 1.0 / (2.0 * t * t))
        return (ALPHA / 3.0) * shape * np.exp(-2.0 * rho * t) / t

    upper = 1.0 + max(60.0 / rho, 10.0)
    res = integrate_adaptive(integrand, 1.0, upper,
                             ToleranceSpec(rel_tol=1e-12, abs_tol=1e-30, max_evaluations=10**7))
    return (2.0 / math.pi) * res.value


def small_r_branch(rho: float) -> float:
    return (2.0 * ALPHA / (3.0 * math.pi)) * (math.log(1.0 / rho) - EULER_GAMMA - 5.0 / 6.0)


def large_r_branch(rho: float) -> float:
    return (ALPHA / (4.0 * math.sqrt(math.pi))) * math.exp(-2.0 * rho) / rho**1.5


def test_spectral_oracle_consistency():
    # The oracle itself reproduces the small-r closed form where it is valid.
    assert spectral_correction(1e-4) == pytest.approx(small_r_branch(1e-4), rel=1e-3)


@pytest.mark.parametrize("rho", [1e-3, 0.5, 5.0])
def test_transform_matches_spectral_oracle(rho):
    sample = potential_rspace(rho)
    oracle = spectral_correction(rho)
    assert sample.correction_factor - 1.0 == pytest.approx(oracle, rel=1e-5)


def test_transform_matches_small_r_branch():
    sample = potential_rspace(1e-3)
    branch = small_r_branch(1e-3)
    assert abs((sample.correction_factor - 1.0) - branch) < 0.05 * branch


def test_long_range_screening_vanishes():
    sample = potential_rspace(1e3)
    assert abs(sample.correction_factor - 1.0) < 1e-12


def test_correction_monotone_decreasing():
    rhos = [1e-3, 1e-2, 0.1, 1.0, 5.0]
    corrections = [potential_rspace(r).correction_factor for r in rhos]
    assert all(b < a for a, b in zip(corrections, corrections[1:]))
    assert all(c >= 1.0 for c in corrections)


def test_transform_rejects_nonpositive_radius():
    with pytest.raises(ValueError):
        potential_rspace(0.0)
    with pytest.raises(ValueError):
        potential_rspace(-1.0)


def test_source_charge_linearity():
    base = potential_rspace(0.5)
    doubled = potential_rspace(0.5, source_charge=2.0 * CST.e)
    assert doubled.phi == pytest.approx(2.0 * base.phi, rel=1e-12)
    assert doubled.correction_factor == pytest.approx(base.correction_factor, rel=1e-12)


def test_phi_value_against_bare_coulomb():
    rho = 2.0
    sample = potential_rspace(rho)
    radius = rho * CST.hbar / (CST.m_e * CST.c)
    bare = CST.e / (4.0 * math.pi * CST.eps0_ref * radius)
    assert sample.phi == pytest.approx(bare * sample.correction_factor, rel=1e-14)


def test_asymptotic_small_r_exact_zero_point():
    rho = math.exp(-EULER_GAMMA - 5.0 / 6.0)
    sample = potential_asymptotic(rho, "small_r")
    assert sample.correction_factor == pytest.approx(1.0, abs=1e-16)


def test_asymptotic_large_r_frozen_values():
    # Closed-form oracle evaluated from constants, then frozen literals.
    assert large_r_branch(5.0) == pytest.approx(4.18e-9, rel=5e-3)
    assert large_r_branch(10.0) == pytest.approx(6.71e-14, rel=5e-3)
    s5 = potential_asymptotic(5.0, "large_r")
    assert s5.correction_factor - 1.0 == pytest.approx(large_r_branch(5.0), rel=1e-12)
    s10 = potential_asymptotic(10.0, "large_r")
    assert s10.correction_factor - 1.0 == pytest.approx(large_r_branch(10.0), rel=1e-12)


def test_asymptotic_regime_windows_enforced():
    with pytest.raises(ValueError):
        potential_asymptotic(0.5, "small_r")  # needs rho < 0.1
    with pytest.raises(ValueError):
        potential_asymptotic(1.0, "large_r")  # needs rho > 2
    with pytest.raises(ValueError):
        potential_asymptotic(1.0, "medium_r")
    assert SMALL_R_LIMIT == 0.1
    assert LARGE_R_LIMIT == 2.0


def test_kspace_constant_permittivity_limit():
    # At a tiny argument eps ~ eps0_ref, so the potential is pure Coulomb.
    kvec2 = 1e-12 * CST.compton_wavenumber_e**2
    phi = potential_kspace(kvec2, builtin_particle_set("electron"))
    assert phi == pytest.approx(CST.e / (kvec2 * CST.eps0_ref), rel=1e-12)


def test_kspace_pole_at_zero():
    with pytest.raises(ValueError):
        potential_kspace(0.0, builtin_particle_set("electron"))


def test_kspace_enhancement_at_1e6():
    kvec2 = 1e6 * CST.compton_wavenumber_e**2
    phi = potential_kspace(kvec2, builtin_particle_set("electron"))
    coulomb = CST.e / (kvec2 * CST.eps0_ref)
    assert phi / coulomb == pytest.approx(1.0 / (1.0 - 9.4065e-3), abs=1e-4)


def test_kspace_enhancement_monotone():
    pset = builtin_particle_set("electron")
    scale = CST.compton_wavenumber_e**2
    ratios = []
    for q2 in np.geomspace(1e-2, 1e6, 9):
        kvec2 = float(q2) * scale
        ratios.append(potential_kspace(kvec2, pset) * kvec2 * CST.eps0_ref / CST.e)
    assert all(b > a for a, b in zip(ratios, ratios[1:]))
