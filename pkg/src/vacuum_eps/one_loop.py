"""One-loop vacuum susceptibility and the running permittivity.

All susceptibilities are per unit charge squared and dimensionless.  The
spacelike argument is q2 = hbar^2 |k^2| / (m^2 c^2) >= 0.

Cutoff form (nested Feynman-parameter x radial-momentum integral, with the
3-momentum integral reduced to its radial part by isotropy):

    chi(q2, L) = (4 alpha / pi) int_0^1 dx w(x)
                 int_0^L dp p^2 [p^2 + 1 + x(1-x) q2]^(-3/2)

Regularized (on-shell subtracted, cutoff-independent) form:

    chi_reg(q2) = -(2 alpha / pi) int_0^1 dx w(x) ln(1 + x(1-x) q2)

with weight w(x) = x(1-x) for spin-1/2 species and w(x) = (1-2x^2)/8 for
spin-0 species.  For large q2 the spin-1/2 form approaches
-(alpha/3 pi) ln(q2 / exp(5/3)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .constants import SPACELIKE, DimensionlessMomentum, constants
from .particles import ParticleSet, Spin, mass_kg
from .quadrature import IntegralResult, ToleranceSpec, integrate_adaptive

__all__ = [
    "SusceptibilityResult",
    "RunningPermittivity",
    "ASYMPTOTIC_OFFSET",
    "chi_cutoff",
    "chi_regularized",
    "chi_asymptotic",
    "epsilon_running",
    "constitutive",
]

# The asymptote -(alpha/3 pi) ln(q2 / A) is exact in the q2 -> inf limit
# with A = exp(5/3); below A its logarithm flips sign and it is invalid.
ASYMPTOTIC_OFFSET = math.exp(5.0 / 3.0)


@dataclass(frozen=True)
class SusceptibilityResult:
    chi: float
    abs_error_estimate: float
    argument: DimensionlessMomentum
    spin: Spin


@dataclass(frozen=True)
class RunningPermittivity:
    eps: float  # F/m
    mu: float  # H/m; always 1 / (eps c^2)
    q2_per_species: Mapping[str, float]
    abs_error_estimate: float = 0.0  # propagated quadrature error on eps (F/m)


def _weight(spin: Spin, x: np.ndarray) -> np.ndarray:
    if spin == Spin.HALF:
        return x * (1.0 - x)
    return (1.0 - 2.0 * x * x) / 8.0


def _electron_argument(q2: float) -> DimensionlessMomentum:
    # Dimensionless results are species-agnostic; the electron mass is the
    # nominal reference recorded with them.
    return DimensionlessMomentum(q2=q2, tag=SPACELIKE, species_mass=constants().m_e)


def chi_cutoff(
    q2: DimensionlessMomentum,
    lambda_tilde: float,
    spin: Spin = Spin.HALF,
    tol: ToleranceSpec | None = None,
) -> SusceptibilityResult:
    """Cutoff susceptibility from the nested double integral.

    ``lambda_tilde`` is the dimensionless radial-momentum cutoff
    hbar Lambda / (m c) and must be large (> 10) for the integral to be in
    its logarithmic regime.  Agrees with the expanded closed form
    (4 alpha / pi) int dx w(x) [ln(2 L) - 1 - ln(1 + x(1-x) q2)/2] up to
    O(1/L^2).
    """
    if q2.tag != SPACELIKE:
        raise ValueError("cutoff susceptibility is defined for spacelike arguments only")
    if lambda_tilde <= 10.0:
        raise ValueError("lambda_tilde must exceed 10")
    if tol is None:
        tol = ToleranceSpec(rel_tol=1e-11, abs_tol=1e-16)
    inner_tol = ToleranceSpec(
        rel_tol=max(tol.rel_tol / 10.0, 1e-13),
        abs_tol=tol.abs_tol,
        max_evaluations=tol.max_evaluations,
    )
    cst = constants()
    evaluations = 0
    inner_err_peak = 0.0

    def radial(x: float) -> float:
        nonlocal evaluations, inner_err_peak
        mu2 = 1.0 + x * (1.0 - x) * q2.q2  # always positive on the spacelike side
        res = integrate_adaptive(
            lambda p: p * p * (p * p + mu2) ** -1.5, 0.0, lambda_tilde, inner_tol
        )
        evaluations += res.evaluations
        inner_err_peak = max(inner_err_peak, res.abs_error_estimate)
        return res.value

    def outer(x: np.ndarray) -> np.ndarray:
        return _weight(spin, x) * np.array([radial(float(xi)) for xi in x])

    res = integrate_adaptive(outer, 0.0, 1.0, tol)
    prefactor = 4.0 * cst.alpha / math.pi
    # Inner estimates enter the outer integrand as systematic noise; fold the
    # worst one in through the weight mass (1/6 resp. 1/24).
    weight_mass = 1.0 / 6.0 if spin == Spin.HALF else 1.0 / 24.0
    err = prefactor * (res.abs_error_estimate + inner_err_peak * weight_mass)
    return SusceptibilityResult(
        chi=prefactor * res.value,
        abs_error_estimate=err,
        argument=q2,
        spin=spin,
    )


def chi_regularized(
    q2: float,
    spin: Spin = Spin.HALF,
    tol: ToleranceSpec | None = None,
) -> SusceptibilityResult:
    """On-shell-subtracted susceptibility; exactly 0 at q2 = 0.

    Spacelike arguments only (q2 >= 0); timelike arguments are the province
    of the dispersion module.
    """
    if q2 < 0.0 or not math.isfinite(q2):
        raise ValueError("q2 must be finite and non-negative (spacelike)")
    cst = constants()
    if q2 == 0.0:
        return SusceptibilityResult(0.0, 0.0, _electron_argument(0.0), spin)
    if tol is None:
        tol = ToleranceSpec(rel_tol=1e-12, abs_tol=1e-17)
    res = integrate_adaptive(
        lambda x: _weight(spin, x) * np.log1p(x * (1.0 - x) * q2), 0.0, 1.0, tol
    )
    prefactor = 2.0 * cst.alpha / math.pi
    return SusceptibilityResult(
        chi=-prefactor * res.value,
        abs_error_estimate=prefactor * res.abs_error_estimate,
        argument=_electron_argument(q2),
        spin=spin,
    )


def chi_asymptotic(q2: float) -> float:
    """Large-argument closed form -(alpha/3 pi) ln(q2 / exp(5/3)), spin 1/2."""
    if q2 < ASYMPTOTIC_OFFSET:
        raise ValueError(f"asymptotic form requires q2 >= exp(5/3) ~ {ASYMPTOTIC_OFFSET:.6f}")
    cst = constants()
    return -(cst.alpha / (3.0 * math.pi)) * math.log(q2 / ASYMPTOTIC_OFFSET)


def epsilon_running(
    k_squared_spacelike: float,
    particle_set: ParticleSet,
    tol: ToleranceSpec | None = None,
) -> RunningPermittivity:
    """Running permittivity at a spacelike SI argument (1/m^2).

    ``k_squared_spacelike`` is the spacelike magnitude |kvec|^2 - omega^2/c^2
    >= 0.  Each species contributes with its own dimensionless argument and
    spin weight (g_s is the multiplicity):

        eps = eps0_ref * [1 + sum_s g_s (q_s/e)^2 chi_reg(q2_s, spin_s)]

    and mu = 1/(eps c^2) keeps eps * mu * c^2 = 1 identically.
    """
    if k_squared_spacelike < 0.0:
        raise ValueError("spacelike argument must be non-negative (pass |kvec|^2 - omega^2/c^2)")
    cst = constants()
    correction = 0.0
    correction_err = 0.0
    q2_per_species: dict[str, float] = {}
    for p in particle_set.particles:
        scale = (cst.hbar / (mass_kg(p) * cst.c)) ** 2
        q2_s = k_squared_spacelike * scale
        q2_per_species[p.name] = q2_s
        chi_s = chi_regularized(q2_s, p.spin, tol)
        weight = p.multiplicity * p.charge_e**2
        correction += weight * chi_s.chi
        correction_err += weight * chi_s.abs_error_estimate
    eps = cst.eps0_ref * (1.0 + correction)
    return RunningPermittivity(
        eps=eps,
        mu=1.0 / (eps * cst.c**2),
        q2_per_species=q2_per_species,
        abs_error_estimate=cst.eps0_ref * correction_err,
    )


def constitutive(
    e_field: float,
    b_field: float,
    k_squared_spacelike: float,
    particle_set: ParticleSet,
    tol: ToleranceSpec | None = None,
) -> tuple[float, float]:
    """Linear constitutive relations D = eps(k^2) E and H = c^2 eps(k^2) B."""
    cst = constants()
    running = epsilon_running(k_squared_spacelike, particle_set, tol)
    return running.eps * e_field, cst.c**2 * running.eps * b_field
