"""Vacuum-screened Coulomb potential of a static point charge.

In momentum space the potential of a charge q_src is
Phi(kvec^2) = q_src / (kvec^2 eps(kvec^2)); transforming back to r-space and
expanding 1/eps to first order in the susceptibility (|chi| << 1) splits the
result into the bare Coulomb term plus a convergent correction:

    Phi(r) = q_src/(4 pi eps0 r) * [1 + (2/pi) int_0^inf dk (-chi(k^2)) sin(k rho)/k]

with k and rho = r / lambda_C in electron Compton units.  The correction
factor exceeds 1 (screening strengthens the interaction at short distance)
and decays exponentially for rho >> 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .constants import constants
from .one_loop import chi_regularized, epsilon_running
from .particles import ParticleSet, builtin_particle_set, mass_kg
from .quadrature import ToleranceSpec, integrate_oscillatory_sine

__all__ = [
    "PotentialSample",
    "Regime",
    "potential_kspace",
    "potential_rspace",
    "potential_asymptotic",
    "SMALL_R_LIMIT",
    "LARGE_R_LIMIT",
]

Regime = Literal["small_r", "large_r"]

# Validity windows for the closed-form branches; outside them the neglected
# terms are no longer small compared with the branch itself.
SMALL_R_LIMIT = 0.1
LARGE_R_LIMIT = 2.0

_EULER_GAMMA = float(np.euler_gamma)


@dataclass(frozen=True)
class PotentialSample:
    r_over_lambda_c: float
    phi: float  # V
    correction_factor: float  # phi / (bare Coulomb at the same radius)
    correction_abs_error: float = 0.0  # quadrature error on correction_factor


def potential_kspace(
    kvec2: float,
    particle_set: ParticleSet,
    tol: ToleranceSpec | None = None,
    source_charge: float | None = None,
) -> float:
    """Momentum-space potential q_src / (kvec^2 eps(kvec^2)) in V m^2.

    ``kvec2`` is the static spacelike argument |kvec|^2 (1/m^2) and must be
    positive; the kvec2 = 0 Coulomb zero mode is a pole the caller must
    treat analytically.
    """
    if kvec2 < 0.0:
        raise ValueError("kvec2 must be non-negative")
    if kvec2 == 0.0:
        raise ValueError("kvec2 = 0 is the Coulomb pole; treat the zero mode analytically")
    if source_charge is None:
        source_charge = constants().e
    running = epsilon_running(kvec2, particle_set, tol)
    return source_charge / (kvec2 * running.eps)


def _susceptibility_deficit(particle_set: ParticleSet, tol: ToleranceSpec | None):
    """Return a vectorized kappa -> -sum_s g_s (q_s/e)^2 chi_s(kappa^2).

    kappa is in electron Compton units, so each species sees its own
    argument kappa^2 (m_e/m_s)^2.
    """
    cst = constants()
    m_e = cst.m_e
    species = [
        (p.multiplicity * p.charge_e**2, (m_e / mass_kg(p)) ** 2, p.spin)
        for p in particle_set.particles
    ]

    def deficit(kappa: np.ndarray) -> np.ndarray:
        kappa = np.atleast_1d(np.asarray(kappa, dtype=float))
        out = np.zeros_like(kappa)
        for weight, mass_ratio2, spin in species:
            for i, k in enumerate(kappa):
                out[i] -= weight * chi_regularized(k * k * mass_ratio2, spin, tol).chi
        return out

    return deficit


def potential_rspace(
    r_over_lambda_c: float,
    tol: ToleranceSpec | None = None,
    particle_set: ParticleSet | None = None,
    source_charge: float | None = None,
) -> PotentialSample:
    """Screened potential at rho = r / lambda_C by inverse Fourier transform.

    The bare Coulomb piece is kept analytic; only the convergent correction
    integral goes through the oscillatory kernel.  The default is
    electron-positron screening only; pass another set to fold in more
    species (unvalidated beyond monotonicity).
    """
    if r_over_lambda_c <= 0.0 or not math.isfinite(r_over_lambda_c):
        raise ValueError("r_over_lambda_c must be finite and positive")
    cst = constants()
    if particle_set is None:
        particle_set = builtin_particle_set("electron")
    if source_charge is None:
        source_charge = cst.e
    if tol is None:
        tol = ToleranceSpec(rel_tol=1e-9, abs_tol=1e-14)
    deficit = _susceptibility_deficit(particle_set, None)

    def integrand(kappa: np.ndarray) -> np.ndarray:
        return deficit(kappa) / kappa

    osc = integrate_oscillatory_sine(integrand, r_over_lambda_c, tol)
    correction = 1.0 + (2.0 / math.pi) * osc.value
    radius = r_over_lambda_c * cst.hbar / (cst.m_e * cst.c)
    bare = source_charge / (4.0 * math.pi * cst.eps0_ref * radius)
    return PotentialSample(
        r_over_lambda_c=r_over_lambda_c,
        phi=bare * correction,
        correction_factor=correction,
        correction_abs_error=(2.0 / math.pi) * osc.abs_error_estimate,
    )


def potential_asymptotic(
    r_over_lambda_c: float,
    regime: Regime,
    source_charge: float | None = None,
) -> PotentialSample:
    """Closed-form short- and long-distance branches of the screened potential.

    small_r (rho < 0.1):  factor = 1 + (2 alpha/3 pi) [ln(1/rho) - gamma - 5/6]
    large_r (rho > 2):    factor = 1 + (alpha/4 sqrt(pi)) exp(-2 rho) / rho^(3/2)
    """
    rho = r_over_lambda_c
    if rho <= 0.0 or not math.isfinite(rho):
        raise ValueError("r_over_lambda_c must be finite and positive")
    cst = constants()
    if source_charge is None:
        source_charge = cst.e
    if regime == "small_r":
        if rho >= SMALL_R_LIMIT:
            raise ValueError(f"small_r branch requires rho < {SMALL_R_LIMIT}")
        factor = 1.0 + (2.0 * cst.alpha / (3.0 * math.pi)) * (
            math.log(1.0 / rho) - _EULER_GAMMA - 5.0 / 6.0
        )
    elif regime == "large_r":
        if rho <= LARGE_R_LIMIT:
            raise ValueError(f"large_r branch requires rho > {LARGE_R_LIMIT}")
        factor = 1.0 + (cst.alpha / (4.0 * math.sqrt(math.pi))) * math.exp(-2.0 * rho) / rho**1.5
    else:
        raise ValueError(f"unknown regime {regime!r}; expected 'small_r' or 'large_r'")
    radius = rho * cst.hbar / (cst.m_e * cst.c)
    bare = source_charge / (4.0 * math.pi * cst.eps0_ref * radius)
    return PotentialSample(r_over_lambda_c=rho, phi=bare * factor, correction_factor=factor)
