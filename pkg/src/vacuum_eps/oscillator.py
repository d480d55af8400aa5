"""Harmonic-oscillator dielectric model of the vacuum.

A virtual pair is treated as two masses m bound with level spacing
hbar*omega = 2 m c^2 (reduced mass m/2).  The quasi-static displacement in a
field E gives the induced dipole, and one dipole per Compton volume
lambda_C^3 gives a polarization density whose mass dependence cancels.
Summing species then yields the permittivity estimate

    eps0_estimate = f * (e^2 / 2 hbar c) * sum_s (q_s/e)^2,

with f an order-unity correction factor supplied by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constants import constants
from .particles import ParticleSet, charge_square_sum

__all__ = [
    "OscillatorEstimate",
    "induced_dipole",
    "polarization_density",
    "epsilon0_oscillator",
]


@dataclass(frozen=True)
class OscillatorEstimate:
    eps0_estimate: float  # F/m
    fraction_of_reference: float  # eps0_estimate / eps0_ref
    f_used: float


def induced_dipole(mass_ev: float, field: float) -> float:
    """Quasi-static dipole moment e^2 hbar^2 E / (2 m^3 c^4) in C m."""
    if mass_ev <= 0.0:
        raise ValueError("mass_ev must be strictly positive")
    cst = constants()
    mass = mass_ev * cst.e / cst.c**2
    return cst.e**2 * cst.hbar**2 * field / (2.0 * mass**3 * cst.c**4)


def polarization_density(mass_ev: float, field: float) -> float:
    """Dipole moment per Compton volume, e^2 E / (2 hbar c) in C/m^2.

    The mass cancels between the dipole moment (~ m^-3) and the number
    density (~ m^3), so every species of unit charge contributes equally.
    """
    if mass_ev <= 0.0:
        raise ValueError("mass_ev must be strictly positive")
    cst = constants()
    return cst.e**2 * field / (2.0 * cst.hbar * cst.c)


def epsilon0_oscillator(particle_set: ParticleSet, f: float) -> OscillatorEstimate:
    """Permittivity estimate f * (e^2 / 2 hbar c) * sum (q/e)^2.

    For a single unit charge and f = 1 the fraction of the reference value
    is exactly 2 pi alpha (about 4.59e-2).
    """
    if f <= 0.0:
        raise ValueError("correction factor f must be strictly positive")
    cst = constants()
    estimate = f * cst.e**2 * charge_square_sum(particle_set) / (2.0 * cst.hbar * cst.c)
    return OscillatorEstimate(
        eps0_estimate=estimate,
        fraction_of_reference=estimate / cst.eps0_ref,
        f_used=f,
    )
