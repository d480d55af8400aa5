"""Physical constants and conversion to the dimensionless momentum variable.

Every physics routine in this package works with the dimensionless magnitude
``q2 = hbar^2 |k^2| / (m^2 c^2)`` of the wave-vector invariant
``k^2 = omega^2/c^2 - |kvec|^2``; SI values enter and leave only through the
converters defined here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

__all__ = [
    "PhysicalConstants",
    "DimensionlessMomentum",
    "SignTag",
    "SPACELIKE",
    "TIMELIKE",
    "constants",
    "to_dimensionless",
    "from_dimensionless",
]

SignTag = Literal["spacelike", "timelike"]
SPACELIKE: SignTag = "spacelike"
TIMELIKE: SignTag = "timelike"


@dataclass(frozen=True)
class PhysicalConstants:
    """Immutable record of SI reference values (CODATA 2018)."""

    hbar: float  # reduced Planck constant (J s)
    c: float  # speed of light in vacuum (m/s)
    e: float  # elementary charge (C)
    eps0_ref: float  # vacuum permittivity (F/m)
    alpha: float  # fine-structure constant
    m_e: float  # electron mass (kg)
    electron_rest_energy: float  # m_e c^2 (eV)

    def __post_init__(self) -> None:
        for name in ("hbar", "c", "e", "eps0_ref", "alpha", "m_e", "electron_rest_energy"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"constant {name!r} must be strictly positive")
        derived = self.e**2 / (4.0 * math.pi * self.eps0_ref * self.hbar * self.c)
        if abs(derived / self.alpha - 1.0) > 1e-9:
            raise ValueError("alpha is inconsistent with e^2/(4 pi eps0 hbar c)")

    @property
    def mu0_ref(self) -> float:
        """Vacuum permeability implied by eps0_ref * mu0_ref * c^2 = 1."""
        return 1.0 / (self.eps0_ref * self.c**2)

    @property
    def compton_wavenumber_e(self) -> float:
        """Electron inverse reduced Compton wavelength m_e c / hbar (1/m)."""
        return self.m_e * self.c / self.hbar


# Exact SI defining constants (2019 revision) plus CODATA 2018 measured
# values.  eps0_ref is derived as e^2 / (2 h c alpha), which is how CODATA
# itself obtains 8.8541878128(13)e-12; transcribing the rounded table entry
# instead would break the alpha identity at the 6e-10 level.
_H_PLANCK = 6.62607015e-34  # J s, exact
_C_LIGHT = 299792458.0  # m/s, exact
_E_CHARGE = 1.602176634e-19  # C, exact
_ALPHA = 7.2973525693e-3  # 1/alpha = 137.035999084(21)

_CODATA_2018 = PhysicalConstants(
    hbar=_H_PLANCK / (2.0 * math.pi),
    c=_C_LIGHT,
    e=_E_CHARGE,
    eps0_ref=_E_CHARGE**2 / (2.0 * _H_PLANCK * _C_LIGHT * _ALPHA),
    alpha=_ALPHA,
    m_e=9.1093837015e-31,
    electron_rest_energy=510998.95000,
)


def constants() -> PhysicalConstants:
    """Return the fixed CODATA 2018 reference record used package-wide."""
    return _CODATA_2018


@dataclass(frozen=True)
class DimensionlessMomentum:
    """Dimensionless invariant hbar^2 |k^2| / (m^2 c^2) with its sign regime.

    ``tag`` records which side of the light cone the argument lies on:
    spacelike means k^2 < 0 (static/screening regime), timelike means
    k^2 > 0 (absorptive regime above pair threshold).
    """

    q2: float
    tag: SignTag
    species_mass: float  # kg

    def __post_init__(self) -> None:
        if self.q2 < 0.0 or not math.isfinite(self.q2):
            raise ValueError("q2 must be finite and non-negative")
        if self.tag not in (SPACELIKE, TIMELIKE):
            raise ValueError(f"unknown sign tag {self.tag!r}")
        if self.species_mass <= 0.0:
            raise ValueError("species_mass must be strictly positive")


def to_dimensionless(k_squared: float, mass: float) -> DimensionlessMomentum:
    """Convert a signed SI invariant k^2 = omega^2/c^2 - |kvec|^2 (1/m^2).

    Negative (or zero) input is spacelike, positive input timelike.  The
    magnitude is normalized by the species Compton scale, q2 = hbar^2 |k^2|
    / (mass^2 c^2).
    """
    if mass <= 0.0:
        raise ValueError("mass must be strictly positive")
    cst = constants()
    scale = (cst.hbar / (mass * cst.c)) ** 2
    tag: SignTag = TIMELIKE if k_squared > 0.0 else SPACELIKE
    return DimensionlessMomentum(q2=abs(k_squared) * scale, tag=tag, species_mass=mass)


def from_dimensionless(q: DimensionlessMomentum) -> float:
    """Invert :func:`to_dimensionless`, returning the signed k^2 in 1/m^2."""
    cst = constants()
    magnitude = q.q2 * (q.species_mass * cst.c / cst.hbar) ** 2
    return magnitude if q.tag == TIMELIKE else -magnitude
