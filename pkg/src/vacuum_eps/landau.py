"""Permittivity written entirely as vacuum polarization up to the Landau pole.

With L2_s = ln(hbar^2 Lambda_L^2 / (m_s^2 c^2)) the polarization sum is

    eps0(Lambda_L) = (e^2 / 12 pi^2 hbar c) * sum_s g_s (q_s/e)^2 L2_s,

and the oscillator estimate eps0 = f (e^2 / 2 hbar c) sum (q/e)^2 reproduces
it exactly when the correction factor is the charge-weighted mean log

    f = <L2>_w / (6 pi^2).

The pole is parameterized by its rest-energy scale hbar Lambda_L c in eV;
solving for a target permittivity is done in log space, where the sum is
linear, so the root-finder bracket spans e^1 .. e^2000 above the heaviest
species without overflowing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .constants import constants
from .particles import ParticleSet, charge_square_sum
from .quadrature import BracketingError, ToleranceSpec, find_root

__all__ = [
    "LandauSolution",
    "epsilon0_from_landau",
    "fudge_factor",
    "solve_landau_pole",
]

_LOG_BRACKET_SPAN = 2000.0  # max ln(Lambda_L / m_max) explored by the solver


@dataclass(frozen=True)
class LandauSolution:
    lambda_l_tilde: Mapping[str, float]  # per-species ln(hbar^2 L^2 / m_s^2 c^2)
    common_log_half: float  # charge-weighted mean of ln(hbar Lambda_L / (m_s c))
    log_electron_referenced: float  # ln(hbar Lambda_L / (m_e c))
    f: float
    eps0_out: float  # F/m
    lambda_l_ev: float  # hbar Lambda_L c; inf if not representable


def _species_logs(particle_set: ParticleSet, ln_lambda_ev: float) -> dict[str, float]:
    logs: dict[str, float] = {}
    for p in particle_set.particles:
        log2 = 2.0 * (ln_lambda_ev - math.log(p.mass_ev))
        if log2 <= 0.0:
            raise ValueError(
                f"Landau scale must exceed the rest energy of species {p.name!r} "
                f"({p.mass_ev:.6g} eV)"
            )
        logs[p.name] = log2
    return logs


def _eps0_from_logs(particle_set: ParticleSet, logs: Mapping[str, float]) -> float:
    cst = constants()
    weighted = sum(p.multiplicity * p.charge_e**2 * logs[p.name] for p in particle_set.particles)
    return cst.e**2 * weighted / (12.0 * math.pi**2 * cst.hbar * cst.c)


def epsilon0_from_landau(particle_set: ParticleSet, lambda_l_ev: float) -> float:
    """Vacuum-polarization permittivity for a pole at hbar Lambda_L c = lambda_l_ev."""
    if lambda_l_ev <= 0.0:
        raise ValueError("lambda_l_ev must be strictly positive")
    logs = _species_logs(particle_set, math.log(lambda_l_ev))
    return _eps0_from_logs(particle_set, logs)


def fudge_factor(particle_set: ParticleSet, lambda_l_ev: float) -> float:
    """Correction factor closing the oscillator estimate onto the pole sum.

    Charge-weighted mean of the per-species logs over 6 pi^2; by
    construction epsilon0_oscillator(set, f) equals
    epsilon0_from_landau(set, Lambda_L).
    """
    if lambda_l_ev <= 0.0:
        raise ValueError("lambda_l_ev must be strictly positive")
    logs = _species_logs(particle_set, math.log(lambda_l_ev))
    weighted = sum(
        p.multiplicity * p.charge_e**2 * logs[p.name] for p in particle_set.particles
    )
    return weighted / (charge_square_sum(particle_set) * 6.0 * math.pi**2)


def solve_landau_pole(
    particle_set: ParticleSet,
    target_eps0: float,
    tol: ToleranceSpec | None = None,
) -> LandauSolution:
    """Find the pole scale at which the polarization sum hits target_eps0.

    Raises
    ------
    BracketingError
        If the target is unreachable within the solver's log-space bracket
        (e.g. below the value forced by the species mass spread).
    """
    if target_eps0 <= 0.0:
        raise ValueError("target_eps0 must be strictly positive")
    if tol is None:
        tol = ToleranceSpec(rel_tol=1e-13, abs_tol=0.0)
    cst = constants()
    ln_mass_max = max(math.log(p.mass_ev) for p in particle_set.particles)

    def mismatch(x: float) -> float:
        # x = ln(Lambda_L / m_max); strictly increasing and linear in x.
        logs = _species_logs(particle_set, ln_mass_max + x)
        return _eps0_from_logs(particle_set, logs) - target_eps0

    lo, hi = 1e-9, 1.0
    while mismatch(hi) < 0.0:
        hi *= 2.0
        if hi > _LOG_BRACKET_SPAN:
            raise BracketingError(
                f"target permittivity {target_eps0!r} not reachable below "
                f"ln(Lambda/m_max) = {_LOG_BRACKET_SPAN}"
            )
    if mismatch(lo) > 0.0:
        raise BracketingError(
            f"target permittivity {target_eps0!r} is below the minimum forced by the set"
        )
    x = find_root(mismatch, lo, hi, tol)

    ln_lambda_ev = ln_mass_max + x
    logs = _species_logs(particle_set, ln_lambda_ev)
    css = charge_square_sum(particle_set)
    weighted_half_logs = sum(
        p.multiplicity * p.charge_e**2 * 0.5 * logs[p.name] for p in particle_set.particles
    )
    try:
        lambda_l_ev = math.exp(ln_lambda_ev)
    except OverflowError:
        lambda_l_ev = math.inf
    return LandauSolution(
        lambda_l_tilde=logs,
        common_log_half=weighted_half_logs / css,
        log_electron_referenced=ln_lambda_ev - math.log(cst.electron_rest_energy),
        f=weighted_half_logs * 2.0 / (css * 6.0 * math.pi**2),
        eps0_out=_eps0_from_logs(particle_set, logs),
        lambda_l_ev=lambda_l_ev,
    )
