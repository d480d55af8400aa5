"""Absorptive susceptibility above pair threshold and its Kramers-Kronig
reconstruction of the spacelike (real) part.

On the timelike side, absorption (real pair creation) switches on at
s_tilde = hbar^2 k^2 / (m^2 c^2) = 4:

    Im chi(s) = (alpha/3) sqrt(1 - 4/s) (1 + 2/s),   s > 4,

per unit charge squared and spin 1/2.  The alpha/3 normalization is fixed by
requiring the once-subtracted dispersion integral over this cut,

    chi(q2) = -(q2/pi) int_4^inf ds Im chi(s) / (s (s + q2)),

to reproduce the spacelike quadrature susceptibility; that consistency is
enforced by the test suite rather than assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import constants
from .quadrature import ToleranceSpec, integrate_adaptive

__all__ = [
    "AbsorptivePart",
    "PAIR_THRESHOLD",
    "im_chi_normalization",
    "im_chi",
    "kk_real_from_im",
]

PAIR_THRESHOLD = 4.0  # s_tilde at which hbar k = 2 m c

# Beyond this point the dispersion integrand is replaced by its analytic
# large-s form; Im chi deviates from its limit by less than 6/s^2 there.
_TAIL_CROSSOVER = 1.0e6


def im_chi_normalization() -> float:
    """High-energy limit of Im chi: alpha / 3 per unit charge squared."""
    return constants().alpha / 3.0


@dataclass(frozen=True)
class AbsorptivePart:
    im_chi: float
    s_tilde: float


def im_chi(s_tilde: float) -> AbsorptivePart:
    """Absorptive part of the susceptibility at timelike argument s_tilde.

    Zero at and below the pair threshold s_tilde = 4, continuous across it,
    and approaching alpha/3 from below as s_tilde -> inf.
    """
    if not math.isfinite(s_tilde):
        raise ValueError("s_tilde must be finite")
    if s_tilde <= PAIR_THRESHOLD:
        return AbsorptivePart(0.0, s_tilde)
    value = im_chi_normalization() * math.sqrt(1.0 - 4.0 / s_tilde) * (1.0 + 2.0 / s_tilde)
    return AbsorptivePart(value, s_tilde)


def kk_real_from_im(q2: float, tol: ToleranceSpec | None = None) -> float:
    """Spacelike susceptibility from the once-subtracted dispersion integral.

    The subtraction sits at the on-shell point, so the result vanishes at
    q2 = 0 identically.  The threshold square-root behaviour is flattened by
    the substitution s = 4 + u^2 and the far tail (s > 1e6) is integrated
    analytically with its limiting constant.
    """
    if q2 < 0.0 or not math.isfinite(q2):
        raise ValueError("q2 must be finite and non-negative (spacelike)")
    if q2 == 0.0:
        return 0.0
    if tol is None:
        tol = ToleranceSpec(rel_tol=1e-11, abs_tol=1e-18)
    norm = im_chi_normalization()

    def integrand(u: np.ndarray) -> np.ndarray:
        s = PAIR_THRESHOLD + u * u
        shape = np.sqrt(1.0 - PAIR_THRESHOLD / s) * (1.0 + 2.0 / s)
        return 2.0 * u * norm * shape / (s * (s + q2))

    u_max = math.sqrt(_TAIL_CROSSOVER - PAIR_THRESHOLD)
    res = integrate_adaptive(integrand, 0.0, u_max, tol)
    # Analytic tail: Im chi -> norm, so
    #   int_S^inf ds / (s (s + q2)) = ln(1 + q2/S) / q2.
    tail = norm * math.log1p(q2 / _TAIL_CROSSOVER) / q2
    return -(q2 / math.pi) * (res.value + tail)
