"""Momentum-scale running of the vacuum permittivity.

Numerical library plus CLI computing the vacuum permittivity from two
complementary pictures: a harmonic-oscillator dielectric model of virtual
pairs, and the one-loop susceptibility with its dispersion-relation,
screened-Coulomb and Landau-pole consequences.  Everything numerical is
cross-checked against independent closed-form or quadrature oracles in the
test suite.
"""

from .constants import (
    DimensionlessMomentum,
    PhysicalConstants,
    SPACELIKE,
    TIMELIKE,
    constants,
    from_dimensionless,
    to_dimensionless,
)
from .dispersion import AbsorptivePart, PAIR_THRESHOLD, im_chi, im_chi_normalization, kk_real_from_im
from .landau import LandauSolution, epsilon0_from_landau, fudge_factor, solve_landau_pole
from .one_loop import (
    ASYMPTOTIC_OFFSET,
    RunningPermittivity,
    SusceptibilityResult,
    chi_asymptotic,
    chi_cutoff,
    chi_regularized,
    constitutive,
    epsilon_running,
)
from .oscillator import OscillatorEstimate, epsilon0_oscillator, induced_dipole, polarization_density
from .particles import (
    BUILTIN_SET_NAMES,
    ChargedParticle,
    PairScales,
    ParticleConfigError,
    ParticleSet,
    Spin,
    builtin_particle_set,
    charge_square_sum,
    load_particle_set,
    pair_scales,
)
from .quadrature import (
    BracketingError,
    DivergenceError,
    IntegralResult,
    NonConvergenceError,
    ToleranceSpec,
    find_root,
    integrate_adaptive,
    integrate_oscillatory_sine,
)
from .uehling import PotentialSample, potential_asymptotic, potential_kspace, potential_rspace

__version__ = "0.1.0"

__all__ = [
    "ASYMPTOTIC_OFFSET",
    "AbsorptivePart",
    "BUILTIN_SET_NAMES",
    "BracketingError",
    "ChargedParticle",
    "DimensionlessMomentum",
    "DivergenceError",
    "IntegralResult",
    "LandauSolution",
    "NonConvergenceError",
    "OscillatorEstimate",
    "PAIR_THRESHOLD",
    "PairScales",
    "ParticleConfigError",
    "ParticleSet",
    "PhysicalConstants",
    "PotentialSample",
    "RunningPermittivity",
    "SPACELIKE",
    "Spin",
    "SusceptibilityResult",
    "TIMELIKE",
    "ToleranceSpec",
    "builtin_particle_set",
    "charge_square_sum",
    "chi_asymptotic",
    "chi_cutoff",
    "chi_regularized",
    "constants",
    "constitutive",
    "epsilon0_from_landau",
    "epsilon0_oscillator",
    "epsilon_running",
    "find_root",
    "from_dimensionless",
    "fudge_factor",
    "im_chi",
    "im_chi_normalization",
    "induced_dipole",
    "integrate_adaptive",
    "integrate_oscillatory_sine",
    "kk_real_from_im",
    "load_particle_set",
    "pair_scales",
    "polarization_density",
    "potential_asymptotic",
    "potential_kspace",
    "potential_rspace",
    "solve_landau_pole",
    "to_dimensionless",
    "__version__",
]
