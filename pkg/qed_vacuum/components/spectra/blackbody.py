"""
Module providing the spectral energy densities of thermal radiation in a cavity.

Densities are energies per volume and per frequency interval [J s / m^3]. All functions accept
a scalar or a numpy array of frequencies and return the same shape.
"""
import logging
import math
from enum import StrEnum

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, Field

from qed_vacuum.components.constants import PhysicalConstants
from qed_vacuum.components.errors import DomainError, QuadratureError
from qed_vacuum.components.quadrature import QuadratureResult, adaptive_quad

logger = logging.getLogger(__name__)

DEFAULT_SMALL_ARGUMENT_THRESHOLD = 1e-5
DEFAULT_SPECTRAL_EPSREL = 1e-11
DEFAULT_QUAD_LIMIT = 200

# x^3 / (e^x - 1) peaks at x = 3 - 3 e^-x, solved
PLANCK_PEAK_X = 2.8214393721220787


class SpectralLaw(StrEnum):
    RAYLEIGH_JEANS = "rj"
    PLANCK_FIRST = "planck1"
    PLANCK_SECOND = "planck2"


class SpectralSample(BaseModel, frozen=True):
    frequency: float = Field(ge=0, description="Frequency [Hz]")
    temperature: float = Field(gt=0, description="Temperature [K]")
    density: float = Field(ge=0, description="Spectral energy density [J s / m^3]")


def _as_output(values: np.ndarray) -> float | np.ndarray:
    return float(values) if np.ndim(values) == 0 else values


def _check_inputs(nu: ArrayLike, T: float) -> np.ndarray:
    if not (T > 0 and math.isfinite(T)):
        raise DomainError(f"Temperature must be positive and finite, got {T}")
    nu = np.asarray(nu, dtype=float)
    if np.any(nu < 0) or not np.all(np.isfinite(nu)):
        raise DomainError("Frequencies must be nonnegative and finite")
    return nu


def bose_factor(x: ArrayLike, small_argument_threshold: float = DEFAULT_SMALL_ARGUMENT_THRESHOLD) -> np.ndarray:
    """
    x / (e^x - 1), equal to 1 at x = 0. Small arguments use the series 1 - x/2 + x^2/12 - x^4/720,
    large ones x e^-x / (1 - e^-x) which cannot overflow.
    """
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        series = 1. - x / 2 + x ** 2 / 12 - x ** 4 / 720
        exact = x * np.exp(-x) / -np.expm1(-x)
    return np.where(x < small_argument_threshold, series, exact)


def mode_density(nu: ArrayLike, consts: PhysicalConstants) -> float | np.ndarray:
    """Standing waves per volume and frequency interval, 8 pi nu^2 / c_rel^3."""
    nu = np.asarray(nu, dtype=float)
    return _as_output(8 * math.pi * nu ** 2 / consts.c_rel ** 3)


def zero_point_density(nu: ArrayLike, consts: PhysicalConstants) -> float | np.ndarray:
    """h nu / 2 per mode, independent of the temperature."""
    nu = np.asarray(nu, dtype=float)
    return _as_output(mode_density(nu, consts) * consts.planck_h * nu / 2)


def rayleigh_jeans(nu: ArrayLike, T: float, consts: PhysicalConstants) -> float | np.ndarray:
    nu = _check_inputs(nu, T)
    return _as_output(mode_density(nu, consts) * consts.boltzmann_k * T)


def planck_first(nu: ArrayLike, T: float, consts: PhysicalConstants,
                 small_argument_threshold: float = DEFAULT_SMALL_ARGUMENT_THRESHOLD) -> float | np.ndarray:
    """(8 pi nu^2 / c_rel^3) h nu / (e^(h nu / kT) - 1), written as mode density * kT * x / (e^x - 1)."""
    nu = _check_inputs(nu, T)
    kT = consts.boltzmann_k * T
    x = consts.planck_h * nu / kT
    return _as_output(mode_density(nu, consts) * kT * bose_factor(x, small_argument_threshold))


def planck_second(nu: ArrayLike, T: float, consts: PhysicalConstants,
                  small_argument_threshold: float = DEFAULT_SMALL_ARGUMENT_THRESHOLD) -> float | np.ndarray:
    """Thermal density plus the zero-point term."""
    nu = _check_inputs(nu, T)
    return _as_output(planck_first(nu, T, consts, small_argument_threshold) + zero_point_density(nu, consts))


def spectral_density(law: SpectralLaw, nu: ArrayLike, T: float, consts: PhysicalConstants,
                     small_argument_threshold: float = DEFAULT_SMALL_ARGUMENT_THRESHOLD) -> float | np.ndarray:
    match SpectralLaw(law):
        case SpectralLaw.RAYLEIGH_JEANS:
            return rayleigh_jeans(nu, T, consts)
        case SpectralLaw.PLANCK_FIRST:
            return planck_first(nu, T, consts, small_argument_threshold)
        case SpectralLaw.PLANCK_SECOND:
            return planck_second(nu, T, consts, small_argument_threshold)
    raise DomainError(f"Unknown radiation law {law}")


def stefan_boltzmann_energy_density(T: float, consts: PhysicalConstants) -> float:
    """a T^4 with the radiation constant a = 8 pi^5 k^4 / (15 c_rel^3 h^3) [J/m^3]."""
    if not T > 0:
        raise DomainError(f"Temperature must be positive, got {T}")
    radiation_constant = 8 * math.pi ** 5 * consts.boltzmann_k ** 4 / (15 * consts.c_rel ** 3 * consts.planck_h ** 3)
    return radiation_constant * T ** 4


def spectral_integral(law: SpectralLaw,
                      T: float,
                      nu_max: float,
                      consts: PhysicalConstants,
                      epsrel: float = DEFAULT_SPECTRAL_EPSREL,
                      limit: int = DEFAULT_QUAD_LIMIT,
                      small_argument_threshold: float = DEFAULT_SMALL_ARGUMENT_THRESHOLD) -> QuadratureResult:
    """
    Energy density integrated over [0, nu_max] [J/m^3]. The divergent laws (rj, planck2) only
    ever see a finite cutoff.

    Raises:
        QuadratureError: with the achieved value and error estimate if the quadrature does not converge
    """
    law = SpectralLaw(law)
    if not (T > 0 and math.isfinite(T)):
        raise DomainError(f"Temperature must be positive and finite, got {T}")
    if not (nu_max > 0 and math.isfinite(nu_max)):
        raise DomainError(f"Cutoff frequency must be positive and finite, got {nu_max}")

    def integrand(u: float) -> float:
        return nu_max * spectral_density(law, u * nu_max, T, consts, small_argument_threshold)

    # Thermal peak, in units of the cutoff
    peak = PLANCK_PEAK_X * consts.boltzmann_k * T / (consts.planck_h * nu_max)
    points = [peak, 10 * peak] if law != SpectralLaw.RAYLEIGH_JEANS else None

    result = adaptive_quad(integrand, 0., 1., epsabs=0., epsrel=epsrel, limit=limit, points=points)
    if not result.converged:
        raise QuadratureError(f"Spectral integral of {law} did not converge (T={T}, nu_max={nu_max}): "
                              f"{result.message}", value=result.value, abserr=result.abserr)
    logger.debug("Integral of %s up to %.6e Hz at %s K: %.12e", law, nu_max, T, result.value)
    return result
