"""
Module providing the Landau pole of the leading-log running and the closed form with nu unit-charge species.

Everything is computed with L = ln(Lambda / (m_ref c_rel)), m_ref being the lightest mass of the set;
Lambda itself (e^645 and beyond) is not representable as a float.
"""
import logging
import math

from pydantic import BaseModel, Field
from scipy.optimize import brentq

from qed_vacuum.components.constants import PhysicalConstants, planck_momentum
from qed_vacuum.components.errors import DomainError, NumericalError
from qed_vacuum.components.particles import ParticleSet, Particle, charge_sum

logger = logging.getLogger(__name__)

DEFAULT_LANDAU_XTOL = 1e-13
DEFAULT_MAX_BRACKET_DOUBLINGS = 64


class LandauPoleResult(BaseModel, frozen=True):
    log_lambda: float = Field(description="ln(Lambda / (m_ref c_rel))")
    reference_particle: str = Field(description="Lightest species of the set, fixing m_ref")
    log10_lambda_gev: float = Field(description="log10 of Lambda expressed in GeV/c")
    lambda_gev: str = Field(description="Lambda in GeV/c, formatted from its logarithm")
    residual: float = Field(description="Leading-log alpha^-1(Lambda) minus alpha^-1(0) at the root")


def _log_mass_ratios(particle_set: ParticleSet) -> tuple[Particle, list[tuple[float, float]]]:
    # (weight, ln(m_i / m_ref)) pairs
    reference = particle_set.lightest()
    return reference, [(particle.charge_weight, math.log(particle.mass / reference.mass))
                       for particle in particle_set]


def alpha_inverse_leading_log(log_lambda: float, particle_set: ParticleSet, consts: PhysicalConstants) -> float:
    """
    Forward leading-log expression (1/3 pi) sum_i deg_i (q_i/e)^2 ln(Lambda^2 / (m_i c_rel)^2),
    with `log_lambda` = ln(Lambda / (m_ref c_rel)).
    """
    _, terms = _log_mass_ratios(particle_set)
    return sum(weight * 2 * (log_lambda - log_ratio) for weight, log_ratio in terms) / (3 * math.pi)


def landau_pole_closed_form(particle_set: ParticleSet, consts: PhysicalConstants) -> float:
    """The leading-log expression is linear in ln(Lambda), this is its exact solution."""
    if not len(particle_set) or charge_sum(particle_set) <= 0:
        raise DomainError(f"The Landau pole needs a nonempty charged set, got `{particle_set.label}`")
    _, terms = _log_mass_ratios(particle_set)
    total_weight = sum(weight for weight, _ in terms)
    return (1.5 * math.pi * consts.alpha_inverse_exp
            + sum(weight * log_ratio for weight, log_ratio in terms)) / total_weight


def _format_from_log10(log10_value: float, digits: int = 4) -> str:
    exponent = math.floor(log10_value)
    mantissa = 10 ** (log10_value - exponent)
    # Rounding can carry the mantissa to 10
    if round(mantissa, digits - 1) >= 10:
        mantissa, exponent = mantissa / 10, exponent + 1
    return f"{mantissa:.{digits - 1}f}e{exponent:+d}"


def landau_pole(particle_set: ParticleSet,
                consts: PhysicalConstants,
                xtol: float = DEFAULT_LANDAU_XTOL,
                max_bracket_doublings: int = DEFAULT_MAX_BRACKET_DOUBLINGS) -> LandauPoleResult:
    """
    Solves alpha^-1(0) = (1/3 pi) sum_i deg_i (q_i/e)^2 ln(Lambda^2 / (m_i c_rel)^2) for Lambda with a bracketing
    root finder in log space.

    Raises:
        DomainError: for an empty (or uncharged) set
    """
    if not len(particle_set) or charge_sum(particle_set) <= 0:
        raise DomainError(f"The Landau pole needs a nonempty charged set, got `{particle_set.label}`")

    reference = particle_set.lightest()
    target = consts.alpha_inverse_exp

    def residual(log_lambda: float) -> float:
        return alpha_inverse_leading_log(log_lambda, particle_set, consts) - target

    # The left side is increasing in L and at most 0 at L = 0 (m_ref is the lightest mass)
    low, high = 0., 1.
    for _ in range(max_bracket_doublings):
        if residual(high) > 0:
            break
        low, high = high, 2 * high
    else:
        raise NumericalError(f"No bracket found for the Landau pole below L = {high}")

    log_lambda = brentq(residual, low, high, xtol=xtol)
    logger.info("Landau pole of `%s`: ln(Lambda / m_%s c) = %.12g",
                particle_set.label, reference.name, log_lambda)

    # Lambda c [J] = m_ref c^2 e^L, converted to GeV
    log10_lambda_gev = (math.log10(reference.mass * consts.c_rel ** 2 / (1e9 * consts.elementary_charge))
                        + log_lambda / math.log(10))
    return LandauPoleResult(log_lambda=log_lambda,
                            reference_particle=reference.name,
                            log10_lambda_gev=log10_lambda_gev,
                            lambda_gev=_format_from_log10(log10_lambda_gev),
                            residual=residual(log_lambda))


def zeldovich_alpha_inverse(nu_types: int, log_lambda_over_mc: float) -> float:
    """(1/3 pi) nu ln(Lambda^2 / (m c_rel)^2) for nu unit-charge species of equal mass m."""
    if isinstance(nu_types, bool) or not isinstance(nu_types, int) or nu_types < 1:
        raise DomainError(f"The number of species must be a positive integer, got {nu_types!r}")
    return nu_types * 2 * log_lambda_over_mc / (3 * math.pi)


def planck_log_lambda(mass: float, consts: PhysicalConstants) -> float:
    """ln(Lambda / (m c_rel)) with Lambda the Planck momentum."""
    if not mass > 0:
        raise DomainError(f"Mass must be positive, got {mass}")
    return math.log(planck_momentum(consts) / (mass * consts.c_rel))
