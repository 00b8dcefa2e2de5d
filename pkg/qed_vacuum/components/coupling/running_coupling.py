"""
Module providing the one-loop running of the inverse fine-structure constant.

The vacuum-polarization kernel is the Feynman-parameter integral

    I(z) = int_0^1 x(1-x) ln(1 + x(1-x) z) dx,    z = (hbar k / (m c_rel))^2

and every charged species i shifts the inverse coupling by prefactor * deg_i (q_i/e)^2 I(z_i).
"""
import logging
import math
from enum import StrEnum

from pydantic import BaseModel, Field

from qed_vacuum.components.constants import PhysicalConstants
from qed_vacuum.components.errors import ThresholdError, QuadratureError, DomainError
from qed_vacuum.components.particles import ParticleSet
from qed_vacuum.components.quadrature import adaptive_quad

logger = logging.getLogger(__name__)

# Below this value ln(1 + x(1-x)z) is undefined at x = 1/2
PAIR_THRESHOLD_Z = -4.0

DEFAULT_FEYNMAN_EPSABS = 1e-13
DEFAULT_FEYNMAN_EPSREL = 1e-12
DEFAULT_QUAD_LIMIT = 200


class RunningMode(StrEnum):
    CONSISTENT = "consistent"
    PAPER_LITERAL = "paper-literal"


# Multiplies deg (q/e)^2 I(z) in the shift of each species.
# 2/pi makes the large-z limit agree with the leading-log Landau expression, 1/(3 pi) is the printed factor.
MODE_PREFACTOR = {
    RunningMode.CONSISTENT: 2 / math.pi,
    RunningMode.PAPER_LITERAL: 1 / (3 * math.pi),
}


class MomentumScaleZ(BaseModel, frozen=True):
    """Dimensionless momentum scale of one species, positive for spacelike transfer."""
    particle: str = Field(description="Name of the species")
    z: float = Field(description="(hbar k / (m c_rel))^2")

    @classmethod
    def from_wavenumber(cls, k: float, mass: float, particle: str, consts: PhysicalConstants) -> "MomentumScaleZ":
        return cls(particle=particle, z=(consts.hbar * k / (mass * consts.c_rel)) ** 2)


class RunningResult(BaseModel, frozen=True):
    k: float | None = Field(description="Momentum transfer |k| [1/m], None when z was given per species")
    alpha_inverse: float = Field(description="Inverse coupling at the momentum scale")
    alpha_inverse_at_zero: float = Field(description="Inverse coupling at k = 0")
    per_species_z: dict[str, float] = Field(description="Momentum scale z of each species")
    per_species_shift: dict[str, float] = Field(description="Decrease of the inverse coupling per species")
    mode: RunningMode = Field(description="Prefactor convention")

    @property
    def alpha(self) -> float:
        return 1. / self.alpha_inverse

    @property
    def delta_alpha_over_alpha(self) -> float:
        """alpha(k) / alpha(0) - 1"""
        return self.alpha_inverse_at_zero / self.alpha_inverse - 1.


def _feynman_integrand(x: float, z: float) -> float:
    u = x * (1. - x)
    return u * math.log1p(u * z)


def feynman_integral(z: float,
                     epsabs: float = DEFAULT_FEYNMAN_EPSABS,
                     epsrel: float = DEFAULT_FEYNMAN_EPSREL,
                     limit: int = DEFAULT_QUAD_LIMIT) -> float:
    """
    Computes I(z) by adaptive quadrature on [0, 1/2], the integrand being symmetric about 1/2.

    Raises:
        ThresholdError: for z <= -4 (timelike above pair threshold)
        QuadratureError: if the quadrature does not converge
    """
    if not z > PAIR_THRESHOLD_Z:
        raise ThresholdError(f"z = {z} <= {PAIR_THRESHOLD_Z}: timelike above pair threshold; "
                             f"real-valued result undefined")
    if z == 0:
        return 0.

    # For large z the integrand changes behaviour where x z ~ 1
    points = [scale / z for scale in (1., 10., 100.)] if z > 2 else None
    result = adaptive_quad(lambda x: _feynman_integrand(x, z), 0., 0.5,
                           epsabs=epsabs / 2, epsrel=epsrel, limit=limit, points=points)
    if not result.converged:
        raise QuadratureError(f"I(z) did not converge for z = {z}: {result.message}",
                              value=2 * result.value, abserr=2 * result.abserr)
    return 2 * result.value


def alpha_inverse_at(particle_set: ParticleSet,
                     consts: PhysicalConstants,
                     k: float | None = None,
                     per_species_z: dict[str, float] | None = None,
                     mode: RunningMode = RunningMode.CONSISTENT,
                     epsabs: float = DEFAULT_FEYNMAN_EPSABS,
                     epsrel: float = DEFAULT_FEYNMAN_EPSREL,
                     limit: int = DEFAULT_QUAD_LIMIT) -> RunningResult:
    """
    Inverse coupling at momentum transfer |k| [1/m], or at explicit per-species z values.

    Args:
        particle_set: charged species screening the charge, an empty set leaves alpha^-1(0) unchanged
        consts: physical constants
        k: momentum transfer magnitude, exclusive with `per_species_z`
        per_species_z: z for each species name of the set
        mode: prefactor convention, see `MODE_PREFACTOR`

    Returns:
        a `RunningResult` where alpha_inverse = alpha_inverse_at_zero - sum of the shifts
    """
    if (k is None) == (per_species_z is None):
        raise DomainError("Give exactly one of the momentum transfer k or the per-species z values")
    mode = RunningMode(mode)
    if mode == RunningMode.PAPER_LITERAL:
        logger.warning("Paper-literal prefactor 1/(3 pi): the large-z limit is 1/6 of the leading log")

    if per_species_z is None:
        zs = {particle.name: MomentumScaleZ.from_wavenumber(k, particle.mass, particle.name, consts).z
              for particle in particle_set}
    else:
        unknown = set(per_species_z) - set(particle_set.names)
        missing = set(particle_set.names) - set(per_species_z)
        if unknown or missing:
            raise DomainError(f"Per-species z must name exactly the set members "
                              f"(unknown: {sorted(unknown)}, missing: {sorted(missing)})")
        zs = {name: float(per_species_z[name]) for name in particle_set.names}

    prefactor = MODE_PREFACTOR[mode]
    shifts = {}
    for particle in particle_set:
        z = zs[particle.name]
        shifts[particle.name] = prefactor * particle.charge_weight * feynman_integral(z, epsabs, epsrel, limit)
        logger.debug("%s: z = %.6e, shift = %.12g", particle.name, z, shifts[particle.name])

    alpha_inverse_at_zero = consts.alpha_inverse_exp
    return RunningResult(k=k,
                         alpha_inverse=alpha_inverse_at_zero - sum(shifts.values()),
                         alpha_inverse_at_zero=alpha_inverse_at_zero,
                         per_species_z=zs,
                         per_species_shift=shifts,
                         mode=mode)
