"""
Module providing the harmonic-oscillator model of the vacuum.

Each virtual pair is an oscillator of reduced mass m/2 and frequency w0 = 2 m c_rel^2 / hbar occupying
a volume V = kappa (hbar / (m c_rel))^3. Summing the induced dipoles per volume over all charged species
gives a permittivity and a permeability whose product is exactly 1 / c_rel^2, and an inverse coupling
2 pi N sum (q/e)^2 with N = 1 / kappa.
"""
import logging
import math
from decimal import Decimal, ROUND_HALF_UP
from enum import StrEnum
from typing import Iterable

from pydantic import BaseModel, Field

from qed_vacuum.components.constants import PhysicalConstants, compton_length
from qed_vacuum.components.errors import DomainError, DivergenceError, ZeroPermittivityError
from qed_vacuum.components.particles import ParticleSet, charge_sum

logger = logging.getLogger(__name__)


class VolumeOption(StrEnum):
    """Prescriptions for the volume taken by one virtual pair, V = kappa (hbar / (m c_rel))^3."""
    OPT1 = "opt1"  # cube of the reduced Compton wavelength
    OPT2 = "opt2"  # zero volume, the pairs overlap freely
    OPT3 = "opt3"  # relativistic momentum cutoff
    OPT4 = "opt4"  # equivalent rectangular distribution of the Gaussian ground state
    OPT5 = "opt5"  # variance of the Gaussian ground state

    @classmethod
    def from_number(cls, number: int) -> "VolumeOption":
        try:
            return cls(f"opt{int(number)}")
        except ValueError as e:
            raise DomainError(f"Volume option must be 1..5, got {number}") from e

    @property
    def number(self) -> int:
        return int(self.value[3:])

    @property
    def kappa(self) -> float:
        return VOLUME_KAPPA[self]

    @property
    def is_divergent(self) -> bool:
        return self.kappa == 0


VOLUME_KAPPA: dict[VolumeOption, float] = {
    VolumeOption.OPT1: 1.,
    VolumeOption.OPT2: 0.,
    VolumeOption.OPT3: 3 * math.pi ** 2 / 4,
    VolumeOption.OPT4: (math.pi / 4) ** 1.5,
    VolumeOption.OPT5: 2 ** -1.5,
}

DIVERGENT_OPTION_MESSAGE = ("Volume option 2 would assign zero volume to a single virtual pair: "
                            "the pair density and the model permittivity diverge")


class VacuumModelResult(BaseModel, frozen=True):
    epsilon0_model: float = Field(description="Model permittivity [F/m]")
    mu0_model: float = Field(description="Model permeability [H/m]")
    c_model: float = Field(description="1 / sqrt(epsilon0_model mu0_model) [m/s]")
    alpha_inverse_model: float = Field(description="Model inverse coupling at k = 0")
    option: VolumeOption = Field(description="Volume-per-pair prescription")
    set_label: str = Field(description="Particle set the model was evaluated on")
    charge_sum: float = Field(description="sum deg (q/e)^2 over the set")


class ChargeSumEstimate(BaseModel, frozen=True):
    alpha_inverse: float = Field(description="Inverse coupling that was inverted")
    per_option: dict[VolumeOption, float] = Field(description="Charge sum implied by each volume option")
    center: float = Field(description="Mean of the per-option values")
    halfspread: float = Field(description="Half the absolute difference of the per-option values")


def _check_finite(option: VolumeOption) -> VolumeOption:
    option = VolumeOption(option)
    if option.is_divergent:
        raise DivergenceError(DIVERGENT_OPTION_MESSAGE)
    return option


def pair_volume(option: VolumeOption, m: float, consts: PhysicalConstants) -> float:
    """kappa (hbar / (m c_rel))^3 [m^3], zero for option 2."""
    return VolumeOption(option).kappa * compton_length(m, consts) ** 3


def induced_polarizability(m: float, consts: PhysicalConstants) -> float:
    """
    Dipole per unit field e^2 / ((m/2) w0^2) = e^2 hbar^2 / (2 m^3 c_rel^4) of one pair [C m^2 / V].
    """
    if not m > 0:
        raise DomainError(f"Mass must be positive, got {m}")
    return consts.elementary_charge ** 2 * consts.hbar ** 2 / (2 * m ** 3 * consts.c_rel ** 4)


def _checked_charge_sum(particle_set: ParticleSet) -> float:
    total = charge_sum(particle_set)
    if total <= 0:
        raise ZeroPermittivityError(f"Particle set `{particle_set.label}` carries no charge, "
                                    f"the model permittivity vanishes")
    return total


def epsilon0_model(particle_set: ParticleSet, option: VolumeOption, consts: PhysicalConstants) -> float:
    """
    sum_i N_i d_i with N_i = 1 / V_i, which reduces to (e^2 / (2 hbar c_rel kappa)) sum deg (q/e)^2.
    """
    option = _check_finite(option)
    return (consts.elementary_charge ** 2 / (2 * consts.hbar * consts.c_rel * option.kappa)
            * _checked_charge_sum(particle_set))


def mu0_model(particle_set: ParticleSet, option: VolumeOption, consts: PhysicalConstants) -> float:
    """1 / mu0 = (e^2 c_rel / (2 hbar kappa)) sum deg (q/e)^2."""
    option = _check_finite(option)
    inverse = (consts.elementary_charge ** 2 * consts.c_rel / (2 * consts.hbar * option.kappa)
               * _checked_charge_sum(particle_set))
    return 1. / inverse


def alpha_inverse_model(particle_set: ParticleSet, option: VolumeOption, consts: PhysicalConstants) -> float:
    """2 pi N sum deg (q/e)^2 with N = 1 / kappa, 0 for a set without charge."""
    option = _check_finite(option)
    total = charge_sum(particle_set)
    if total == 0:
        logger.warning("Particle set `%s` carries no charge, the model inverse coupling is 0", particle_set.label)
    return 2 * math.pi * total / option.kappa


def evaluate_vacuum_model(particle_set: ParticleSet, option: VolumeOption,
                          consts: PhysicalConstants) -> VacuumModelResult:
    option = _check_finite(option)
    epsilon0 = epsilon0_model(particle_set, option, consts)
    mu0 = mu0_model(particle_set, option, consts)
    return VacuumModelResult(epsilon0_model=epsilon0,
                             mu0_model=mu0,
                             c_model=1. / math.sqrt(epsilon0 * mu0),
                             alpha_inverse_model=alpha_inverse_model(particle_set, option, consts),
                             option=option,
                             set_label=particle_set.label,
                             charge_sum=charge_sum(particle_set))


def invert_charge_sum(alpha_inverse: float,
                      options: Iterable[VolumeOption] = (VolumeOption.OPT4, VolumeOption.OPT5)) -> ChargeSumEstimate:
    """
    Charge sum alpha^-1 / (2 pi N) implied by each option, summarized as center +/- halfspread.
    """
    if not (alpha_inverse > 0 and math.isfinite(alpha_inverse)):
        raise DomainError(f"The inverse coupling must be positive and finite, got {alpha_inverse}")
    options = [_check_finite(option) for option in options]
    if not options:
        raise DomainError("At least one volume option is needed")

    # alpha^-1 / (2 pi / kappa)
    per_option = {option: alpha_inverse * option.kappa / (2 * math.pi) for option in options}
    values = list(per_option.values())
    return ChargeSumEstimate(alpha_inverse=alpha_inverse,
                             per_option=per_option,
                             center=(max(values) + min(values)) / 2,
                             halfspread=(max(values) - min(values)) / 2)


def _round_half_up(value: float | Decimal, decimals: int) -> Decimal:
    return Decimal(str(value)).quantize(Decimal(1).scaleb(-decimals), rounding=ROUND_HALF_UP)


def display_precision_charge_sum(estimate: ChargeSumEstimate, decimals: int = 1) -> tuple[Decimal, Decimal]:
    """
    Center and halfspread at display precision: the per-option values are rounded first,
    then combined and rounded again (15.2 and 7.7 give 11.5 +/- 3.8).
    """
    rounded = [_round_half_up(value, decimals) for value in estimate.per_option.values()]
    center = (max(rounded) + min(rounded)) / 2
    halfspread = (max(rounded) - min(rounded)) / 2
    return _round_half_up(center, decimals), _round_half_up(halfspread, decimals)


def hydrogen_oscillator_ratio(m_e: float, consts: PhysicalConstants) -> float:
    """
    Ground-state spread sqrt(hbar / (2 m w)) of an electron oscillator whose quantum hbar w equals the
    hydrogen 1s-2p gap (3/4 Rydberg), divided by the Bohr radius. The result is 2 / sqrt(3).
    """
    if not m_e > 0:
        raise DomainError(f"Mass must be positive, got {m_e}")
    e2_over_4pi_eps0 = consts.elementary_charge ** 2 / (4 * math.pi * consts.epsilon0_exp)
    bohr_radius = consts.hbar ** 2 / (m_e * e2_over_4pi_eps0)
    rydberg = e2_over_4pi_eps0 / (2 * bohr_radius)
    omega = 0.75 * rydberg / consts.hbar
    spread = math.sqrt(consts.hbar / (2 * m_e * omega))
    return spread / bohr_radius
