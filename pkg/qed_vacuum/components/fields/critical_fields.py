"""
Module providing the limiting electric field of the oscillator vacuum and the focal-volume estimate.
"""
import logging
import math
from enum import StrEnum

from pydantic import BaseModel, Field

from qed_vacuum.components.constants import PhysicalConstants, compton_length
from qed_vacuum.components.errors import DomainError

logger = logging.getLogger(__name__)


class FieldVariant(StrEnum):
    MODEL = "model"
    SAUTER_BOHR = "sauter-bohr"


# E = factor * m^2 c_rel^3 / (e hbar)
FIELD_FACTOR = {
    FieldVariant.MODEL: 4.,
    FieldVariant.SAUTER_BOHR: 2.,
}


class CriticalFieldResult(BaseModel, frozen=True):
    field: float = Field(gt=0, description="Limiting electric field [V/m]")
    variant: FieldVariant = Field(description="Factor 4 (model) or factor 2 (Sauter-Bohr)")
    intensity_equiv: float = Field(description="Plane-wave intensity 1/2 eps0 c_rel E^2 [W/m^2]")


class FocalVolumeEstimate(BaseModel, frozen=True):
    focal_volume: float = Field(description="Laser focal volume [m^3]")
    cell_volume: float = Field(description="Compton cell (hbar / (m c_rel))^3 [m^3]")
    n_cells: float = Field(ge=0, description="Number of cells in the focal volume")
    per_cell_probability: float = Field(ge=0, le=1, description="Pair-creation probability of one cell")
    total_probability: float = Field(ge=0, le=1, description="1 - (1 - p)^n")


def _field_scale(m: float, consts: PhysicalConstants) -> float:
    if not m > 0:
        raise DomainError(f"Mass must be positive, got {m}")
    return m ** 2 * consts.c_rel ** 3 / (consts.elementary_charge * consts.hbar)


def intensity_for_field(E: float, consts: PhysicalConstants) -> float:
    """1/2 eps0 c_rel E^2 [W/m^2]."""
    if E < 0:
        raise DomainError(f"Field magnitude must be nonnegative, got {E}")
    return 0.5 * consts.epsilon0_exp * consts.c_rel * E ** 2


def limiting_field(m: float, variant: FieldVariant, consts: PhysicalConstants) -> CriticalFieldResult:
    """
    Field at which the work done over one reduced Compton wavelength reaches the pair gap 2 m c_rel^2,
    i.e. 4 m^2 c_rel^3 / (e hbar) in the model variant and half of it in the Sauter-Bohr variant.
    """
    variant = FieldVariant(variant)
    field = FIELD_FACTOR[variant] * _field_scale(m, consts)
    return CriticalFieldResult(field=field, variant=variant, intensity_equiv=intensity_for_field(field, consts))


def conventional_schwinger_field(m: float, consts: PhysicalConstants) -> float:
    """m^2 c_rel^3 / (e hbar), for reference only."""
    return _field_scale(m, consts)


def orders_below_critical(intensity: float, field_result: CriticalFieldResult) -> float:
    """Decades separating an achievable intensity from the critical one."""
    if not (intensity > 0 and math.isfinite(intensity)):
        raise DomainError(f"Intensity must be positive and finite, got {intensity}")
    return math.log10(field_result.intensity_equiv / intensity)


def focal_volume_relaxation(focal_volume: float,
                            per_cell_probability: float,
                            m: float,
                            consts: PhysicalConstants) -> FocalVolumeEstimate:
    """
    Probability that at least one of the n = focal_volume / (hbar / (m c_rel))^3 cells creates a pair,
    1 - (1 - p)^n evaluated as -expm1(n log1p(-p)).
    """
    p = per_cell_probability
    if not 0 <= p <= 1:
        raise DomainError(f"Per-cell probability must lie in [0, 1], got {p}")
    if not focal_volume > 0:
        raise DomainError(f"Focal volume must be positive, got {focal_volume}")

    cell_volume = compton_length(m, consts) ** 3
    n_cells = focal_volume / cell_volume
    if p == 1:
        total = 1.
    else:
        total = min(1., max(0., -math.expm1(n_cells * math.log1p(-p))))
    logger.debug("%.6e cells, p = %.3e, total = %.6e", n_cells, p, total)
    return FocalVolumeEstimate(focal_volume=focal_volume,
                               cell_volume=cell_volume,
                               n_cells=n_cells,
                               per_cell_probability=p,
                               total_probability=total)
