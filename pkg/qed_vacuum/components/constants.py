"""
Module providing the physical constants and the unit conversions used by every other component.

All computations are done in SI. The natural-unit presentation (hbar = c_rel = 1, energies in eV)
is only a formatting concern and is reached through `to_natural` / `to_si`.
"""
import math
from enum import StrEnum

from pydantic import BaseModel, Field, PositiveFloat, ValidationInfo, model_validator

from qed_vacuum.components.errors import DomainError, ConstantsSchemaError

DEFAULT_CONSTANTS_RTOL = 1e-9


class PhysicalConstants(BaseModel, frozen=True):
    """SI constants, read-only once loaded."""

    elementary_charge: PositiveFloat = Field(description="Elementary charge e [C]")
    hbar: PositiveFloat = Field(description="Reduced Planck constant [J s]")
    planck_h: PositiveFloat = Field(description="Planck constant h [J s]")
    c_rel: PositiveFloat = Field(description="Limiting speed of relativity [m/s]")
    boltzmann_k: PositiveFloat = Field(description="Boltzmann constant [J/K]")
    epsilon0_exp: PositiveFloat = Field(description="Measured vacuum permittivity [F/m]")
    alpha_inverse_exp: PositiveFloat = Field(description="Measured inverse fine-structure constant")
    gravitational_constant: PositiveFloat | None = Field(default=None,
                                                         description="Newton constant G [m^3/(kg s^2)]")

    @property
    def alpha_inverse_from_identity(self) -> float:
        """4 pi eps0 hbar c / e^2 recomputed from the other fields."""
        return 4 * math.pi * self.epsilon0_exp * self.hbar * self.c_rel / self.elementary_charge ** 2

    @model_validator(mode="after")
    def check_identities(self, info: ValidationInfo):
        rtol = (info.context or {}).get("rtol", DEFAULT_CONSTANTS_RTOL)

        recomputed = self.alpha_inverse_from_identity
        if abs(recomputed - self.alpha_inverse_exp) > rtol * self.alpha_inverse_exp:
            raise ValueError(f"alpha_inverse_exp={self.alpha_inverse_exp} is inconsistent with "
                             f"4*pi*eps0*hbar*c/e^2={recomputed!r} (rtol={rtol})")

        if abs(self.planck_h - 2 * math.pi * self.hbar) > rtol * self.planck_h:
            raise ValueError(f"planck_h={self.planck_h} differs from 2*pi*hbar={2 * math.pi * self.hbar!r}")

        return self


class UnitSystem(StrEnum):
    SI = "SI"
    NATURAL_EV = "natural-eV"


class QuantityKind(StrEnum):
    MASS = "mass"
    ENERGY = "energy"
    MOMENTUM = "momentum"
    LENGTH = "length"
    FIELD = "field"


def _natural_factor(kind: QuantityKind, consts: PhysicalConstants) -> float:
    # SI value times this factor gives the natural-unit value
    e, hbar, c = consts.elementary_charge, consts.hbar, consts.c_rel
    match kind:
        case QuantityKind.MASS:
            return c ** 2 / e  # eV
        case QuantityKind.ENERGY:
            return 1. / e  # eV
        case QuantityKind.MOMENTUM:
            return c / e  # eV
        case QuantityKind.LENGTH:
            return e / (hbar * c)  # 1/eV
        case QuantityKind.FIELD:
            return hbar * c / e  # eE in eV^2
    raise ValueError(f"Unknown quantity kind {kind}")


def to_natural(value: float, kind: QuantityKind, consts: PhysicalConstants) -> float:
    return value * _natural_factor(QuantityKind(kind), consts)


def to_si(value: float, kind: QuantityKind, consts: PhysicalConstants) -> float:
    return value / _natural_factor(QuantityKind(kind), consts)


def convert(value: float, kind: QuantityKind, unit_system: UnitSystem, consts: PhysicalConstants) -> float:
    """Present an SI value in `unit_system`."""
    if UnitSystem(unit_system) == UnitSystem.SI:
        return value
    return to_natural(value, kind, consts)


def compton_length(m: float, consts: PhysicalConstants) -> float:
    """Reduced Compton wavelength hbar / (m c_rel) [m]."""
    if not m > 0:
        raise DomainError(f"Mass must be positive, got {m}")
    return consts.hbar / (m * consts.c_rel)


def momentum_to_wavenumber(p: float, consts: PhysicalConstants) -> float:
    """|k| = p / hbar for a momentum p [kg m/s]."""
    return p / consts.hbar


def wavenumber_to_momentum(k: float, consts: PhysicalConstants) -> float:
    return k * consts.hbar


def planck_momentum(consts: PhysicalConstants) -> float:
    """Lambda with Lambda^2 = hbar c_rel^3 / G [kg m/s]."""
    if consts.gravitational_constant is None:
        raise ConstantsSchemaError("The constants fixture has no `gravitational_constant`, "
                                   "the Planck momentum is unavailable")
    return math.sqrt(consts.hbar * consts.c_rel ** 3 / consts.gravitational_constant)
