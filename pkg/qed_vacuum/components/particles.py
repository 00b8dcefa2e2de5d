"""
Module providing the charged-particle registry types and the charge-weighted sum.
"""
from enum import StrEnum
from fractions import Fraction

from pydantic import BaseModel, Field, PositiveFloat, PositiveInt, field_validator, model_validator

from qed_vacuum.components.errors import DomainError


# Charges in units of e are small rationals (thirds for quarks)
CHARGE_DENOMINATOR_LIMIT = 36


def exact_charge(charge_ratio: float) -> Fraction:
    """Rational charge ratio, snapping floats such as 0.666... back to 2/3."""
    fraction = Fraction(charge_ratio)
    snapped = fraction.limit_denominator(CHARGE_DENOMINATOR_LIMIT)
    return snapped if abs(float(snapped) - charge_ratio) <= 1e-12 * abs(charge_ratio) else fraction


class ParticleKind(StrEnum):
    LEPTON = "lepton"
    QUARK = "quark"
    BOSON = "boson"


class Particle(BaseModel, frozen=True):
    """A charged elementary particle type."""

    name: str = Field(min_length=1, description="Unique name within its set")
    charge_ratio: float = Field(description="Signed charge in units of e (q/e)")
    mass: PositiveFloat = Field(description="Mass [kg]")
    degeneracy: PositiveInt = Field(default=1, description="Color multiplicity, 3 for quarks")
    kind: ParticleKind = Field(description="Lepton, quark or boson")

    @field_validator("charge_ratio", mode="before")
    @classmethod
    def parse_rational(cls, value):
        # Tables write quark charges as "2/3" or "-1/3"
        if isinstance(value, str):
            try:
                return float(Fraction(value.strip()))
            except (ValueError, ZeroDivisionError) as e:
                raise ValueError(f"Cannot read charge ratio `{value}`") from e
        return value

    @field_validator("charge_ratio", mode="after")
    @classmethod
    def check_charged(cls, value: float) -> float:
        if value == 0:
            raise ValueError("Only charged particles belong in the registry (charge_ratio is 0)")
        return value

    @property
    def charge_weight(self) -> float:
        """degeneracy * (q/e)^2"""
        return float(self.degeneracy * exact_charge(self.charge_ratio) ** 2)


class ParticleSet(BaseModel, frozen=True):
    """An ordered set of particle types, names are unique."""

    particles: tuple[Particle, ...] = Field(default=(), description="Particles, in file order")
    label: str = Field(default="custom", description="Name of the set, e.g. SM-with-W")

    @model_validator(mode="after")
    def check_unique_names(self):
        seen = set()
        for particle in self.particles:
            if particle.name in seen:
                raise ValueError(f"Duplicate particle name `{particle.name}` in set `{self.label}`")
            seen.add(particle.name)
        return self

    def __iter__(self):
        return iter(self.particles)

    def __len__(self):
        return len(self.particles)

    @property
    def names(self) -> list[str]:
        return [particle.name for particle in self.particles]

    def get(self, name: str) -> Particle:
        for particle in self.particles:
            if particle.name == name:
                return particle
        raise DomainError(f"No particle `{name}` in set `{self.label}`. Available: {self.names}")

    def lightest(self) -> Particle:
        if not self.particles:
            raise DomainError(f"Particle set `{self.label}` is empty")
        return min(self.particles, key=lambda particle: particle.mass)

    def union(self, other: "ParticleSet", label: str | None = None) -> "ParticleSet":
        """Disjoint union, raises if a name is present in both sets."""
        return ParticleSet(particles=self.particles + other.particles,
                           label=label or f"{self.label}+{other.label}")


def charge_sum(particle_set: ParticleSet) -> float:
    """
    Sum of degeneracy * (q/e)^2 over the set.

    The accumulation is exact rational arithmetic, so the Standard Model sums are exactly 8 and 9.
    """
    return float(sum((particle.degeneracy * exact_charge(particle.charge_ratio) ** 2
                      for particle in particle_set),
                     Fraction(0)))
