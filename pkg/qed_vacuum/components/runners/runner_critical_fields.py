"""
Module providing the strong-field runner.
"""
import logging

from qed_vacuum.components.database import Database
from qed_vacuum.components.fields import (FieldVariant, CriticalFieldResult, FocalVolumeEstimate, limiting_field,
                                          conventional_schwinger_field, focal_volume_relaxation,
                                          orders_below_critical)
from qed_vacuum.components.particles import ParticleSet
from qed_vacuum.components.runners.base_runner import BaseRunner
from qed_vacuum.config import NumericsConfig

logger = logging.getLogger(__name__)


class RunnerCriticalFields(BaseRunner):
    """
    This class is a wrapper around the fields module.
    """

    def __init__(self, config: NumericsConfig, database: Database):
        super().__init__(config=config, database=database)

    def schwinger(self,
                  particle_set: ParticleSet,
                  particle_name: str,
                  variant: FieldVariant) -> tuple[CriticalFieldResult, float]:
        """Limiting field of the variant and the conventional m^2 c^3 / (e hbar) for reference."""
        mass = particle_set.get(particle_name).mass
        result = limiting_field(mass, variant, self.database.constants)
        return result, conventional_schwinger_field(mass, self.database.constants)

    @staticmethod
    def orders_below(laser_intensity: float, field_result: CriticalFieldResult) -> float:
        return orders_below_critical(laser_intensity, field_result)

    def focal(self,
              particle_set: ParticleSet,
              particle_name: str,
              focal_volume: float,
              per_cell_probability: float) -> FocalVolumeEstimate:
        mass = particle_set.get(particle_name).mass
        return focal_volume_relaxation(focal_volume, per_cell_probability, mass, self.database.constants)
