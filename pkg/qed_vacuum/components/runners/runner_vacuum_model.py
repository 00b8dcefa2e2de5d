"""
Module providing the vacuum-model runner.
"""
import logging
from decimal import Decimal

from qed_vacuum.components.database import Database
from qed_vacuum.components.particles import ParticleSet
from qed_vacuum.components.runners.base_runner import BaseRunner
from qed_vacuum.components.vacuum import (VolumeOption, VacuumModelResult, ChargeSumEstimate, evaluate_vacuum_model,
                                          invert_charge_sum, display_precision_charge_sum, hydrogen_oscillator_ratio)
from qed_vacuum.config import ReportingConfig

logger = logging.getLogger(__name__)


class RunnerVacuumModel(BaseRunner):
    """
    This class is a wrapper around the vacuum module.
    """

    def __init__(self, config: ReportingConfig, database: Database):
        super().__init__(config=config, database=database)

    def evaluate(self, particle_set: ParticleSet, option: VolumeOption) -> VacuumModelResult:
        logger.info("Vacuum model on `%s` with %s", particle_set.label, option)
        return evaluate_vacuum_model(particle_set, option, self.database.constants)

    def sum_charges(self, alpha_inverse: float | None = None) -> tuple[ChargeSumEstimate, tuple[Decimal, Decimal]]:
        """
        Charge sum implied by `alpha_inverse` (the fixture value by default), at full and at display precision.
        """
        if alpha_inverse is None:
            alpha_inverse = self.database.constants.alpha_inverse_exp
        options = [VolumeOption.from_number(number) for number in self.config.charge_sum_options]
        estimate = invert_charge_sum(alpha_inverse, options)
        return estimate, display_precision_charge_sum(estimate, decimals=self.config.display_precision)

    def hydrogen(self, particle_set: ParticleSet, particle_name: str = "electron") -> float:
        return hydrogen_oscillator_ratio(particle_set.get(particle_name).mass, self.database.constants)
