"""
Module providing the running-coupling runner.
"""
import logging
from functools import partial
from typing import Sequence

from qed_vacuum.components.coupling import (RunningMode, RunningResult, LandauPoleResult, alpha_inverse_at,
                                            landau_pole, landau_pole_closed_form, zeldovich_alpha_inverse,
                                            planck_log_lambda)
from qed_vacuum.components.database import Database
from qed_vacuum.components.particles import ParticleSet
from qed_vacuum.components.runners.base_runner import BaseRunner
from qed_vacuum.config import NumericsConfig

logger = logging.getLogger(__name__)


class RunnerRunningCoupling(BaseRunner):
    """
    This class is a wrapper around the coupling module.
    """

    def __init__(self, config: NumericsConfig, database: Database):
        super().__init__(config=config, database=database)

    def evaluate(self,
                 ks: Sequence[float],
                 particle_set: ParticleSet,
                 mode: RunningMode = RunningMode.CONSISTENT) -> list[RunningResult]:
        logger.info("Running coupling of `%s` at %i momentum transfers (%s)", particle_set.label, len(ks), mode)
        at_k = partial(self._alpha_inverse_at, particle_set=particle_set, mode=mode)
        return self.ordered_map(at_k, ks, num_workers=self.config.num_workers)

    def _alpha_inverse_at(self, k: float, particle_set: ParticleSet, mode: RunningMode) -> RunningResult:
        return alpha_inverse_at(particle_set,
                                self.database.constants,
                                k=k,
                                mode=mode,
                                epsabs=self.config.feynman_epsabs,
                                epsrel=self.config.feynman_epsrel,
                                limit=self.config.quad_limit)

    def landau(self, particle_set: ParticleSet) -> tuple[LandauPoleResult, float]:
        """Root-finder result and the closed-form cross-check."""
        result = landau_pole(particle_set,
                             self.database.constants,
                             xtol=self.config.landau_xtol,
                             max_bracket_doublings=self.config.landau_max_bracket_doublings)
        return result, landau_pole_closed_form(particle_set, self.database.constants)

    def zeldovich(self,
                  nu_types: int,
                  log_lambda: float | None = None,
                  planck_particle: str | None = None,
                  particle_set: ParticleSet | None = None) -> tuple[float, float]:
        """
        Inverse coupling for `nu_types` unit-charge species, with either an explicit ln(Lambda / (m c))
        or the Planck momentum and the mass of `planck_particle`.

        Returns:
            the log cutoff used and the inverse coupling
        """
        if log_lambda is None:
            particle = (particle_set or self.database.particle_set()).get(planck_particle or "electron")
            log_lambda = planck_log_lambda(particle.mass, self.database.constants)
            logger.info("Planck momentum cutoff for %s: ln(Lambda / m c) = %.6f", particle.name, log_lambda)
        return log_lambda, zeldovich_alpha_inverse(nu_types, log_lambda)
