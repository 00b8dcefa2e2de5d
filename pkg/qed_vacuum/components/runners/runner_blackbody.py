"""
Module providing the cavity radiation runner.
"""
import logging
from typing import Sequence

import numpy as np

from qed_vacuum.components.database import Database
from qed_vacuum.components.quadrature import QuadratureResult
from qed_vacuum.components.runners.base_runner import BaseRunner
from qed_vacuum.components.spectra import (SpectralLaw, SpectralSample, spectral_density, spectral_integral,
                                           stefan_boltzmann_energy_density)
from qed_vacuum.config import NumericsConfig

logger = logging.getLogger(__name__)


class RunnerBlackbody(BaseRunner):
    """
    This class is a wrapper around the spectra module.
    """

    def __init__(self, config: NumericsConfig, database: Database):
        super().__init__(config=config, database=database)

    def densities(self, law: SpectralLaw, nus: Sequence[float], T: float) -> list[SpectralSample]:
        logger.info("Spectral density %s at %s K on %i frequencies", law, T, len(nus))
        # Vectorised over the grid, the order is the grid order
        densities = np.atleast_1d(spectral_density(law, np.asarray(nus, dtype=float), T, self.database.constants,
                                                   small_argument_threshold=self.config.small_argument_threshold))
        return [SpectralSample(frequency=float(nu), temperature=T, density=float(density))
                for nu, density in zip(nus, densities)]

    def integrate(self, law: SpectralLaw, T: float, nu_max: float) -> QuadratureResult:
        return spectral_integral(law, T, nu_max, self.database.constants,
                                 epsrel=self.config.spectral_epsrel,
                                 limit=self.config.quad_limit,
                                 small_argument_threshold=self.config.small_argument_threshold)

    def stefan_boltzmann(self, T: float) -> float:
        return stefan_boltzmann_energy_density(T, self.database.constants)
