"""
Module responsible for loading all fixtures needed by the runners and keeping them in memory
"""
import logging
from pathlib import Path

from qed_vacuum.components.constants import PhysicalConstants, DEFAULT_CONSTANTS_RTOL
from qed_vacuum.components.data_provider import load_constants, load_particles
from qed_vacuum.components.errors import DomainError
from qed_vacuum.components.particles import ParticleSet
from qed_vacuum.config import ResourcesConfig

logger = logging.getLogger(__name__)


class Database:
    """
    A class that loads the constants fixture and the particle tables the application works with.
    `constants_path` and `particles_path` override the bundled fixtures.
    """
    def __init__(self,
                 config: ResourcesConfig | None = None,
                 constants_path: Path | str | None = None,
                 particles_path: Path | str | None = None,
                 rtol: float = DEFAULT_CONSTANTS_RTOL):
        self.config = config or ResourcesConfig()
        self._constants_path = Path(constants_path) if constants_path else self.config.constants_path
        self._particles_path = Path(particles_path) if particles_path else None
        self._rtol = rtol
        self._load_all_data()

    @property
    def constants_path(self) -> Path:
        return Path(self._constants_path)

    @property
    def particles_path(self) -> Path | None:
        return self._particles_path

    def _load_all_data(self):
        self.constants: PhysicalConstants = load_constants(self._constants_path, rtol=self._rtol)

        self.particle_sets: dict[str, ParticleSet] = {
            label: load_particles(path, label=label)
            for label, path in self.config.particle_sets.items()
        }
        logger.info("Loaded %i bundled particle sets", len(self.particle_sets))

        self.custom_particle_set: ParticleSet | None = None
        if self._particles_path is not None:
            self.custom_particle_set = load_particles(self._particles_path)

        logger.info("All data loaded")

    def particle_set(self, label: str | None = None) -> ParticleSet:
        """
        Resolve the particle set to use: an explicit label wins, then a custom table, then the default set.
        """
        if label is None and self.custom_particle_set is not None:
            return self.custom_particle_set
        label = label or self.config.default_particle_set
        if label in self.particle_sets:
            return self.particle_sets[label]
        if self.custom_particle_set is not None and label == self.custom_particle_set.label:
            return self.custom_particle_set
        raise DomainError(f"Unknown particle set `{label}`. Available: {sorted(self.particle_sets)}")
