"""
This module provides an interface to every calculation of the package, in SI units.
"""
import logging
from pathlib import Path
from typing import Sequence

from qed_vacuum.components.constants import UnitSystem, QuantityKind, convert
from qed_vacuum.components.coupling import RunningMode
from qed_vacuum.components.database import Database
from qed_vacuum.components.fields import FieldVariant
from qed_vacuum.components.particles import ParticleSet, charge_sum
from qed_vacuum.components.runners import (RunnerRunningCoupling, RunnerVacuumModel, RunnerCriticalFields,
                                           RunnerBlackbody, OutputEnvelope)
from qed_vacuum.components.spectra import SpectralLaw
from qed_vacuum.components.vacuum import VolumeOption
from qed_vacuum.config import ResourcesConfig, NumericsConfig, ReportingConfig

logger = logging.getLogger(__name__)

ALL_QUANTITIES = ("eps0", "mu0", "c", "alpha")
_VACUUM_COLUMNS = {
    "eps0": ("epsilon0_model",),
    "mu0": ("mu0_model",),
    "c": ("c_model",),
    "alpha": ("alpha_inverse_model",),
}


class VacuumPipeline:
    """
    Main class of the qed_vacuum package.
    It owns the configurations, the loaded fixtures and one runner per family of calculations,
    and returns every result wrapped in an `OutputEnvelope`.
    """

    def __init__(self,
                 resources_config: ResourcesConfig | None = None,
                 numerics_config: NumericsConfig | None = None,
                 reporting_config: ReportingConfig | None = None,
                 constants_path: Path | str | None = None,
                 particles_path: Path | str | None = None):
        # Save configs or fetch default values if no explicit config is given
        self._resources_config = resources_config or ResourcesConfig()
        self._numerics_config = numerics_config or NumericsConfig()
        self._reporting_config = reporting_config or ReportingConfig()

        # Create the database
        self._database = Database(config=self._resources_config,
                                  constants_path=constants_path,
                                  particles_path=particles_path,
                                  rtol=self._numerics_config.constants_rtol)

        # Create all runners
        self._coupling_runner = RunnerRunningCoupling(config=self._numerics_config, database=self._database)
        self._vacuum_runner = RunnerVacuumModel(config=self._reporting_config, database=self._database)
        self._fields_runner = RunnerCriticalFields(config=self._numerics_config, database=self._database)
        self._blackbody_runner = RunnerBlackbody(config=self._numerics_config, database=self._database)

    @property
    def database(self) -> Database:
        return self._database

    def _echo(self, particle_set: ParticleSet | None = None, **inputs) -> dict:
        echo = {"constants": str(self._database.constants_path)}
        if self._database.particles_path is not None:
            echo["particles"] = str(self._database.particles_path)
        if particle_set is not None:
            echo["set"] = particle_set.label
        echo.update(inputs)
        return echo

    def running(self,
                ks: Sequence[float],
                mode: RunningMode = RunningMode.CONSISTENT,
                set_label: str | None = None) -> OutputEnvelope:
        mode = RunningMode(mode)
        particle_set = self._database.particle_set(set_label)
        results = self._coupling_runner.evaluate(ks, particle_set, mode)

        rows = []
        for result in results:
            row = {"k": result.k,
                   "alpha_inverse": result.alpha_inverse,
                   "alpha": result.alpha,
                   "delta_alpha_over_alpha": result.delta_alpha_over_alpha}
            row.update({f"z_{name}": z for name, z in result.per_species_z.items()})
            row.update({f"shift_{name}": shift for name, shift in result.per_species_shift.items()})
            rows.append(row)

        warnings = []
        if mode == RunningMode.PAPER_LITERAL:
            warnings.append("paper-literal mode: prefactor 1/(3 pi) on the Feynman integral, "
                            "the large-momentum limit does not match the Landau pole expression")
        if not len(particle_set):
            warnings.append(f"particle set `{particle_set.label}` is empty, the coupling does not run")
        return OutputEnvelope(command="running",
                              inputs_echo=self._echo(particle_set, k=list(ks), mode=mode.value,
                                                     alpha_inverse_at_zero=self._database.constants.alpha_inverse_exp),
                              results=rows,
                              warnings=warnings)

    def landau(self, mode: RunningMode = RunningMode.CONSISTENT, set_label: str | None = None) -> OutputEnvelope:
        mode = RunningMode(mode)
        particle_set = self._database.particle_set(set_label)
        result, closed_form = self._coupling_runner.landau(particle_set)

        warnings = []
        if mode == RunningMode.PAPER_LITERAL:
            warnings.append("the Landau pole uses the leading-log expression in both modes")
        return OutputEnvelope(command="landau",
                              inputs_echo=self._echo(particle_set, mode=mode.value,
                                                     alpha_inverse_at_zero=self._database.constants.alpha_inverse_exp),
                              results=[{**result.model_dump(mode="json"), "log_lambda_closed_form": closed_form}],
                              warnings=warnings)

    def zeldovich(self,
                  nu_types: int,
                  log_lambda: float | None = None,
                  particle_name: str = "electron",
                  set_label: str | None = None) -> OutputEnvelope:
        particle_set = self._database.particle_set(set_label) if log_lambda is None else None
        used_log_lambda, alpha_inverse = self._coupling_runner.zeldovich(nu_types,
                                                                         log_lambda=log_lambda,
                                                                         planck_particle=particle_name,
                                                                         particle_set=particle_set)
        echo = self._echo(particle_set, nu_types=nu_types, log_lambda=log_lambda)
        if log_lambda is None:
            echo.update(cutoff="planck-momentum", particle=particle_name)
        return OutputEnvelope(command="zeldovich",
                              inputs_echo=echo,
                              results=[{"nu_types": nu_types,
                                        "log_lambda": used_log_lambda,
                                        "alpha_inverse": alpha_inverse}])

    def vacuum(self, option: VolumeOption, show: str = "all", set_label: str | None = None) -> OutputEnvelope:
        option = VolumeOption(option)
        particle_set = self._database.particle_set(set_label)
        result = self._vacuum_runner.evaluate(particle_set, option)

        row = {"option": option.value, "kappa": option.kappa, "set_label": result.set_label,
               "charge_sum": result.charge_sum}
        for quantity in (ALL_QUANTITIES if show == "all" else (show,)):
            row.update({column: getattr(result, column) for column in _VACUUM_COLUMNS[quantity]})

        warnings = []
        if option.number not in self._reporting_config.charge_sum_options:
            warnings.append(f"option {option.number} is not one of the plausible volume options "
                            f"{self._reporting_config.charge_sum_options}")
        return OutputEnvelope(command="vacuum",
                              inputs_echo=self._echo(particle_set, option=option.number, show=show),
                              results=[row],
                              warnings=warnings)

    def sum_charges(self, alpha_inverse: float | None = None) -> OutputEnvelope:
        estimate, (center, halfspread) = self._vacuum_runner.sum_charges(alpha_inverse)
        row = {"alpha_inverse": estimate.alpha_inverse}
        row.update({f"charge_sum_{option.value}": value for option, value in estimate.per_option.items()})
        row.update({"center": estimate.center,
                    "halfspread": estimate.halfspread,
                    "center_display": str(center),
                    "halfspread_display": str(halfspread),
                    "display": f"{center} ± {halfspread}"})
        return OutputEnvelope(command="sum-charges",
                              inputs_echo=self._echo(alpha_inverse=estimate.alpha_inverse,
                                                     options=[option.number for option in estimate.per_option]),
                              results=[row])

    def hydrogen(self, particle_name: str = "electron", set_label: str | None = None) -> OutputEnvelope:
        particle_set = self._database.particle_set(set_label)
        ratio = self._vacuum_runner.hydrogen(particle_set, particle_name)
        return OutputEnvelope(command="hydrogen",
                              inputs_echo=self._echo(particle_set, particle=particle_name),
                              results=[{"particle": particle_name,
                                        "ratio": ratio,
                                        "deviation": ratio - 1.}])

    def schwinger(self,
                  particle_name: str = "electron",
                  variant: FieldVariant = FieldVariant.MODEL,
                  intensity: bool = False,
                  laser_intensity: float | None = None,
                  set_label: str | None = None) -> OutputEnvelope:
        particle_set = self._database.particle_set(set_label)
        result, conventional = self._fields_runner.schwinger(particle_set, particle_name, variant)

        row = {"particle": particle_name,
               "variant": result.variant.value,
               "field": result.field,
               "conventional_field": conventional}
        if intensity or laser_intensity is not None:
            row["intensity_equiv"] = result.intensity_equiv
        if laser_intensity is not None:
            row["laser_intensity"] = laser_intensity
            row["orders_below"] = self._fields_runner.orders_below(laser_intensity, result)
        return OutputEnvelope(command="schwinger",
                              inputs_echo=self._echo(particle_set, particle=particle_name,
                                                     variant=result.variant.value, intensity=intensity,
                                                     laser_intensity=laser_intensity),
                              results=[row])

    def focal(self,
              focal_volume: float,
              per_cell_probability: float,
              particle_name: str = "electron",
              set_label: str | None = None) -> OutputEnvelope:
        particle_set = self._database.particle_set(set_label)
        estimate = self._fields_runner.focal(particle_set, particle_name, focal_volume, per_cell_probability)
        return OutputEnvelope(command="focal",
                              inputs_echo=self._echo(particle_set, particle=particle_name,
                                                     volume=focal_volume, p=per_cell_probability),
                              results=[{"particle": particle_name, **estimate.model_dump(mode="json")}])

    def blackbody(self,
                  law: SpectralLaw,
                  T: float,
                  nus: Sequence[float] | None = None,
                  nu_max: float | None = None) -> OutputEnvelope:
        law = SpectralLaw(law)
        warnings = []
        if nu_max is not None:
            integral = self._blackbody_runner.integrate(law, T, nu_max)
            row = {"law": law.value, "temperature": T, "nu_max": nu_max,
                   "energy_density": integral.value, "abserr": integral.abserr,
                   "stefan_boltzmann": self._blackbody_runner.stefan_boltzmann(T)}
            if law != SpectralLaw.PLANCK_FIRST:
                warnings.append(f"{law.value} diverges without cutoff, the result grows with nu_max")
            rows = [row]
        else:
            rows = [sample.model_dump(mode="json") for sample in self._blackbody_runner.densities(law, nus, T)]
        return OutputEnvelope(command="blackbody",
                              inputs_echo=self._echo(law=law.value, T=T,
                                                     nu=None if nus is None else list(nus), nu_max=nu_max),
                              results=rows,
                              warnings=warnings)

    def particles(self, units: UnitSystem = UnitSystem.SI, set_label: str | None = None) -> OutputEnvelope:
        units = UnitSystem(units)
        consts = self._database.constants
        particle_set = self._database.particle_set(set_label)
        total = charge_sum(particle_set)
        rows = [{**particle.model_dump(mode="json"),
                 "mass": convert(particle.mass, QuantityKind.MASS, units, consts),
                 "mass_unit": "kg" if units == UnitSystem.SI else "eV",
                 "weight": particle.charge_weight,
                 "charge_sum": total}
                for particle in particle_set]
        warnings = [] if len(particle_set) else [f"particle set `{particle_set.label}` is empty"]
        return OutputEnvelope(command="particles",
                              inputs_echo=self._echo(particle_set, units=units.value),
                              results=rows,
                              warnings=warnings)
