from abc import ABC
from enum import StrEnum
from importlib import resources
from pathlib import Path
from typing import Any, Literal

from pydantic import field_validator, ValidationInfo, Field, AliasChoices, BaseModel, ConfigDict
from pydantic_settings import BaseSettings, SettingsConfigDict, CliImplicitFlag, CliSubCommand

import qed_vacuum
from qed_vacuum.components.constants import UnitSystem


class BaseSettingsQED(BaseSettings, ABC):
    # Set prefix
    model_config = SettingsConfigDict(env_prefix='qed_')


class ResourcesConfig(BaseSettingsQED):
    # Path to the subfolder where all bundled fixtures can be found
    # IMPORT: the prefix should be the FIRST field of this class (refer to the validation below)
    prefix_folder_path: Path = resources.files(qed_vacuum.__name__) / "resources"

    # Physical constants, one `name = value` per line (override with QED_CONSTANTS_PATH)
    constants_path: Path = "constants/codata_2018.txt"

    # Particle tables, one per counting convention
    particle_sets: dict[str, Path] = {
        "SM-fermions": "particles/sm_fermions.csv",
        "SM-with-W": "particles/sm_with_w.csv",
    }
    default_particle_set: str = "SM-with-W"

    # JSON schema of the CLI output envelope
    output_schema_path: Path = "schemas/output_envelope.schema.json"

    # Validator to dynamically add prefix to paths
    @field_validator("*", mode="after")
    @classmethod
    def prepend_prefix(cls, p, info: ValidationInfo):

        def process_field(parameter, info_dict):
            # Only process paths, ignore other types
            if not isinstance(parameter, Path):
                return parameter

            # Do not prepend prefix to the prefix itself
            if "prefix_folder_path" not in info_dict.data:
                return parameter

            # Absolute paths are kept as they are by the `/` operator
            return info_dict.data["prefix_folder_path"] / parameter

        if isinstance(p, dict):
            return {key: process_field(value, info) for key, value in p.items()}
        if isinstance(p, list):
            return [process_field(e, info) for e in p]
        return process_field(p, info)


class NumericsConfig(BaseSettingsQED):
    # Adaptive quadrature of the one-loop kernel I(z)
    feynman_epsabs: float = 1e-13
    feynman_epsrel: float = 1e-12
    quad_limit: int = 200

    # Spectral integrals are checked relative to their own scale
    spectral_epsrel: float = 1e-11

    # Below this value of h*nu/kT, x/(e^x - 1) is evaluated by its series
    small_argument_threshold: float = 1e-5

    # Landau pole root finding (ln of the pole in units of the lightest mass)
    landau_xtol: float = 1e-13
    landau_max_bracket_doublings: int = 64

    # Relative tolerance of the constants fixture identities
    constants_rtol: float = 1e-9

    # Sweeps are evaluated by this many threads, output order is always the grid order
    num_workers: int = 1


class ReportingConfig(BaseSettingsQED):
    # Display precision used to mimic printed values (decimals)
    display_precision: int = 1

    # Volume options entering the charge-sum inversion (the "most plausible" ones)
    charge_sum_options: list[int] = [4, 5]


# ############################################################################################
# Command line
# ############################################################################################

class OutputFormat(StrEnum):
    JSON = "json"
    CSV = "csv"
    TABLE = "table"


class CommonCLIOptions(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    constants: Path | None = Field(default=None,
                                   description="Constants fixture overriding the bundled one")
    particles: Path | None = Field(default=None,
                                   description="Particle table overriding the bundled sets")
    particle_set: str | None = Field(default=None,
                                     description="Bundled particle set label (SM-fermions, SM-with-W)",
                                     alias="set")
    output_format: OutputFormat = Field(default=OutputFormat.TABLE,
                                        description="Output format",
                                        alias="format")
    no_banner: CliImplicitFlag[bool] = Field(default=False,
                                             description="Do not print the version header line")


class RunningCLIConfig(CommonCLIOptions):
    """One-loop running of the inverse coupling."""
    k: str | None = Field(default=None, description="Momentum transfer, e.g. `100GeV/c` or `5e16/m`")
    sweep: str | None = Field(default=None, description="Grid `start:stop:points,log|lin`")
    mode: Literal["consistent", "paper-literal"] = Field(default="consistent",
                                                        description="Prefactor convention of the running")


class LandauCLIConfig(CommonCLIOptions):
    """Landau pole of the leading-log running."""
    mode: Literal["consistent", "paper-literal"] = Field(default="consistent",
                                                        description="Echoed only, the pole uses the leading log")


class ZeldovichCLIConfig(CommonCLIOptions):
    """Inverse coupling from a number of unit-charge species and a cutoff."""
    nu_types: int = Field(default=1, description="Number of unit-charge species")
    log_lambda: float | None = Field(default=None, allow_inf_nan=False, description="ln(Lambda / (m c))")
    planck_momentum: CliImplicitFlag[bool] = Field(default=False,
                                                   description="Use the Planck momentum as cutoff")
    particle: str = Field(default="electron", description="Species fixing the mass m")


class VacuumCLIConfig(CommonCLIOptions):
    """Harmonic-oscillator model of the vacuum permittivity and permeability."""
    option: int = Field(default=4, ge=1, le=5, description="Volume-per-pair option 1..5")
    show: Literal["eps0", "mu0", "c", "alpha", "all"] = Field(default="all", description="Quantity to show")


class SumChargesCLIConfig(CommonCLIOptions):
    """Sum of squared charges implied by a measured coupling."""
    alpha_inverse: float | None = Field(default=None, allow_inf_nan=False,
                                         description="Inverse coupling, default from the fixture")


class HydrogenCLIConfig(CommonCLIOptions):
    """Harmonic model applied to hydrogen, compared with the Bohr radius."""
    particle: str = Field(default="electron", description="Species providing the electron mass")


class SchwingerCLIConfig(CommonCLIOptions):
    """Limiting electric field of the harmonic model."""
    particle: str = Field(default="electron", description="Species name from the particle table")
    variant: Literal["model", "sauter-bohr"] = Field(default="model", description="Factor 4 or factor 2")
    intensity: CliImplicitFlag[bool] = Field(default=False, description="Also report the equivalent intensity")
    laser_intensity: float | None = Field(default=None, allow_inf_nan=False,
                                          description="Achievable intensity [W/m^2] to compare with")


class FocalCLIConfig(CommonCLIOptions):
    """Pair creation summed over the Compton cells of a focal volume."""
    volume: str = Field(default="1um3", description="Focal volume, e.g. `1um3` or `1e-18m3`")
    p: float = Field(default=1e-20, allow_inf_nan=False, description="Pair-creation probability per cell")
    particle: str = Field(default="electron", description="Species fixing the cell size")


class BlackbodyCLIConfig(CommonCLIOptions):
    """Rayleigh-Jeans and Planck spectral energy densities."""
    law: Literal["rj", "planck1", "planck2"] = Field(default="planck1", description="Radiation law")
    T: float = Field(default=300.0, allow_inf_nan=False, description="Temperature [K]")
    nu: float | None = Field(default=None, allow_inf_nan=False, description="Frequency [Hz]")
    sweep: str | None = Field(default=None, description="Frequency grid `start:stop:points,log|lin` [Hz]")
    integrate: CliImplicitFlag[bool] = Field(default=False, description="Integrate up to --nu-max")
    nu_max: float | None = Field(default=None, allow_inf_nan=False, description="Upper cutoff frequency [Hz]")


class ParticlesCLIConfig(CommonCLIOptions):
    """List a particle set and its charge sum."""
    units: UnitSystem = Field(default=UnitSystem.SI, description="Mass units, SI [kg] or natural-eV [eV]")


class RunCLIConfig(BaseSettingsQED):
    model_config = SettingsConfigDict(env_prefix='qed_',
                                      cli_prog_name="qed_vacuum",
                                      cli_kebab_case=True,
                                      cli_exit_on_error=True)

    logging_config: Path | None = Field(default=None,
                                        description="Path to the logging configuration file",
                                        alias=AliasChoices('l', 'logging_config'))

    running: CliSubCommand[RunningCLIConfig]
    landau: CliSubCommand[LandauCLIConfig]
    zeldovich: CliSubCommand[ZeldovichCLIConfig]
    vacuum: CliSubCommand[VacuumCLIConfig]
    sum_charges: CliSubCommand[SumChargesCLIConfig] = Field(alias="sum-charges")
    hydrogen: CliSubCommand[HydrogenCLIConfig]
    schwinger: CliSubCommand[SchwingerCLIConfig]
    focal: CliSubCommand[FocalCLIConfig]
    blackbody: CliSubCommand[BlackbodyCLIConfig]
    particles: CliSubCommand[ParticlesCLIConfig]


# logging
DEFAULT_LOGGING_CONFIG: dict[str, Any] = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "standard": {
            "format": "%(asctime)s [%(levelname)8s] - %(name)s@%(funcName)s: %(message)s"
        }
    },
    "handlers": {
        "console": {
            "level": "DEBUG",
            "class": "logging.StreamHandler",
            "formatter": "standard",
            "stream": "ext://sys.stderr"
        },
        # uncomment the block below to log to a file and add 'file' in the list of handlers
        # "file": {
        #     "level": "INFO",
        #     "class": "logging.FileHandler",
        #     "formatter": "standard",
        #     "filename": "./qed_vacuum.log"
        # }
    },
    "loggers": {
        "": {
            "handlers": ["console"],
            "level": "WARNING"
        },
        "qed_vacuum": {
            "level": "INFO"
        }
    }
}
