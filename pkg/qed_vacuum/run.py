"""
This module provides the command line interface of the package.

Exit codes: 0 on success, 2 for invalid arguments or inputs, 3 for numerical failures
(pair threshold, divergent volume option, nonconvergent quadrature).
"""
import logging
import logging.config
import sys
from functools import partial
from importlib.metadata import version, PackageNotFoundError
from typing import Sequence

import orjson
from pydantic import ValidationError
from pydantic_settings import SettingsError

from qed_vacuum.components.errors import InputValidationError, NumericalError, DomainError
from qed_vacuum.components.quantities import parse_wavenumber, parse_sweep, parse_volume, parse_plain
from qed_vacuum.components.runners import OutputEnvelope
from qed_vacuum.components.vacuum import VolumeOption
from qed_vacuum.config import (DEFAULT_LOGGING_CONFIG, RunCLIConfig, CommonCLIOptions, RunningCLIConfig,
                               LandauCLIConfig, ZeldovichCLIConfig, VacuumCLIConfig, SumChargesCLIConfig,
                               HydrogenCLIConfig, SchwingerCLIConfig, FocalCLIConfig, BlackbodyCLIConfig,
                               ParticlesCLIConfig)
from qed_vacuum.pipeline import VacuumPipeline

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_NUMERICAL_ERROR = 3

SUBCOMMAND_FIELDS = ("running", "landau", "zeldovich", "vacuum", "sum_charges", "hydrogen",
                     "schwinger", "focal", "blackbody", "particles")

# Single-letter fields are exposed by argparse as `-k`, `-p` and `-T`, the long spellings are accepted too
LONG_SINGLE_LETTER_FLAGS = {"--k": "-k", "--p": "-p", "--T": "-T"}


def _normalize_flags(argv: Sequence[str]) -> list[str]:
    normalized = []
    for arg in argv:
        flag, separator, value = arg.partition("=")
        normalized.append(LONG_SINGLE_LETTER_FLAGS.get(flag, flag) + separator + value)
    return normalized


def _version() -> str:
    try:
        return version("qed_vacuum_model")
    except PackageNotFoundError:
        return "0+unknown"


def _configure_logging(cli_args: RunCLIConfig):
    if cli_args.logging_config:
        with cli_args.logging_config.open() as f:
            json_config = orjson.loads(f.read())
            logging.config.dictConfig(json_config)
    else:
        logging.config.dictConfig(DEFAULT_LOGGING_CONFIG)
        logger.info("Default logging configuration used")


def _selected_subcommand(cli_args: RunCLIConfig) -> CommonCLIOptions | None:
    for name in SUBCOMMAND_FIELDS:
        options = getattr(cli_args, name, None)
        if options is not None:
            return options
    return None


def _execute(pipeline: VacuumPipeline, options: CommonCLIOptions) -> OutputEnvelope:
    """Translates the parsed options of one subcommand into SI inputs and calls the pipeline."""
    set_label = options.particle_set
    match options:
        case RunningCLIConfig():
            if (options.k is None) == (options.sweep is None):
                raise DomainError("`running` needs exactly one of --k or --sweep")
            read_k = partial(parse_wavenumber, consts=pipeline.database.constants)
            ks = ([read_k(options.k)] if options.k is not None
                  else parse_sweep(options.sweep, read_k).values().tolist())
            return pipeline.running(ks, mode=options.mode, set_label=set_label)

        case LandauCLIConfig():
            return pipeline.landau(mode=options.mode, set_label=set_label)

        case ZeldovichCLIConfig():
            if (options.log_lambda is None) == (not options.planck_momentum):
                raise DomainError("`zeldovich` needs exactly one of --log-lambda or --planck-momentum")
            return pipeline.zeldovich(options.nu_types, log_lambda=options.log_lambda,
                                      particle_name=options.particle, set_label=set_label)

        case VacuumCLIConfig():
            return pipeline.vacuum(VolumeOption.from_number(options.option), show=options.show,
                                   set_label=set_label)

        case SumChargesCLIConfig():
            return pipeline.sum_charges(options.alpha_inverse)

        case HydrogenCLIConfig():
            return pipeline.hydrogen(options.particle, set_label=set_label)

        case SchwingerCLIConfig():
            return pipeline.schwinger(options.particle, variant=options.variant, intensity=options.intensity,
                                      laser_intensity=options.laser_intensity, set_label=set_label)

        case FocalCLIConfig():
            return pipeline.focal(parse_volume(options.volume), options.p, particle_name=options.particle,
                                  set_label=set_label)

        case BlackbodyCLIConfig():
            if options.integrate:
                if options.nu_max is None:
                    raise DomainError("`blackbody --integrate` needs --nu-max")
                return pipeline.blackbody(options.law, options.T, nu_max=options.nu_max)
            if (options.nu is None) == (options.sweep is None):
                raise DomainError("`blackbody` needs exactly one of --nu or --sweep (or --integrate)")
            nus = [options.nu] if options.nu is not None else parse_sweep(options.sweep, parse_plain).values().tolist()
            return pipeline.blackbody(options.law, options.T, nus=nus)

        case ParticlesCLIConfig():
            return pipeline.particles(units=options.units, set_label=set_label)

    raise DomainError(f"Unknown subcommand options {type(options).__name__}")


def run(argv: Sequence[str] | None = None, configure_logging: bool = False) -> int:
    """
    Parses `argv`, runs the selected subcommand and writes its output to stdout.

    Returns:
        the exit code
    """
    argv = _normalize_flags(sys.argv[1:] if argv is None else argv)

    # Parse CLI args, argparse exits with 2 on usage errors
    try:
        cli_args = RunCLIConfig(_cli_parse_args=argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR
    except (ValidationError, SettingsError) as e:
        print(f"qed_vacuum: error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    if configure_logging:
        _configure_logging(cli_args)

    options = _selected_subcommand(cli_args)
    if options is None:
        print(f"usage: qed_vacuum [-h] [--logging-config PATH] {{{','.join(SUBCOMMAND_FIELDS).replace('_', '-')}}} ...",
              file=sys.stderr)
        return EXIT_INPUT_ERROR

    try:
        pipeline = VacuumPipeline(constants_path=options.constants, particles_path=options.particles)
        envelope = _execute(pipeline, options)
    except InputValidationError as e:
        print(f"qed_vacuum: error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except NumericalError as e:
        print(f"qed_vacuum: numerical error: {e}", file=sys.stderr)
        return EXIT_NUMERICAL_ERROR

    if not options.no_banner:
        sys.stdout.write(f"# qed_vacuum {_version()}\n")
    sys.stdout.write(envelope.render(options.output_format))
    sys.stdout.flush()
    return EXIT_OK


def _cli():
    """
    Function called when the program is used in CLI.
    Not meant to be used in any other way.
    """
    sys.exit(run(configure_logging=True))


if __name__ == "__main__":
    _cli()
