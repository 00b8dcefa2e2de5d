"""
Provides helper function to load the physical constants fixture
"""
import logging
from pathlib import Path

from pydantic import ValidationError

from qed_vacuum.components.constants import PhysicalConstants, DEFAULT_CONSTANTS_RTOL
from qed_vacuum.components.errors import ConstantsSchemaError, ConstantsIntegrityError

logger = logging.getLogger(__name__)

REQUIRED_CONSTANTS = ("elementary_charge", "hbar", "planck_h", "c_rel",
                      "boltzmann_k", "epsilon0_exp", "alpha_inverse_exp")
OPTIONAL_CONSTANTS = ("gravitational_constant",)


def _parse_key_values(text: str, source: Path | str) -> dict[str, float]:
    values: dict[str, float] = {}
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, value = line.partition("=")
        name, value = name.strip(), value.strip()
        if not sep or not name or not value:
            raise ConstantsSchemaError(f"{source}:{line_number}: expected `name = value`, got `{raw_line}`")
        if name not in REQUIRED_CONSTANTS + OPTIONAL_CONSTANTS:
            raise ConstantsSchemaError(f"{source}:{line_number}: unknown constant `{name}`")
        if name in values:
            raise ConstantsSchemaError(f"{source}:{line_number}: constant `{name}` defined twice")
        try:
            values[name] = float(value)
        except ValueError as e:
            raise ConstantsSchemaError(f"{source}:{line_number}: `{value}` is not a number") from e
    return values


def load_constants(path: Path | str, rtol: float = DEFAULT_CONSTANTS_RTOL) -> PhysicalConstants:
    """
    Loads the constants fixture and checks its internal consistency.

    Args:
        path: UTF-8 text file, one `name = value` per line, SI values
        rtol: relative tolerance of the alpha / planck_h identities

    Returns:
        the immutable `PhysicalConstants`
    """
    logger.info("Loading physical constants from %s", path)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConstantsSchemaError(f"Cannot read constants fixture {path}") from e

    values = _parse_key_values(text, path)
    missing = [name for name in REQUIRED_CONSTANTS if name not in values]
    if missing:
        raise ConstantsSchemaError(f"{path}: missing constants {missing}")

    try:
        constants = PhysicalConstants.model_validate(values, context={"rtol": rtol})
    except ValidationError as e:
        raise ConstantsIntegrityError(f"{path}: constants fail validation: {e}") from e

    logger.info("Loaded %i constants (alpha^-1 = %s)", len(values), constants.alpha_inverse_exp)
    return constants
