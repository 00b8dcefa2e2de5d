"""
Module providing the strict parsing of quantities written with a unit suffix (`100GeV/c`, `1um3`)
and of sweep grids (`start:stop:points,log|lin`).

Numbers are read with `float` on an ASCII pattern, never through the locale.
"""
import math
import re
from enum import StrEnum
from typing import Callable

import numpy as np
from pydantic import BaseModel, Field, PositiveInt

from qed_vacuum.components.constants import PhysicalConstants
from qed_vacuum.components.errors import QuantityParseError

_QUANTITY_PATTERN = re.compile(r"(?P<number>[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)\s*(?P<unit>\S*)")

# Multiples of eV
_EV_PREFIXES = {"eV": 1., "keV": 1e3, "MeV": 1e6, "GeV": 1e9, "TeV": 1e12}

# Volume suffix -> m^3
VOLUME_UNITS = {
    "m3": 1.,
    "cm3": 1e-6,
    "mm3": 1e-9,
    "um3": 1e-18,
    "nm3": 1e-27,
}


class GridSpacing(StrEnum):
    LOG = "log"
    LIN = "lin"


class SweepGrid(BaseModel, frozen=True):
    start: float = Field(description="First grid value, SI")
    stop: float = Field(description="Last grid value, SI")
    points: PositiveInt = Field(description="Number of grid values")
    spacing: GridSpacing = Field(description="Logarithmic or linear spacing")

    def values(self) -> np.ndarray:
        if self.points == 1:
            return np.array([self.start])
        if self.spacing == GridSpacing.LOG:
            return np.geomspace(self.start, self.stop, self.points)
        return np.linspace(self.start, self.stop, self.points)


def _split(text: str) -> tuple[float, str]:
    match = _QUANTITY_PATTERN.fullmatch(text.strip())
    if match is None:
        raise QuantityParseError(f"Cannot read `{text}` as a number followed by a unit")
    value = float(match.group("number"))
    if not math.isfinite(value):
        raise QuantityParseError(f"`{text}` is not a finite number")
    return value, match.group("unit")


def parse_plain(text: str) -> float:
    """A number without unit."""
    value, unit = _split(text)
    if unit:
        raise QuantityParseError(f"`{text}` must not carry a unit")
    return value


def parse_wavenumber(text: str, consts: PhysicalConstants) -> float:
    """
    Momentum transfer magnitude |k| [1/m] from `5e16/m`, `5e16 1/m`, or an energy-equivalent momentum
    `100GeV/c` (the `/c` may be omitted, `0GeV`).
    """
    value, unit = _split(text)
    if unit in ("/m", "1/m"):
        k = value
    else:
        prefix = unit.removesuffix("/c")
        if prefix not in _EV_PREFIXES:
            raise QuantityParseError(f"Unknown momentum unit `{unit}` in `{text}` "
                                     f"(expected 1/m or one of {sorted(_EV_PREFIXES)} with /c)")
        momentum = value * _EV_PREFIXES[prefix] * consts.elementary_charge / consts.c_rel
        k = momentum / consts.hbar
    if not math.isfinite(k):
        raise QuantityParseError(f"`{text}` overflows as a wavenumber")
    if k < 0:
        raise QuantityParseError(f"`{text}`: give the magnitude of a spacelike momentum transfer")
    return k


def parse_volume(text: str) -> float:
    """Volume [m^3] from `1um3`, `1e-18m3`..."""
    value, unit = _split(text)
    if unit not in VOLUME_UNITS:
        raise QuantityParseError(f"Unknown volume unit `{unit}` in `{text}` (expected one of {list(VOLUME_UNITS)})")
    volume = value * VOLUME_UNITS[unit]
    if not math.isfinite(volume):
        raise QuantityParseError(f"`{text}` overflows as a volume")
    return volume


def parse_sweep(text: str, parse_value: Callable[[str], float] = parse_plain) -> SweepGrid:
    """
    Parses `start:stop:points,log|lin`, start and stop being read by `parse_value`.
    """
    bounds, sep, spacing = text.partition(",")
    parts = bounds.split(":")
    if not sep or len(parts) != 3:
        raise QuantityParseError(f"Sweep `{text}` must read `start:stop:points,log|lin`")
    try:
        spacing = GridSpacing(spacing.strip())
    except ValueError as e:
        raise QuantityParseError(f"Sweep spacing must be `log` or `lin`, got `{spacing}`") from e
    start, stop = parse_value(parts[0]), parse_value(parts[1])
    points = parse_plain(parts[2])
    if not points.is_integer() or points < 1:
        raise QuantityParseError(f"Sweep needs a positive integer number of points, got `{parts[2]}`")
    if spacing == GridSpacing.LOG and not (start > 0 and stop > 0):
        raise QuantityParseError(f"Logarithmic sweep `{text}` needs positive bounds")
    if not (math.isfinite(start) and math.isfinite(stop)):
        raise QuantityParseError(f"Sweep `{text}` has non-finite bounds")
    return SweepGrid(start=start, stop=stop, points=int(points), spacing=spacing)
