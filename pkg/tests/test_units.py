import math

import numpy as np
import pytest

from qed_vacuum.components.constants import (QuantityKind, UnitSystem, to_natural, to_si, convert, compton_length,
                                             momentum_to_wavenumber, wavenumber_to_momentum, planck_momentum)
from qed_vacuum.components.data_provider import load_constants
from qed_vacuum.components.errors import DomainError, ConstantsSchemaError, QuantityParseError
from qed_vacuum.components.quantities import (GridSpacing, parse_wavenumber, parse_volume, parse_sweep, parse_plain)
from qed_vacuum.config import ResourcesConfig

ELECTRON_MASS = 9.1093837015e-31


@pytest.fixture(scope="module")
def consts():
    return load_constants(ResourcesConfig().constants_path)


# ============================================================================
# Unit conversions
# ============================================================================

def test_electron_mass_in_ev(consts):
    """Test that the electron rest energy is 0.511 MeV."""
    assert to_natural(ELECTRON_MASS, QuantityKind.MASS, consts) == pytest.approx(510998.95, rel=1e-7)


def test_compton_length_of_the_electron(consts):
    """Test hbar / (m c) for the electron."""
    assert compton_length(ELECTRON_MASS, consts) == pytest.approx(3.8615926796e-13, rel=1e-9)


def test_compton_length_is_inverse_mass_in_natural_units(consts):
    """Test that hbar / (m c) is 1 / m once both are expressed in eV units."""
    length = to_natural(compton_length(ELECTRON_MASS, consts), QuantityKind.LENGTH, consts)
    mass = to_natural(ELECTRON_MASS, QuantityKind.MASS, consts)
    assert length * mass == pytest.approx(1., rel=1e-12)


@pytest.mark.parametrize("kind", list(QuantityKind))
@pytest.mark.parametrize("value", [1e-30, 1., 3.7e18])
def test_natural_units_round_trip(consts, kind, value):
    """Test that SI to natural and back is lossless for every kind."""
    assert to_si(to_natural(value, kind, consts), kind, consts) == pytest.approx(value, rel=1e-12)


def test_convert_to_si_is_identity(consts):
    """Test that SI presentation leaves values unchanged."""
    assert convert(1.5, QuantityKind.FIELD, UnitSystem.SI, consts) == 1.5
    assert convert(1.5, QuantityKind.ENERGY, "natural-eV", consts) == pytest.approx(1.5 / consts.elementary_charge)


@pytest.mark.parametrize("mass", [0., -1e-30])
def test_compton_length_rejects_nonpositive_mass(consts, mass):
    """Test that the Compton length needs a positive mass."""
    with pytest.raises(DomainError):
        compton_length(mass, consts)


def test_wavenumber_round_trip(consts):
    """Test the p = hbar k conversions."""
    p = 5.344e-17  # 100 GeV/c
    assert wavenumber_to_momentum(momentum_to_wavenumber(p, consts), consts) == pytest.approx(p, rel=1e-15)


def test_planck_momentum(consts):
    """Test that the Planck momentum is 1.22e19 GeV/c."""
    p_planck = planck_momentum(consts)
    assert to_natural(p_planck, QuantityKind.MOMENTUM, consts) == pytest.approx(1.22089e28, rel=1e-4)


def test_planck_momentum_needs_gravitational_constant(consts):
    """Test that the Planck momentum needs G in the fixture."""
    with pytest.raises(ConstantsSchemaError, match="gravitational_constant"):
        planck_momentum(consts.model_copy(update={"gravitational_constant": None}))


# ============================================================================
# Quantity parsing
# ============================================================================

def test_parse_momentum_in_gev(consts):
    """Test that 100GeV/c is converted to |k| = p / hbar."""
    expected = 100e9 * consts.elementary_charge / consts.c_rel / consts.hbar
    assert parse_wavenumber("100GeV/c", consts) == pytest.approx(expected, rel=1e-15)
    assert parse_wavenumber("0.1TeV/c", consts) == pytest.approx(expected, rel=1e-15)
    assert parse_wavenumber("1e5MeV/c", consts) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("text, expected", [
    ("5e16/m", 5e16),
    ("5e16 1/m", 5e16),
    ("0GeV", 0.),
    ("0GeV/c", 0.),
    (".5/m", 0.5),
])
def test_parse_wavenumber(consts, text, expected):
    """Test the accepted spellings of a wavenumber."""
    assert parse_wavenumber(text, consts) == expected


@pytest.mark.parametrize("text", ["100", "100 GeV/s", "1,5GeV/c", "GeV/c", "-1/m", "1e/m"])
def test_parse_wavenumber_is_strict(consts, text):
    """Test that missing units, unknown units and negative magnitudes are rejected."""
    with pytest.raises(QuantityParseError):
        parse_wavenumber(text, consts)


@pytest.mark.parametrize("text, expected", [
    ("1um3", 1e-18),
    ("1e-18m3", 1e-18),
    ("2.5cm3", 2.5e-6),
])
def test_parse_volume(text, expected):
    """Test the accepted volume suffixes."""
    assert parse_volume(text) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("text", ["1", "1um^3", "1 liter"])
def test_parse_volume_is_strict(text):
    """Test that unknown volume suffixes are rejected."""
    with pytest.raises(QuantityParseError):
        parse_volume(text)


@pytest.mark.parametrize("text", ["1e400/m", "1e300TeV/c"])
def test_parse_wavenumber_rejects_overflow(consts, text):
    """Test that a momentum beyond the float range is an input error, not an infinite wavenumber."""
    with pytest.raises(QuantityParseError, match="finite|overflows"):
        parse_wavenumber(text, consts)


def test_parse_rejects_overflow():
    """Test that volumes and plain numbers beyond the float range are input errors."""
    with pytest.raises(QuantityParseError):
        parse_volume("1e400m3")
    with pytest.raises(QuantityParseError):
        parse_plain("-1e400")


def test_parse_plain_rejects_units():
    """Test that plain numbers carry no unit."""
    assert parse_plain("1e14") == 1e14
    with pytest.raises(QuantityParseError):
        parse_plain("1e14Hz")


def test_parse_log_sweep():
    """Test a logarithmic grid over three decades."""
    grid = parse_sweep("1e12:1e15:4,log")

    assert grid.spacing == GridSpacing.LOG
    np.testing.assert_allclose(grid.values(), [1e12, 1e13, 1e14, 1e15], rtol=1e-12)


def test_parse_linear_sweep_with_units(consts):
    """Test that sweep bounds accept the unit suffixes of the quantity."""
    grid = parse_sweep("0GeV/c:100GeV/c:3,lin", lambda text: parse_wavenumber(text, consts))
    values = grid.values()

    assert len(values) == 3
    assert values[0] == 0.
    assert values[1] == pytest.approx(parse_wavenumber("50GeV/c", consts), rel=1e-12)


def test_single_point_sweep():
    """Test that a one-point grid is its start."""
    assert parse_sweep("3:7:1,lin").values().tolist() == [3.]


@pytest.mark.parametrize("text", [
    "1:2:3",  # no spacing
    "1:2,lin",  # no point count
    "1:2:3,cubic",  # unknown spacing
    "1:2:2.5,lin",  # fractional point count
    "1:2:0,lin",  # no points
    "0:10:3,log",  # log grid through zero
])
def test_invalid_sweeps(text):
    """Test the malformed sweep specifications."""
    with pytest.raises(QuantityParseError):
        parse_sweep(text)


def test_log_sweep_is_geometric():
    """Test the constant ratio of a logarithmic grid."""
    values = parse_sweep("1:1e6:7,log").values()
    ratios = values[1:] / values[:-1]
    np.testing.assert_allclose(ratios, 10., rtol=1e-12)
    assert math.isclose(values[-1], 1e6, rel_tol=1e-15)
