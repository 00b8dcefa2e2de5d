import math

import mpmath
import pytest

from qed_vacuum.components.database import Database
from qed_vacuum.components.errors import DomainError
from qed_vacuum.components.fields import (FieldVariant, limiting_field, conventional_schwinger_field,
                                          intensity_for_field, orders_below_critical, focal_volume_relaxation)

ONE_CUBIC_MICRON = 1e-18


@pytest.fixture(scope="module")
def database():
    return Database()


@pytest.fixture(scope="module")
def consts(database):
    return database.constants


@pytest.fixture(scope="module")
def electron_mass(database):
    return database.particle_set().get("electron").mass


@pytest.fixture(scope="module")
def muon_mass(database):
    return database.particle_set().get("muon").mass


# ============================================================================
# Limiting field
# ============================================================================

def test_model_field_of_the_electron(consts, electron_mass):
    """Test 4 m^2 c^3 / (e hbar) against a 50-digit evaluation."""
    with mpmath.workdps(50):
        expected = (4 * mpmath.mpf(electron_mass) ** 2 * mpmath.mpf(consts.c_rel) ** 3
                    / (mpmath.mpf(consts.elementary_charge) * mpmath.mpf(consts.hbar)))

    result = limiting_field(electron_mass, FieldVariant.MODEL, consts)

    assert result.field == pytest.approx(float(expected), rel=1e-14)
    assert result.field == pytest.approx(5.292e18, rel=1e-3)
    assert result.variant == FieldVariant.MODEL


def test_sauter_bohr_field_is_half(consts, electron_mass):
    """Test that the factor-2 variant gives half the model field."""
    model = limiting_field(electron_mass, FieldVariant.MODEL, consts).field
    sauter_bohr = limiting_field(electron_mass, FieldVariant.SAUTER_BOHR, consts).field
    assert sauter_bohr == model / 2


def test_conventional_field_is_a_quarter(consts, electron_mass):
    """Test that m^2 c^3 / (e hbar) is a quarter of the model field."""
    assert (conventional_schwinger_field(electron_mass, consts)
            == pytest.approx(limiting_field(electron_mass, "model", consts).field / 4, rel=1e-15))
    assert conventional_schwinger_field(electron_mass, consts) == pytest.approx(1.323e18, rel=1e-3)


def test_field_scales_with_mass_squared(consts, electron_mass, muon_mass):
    """Test that the limiting field scales as m^2."""
    electron = limiting_field(electron_mass, FieldVariant.MODEL, consts).field
    muon = limiting_field(muon_mass, FieldVariant.MODEL, consts).field
    assert muon / electron == pytest.approx((muon_mass / electron_mass) ** 2, rel=1e-12)


@pytest.mark.parametrize("mass", [0., -9.1e-31])
def test_field_rejects_nonpositive_mass(consts, mass):
    """Test that the field needs a positive mass."""
    with pytest.raises(DomainError):
        limiting_field(mass, FieldVariant.MODEL, consts)


# ============================================================================
# Intensity
# ============================================================================

def test_equivalent_intensity(consts, electron_mass):
    """Test that the model field corresponds to about 3.7e34 W/m^2."""
    result = limiting_field(electron_mass, FieldVariant.MODEL, consts)

    assert result.intensity_equiv == pytest.approx(3.72e34, rel=1e-2)
    assert result.intensity_equiv == pytest.approx(intensity_for_field(result.field, consts), rel=1e-15)


def test_intensity_is_quadratic(consts):
    """Test that the equivalent intensity grows as E^2."""
    assert intensity_for_field(0., consts) == 0.
    assert intensity_for_field(2e12, consts) == pytest.approx(4 * intensity_for_field(1e12, consts), rel=1e-15)


def test_intensity_rejects_negative_field(consts):
    """Test that a negative field has no intensity."""
    with pytest.raises(DomainError):
        intensity_for_field(-1., consts)


def test_orders_below_critical(consts, electron_mass):
    """Test the decades separating a 1e27 W/m^2 laser from the critical intensity."""
    result = limiting_field(electron_mass, FieldVariant.MODEL, consts)

    assert orders_below_critical(1e27, result) == pytest.approx(math.log10(result.intensity_equiv) - 27,
                                                                rel=1e-12)
    assert orders_below_critical(result.intensity_equiv, result) == pytest.approx(0., abs=1e-12)
    with pytest.raises(DomainError):
        orders_below_critical(0., result)
    with pytest.raises(DomainError):
        orders_below_critical(math.inf, result)


# ============================================================================
# Focal-volume relaxation
# ============================================================================

def test_focal_volume_of_one_cubic_micron(consts, electron_mass):
    """Test the number of Compton cells in 1 um^3 and the total probability for p = 1e-20."""
    estimate = focal_volume_relaxation(ONE_CUBIC_MICRON, 1e-20, electron_mass, consts)

    with mpmath.workdps(50):
        n_cells = mpmath.mpf(ONE_CUBIC_MICRON) / mpmath.mpf(estimate.cell_volume)
        expected = 1 - (1 - mpmath.mpf(1e-20)) ** n_cells

    assert estimate.n_cells == pytest.approx(1.737e19, rel=1e-3)
    assert estimate.total_probability == pytest.approx(float(expected), rel=1e-10)
    assert estimate.total_probability == pytest.approx(0.159, abs=1e-3)


@pytest.mark.parametrize("p, expected", [(0., 0.), (1., 1.)])
def test_focal_volume_limits(consts, electron_mass, p, expected):
    """Test the certain and impossible per-cell probabilities."""
    assert focal_volume_relaxation(ONE_CUBIC_MICRON, p, electron_mass, consts).total_probability == expected


def test_tiny_probability_is_not_lost(consts, electron_mass):
    """Test that p far below the float epsilon still gives n p."""
    estimate = focal_volume_relaxation(ONE_CUBIC_MICRON, 1e-40, electron_mass, consts)
    assert estimate.total_probability == pytest.approx(estimate.n_cells * 1e-40, rel=1e-12)


def test_total_probability_is_monotone(consts, electron_mass):
    """Test that the total probability grows with p."""
    ps = [10. ** exponent for exponent in range(-30, 0)]
    totals = [focal_volume_relaxation(ONE_CUBIC_MICRON, p, electron_mass, consts).total_probability for p in ps]
    assert all(b >= a for a, b in zip(totals, totals[1:]))
    assert all(0 <= total <= 1 for total in totals)


@pytest.mark.parametrize("p", [-0.1, 1.5, math.nan])
def test_invalid_probability(consts, electron_mass, p):
    """Test that p outside [0, 1] is rejected."""
    with pytest.raises(DomainError):
        focal_volume_relaxation(ONE_CUBIC_MICRON, p, electron_mass, consts)


@pytest.mark.parametrize("focal_volume", [0., -1e-18])
def test_invalid_focal_volume(consts, electron_mass, focal_volume):
    """Test that the focal volume must be positive."""
    with pytest.raises(DomainError):
        focal_volume_relaxation(focal_volume, 0.5, electron_mass, consts)
