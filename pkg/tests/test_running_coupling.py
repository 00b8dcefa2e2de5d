import math

import numpy as np
import pytest

from qed_vacuum.components.coupling import (RunningMode, feynman_integral, alpha_inverse_at, MomentumScaleZ)
from qed_vacuum.components.database import Database
from qed_vacuum.components.errors import ThresholdError, DomainError
from qed_vacuum.components.particles import ParticleSet
from qed_vacuum.components.quantities import parse_wavenumber
from qed_vacuum.components.runners import RunnerRunningCoupling
from qed_vacuum.config import NumericsConfig


def brute_force_feynman_integral(z, panels=10_000_000, chunk=1_000_000):
    """Midpoint sum of x(1-x) ln(1 + x(1-x) z) on [0, 1], evaluated chunk by chunk."""
    h = 1. / panels
    total = 0.
    for start in range(0, panels, chunk):
        x = (np.arange(start, min(start + chunk, panels)) + 0.5) * h
        u = x * (1. - x)
        total += np.sum(u * np.log1p(u * z))
    return total * h


def large_z_limit(z):
    return (math.log(z) - 5 / 3) / 6


@pytest.fixture(scope="module")
def database():
    return Database()


@pytest.fixture(scope="module")
def electron_only(database):
    electron = database.particle_set("SM-with-W").get("electron")
    return ParticleSet(particles=(electron,), label="electron")


@pytest.fixture(scope="module")
def k_100_gev(database):
    return parse_wavenumber("100GeV/c", database.constants)


# ============================================================================
# Feynman-parameter integral
# ============================================================================

def test_feynman_integral_at_zero():
    """Test that the integral vanishes at zero momentum."""
    assert feynman_integral(0.) == 0.


@pytest.mark.parametrize("z", [1e-3, 1., 1e3, 1e8])
def test_feynman_integral_against_brute_force(z):
    """Test the adaptive quadrature against a 1e7-panel midpoint sum."""
    assert abs(feynman_integral(z) - brute_force_feynman_integral(z)) < 1e-8


def test_feynman_integral_small_z_series():
    """Test that I(z) = z / 30 for small z."""
    assert feynman_integral(1e-6) == pytest.approx(3.3333e-8, rel=1e-3)
    assert feynman_integral(1e-6) == pytest.approx(1e-6 / 30, rel=1e-5)


@pytest.mark.parametrize("z", [1e-4, 3e-4, 1e-3])
def test_feynman_integral_small_z_remainder(z):
    """Test that the remainder after z / 30 is of second order (-z^2 / 280)."""
    assert abs(feynman_integral(z) - z / 30) <= z ** 2 / 200


def test_feynman_integral_large_z():
    """Test the logarithmic growth at large z."""
    assert feynman_integral(1e8) == pytest.approx(2.7924, rel=1e-3)
    assert feynman_integral(1e12) == pytest.approx(large_z_limit(1e12), rel=1e-3)


def test_feynman_integral_is_increasing():
    """Test that the integral is positive and increasing in z."""
    zs = np.geomspace(1e-6, 1e14, 41)
    values = [feynman_integral(z) for z in zs]
    assert all(value > 0 for value in values)
    assert all(b > a for a, b in zip(values, values[1:]))


def test_feynman_integral_timelike_below_threshold():
    """Test that timelike z above -4 gives a finite negative value."""
    value = feynman_integral(-3.99)
    assert math.isfinite(value)
    assert value < feynman_integral(-1.) < 0


@pytest.mark.parametrize("z", [-4., -4.5, -100.])
def test_feynman_integral_threshold_error(z):
    """Test that timelike z at or below the pair threshold is a numerical error."""
    with pytest.raises(ThresholdError, match="pair threshold"):
        feynman_integral(z)


# ============================================================================
# Running of alpha
# ============================================================================

def test_zero_momentum_leaves_alpha_unchanged(database):
    """Test that alpha^-1(0) is returned without shift at k = 0."""
    result = alpha_inverse_at(database.particle_set(), database.constants, k=0.)

    assert result.alpha_inverse == database.constants.alpha_inverse_exp == 137.035999084
    assert all(shift == 0 for shift in result.per_species_shift.values())
    assert result.delta_alpha_over_alpha == 0.


def test_momentum_scale_of_the_electron(database, electron_only, k_100_gev):
    """Test that 100 GeV/c gives z = (100 GeV / 511 keV)^2 for the electron."""
    z = MomentumScaleZ.from_wavenumber(k_100_gev, electron_only.get("electron").mass, "electron",
                                       database.constants).z
    assert z == pytest.approx(3.83e10, rel=1e-3)


def test_electron_running_to_100_gev(database, electron_only, k_100_gev):
    """Test the electron shift against (2/pi)(1/6)(ln z - 5/3)."""
    result = alpha_inverse_at(electron_only, database.constants, k=k_100_gev)
    z = result.per_species_z["electron"]

    assert result.per_species_shift["electron"] == pytest.approx(2 / math.pi * large_z_limit(z), rel=1e-6)
    assert result.per_species_shift["electron"] == pytest.approx(2.41, abs=0.01)
    assert result.alpha_inverse == pytest.approx(134.6, abs=0.05)


def test_standard_model_running_is_a_few_percent(database, k_100_gev):
    """Test the relative change of the coupling at 100 GeV/c."""
    result = alpha_inverse_at(database.particle_set("SM-with-W"), database.constants, k=k_100_gev)
    assert 0.02 <= result.delta_alpha_over_alpha <= 0.10


def test_alpha_inverse_is_at_zero_minus_shifts(database, k_100_gev):
    """Test that the inverse coupling is the zero-momentum value minus every shift."""
    result = alpha_inverse_at(database.particle_set(), database.constants, k=k_100_gev)
    assert result.alpha_inverse == result.alpha_inverse_at_zero - sum(result.per_species_shift.values())
    assert result.alpha == 1 / result.alpha_inverse


def test_paper_literal_mode_is_one_sixth(database, k_100_gev):
    """Test that the printed prefactor gives 1/6 of the consistent shifts."""
    consistent = alpha_inverse_at(database.particle_set(), database.constants, k=k_100_gev)
    literal = alpha_inverse_at(database.particle_set(), database.constants, k=k_100_gev,
                               mode=RunningMode.PAPER_LITERAL)

    assert literal.mode == RunningMode.PAPER_LITERAL
    for name, shift in consistent.per_species_shift.items():
        assert literal.per_species_shift[name] == pytest.approx(shift / 6, rel=1e-14)


def test_alpha_decreases_with_momentum(database):
    """Test that the inverse coupling decreases along the momentum grid."""
    particle_set = database.particle_set()
    ks = np.geomspace(1e10, 1e20, 21)
    values = [alpha_inverse_at(particle_set, database.constants, k=k).alpha_inverse for k in ks]
    assert all(b < a for a, b in zip(values, values[1:]))


def test_shifts_are_additive_over_disjoint_sets(database, k_100_gev):
    """Test that the shifts of two disjoint sets add up."""
    fermions = database.particle_set("SM-fermions")
    w_only = ParticleSet(particles=(database.particle_set("SM-with-W").get("W"),), label="W")

    union = alpha_inverse_at(fermions.union(w_only), database.constants, k=k_100_gev)
    parts = [alpha_inverse_at(part, database.constants, k=k_100_gev) for part in (fermions, w_only)]

    assert union.per_species_shift == {**parts[0].per_species_shift, **parts[1].per_species_shift}


def test_empty_set_does_not_run(database, k_100_gev):
    """Test that an empty set keeps the zero-momentum coupling."""
    result = alpha_inverse_at(ParticleSet(label="empty"), database.constants, k=k_100_gev)
    assert result.alpha_inverse == database.constants.alpha_inverse_exp
    assert result.per_species_shift == {}


def test_per_species_z(database, electron_only):
    """Test that per-species z values bypass the momentum."""
    result = alpha_inverse_at(electron_only, database.constants, per_species_z={"electron": 1e8})

    assert result.k is None
    assert result.per_species_shift["electron"] == pytest.approx(2 / math.pi * feynman_integral(1e8), rel=1e-15)


def test_per_species_z_below_threshold(database, electron_only):
    """Test that a per-species z below the threshold is a numerical error."""
    with pytest.raises(ThresholdError):
        alpha_inverse_at(electron_only, database.constants, per_species_z={"electron": -5.})


@pytest.mark.parametrize("kwargs", [
    {},
    {"k": 1e16, "per_species_z": {"electron": 1.}},
    {"per_species_z": {"muon": 1.}},
])
def test_alpha_inverse_at_arguments(database, electron_only, kwargs):
    """Test that exactly one of k or a complete per-species z is required."""
    with pytest.raises(DomainError):
        alpha_inverse_at(electron_only, database.constants, **kwargs)


def test_sweep_is_independent_of_worker_count(database):
    """Test that threaded sweeps give bitwise the same results in grid order."""
    ks = list(np.geomspace(1e12, 1e19, 15))
    serial = RunnerRunningCoupling(NumericsConfig(num_workers=1), database).evaluate(ks, database.particle_set())
    threaded = RunnerRunningCoupling(NumericsConfig(num_workers=4), database).evaluate(ks, database.particle_set())

    assert [result.k for result in threaded] == ks
    assert [result.alpha_inverse for result in threaded] == [result.alpha_inverse for result in serial]
