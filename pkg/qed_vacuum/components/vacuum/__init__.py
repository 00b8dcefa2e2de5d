"""
Module providing the harmonic-oscillator vacuum model
"""
from .oscillator_model import (VolumeOption, VacuumModelResult, ChargeSumEstimate, VOLUME_KAPPA,
                               DIVERGENT_OPTION_MESSAGE, pair_volume, induced_polarizability, epsilon0_model,
                               mu0_model, alpha_inverse_model, evaluate_vacuum_model, invert_charge_sum,
                               display_precision_charge_sum, hydrogen_oscillator_ratio)
