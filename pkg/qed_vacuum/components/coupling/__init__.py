"""
Module providing the running of the QED coupling and its Landau pole
"""
from .running_coupling import (RunningMode, RunningResult, MomentumScaleZ, feynman_integral, alpha_inverse_at,
                               PAIR_THRESHOLD_Z)
from .landau_pole import (LandauPoleResult, landau_pole, landau_pole_closed_form, alpha_inverse_leading_log,
                          zeldovich_alpha_inverse, planck_log_lambda)
