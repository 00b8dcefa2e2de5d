"""
Module providing runners for the different calculations.
"""
from .runner_running_coupling import RunnerRunningCoupling
from .runner_vacuum_model import RunnerVacuumModel
from .runner_critical_fields import RunnerCriticalFields
from .runner_blackbody import RunnerBlackbody
from .result_processing import OutputEnvelope
