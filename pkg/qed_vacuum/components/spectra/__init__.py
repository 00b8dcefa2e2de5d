"""
Module providing the cavity radiation laws
"""
from .blackbody import (SpectralLaw, SpectralSample, bose_factor, mode_density, zero_point_density, rayleigh_jeans,
                        planck_first, planck_second, spectral_density, stefan_boltzmann_energy_density,
                        spectral_integral, PLANCK_PEAK_X)
