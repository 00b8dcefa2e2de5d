"""
Module providing fixture loading functions
"""
from .constants_provider import load_constants
from .particle_provider import load_particles
