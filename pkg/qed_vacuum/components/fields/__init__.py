"""
Module providing strong-field estimates
"""
from .critical_fields import (FieldVariant, CriticalFieldResult, FocalVolumeEstimate, limiting_field,
                              intensity_for_field, conventional_schwinger_field, orders_below_critical,
                              focal_volume_relaxation)
